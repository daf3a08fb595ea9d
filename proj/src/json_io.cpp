#include "upq/json_io.hpp"

namespace upq {

ojson rat_json(const Rational& r) { return r.str(); }

Rational rat_from_json(const ojson& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError("expected rational as \"a/b\" string or integer");
}

ojson ratvec_json(const RatVec& v) {
    ojson a = ojson::array();
    for (const Rational& r : v) a.push_back(rat_json(r));
    return a;
}

RatVec ratvec_from_json(const ojson& j) {
    if (!j.is_array()) throw ValidationError("expected array of rationals");
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

ojson weight_json(const KTypeWeight& mu) {
    ojson j;
    j["left"] = mu.left;
    j["right"] = mu.right;
    return j;
}

KTypeWeight weight_from_json(const ojson& j) {
    KTypeWeight mu;
    mu.left = j.at("left").get<std::vector<long long>>();
    mu.right = j.at("right").get<std::vector<long long>>();
    return mu;
}

ojson block_json(const Block& b) {
    ojson j;
    j["shape"] = shape_str(b.shape);
    j["r"] = b.r;
    j["s"] = b.s;
    j["gamma"] = rat_json(b.gamma);
    return j;
}

Block block_from_json(const ojson& j) {
    Block b;
    b.shape = shape_parse(j.at("shape").get<std::string>());
    b.r = j.at("r").get<int>();
    b.s = j.at("s").get<int>();
    b.gamma = rat_from_json(j.at("gamma"));
    return b;
}

ojson datum_json(const LambdaDatum& d) {
    ojson j;
    j["p"] = d.sig.p;
    j["q"] = d.sig.q;
    ojson blocks = ojson::array();
    for (const Block& b : d.blocks) blocks.push_back(block_json(b));
    j["blocks"] = std::move(blocks);
    return j;
}

LambdaDatum datum_from_json(const ojson& j) {
    LambdaDatum d;
    d.sig.p = j.at("p").get<int>();
    d.sig.q = j.at("q").get<int>();
    for (const auto& bj : j.at("blocks")) d.blocks.push_back(block_from_json(bj));
    return d;
}

ojson theta_json(const ThetaDatum& td) {
    ojson j = datum_json(td.datum);
    ojson nus = ojson::array();
    for (const RatVec& nu : td.nus) nus.push_back(ratvec_json(nu));
    j["nu"] = std::move(nus);
    return j;
}

ThetaDatum theta_from_json(const ojson& j) {
    ThetaDatum td;
    td.datum = datum_from_json(j);
    if (j.contains("nu")) {
        for (const auto& nj : j.at("nu")) td.nus.push_back(ratvec_from_json(nj));
    } else {
        for (const Block& b : td.datum.blocks) td.nus.push_back(RatVec(b.k(), Rational(0)));
    }
    return td;
}

namespace {

ojson certificate_json(const Certificate& c) {
    ojson j;
    j["kind"] = cert_kind_str(c.kind);
    j["level"] = level_str(c.level);
    ojson w = ojson::array();
    for (const KTypeWeight& mu : c.witnesses) w.push_back(weight_json(mu));
    j["witness_ktypes"] = std::move(w);
    if (c.blocks.first >= 0) j["blocks"] = {c.blocks.first, c.blocks.second};
    return j;
}

}  // namespace

ojson report_json(const ScreeningReport& rep) {
    ojson j;
    j["inf_char"] = ratvec_json(rep.inf_char.coords);
    j["hermitian_ok"] = rep.hermitian_ok;
    j["unitarily_small"] = rep.unitarily_small;
    j["fpp_applicable"] = rep.fpp_applicable;
    j["fpp_pass"] = rep.fpp_pass;
    j["max_gap"] = rat_json(rep.max_gap);
    j["hull_pass"] = rep.hull_pass;
    j["lambda_u_center"] = ratvec_json(rep.lambda_u_center);
    j["good_cuts"] = rep.good_cuts;
    ojson groups = ojson::array();
    for (const BlockRange& g : rep.fundamental.groups) groups.push_back({g.first, g.second});
    j["fundamental"] = std::move(groups);
    j["interlaced"] = rep.interlaced;
    ojson dv = ojson::array();
    for (const DiracViolation& d : rep.dirac_violations) {
        ojson e;
        e["mu"] = weight_json(d.mu);
        e["level"] = level_str(d.level);
        e["best_norm_sq"] = rat_json(d.best_norm_sq);
        dv.push_back(std::move(e));
    }
    j["dirac_violations"] = std::move(dv);
    ojson cs = ojson::array();
    for (const Certificate& c : rep.certificates) cs.push_back(certificate_json(c));
    j["certificates"] = std::move(cs);
    j["verdict"] = verdict_str(rep.verdict);
    j["notes"] = rep.notes;
    ojson inner = ojson::array();
    for (const ThetaDatum& td : rep.induced_inner) inner.push_back(theta_json(td));
    j["induced_inner"] = std::move(inner);
    return j;
}

ThetaDatum theta_from_mu(const Signature& sig, const KTypeWeight& mu,
                         const std::vector<RatVec>& nus) {
    LambdaAResult la = compute_lambda_a(mu, sig);
    LambdaDatum d = datum_from_lambda_a(la, mu, sig);

    ThetaDatum td;
    td.datum = d;
    td.nus.assign(d.blocks.size(), RatVec());
    std::vector<size_t> with_nu;
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        td.nus[i].assign(d.blocks[i].k(), Rational(0));
        if (d.blocks[i].k() >= 1) with_nu.push_back(i);
    }
    if (!nus.empty()) {
        if (nus.size() != with_nu.size()) {
            std::string sizes;
            for (const Block& b : d.blocks)
                sizes += "(" + std::to_string(b.r) + "," + std::to_string(b.s) + ") ";
            throw ValidationError("expected " + std::to_string(with_nu.size()) +
                                  " nu vectors for derived block sizes " + sizes + "but got " +
                                  std::to_string(nus.size()));
        }
        for (size_t k = 0; k < nus.size(); ++k) {
            if (int(nus[k].size()) != d.blocks[with_nu[k]].k())
                throw ValidationError("nu vector " + std::to_string(k) + " has length " +
                                      std::to_string(nus[k].size()) + ", block needs " +
                                      std::to_string(d.blocks[with_nu[k]].k()));
            td.nus[with_nu[k]] = nus[k];
        }
    }
    check_theta(td);
    return td;
}

ThetaDatum request_from_json(const ojson& j) {
    bool has_td = j.contains("theta_datum");
    bool has_mu = j.contains("mu");
    if (has_td == has_mu)
        throw ValidationError("request must contain exactly one of 'theta_datum' or 'mu'");
    if (has_td) return theta_from_json(j.at("theta_datum"));

    Signature sig{j.at("p").get<int>(), j.at("q").get<int>()};
    KTypeWeight mu = weight_from_json(j.at("mu"));
    std::vector<RatVec> nus;
    if (j.contains("nu"))
        for (const auto& nj : j.at("nu")) nus.push_back(ratvec_from_json(nj));
    return theta_from_mu(sig, mu, nus);
}

}  // namespace upq
