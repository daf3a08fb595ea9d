// Command line front end: screening requests in, reports out, all JSON.
// Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 validation error,
// 4 guard exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "upq/diagram.hpp"
#include "upq/json_io.hpp"
#include "upq/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;

void error_json(const std::string& kind, const std::string& detail) {
    upq::ojson e;
    e["error"] = kind;
    e["detail"] = detail;
    std::cerr << e.dump() << "\n";
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Distinguishes JSON syntax problems (parse) from semantic ones (validation).
int run_analyze_one(const std::string& text, bool diagram) {
    upq::ojson j;
    try {
        j = upq::ojson::parse(text);
    } catch (const std::exception& e) {
        error_json("parse", e.what());
        return kExitParse;
    }
    try {
        upq::ThetaDatum td = upq::request_from_json(j);
        upq::ScreeningReport rep = upq::screen(td);
        if (diagram) std::cout << upq::render_diagram(td);
        std::cout << upq::report_json(rep).dump(2) << "\n";
        return kExitOk;
    } catch (const upq::GuardError& e) {
        error_json("guard", e.what());
        return kExitGuard;
    } catch (const std::exception& e) {
        error_json("validation", e.what());
        return kExitValidation;
    }
}

int run_analyze_batch(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    std::vector<std::string> out(lines.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
        upq::ojson reply;
        try {
            upq::ojson j = upq::ojson::parse(lines[i]);
            reply = upq::report_json(upq::screen(upq::request_from_json(j)));
        } catch (const std::exception& e) {
            reply["error"] = "line " + std::to_string(i + 1) + ": " + e.what();
        }
        out[i] = reply.dump();
    }
    for (const std::string& s : out)
        if (!s.empty()) std::cout << s << "\n";
    return kExitOk;
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        out.push_back(std::stoll(tok, &pos));
        if (pos != tok.size()) throw std::runtime_error("bad integer '" + tok + "'");
    }
    return out;
}

upq::KTypeWeight parse_mu(const std::string& s) {
    size_t bar = s.find('|');
    if (bar == std::string::npos) throw std::runtime_error("mu must be 'a,b,...|c,d,...'");
    upq::KTypeWeight mu;
    std::string l = s.substr(0, bar), r = s.substr(bar + 1);
    if (!l.empty()) mu.left = parse_int_list(l);
    if (!r.empty()) mu.right = parse_int_list(r);
    return mu;
}

upq::RatVec parse_nu(const std::string& s) {
    upq::RatVec out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(upq::Rational::parse(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-stable combinatorics and unitarity screening for U(p,q)"};
    app.require_subcommand(1);

    // analyze
    std::string an_input;
    bool an_diagram = false, an_batch = false;
    auto* analyze = app.add_subcommand("analyze", "screen a request (JSON file or stdin)");
    analyze->add_option("input", an_input, "request file, '-' for stdin");
    analyze->add_flag("--diagram", an_diagram, "render the block diagram");
    analyze->add_flag("--batch", an_batch, "input is JSON lines, one request per line");

    // from-mu
    int fm_p = 0, fm_q = 0;
    std::string fm_mu;
    std::vector<std::string> fm_nus;
    bool fm_diagram = false;
    auto* from_mu = app.add_subcommand("from-mu", "derive the datum of a K-type and screen it");
    from_mu->add_option("-p", fm_p, "left size")->required();
    from_mu->add_option("-q", fm_q, "right size")->required();
    from_mu->add_option("--mu", fm_mu, "weight as 'a,b,...|c,d,...'")->required();
    from_mu->add_option("--nu", fm_nus,
                        "nu per parameter-carrying block in content order, comma separated");
    from_mu->add_flag("--diagram", fm_diagram, "render the block diagram");

    // enumerate
    int en_p = 0, en_q = 0;
    std::string en_bound = "0";
    bool en_force = false;
    auto* enumerate = app.add_subcommand("enumerate", "list all data up to a content bound");
    enumerate->add_option("-p", en_p, "left size")->required();
    enumerate->add_option("-q", en_q, "right size")->required();
    enumerate->add_option("--bound", en_bound, "max |content|, e.g. 3/2")->required();
    enumerate->add_flag("--force", en_force, "lift the p+q <= 8 guard");

    // selftest
    std::string st_filter, st_golden;
    auto* selftest = app.add_subcommand("selftest", "run golden cases and property suites");
    selftest->add_option("--filter", st_filter, "run only groups whose name contains this");
    selftest->add_option("--golden", st_golden, "golden data directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            if (an_batch) {
                if (an_input.empty() || an_input == "-") return run_analyze_batch(std::cin);
                std::ifstream in(an_input);
                if (!in) {
                    error_json("parse", "cannot open " + an_input);
                    return kExitParse;
                }
                return run_analyze_batch(in);
            }
            std::string text;
            try {
                text = read_input(an_input);
            } catch (const std::exception& e) {
                error_json("parse", e.what());
                return kExitParse;
            }
            return run_analyze_one(text, an_diagram);
        }

        if (*from_mu) {
            try {
                upq::KTypeWeight mu = parse_mu(fm_mu);
                if (int(mu.left.size()) != fm_p || int(mu.right.size()) != fm_q)
                    throw upq::ValidationError("mu does not match p,q");
                std::vector<upq::RatVec> nus;
                for (const std::string& s : fm_nus) nus.push_back(parse_nu(s));
                upq::ThetaDatum td = upq::theta_from_mu({fm_p, fm_q}, mu, nus);
                if (fm_diagram) std::cout << upq::render_diagram(td);
                upq::ojson out;
                out["theta_datum"] = upq::theta_json(td);
                out["report"] = upq::report_json(upq::screen(td));
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            } catch (const upq::GuardError& e) {
                error_json("guard", e.what());
                return kExitGuard;
            } catch (const std::exception& e) {
                error_json("validation", e.what());
                return kExitValidation;
            }
        }

        if (*enumerate) {
            try {
                upq::Signature sig{en_p, en_q};
                auto data = upq::enumerate_data(sig, upq::Rational::parse(en_bound), en_force);
                for (const auto& d : data) {
                    upq::ThetaDatum td;
                    td.datum = d;
                    for (const auto& b : d.blocks) td.nus.push_back(upq::RatVec(b.k(), 0));
                    upq::ojson line;
                    line["datum"] = upq::datum_json(d);
                    line["mu"] = upq::weight_json(upq::mu_from_datum(d));
                    line["report"] = upq::report_json(upq::screen(td));
                    std::cout << line.dump() << "\n";
                }
                return kExitOk;
            } catch (const upq::GuardError& e) {
                error_json("guard", e.what());
                return kExitGuard;
            } catch (const std::exception& e) {
                error_json("validation", e.what());
                return kExitValidation;
            }
        }

        if (*selftest) {
            std::string dir = st_golden.empty() ? upq::default_golden_dir() : st_golden;
            upq::SelfTestOutcome res = upq::run_selftest(dir, st_filter, std::cout);
            if (res.groups_failed > 0) {
                std::cout << "selftest: FAILED at " << res.first_failure << "\n";
                return kExitSelftest;
            }
            std::cout << "selftest: all " << res.groups_run << " groups passed\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return kExitValidation;
    }
    return kExitOk;
}
