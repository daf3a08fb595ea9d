// Compares the serial reference scan with the OpenMP kernel on the
// largest guarded inputs. Wall-clock only; results must agree exactly.

#include <chrono>
#include <cstdio>

#include "upq/dirac.hpp"

using namespace upq;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    struct Case {
        int p, q;
    };
    const Case cases[] = {{6, 6}, {8, 8}, {10, 10}};

    std::printf("%-10s %12s %12s %12s %8s\n", "group", "choices", "serial(ms)", "openmp(ms)",
                "speedup");
    for (const Case& cs : cases) {
        Signature sig{cs.p, cs.q};
        ThetaDatum td = trivial_theta(sig);
        KTypeWeight mu = mu_from_datum(td.datum);
        InfChar lam = assemble_inf_char(td);
        // Perturb one coordinate so the scan has something to hunt for.
        mu.left[0] += 2;

        DiracResult rs, rp;
        int reps = cs.p <= 8 ? 5 : 1;
        double ts = time_ms([&] { rs = dirac_scan_serial(mu, lam, sig); }, reps);
        double tp = time_ms([&] { rp = dirac_scan_parallel(mu, lam, sig); }, reps);
        if (!(rs.best_norm_sq == rp.best_norm_sq) || rs.violated != rp.violated) {
            std::printf("MISMATCH at U(%d,%d): serial %s vs parallel %s\n", cs.p, cs.q,
                        rs.best_norm_sq.str().c_str(), rp.best_norm_sq.str().c_str());
            return 1;
        }
        std::printf("U(%d,%d)%*s %12llu %12.2f %12.2f %7.2fx\n", cs.p, cs.q,
                    cs.p >= 10 ? 0 : 2, "", dirac_choice_count(sig), ts, tp, ts / tp);
    }
    return 0;
}
