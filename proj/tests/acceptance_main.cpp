// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Criteria with a stated time budget fail when they run over it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dimers/cyclotomic.hpp"
#include "dimers/grid_count.hpp"
#include "dimers/padics.hpp"
#include "dimers/quasipoly.hpp"
#include "dimers/series.hpp"

using namespace dimers;

namespace {

#ifndef DIMERS_CLI_PATH
#define DIMERS_CLI_PATH "dimers"
#endif

std::string cli_binary() {
    if (const char* env = std::getenv("DIMERS_BIN")) return env;
    return DIMERS_CLI_PATH;
}

struct CliRun {
    int status = -1;
    std::string out;
    double seconds = 0;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun r;
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int expected_sign(long n) { return ((n + 1) / 2) % 2 == 0 ? 1 : -1; }

struct Criterion {
    std::string name;
    double time_limit_s;  // 0 = none
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    UFits fits;

    const std::vector<Criterion> criteria = {
        {"three-way oracle agreement, n = 1..8", 60.0,
         [](std::string& detail) {
             for (long n = 1; n <= 8; ++n) {
                 const Integer count = count_tilings({2 * n, 2 * n});
                 const Integer f = f_exact(n);
                 if (count != pow2(static_cast<unsigned long>(n)) * f * f) {
                     detail = "count mismatch at n = " + std::to_string(n);
                     return false;
                 }
                 if (f_mod(n, 12).residue != mod_pow2(f, 12)) {
                     detail = "series residue mismatch at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = "count = 2^n f(n)^2 and f_mod ≡ f_exact (mod 2^12)";
             return true;
         }},
        {"2-adic valuation of the count is exactly n, n = 1..10", 300.0,
         [](std::string& detail) {
             for (long n = 1; n <= 10; ++n) {
                 const Integer count = count_tilings({2 * n, 2 * n});
                 if (v2(count) != n) {
                     detail = "v2 != n at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = "v2(count(2n x 2n)) = n";
             return true;
         }},
        {"pairwise product sign and the mod-4 congruence", 0,
         [](std::string& detail) {
             for (long n = 1; n <= 12; ++n) {
                 if (pair_product_sign(n) != (math_mod(n, 4) == 2 ? -1 : 1)) {
                     detail = "sign pattern broken at n = " + std::to_string(n);
                     return false;
                 }
             }
             for (long n = 1; n <= 10; ++n) {
                 const Integer want = pair_product_sign(n) == -1 ? 3 : 1;
                 if (mod_pow2(f_exact(n), 2) != want) {
                     detail = "f mod 4 congruence broken at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = "sign = -1 iff n ≡ 2 (mod 4); f ≡ sign (mod 4)";
             return true;
         }},
        {"identity suite: unit, cosine-sign and full products, n = 1..12", 30.0,
         [](std::string& detail) {
             for (long n = 1; n <= 12; ++n) {
                 if (unit_product(n) != 1) {
                     detail = "unit product != 1 at n = " + std::to_string(n);
                     return false;
                 }
                 if (cos_product_sign(n) != expected_sign(n)) {
                     detail = "cosine sign broken at n = " + std::to_string(n);
                     return false;
                 }
                 const auto full = full_product_check(n);
                 if (full.valuation != n || full.sign != expected_sign(n)) {
                     detail = "full product broken at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = "all three identities exact";
             return true;
         }},
        {"val2(E_k(n)) >= -k for n <= 12, k <= 12", 0,
         [](std::string& detail) {
             for (long n = 0; n <= 12; ++n) {
                 const auto table = power_sum_table(n, 12);
                 for (std::size_t k = 0; k < table.e.size(); ++k) {
                     const auto v = val2(table.e[k]);
                     if (v && *v < -static_cast<long>(k)) {
                         detail = "val2(E_" + std::to_string(k) + "(" + std::to_string(n) +
                                  ")) = " + std::to_string(*v);
                         return false;
                     }
                 }
             }
             detail = "valuation bound holds on the whole grid";
             return true;
         }},
        {"quasi-polynomial fits of U_k, k = 1..8", 120.0,
         [&fits](std::string& detail) {
             for (unsigned k = 1; k <= 8; ++k) {
                 const auto& q = fits.get(k);
                 if (!check_reflection(q)) {
                     detail = "reflection fails at k = " + std::to_string(k);
                     return false;
                 }
                 for (long n = 80; n < 85; ++n)
                     if (eval(q, n) != u_values(n, k)[k - 1]) {
                         detail = "held-out value differs at k = " + std::to_string(k) +
                                  ", n = " + std::to_string(n);
                         return false;
                     }
             }
             detail = "5 held-out values each and U_k(-1-n) = U_k(n) formally";
             return true;
         }},
        {"functional equation f(-1-n) = ±f(n) mod 2^10, n = 0..30", 300.0,
         [&fits](std::string& detail) {
             for (long n = 0; n <= 30; ++n) {
                 const auto rep = functional_check(n, 10, fits);
                 const int want = (math_mod(n, 4) == 0 || math_mod(n, 4) == 3) ? 1 : -1;
                 if (!rep.pass || rep.sign != want) {
                     detail = "check fails at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = "all 31 rows pass with the mod-4 sign pattern";
             return true;
         }},
        {"continuity scan over n <= 50: l(1) = 0 and l(2) = 2", 0,
         [](std::string& detail) {
             const auto r1 = continuity_scan(50, 1);
             if (r1.ell != 0) {
                 detail = "l(1) = " + std::to_string(r1.ell);
                 return false;
             }
             const auto r2 = continuity_scan(50, 2);
             if (r2.ell != 2 || !r2.witness) {
                 detail = "l(2) = " + std::to_string(r2.ell) +
                          (r2.witness ? "" : ", no witness");
                 return false;
             }
             const auto [a, b] = *r2.witness;
             if (math_mod(a, 2) != math_mod(b, 2) ||
                 f_mod(a, 2).residue == f_mod(b, 2).residue) {
                 detail = "witness pair does not show l = 1 failing";
                 return false;
             }
             detail = "witness (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") shows l = 1 fails for k = 2";
             return true;
         }},
        {"scale check: fmod --n 1000003 --bits 10, quasi vs direct", 0,
         [](std::string& detail) {
             const auto quasi =
                 run_cli("fmod --n 1000003 --bits 10 --path quasi --format json");
             if (quasi.status != 0) {
                 detail = "quasi path exited " + std::to_string(quasi.status);
                 return false;
             }
             if (quasi.seconds >= 60.0) {
                 detail = "quasi path took " + std::to_string(quasi.seconds) + " s (limit 60)";
                 return false;
             }
             const auto direct =
                 run_cli("fmod --n 1000003 --bits 10 --path direct --format json");
             if (direct.status != 0) {
                 detail = "direct path exited " + std::to_string(direct.status);
                 return false;
             }
             if (direct.seconds >= 600.0) {
                 detail = "direct path took " + std::to_string(direct.seconds) + " s (limit 600)";
                 return false;
             }
             if (quasi.out != direct.out) {
                 detail = "paths disagree: " + quasi.out + " vs " + direct.out;
                 return false;
             }
             std::ostringstream ss;
             ss << "residues agree; quasi " << quasi.seconds << " s, direct " << direct.seconds
                << " s";
             detail = ss.str();
             return true;
         }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
            ok = false;
            detail += " [over time budget " + std::to_string(c.time_limit_s) + " s]";
        }
        std::printf("[%s] criterion %zu: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
