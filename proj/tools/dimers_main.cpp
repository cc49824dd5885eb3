// Command-line front end: exact tiling counts, f(n) extraction, 2-adic
// evaluation, lemma verification, functional-equation and continuity
// reports. Emits text, JSON lines, or CSV; optionally backed by an
// append-only result cache (newline-delimited JSON, newest record wins).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimers/cyclotomic.hpp"
#include "dimers/errors.hpp"
#include "dimers/grid_count.hpp"
#include "dimers/padics.hpp"
#include "dimers/quasipoly.hpp"
#include "dimers/series.hpp"

using nlohmann::json;

namespace {

using namespace dimers;

std::string dec(const Integer& x) { return x.get_str(); }

// ---------------------------------------------------------------------------
// Result cache: append-only JSONL keyed by (subcommand, n, bits).

class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {}

    bool enabled() const { return !path_.empty(); }

    std::optional<json> lookup(const json& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        std::optional<json> hit;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                json entry = json::parse(line);
                if (entry.contains("key") && entry["key"] == key) hit = entry["record"];
            } catch (const json::parse_error&) {
                continue;  // tolerate a torn trailing line
            }
        }
        return hit;
    }

    void store(const json& key, const json& record) const {
        if (!enabled()) return;
        std::ofstream out(path_, std::ios::app);
        out << json{{"key", key}, {"record", record}}.dump() << "\n";
    }

private:
    std::string path_;
};

// ---------------------------------------------------------------------------
// Output rendering.

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string checks_summary(const json& rec) {
    if (!rec.contains("checks")) return "";
    std::string out;
    for (const auto& [name, ok] : rec["checks"].items()) {
        if (!out.empty()) out += ";";
        out += name + "=" + (ok.get<bool>() ? "1" : "0");
    }
    return out;
}

void render_json(const json& payload) {
    if (payload.is_array())
        for (const auto& rec : payload) std::cout << rec.dump() << "\n";
    else
        std::cout << payload.dump() << "\n";
}

std::string pass_word(bool ok) { return ok ? "ok" : "FAIL"; }

void render_text(const std::string& cmd, const json& payload) {
    if (cmd == "count") {
        const long n = payload["n"].get<long>();
        const Integer count(payload["count"].get<std::string>());
        std::cout << "tilings of " << 2 * n << "x" << 2 * n << ": " << count << " = 2^"
                  << (count == 1 ? 0 : v2(count)) << " * " << payload["f"].get<std::string>()
                  << "^2  [valuation check: "
                  << pass_word(payload["checks"]["valuation_equals_n"].get<bool>()) << "]\n";
    } else if (cmd == "f") {
        std::cout << "f(" << payload["n"].get<long>() << ") = " << payload["f"].get<std::string>()
                  << "  [method: " << payload["method"].get<std::string>();
        if (payload["checks"].contains("methods_agree"))
            std::cout << ", agreement: "
                      << pass_word(payload["checks"]["methods_agree"].get<bool>());
        std::cout << "]\n";
    } else if (cmd == "fmod") {
        std::cout << "f(" << payload["n"].get<long>() << ") = "
                  << payload["f_mod"]["residue"].get<std::string>() << "  (mod 2^"
                  << payload["f_mod"]["precision"].get<unsigned>() << ")\n";
    } else if (cmd == "uk") {
        std::cout << "U_" << payload["k"].get<unsigned>() << "(" << payload["n"].get<long>()
                  << ") = " << payload["u"].get<std::string>() << "\n";
    } else if (cmd == "quasi_fit") {
        std::cout << "U_" << payload["k"].get<unsigned>() << "(n) = A(n) + (-1)^n B(n) with\n"
                  << "  A(n) = " << payload["even_part_str"].get<std::string>() << "\n"
                  << "  B(n) = " << payload["sign_part_str"].get<std::string>() << "\n"
                  << "  degree " << payload["degree"].get<long>() << ", reflection "
                  << pass_word(payload["checks"]["reflection"].get<bool>()) << "\n";
    } else if (cmd == "verify_lemmas") {
        for (const auto& rec : payload) {
            std::cout << "n = " << rec["n"].get<long>() << ":";
            for (const auto& [name, ok] : rec["checks"].items())
                std::cout << "  " << name << " " << pass_word(ok.get<bool>());
            std::cout << "\n";
        }
    } else if (cmd == "verify_functional") {
        for (const auto& rec : payload) {
            const long n = rec["n"].get<long>();
            std::cout << "n = " << n << ": f(" << -1 - n << ") = "
                      << rec["lhs_residue"].get<std::string>() << ", f(" << n << ") = "
                      << rec["f_mod"]["residue"].get<std::string>() << " (mod 2^"
                      << rec["f_mod"]["precision"].get<unsigned>() << "), sign "
                      << (rec["sign"].get<int>() > 0 ? "+" : "-") << ", "
                      << pass_word(rec["checks"]["functional"].get<bool>()) << "\n";
        }
    } else if (cmd == "scan_continuity") {
        std::cout << "l(" << payload["k"].get<unsigned>() << ") = " << payload["ell"].get<unsigned>()
                  << " over 0 <= n <= " << payload["n_max"].get<long>() << ": no pair n = m (mod 2^"
                  << payload["ell"].get<unsigned>() << ") differs mod 2^"
                  << payload["k"].get<unsigned>() << "\n";
        if (!payload["witness"].is_null())
            std::cout << "  witness that l = " << payload["ell"].get<unsigned>() - 1
                      << " fails: n = " << payload["witness"]["n"].get<long>() << ", m = "
                      << payload["witness"]["m"].get<long>() << "\n";
        std::cout << "  (empirical over a finite window, not a proof)\n";
    }
}

void render_csv(const std::string& cmd, const json& payload) {
    auto row = [](std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) std::cout << ",";
            std::cout << csv_escape(c);
            first = false;
        }
        std::cout << "\n";
    };
    if (cmd == "count") {
        row({"n", "count", "f", "checks"});
        row({std::to_string(payload["n"].get<long>()), payload["count"].get<std::string>(),
             payload["f"].get<std::string>(), checks_summary(payload)});
    } else if (cmd == "f") {
        row({"n", "f", "method", "checks"});
        row({std::to_string(payload["n"].get<long>()), payload["f"].get<std::string>(),
             payload["method"].get<std::string>(), checks_summary(payload)});
    } else if (cmd == "fmod") {
        row({"n", "residue", "precision"});
        row({std::to_string(payload["n"].get<long>()),
             payload["f_mod"]["residue"].get<std::string>(),
             std::to_string(payload["f_mod"]["precision"].get<unsigned>())});
    } else if (cmd == "uk") {
        row({"n", "k", "u"});
        row({std::to_string(payload["n"].get<long>()),
             std::to_string(payload["k"].get<unsigned>()), payload["u"].get<std::string>()});
    } else if (cmd == "quasi_fit") {
        row({"k", "degree", "even_part", "sign_part", "checks"});
        auto join = [](const json& arr) {
            std::string out;
            for (const auto& c : arr) {
                if (!out.empty()) out += ";";
                out += c.get<std::string>();
            }
            return out;
        };
        row({std::to_string(payload["k"].get<unsigned>()),
             std::to_string(payload["degree"].get<long>()), join(payload["even_part"]),
             join(payload["sign_part"]), checks_summary(payload)});
    } else if (cmd == "verify_lemmas") {
        row({"n", "unit_product", "pair_product_sign", "cos_product_sign", "full_product"});
        for (const auto& rec : payload) {
            const auto& c = rec["checks"];
            row({std::to_string(rec["n"].get<long>()),
                 c["unit_product"].get<bool>() ? "1" : "0",
                 c["pair_product_sign"].get<bool>() ? "1" : "0",
                 c["cos_product_sign"].get<bool>() ? "1" : "0",
                 c["full_product"].get<bool>() ? "1" : "0"});
        }
    } else if (cmd == "verify_functional") {
        row({"n", "sign", "lhs_residue", "rhs_residue", "precision", "pass"});
        for (const auto& rec : payload)
            row({std::to_string(rec["n"].get<long>()), std::to_string(rec["sign"].get<int>()),
                 rec["lhs_residue"].get<std::string>(),
                 rec["f_mod"]["residue"].get<std::string>(),
                 std::to_string(rec["f_mod"]["precision"].get<unsigned>()),
                 rec["checks"]["functional"].get<bool>() ? "1" : "0"});
    } else if (cmd == "scan_continuity") {
        row({"k", "n_max", "ell", "witness_n", "witness_m"});
        row({std::to_string(payload["k"].get<unsigned>()),
             std::to_string(payload["n_max"].get<long>()),
             std::to_string(payload["ell"].get<unsigned>()),
             payload["witness"].is_null() ? "" : std::to_string(payload["witness"]["n"].get<long>()),
             payload["witness"].is_null() ? "" : std::to_string(payload["witness"]["m"].get<long>())});
    }
}

// ---------------------------------------------------------------------------
// Command implementations. Each returns the payload that gets rendered and,
// when caching is on, stored (sweeps are arrays of row records).

json run_count(long n, const ResultCache& cache) {
    const json key{{"cmd", "count"}, {"n", n}, {"bits", 0}};
    if (auto hit = cache.lookup(key)) return *hit;
    auto fac = factor_square_count(n);
    json rec{{"n", n},
             {"count", dec(fac.count)},
             {"f", dec(fac.odd_root)},
             {"checks", {{"valuation_equals_n", fac.two_exponent == n}}}};
    cache.store(key, rec);
    return rec;
}

json run_f(long n, std::string method, const ResultCache& cache) {
    const bool dp_ok = 2 * n <= CountBudget{}.max_width;
    const bool cyclo_ok = n <= CycloBudget{}.max_n;
    if (method == "auto") {
        if (dp_ok && cyclo_ok)
            method = "both";
        else if (cyclo_ok)
            method = "cyclo";
        else if (dp_ok)
            method = "dp";
        else
            throw BudgetExceeded("f: n = " + std::to_string(n) + " exceeds every method budget");
    }
    const json key{{"cmd", "f." + method}, {"n", n}, {"bits", 0}};
    if (auto hit = cache.lookup(key)) return *hit;

    json rec{{"n", n}, {"method", method}, {"checks", json::object()}};
    if (method == "dp") {
        rec["f"] = dec(factor_square_count(n).odd_root);
    } else if (method == "cyclo") {
        rec["f"] = dec(f_exact(n));
    } else {
        const Integer from_dp = factor_square_count(n).odd_root;
        const Integer from_cyclo = f_exact(n);
        rec["f"] = dec(from_cyclo);
        rec["checks"]["methods_agree"] = (from_dp == from_cyclo);
    }
    cache.store(key, rec);
    return rec;
}

json run_fmod(long n, unsigned bits, std::string path, UFits& fits, const ResultCache& cache) {
    if (path == "auto") path = n >= 0 ? "direct" : "quasi";
    const json key{{"cmd", "fmod." + path}, {"n", n}, {"bits", bits}};
    if (auto hit = cache.lookup(key)) return *hit;
    const TwoAdicTrunc r = path == "direct" ? f_mod(n, bits) : f_mod_quasi(n, bits, fits);
    json rec{{"n", n},
             {"f_mod", {{"residue", dec(r.residue)}, {"precision", r.precision}}}};
    cache.store(key, rec);
    return rec;
}

json run_uk(long n, unsigned k, UFits& fits, const ResultCache& cache) {
    const json key{{"cmd", "uk"}, {"n", n}, {"bits", k}};
    if (auto hit = cache.lookup(key)) return *hit;
    const Rational u = n >= 0 ? u_values(n, k)[k - 1] : eval(fits.get(k), n);
    json rec{{"n", n}, {"k", k}, {"u", u.get_str()}};
    cache.store(key, rec);
    return rec;
}

json run_quasi_fit(unsigned k, UFits& fits, const ResultCache& cache) {
    const json key{{"cmd", "quasi_fit"}, {"n", static_cast<long>(k)}, {"bits", 0}};
    if (auto hit = cache.lookup(key)) return *hit;
    const QuasiPolynomial& q = fits.get(k);
    auto coeff_strings = [](const RationalPolynomial& p) {
        json arr = json::array();
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        return arr;
    };
    json rec{{"k", k},
             {"degree", std::max(q.even_part.degree(), q.sign_part.degree())},
             {"even_part", coeff_strings(q.even_part)},
             {"sign_part", coeff_strings(q.sign_part)},
             {"even_part_str", q.even_part.to_string()},
             {"sign_part_str", q.sign_part.to_string()},
             {"checks", {{"reflection", check_reflection(q)}}}};
    cache.store(key, rec);
    return rec;
}

json run_verify_lemmas(long n_max, const ResultCache& cache) {
    const json key{{"cmd", "verify.lemmas"}, {"n", n_max}, {"bits", 0}};
    if (auto hit = cache.lookup(key)) return *hit;
    json rows = json::array();
    for (long n = 1; n <= n_max; ++n) {
        json checks;
        try {
            checks["unit_product"] = (unit_product(n) == 1);
        } catch (const CheckFailed&) {
            checks["unit_product"] = false;
        }
        try {
            checks["pair_product_sign"] =
                (pair_product_sign(n) == (math_mod(n, 4) == 2 ? -1 : 1));
        } catch (const CheckFailed&) {
            checks["pair_product_sign"] = false;
        }
        try {
            cos_product_sign(n);  // self-verifies against the closed form
            checks["cos_product_sign"] = true;
        } catch (const CheckFailed&) {
            checks["cos_product_sign"] = false;
        }
        try {
            const auto full = full_product_check(n);
            checks["full_product"] =
                (full.valuation == n && full.sign == (((n + 1) / 2) % 2 == 0 ? 1 : -1));
        } catch (const CheckFailed&) {
            checks["full_product"] = false;
        }
        rows.push_back(json{{"n", n}, {"checks", checks}});
    }
    cache.store(key, rows);
    return rows;
}

json run_verify_functional(long n_max, unsigned bits, UFits& fits, const ResultCache& cache) {
    const json key{{"cmd", "verify.functional"}, {"n", n_max}, {"bits", bits}};
    if (auto hit = cache.lookup(key)) return *hit;
    json rows = json::array();
    for (long n = 0; n <= n_max; ++n) {
        const auto rep = functional_check(n, bits, fits);
        rows.push_back(json{{"n", n},
                            {"sign", rep.sign},
                            {"lhs_residue", dec(rep.lhs.residue)},
                            {"f_mod",
                             {{"residue", dec(rep.rhs.residue)}, {"precision", rep.rhs.precision}}},
                            {"checks", {{"functional", rep.pass}}}});
    }
    cache.store(key, rows);
    return rows;
}

json run_scan_continuity(long n_max, unsigned k, const ResultCache& cache) {
    const json key{{"cmd", "scan.continuity"}, {"n", n_max}, {"bits", k}};
    if (auto hit = cache.lookup(key)) return *hit;
    const auto rep = continuity_scan(n_max, k);
    json rec{{"k", k},
             {"n_max", n_max},
             {"ell", rep.ell},
             {"witness", rep.witness
                             ? json{{"n", rep.witness->first}, {"m", rep.witness->second}}
                             : json(nullptr)}};
    cache.store(key, rec);
    return rec;
}

// ---------------------------------------------------------------------------
// Harness hook: DIMERS_FAULT=<check-name> flips that named check in the
// rendered output (never in the cache), to exercise the exit-2 path.

void apply_fault(json& payload) {
    const char* fault = std::getenv("DIMERS_FAULT");
    if (!fault) return;
    auto flip = [&](json& rec) {
        if (rec.contains("checks") && rec["checks"].contains(fault))
            rec["checks"][fault] = !rec["checks"][fault].get<bool>();
    };
    if (payload.is_array())
        for (auto& rec : payload) flip(rec);
    else
        flip(payload);
}

bool find_failed_check(const json& payload, std::string& name) {
    auto scan = [&](const json& rec) {
        if (!rec.contains("checks")) return false;
        for (const auto& [check, ok] : rec["checks"].items())
            if (!ok.get<bool>()) {
                name = check;
                if (rec.contains("n")) name += " (n = " + std::to_string(rec["n"].get<long>()) + ")";
                return true;
            }
        return false;
    };
    if (payload.is_array()) {
        for (const auto& rec : payload)
            if (scan(rec)) return true;
        return false;
    }
    return scan(payload);
}

struct Outcome {
    bool check_failed = false;
    std::string failing;
};

Outcome emit(const std::string& cmd, json payload, const std::string& format) {
    apply_fault(payload);
    if (format == "json")
        render_json(payload);
    else if (format == "csv")
        render_csv(cmd, payload);
    else
        render_text(cmd, payload);
    Outcome out;
    out.check_failed = find_failed_check(payload, out.failing);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domino-tiling counts of 2n x 2n boards and the 2-adic behavior of their odd square-root factor f(n)"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cache_path;
    if (const char* env = std::getenv("DIMERS_CACHE")) cache_path = env;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--cache", cache_path,
                        "append-only JSONL result cache (default: $DIMERS_CACHE)");
    };

    long n = 0, n_max = 0;
    unsigned bits = 0, k = 1;
    std::string method = "auto", path = "auto";

    auto* cmd_count = app.add_subcommand("count", "tiling count of the 2n x 2n board, factored");
    cmd_count->add_option("--n", n, "half side length")->required()->check(CLI::NonNegativeNumber);
    add_common(cmd_count);

    auto* cmd_f = app.add_subcommand("f", "the odd square-root factor f(n), exactly");
    cmd_f->add_option("--n", n, "argument")->required()->check(CLI::NonNegativeNumber);
    cmd_f->add_option("--method", method, "dp: board count; cyclo: cyclotomic product")
        ->check(CLI::IsMember({"dp", "cyclo", "auto"}))
        ->capture_default_str();
    add_common(cmd_f);

    auto* cmd_fmod = app.add_subcommand("fmod", "f(n) mod 2^K (negative n allowed)");
    cmd_fmod->add_option("--n", n, "argument, any integer")->required();
    cmd_fmod->add_option("--bits", bits, "precision K >= 2")->required()
        ->check(CLI::Range(2u, 4096u));
    cmd_fmod->add_option("--path", path, "direct series or quasi-polynomial power sums")
        ->check(CLI::IsMember({"direct", "quasi", "auto"}))
        ->capture_default_str();
    add_common(cmd_fmod);

    auto* cmd_verify = app.add_subcommand("verify", "exact identity checks");
    cmd_verify->require_subcommand(1);
    auto* cmd_lemmas = cmd_verify->add_subcommand(
        "lemmas", "unit, pairwise-sign, cosine-sign and full-product identities");
    cmd_lemmas->add_option("--n-max", n_max, "check n = 1..N")->required()
        ->check(CLI::PositiveNumber);
    add_common(cmd_lemmas);
    auto* cmd_functional = cmd_verify->add_subcommand(
        "functional", "f(-1-n) = ±f(n) mod 2^K, quasi-polynomial vs direct series");
    cmd_functional->add_option("--n-max", n_max, "check n = 0..N")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_functional->add_option("--bits", bits, "precision K >= 2")->required()
        ->check(CLI::Range(2u, 256u));
    add_common(cmd_functional);

    auto* cmd_scan = app.add_subcommand("scan", "empirical scans");
    cmd_scan->require_subcommand(1);
    auto* cmd_continuity = cmd_scan->add_subcommand(
        "continuity", "smallest l with: n = m (mod 2^l) forces f(n) = f(m) (mod 2^k)");
    cmd_continuity->add_option("--n-max", n_max, "scan window 0..N")->required()
        ->check(CLI::PositiveNumber);
    cmd_continuity->add_option("--bits", k, "target precision k")->required()
        ->check(CLI::Range(1u, 24u));
    add_common(cmd_continuity);

    auto* cmd_uk = app.add_subcommand("uk", "the exact power sum U_k(n)");
    cmd_uk->add_option("--k", k, "index k >= 1")->required()->check(CLI::PositiveNumber);
    cmd_uk->add_option("--n", n, "argument, any integer")->required();
    add_common(cmd_uk);

    auto* cmd_quasi = app.add_subcommand("quasi", "quasi-polynomial forms");
    cmd_quasi->require_subcommand(1);
    auto* cmd_quasi_fit = cmd_quasi->add_subcommand("fit", "fitted coefficients of U_k");
    cmd_quasi_fit->add_option("--k", k, "index k >= 1")->required()->check(CLI::PositiveNumber);
    add_common(cmd_quasi_fit);

    Outcome outcome;
    UFits fits;

    cmd_count->callback([&] { outcome = emit("count", run_count(n, ResultCache(cache_path)), format); });
    cmd_f->callback([&] { outcome = emit("f", run_f(n, method, ResultCache(cache_path)), format); });
    cmd_fmod->callback(
        [&] { outcome = emit("fmod", run_fmod(n, bits, path, fits, ResultCache(cache_path)), format); });
    cmd_lemmas->callback([&] {
        outcome = emit("verify_lemmas", run_verify_lemmas(n_max, ResultCache(cache_path)), format);
    });
    cmd_functional->callback([&] {
        outcome = emit("verify_functional",
                       run_verify_functional(n_max, bits, fits, ResultCache(cache_path)), format);
    });
    cmd_continuity->callback([&] {
        outcome =
            emit("scan_continuity", run_scan_continuity(n_max, k, ResultCache(cache_path)), format);
    });
    cmd_uk->callback([&] { outcome = emit("uk", run_uk(n, k, fits, ResultCache(cache_path)), format); });
    cmd_quasi_fit->callback(
        [&] { outcome = emit("quasi_fit", run_quasi_fit(k, fits, ResultCache(cache_path)), format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CheckFailed& e) {
        std::cerr << "identity check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (outcome.check_failed) {
        std::cerr << "check failed: " << outcome.failing << "\n";
        return 2;
    }
    return 0;
}
