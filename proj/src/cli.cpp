#include "tcore/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "tcore/cores.hpp"
#include "tcore/density.hpp"
#include "tcore/etaquot.hpp"
#include "tcore/raduseller.hpp"
#include "tcore/report_json.hpp"

namespace tcore::cli {

namespace {

struct Modulus {
    std::int64_t base = 0;
    int power = 1;
    std::int64_t value = 0;
};

// "9", "3^2".
Modulus parse_modulus(const std::string& text) {
    auto parse_part = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw std::invalid_argument("--mod expects <int> or <p>^<j>, got '" + text + "'");
        }
        return v;
    };
    Modulus mod;
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
        mod.base = parse_part(text);
    } else {
        mod.base = parse_part(text.substr(0, caret));
        mod.power = static_cast<int>(parse_part(text.substr(caret + 1)));
    }
    if (mod.base < 2 || mod.power < 1) {
        throw std::invalid_argument("--mod must be at least 2");
    }
    try {
        mod.value = ipow(mod.base, mod.power);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("--mod " + text + " does not fit in 64 bits");
    }
    return mod;
}

std::size_t series_guard() {
    if (const char* env = std::getenv("TCORE_MAX_SERIES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
        throw std::invalid_argument("TCORE_MAX_SERIES must be a positive integer");
    }
    return rs::kDefaultMaxSeries;
}

int verdict_code(rs::Verdict v) {
    switch (v) {
    case rs::Verdict::proven:
        return kOk;
    case rs::Verdict::refuted:
        return kNegative;
    case rs::Verdict::not_applicable:
        return kUsage;
    }
    return kUsage;
}

template <class T>
std::string show(const std::optional<T>& v) {
    if (!v) {
        return "-";
    }
    if constexpr (std::is_same_v<T, Rational>) {
        return to_string(*v);
    } else {
        return std::to_string(*v);
    }
}

void print_report_text(const rs::VerificationReport& r, std::ostream& out) {
    const auto& c = r.claim;
    out << "claim: a_" << c.p << "(" << c.m << "n + t') = 0 mod " << c.u << " for t' in P(" << c.t << ")\n";
    out << "verdict: " << rs::to_string(r.verdict) << "\n";
    if (!r.reason.empty()) {
        out << "reason: " << r.reason << "\n";
    }
    out << "kappa: " << show(r.kappa) << "\np_hat: " << show(r.p_hat) << "\nA_t: " << show(r.A_t)
        << "\neps2: " << show(r.eps2) << "\nepsp: " << show(r.epsp) << "\nN: " << show(r.level) << "\n";
    out << "P(t): {";
    for (std::size_t i = 0; i < r.P_set.size(); ++i) {
        out << (i ? "," : "") << r.P_set[i];
    }
    out << "}\n";
    out << "nu: " << show(r.nu) << "\nbound: " << show(r.bound) << "\ntheorem bound: " << show(r.theorem_bound)
        << "\nclosed-form bound: " << show(r.closed_form_bound) << "\nchecked coefficients: " << r.checks.size()
        << "\n";
    if (r.witness) {
        out << "witness: a_" << c.p << "(" << c.m * r.witness->n + r.witness->t_prime << ") = " << r.witness->residue
            << " mod " << c.u << "\n";
    }
}

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-core partition counts, eta-quotient certification and congruence proofs", "tcore"};
    app.require_subcommand(1);
    Format format = Format::text;
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats))->capture_default_str();

    int t = 0;
    std::int64_t n = 0;
    std::string mod_text;
    std::size_t order = 0;

    auto* count = app.add_subcommand("count", "a_t(n) via the generating function");
    count->add_option("--t", t, "Core size")->required()->check(CLI::PositiveNumber);
    count->add_option("--n", n, "Argument")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--mod", mod_text, "Reduce modulo u or p^j");

    auto* series = app.add_subcommand("series", "Coefficients of the t-core generating function");
    series->add_option("--t", t, "Core size")->required()->check(CLI::PositiveNumber);
    series->add_option("--order", order, "Truncation order")->required()->check(CLI::PositiveNumber);
    series->add_option("--mod", mod_text, "Reduce modulo u or p^j");

    auto* oracle = app.add_subcommand("oracle", "a_t(n) by enumerating partitions and hook numbers");
    oracle->add_option("--t", t, "Core size")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--n", n, "Argument")->required()->check(CLI::Range(0, cores::kOracleLimit));

    std::string eta_spec;
    auto* eta_check = app.add_subcommand("eta-check", "Holomorphy certificate for an eta-quotient");
    eta_check->add_option("--spec", eta_spec, "N=<level>;<d>:<r>,...")->required();

    rs::CongruenceClaim claim;
    std::string s_range = "squares";
    const std::map<std::string, rs::SRange> ranges = {{"squares", rs::SRange::squares},
                                                      {"all-units", rs::SRange::all_units}};
    auto* prove = app.add_subcommand("prove", "Prove a_p(mn + t') = 0 mod u for t' in P(t)");
    prove->add_option("--p", claim.p, "Prime core size")->required();
    prove->add_option("--m", claim.m, "Progression modulus")->required();
    prove->add_option("--t", claim.t, "Residue")->required();
    prove->add_option("--mod", mod_text, "Congruence modulus u or p^j")->required();
    prove->add_option("--s-range", s_range, "Residues s acting on t")->check(CLI::IsMember({"squares", "all-units"}));

    std::string input = "-";
    unsigned jobs = 1;
    auto* batch = app.add_subcommand("prove-batch", "Prove JSON-lines claims; one report per line");
    batch->add_option("--input", input, "Claims file, '-' for standard input")->capture_default_str();
    batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    batch->add_option("--s-range", s_range, "Residues s acting on t")->check(CLI::IsMember({"squares", "all-units"}));

    std::vector<std::int64_t> checkpoints = density::kDefaultCheckpoints;
    auto* dens = app.add_subcommand("density", "Fraction of 1 <= n <= X with a_t(n) = 0 mod p^j");
    dens->add_option("--t", t, "Core size")->required()->check(CLI::PositiveNumber);
    dens->add_option("--mod", mod_text, "Modulus p^j")->required();
    dens->add_option("--checkpoints", checkpoints, "Increasing X values")->delimiter(',');

    std::vector<const char*> argv{"tcore"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (e.get_exit_code() == 0) {
            return kOk;
        }
        return kUsage;
    }

    try {
        if (*count || *series) {
            const std::size_t want = *count ? static_cast<std::size_t>(n) + 1 : order;
            if (want > series_guard()) {
                err << "error: " << want << " coefficients exceed the series guard " << series_guard() << "\n";
                return kUsage;
            }
            std::vector<std::string> coeffs;
            if (mod_text.empty()) {
                const auto s = cores::tcore_series(t, want);
                for (const auto& c : s.coefficients()) {
                    coeffs.push_back(c.get_str());
                }
            } else {
                const auto s = cores::tcore_series(t, want, static_cast<std::uint64_t>(parse_modulus(mod_text).value));
                for (auto c : s.coefficients()) {
                    coeffs.push_back(std::to_string(c));
                }
            }
            if (*count) {
                if (format == Format::json) {
                    out << nlohmann::json{{"n", std::to_string(n)}, {"t", std::to_string(t)}, {"value", coeffs.back()}}.dump()
                        << "\n";
                } else {
                    out << coeffs.back() << "\n";
                }
                return kOk;
            }
            if (format == Format::json) {
                out << nlohmann::json{{"coefficients", coeffs}, {"order", std::to_string(order)}, {"t", std::to_string(t)}}.dump()
                    << "\n";
            } else if (format == Format::csv) {
                out << "n,coefficient\n";
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    out << i << ',' << coeffs[i] << "\n";
                }
            } else {
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    out << (i ? " " : "") << coeffs[i];
                }
                out << "\n";
            }
            return kOk;
        }

        if (*oracle) {
            const auto value = cores::tcore_count_oracle(t, static_cast<int>(n));
            if (format == Format::json) {
                out << nlohmann::json{{"n", std::to_string(n)}, {"t", std::to_string(t)}, {"value", std::to_string(value)}}.dump()
                    << "\n";
            } else {
                out << value << "\n";
            }
            return kOk;
        }

        if (*eta_check) {
            const auto e = eta::EtaQuotient::parse(eta_spec);
            const auto report = eta::certify_holomorphic(e);
            if (format == Format::json) {
                auto j = io::to_json(report);
                j["spec"] = e.to_string();
                out << j.dump() << "\n";
            } else {
                out << "spec: " << e.to_string() << "\n";
                out << "holomorphic=" << (report.holomorphic ? "true" : "false") << "\n";
                out << "weight=" << to_string(report.weight) << "\n";
                out << "conditions_24=" << report.conditions_24.delta_sum << "," << report.conditions_24.level_sum
                    << "\n";
                for (const auto& [d, v] : report.cusp_orders) {
                    out << "order at 1/" << d << " = " << to_string(v) << "\n";
                }
            }
            return report.holomorphic ? kOk : kNegative;
        }

        rs::VerifyOptions options;
        options.s_range = ranges.at(s_range);
        options.max_series = series_guard();

        if (*prove) {
            claim.u = parse_modulus(mod_text).value;
            const auto report = rs::verify_claim(claim, options);
            if (format == Format::json) {
                out << io::to_json(report).dump() << "\n";
            } else {
                print_report_text(report, out);
            }
            return verdict_code(report.verdict);
        }

        if (*batch) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (input != "-") {
                file.open(input);
                if (!file) {
                    err << "error: cannot open " << input << "\n";
                    return kUsage;
                }
                in = &file;
            }
            std::vector<std::string> lines;
            for (std::string line; std::getline(*in, line);) {
                if (line.find_first_not_of(" \t\r") != std::string::npos) {
                    lines.push_back(line);
                }
            }
            rs::TcoreSeriesCache cache;
            options.cache = &cache;
            std::vector<nlohmann::json> results(lines.size());
            std::vector<int> codes(lines.size(), kOk);
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < lines.size(); i = next++) {
                    try {
                        const auto c = io::claim_from_json(nlohmann::json::parse(lines[i]));
                        const auto report = rs::verify_claim(c, options);
                        results[i] = io::to_json(report);
                        codes[i] = verdict_code(report.verdict);
                    } catch (const std::exception& e) {
                        results[i] = {{"error", e.what()}, {"line", std::to_string(i + 1)}};
                        codes[i] = kUsage;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned k = 1; k < std::min<std::size_t>(jobs, std::max<std::size_t>(lines.size(), 1)); ++k) {
                pool.emplace_back(worker);
            }
            worker();
            for (auto& th : pool) {
                th.join();
            }
            for (const auto& r : results) {
                out << r.dump() << "\n";
            }
            // Worst outcome wins: usage/not-applicable over refuted over proven.
            return codes.empty() ? kOk : *std::max_element(codes.begin(), codes.end());
        }

        if (*dens) {
            const auto mod = parse_modulus(mod_text);
            const auto table = density::measure_density(t, mod.base, mod.power, checkpoints,
                                                        static_cast<std::int64_t>(series_guard()));
            if (format == Format::json) {
                out << io::to_json(table).dump() << "\n";
            } else if (format == Format::csv) {
                out << density::to_csv(table);
            } else {
                for (std::size_t i = 0; i < table.checkpoints.size(); ++i) {
                    out << "X=" << table.checkpoints[i] << " zeros=" << table.numerators[i]
                        << " density=" << to_string(table.densities[i]) << " ~ " << table.densities[i].get_d() << "\n";
                }
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

} // namespace tcore::cli
