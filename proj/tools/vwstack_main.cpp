// vwstack: exact coefficient tables for the root-stack monopole series and the
// modular series around it.
//
// Exit codes: 0 success, 1 internal invariant violation (or a failed
// verify-all), 2 usage error. Output files are written only on success.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vwstack/chern_geom.hpp"
#include "vwstack/coeff_table.hpp"
#include "vwstack/errors.hpp"
#include "vwstack/hilb_euler.hpp"
#include "vwstack/modular.hpp"
#include "vwstack/root_stack.hpp"
#include "vwstack/verify.hpp"

namespace {

using namespace vwstack;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_series(const QSeries& s, const std::string& format) {
    const CoeffTable table = to_table(s);
    if (format == "csv") {
        return to_csv(table);
    }
    if (format == "text") {
        return to_text(table);
    }
    return to_json(table) + "\n";
}

void emit(const std::string& body, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw UsageError("cannot open " + tmp.string() + " for writing");
        }
        out << body;
        if (!out.flush()) {
            throw UsageError("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

std::vector<std::int64_t> parse_an_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t used = 0;
        std::int64_t n = 0;
        try {
            n = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--an expects a comma-separated list of positive integers");
        }
        if (used != item.size() || n < 1) {
            throw UsageError("--an expects a comma-separated list of positive integers");
        }
        out.push_back(n);
    }
    return out;
}

Rational parse_exponent(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--emin: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series for Vafa-Witten monopole contributions on root stacks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Defaults file with key = value lines", false);

    std::string output;
    std::string format = "json";
    app.add_option("-o,--output", output, "Write the result to this file instead of stdout");
    app.add_option("--format", format, "Coefficient table format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    // root-stack
    auto* root = app.add_subcommand("root-stack", "Monopole generating series of the root stack");
    std::int64_t genus = 6;
    std::int64_t order = 12;
    std::int64_t gerbe = 1;
    std::string route = "direct";
    root->add_option("--genus", genus, "Genus of the canonical curve")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{64}))
        ->capture_default_str();
    root->add_option("--order", order, "Truncation order in q")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}))
        ->capture_default_str();
    root->add_option("--gerbe", gerbe, "Gerbe order r")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{16}))
        ->capture_default_str();
    root->add_option("--route", route, "direct | localization | bruteforce | residue | closed")
        ->check(CLI::IsMember({"direct", "localization", "bruteforce", "residue", "closed"}))
        ->capture_default_str();

    // hurwitz
    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz class number H(delta)");
    std::int64_t delta = 0;
    hurwitz->add_option("--delta", delta, "Positive discriminant magnitude")
        ->required()
        ->check(CLI::PositiveNumber);

    // p112
    auto* p112 = app.add_subcommand("p112", "Rank-two series on P(1,1,2)");
    std::int64_t c1 = 1;
    std::string emin_text = "-20";
    std::int64_t p112_order = 12;
    std::string reading = "display";
    bool compare = false;
    p112->add_option("--c1", c1, "First Chern class c1")->capture_default_str();
    p112->add_option("--emin", emin_text, "Lowest exponent kept (integer or p/q)")
        ->capture_default_str();
    p112->add_option("--order", p112_order, "Order of the eta/theta factor")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{400}))
        ->capture_default_str();
    p112->add_option("--reading", reading, "Pair sum in the lattice exponent: display (i<=j) | strict (i<j)")
        ->check(CLI::IsMember({"display", "strict"}))
        ->capture_default_str();
    p112->add_flag("--compare", compare,
                   "Emit the lattice sum, the Hurwitz series and their reconciliation instead");

    // theta-an
    auto* theta = app.add_subcommand("theta-an", "Cyclotomic theta series of an A_n singularity");
    std::int64_t an = 1;
    std::int64_t theta_order = 16;
    theta->add_option("--n", an, "n of A_n")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{8}))
        ->capture_default_str();
    theta->add_option("--order", theta_order, "Truncation order in q")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}))
        ->capture_default_str();

    // hilb-euler
    auto* hilb = app.add_subcommand("hilb-euler", "Euler characteristics of Hilbert schemes of points");
    std::int64_t chi = 0;
    std::string an_list;
    std::int64_t hilb_order = 12;
    hilb->add_option("--chi", chi, "Euler characteristic of the resolution")->required();
    hilb->add_option("--an", an_list, "Comma-separated n_i of the A_{n_i} points");
    hilb->add_option("--order", hilb_order, "Truncation order in q")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}))
        ->capture_default_str();

    // ade-vertical
    auto* ade = app.add_subcommand("ade-vertical", "Degree-two vertical contribution at an A_1 point");
    SurfaceChernData data;
    ade->add_option("--c2t", data.res_c2, "c2 of the resolution")->required();
    ade->add_option("--mixed", data.mixed, "c1(resolution) . c1(stack)")->required();
    ade->add_option("--c1sq", data.res_c1_sq, "c1(resolution)^2")->required();
    ade->add_option("--dim", data.dim_param, "Exponent in (-2)^-dim")->required();
    ade->add_option("--stack-c1sq", data.c1_sq, "c1(stack)^2 (enters the ratio route only)")
        ->capture_default_str();

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
    VerifyOptions vopts;
    std::string json_path;
    bool timings = false;
    verify->add_option("--seed", vopts.seed, "Seed for the randomized checks")->capture_default_str();
    verify->add_option("--json", json_path, "Also write the machine-readable report here");
    verify->add_flag("--timings", timings, "Append wall-clock times (breaks byte-identical output)");
    verify->add_option("--root-stack-order", vopts.root_stack_order)->capture_default_str();
    verify->add_option("--gerby-order", vopts.gerby_order)->capture_default_str();
    verify->add_option("--eta-theta-order", vopts.eta_theta_order)->capture_default_str();
    verify->add_option("--p112-emin", vopts.p112_emin)->capture_default_str();
    verify->add_option("--theta-order", vopts.theta_order)->capture_default_str();
    verify->add_option("--gottsche-order", vopts.gottsche_order)->capture_default_str();
    verify->add_option("--perturb", vopts.perturb_criterion, "Test hook: corrupt one criterion")
        ->check(CLI::Range(0, kCriterionCount))
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::string body;
        int status = kExitOk;
        if (*root) {
            const MonopoleSeriesConfig cfg{genus, order, gerbe, {}};
            QSeries s;
            if (route == "direct") {
                s = monopole_series_direct(cfg);
            } else if (route == "localization") {
                s = localization_series(cfg);
            } else if (route == "bruteforce") {
                s = bi_diagonal(bivariate_rational(genus, order, order));
            } else if (route == "residue") {
                s = diagonal_via_residue(genus, order);
            } else {
                s = closed_form(genus, order, sign_normalization_probe(genus));
            }
            body = format_series(s, format);
        } else if (*hurwitz) {
            body = to_string(hurwitz_H(delta)) + "\n";
        } else if (*p112) {
            const Rational emin = parse_exponent(emin_text);
            const LatticeExponent r =
                reading == "strict" ? LatticeExponent::kStrictPairs : LatticeExponent::kDisplay;
            if (compare) {
                const P112Reconciliation rec = reconcile_p112(c1, emin);
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["lattice"] = nlohmann::ordered_json::parse(to_json(to_table(rec.lattice)));
                    j["hurwitz"] = nlohmann::ordered_json::parse(to_json(to_table(rec.hurwitz)));
                    j["report"] = rec.report;
                    body = j.dump(2) + "\n";
                } else {
                    body = "# lattice sum\n" + format_series(rec.lattice, format) +
                           "# Hurwitz series\n" + format_series(rec.hurwitz, format) +
                           "# reconciliation\n" + rec.report;
                }
            } else {
                body = format_series(p112_rhs(c1, emin, p112_order, r), format);
            }
        } else if (*theta) {
            body = format_series(theta_An(an, theta_order), format);
        } else if (*hilb) {
            const std::vector<std::int64_t> points = parse_an_list(an_list);
            body = format_series(hilb_euler_series(chi, points, hilb_order), format);
        } else if (*ade) {
            const Rational closed = vertical_degree2_integral(data);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["closed"] = to_string(closed);
                j["ratio"] = to_string(vertical_degree2_via_ratio(data));
                j["routes_agree"] = vertical_degree2_routes_agree(data);
                body = j.dump(2) + "\n";
            } else {
                body = to_string(closed) + "\n";
            }
        } else if (*verify) {
            const std::vector<CriterionResult> results = run_all(vopts);
            body = report_table(results, timings);
            if (!json_path.empty()) {
                emit(report_json(results, vopts) + "\n", json_path);
            }
            for (const auto& r : results) {
                if (!r.passed) {
                    status = kExitInvariant;
                }
            }
        }
        emit(body, output);
        return status;
    } catch (const InvariantViolation& e) {
        std::cerr << "vwstack: internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const UsageError& e) {
        std::cerr << "vwstack: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vwstack::Error& e) {
        std::cerr << "vwstack: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "vwstack: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "vwstack: " << e.what() << '\n';
        return kExitInvariant;
    }
}
