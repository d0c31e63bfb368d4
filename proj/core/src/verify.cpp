#include "vwstack/verify.hpp"

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vwstack/bi_series.hpp"
#include "vwstack/chern_geom.hpp"
#include "vwstack/errors.hpp"
#include "vwstack/hilb_euler.hpp"
#include "vwstack/modular.hpp"
#include "vwstack/oracles.hpp"
#include "vwstack/qseries.hpp"
#include "vwstack/root_stack.hpp"
#include "vwstack/taut_hilb.hpp"

namespace vwstack {

namespace {

constexpr int kPairingCases = 100;
constexpr int kChernCases = 50;
constexpr int kPropertyCases = 200;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
        }
        detail << (ok ? "ok: " : "MISMATCH: ") << what << '\n';
    }
};

/// Adds one to the lowest known coefficient.
void corrupt(QSeries& s) {
    if (s.hi() >= s.lo()) {
        s.add_to_coefficient(s.lo(), Rational(1));
    }
}

/// True when p is known through q^{hi_num/unit_den} and equals 1 there.
bool is_one_through(const QSeries& p, std::int64_t hi_num) {
    if (p.hi() < hi_num) {
        return false;
    }
    for (const auto& [e, c] : p.terms()) {
        if (e > hi_num) {
            break;
        }
        if (c != (e == 0 ? Rational(1) : Rational(0))) {
            return false;
        }
    }
    return p.coefficient(0) == 1;
}

std::string join_rationals(const QSeries& s, std::int64_t from, std::int64_t to) {
    std::ostringstream out;
    for (std::int64_t n = from; n <= to; ++n) {
        out << (n == from ? "" : ", ") << to_string(s.coefficient(n));
    }
    return out.str();
}

void criterion_closed_form(const VerifyOptions& o, Outcome& out) {
    constexpr std::int64_t g = 6;
    const NormalizationRecord record = sign_normalization_probe(g);
    out.detail << "normalization: " << describe(record) << '\n';
    QSeries direct = monopole_series_direct({g, o.root_stack_order, 1, record});
    if (o.perturb_criterion == 1) {
        corrupt(direct);
    }
    const QSeries closed = closed_form(g, o.root_stack_order, record);
    out.check(direct == closed, "g = 6 direct integrals equal the normalized closed form for n = 0.." +
                                    std::to_string(o.root_stack_order));
    out.detail << "direct: " << join_rationals(direct, 0, std::min<std::int64_t>(4, o.root_stack_order))
               << ", ...\n";
}

void criterion_three_routes(const VerifyOptions& o, Outcome& out) {
    const std::int64_t n = o.root_stack_order;
    for (std::int64_t g : {2, 6}) {
        QSeries direct = monopole_series_direct({g, n, 1, {}});
        if (o.perturb_criterion == 2) {
            corrupt(direct);
        }
        const QSeries diagonal = bi_diagonal(bivariate_rational(g, n, n));
        const QSeries residue = diagonal_via_residue(g, n);
        out.check(direct == diagonal,
                  "g = " + std::to_string(g) + ": direct = bivariate diagonal through q^" +
                      std::to_string(n));
        out.check(diagonal == residue,
                  "g = " + std::to_string(g) + ": bivariate diagonal = residue at x0 through q^" +
                      std::to_string(n));
    }
}

void criterion_gerby(const VerifyOptions& o, Outcome& out) {
    constexpr std::int64_t g = 6;
    const QSeries base = monopole_series_direct({g, o.gerby_order, 1, {}});
    for (std::int64_t r : {2, 3}) {
        QSeries gerby = monopole_series_direct({g, o.gerby_order, r, {}});
        if (o.perturb_criterion == 3) {
            corrupt(gerby);
        }
        out.check(gerby == base, "r = " + std::to_string(r) + " series equals r = 1 through q^" +
                                     std::to_string(o.gerby_order));
    }
}

void criterion_pairing(const VerifyOptions& o, Outcome& out) {
    std::mt19937_64 rng(o.seed);
    int agree = 0;
    for (int i = 0; i < kPairingCases; ++i) {
        const std::int64_t g = oracle::uniform(rng, 0, 8);
        const std::int64_t n = oracle::uniform(rng, 0, 10);
        TautIntegrand integrand;
        integrand.omega_part = oracle::random_series(rng, 1, 0, n, false);
        integrand.theta_coeff = oracle::random_series(rng, 1, 0, n, false);
        Rational value = integrate(integrand, {g, n, 1});
        if (o.perturb_criterion == 4 && i == 0) {
            value += 1;
        }
        if (value == integrate_direct(integrand, {g, n, 1})) {
            ++agree;
        }
    }
    out.check(agree == kPairingCases, "integrate = integrate_direct on " + std::to_string(agree) +
                                          "/" + std::to_string(kPairingCases) +
                                          " random integrands (g <= 8, n <= 10)");
}

void criterion_hurwitz(const VerifyOptions& o, Outcome& out) {
    Rational h3 = hurwitz_H(3);
    if (o.perturb_criterion == 5) {
        h3 += 1;
    }
    out.check(h3 == Rational(BigInt(1), BigInt(3)), "H(3) = " + to_string(h3));
    out.check(hurwitz_H(4) == Rational(BigInt(1), BigInt(2)), "H(4) = " + to_string(hurwitz_H(4)));
    int agree = 0;
    for (std::int64_t d = 1; d <= 60; ++d) {
        agree += hurwitz_H(d) == oracle::hurwitz_nonreduced(d) ? 1 : 0;
    }
    out.check(agree == 60, "reduced-form count = non-reduced oracle for " + std::to_string(agree) +
                               "/60 discriminants");
    bool zero = true;
    for (std::int64_t d = 1; d <= 200; ++d) {
        if ((d % 4 == 1 || d % 4 == 2) && hurwitz_H(d) != 0) {
            zero = false;
        }
    }
    out.check(zero, "H(d) = 0 for d = 1, 2 mod 4, d <= 200");
}

void criterion_eta_theta(const VerifyOptions& o, Outcome& out) {
    QSeries shifted = QSeries::monomial(Rational(1), 4, 24) *
                      eta_product_pow(-4, o.eta_theta_order, true);
    if (o.perturb_criterion == 6) {
        shifted.add_to_coefficient(24, Rational(1));
    }
    out.check(eta_theta_identity_holds(shifted, o.eta_theta_order),
              "q^(1/6) eta^-4 theta3 = prod (1-q^k)^-4 sum q^(k^2) through q^" +
                  std::to_string(o.eta_theta_order));
}

void criterion_p112(const VerifyOptions& o, Outcome& out) {
    const Rational emin(o.p112_emin);
    for (std::int64_t c1 : {0, 1}) {
        for (LatticeExponent reading : {LatticeExponent::kDisplay, LatticeExponent::kStrictPairs}) {
            QSeries shells = lattice_sum_C(c1, emin, reading);
            if (o.perturb_criterion == 7) {
                corrupt(shells);
            }
            out.check(shells == lattice_sum_C_bruteforce(c1, emin, reading),
                      "c1 = " + std::to_string(c1) + ", " + to_string(reading) +
                          ": shell and triple-loop enumerations agree");
        }
        const P112Reconciliation rec = reconcile_p112(c1, emin);
        out.detail << rec.report;
    }
}

void criterion_theta(const VerifyOptions& o, Outcome& out) {
    QSeries theta = theta_An(1, o.theta_order);
    if (o.perturb_criterion == 8) {
        corrupt(theta);
    }
    const std::vector<Rational> expected = oracle::theta1_cosine(o.theta_order);
    bool same = theta.hi() == o.theta_order;
    for (std::int64_t e = 0; e <= o.theta_order && same; ++e) {
        same = theta.coefficient(e) == expected[static_cast<std::size_t>(e)];
    }
    out.check(same, "Theta_1 = cosine-weight oracle through q^" + std::to_string(o.theta_order) +
                        ": " + join_rationals(theta, 0, std::min<std::int64_t>(9, o.theta_order)) +
                        ", ...");
    for (std::int64_t n = 1; n <= 4; ++n) {
        bool rational = true;
        try {
            (void)theta_An(n, o.theta_order);
        } catch (const NonRationalCoefficient&) {
            rational = false;
        }
        out.check(rational, "Theta_" + std::to_string(n) + " coefficients rational through q^" +
                                std::to_string(o.theta_order));
    }
}

void criterion_gottsche(const VerifyOptions& o, Outcome& out) {
    for (std::int64_t chi : {1, 2, 12}) {
        QSeries series = hilb_euler_series(chi, {}, o.gottsche_order).shifted(chi).normalized();
        if (o.perturb_criterion == 9) {
            corrupt(series);
        }
        const std::vector<BigInt> expected = oracle::colored_partitions(chi, o.gottsche_order);
        bool same = series.unit_den() == 1 && series.hi() == o.gottsche_order;
        for (std::int64_t m = 0; m <= o.gottsche_order && same; ++m) {
            same = series.coefficient(m) == Rational(expected[static_cast<std::size_t>(m)]);
        }
        out.check(same, "chi = " + std::to_string(chi) + ": eta^-chi = colored partitions through q^" +
                            std::to_string(o.gottsche_order));
    }
}

void criterion_chern(const VerifyOptions& o, Outcome& out) {
    QuinticInvariants q = quintic_invariants(5, 55);
    if (o.perturb_criterion == 10) {
        q.g_c += 1;
    }
    out.check(q == QuinticInvariants{6, 4, 10},
              "quintic (5, 55) -> (g_C, p_g, h0(K^2)) = (" + std::to_string(q.g_c) + ", " +
                  std::to_string(q.p_g) + ", " + std::to_string(q.h0_k2) + ")");
    out.check(ade_point_contribution() == 1, "A_1 point contribution = 1");

    std::mt19937_64 rng(o.seed);
    int agree = 0;
    int six = 0;
    std::string first_mismatch;
    for (int i = 0; i < kChernCases; ++i) {
        SurfaceChernData d;
        d.c1_sq = oracle::uniform(rng, -20, 20);
        d.c2_top = oracle::uniform(rng, -20, 60);
        d.res_c1_sq = oracle::uniform(rng, -20, 20);
        d.res_c2 = oracle::uniform(rng, -20, 60);
        d.mixed = oracle::uniform(rng, -20, 20);
        d.dim_param = oracle::uniform(rng, 0, 4);
        const Rational closed = vertical_degree2_integral(d);
        const Rational ratio = vertical_degree2_via_ratio(d);
        if (closed == ratio) {
            ++agree;
        } else if (first_mismatch.empty()) {
            first_mismatch = "(c2~, c1~.c1, c1~^2, dim) = (" + std::to_string(d.res_c2) + ", " +
                             std::to_string(d.mixed) + ", " + std::to_string(d.res_c1_sq) + ", " +
                             std::to_string(d.dim_param) + "): closed " + to_string(closed) +
                             ", ratio " + to_string(ratio);
        }
        const Rational expected_ratio =
            pow(Rational(-2), -d.dim_param) * Rational(d.res_c2 + 6 * d.mixed);
        six += ratio == expected_ratio ? 1 : 0;
    }
    out.check(agree == kChernCases, "vertical degree-2 closed polynomial = ratio expansion on " +
                                        std::to_string(agree) + "/" + std::to_string(kChernCases) +
                                        " random inputs");
    if (!first_mismatch.empty()) {
        out.detail << "first mismatch " << first_mismatch << '\n';
    }
    out.detail << "info: ratio expansion equals (-2)^-dim (c2~ + 6 c1~.c1) on " << six << "/"
               << kChernCases << " inputs\n";
}

bool close_enough(const QSeries& a, const QSeries& b) { return agree_on_common_window(a, b); }

void criterion_series_core(const VerifyOptions& o, Outcome& out) {
    std::mt19937_64 rng(o.seed);
    const bool perturb = o.perturb_criterion == 11;
    auto any_series = [&](bool nonzero_leading) {
        const std::int64_t d = oracle::uniform(rng, 1, 3);
        return oracle::random_series(rng, d, oracle::uniform(rng, -3, 3), oracle::uniform(rng, 1, 8),
                                     nonzero_leading);
    };

    int ring = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const QSeries f = any_series(true);
        const QSeries g = any_series(true);
        const QSeries h = any_series(true);
        QSeries fg = f * g;
        if (perturb && i == 0) {
            corrupt(fg);
        }
        const bool ok = f + g == g + f && fg == g * f && (fg * h) == f * (g * h) &&
                        (f + g) + h == f + (g + h) && close_enough(f * (g + h), fg + f * h) &&
                        close_enough(f - f, QSeries(f.unit_den(), f.lo(), f.hi()));
        ring += ok ? 1 : 0;
    }
    out.check(ring == kPropertyCases,
              "ring laws on " + std::to_string(ring) + "/" + std::to_string(kPropertyCases));

    int inv = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const QSeries f = any_series(true);
        const QSeries p = f * invert(f);
        inv += is_one_through(p, f.hi() - f.lo()) ? 1 : 0;
    }
    out.check(inv == kPropertyCases,
              "f * invert(f) = 1 on " + std::to_string(inv) + "/" + std::to_string(kPropertyCases));

    int root = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        QSeries g = any_series(true);
        if (g.terms().begin()->second < 0) {
            g = -g;
        }
        const QSeries f = g * g;
        const QSeries s = sqrt(f);
        root += (close_enough(s, g) && close_enough(s * s, f)) ? 1 : 0;
    }
    out.check(root == kPropertyCases,
              "sqrt(g^2) = g and sqrt(f)^2 = f on " + std::to_string(root) + "/" +
                  std::to_string(kPropertyCases));

    int explog = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const std::int64_t d = oracle::uniform(rng, 1, 2);
        const QSeries f =
            oracle::random_series(rng, d, oracle::uniform(rng, 1, 3), oracle::uniform(rng, 1, 8), true);
        const QSeries one_plus = QSeries::constant(Rational(1)) + f;
        const bool ok = close_enough(log_series(exp_series(f)), f) &&
                        close_enough(exp_series(log_series(one_plus)), one_plus);
        explog += ok ? 1 : 0;
    }
    out.check(explog == kPropertyCases, "log(exp f) = f and exp(log(1+f)) = 1+f on " +
                                            std::to_string(explog) + "/" +
                                            std::to_string(kPropertyCases));

    int leibniz = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const QSeries f = any_series(false);
        const QSeries g = any_series(false);
        leibniz += close_enough(derivative(f * g), derivative(f) * g + f * derivative(g)) ? 1 : 0;
    }
    out.check(leibniz == kPropertyCases, "(fg)' = f'g + fg' on " + std::to_string(leibniz) + "/" +
                                             std::to_string(kPropertyCases));
}

struct CriterionEntry {
    const char* name;
    void (*run)(const VerifyOptions&, Outcome&);
};

const CriterionEntry kCriteria[kCriterionCount] = {
    {"monopole series = normalized closed form (g = 6)", criterion_closed_form},
    {"direct / bivariate diagonal / residue agree (g = 2, 6)", criterion_three_routes},
    {"gerbe order invariance (r = 1, 2, 3)", criterion_gerby},
    {"tautological pairing vs termwise oracle", criterion_pairing},
    {"Hurwitz class numbers", criterion_hurwitz},
    {"eta/theta identity", criterion_eta_theta},
    {"P(1,1,2) lattice sum vs Hurwitz series", criterion_p112},
    {"A_n theta series (cyclotomic accumulation)", criterion_theta},
    {"Gottsche specialization", criterion_gottsche},
    {"quintic invariants and ADE contributions", criterion_chern},
    {"series-core property suite", criterion_series_core},
};

} // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
    if (id < 1 || id > kCriterionCount) {
        throw std::invalid_argument("no criterion " + std::to_string(id));
    }
    const CriterionEntry& entry = kCriteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.name = entry.name;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        entry.run(options, outcome);
    } catch (const std::exception& e) {
        outcome.passed = false;
        outcome.detail << "exception: " << e.what() << '\n';
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = outcome.passed;
    result.detail = outcome.detail.str();
    return result;
}

std::vector<CriterionResult> run_all(const VerifyOptions& options) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; ++id) {
        results.push_back(run_criterion(id, options));
    }
    return results;
}

std::string report_table(const std::vector<CriterionResult>& results, bool with_timings) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        out << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  "
            << r.name;
        if (with_timings) {
            out << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
        }
        out << '\n';
        std::istringstream lines(r.detail);
        for (std::string line; std::getline(lines, line);) {
            out << "        " << line << '\n';
        }
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

std::string report_json(const std::vector<CriterionResult>& results, const VerifyOptions& options) {
    nlohmann::ordered_json j;
    j["seed"] = options.seed;
    auto list = nlohmann::ordered_json::array();
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["status"] = r.passed ? "PASS" : "FAIL";
        c["detail"] = r.detail;
        list.push_back(std::move(c));
    }
    j["criteria"] = std::move(list);
    j["passed"] = passed;
    j["failed"] = static_cast<int>(results.size()) - passed;
    return j.dump(2);
}

} // namespace vwstack
