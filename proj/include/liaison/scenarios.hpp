#ifndef LIAISON_SCENARIOS_HPP
#define LIAISON_SCENARIOS_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "liaison/linkage.hpp"
#include "liaison/pfaffian.hpp"

namespace liaison {

struct ScenarioParams {
    int d = 4;          // plane-curve degree
    int e = -1;         // basic-double-link degree / matrix entry degree (-1: scenario default)
    int n = 8;          // number of points
    int s = 7;          // skew matrix size
    std::uint64_t seed = 1;
    std::uint32_t prime = 32003;
    int max_steps = 8;  // double-step budget
};

/// One verified fact in a report.  basis records where the expected
/// value comes from: "pinned" (a fixed published value), "oracle"
/// (computed independently by this engine and frozen), or "identity"
/// (an exact mathematical identity).
struct ScenarioCheck {
    std::string name, basis, expected, actual;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    ScenarioParams params;
    LinkTrace trace;
    std::vector<ScenarioCheck> checks;
    long long runtime_ms = 0;

    ScenarioReport(std::string name, const ScenarioParams& p, Ideal start)
        : scenario(std::move(name)), params(p), trace(std::move(start)) {}

    bool all_pass() const {
        for (const ScenarioCheck& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

// ---------------------------------------------------------------- formatting

namespace detail {

inline std::string fmt_ints(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string fmt_lls(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string compact_betti(const BettiTable& B) {
    std::string s = "{";
    bool first = true;
    for (const auto& [ij, r] : B.ranks) {
        if (r == 0) continue;
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
             "):" + std::to_string(r);
    }
    return s + "}";
}

inline std::string fmt_profile(const DeficiencyProfile& p) {
    std::string s = "{";
    bool first = true;
    for (int t = p.lo; t <= p.hi; ++t) {
        if (p.at(t) == 0) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(t) + ":" + std::to_string(p.at(t));
    }
    return s + "}";
}

inline BettiTable make_betti(std::initializer_list<std::array<int, 3>> entries) {
    BettiTable B;
    for (const auto& e : entries) B.ranks[{e[0], e[1]}] = e[2];
    return B;
}

inline void add_check(ScenarioReport& rep, const std::string& name, const std::string& basis,
                      const std::string& expected, const std::string& actual) {
    rep.checks.push_back({name, basis, expected, actual, expected == actual});
}

inline void add_finding(ScenarioReport& rep, const std::string& name, const std::string& basis,
                        const std::string& expected, const std::string& actual) {
    // recorded but never failing: a mismatch is a finding, not an error
    std::string note = (expected == actual) ? actual : actual + " [differs: " + expected + "]";
    rep.checks.push_back({name, basis, expected, note, true});
}

} // namespace detail

// ------------------------------------------------------------------ builders

inline Ideal build_skew_lines(const Ring& R) {
    if (R.num_vars() != 4) throw error("skew_lines: needs 4 variables");
    auto v = [&R](int i) { return Polynomial::variable(R, i); };
    return Ideal(R, {v(0) * v(2), v(0) * v(3), v(1) * v(2), v(1) * v(3)});
}

namespace detail {

/// Random form of the given degree in x0, x1, x2 only; the x2^deg
/// coefficient is forced nonzero so the curve misses (0:0:1:0).
inline Polynomial random_plane_form(const Ring& R, int deg, Rng& rng, bool vanish_at_p0) {
    std::vector<Term> terms;
    Monomial top = Monomial::one(), corner = Monomial::one();
    top.set_exponent(2, deg);
    corner.set_exponent(0, deg);
    for (const Monomial& m : R.monomials_of_degree(deg)) {
        if (m.exponent(3) != 0) continue;
        if (vanish_at_p0 && m == corner) continue; // kill the value at (1:0:0:0)
        std::uint32_t c = m == top ? 1 + static_cast<std::uint32_t>(rng.below(R.characteristic() - 1))
                                   : static_cast<std::uint32_t>(rng.below(R.characteristic()));
        if (c != 0) terms.push_back({c, m});
    }
    if (terms.empty()) throw error("random_plane_form: drew the zero form");
    return Polynomial(R, std::move(terms));
}

inline Polynomial random_slice_element(const Ideal& I, int deg, Rng& rng) {
    const Ring& R = I.ring();
    Polynomial f = Polynomial::zero(R);
    for (const Polynomial& b : degree_slice_basis(I, deg))
        f = f + b * static_cast<std::int64_t>(rng.below(R.characteristic()));
    return f;
}

} // namespace detail

inline Ideal build_line_plus_plane_curve(const Ring& R, int d, std::uint64_t seed) {
    if (R.num_vars() != 4) throw error("line_plus_plane_curve: needs 4 variables");
    if (d < 1) throw error("line_plus_plane_curve requires d >= 1");
    Rng rng = Rng(seed).child(17);
    Polynomial F = detail::random_plane_form(R, d, rng, false);
    auto v = [&R](int i) { return Polynomial::variable(R, i); };
    return intersect(Ideal(R, {v(0), v(1)}), Ideal(R, {v(3), F}));
}

inline Ideal build_thm34_curve(const Ring& R, int d, int e, std::uint64_t seed) {
    if (!(4 <= e && e <= d))
        throw error("thm34_curve requires 4 <= e <= d (got d=" + std::to_string(d) +
                    ", e=" + std::to_string(e) + ")");
    Ideal C1 = build_line_plus_plane_curve(R, d, seed);
    Rng root(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng = root.child(100 + attempt);
        Polynomial f = detail::random_slice_element(C1, e, rng);
        if (f.is_zero()) continue;
        Polynomial ell = random_homogeneous(R, 1, rng);
        if (!is_regular_sequence({ell, f})) continue;
        try {
            return basic_double_link(C1, f, ell);
        } catch (const error&) {
            continue;
        }
    }
    throw error("thm34_curve: no valid (ell, f) pair after 32 attempts");
}

inline Ideal build_twisted_cubic_points(const Ring& R, int m) {
    if (R.num_vars() != 4) throw error("twisted_cubic_points: needs 4 variables");
    if (m < 1 || static_cast<std::uint64_t>(m) >= R.characteristic())
        throw error("twisted_cubic_points: need 1 <= n < characteristic");
    const PrimeField& F = R.field();
    auto v = [&R](int i) { return Polynomial::variable(R, i); };
    Ideal acc = Ideal::unit(R);
    for (int i = 1; i <= m; ++i) {
        std::uint32_t t1 = F.reduce(i);
        std::uint32_t t2 = F.mul(t1, t1), t3 = F.mul(t2, t1);
        Ideal pt(R, {v(1) - static_cast<std::int64_t>(t1) * v(0),
                     v(2) - static_cast<std::int64_t>(t2) * v(0),
                     v(3) - static_cast<std::int64_t>(t3) * v(0)});
        acc = (i == 1) ? pt : intersect(acc, pt);
    }
    return acc;
}

/// Plane complete intersection of type (a,a) through P = (1:0:0:0)
/// minus P, union b points on the line (x1, x2).
inline Ideal build_bd_ex(const Ring& R, int a, int b, std::uint64_t seed) {
    if (R.num_vars() != 4) throw error("bd_ex: needs 4 variables");
    if (a < 2 || b < 1) throw error("bd_ex: need a >= 2 and b >= 1");
    auto v = [&R](int i) { return Polynomial::variable(R, i); };
    Ideal point(R, {v(1), v(2), v(3)});
    Rng root(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng = root.child(attempt);
        Polynomial Fa = detail::random_plane_form(R, a, rng, true);
        Polynomial Ga = detail::random_plane_form(R, a, rng, true);
        Ideal X(R, {v(3), Fa, Ga});
        if (codimension(X) != 3) continue;
        Ideal Z1 = ideal_quotient(X, point);
        if (!Z1.is_proper() || codimension(Z1) != 3) continue;
        if (ideal_degree(Z1) != static_cast<long long>(a) * a - 1) continue;
        Polynomial prod = Polynomial::constant(R, 1);
        for (int i = 1; i <= b; ++i) prod = prod * (v(3) - static_cast<std::int64_t>(i) * v(0));
        Ideal Z2(R, {v(1), v(2), prod});
        Ideal Z = intersect(Z1, Z2);
        if (ideal_degree(Z) != static_cast<long long>(a) * a - 1 + b) continue;
        if (!is_gorenstein_codim3(Z)) continue;
        return Z;
    }
    throw error("bd_ex: construction failed for all 32 derived seeds");
}

inline SkewMatrix build_be_matrix(const Ring& R, int s, int entry_degree, std::uint64_t seed) {
    return random_be_matrix(R, s, DegreePattern::uniform(s, entry_degree), seed);
}

inline Ideal build_be_generic(const Ring& R, int s, int entry_degree, std::uint64_t seed) {
    return buchsbaum_eisenbud_ideal(build_be_matrix(R, s, entry_degree, seed));
}

/// Seeded tower of basic double links over the two skew lines: the
/// positive-control inputs for the minimal-linkage descent.
inline Ideal build_l1_perturbation(const Ring& R, int num_bdl, int max_f_degree,
                                   std::uint64_t seed) {
    if (num_bdl < 1 || max_f_degree < 2)
        throw error("l1_perturbation: need num_bdl >= 1 and max_f_degree >= 2");
    Ideal cur = build_skew_lines(R);
    Rng root(seed);
    for (int k = 0; k < num_bdl; ++k) {
        bool done = false;
        for (int attempt = 0; attempt < 32 && !done; ++attempt) {
            Rng rng = root.child(k * 37 + attempt);
            int df = 2 + static_cast<int>(rng.below(max_f_degree - 1));
            Polynomial f = detail::random_slice_element(cur, df, rng);
            if (f.is_zero()) continue;
            Polynomial ell = random_homogeneous(R, 1, rng);
            if (!is_regular_sequence({ell, f})) continue;
            try {
                cur = basic_double_link(cur, f, ell);
                done = true;
            } catch (const error&) {
            }
        }
        if (!done) throw error("l1_perturbation: no valid double link at stage " +
                               std::to_string(k + 1));
    }
    return cur;
}

inline int scenario_default_e(const std::string& name) {
    return name == "be_generic" ? 1 : 4;
}

inline Ideal build_scenario(const std::string& name, const ScenarioParams& P, const Ring& R) {
    int e = P.e >= 0 ? P.e : scenario_default_e(name);
    if (name == "skew_lines") return build_skew_lines(R);
    if (name == "line_plus_plane_curve") return build_line_plus_plane_curve(R, P.d, P.seed);
    if (name == "thm34_curve") return build_thm34_curve(R, P.d, e, P.seed);
    if (name == "twisted_cubic_points") return build_twisted_cubic_points(R, P.n);
    if (name == "bd_ex1") return build_bd_ex(R, 3, 4, P.seed);
    if (name == "bd_ex2") return build_bd_ex(R, 6, 10, P.seed);
    if (name == "be_generic") return build_be_generic(R, P.s, e, P.seed);
    throw error("unknown scenario '" + name + "'");
}

// ------------------------------------------------------------------- drivers

/// Iterated Gorenstein double links down to a complete intersection.
struct GorensteinRun {
    LinkTrace trace;
    std::vector<GorensteinDoubleLink> rounds;

    explicit GorensteinRun(Ideal start) : trace(std::move(start)) {}
};

inline GorensteinRun gorenstein_descent(const Ideal& I, int max_rounds, std::uint64_t seed) {
    GorensteinRun run(I);
    Rng root(seed);
    Ideal cur = I;
    int r = 0;
    while (minimal_generator_count(cur) > 3) {
        if (r >= max_rounds) {
            run.trace.terminal = "step_limit";
            return run;
        }
        GorensteinDoubleLink gd = gorenstein_double_link(cur, root.child(r + 1).next());
        run.trace.steps.push_back(gd.first);
        run.trace.chain.push_back(gd.intermediate);
        run.trace.steps.push_back(gd.second);
        run.trace.chain.push_back(gd.result);
        run.rounds.push_back(gd);
        cur = gd.result;
        run.trace.final_ideal = cur;
        ++r;
    }
    run.trace.terminal = "ci_reached";
    return run;
}

// ------------------------------------------------------------ shared checks

namespace detail {

/// Criterion checks that are pure identities: link involution, degree
/// additivity, and K-polynomial vs Hilbert numerator at both ends of
/// the chain.
inline void add_identity_checks(ScenarioReport& rep) {
    const LinkTrace& tr = rep.trace;
    bool inv = true, add = true;
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        const LinkStep& st = tr.steps[k];
        Ideal ci(tr.chain[k].ring(), st.ci_forms);
        if (!(ideal_quotient(ci, tr.chain[k + 1]) == tr.chain[k])) inv = false;
        long long prod = 1;
        for (int a : st.ci_degrees) prod *= a;
        if (st.degree_before + st.degree_after != prod) add = false;
    }
    add_check(rep, "link_involution", "identity", "exact for " + std::to_string(tr.steps.size()) + " steps",
              (inv ? "exact for " + std::to_string(tr.steps.size()) + " steps" : "violated"));
    add_check(rep, "degree_additivity", "identity", "exact", add ? "exact" : "violated");

    bool kp = true;
    for (const Ideal* X : {&tr.chain.front(), &tr.chain.back()}) {
        FreeResolution res = minimal_resolution(*X);
        if (res.k_polynomial() != hilbert_series(*X).numerator_full) kp = false;
    }
    add_check(rep, "k_polynomial_vs_numerator", "identity", "equal", kp ? "equal" : "violated");
}

inline void add_pfaffian_identity_checks(ScenarioReport& rep, const SkewMatrix& M) {
    bool ok = true;
    for (int i = 0; i < M.size() && ok; ++i) {
        std::vector<int> keep;
        for (int j = 0; j < M.size(); ++j)
            if (j != i) keep.push_back(j);
        SkewMatrix S = principal_submatrix(M, keep);
        Polynomial pf = pfaffian(S);
        if (!(pf * pf == determinant(S))) ok = false;
    }
    add_check(rep, "pfaffian_squared_vs_det", "identity", "equal on all even principal minors",
              ok ? "equal on all even principal minors" : "violated");
}

} // namespace detail

// -------------------------------------------------------------- run_scenario

namespace detail {

inline void run_skew_lines(ScenarioReport& rep, const Ring& R, const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    add_check(rep, "betti_table", "pinned",
              compact_betti(make_betti({{0, 2, 4}, {1, 3, 4}, {2, 4, 1}})),
              compact_betti(minimal_betti(I)));
    add_check(rep, "degree", "pinned", "2", std::to_string(ideal_degree(I)));
    add_check(rep, "deficiency_profile", "pinned", "{0:1}",
              fmt_profile(deficiency_profile(I, -4, 6)));
    rep.trace = minimal_licci_run(I, std::min(P.max_steps, 4), Rng(P.seed).child(3).next());
    add_check(rep, "residual_betti_equals_source", "oracle", "equal",
              (!rep.trace.steps.empty() &&
               rep.trace.steps[0].betti_after == rep.trace.steps[0].betti_before)
                  ? "equal" : "different");
    add_check(rep, "terminal", "oracle", "cycle_detected after 2 links",
              rep.trace.terminal + " after " + std::to_string(rep.trace.steps.size()) + " links");
    add_identity_checks(rep);
    (void)R;
}

inline void run_line_plus_plane_curve(ScenarioReport& rep, const Ring& R,
                                      const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    int d = P.d;
    add_check(rep, "betti_table", "pinned",
              compact_betti(make_betti(
                  {{0, 2, 2}, {0, d + 1, 2}, {1, 3, 1}, {1, d + 2, 3}, {2, d + 3, 1}})),
              compact_betti(minimal_betti(I)));
    DeficiencyProfile expect_prof;
    expect_prof.lo = -4;
    expect_prof.hi = d + 4;
    expect_prof.dims.assign(d + 9, 0);
    for (int t = 0; t <= d - 1; ++t) expect_prof.dims[t + 4] = 1;
    add_check(rep, "deficiency_profile", "pinned", fmt_profile(expect_prof),
              fmt_profile(deficiency_profile(I, -4, d + 4)));
    add_check(rep, "least_ci_tuple", "pinned", fmt_ints({2, d + 1}),
              fmt_ints(least_ci_degrees(I)));
    rep.trace = minimal_licci_run(I, std::min(P.max_steps, 2), Rng(P.seed).child(3).next());
    add_check(rep, "terminal", "oracle", "cycle_detected",
              rep.trace.terminal);
    add_identity_checks(rep);
    (void)R;
}

inline void run_thm34_curve(ScenarioReport& rep, const Ring& R, const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    int d = P.d, e = P.e >= 0 ? P.e : 4;
    std::vector<int> tuple = least_ci_degrees(I);
    if (d == 4 && e == 4)
        add_check(rep, "least_ci_tuple", "pinned", "(3,6)", fmt_ints(tuple));
    else
        add_finding(rep, "least_ci_tuple", "oracle", fmt_ints({3, d + 2}), fmt_ints(tuple));

    Ideal C1 = build_line_plus_plane_curve(R, d, P.seed);
    DeficiencyProfile pc = deficiency_profile(I, -4, d + 5);
    DeficiencyProfile p1 = deficiency_profile(C1, -4, d + 5);
    bool shifted = true;
    for (int t = -3; t <= d + 5; ++t)
        if (pc.at(t) != p1.at(t - 1)) shifted = false;
    add_check(rep, "deficiency_shifted_right_of_minimal", "oracle", "shift by 1",
              shifted ? "shift by 1" : "profiles " + fmt_profile(pc) + " vs " + fmt_profile(p1));

    BettiTable B0 = minimal_betti(I);
    rep.trace = minimal_licci_run(I, std::min(P.max_steps, 3), Rng(P.seed).child(3).next());
    bool recurrence = rep.trace.steps.size() >= 2 && rep.trace.steps[1].betti_after == B0;
    add_check(rep, "period_two_betti_recurrence", "pinned", "B2 == B0",
              recurrence ? "B2 == B0" : "no recurrence");
    add_check(rep, "terminal", "pinned", "cycle_detected within 3 double steps",
              rep.trace.terminal == "cycle_detected" && rep.trace.steps.size() <= 6
                  ? "cycle_detected within 3 double steps"
                  : rep.trace.terminal + " after " + std::to_string(rep.trace.steps.size()) +
                        " links");
    add_identity_checks(rep);
}

inline void run_twisted_cubic_points(ScenarioReport& rep, const Ring& R,
                                     const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    if (P.n == 8) {
        add_check(rep, "h_vector", "pinned", "(1,3,3,1)", fmt_lls(hilbert_series(I).h));
        add_check(rep, "betti_table", "oracle",
                  compact_betti(make_betti(
                      {{0, 2, 3}, {0, 3, 2}, {1, 3, 2}, {1, 4, 3}, {2, 6, 1}})),
                  compact_betti(minimal_betti(I)));
        add_check(rep, "least_ci_tuple", "pinned", "(2,2,3)", fmt_ints(least_ci_degrees(I)));
        GorensteinRun run = gorenstein_descent(I, P.max_steps, Rng(P.seed).child(3).next());
        rep.trace = std::move(run.trace);
        const GorensteinDoubleLink& gd = run.rounds.at(0);
        add_check(rep, "residual_h_vector", "pinned", "(1,2,1)",
                  fmt_lls(hilbert_series(gd.intermediate).h));
        add_check(rep, "second_ci_tuple", "pinned", "(1,2,3)", fmt_ints(gd.second.ci_degrees));
        add_check(rep, "deg_u", "pinned", "1", std::to_string(gd.deg_u));
        add_check(rep, "rounds_to_ci", "pinned", "1",
                  rep.trace.terminal == "ci_reached" ? std::to_string(run.rounds.size())
                                                     : rep.trace.terminal);
    } else {
        bool gor = is_gorenstein_codim3(I);
        add_check(rep, "gorenstein", "oracle", "yes", gor ? "yes" : "no");
        if (gor) {
            GorensteinRun run = gorenstein_descent(I, P.max_steps, Rng(P.seed).child(3).next());
            rep.trace = std::move(run.trace);
            add_check(rep, "terminal", "oracle", "ci_reached", rep.trace.terminal);
        }
    }
    add_identity_checks(rep);
    (void)R;
}

inline void run_bd_ex1(ScenarioReport& rep, const Ring& R, const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    add_check(rep, "betti_table", "pinned",
              compact_betti(make_betti({{0, 2, 2}, {0, 3, 2}, {0, 4, 1},
                                        {1, 3, 1}, {1, 4, 2}, {1, 5, 2}, {2, 7, 1}})),
              compact_betti(minimal_betti(I)));
    add_check(rep, "h_vector", "pinned", "(1,3,4,3,1)", fmt_lls(hilbert_series(I).h));
    GorensteinRun run = gorenstein_descent(I, P.max_steps, Rng(P.seed).child(3).next());
    rep.trace = std::move(run.trace);
    const GorensteinDoubleLink& gd = run.rounds.at(0);
    add_check(rep, "first_ci_tuple", "pinned", "(2,3,4)", fmt_ints(gd.first.ci_degrees));
    add_check(rep, "residual_betti", "pinned",
              compact_betti(make_betti({{0, 2, 2}, {0, 3, 1}, {0, 4, 1},
                                        {1, 4, 2}, {1, 5, 2}, {1, 6, 1},
                                        {2, 6, 1}, {2, 7, 1}})),
              compact_betti(gd.first.betti_after));
    add_check(rep, "residual_h_vector", "pinned", "(1,3,4,3,1)",
              fmt_lls(hilbert_series(gd.intermediate).h));
    add_check(rep, "deg_u", "pinned", "2", std::to_string(gd.deg_u));
    add_check(rep, "second_ci_tuple", "pinned", "(2,2,4)", fmt_ints(gd.second.ci_degrees));
    add_check(rep, "final_ci_type", "pinned", "(1,2,2)",
              fmt_ints(minimal_generator_degrees(rep.trace.final_ideal)));
    add_check(rep, "terminal", "pinned", "ci_reached", rep.trace.terminal);
    add_identity_checks(rep);
    (void)R; (void)P;
}

inline void run_bd_ex2(ScenarioReport& rep, const Ring& R, const ScenarioParams& P) {
    Ideal I = rep.trace.final_ideal;
    add_check(rep, "betti_table", "pinned",
              compact_betti(make_betti({{0, 2, 2}, {0, 6, 2}, {0, 10, 1},
                                        {1, 3, 1}, {1, 7, 2}, {1, 11, 2}, {2, 13, 1}})),
              compact_betti(minimal_betti(I)));
    GorensteinRun run = gorenstein_descent(I, P.max_steps, Rng(P.seed).child(3).next());
    rep.trace = std::move(run.trace);
    const GorensteinDoubleLink& gd = run.rounds.at(0);
    add_check(rep, "first_ci_tuple", "pinned", "(2,6,10)", fmt_ints(gd.first.ci_degrees));
    add_check(rep, "residual_betti", "pinned",
              compact_betti(make_betti({{0, 2, 1}, {0, 5, 1}, {0, 6, 1}, {0, 10, 1},
                                        {1, 7, 2}, {1, 11, 2}, {1, 15, 1},
                                        {2, 12, 1}, {2, 16, 1}})),
              compact_betti(gd.first.betti_after));
    add_check(rep, "deg_u", "pinned", "5", std::to_string(gd.deg_u));
    add_check(rep, "deg_u_above_deg_f", "pinned", "5 > 2",
              std::to_string(gd.deg_u) + " > " + std::to_string(gd.first.ci_degrees[0]));
    add_check(rep, "terminal", "pinned", "ci_reached", rep.trace.terminal);
    add_identity_checks(rep);
    (void)R; (void)P;
}

inline void run_be_generic(ScenarioReport& rep, const Ring& R, const ScenarioParams& P) {
    int e = P.e >= 0 ? P.e : 1;
    SkewMatrix M = build_be_matrix(R, P.s, e, P.seed);
    Ideal I = rep.trace.final_ideal;
    add_check(rep, "mu", "oracle", std::to_string(P.s),
              std::to_string(minimal_generator_count(I)));
    if (P.s == 7 && e == 1)
        add_check(rep, "betti_table", "pinned",
                  compact_betti(make_betti({{0, 3, 7}, {1, 4, 7}, {2, 7, 1}})),
                  compact_betti(minimal_betti(I)));
    if (P.s == 5 && e == 1)
        add_check(rep, "betti_table", "oracle",
                  compact_betti(make_betti({{0, 2, 5}, {1, 3, 5}, {2, 5, 1}})),
                  compact_betti(minimal_betti(I)));
    GorensteinRun run = gorenstein_descent(I, P.max_steps, Rng(P.seed).child(3).next());
    rep.trace = std::move(run.trace);
    add_check(rep, "rounds_to_ci", "pinned", std::to_string((P.s - 3) / 2),
              rep.trace.terminal == "ci_reached" ? std::to_string(run.rounds.size())
                                                 : rep.trace.terminal);
    if (P.s == 7 && e == 1) {
        const GorensteinDoubleLink& gd = run.rounds.at(0);
        add_check(rep, "first_ci_tuple", "pinned", "(3,3,3)", fmt_ints(gd.first.ci_degrees));
        add_check(rep, "residual_generator_degrees", "pinned", "(2,3,3,3)",
                  fmt_ints(minimal_generator_degrees(gd.intermediate)));
        add_check(rep, "residual_betti", "pinned",
                  compact_betti(make_betti({{0, 2, 1}, {0, 3, 3}, {1, 5, 7}, {2, 6, 4}})),
                  compact_betti(gd.first.betti_after));
        add_check(rep, "minimal_second_link_mu", "pinned", "5",
                  std::to_string(gd.second.mu_after));
        // links by minimal generators need not drop mu: three general
        // cubics in the residual link it back to an ideal as big as I
        CompleteIntersection cubics =
            sample_ci(gd.intermediate, {3, 3, 3}, Rng(P.seed).child(5).next());
        LinkResult nm = link(gd.intermediate, cubics);
        add_check(rep, "nonminimal_second_link_mu", "pinned", "7",
                  std::to_string(nm.step.mu_after));
        add_check(rep, "nonminimal_second_link_betti", "pinned",
                  compact_betti(make_betti({{0, 3, 7}, {1, 4, 7}, {2, 7, 1}})),
                  compact_betti(nm.step.betti_after));
    }
    add_identity_checks(rep);
    add_pfaffian_identity_checks(rep, M);
}

} // namespace detail

inline ScenarioReport run_scenario(const std::string& name, const ScenarioParams& P) {
    auto t0 = std::chrono::steady_clock::now();
    Ring R(P.prime, 4);
    ScenarioReport rep(name, P, build_scenario(name, P, R));
    if (name == "skew_lines") detail::run_skew_lines(rep, R, P);
    else if (name == "line_plus_plane_curve") detail::run_line_plus_plane_curve(rep, R, P);
    else if (name == "thm34_curve") detail::run_thm34_curve(rep, R, P);
    else if (name == "twisted_cubic_points") detail::run_twisted_cubic_points(rep, R, P);
    else if (name == "bd_ex1") detail::run_bd_ex1(rep, R, P);
    else if (name == "bd_ex2") detail::run_bd_ex2(rep, R, P);
    else if (name == "be_generic") detail::run_be_generic(rep, R, P);
    else throw error("unknown scenario '" + name + "'");
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

inline std::vector<std::string> scenario_names() {
    return {"skew_lines", "line_plus_plane_curve", "thm34_curve", "twisted_cubic_points",
            "bd_ex1", "bd_ex2", "be_generic"};
}

// ------------------------------------------------------------------- output

inline nlohmann::json betti_json(const BettiTable& B) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ij, r] : B.ranks)
        if (r != 0) arr.push_back({ij.first, ij.second, r});
    return arr;
}

inline nlohmann::json profile_json(const DeficiencyProfile& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int t = p.lo; t <= p.hi; ++t)
        if (p.at(t) != 0) arr.push_back({t, p.at(t)});
    return arr;
}

inline nlohmann::json step_json(const LinkStep& s) {
    return {{"ci_degrees", s.ci_degrees},
            {"minimal", s.minimal},
            {"mu_before", s.mu_before},
            {"mu_after", s.mu_after},
            {"degree_before", s.degree_before},
            {"degree_after", s.degree_after},
            {"betti_before", betti_json(s.betti_before)},
            {"betti_after", betti_json(s.betti_after)}};
}

inline nlohmann::json trace_json(const LinkTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const LinkStep& s : t.steps) steps.push_back(step_json(s));
    nlohmann::json gens = nlohmann::json::array();
    for (const Polynomial& g : t.final_ideal.gens()) gens.push_back(g.str());
    return {{"steps", steps}, {"terminal", t.terminal}, {"final_ideal", gens}};
}

inline nlohmann::json report_json(const ScenarioReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const ScenarioCheck& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"basis", c.basis},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    return {{"scenario", rep.scenario},
            {"params",
             {{"d", rep.params.d},
              {"e", rep.params.e},
              {"n", rep.params.n},
              {"s", rep.params.s}}},
            {"prime", rep.params.prime},
            {"seed", rep.params.seed},
            {"trace", trace_json(rep.trace)},
            {"checks", checks},
            {"runtime_ms", rep.runtime_ms},
            {"all_pass", rep.all_pass()}};
}

inline std::string report_text(const ScenarioReport& rep) {
    std::ostringstream os;
    os << "scenario: " << rep.scenario << " (prime=" << rep.params.prime
       << " seed=" << rep.params.seed << ")\n";
    os << "trace: " << rep.trace.terminal << ", " << rep.trace.steps.size() << " links\n";
    for (std::size_t k = 0; k < rep.trace.steps.size(); ++k) {
        const LinkStep& s = rep.trace.steps[k];
        os << "  link " << k + 1 << ": CI " << detail::fmt_ints(s.ci_degrees)
           << (s.minimal ? " minimal" : "") << "  mu " << s.mu_before << "->" << s.mu_after
           << "  deg " << s.degree_before << "->" << s.degree_after << "\n";
    }
    os << "final Betti table:\n" << minimal_betti(rep.trace.final_ideal).str();
    os << "checks:\n";
    for (const ScenarioCheck& c : rep.checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " (" << c.basis
           << "): expected " << c.expected << ", got " << c.actual << "\n";
    os << (rep.all_pass() ? "result: PASS" : "result: FAIL") << " ("
       << std::count_if(rep.checks.begin(), rep.checks.end(),
                        [](const ScenarioCheck& c) { return c.pass; })
       << "/" << rep.checks.size() << " checks, " << rep.runtime_ms << " ms)\n";
    return os.str();
}

} // namespace liaison

#endif
