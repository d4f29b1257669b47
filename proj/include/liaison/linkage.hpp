#ifndef LIAISON_LINKAGE_HPP
#define LIAISON_LINKAGE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "liaison/resolution.hpp"

namespace liaison {

/// A complete intersection given by an ordered regular sequence of
/// homogeneous forms.
struct CompleteIntersection {
    std::vector<Polynomial> forms;

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const Polynomial& f : forms) d.push_back(f.degree());
        return d;
    }

    Ideal ideal() const {
        if (forms.empty()) throw error("CompleteIntersection: no forms");
        return Ideal(forms[0].ring(), forms);
    }

    long long degree_product() const {
        long long p = 1;
        for (const Polynomial& f : forms) p *= f.degree();
        return p;
    }
};

/// codim test: a sequence of nonzero homogeneous forms is regular
/// exactly when the ideal it generates has codimension equal to its
/// length.
inline bool is_regular_sequence(const std::vector<Polynomial>& forms) {
    if (forms.empty()) return true;
    const Ring& R = forms[0].ring();
    for (const Polynomial& f : forms)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) return false;
    if (static_cast<int>(forms.size()) > R.num_vars()) return false;
    return codimension(Ideal(R, forms)) == static_cast<int>(forms.size());
}

/// The least degree tuple (a_1 <= ... <= a_c) realizable by a complete
/// intersection of minimal generators inside I: a_i is the smallest t
/// such that the minimal generators of degree <= t already generate an
/// ideal of codimension >= i.  Deterministic; over a large field,
/// general forms of those degrees realize the tuple.
inline std::vector<int> least_ci_degrees(const Ideal& I, int c = -1) {
    if (!I.is_proper()) throw error("least_ci_degrees: ideal must be proper and nonzero");
    if (!I.is_homogeneous()) throw error("least_ci_degrees: ideal not homogeneous");
    int cod = codimension(I);
    if (c == -1) c = cod;
    if (c < 1 || c > cod)
        throw error("least_ci_degrees: requested length " + std::to_string(c) +
                    " exceeds codimension " + std::to_string(cod));
    std::vector<Polynomial> mg = minimal_generators(I);
    std::vector<int> degs;
    for (const Polynomial& g : mg) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());

    std::vector<int> cod_at; // codimension of the subideal generated up to degree t
    for (int t : degs) {
        std::vector<Polynomial> sub;
        for (const Polynomial& g : mg)
            if (g.degree() <= t) sub.push_back(g);
        cod_at.push_back(codimension(Ideal(I.ring(), sub)));
    }
    std::vector<int> out;
    for (int i = 1; i <= c; ++i) {
        bool found = false;
        for (std::size_t k = 0; k < degs.size(); ++k)
            if (cod_at[k] >= i) { out.push_back(degs[k]); found = true; break; }
        if (!found) throw error("least_ci_degrees: internal inconsistency");
    }
    return out;
}

/// Sample a complete intersection of the given degrees inside I:
/// each form is a random element of the degree slice, required to be a
/// minimal generator of I (nonzero modulo m*I plus the previous picks
/// of the same degree) and to extend the regular sequence.  Bounded
/// deterministic retries; throws with diagnostics on exhaustion.
inline CompleteIntersection sample_ci(const Ideal& I, const std::vector<int>& degrees,
                                      std::uint64_t seed) {
    const Ring& R = I.ring();
    if (!I.is_proper() || !I.is_homogeneous())
        throw error("sample_ci: ideal must be proper, nonzero and homogeneous");
    if (degrees.empty()) throw error("sample_ci: empty degree tuple");
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        throw error("sample_ci: degree tuple must be non-decreasing");
    int cod = codimension(I);
    if (static_cast<int>(degrees.size()) > cod)
        throw error("sample_ci: tuple longer than the codimension");

    Rng root(seed);
    std::vector<Polynomial> chosen;

    for (std::size_t i = 0; i < degrees.size(); ++i) {
        int d = degrees[i];
        std::vector<Polynomial> slice = degree_slice_basis(I, d);
        if (slice.empty())
            throw error("sample_ci: I has no elements in degree " + std::to_string(d));
        std::vector<Monomial> basis = R.monomials_of_degree(d);
        RowSpace avoid(R.field(), basis.size());
        for (const Polynomial& b : degree_slice_basis(I, d - 1))
            for (int k = 0; k < R.num_vars(); ++k)
                avoid.add(detail::poly_to_vector(R, basis, b.scaled(1, Monomial::variable(k))));
        for (const Polynomial& prev : chosen)
            if (prev.degree() == d)
                avoid.add(detail::poly_to_vector(R, basis, prev));

        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            Rng rng = root.child(i * 101 + attempt);
            Polynomial f = Polynomial::zero(R);
            for (const Polynomial& b : slice)
                f = f + b * static_cast<std::int64_t>(rng.below(R.characteristic()));
            if (f.is_zero()) continue;
            if (avoid.contains(detail::poly_to_vector(R, basis, f))) continue;
            std::vector<Polynomial> trial = chosen;
            trial.push_back(f);
            if (codimension(Ideal(R, trial)) != static_cast<int>(trial.size())) continue;
            chosen.push_back(f);
            placed = true;
        }
        if (!placed) {
            std::string tuple;
            for (int t : degrees) tuple += (tuple.empty() ? "" : ",") + std::to_string(t);
            throw error("sample_ci: no valid form at position " + std::to_string(i + 1) +
                        " of degree tuple (" + tuple + ") after 64 attempts; degree " +
                        std::to_string(d) + " elements of I cannot extend the sequence");
        }
    }
    return CompleteIntersection{chosen};
}

/// Record of one liaison step.
struct LinkStep {
    std::vector<int> ci_degrees;
    std::vector<Polynomial> ci_forms;
    bool minimal = false;
    int mu_before = 0, mu_after = 0;
    long long degree_before = 0, degree_after = 0;
    BettiTable betti_before, betti_after;
};

struct LinkResult {
    Ideal residual;
    LinkStep step;
};

/// Link I by the complete intersection ci contained in it: the residual
/// is ci : I.  Verifies the containment, the regularity of ci, equal
/// codimension, and the degree bookkeeping
/// deg(I) + deg(residual) = prod(ci degrees).
inline LinkResult link(const Ideal& I, const CompleteIntersection& ci) {
    if (!I.is_proper() || !I.is_homogeneous())
        throw error("link: ideal must be proper, nonzero and homogeneous");
    int c = static_cast<int>(ci.forms.size());
    for (const Polynomial& f : ci.forms)
        if (!I.contains(f)) throw error("link: complete intersection not contained in the ideal");
    if (!is_regular_sequence(ci.forms))
        throw error("link: the given forms are not a regular sequence");
    if (codimension(I) != c)
        throw error("link: codimension of I (" + std::to_string(codimension(I)) +
                    ") differs from the length of the regular sequence (" + std::to_string(c) +
                    ")");
    Ideal cideal = ci.ideal();
    if (cideal == I) throw error("link: I equals the complete intersection; residual is the unit ideal");

    LinkStep step;
    step.ci_degrees = ci.degrees();
    step.ci_forms = ci.forms;
    step.minimal = (step.ci_degrees == least_ci_degrees(I, c));
    step.betti_before = minimal_betti(I);
    step.mu_before = step.betti_before.total(0);
    step.degree_before = ideal_degree(I);

    Ideal J = ideal_quotient(cideal, I);
    if (!J.is_proper()) throw error("link: residual is not proper");

    step.betti_after = minimal_betti(J);
    step.mu_after = step.betti_after.total(0);
    step.degree_after = ideal_degree(J);
    if (step.degree_before + step.degree_after != ci.degree_product())
        throw error("link: degree bookkeeping failed: " + std::to_string(step.degree_before) +
                    " + " + std::to_string(step.degree_after) +
                    " != " + std::to_string(ci.degree_product()));
    return {J, step};
}

/// Link by a sampled complete intersection of least degrees.
inline LinkResult minimal_link(const Ideal& I, std::uint64_t seed) {
    std::vector<int> tuple = least_ci_degrees(I);
    CompleteIntersection ci = sample_ci(I, tuple, seed);
    LinkResult r = link(I, ci);
    r.step.minimal = true;
    return r;
}

/// Basic double link: ell*I + (f) for f in I with (ell, f) a regular
/// sequence.  Checks saturation of the input and output and the degree
/// bookkeeping deg(out) = deg(I) + deg(f)*deg(ell).
inline Ideal basic_double_link(const Ideal& I, const Polynomial& f, const Polynomial& ell) {
    const Ring& R = I.ring();
    if (!I.is_proper() || !I.is_homogeneous())
        throw error("basic_double_link: ideal must be proper, nonzero and homogeneous");
    if (f.is_zero() || !f.is_homogeneous() || !I.contains(f))
        throw error("basic_double_link: f must be a nonzero homogeneous element of I");
    if (ell.is_zero() || !ell.is_homogeneous() || ell.degree() < 1)
        throw error("basic_double_link: ell must be a form of positive degree");
    if (!is_regular_sequence({ell, f}))
        throw error("basic_double_link: (ell, f) is not a regular sequence");
    if (!is_saturated(I)) throw error("basic_double_link: input ideal is not saturated");

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(ell * g);
    gens.push_back(f);
    Ideal out(R, std::move(gens));
    if (!is_saturated(out)) throw error("basic_double_link: output failed the saturation check");
    if (ideal_degree(out) !=
        ideal_degree(I) + static_cast<long long>(f.degree()) * ell.degree())
        throw error("basic_double_link: degree bookkeeping failed");
    return out;
}

/// Full trace of an iterated minimal-linkage run.  chain[k] is the
/// ideal after k links (chain[0] is the starting ideal).
struct LinkTrace {
    std::vector<LinkStep> steps;
    std::string terminal; // "ci_reached" | "cycle_detected" | "step_limit"
    std::vector<Ideal> chain;
    Ideal final_ideal;

    explicit LinkTrace(Ideal start) : chain{start}, final_ideal(std::move(start)) {}
};

/// Iterate minimal links until a complete intersection is reached, the
/// Betti tables repeat with period two (checked at even link counts),
/// or the double-step budget is exhausted.
inline LinkTrace minimal_licci_run(const Ideal& I, int max_double_steps, std::uint64_t seed) {
    LinkTrace trace(I);
    Rng root(seed);
    std::vector<BettiTable> bettis;
    BettiTable b0 = minimal_betti(I);
    bettis.push_back(b0);
    Ideal cur = I;
    if (betti_mu(b0) == codimension(I)) {
        trace.terminal = "ci_reached";
        return trace;
    }
    for (;;) {
        if (static_cast<int>(trace.steps.size()) >= 2 * max_double_steps) {
            trace.terminal = "step_limit";
            return trace;
        }
        LinkResult lr = minimal_link(cur, root.child(trace.steps.size() + 1).next());
        cur = lr.residual;
        trace.steps.push_back(lr.step);
        trace.chain.push_back(cur);
        trace.final_ideal = cur;
        bettis.push_back(lr.step.betti_after);
        if (lr.step.mu_after == codimension(cur)) {
            trace.terminal = "ci_reached";
            return trace;
        }
        std::size_t k = trace.steps.size();
        if (k % 2 == 0 && bettis[k] == bettis[k - 2]) {
            trace.terminal = "cycle_detected";
            return trace;
        }
    }
}

/// Record of a Gorenstein double minimal link (mu drops by exactly 2).
struct GorensteinDoubleLink {
    LinkStep first, second;
    Ideal intermediate, result;
    Polynomial u;
    int deg_u = 0;
    int mu_start = 0, mu_end = 0;
    long long ci_sum_first = 0, ci_sum_second = 0;
    bool claim_deg_u_lt_second = false; // deg u < second entry of the first tuple
    bool claim_uf_regular = false;      // (u, f) is a regular sequence

    explicit GorensteinDoubleLink(const Ring& R)
        : intermediate(Ideal::zero(R)), result(Ideal::zero(R)), u(Polynomial::zero(R)) {}
};

inline GorensteinDoubleLink gorenstein_double_link(const Ideal& I, std::uint64_t seed) {
    const Ring& R = I.ring();
    if (!is_gorenstein_codim3(I))
        throw error("gorenstein_double_link: input is not Gorenstein of codimension 3");
    GorensteinDoubleLink out(R);
    out.mu_start = minimal_generator_count(I);
    if (out.mu_start == 3)
        throw error("gorenstein_double_link: input is already a complete intersection");

    Rng root(seed);
    CompleteIntersection ci = sample_ci(I, least_ci_degrees(I), root.child(1).next());
    LinkResult first = link(I, ci);
    first.step.minimal = true;
    out.first = first.step;
    out.intermediate = first.residual;
    out.ci_sum_first = std::accumulate(out.first.ci_degrees.begin(),
                                       out.first.ci_degrees.end(), 0LL);
    const Ideal& J = first.residual;
    Ideal ci_ideal = ci.ideal();

    std::vector<int> jdegs;
    for (const Polynomial& g : minimal_generators(J)) jdegs.push_back(g.degree());
    std::sort(jdegs.begin(), jdegs.end());
    std::vector<int> distinct = jdegs;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    Polynomial u = Polynomial::zero(R);
    int total_deficit = 0;
    for (int d : distinct) {
        std::vector<Monomial> basis = R.monomials_of_degree(d);
        RowSpace span(R.field(), basis.size());
        for (const Polynomial& b : degree_slice_basis(J, d - 1))
            for (int k = 0; k < R.num_vars(); ++k)
                span.add(detail::poly_to_vector(R, basis, b.scaled(1, Monomial::variable(k))));
        for (const Polynomial& b : degree_slice_basis(ci_ideal, d))
            span.add(detail::poly_to_vector(R, basis, b));
        for (const Polynomial& cand : degree_slice_basis(J, d)) {
            std::vector<std::uint32_t> v = detail::poly_to_vector(R, basis, cand);
            if (span.add(v)) {
                ++total_deficit;
                if (total_deficit == 1) {
                    u = cand;
                    out.deg_u = d;
                }
            }
        }
    }
    if (total_deficit != 1)
        throw error("gorenstein_double_link: residual is not (f,g,h,u) with a single extra "
                    "generator (deficit " + std::to_string(total_deficit) + ")");
    out.u = u;
    {
        std::vector<Polynomial> four = ci.forms;
        four.push_back(u);
        if (Ideal(R, four) != J)
            throw error("gorenstein_double_link: (f,g,h,u) does not reproduce the residual");
    }

    out.claim_deg_u_lt_second = out.deg_u < out.first.ci_degrees[1];
    if (!out.claim_deg_u_lt_second)
        throw error("gorenstein_double_link: deg u = " + std::to_string(out.deg_u) +
                    " is not below the second CI degree " +
                    std::to_string(out.first.ci_degrees[1]));
    out.claim_uf_regular = is_regular_sequence({u, ci.forms[0]});
    if (!out.claim_uf_regular)
        throw error("gorenstein_double_link: (u, f) is not a regular sequence");

    LinkResult second = minimal_link(J, root.child(2).next());
    out.second = second.step;
    out.result = second.residual;
    out.ci_sum_second = std::accumulate(out.second.ci_degrees.begin(),
                                        out.second.ci_degrees.end(), 0LL);
    out.mu_end = second.step.mu_after;

    if (out.mu_end != out.mu_start - 2)
        throw error("gorenstein_double_link: mu went " + std::to_string(out.mu_start) + " -> " +
                    std::to_string(out.mu_end) + ", expected a drop by exactly 2");
    if (!is_gorenstein_codim3(out.result))
        throw error("gorenstein_double_link: result is not Gorenstein of codimension 3");
    if (!(out.ci_sum_second < out.ci_sum_first))
        throw error("gorenstein_double_link: CI degree sums did not strictly decrease (" +
                    std::to_string(out.ci_sum_first) + " -> " +
                    std::to_string(out.ci_sum_second) + ")");
    return out;
}

} // namespace liaison

#endif
