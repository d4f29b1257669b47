#ifndef LIAISON_HILBERT_HPP
#define LIAISON_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

namespace detail {

using IntPoly = std::vector<long long>; // coefficients of a power of t, index = degree

inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline IntPoly ip_shift(const IntPoly& a, int k) {
    if (a.empty()) return {};
    IntPoly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

/// 1 - t^d
inline IntPoly ip_one_minus_power(int d) {
    IntPoly r(d + 1, 0);
    r[0] = 1;
    r[d] = -1;
    return r;
}

inline long long ip_eval_one(const IntPoly& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return Monomial::cmp_lex(a, b, MAX_VARS) > 0;
    });
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (k.divides(m)) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

/// Numerator of the Hilbert series of R/(monomial ideal), written over
/// (1-t)^{num_vars}: pivot recursion N(L) = N(L + (x)) + t * N(L : x).
inline IntPoly hilbert_numerator_monomial(std::vector<Monomial> gens, int nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_one()) return {};
    // pure powers: product formula
    bool all_pure = true;
    for (const Monomial& m : gens) {
        int support = 0;
        for (int i = 0; i < nvars; ++i)
            if (m.exponent(i) > 0) ++support;
        if (support > 1) { all_pure = false; break; }
    }
    if (all_pure) {
        IntPoly r = {1};
        for (const Monomial& m : gens) r = ip_mul(r, ip_one_minus_power(m.degree()));
        return r;
    }
    // pivot: the most frequent variable among those in a mixed generator
    std::vector<int> freq(nvars, 0);
    std::vector<bool> in_mixed(nvars, false);
    for (const Monomial& m : gens) {
        int support = 0;
        for (int i = 0; i < nvars; ++i)
            if (m.exponent(i) > 0) ++support;
        for (int i = 0; i < nvars; ++i)
            if (m.exponent(i) > 0) {
                ++freq[i];
                if (support > 1) in_mixed[i] = true;
            }
    }
    int pivot = -1;
    for (int i = 0; i < nvars; ++i)
        if (in_mixed[i] && (pivot == -1 || freq[i] > freq[pivot])) pivot = i;

    std::vector<Monomial> plus; // gens of L + (x_pivot)
    plus.push_back(Monomial::variable(pivot));
    std::vector<Monomial> colon; // gens of L : x_pivot
    for (const Monomial& m : gens) {
        if (m.exponent(pivot) == 0) plus.push_back(m);
        Monomial q = m;
        if (q.exponent(pivot) > 0) q.set_exponent(pivot, q.exponent(pivot) - 1);
        colon.push_back(q);
    }
    return ip_add(hilbert_numerator_monomial(std::move(plus), nvars),
                  ip_shift(hilbert_numerator_monomial(std::move(colon), nvars), 1));
}

} // namespace detail

/// Hilbert data of R/I: the numerator over (1-t)^{num_vars}, the reduced
/// numerator (h-polynomial) over (1-t)^{dim}, and the Krull dimension.
struct HilbertSeries {
    std::vector<long long> numerator_full; ///< over (1-t)^{num_vars}
    std::vector<long long> h;              ///< reduced numerator, h(1) != 0 unless unit ideal
    int dim = 0;                           ///< Krull dimension of R/I
    bool unit = false;                     ///< I = (1), so R/I = 0
};

inline HilbertSeries hilbert_series(const Ideal& I) {
    const Ring& R = I.ring();
    if (!I.is_homogeneous()) throw error("hilbert_series: ideal not homogeneous");
    if (R.order() != OrderKind::Grevlex) throw error("hilbert_series: base ring expected");
    std::vector<Monomial> lead;
    for (const Polynomial& g : I.groebner()) lead.push_back(g.leading_monomial());
    HilbertSeries out;
    out.numerator_full = detail::hilbert_numerator_monomial(lead, R.num_vars());
    if (out.numerator_full.empty()) { // unit ideal: series identically zero
        out.unit = true;
        out.h = {};
        out.dim = 0;
        return out;
    }
    detail::IntPoly h = out.numerator_full;
    int removed = 0;
    while (detail::ip_eval_one(h) == 0) {
        // divide by (1 - t): forward substitution, exactness guaranteed
        detail::IntPoly q(h.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            carry += h[i];
            q[i] = carry;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        h = q;
        ++removed;
    }
    out.h = h;
    out.dim = R.num_vars() - removed;
    return out;
}

/// Krull dimension of R/I.
inline int krull_dim(const Ideal& I) { return hilbert_series(I).dim; }

/// Codimension (height) of I; the unit ideal returns num_vars by
/// convention (flagged by HilbertSeries::unit).
inline int codimension(const Ideal& I) {
    HilbertSeries hs = hilbert_series(I);
    if (hs.unit) return I.ring().num_vars();
    return I.ring().num_vars() - hs.dim;
}

/// Degree (multiplicity) of R/I: the reduced numerator evaluated at 1.
inline long long ideal_degree(const Ideal& I) {
    HilbertSeries hs = hilbert_series(I);
    if (hs.unit) return 0;
    return detail::ip_eval_one(hs.h);
}

/// Dimension of the degree-d graded piece of R/I.
inline long long quotient_slice_dim(const Ideal& I, int d) {
    if (d < 0) return 0;
    // expand numerator_full / (1-t)^n up to degree d
    HilbertSeries hs = hilbert_series(I);
    if (hs.unit) return 0;
    int n = I.ring().num_vars();
    std::vector<long long> series(d + 1, 0);
    for (std::size_t i = 0; i < hs.numerator_full.size() && static_cast<int>(i) <= d; ++i)
        series[i] = hs.numerator_full[i];
    // multiply by 1/(1-t) n times: prefix sums
    for (int k = 0; k < n; ++k)
        for (int i = 1; i <= d; ++i) series[i] += series[i - 1];
    return series[d];
}

} // namespace liaison

#endif
