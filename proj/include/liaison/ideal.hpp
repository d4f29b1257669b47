#ifndef LIAISON_IDEAL_HPP
#define LIAISON_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/linalg.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

/// A polynomial ideal given by generators.  The reduced Groebner basis
/// is computed lazily, once per value, and shared by copies; after
/// publication it is never mutated, so Ideal values are safe to share
/// across threads read-only.
class Ideal {
public:
    Ideal() = default;

    Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        for (Polynomial& g : gens) {
            if (g.is_zero()) continue;
            if (g.ring() != ring_) throw error("Ideal: generator from a different ring");
            gens_.push_back(std::move(g));
        }
        slot_ = std::make_shared<Slot>();
    }

    static Ideal zero(const Ring& r) { return Ideal(r, {}); }
    static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::constant(r, 1)}); }

    /// The irrelevant maximal ideal (x0..x{n-1}).
    static Ideal irrelevant(const Ring& r) {
        std::vector<Polynomial> v;
        for (int i = 0; i < r.num_vars(); ++i) v.push_back(Polynomial::variable(r, i));
        return Ideal(r, v);
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    bool is_homogeneous() const {
        for (const Polynomial& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    /// The reduced Groebner basis (canonical for the ring's order).
    const std::vector<Polynomial>& groebner() const {
        if (!slot_) throw error("Ideal: uninitialized");
        std::call_once(slot_->flag, [this] { slot_->basis = groebner_basis(ring_, gens_); });
        return slot_->basis;
    }

    bool is_zero() const { return groebner().empty(); }
    bool is_unit() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_constant();
    }
    bool is_proper() const { return !is_zero() && !is_unit(); }

    Polynomial normal_form(const Polynomial& f) const { return reduce_full(f, groebner()); }
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool contains_ideal(const Ideal& J) const {
        for (const Polynomial& g : J.gens_)
            if (!contains(g)) return false;
        return true;
    }

    /// Equality of ideals = equality of reduced Groebner bases.
    bool operator==(const Ideal& o) const {
        if (ring_ != o.ring_) return false;
        const auto &a = groebner(), &b = o.groebner();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

private:
    struct Slot {
        std::once_flag flag;
        std::vector<Polynomial> basis;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Slot> slot_;
};

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw error("ideal_sum: mixed rings");
    std::vector<Polynomial> gens = I.gens();
    for (const Polynomial& g : J.gens()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

/// The ideal f*I (every generator multiplied by f).
inline Ideal ideal_scale(const Polynomial& f, const Ideal& I) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(f * g);
    return Ideal(I.ring(), std::move(gens));
}

/// Intersection by elimination: tag I with the auxiliary variable t,
/// J with 1-t, compute a Groebner basis under the block order that
/// eliminates t, and keep the t-free elements.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    const Ring& R = I.ring();
    if (R != J.ring()) throw error("intersect: mixed rings");
    if (I.is_zero() || J.is_zero()) return Ideal::zero(R);
    Ring ext = R.extended();
    int t = R.num_vars();
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
    std::vector<Polynomial> K;
    for (const Polynomial& f : I.gens()) K.push_back(tv * f.to_extended(ext));
    for (const Polynomial& g : J.gens()) K.push_back(one_minus_t * g.to_extended(ext));
    std::vector<Polynomial> gb = groebner_basis(ext, K);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb) {
        bool free_of_t = true;
        for (const Term& term : g.terms())
            if (term.mono.exponent(t) != 0) { free_of_t = false; break; }
        if (free_of_t) kept.push_back(g.from_extended(R));
    }
    return Ideal(R, std::move(kept));
}

/// I : (g) for a single polynomial, via (I meet (g)) / g.
inline Ideal quotient_by_element(const Ideal& I, const Polynomial& g) {
    const Ring& R = I.ring();
    if (g.is_zero()) return Ideal::unit(R);
    if (g.is_constant()) return I;
    if (I.is_zero()) return Ideal::zero(R);
    Ideal meet = intersect(I, Ideal(R, {g}));
    std::vector<Polynomial> gens;
    for (const Polynomial& h : meet.gens()) gens.push_back(h.exact_div(g));
    return Ideal(R, std::move(gens));
}

/// Ideal quotient I : J, as the intersection of I : (g) over the
/// generators g of J.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    const Ring& R = I.ring();
    if (R != J.ring()) throw error("ideal_quotient: mixed rings");
    if (J.gens().empty()) return Ideal::unit(R);
    bool first = true;
    Ideal acc;
    for (const Polynomial& g : J.gens()) {
        Ideal q = quotient_by_element(I, g);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

/// Saturation I : J^inf by iterated quotients; stabilization is
/// detected by reduced-basis equality and must occur within 50 rounds.
inline Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int round = 0; round < 50; ++round) {
        Ideal next = ideal_quotient(cur, J);
        if (next == cur) return cur;
        cur = next;
    }
    throw error("saturate: no stabilization within 50 quotient rounds");
}

inline bool is_saturated(const Ideal& I) {
    return ideal_quotient(I, Ideal::irrelevant(I.ring())) == I;
}

namespace detail {

/// Index of m in the decreasing list of degree-d monomials.
inline std::size_t monomial_index(const Ring& R, const std::vector<Monomial>& basis,
                                  const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [&R](const Monomial& a, const Monomial& b) {
                                   return R.cmp(a, b) > 0;
                               });
    if (it == basis.end() || *it != m) throw error("monomial_index: monomial not in slice basis");
    return static_cast<std::size_t>(it - basis.begin());
}

inline std::vector<std::uint32_t> poly_to_vector(const Ring& R,
                                                 const std::vector<Monomial>& basis,
                                                 const Polynomial& p) {
    std::vector<std::uint32_t> v(basis.size(), 0);
    for (const Term& t : p.terms()) v[monomial_index(R, basis, t.mono)] = t.coeff;
    return v;
}

inline Polynomial vector_to_poly(const Ring& R, const std::vector<Monomial>& basis,
                                 const std::vector<std::uint32_t>& v) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (v[j] != 0) terms.push_back({v[j], basis[j]});
    return Polynomial(R, std::move(terms));
}

} // namespace detail

/// Canonical basis of the degree-d slice of I (row-reduced echelon form
/// over the decreasing monomial basis of R_d).
inline std::vector<Polynomial> degree_slice_basis(const Ideal& I, int d) {
    const Ring& R = I.ring();
    if (!I.is_homogeneous()) throw error("degree_slice_basis: ideal not homogeneous");
    if (d < 0) return {};
    std::vector<Monomial> basis = R.monomials_of_degree(d);
    RowSpace space(R.field(), basis.size());
    for (const Polynomial& g : I.gens()) {
        int dg = g.degree();
        if (dg < 0 || dg > d) continue;
        for (const Monomial& m : R.monomials_of_degree(d - dg))
            space.add(detail::poly_to_vector(R, basis, g.scaled(1, m)));
    }
    std::vector<Polynomial> out;
    for (const auto& row : space.rows()) out.push_back(detail::vector_to_poly(R, basis, row));
    return out;
}

/// Canonical minimal generating set: in each degree d, echelon
/// representatives of I_d modulo m*I_d (graded Nakayama).
inline std::vector<Polynomial> minimal_generators(const Ideal& I) {
    const Ring& R = I.ring();
    if (!I.is_homogeneous()) throw error("minimal_generators: ideal not homogeneous");
    std::vector<int> degrees;
    for (const Polynomial& g : I.gens()) degrees.push_back(g.degree());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<Polynomial> out;
    for (int d : degrees) {
        std::vector<Monomial> basis = R.monomials_of_degree(d);
        RowSpace seen(R.field(), basis.size());
        for (const Polynomial& b : degree_slice_basis(I, d - 1))
            for (int k = 0; k < R.num_vars(); ++k)
                seen.add(detail::poly_to_vector(R, basis, b.scaled(1, Monomial::variable(k))));
        for (const Polynomial& cand : degree_slice_basis(I, d)) {
            std::vector<std::uint32_t> v = detail::poly_to_vector(R, basis, cand);
            if (seen.add(v)) out.push_back(cand);
        }
    }
    return out;
}

/// Number of minimal generators.
inline int minimal_generator_count(const Ideal& I) {
    return static_cast<int>(minimal_generators(I).size());
}

/// Sorted multiset of minimal generator degrees.
inline std::vector<int> minimal_generator_degrees(const Ideal& I) {
    std::vector<int> out;
    for (const Polynomial& g : minimal_generators(I)) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace liaison

#endif
