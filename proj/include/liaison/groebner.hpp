#ifndef LIAISON_GROEBNER_HPP
#define LIAISON_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// Full normal form of f against divisors (head and tail reduced).
/// Divisor choice is the first element, in list order, whose leading
/// monomial divides the current term; with a Groebner basis the result
/// is the canonical remainder regardless of that choice.
/// If sugars is non-null it must parallel divisors, and *sugar_io is
/// updated to the sugar degree of the result.
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& divisors,
                              const std::vector<int>* sugars = nullptr, int* sugar_io = nullptr) {
    const Ring& R = f.ring();
    Polynomial work = f;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Polynomial& g = divisors[k];
            if (g.is_zero() || !g.leading_monomial().divides(lt.mono)) continue;
            Monomial m = lt.mono / g.leading_monomial();
            std::uint32_t c = R.field().div(lt.coeff, g.leading_coeff());
            work = work - g.scaled(c, m);
            if (sugars && sugar_io)
                *sugar_io = std::max(*sugar_io, (*sugars)[k] + m.degree());
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            work = work - Polynomial::monomial(R, lt.mono, lt.coeff);
        }
    }
    return Polynomial(R, std::move(remainder));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Ring& R = f.ring();
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    const PrimeField& F = R.field();
    Polynomial a = f.scaled(F.inv(f.leading_coeff()), L / f.leading_monomial());
    Polynomial b = g.scaled(F.inv(g.leading_coeff()), L / g.leading_monomial());
    return a - b;
}

namespace detail {

struct Pair {
    std::size_t i, j; // i < j
    Monomial lcm;
    int sugar;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria.
/// Selection is normal strategy (smallest lcm in the ring order) with
/// sugar-degree tie-breaking; both together make runs deterministic.
class Buchberger {
public:
    explicit Buchberger(const Ring& ring) : ring_(ring) {}

    void run(const std::vector<Polynomial>& gens) {
        for (const Polynomial& g : gens) {
            int sugar = std::max(0, g.degree());
            Polynomial h = reduce_full(g, basis_, &sugars_, &sugar);
            if (!h.is_zero()) insert(h.monic(), sugar);
        }
        while (!pairs_.empty()) {
            std::size_t best = select();
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + best);
            Polynomial sp = s_polynomial(basis_[pr.i], basis_[pr.j]);
            int sugar = pr.sugar;
            Polynomial h = reduce_full(sp, basis_, &sugars_, &sugar);
            if (!h.is_zero()) insert(h.monic(), sugar);
        }
    }

    /// Canonical reduced basis: pairwise non-divisible leading monomials,
    /// fully tail-reduced, monic, sorted increasingly by leading monomial.
    std::vector<Polynomial> reduced_basis() const {
        std::vector<Polynomial> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                const Monomial &mi = basis_[i].leading_monomial(),
                               &mj = basis_[j].leading_monomial();
                if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            Polynomial r = reduce_full(kept[i], others);
            out.push_back(r.monic());
        }
        std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
            return ring_.cmp(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return out;
    }

    bool saw_unit() const {
        for (const Polynomial& g : basis_)
            if (g.is_constant() && !g.is_zero()) return true;
        return false;
    }

private:
    std::size_t select() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair &a = pairs_[k], &b = pairs_[best];
            int c = ring_.cmp(a.lcm, b.lcm);
            bool better;
            if (c != 0) better = c < 0;
            else if (a.sugar != b.sugar) better = a.sugar < b.sugar;
            else if (a.j != b.j) better = a.j < b.j;
            else better = a.i < b.i;
            if (better) best = k;
        }
        return best;
    }

    void insert(const Polynomial& h, int sugar) {
        std::size_t t = basis_.size();
        basis_.push_back(h);
        sugars_.push_back(sugar);
        const Monomial& lm_t = h.leading_monomial();

        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            Monomial L = lcm(basis_[i].leading_monomial(), lm_t);
            int s = std::max(sugars_[i] + (L / basis_[i].leading_monomial()).degree(),
                             sugar + (L / lm_t).degree());
            fresh.push_back({i, t, L, s});
        }

        // Gebauer-Moeller criterion M: drop a new pair whose lcm is a
        // proper multiple of another new pair's lcm.
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm)
                    drop[a] = true;
            }

        // Criterion F: one representative per lcm value; prefer a pair
        // with coprime leading monomials so the product criterion can
        // discard the whole class.
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            bool class_coprime =
                basis_[fresh[a].i].leading_monomial().coprime_to(lm_t);
            std::size_t rep = a;
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b] || fresh[b].lcm != fresh[a].lcm) continue;
                drop[b] = true;
                if (!class_coprime && basis_[fresh[b].i].leading_monomial().coprime_to(lm_t)) {
                    class_coprime = true;
                }
            }
            if (class_coprime) drop[rep] = true;
        }

        // Criterion B: a surviving old pair is redundant once the new
        // leading monomial divides its lcm strictly inside both chains.
        std::vector<Pair> old_kept;
        for (const Pair& p : pairs_) {
            Monomial Lij = p.lcm;
            if (lm_t.divides(Lij)) {
                Monomial Lit = lcm(basis_[p.i].leading_monomial(), lm_t);
                Monomial Ljt = lcm(basis_[p.j].leading_monomial(), lm_t);
                if (Lit != Lij && Ljt != Lij) continue;
            }
            old_kept.push_back(p);
        }
        pairs_ = std::move(old_kept);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs_.push_back(fresh[a]);
    }

    const Ring& ring_;
    std::vector<Polynomial> basis_;
    std::vector<int> sugars_;
    std::vector<Pair> pairs_;
};

} // namespace detail

/// The unique reduced Groebner basis of the ideal generated by gens,
/// under the ring's monomial order.  Zero generators are ignored; the
/// zero ideal yields an empty basis; a unit ideal yields {1}.
inline std::vector<Polynomial> groebner_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens)
        if (!g.is_zero() && g.ring() != ring) throw error("groebner_basis: mixed rings");
    detail::Buchberger engine(ring);
    engine.run(gens);
    return engine.reduced_basis();
}

} // namespace liaison

#endif
