#ifndef LIAISON_FREE_MODULE_HPP
#define LIAISON_FREE_MODULE_HPP

#include <memory>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// A graded free module ⊕ R(-d_i); gen_degrees[i] = d_i is the degree
/// of the i-th generator.
struct GradedFreeModule {
    std::vector<int> gen_degrees;

    int rank() const { return static_cast<int>(gen_degrees.size()); }

    bool operator==(const GradedFreeModule& o) const { return gen_degrees == o.gen_degrees; }
};

/// One term of a free-module element: coeff * mono * e_comp.
struct ModTerm {
    std::uint32_t coeff;
    Monomial mono;
    int comp;
};

using ModVec = std::vector<ModTerm>; // sorted strictly decreasing under a ModuleOrder

/// Monomial order on a free module.  Either position-over-term with the
/// ring order (the base case), or a Schreyer order induced by anchor
/// terms in a parent module: compare images under the anchor map in the
/// parent order, break ties by smaller component index.
class ModuleOrder {
public:
    static std::shared_ptr<const ModuleOrder> pot(Ring ring) {
        auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder);
        o->ring_ = std::move(ring);
        return o;
    }

    static std::shared_ptr<const ModuleOrder> schreyer(
        std::shared_ptr<const ModuleOrder> parent, std::vector<std::pair<Monomial, int>> anchors) {
        auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder);
        o->ring_ = parent->ring_;
        o->parent_ = std::move(parent);
        o->anchors_ = std::move(anchors);
        return o;
    }

    /// +1 if a > b, -1 if a < b, 0 if equal (as module monomials).
    int cmp(const Monomial& am, int ac, const Monomial& bm, int bc) const {
        if (parent_) {
            const auto& A = anchors_[ac];
            const auto& B = anchors_[bc];
            int c = parent_->cmp(am * A.first, A.second, bm * B.first, B.second);
            if (c != 0) return c;
            if (ac != bc) return ac < bc ? 1 : -1;
            return 0;
        }
        if (ac != bc) return ac < bc ? 1 : -1; // position over term
        return ring_.cmp(am, bm);
    }

    int cmp(const ModTerm& a, const ModTerm& b) const { return cmp(a.mono, a.comp, b.mono, b.comp); }

    const Ring& ring() const { return ring_; }

private:
    ModuleOrder() = default;
    Ring ring_;
    std::shared_ptr<const ModuleOrder> parent_;
    std::vector<std::pair<Monomial, int>> anchors_;
};

inline ModVec mod_normalize(const ModuleOrder& ord, ModVec terms) {
    std::sort(terms.begin(), terms.end(),
              [&ord](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
    ModVec out;
    const PrimeField& F = ord.ring().field();
    for (const ModTerm& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
            std::uint32_t s = F.add(out.back().coeff, t.coeff);
            if (s == 0) out.pop_back();
            else out.back().coeff = s;
        } else {
            out.push_back(t);
        }
    }
    return out;
}

inline ModVec mod_add(const ModuleOrder& ord, const ModVec& a, const ModVec& b) {
    const PrimeField& F = ord.ring().field();
    ModVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.cmp(a[i], b[j]);
        if (c > 0) r.push_back(a[i++]);
        else if (c < 0) r.push_back(b[j++]);
        else {
            std::uint32_t s = F.add(a[i].coeff, b[j].coeff);
            if (s != 0) r.push_back({s, a[i].mono, a[i].comp});
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

/// Multiply by c * m (order-preserving for POT and Schreyer orders).
inline ModVec mod_scale(const PrimeField& F, const ModVec& a, std::uint32_t c, const Monomial& m) {
    ModVec r;
    if (c == 0) return r;
    r.reserve(a.size());
    for (const ModTerm& t : a) r.push_back({F.mul(t.coeff, c), t.mono * m, t.comp});
    return r;
}

inline ModVec mod_negate(const PrimeField& F, const ModVec& a) {
    ModVec r;
    r.reserve(a.size());
    for (const ModTerm& t : a) r.push_back({F.neg(t.coeff), t.mono, t.comp});
    return r;
}

inline ModVec mod_sub(const ModuleOrder& ord, const ModVec& a, const ModVec& b) {
    return mod_add(ord, a, mod_negate(ord.ring().field(), b));
}

inline ModVec mod_monic(const PrimeField& F, const ModVec& a) {
    if (a.empty()) return a;
    return mod_scale(F, a, F.inv(a[0].coeff), Monomial::one());
}

/// Degree of a homogeneous module element w.r.t. ambient generator degrees.
inline int mod_degree(const ModVec& a, const std::vector<int>& ambient_degrees) {
    if (a.empty()) return -1;
    return a[0].mono.degree() + ambient_degrees[a[0].comp];
}

inline bool mod_homogeneous(const ModVec& a, const std::vector<int>& ambient_degrees) {
    if (a.empty()) return true;
    int d = mod_degree(a, ambient_degrees);
    for (const ModTerm& t : a)
        if (t.mono.degree() + ambient_degrees[t.comp] != d) return false;
    return true;
}

/// Full normal form of f against basis (same-component divisibility on
/// leading terms, first matching divisor in list order).  If quotients
/// is non-null it receives, per basis element, the polynomial quotient
/// used, so that f = sum quotients[k]*basis[k] + remainder.
inline ModVec mod_reduce(const ModuleOrder& ord, const ModVec& f, const std::vector<ModVec>& basis,
                         std::vector<Polynomial>* quotients = nullptr) {
    const Ring& R = ord.ring();
    const PrimeField& F = R.field();
    if (quotients) quotients->assign(basis.size(), Polynomial::zero(R));
    ModVec work = f;
    ModVec remainder;
    while (!work.empty()) {
        const ModTerm lt = work.front();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].empty()) continue;
            const ModTerm& blt = basis[k].front();
            if (blt.comp != lt.comp || !blt.mono.divides(lt.mono)) continue;
            Monomial m = lt.mono / blt.mono;
            std::uint32_t c = F.div(lt.coeff, blt.coeff);
            work = mod_sub(ord, work, mod_scale(F, basis[k], c, m));
            if (quotients)
                (*quotients)[k] = (*quotients)[k] + Polynomial::monomial(R, m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            work.erase(work.begin());
        }
    }
    return remainder;
}

/// A graded homomorphism between free modules, as a matrix of
/// homogeneous polynomials (entry[i][j]: row i = target component,
/// column j = source generator).
struct GradedMap {
    Ring ring;
    GradedFreeModule source, target;
    std::vector<std::vector<Polynomial>> entry;

    GradedMap() = default;

    GradedMap(Ring r, GradedFreeModule src, GradedFreeModule tgt,
              std::vector<std::vector<Polynomial>> e)
        : ring(std::move(r)), source(std::move(src)), target(std::move(tgt)), entry(std::move(e)) {
        validate();
    }

    void validate() const {
        if (static_cast<int>(entry.size()) != target.rank())
            throw error("GradedMap: row count mismatch");
        for (const auto& row : entry)
            if (static_cast<int>(row.size()) != source.rank())
                throw error("GradedMap: column count mismatch");
        for (int i = 0; i < target.rank(); ++i)
            for (int j = 0; j < source.rank(); ++j) {
                const Polynomial& p = entry[i][j];
                if (p.is_zero()) continue;
                if (!p.is_homogeneous() ||
                    p.degree() != source.gen_degrees[j] - target.gen_degrees[i])
                    throw error("GradedMap: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") violates the grading");
            }
    }

    /// Map given by a single row of polynomials, landing in R = R(0).
    static GradedMap row_map(const Ring& R, const std::vector<Polynomial>& polys) {
        std::vector<int> src;
        for (const Polynomial& p : polys) {
            if (p.is_zero() || !p.is_homogeneous())
                throw error("GradedMap: row_map needs nonzero homogeneous entries");
            src.push_back(p.degree());
        }
        return GradedMap(R, GradedFreeModule{src}, GradedFreeModule{{0}}, {polys});
    }

    ModVec column(const ModuleOrder& ord, int j) const {
        ModVec v;
        for (int i = 0; i < target.rank(); ++i)
            for (const Term& t : entry[i][j].terms()) v.push_back({t.coeff, t.mono, i});
        return mod_normalize(ord, v);
    }

    /// Image of a source vector (given per-source-component coefficients).
    std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const {
        if (static_cast<int>(v.size()) != source.rank())
            throw error("GradedMap: apply length mismatch");
        std::vector<Polynomial> out(target.rank(), Polynomial::zero(ring));
        for (int i = 0; i < target.rank(); ++i)
            for (int j = 0; j < source.rank(); ++j)
                if (!entry[i][j].is_zero() && !v[j].is_zero())
                    out[i] = out[i] + entry[i][j] * v[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& row : entry)
            for (const Polynomial& p : row)
                if (!p.is_zero()) return false;
        return true;
    }
};

/// Matrix product a∘b (a: G -> H, b: F -> G, result F -> H).
inline GradedMap compose(const GradedMap& a, const GradedMap& b) {
    if (!(a.source == b.target)) throw error("compose: modules do not match");
    std::vector<std::vector<Polynomial>> e(
        a.target.rank(), std::vector<Polynomial>(b.source.rank(), Polynomial::zero(a.ring)));
    for (int i = 0; i < a.target.rank(); ++i)
        for (int j = 0; j < b.source.rank(); ++j)
            for (int k = 0; k < a.source.rank(); ++k)
                if (!a.entry[i][k].is_zero() && !b.entry[k][j].is_zero())
                    e[i][j] = e[i][j] + a.entry[i][k] * b.entry[k][j];
    return GradedMap(a.ring, b.source, a.target, std::move(e));
}

} // namespace liaison

#endif
