#ifndef LIAISON_SYZYGY_HPP
#define LIAISON_SYZYGY_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "liaison/free_module.hpp"

namespace liaison {

/// One stage of a Schreyer resolution: a Groebner basis of a submodule
/// of the free module with generator degrees ambient_degrees, under
/// order.  Elements are monic and canonically sorted.
struct SchreyerLevel {
    std::shared_ptr<const ModuleOrder> order;
    std::vector<int> ambient_degrees;
    std::vector<ModVec> elements;
    std::vector<int> degrees; // module degree of each element
};

namespace detail {

/// Sort Groebner elements by leading component, then by leading
/// monomial lexicographically decreasing.  This ordering makes the
/// iterated Schreyer construction terminate within num_vars steps.
inline void sort_for_schreyer(std::vector<ModVec>& els) {
    std::sort(els.begin(), els.end(), [](const ModVec& a, const ModVec& b) {
        if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
        return Monomial::cmp_lex(a.front().mono, b.front().mono, MAX_VARS) > 0;
    });
}

/// Minimalize (drop elements whose lead is a multiple of another lead in
/// the same component) and tail-reduce, keeping a Groebner basis.
inline std::vector<ModVec> interreduce(const ModuleOrder& ord, std::vector<ModVec> els) {
    const PrimeField& F = ord.ring().field();
    std::vector<ModVec> kept;
    for (std::size_t i = 0; i < els.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < els.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModTerm &li = els[i].front(), &lj = els[j].front();
            if (lj.comp == li.comp && lj.mono.divides(li.mono) &&
                (li.mono != lj.mono || j < i))
                redundant = true;
        }
        if (!redundant) kept.push_back(els[i]);
    }
    std::vector<ModVec> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModVec> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModVec r = mod_reduce(ord, kept[i], others);
        out.push_back(mod_monic(F, r));
    }
    return out;
}

} // namespace detail

/// The syzygies of a module Groebner basis, themselves a Groebner basis
/// under the induced Schreyer order: every same-component S-pair is
/// reduced to zero and the recorded cofactors give one syzygy per pair.
inline SchreyerLevel schreyer_syzygies(const SchreyerLevel& cur) {
    const ModuleOrder& ord = *cur.order;
    const Ring& R = ord.ring();
    const PrimeField& F = R.field();
    std::size_t m = cur.elements.size();

    std::vector<std::pair<Monomial, int>> anchors;
    for (const ModVec& g : cur.elements) anchors.push_back({g.front().mono, g.front().comp});
    auto next_order = ModuleOrder::schreyer(cur.order, anchors);

    std::vector<ModVec> syz;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const ModTerm &la = cur.elements[a].front(), &lb = cur.elements[b].front();
            if (la.comp != lb.comp) continue;
            Monomial L = lcm(la.mono, lb.mono);
            Monomial ma = L / la.mono, mb = L / lb.mono;
            ModVec sp = mod_sub(ord, mod_scale(F, cur.elements[a], F.inv(la.coeff), ma),
                                mod_scale(F, cur.elements[b], F.inv(lb.coeff), mb));
            std::vector<Polynomial> q;
            ModVec rem = mod_reduce(ord, sp, cur.elements, &q);
            if (!rem.empty())
                throw error("schreyer_syzygies: input was not a Groebner basis");
            ModVec z;
            z.push_back({F.inv(la.coeff), ma, static_cast<int>(a)});
            z.push_back({F.neg(F.inv(lb.coeff)), mb, static_cast<int>(b)});
            for (std::size_t k = 0; k < m; ++k)
                for (const Term& t : q[k].terms())
                    z.push_back({F.neg(t.coeff), t.mono, static_cast<int>(k)});
            z = mod_normalize(*next_order, z);
            if (!z.empty()) syz.push_back(z);
        }
    }

    syz = detail::interreduce(*next_order, std::move(syz));
    detail::sort_for_schreyer(syz);

    SchreyerLevel next;
    next.order = next_order;
    next.ambient_degrees = cur.degrees;
    for (const ModVec& z : syz) {
        if (!mod_homogeneous(z, next.ambient_degrees))
            throw error("schreyer_syzygies: non-homogeneous syzygy");
        next.degrees.push_back(mod_degree(z, next.ambient_degrees));
    }
    next.elements = std::move(syz);
    return next;
}

namespace detail {

/// Module Groebner basis with cofactor tracking, position-over-term
/// order.  All S-pairs are processed (no pair criteria), so the basis
/// supports exact syzygy extraction afterwards.
struct TrackedBasis {
    std::vector<ModVec> g;
    std::vector<std::vector<Polynomial>> cof; // g[k] = sum_j cof[k][j] * input[j]
};

inline TrackedBasis module_groebner_tracked(const ModuleOrder& ord,
                                            const std::vector<ModVec>& input) {
    const Ring& R = ord.ring();
    const PrimeField& F = R.field();
    TrackedBasis B;
    std::size_t n = input.size();

    auto insert = [&](ModVec f, std::vector<Polynomial> cofrow) -> bool {
        std::vector<Polynomial> q;
        ModVec r = mod_reduce(ord, f, B.g, &q);
        if (r.empty()) return false;
        for (std::size_t k = 0; k < B.g.size(); ++k)
            if (!q[k].is_zero())
                for (std::size_t j = 0; j < n; ++j)
                    cofrow[j] = cofrow[j] - q[k] * B.cof[k][j];
        std::uint32_t inv = F.inv(r.front().coeff);
        r = mod_scale(F, r, inv, Monomial::one());
        Polynomial invp = Polynomial::constant(R, inv);
        for (std::size_t j = 0; j < n; ++j) cofrow[j] = cofrow[j] * invp;
        B.g.push_back(std::move(r));
        B.cof.push_back(std::move(cofrow));
        return true;
    };

    for (std::size_t j = 0; j < n; ++j) {
        if (input[j].empty()) continue;
        std::vector<Polynomial> e(n, Polynomial::zero(R));
        e[j] = Polynomial::constant(R, 1);
        insert(input[j], std::move(e));
    }

    // process all pairs to completion; new elements create new pairs
    for (std::size_t a = 0; a < B.g.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            const ModTerm &la = B.g[a].front(), &lb = B.g[b].front();
            if (la.comp != lb.comp) continue;
            Monomial L = lcm(la.mono, lb.mono);
            ModVec sp = mod_sub(ord, mod_scale(F, B.g[a], 1, L / la.mono),
                                mod_scale(F, B.g[b], 1, L / lb.mono));
            std::vector<Polynomial> zero_cof(n, Polynomial::zero(R));
            for (std::size_t j = 0; j < n; ++j)
                zero_cof[j] = B.cof[a][j].scaled(1, L / la.mono) -
                              B.cof[b][j].scaled(1, L / lb.mono);
            insert(std::move(sp), std::move(zero_cof));
        }
    }
    return B;
}

} // namespace detail

/// Generators of the kernel of phi, returned as a map whose image is
/// exactly ker(phi).  Method: module Groebner basis with cofactor
/// tracking; syzygies of the basis from all S-pairs, mapped back via the
/// cofactors, plus the discrepancies 1 - (division through the basis).
inline GradedMap syzygies(const GradedMap& phi) {
    const Ring& R = phi.ring;
    const PrimeField& F = R.field();
    auto ord = ModuleOrder::pot(R);
    std::size_t n = static_cast<std::size_t>(phi.source.rank());

    std::vector<ModVec> input;
    for (std::size_t j = 0; j < n; ++j) input.push_back(phi.column(*ord, static_cast<int>(j)));

    detail::TrackedBasis B = detail::module_groebner_tracked(*ord, input);

    std::vector<std::vector<Polynomial>> raw; // syzygy vectors in R^n
    auto push_syz = [&](std::vector<Polynomial> z) {
        for (const Polynomial& p : z)
            if (!p.is_zero()) { raw.push_back(std::move(z)); return; }
    };

    // syzygies of the Groebner basis, mapped through the cofactors
    for (std::size_t a = 0; a < B.g.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            const ModTerm &la = B.g[a].front(), &lb = B.g[b].front();
            if (la.comp != lb.comp) continue;
            Monomial L = lcm(la.mono, lb.mono);
            Monomial ma = L / la.mono, mb = L / lb.mono;
            ModVec sp = mod_sub(*ord, mod_scale(F, B.g[a], 1, ma),
                                mod_scale(F, B.g[b], 1, mb));
            std::vector<Polynomial> q;
            ModVec rem = mod_reduce(*ord, sp, B.g, &q);
            if (!rem.empty()) throw error("syzygies: completed basis failed an S-pair");
            std::vector<Polynomial> z(n, Polynomial::zero(R));
            for (std::size_t j = 0; j < n; ++j) {
                z[j] = B.cof[a][j].scaled(1, ma) - B.cof[b][j].scaled(1, mb);
                for (std::size_t k = 0; k < B.g.size(); ++k)
                    if (!q[k].is_zero()) z[j] = z[j] - q[k] * B.cof[k][j];
            }
            push_syz(std::move(z));
        }
    }

    // discrepancy syzygies: e_j minus the division of column j
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Polynomial> z(n, Polynomial::zero(R));
        z[j] = Polynomial::constant(R, 1);
        if (!input[j].empty()) {
            std::vector<Polynomial> q;
            ModVec rem = mod_reduce(*ord, input[j], B.g, &q);
            if (!rem.empty()) throw error("syzygies: column escaped its own module");
            for (std::size_t k = 0; k < B.g.size(); ++k)
                for (std::size_t i = 0; i < n; ++i)
                    if (!q[k].is_zero()) z[i] = z[i] - q[k] * B.cof[k][i];
        }
        push_syz(std::move(z));
    }

    std::vector<int> src_degrees;
    std::vector<std::vector<Polynomial>> entries(n);
    for (const auto& z : raw) {
        int d = -1;
        for (std::size_t j = 0; j < n; ++j)
            if (!z[j].is_zero()) {
                if (!z[j].is_homogeneous()) throw error("syzygies: non-homogeneous output");
                int dj = z[j].degree() + phi.source.gen_degrees[j];
                if (d == -1) d = dj;
                else if (d != dj) throw error("syzygies: mixed-degree output");
            }
        src_degrees.push_back(d);
        for (std::size_t j = 0; j < n; ++j) entries[j].push_back(z[j]);
    }
    return GradedMap(R, GradedFreeModule{src_degrees}, phi.source, std::move(entries));
}

} // namespace liaison

#endif
