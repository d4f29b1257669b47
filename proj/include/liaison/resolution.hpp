#ifndef LIAISON_RESOLUTION_HPP
#define LIAISON_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/hilbert.hpp"
#include "liaison/syzygy.hpp"

namespace liaison {

/// Graded Betti numbers of R/I, re-indexed so that row i = 0 describes
/// the minimal generators of the ideal I itself (homological degree 1
/// of R/I).  ranks[(i, j)] = beta_{i,j}, all entries positive.
struct BettiTable {
    std::map<std::pair<int, int>, int> ranks;

    bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

    int rank(int i, int j) const {
        auto it = ranks.find({i, j});
        return it == ranks.end() ? 0 : it->second;
    }

    /// Total rank of the i-th step.
    int total(int i) const {
        int s = 0;
        for (const auto& [k, v] : ranks)
            if (k.first == i) s += v;
        return s;
    }

    /// Sorted multiset of twists in step i.
    std::vector<int> degrees(int i) const {
        std::vector<int> out;
        for (const auto& [k, v] : ranks)
            if (k.first == i)
                for (int c = 0; c < v; ++c) out.push_back(k.second);
        return out;
    }

    /// Length = largest step index with a nonzero entry, -1 if empty.
    int length() const {
        int L = -1;
        for (const auto& [k, v] : ranks) L = std::max(L, k.first);
        return L;
    }

    /// Macaulay-style diagram: rows indexed by j - i, columns by i.
    std::string str() const {
        if (ranks.empty()) return "(empty Betti table)\n";
        int imax = length(), rmin = 1 << 30, rmax = -(1 << 30);
        for (const auto& [k, v] : ranks) {
            rmin = std::min(rmin, k.second - k.first);
            rmax = std::max(rmax, k.second - k.first);
        }
        std::ostringstream os;
        os << "      ";
        for (int i = 0; i <= imax; ++i) os << " " << i << "    ";
        os << "\n";
        for (int r = rmin; r <= rmax; ++r) {
            os << (r < 10 ? " " : "") << r << ":  ";
            for (int i = 0; i <= imax; ++i) {
                int v = rank(i, i + r);
                std::string cell = v ? std::to_string(v) : ".";
                os << "  " << cell << std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ');
            }
            os << "\n";
        }
        return os.str();
    }
};

/// A graded free resolution of R/I:
///   modules[0] = R <- modules[1] <- ... <- modules[len],
/// maps[k]: modules[k+1] -> modules[k].
struct FreeResolution {
    Ring ring;
    std::vector<GradedFreeModule> modules;
    std::vector<GradedMap> maps;
    bool minimal = false;

    int length() const { return static_cast<int>(maps.size()); }

    void check_complex() const {
        for (std::size_t k = 0; k + 1 < maps.size(); ++k)
            if (!compose(maps[k], maps[k + 1]).is_zero())
                throw error("FreeResolution: d" + std::to_string(k + 1) + " o d" +
                            std::to_string(k + 2) + " != 0");
    }

    /// Betti table (valid once minimal).
    BettiTable betti() const {
        BettiTable t;
        for (std::size_t k = 1; k < modules.size(); ++k)
            for (int d : modules[k].gen_degrees) ++t.ranks[{static_cast<int>(k) - 1, d}];
        return t;
    }

    /// Alternating sum of twist polynomials: K-polynomial of R/I, equal
    /// to the Hilbert numerator over (1-t)^{num_vars}.
    std::vector<long long> k_polynomial() const {
        std::vector<long long> out;
        int sign = 1;
        for (const GradedFreeModule& M : modules) {
            for (int d : M.gen_degrees) {
                if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
                out[d] += sign;
            }
            sign = -sign;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

/// Non-minimal free resolution of R/I by iterated Schreyer syzygies on
/// the reduced Groebner basis, levels sorted for termination within
/// num_vars + 1 steps.
inline FreeResolution free_resolution(const Ideal& I) {
    const Ring& R = I.ring();
    if (!I.is_homogeneous()) throw error("free_resolution: ideal not homogeneous");
    FreeResolution res;
    res.ring = R;
    res.modules.push_back(GradedFreeModule{{0}});
    const std::vector<Polynomial>& gb = I.groebner();
    if (gb.empty()) { res.minimal = true; return res; }

    SchreyerLevel level;
    level.order = ModuleOrder::pot(R);
    level.ambient_degrees = {0};
    std::vector<ModVec> els;
    for (const Polynomial& g : gb) {
        ModVec v;
        for (const Term& t : g.terms()) v.push_back({t.coeff, t.mono, 0});
        els.push_back(std::move(v));
    }
    detail::sort_for_schreyer(els);
    for (const ModVec& v : els) level.degrees.push_back(v.front().mono.degree());
    level.elements = std::move(els);

    for (;;) {
        // register the level as a module plus the map into the previous one
        res.modules.push_back(GradedFreeModule{level.degrees});
        int tgt_rank = res.modules[res.modules.size() - 2].rank();
        std::vector<std::vector<Polynomial>> entries(
            tgt_rank, std::vector<Polynomial>(level.elements.size(), Polynomial::zero(R)));
        for (std::size_t j = 0; j < level.elements.size(); ++j)
            for (const ModTerm& t : level.elements[j]) {
                entries[t.comp][j] =
                    entries[t.comp][j] + Polynomial::monomial(R, t.mono, t.coeff);
            }
        res.maps.push_back(GradedMap(R, res.modules.back(),
                                     res.modules[res.modules.size() - 2], std::move(entries)));

        SchreyerLevel next = schreyer_syzygies(level);
        if (next.elements.empty()) break;
        if (res.length() > R.num_vars() + 1)
            throw error("free_resolution: Schreyer iteration exceeded the variable bound");
        level = std::move(next);
    }
    res.check_complex();
    return res;
}

/// Minimization by cancelling unit entries (Schur complement on the map
/// containing the unit, plain row/column deletion on its neighbours),
/// then canonical degree-sorting of every module.
inline FreeResolution minimize(const FreeResolution& input) {
    const Ring& R = input.ring;
    const PrimeField& F = R.field();
    std::vector<std::vector<int>> degs;
    for (const GradedFreeModule& M : input.modules) degs.push_back(M.gen_degrees);
    std::vector<std::vector<std::vector<Polynomial>>> mats;
    for (const GradedMap& m : input.maps) mats.push_back(m.entry);

    auto find_unit = [&](std::size_t k, std::size_t& r, std::size_t& c) -> bool {
        for (r = 0; r < mats[k].size(); ++r)
            for (c = 0; c < mats[k][r].size(); ++c) {
                const Polynomial& p = mats[k][r][c];
                if (!p.is_zero() && p.is_constant()) return true;
            }
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < mats.size(); ++k) {
            std::size_t r, c;
            while (find_unit(k, r, c)) {
                progress = true;
                std::uint32_t uinv = F.inv(mats[k][r][c].constant_value());
                std::size_t rows = mats[k].size(), cols = mats[k][r].size();
                // Schur complement on map k
                std::vector<std::vector<Polynomial>> A;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (i == r) continue;
                    std::vector<Polynomial> row;
                    for (std::size_t j = 0; j < cols; ++j) {
                        if (j == c) continue;
                        Polynomial upd = mats[k][i][j] -
                                         mats[k][i][c] * mats[k][r][j] * std::int64_t(uinv);
                        row.push_back(std::move(upd));
                    }
                    A.push_back(std::move(row));
                }
                mats[k] = std::move(A);
                // neighbour on the target side loses column r
                if (k > 0)
                    for (auto& row : mats[k - 1]) row.erase(row.begin() + r);
                // neighbour on the source side loses row c
                if (k + 1 < mats.size()) mats[k + 1].erase(mats[k + 1].begin() + c);
                degs[k].erase(degs[k].begin() + r);
                degs[k + 1].erase(degs[k + 1].begin() + c);
            }
        }
    }

    // drop trailing zero modules
    while (!degs.empty() && degs.back().empty()) {
        degs.pop_back();
        if (!mats.empty()) mats.pop_back();
    }

    // canonicalize: sort generator degrees ascending in every module
    for (std::size_t k = 1; k < degs.size(); ++k) {
        std::vector<std::size_t> perm(degs[k].size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::size_t a, std::size_t b) { return degs[k][a] < degs[k][b]; });
        std::vector<int> nd;
        for (std::size_t idx : perm) nd.push_back(degs[k][idx]);
        degs[k] = nd;
        // columns of map k-1
        for (auto& row : mats[k - 1]) {
            std::vector<Polynomial> nr;
            for (std::size_t idx : perm) nr.push_back(row[idx]);
            row = std::move(nr);
        }
        // rows of map k
        if (k < mats.size()) {
            std::vector<std::vector<Polynomial>> nm;
            for (std::size_t idx : perm) nm.push_back(mats[k][idx]);
            mats[k] = std::move(nm);
        }
    }

    FreeResolution out;
    out.ring = R;
    out.minimal = true;
    for (const auto& d : degs) out.modules.push_back(GradedFreeModule{d});
    for (std::size_t k = 0; k < mats.size(); ++k)
        out.maps.push_back(GradedMap(R, out.modules[k + 1], out.modules[k], mats[k]));
    out.check_complex();
    for (std::size_t k = 0; k < out.maps.size(); ++k)
        for (const auto& row : out.maps[k].entry)
            for (const Polynomial& p : row)
                if (!p.is_zero() && p.is_constant())
                    throw error("minimize: unit entry survived");
    return out;
}

inline FreeResolution minimal_resolution(const Ideal& I) {
    return minimize(free_resolution(I));
}

inline BettiTable minimal_betti(const Ideal& I) { return minimal_resolution(I).betti(); }

/// Number of minimal generators read off the minimal resolution.
inline int betti_mu(const BettiTable& t) { return t.total(0); }

/// Projective dimension of R/I and Cohen-Macaulay / Gorenstein tests
/// for the codimension-3 setting used by the linkage engine.
inline int projective_dimension(const Ideal& I) { return minimal_resolution(I).length(); }

inline bool is_gorenstein_codim3(const Ideal& I) {
    if (codimension(I) != 3) return false;
    FreeResolution res = minimal_resolution(I);
    return res.length() == 3 && res.modules[3].rank() == 1;
}

/// The deficiency module dimensions dim_k M(C)_t for t in [lo, hi],
/// computed as the cokernel of the transposed last map of the minimal
/// resolution in dual degree -t-4.  Requires 4 variables and dim R/I = 2.
struct DeficiencyProfile {
    int lo = 0, hi = -1;
    std::vector<long long> dims;

    long long at(int t) const {
        if (t < lo || t > hi) return 0;
        return dims[t - lo];
    }
    bool is_zero() const {
        for (long long d : dims)
            if (d != 0) return false;
        return true;
    }
    bool operator==(const DeficiencyProfile& o) const {
        return lo == o.lo && hi == o.hi && dims == o.dims;
    }
};

inline DeficiencyProfile deficiency_profile(const Ideal& I, int lo, int hi) {
    const Ring& R = I.ring();
    if (R.num_vars() != 4)
        throw error("deficiency_profile: needs a 4-variable ring");
    if (krull_dim(I) != 2)
        throw error("deficiency_profile: ideal does not define a curve (dim R/I != 2)");
    if (lo > hi) throw error("deficiency_profile: empty window");
    FreeResolution res = minimal_resolution(I);
    DeficiencyProfile out;
    out.lo = lo;
    out.hi = hi;
    out.dims.assign(hi - lo + 1, 0);
    if (res.length() <= 2) return out; // arithmetically Cohen-Macaulay
    if (res.length() != 3)
        throw error("deficiency_profile: resolution length > 3 (ideal not saturated?)");

    const GradedMap& d3 = res.maps[2]; // F3 -> F2
    const std::vector<int>& b = d3.target.gen_degrees; // F2
    const std::vector<int>& cdeg = d3.source.gen_degrees; // F3
    const PrimeField& F = R.field();

    for (int t = lo; t <= hi; ++t) {
        int s = -t - 4;
        // target slice: component j of F3-dual contributes monomials of degree s + cdeg[j]
        std::vector<std::vector<Monomial>> tgt_basis;
        std::vector<std::size_t> tgt_offset;
        std::size_t tgt_dim = 0;
        for (std::size_t j = 0; j < cdeg.size(); ++j) {
            tgt_offset.push_back(tgt_dim);
            std::vector<Monomial> mb = R.monomials_of_degree(s + cdeg[j]);
            tgt_dim += mb.size();
            tgt_basis.push_back(std::move(mb));
        }
        if (tgt_dim == 0) continue;
        // source slice: component k of F2-dual, monomials of degree s + b[k]
        std::vector<std::vector<std::uint32_t>> cols;
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (const Monomial& m : R.monomials_of_degree(s + b[k])) {
                std::vector<std::uint32_t> col(tgt_dim, 0);
                for (std::size_t j = 0; j < cdeg.size(); ++j) {
                    const Polynomial& p = d3.entry[k][j];
                    if (p.is_zero() || tgt_basis[j].empty()) continue;
                    for (const Term& term : p.terms()) {
                        Monomial prod = term.mono * m;
                        col[tgt_offset[j] +
                            detail::monomial_index(R, tgt_basis[j], prod)] = term.coeff;
                    }
                }
                cols.push_back(std::move(col));
            }
        }
        MatGF mat(F, cols.size(), tgt_dim);
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j2 = 0; j2 < tgt_dim; ++j2) mat.at(i, j2) = cols[i][j2];
        out.dims[t - lo] = static_cast<long long>(tgt_dim) -
                           static_cast<long long>(mat.rank());
    }
    return out;
}

} // namespace liaison

#endif
