#ifndef LIAISON_PFAFFIAN_HPP
#define LIAISON_PFAFFIAN_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

#include "liaison/hilbert.hpp"
#include "liaison/io.hpp"
#include "liaison/rng.hpp"

namespace liaison {

/// A skew-symmetric (alternating) matrix of homogeneous forms, stored
/// as the strict upper triangle in row-major order.
class SkewMatrix {
public:
    SkewMatrix(Ring ring, int size)
        : ring_(std::move(ring)), size_(size),
          upper_(static_cast<std::size_t>(size) * (size - 1) / 2, Polynomial::zero(ring_)) {
        if (size < 1 || size > 9) throw error("SkewMatrix: size must be between 1 and 9");
    }

    const Ring& ring() const { return ring_; }
    int size() const { return size_; }

    /// Entry (i, j), 0-based, with skew symmetry filled in.
    Polynomial at(int i, int j) const {
        check_index(i); check_index(j);
        if (i == j) return Polynomial::zero(ring_);
        if (i < j) return upper_[upper_index(i, j)];
        return -upper_[upper_index(j, i)];
    }

    void set(int i, int j, const Polynomial& p) {
        check_index(i); check_index(j);
        if (i == j) {
            if (!p.is_zero()) throw error("SkewMatrix: nonzero diagonal");
            return;
        }
        if (!p.is_zero() && !p.is_homogeneous())
            throw error("SkewMatrix: entries must be homogeneous");
        if (i < j) upper_[upper_index(i, j)] = p;
        else upper_[upper_index(j, i)] = -p;
    }

    bool operator==(const SkewMatrix& o) const {
        if (ring_ != o.ring_ || size_ != o.size_) return false;
        for (std::size_t k = 0; k < upper_.size(); ++k)
            if (upper_[k] != o.upper_[k]) return false;
        return true;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= size_) throw error("SkewMatrix: index out of range");
    }
    std::size_t upper_index(int i, int j) const {
        // row-major strict upper triangle
        return static_cast<std::size_t>(i) * (2 * size_ - i - 1) / 2 + (j - i - 1);
    }

    Ring ring_;
    int size_;
    std::vector<Polynomial> upper_;
};

namespace detail {

/// Pfaffian of the principal submatrix on the index subset `mask`,
/// memoized; recursive expansion along the first retained index:
///   Pf(S) = sum_{k} (-1)^k M[s_1][s_k] Pf(S minus {s_1, s_k}).
inline Polynomial pfaffian_subset(const SkewMatrix& M, std::uint32_t mask,
                                  std::map<std::uint32_t, Polynomial>& memo) {
    if (mask == 0) return Polynomial::constant(M.ring(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    std::vector<int> idx;
    for (int i = 0; i < M.size(); ++i)
        if (mask & (1u << i)) idx.push_back(i);
    Polynomial acc = Polynomial::zero(M.ring());
    if (idx.size() % 2 == 0) {
        int a = idx[0];
        int sign = 1; // (-1)^k for k = 2, position of the partner
        for (std::size_t k = 1; k < idx.size(); ++k) {
            int b = idx[k];
            std::uint32_t rest = mask & ~(1u << a) & ~(1u << b);
            Polynomial term = M.at(a, b) * pfaffian_subset(M, rest, memo);
            acc = (sign > 0) ? acc + term : acc - term;
            sign = -sign;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

/// Determinant of the submatrix with given row and column subsets,
/// memoized cofactor expansion; the independent cross-check for
/// Pfaffian^2 = det.
inline Polynomial det_subset(const SkewMatrix& M, std::uint32_t rmask, std::uint32_t cmask,
                             std::map<std::uint64_t, Polynomial>& memo) {
    if (rmask == 0) return Polynomial::constant(M.ring(), 1);
    std::uint64_t key = (static_cast<std::uint64_t>(rmask) << 32) | cmask;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = 0;
    while (!(rmask & (1u << r))) ++r;
    std::uint32_t rrest = rmask & ~(1u << r);
    Polynomial acc = Polynomial::zero(M.ring());
    int sign = 1;
    for (int c = 0; c < M.size(); ++c) {
        if (!(cmask & (1u << c))) continue;
        Polynomial e = M.at(r, c);
        if (!e.is_zero()) {
            Polynomial minor = det_subset(M, rrest, cmask & ~(1u << c), memo);
            Polynomial term = e * minor;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
}

} // namespace detail

/// The Pfaffian of the full matrix (zero when the size is odd).
inline Polynomial pfaffian(const SkewMatrix& M) {
    std::map<std::uint32_t, Polynomial> memo;
    std::uint32_t full = (1u << M.size()) - 1;
    return detail::pfaffian_subset(M, full, memo);
}

/// Pfaffian of the principal submatrix keeping the listed 0-based
/// indices.
inline Polynomial pfaffian_principal(const SkewMatrix& M, const std::vector<int>& keep) {
    std::uint32_t mask = 0;
    for (int i : keep) {
        if (i < 0 || i >= M.size()) throw error("pfaffian_principal: index out of range");
        if (mask & (1u << i)) throw error("pfaffian_principal: repeated index");
        mask |= 1u << i;
    }
    std::map<std::uint32_t, Polynomial> memo;
    return detail::pfaffian_subset(M, mask, memo);
}

/// Determinant (for Pf^2 = det cross-checks).
inline Polynomial determinant(const SkewMatrix& M) {
    std::map<std::uint64_t, Polynomial> memo;
    std::uint32_t full = (1u << M.size()) - 1;
    return detail::det_subset(M, full, full, memo);
}

/// Principal submatrix keeping the listed 0-based indices (in the given
/// order, which must be increasing).
inline SkewMatrix principal_submatrix(const SkewMatrix& M, const std::vector<int>& keep) {
    if (!std::is_sorted(keep.begin(), keep.end()))
        throw error("principal_submatrix: indices must be increasing");
    SkewMatrix S(M.ring(), static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            S.set(static_cast<int>(a), static_cast<int>(b), M.at(keep[a], keep[b]));
    return S;
}

/// The s signed submaximal Pfaffians of an odd-size matrix:
/// p_i = (-1)^i Pf(M with row and column i deleted), 0-based, so that
/// M * p = 0 exactly.
inline std::vector<Polynomial> submaximal_pfaffians(const SkewMatrix& M) {
    if (M.size() % 2 == 0)
        throw error("submaximal_pfaffians: matrix size must be odd");
    std::map<std::uint32_t, Polynomial> memo; // shared across deletions
    std::uint32_t full = (1u << M.size()) - 1;
    std::vector<Polynomial> out;
    for (int i = 0; i < M.size(); ++i) {
        Polynomial p = detail::pfaffian_subset(M, full & ~(1u << i), memo);
        out.push_back(i % 2 == 0 ? p : -p);
    }
    return out;
}

/// The Buchsbaum-Eisenbud ideal of submaximal Pfaffians.
inline Ideal buchsbaum_eisenbud_ideal(const SkewMatrix& M) {
    return Ideal(M.ring(), submaximal_pfaffians(M));
}

/// Pfaffian of M with rows and columns i, j, k deleted (0-based,
/// distinct).  For size 3 this is the empty Pfaffian 1 (a unit; callers
/// detect that case via is_constant()).
inline Polynomial watanabe_u(const SkewMatrix& M, int i, int j, int k) {
    if (M.size() % 2 == 0) throw error("watanabe_u: matrix size must be odd");
    if (i == j || j == k || i == k) throw error("watanabe_u: indices must be distinct");
    std::uint32_t full = (1u << M.size()) - 1;
    for (int v : {i, j, k})
        if (v < 0 || v >= M.size()) throw error("watanabe_u: index out of range");
    std::uint32_t mask = full & ~(1u << i) & ~(1u << j) & ~(1u << k);
    std::map<std::uint32_t, Polynomial> memo;
    return detail::pfaffian_subset(M, mask, memo);
}

/// Degree pattern for random alternating matrices: entry (i, j) gets
/// degree row_degrees[i] + row_degrees[j] - normalization.  Row degrees
/// are kept sorted non-decreasingly (canonical form).
struct DegreePattern {
    std::vector<int> row_degrees;
    int normalization = 0;

    static DegreePattern uniform(int size, int entry_degree) {
        DegreePattern p;
        p.row_degrees.assign(size, entry_degree);
        p.normalization = entry_degree;
        return p;
    }

    void canonicalize() { std::sort(row_degrees.begin(), row_degrees.end()); }

    int entry_degree(int i, int j) const {
        return row_degrees[i] + row_degrees[j] - normalization;
    }

    void validate(int size) const {
        if (static_cast<int>(row_degrees.size()) != size)
            throw error("DegreePattern: row count mismatch");
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (entry_degree(i, j) < 1)
                    throw error("DegreePattern: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") would have degree < 1");
        // submaximal Pfaffian degrees must be integers: (size-1) even or
        // normalization even
        if ((size - 1) % 2 != 0 && row_degrees.size() > 0)
            throw error("DegreePattern: size must be odd for Pfaffian ideals");
    }
};

/// Random alternating matrix with the given degree pattern, resampled
/// deterministically (bounded) until the Pfaffian ideal has codim 3.
inline SkewMatrix random_be_matrix(const Ring& R, int size, DegreePattern pattern,
                                   std::uint64_t seed) {
    if (size % 2 == 0 || size < 3) throw error("random_be_matrix: size must be odd and >= 3");
    pattern.canonicalize();
    pattern.validate(size);
    Rng root(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng = root.child(attempt);
        SkewMatrix M(R, size);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                M.set(i, j, random_homogeneous(R, pattern.entry_degree(i, j), rng));
        if (codimension(buchsbaum_eisenbud_ideal(M)) == 3) return M;
    }
    throw error("random_be_matrix: no codimension-3 sample in 32 attempts");
}

/// Matrix text format:
///   ring p=<prime> n=<num_vars>
///   skew s=<size>
///   <entry>            (strict upper triangle, row-major, one per line)
inline void write_skew_matrix(std::ostream& os, const SkewMatrix& M) {
    os << "ring p=" << M.ring().characteristic() << " n=" << M.ring().num_vars() << "\n";
    os << "skew s=" << M.size() << "\n";
    for (int i = 0; i < M.size(); ++i)
        for (int j = i + 1; j < M.size(); ++j) os << M.at(i, j).str() << "\n";
}

inline SkewMatrix read_skew_matrix(std::istream& is) {
    std::string line;
    int lineno = 0;
    Ring R;
    int size = -1;
    std::vector<Polynomial> entries;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!R.valid()) {
            if (t.rfind("ring", 0) != 0)
                throw error("read_skew_matrix: line " + std::to_string(lineno) +
                            ": expected ring header");
            R = Ring(static_cast<std::uint32_t>(detail::header_field(t, "p")),
                     static_cast<int>(detail::header_field(t, "n")));
            continue;
        }
        if (size < 0) {
            if (t.rfind("skew", 0) != 0)
                throw error("read_skew_matrix: line " + std::to_string(lineno) +
                            ": expected 'skew s=...' header");
            size = static_cast<int>(detail::header_field(t, "s"));
            continue;
        }
        try {
            entries.push_back(parse_polynomial(R, t));
        } catch (const error& e) {
            throw error("read_skew_matrix: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!R.valid() || size < 0) throw error("read_skew_matrix: missing headers");
    if (static_cast<int>(entries.size()) != size * (size - 1) / 2)
        throw error("read_skew_matrix: expected " + std::to_string(size * (size - 1) / 2) +
                    " entries, got " + std::to_string(entries.size()));
    SkewMatrix M(R, size);
    std::size_t k = 0;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) M.set(i, j, entries[k++]);
    return M;
}

} // namespace liaison

#endif
