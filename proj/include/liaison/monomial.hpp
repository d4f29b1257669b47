#ifndef LIAISON_MONOMIAL_HPP
#define LIAISON_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "liaison/field.hpp"

namespace liaison {

/// Hard upper bound on the number of ring variables (including the
/// auxiliary elimination variable).  Keeps monomials allocation-free.
constexpr int MAX_VARS = 8;

/// A monomial: an exponent vector with cached total degree.  The number
/// of active variables lives in the Ring, not here.
class Monomial {
public:
    Monomial() : exp_{}, deg_(0) {}

    static Monomial one() { return Monomial(); }

    static Monomial variable(int i) {
        Monomial m;
        m.exp_[i] = 1;
        m.deg_ = 1;
        return m;
    }

    int exponent(int i) const { return exp_[i]; }
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set_exponent(int i, int e) {
        if (e < 0 || e > 255) throw error("Monomial: exponent out of range");
        deg_ = static_cast<std::uint16_t>(deg_ - exp_[i] + e);
        exp_[i] = static_cast<std::uint8_t>(e);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < MAX_VARS; ++i) {
            int e = exp_[i] + o.exp_[i];
            if (e > 255) throw error("Monomial: exponent overflow");
            r.exp_[i] = static_cast<std::uint8_t>(e);
        }
        r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < MAX_VARS; ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }

    /// Exact division; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < MAX_VARS; ++i) {
            int e = exp_[i] - o.exp_[i];
            if (e < 0) throw error("Monomial: non-exact division");
            r.exp_[i] = static_cast<std::uint8_t>(e);
        }
        r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        int d = 0;
        for (int i = 0; i < MAX_VARS; ++i) {
            r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        int d = 0;
        for (int i = 0; i < MAX_VARS; ++i) {
            r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        return r;
    }

    bool coprime_to(const Monomial& o) const {
        for (int i = 0; i < MAX_VARS; ++i)
            if (exp_[i] != 0 && o.exp_[i] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Graded reverse lexicographic comparison on the first nvars
    /// variables: higher degree wins; on equal degree the monomial whose
    /// last nonzero entry of the exponent difference is negative wins.
    /// Returns +1 if a > b, -1 if a < b, 0 on equality.
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int nvars) {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
        for (int i = nvars - 1; i >= 0; --i) {
            int d = int(a.exp_[i]) - int(b.exp_[i]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }

    /// Block order eliminating the last variable (index nvars-1): compare
    /// its exponent first, then grevlex on the remaining block.
    static int cmp_elim_last(const Monomial& a, const Monomial& b, int nvars) {
        int t = nvars - 1;
        if (a.exp_[t] != b.exp_[t]) return a.exp_[t] > b.exp_[t] ? 1 : -1;
        int da = a.deg_ - a.exp_[t], db = b.deg_ - b.exp_[t];
        if (da != db) return da > db ? 1 : -1;
        for (int i = t - 1; i >= 0; --i) {
            int d = int(a.exp_[i]) - int(b.exp_[i]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }

    /// Plain lexicographic comparison (x0 > x1 > ...); used only to sort
    /// resolution bases, never as a reduction order.
    static int cmp_lex(const Monomial& a, const Monomial& b, int nvars) {
        for (int i = 0; i < nvars; ++i) {
            int d = int(a.exp_[i]) - int(b.exp_[i]);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    std::string str(int nvars) const {
        if (deg_ == 0) return "1";
        std::string s;
        for (int i = 0; i < nvars; ++i) {
            if (exp_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
            if (exp_[i] > 1) s += "^" + std::to_string(int(exp_[i]));
        }
        return s;
    }

private:
    std::array<std::uint8_t, MAX_VARS> exp_;
    std::uint16_t deg_;
};

} // namespace liaison

#endif
