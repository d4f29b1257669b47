#ifndef LIAISON_POLYNOMIAL_HPP
#define LIAISON_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "liaison/monomial.hpp"
#include "liaison/ring.hpp"
#include "liaison/rng.hpp"

namespace liaison {

struct Term {
    std::uint32_t coeff; // canonical representative in (0, p)
    Monomial mono;
};

/// A polynomial over GF(p): terms with nonzero coefficients, kept
/// strictly decreasing in the ring's monomial order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    Polynomial(Ring ring, std::vector<Term> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }

    static Polynomial constant(const Ring& r, std::int64_t c) {
        Polynomial p(r);
        std::uint32_t v = r.field().reduce(c);
        if (v != 0) p.terms_.push_back({v, Monomial::one()});
        return p;
    }

    static Polynomial monomial(const Ring& r, const Monomial& m, std::int64_t c = 1) {
        if (!r.in_range(m)) throw error("Polynomial: monomial uses variables outside the ring");
        Polynomial p(r);
        std::uint32_t v = r.field().reduce(c);
        if (v != 0) p.terms_.push_back({v, m});
        return p;
    }

    static Polynomial variable(const Ring& r, int i) {
        if (i < 0 || i >= r.num_vars()) throw error("Polynomial: variable index out of range");
        return monomial(r, Monomial::variable(i));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw error("Polynomial: leading term of zero");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    std::uint32_t leading_coeff() const { return leading_term().coeff; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const Term& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// The constant value if is_constant(), else throws.
    std::uint32_t constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw error("Polynomial: not a constant");
        return terms_[0].coeff;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({ring_.field().neg(t.coeff), t.mono});
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        const PrimeField& F = ring_.field();
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ring_.cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
                if (s != 0) r.terms_.push_back({s, terms_[i].mono});
                ++i; ++j;
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    /// Multiply by coeff * mono (order-preserving, no re-sort needed).
    Polynomial scaled(std::uint32_t c, const Monomial& m) const {
        Polynomial r(ring_);
        if (c == 0) return r;
        const PrimeField& F = ring_.field();
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono * m});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        Polynomial acc(ring_);
        if (is_zero() || o.is_zero()) return acc;
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        const PrimeField& F = ring_.field();
        for (const Term& a : terms_)
            for (const Term& b : o.terms_)
                prod.push_back({F.mul(a.coeff, b.coeff), a.mono * b.mono});
        std::sort(prod.begin(), prod.end(), [this](const Term& a, const Term& b) {
            return ring_.cmp(a.mono, b.mono) > 0;
        });
        for (const Term& t : prod) {
            if (!acc.terms_.empty() && acc.terms_.back().mono == t.mono) {
                std::uint32_t s = F.add(acc.terms_.back().coeff, t.coeff);
                if (s == 0) acc.terms_.pop_back();
                else acc.terms_.back().coeff = s;
            } else {
                acc.terms_.push_back(t);
            }
        }
        return acc;
    }

    Polynomial operator*(std::int64_t c) const {
        return scaled(ring_.field().reduce(c), Monomial::one());
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_.field().inv(leading_coeff()), Monomial::one());
    }

    /// Exact division by a polynomial known to divide this one.
    Polynomial exact_div(const Polynomial& d) const;

    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const {
        if (static_cast<int>(point.size()) != ring_.num_vars())
            throw error("Polynomial: evaluation point has wrong length");
        const PrimeField& F = ring_.field();
        std::uint32_t acc = 0;
        for (const Term& t : terms_) {
            std::uint32_t v = t.coeff;
            for (int i = 0; i < ring_.num_vars(); ++i)
                if (t.mono.exponent(i) != 0)
                    v = F.mul(v, F.pow(point[i], t.mono.exponent(i)));
            acc = F.add(acc, v);
        }
        return acc;
    }

    /// Image under x_i -> images[i]; images need not be linear.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_.num_vars())
            throw error("Polynomial: substitution list has wrong length");
        const Ring& R = images.empty() ? ring_ : images[0].ring();
        Polynomial acc = Polynomial::zero(R);
        for (const Term& t : terms_) {
            Polynomial part = Polynomial::constant(R, t.coeff);
            for (int i = 0; i < ring_.num_vars(); ++i)
                for (int e = 0; e < t.mono.exponent(i); ++e) part = part * images[i];
            acc = acc + part;
        }
        return acc;
    }

    /// Same polynomial in the extended elimination ring.  Term order is
    /// unchanged because the block order restricts to grevlex on
    /// monomials free of the auxiliary variable.
    Polynomial to_extended(const Ring& ext) const {
        if (ext.num_vars() != ring_.num_vars() + 1 || ext.order() != OrderKind::ElimLast)
            throw error("Polynomial: not an extension ring");
        return Polynomial(ext, terms_);
    }

    /// Back from the elimination ring; requires every term free of the
    /// auxiliary (last) variable.
    Polynomial from_extended(const Ring& base) const {
        if (ring_.num_vars() != base.num_vars() + 1)
            throw error("Polynomial: not a restriction ring");
        for (const Term& t : terms_)
            if (t.mono.exponent(ring_.num_vars() - 1) != 0)
                throw error("Polynomial: term involves the auxiliary variable");
        return Polynomial(base, terms_);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            const Term& t = terms_[i];
            if (t.mono.is_one()) {
                s += std::to_string(t.coeff);
            } else if (t.coeff == 1) {
                s += t.mono.str(ring_.num_vars());
            } else {
                s += std::to_string(t.coeff) + "*" + t.mono.str(ring_.num_vars());
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_) throw error("Polynomial: mixed rings");
    }

    Ring ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(std::int64_t c, const Polynomial& p) { return p * c; }

inline Polynomial Polynomial::exact_div(const Polynomial& d) const {
    if (d.is_zero()) throw error("Polynomial: division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(ring_);
    const PrimeField& F = ring_.field();
    std::uint32_t lc_inv = F.inv(d.leading_coeff());
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!d.leading_monomial().divides(lt.mono))
            throw error("Polynomial: exact_div with non-divisible leading term");
        std::uint32_t c = F.mul(lt.coeff, lc_inv);
        Monomial m = lt.mono / d.leading_monomial();
        quot = quot + Polynomial::monomial(ring_, m, c);
        rem = rem - d.scaled(c, m);
    }
    return quot;
}

/// Uniformly random homogeneous polynomial of the given degree
/// (coefficients uniform in GF(p); resampled if all vanish).
inline Polynomial random_homogeneous(const Ring& r, int degree, Rng& rng) {
    if (degree < 0) throw error("random_homogeneous: negative degree");
    std::vector<Monomial> basis = r.monomials_of_degree(degree);
    for (;;) {
        std::vector<Term> terms;
        for (const Monomial& m : basis) {
            std::uint32_t c = static_cast<std::uint32_t>(rng.below(r.characteristic()));
            if (c != 0) terms.push_back({c, m});
        }
        if (!terms.empty()) return Polynomial(r, std::move(terms));
    }
}

// ---------------------------------------------------------------------------
// Parsing.  Grammar:  poly := ['+'|'-'] term (('+'|'-') term)*
//                     term := factor ('*' factor)*
//                     factor := INT | VAR ['^' INT]
// Variables are named x0..x{n-1}.  Coefficients are reduced mod p.
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
public:
    PolyParser(const Ring& ring, const std::string& text) : ring_(ring), s_(text) {}

    Polynomial parse() {
        Polynomial acc = Polynomial::zero(ring_);
        skip_ws();
        if (pos_ >= s_.size()) throw error("parse: empty polynomial");
        bool neg = consume_sign();
        for (;;) {
            Polynomial t = parse_term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (pos_ >= s_.size()) break;
            if (s_[pos_] == '+') { neg = false; ++pos_; }
            else if (s_[pos_] == '-') { neg = true; ++pos_; }
            else throw error("parse: unexpected character '" + std::string(1, s_[pos_]) +
                             "' at position " + std::to_string(pos_));
        }
        return acc;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
            return s_[pos_++] == '-';
        return false;
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw error("parse: expected integer at position " + std::to_string(start));
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw error("parse: unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Polynomial::constant(ring_, parse_int());
        if (s_[pos_] == 'x') {
            ++pos_;
            std::int64_t idx = parse_int();
            if (idx < 0 || idx >= ring_.num_vars())
                throw error("parse: variable x" + std::to_string(idx) + " outside ring with " +
                            std::to_string(ring_.num_vars()) + " variables");
            Polynomial v = Polynomial::variable(ring_, static_cast<int>(idx));
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                std::int64_t e = parse_int();
                if (e < 0 || e > 255) throw error("parse: exponent out of range");
                Monomial m;
                m.set_exponent(static_cast<int>(idx), static_cast<int>(e));
                return Polynomial::monomial(ring_, m);
            }
            return v;
        }
        if (s_[pos_] == '(')
            throw error("parse: parentheses are not part of the polynomial format");
        throw error("parse: unexpected character '" + std::string(1, s_[pos_]) + "' at position " +
                    std::to_string(pos_));
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (pos_ < s_.size() &&
                       (s_[pos_] == 'x' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
                // juxtaposition such as "3x0" or "x0x1" is accepted on input
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    const Ring& ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    return detail::PolyParser(ring, text).parse();
}

} // namespace liaison

#endif
