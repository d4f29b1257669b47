#ifndef LIAISON_FIELD_HPP
#define LIAISON_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liaison {

/// Error type thrown by every operation in the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in the prime field GF(p).  Elements are canonical
/// representatives in [0, p).  p is small enough that products fit in
/// 64 bits without reduction tricks.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw error("PrimeField: " + std::to_string(p) + " is not prime");
        if (p > (std::uint32_t(1) << 31)) throw error("PrimeField: prime too large");
    }

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t reduce(std::int64_t a) const {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1, base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error("PrimeField: division by zero");
        return pow(a, p_ - 2);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

} // namespace liaison

#endif
