#ifndef LIAISON_RING_HPP
#define LIAISON_RING_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

enum class OrderKind {
    Grevlex,  ///< graded reverse lexicographic on all variables
    ElimLast, ///< eliminate the last variable, grevlex on the rest
};

/// A polynomial ring GF(p)[x0..x{n-1}] with a fixed monomial order.
/// Cheap value handle; copies share the representation.
class Ring {
public:
    Ring() = default;

    Ring(std::uint32_t p, int nvars, OrderKind order = OrderKind::Grevlex) {
        if (nvars < 2 || nvars > MAX_VARS)
            throw error("Ring: num_vars must be between 2 and " + std::to_string(MAX_VARS));
        if (p <= 64)
            throw error("Ring: characteristic must exceed 64 to keep generic choices generic");
        rep_ = std::make_shared<const Rep>(Rep{PrimeField(p), nvars, order});
    }

    bool valid() const { return rep_ != nullptr; }
    const PrimeField& field() const { return rep_->field; }
    std::uint32_t characteristic() const { return rep_->field.characteristic(); }
    int num_vars() const { return rep_->nvars; }
    OrderKind order() const { return rep_->order; }

    /// The ring with one auxiliary variable appended and the block order
    /// that eliminates it.  Used internally for intersections.
    Ring extended() const {
        return Ring(characteristic(), num_vars() + 1, OrderKind::ElimLast);
    }

    int cmp(const Monomial& a, const Monomial& b) const {
        switch (rep_->order) {
        case OrderKind::Grevlex:  return Monomial::cmp_grevlex(a, b, rep_->nvars);
        case OrderKind::ElimLast: return Monomial::cmp_elim_last(a, b, rep_->nvars);
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool in_range(const Monomial& m) const {
        for (int i = rep_->nvars; i < MAX_VARS; ++i)
            if (m.exponent(i) != 0) return false;
        return true;
    }

    /// Same characteristic, same variable count, same order.
    bool operator==(const Ring& o) const {
        if (rep_ == o.rep_) return true;
        if (!rep_ || !o.rep_) return false;
        return characteristic() == o.characteristic() && num_vars() == o.num_vars() &&
               order() == o.order();
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string var_name(int i) const { return "x" + std::to_string(i); }

    /// All monomials of total degree d, sorted decreasingly in the ring
    /// order.  Canonical basis for degree slices of R.
    std::vector<Monomial> monomials_of_degree(int d) const;

private:
    struct Rep {
        PrimeField field;
        int nvars;
        OrderKind order;
    };
    std::shared_ptr<const Rep> rep_;
};

inline void enumerate_monomials(int nvars, int var, int remaining, Monomial& cur,
                                std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.set_exponent(var, remaining);
        out.push_back(cur);
        cur.set_exponent(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set_exponent(var, e);
        enumerate_monomials(nvars, var + 1, remaining - e, cur, out);
    }
    cur.set_exponent(var, 0);
}

inline std::vector<Monomial> Ring::monomials_of_degree(int d) const {
    if (d < 0) return {};
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_monomials(num_vars(), 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [this](const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; });
    return out;
}

} // namespace liaison

#endif
