#include "edet/ring.hpp"

namespace edet {

void RingDescriptor::validate() const {
    if (is_commutative && !is_associative)
        throw Error("descriptor '" + name + "': commutative requires associative");
    if (is_associative && !is_power_associative)
        throw Error("descriptor '" + name + "': associative requires power-associative");
    if (characteristic == 1)
        throw Error("descriptor '" + name + "': characteristic must be 0 or a prime");
}

Ring::Ring(RingDescriptor desc) : desc_(std::move(desc)) {
    desc_.validate();
}

Value Ring::one() const {
    throw NoUnit("ring '" + name() + "' has no unit");
}

Value Ring::from_int(long long k) const {
    // k * 1 by double-and-add; exact, works in any unital ring.
    if (!desc_.has_unit)
        throw NoUnit("ring '" + name() + "' has no unit; cannot embed integers");
    if (k == 0)
        return zero();
    bool negative = k < 0;
    unsigned long long m = negative ? 0ULL - static_cast<unsigned long long>(k)
                                    : static_cast<unsigned long long>(k);
    Value acc = one();
    Value result = zero();
    bool first = true;
    Value base = acc;
    // result = sum of base*2^i over set bits of m
    for (unsigned long long bits = m; bits != 0; bits >>= 1) {
        if (bits & 1ULL) {
            result = first ? base : add(result, base);
            first = false;
        }
        if (bits > 1)
            base = add(base, base);
    }
    return negative ? neg(result) : result;
}

Value Ring::pow(const Value& x, unsigned e) const {
    if (e == 0)
        return one();
    if (!desc_.is_power_associative)
        throw RingNotPowerAssociative("ring '" + name() +
                                      "' has ambiguous powers; use ass_power");
    ScopedTag tag(*this, "pow");
    unsigned high = 1u;
    while ((e >> high) != 0)
        ++high;
    Value acc = x;
    for (int bit = static_cast<int>(high) - 2; bit >= 0; --bit) {
        acc = mul(acc, acc);
        if ((e >> bit) & 1u)
            acc = mul(acc, x);
    }
    return acc;
}

RingPtr Ring::worker_clone() const {
    return shared_from_this();
}

RingPtr Ring::unwrap() const {
    return shared_from_this();
}

} // namespace edet
