#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace edet {

/// Errors thrown by ring operations and engines. Everything derives from
/// Error so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact division by an integer is impossible (k shares a factor with the
/// ring characteristic, or k = 0).
struct DivisionUnavailable : Error {
    using Error::Error;
};
/// Operands belong to different rings (or to the same ring family with
/// different parameters, e.g. two prime fields with different moduli).
struct RingMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct OrderTooLarge : Error {
    using Error::Error;
};
struct MalformedTable : Error {
    using Error::Error;
};
struct PayloadLength : Error {
    using Error::Error;
};
struct ExponentOutOfRange : Error {
    using Error::Error;
};
struct RingNotCommutative : Error {
    using Error::Error;
};
struct RingNotAssociative : Error {
    using Error::Error;
};
struct RingNotPowerAssociative : Error {
    using Error::Error;
};
struct NoUnit : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

/// Capability flags of a ring. Multiplication flags are monotone:
/// commutative implies associative implies power-associative; the
/// constructor path (validate()) rejects anything else.
struct RingDescriptor {
    std::string name;
    bool is_commutative = false;
    bool is_associative = false;
    bool is_power_associative = false;
    bool has_unit = false;
    // 0 for characteristic-zero rings, p for prime fields (and anything
    // built over them).
    unsigned long long characteristic = 0;

    void validate() const;
};

class ValueRep {
  public:
    virtual ~ValueRep() = default;
};

/// Type-erased handle to an immutable ring element. Elements never change
/// after construction, so handles may be copied and shared freely,
/// including across threads.
class Value {
  public:
    Value() = default;
    explicit Value(std::shared_ptr<const ValueRep> rep) : rep_(std::move(rep)) {}

    bool has_value() const { return rep_ != nullptr; }

    template <class T>
    const T& as() const {
        const T* p = dynamic_cast<const T*>(rep_.get());
        if (p == nullptr)
            throw RingMismatch("value does not belong to this ring");
        return *p;
    }

  private:
    std::shared_ptr<const ValueRep> rep_;
};

template <class T, class... Args>
Value make_value(Args&&... args) {
    return Value(std::make_shared<const T>(std::forward<Args>(args)...));
}

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The ring contract shared by every backend. All operations are pure:
/// they read their operands and produce a fresh immutable value. The only
/// division offered is exact division by a nonzero integer, which every
/// supported ring admits (that is what makes the determinant formulas
/// evaluable at all).
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    explicit Ring(RingDescriptor desc);
    virtual ~Ring() = default;

    const RingDescriptor& descriptor() const { return desc_; }
    const std::string& name() const { return desc_.name; }

    virtual Value zero() const = 0;
    /// Multiplicative unit; throws NoUnit when descriptor().has_unit is false.
    virtual Value one() const;
    /// Image of a small integer, k * 1. Requires a unit by default.
    virtual Value from_int(long long k) const;

    virtual Value add(const Value& a, const Value& b) const = 0;
    virtual Value sub(const Value& a, const Value& b) const = 0;
    virtual Value neg(const Value& a) const = 0;
    virtual Value mul(const Value& a, const Value& b) const = 0;

    /// Exact division by a nonzero integer: returns y with k*y = x.
    /// Throws DivisionUnavailable when k = 0 or k is not invertible
    /// against the characteristic. Never rounds.
    virtual Value div_int(const Value& x, long long k) const = 0;

    virtual bool equal(const Value& a, const Value& b) const = 0;
    bool is_zero(const Value& a) const { return equal(a, zero()); }

    /// x^e for e >= 1 by left-to-right binary powering. Unambiguous on
    /// power-associative rings only; throws RingNotPowerAssociative
    /// otherwise (nonassociative callers want ass_power instead).
    virtual Value pow(const Value& x, unsigned e) const;

    /// Random element with small coefficients, for tests and searches.
    virtual Value sample(std::mt19937_64& rng) const = 0;

    virtual std::string to_string(const Value& a) const = 0;
    /// Entry encoding used in matrix files; ring-specific (see matrix_io).
    virtual Value parse(const nlohmann::json& j) const = 0;
    virtual nlohmann::json to_json(const Value& a) const = 0;

    // Instrumentation hooks. Plain rings ignore them; CountingRing uses
    // them to attribute multiplications to the enclosing operation.
    virtual void push_tag(const char*) const {}
    virtual void pop_tag() const {}

    // Worker plumbing: stateless rings share themselves, stateful wrappers
    // (CountingRing) hand each worker a private clone and merge it back.
    virtual RingPtr worker_clone() const;
    virtual void absorb_worker(const Ring&) const {}
    /// The ring to use for bookkeeping that is not part of the measured
    /// schedule (merging worker partials). Identity except for wrappers.
    virtual RingPtr unwrap() const;

  protected:
    RingDescriptor desc_;
};

/// RAII attribution tag for instrumented runs.
struct ScopedTag {
    const Ring& ring;
    ScopedTag(const Ring& r, const char* tag) : ring(r) { ring.push_tag(tag); }
    ~ScopedTag() { ring.pop_tag(); }
    ScopedTag(const ScopedTag&) = delete;
    ScopedTag& operator=(const ScopedTag&) = delete;
};

} // namespace edet
