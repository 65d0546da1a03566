#pragma once

#include <map>

#include "edet/ring.hpp"

namespace edet {

/// Tallies of ring-level arithmetic events. Negation counts as a
/// subtraction; multiplications are additionally attributed to the
/// innermost active tag ("pow", "ass-power", or untagged).
struct OpCounts {
    std::uint64_t additions = 0;
    std::uint64_t subtractions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t divisions = 0;
    std::map<std::string, std::uint64_t> multiplications_by_tag;

    std::uint64_t tagged(const std::string& tag) const;
    std::uint64_t untagged_multiplications() const;
    void merge(const OpCounts& other);
};

/// Transparent instrumentation wrapper: forwards every operation to the
/// wrapped ring unchanged and counts it. Values are the inner ring's
/// values, so wrapped and unwrapped evaluation are interchangeable.
/// One instance per worker; counters are not synchronized.
class CountingRing final : public Ring {
  public:
    explicit CountingRing(RingPtr inner);

    const RingPtr& inner() const { return inner_; }
    const OpCounts& counts() const { return counts_; }
    void reset() const { counts_ = OpCounts{}; }

    Value zero() const override;
    Value one() const override;
    Value from_int(long long k) const override;
    Value add(const Value& a, const Value& b) const override;
    Value sub(const Value& a, const Value& b) const override;
    Value neg(const Value& a) const override;
    Value mul(const Value& a, const Value& b) const override;
    Value div_int(const Value& x, long long k) const override;
    bool equal(const Value& a, const Value& b) const override;
    Value sample(std::mt19937_64& rng) const override;
    std::string to_string(const Value& a) const override;
    Value parse(const nlohmann::json& j) const override;
    nlohmann::json to_json(const Value& a) const override;

    void push_tag(const char* tag) const override;
    void pop_tag() const override;
    RingPtr worker_clone() const override;
    void absorb_worker(const Ring& worker) const override;
    RingPtr unwrap() const override { return inner_; }

  private:
    RingPtr inner_;
    mutable OpCounts counts_;
    mutable std::vector<const char*> tags_;
};

} // namespace edet
