#pragma once

#include <optional>
#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// Assignment of one free shift value per permutation, indexed by
/// lexicographic rank. The polarized determinant is invariant under every
/// choice; the assignment controls which member of the identity family
/// gets evaluated.
class GammaAssignment {
  public:
    enum class Mode { zero, constant, explicit_list, seeded };

    static GammaAssignment zero();
    static GammaAssignment constant(Value v);
    /// Payload must have exactly n! entries at evaluation time.
    static GammaAssignment explicit_list(std::vector<Value> values);
    /// Small integers derived deterministically from (seed, rank); mixes
    /// zero and nonzero shifts.
    static GammaAssignment seeded(std::uint64_t seed);

    Mode mode() const { return mode_; }

    /// Throws PayloadLength when an explicit list does not match n!.
    void validate(std::uint64_t n_factorial) const;

    Value at(std::uint64_t rank, const Ring& ring) const;

  private:
    GammaAssignment() = default;

    Mode mode_ = Mode::zero;
    std::optional<Value> constant_;
    std::vector<Value> list_;
    std::uint64_t seed_ = 0;
};

} // namespace edet
