#include "edet/gamma.hpp"

namespace edet {

namespace {
// splitmix64; stable across platforms, one value per rank.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace

GammaAssignment GammaAssignment::zero() {
    return GammaAssignment();
}

GammaAssignment GammaAssignment::constant(Value v) {
    GammaAssignment g;
    g.mode_ = Mode::constant;
    g.constant_ = std::move(v);
    return g;
}

GammaAssignment GammaAssignment::explicit_list(std::vector<Value> values) {
    GammaAssignment g;
    g.mode_ = Mode::explicit_list;
    g.list_ = std::move(values);
    return g;
}

GammaAssignment GammaAssignment::seeded(std::uint64_t seed) {
    GammaAssignment g;
    g.mode_ = Mode::seeded;
    g.seed_ = seed;
    return g;
}

void GammaAssignment::validate(std::uint64_t n_factorial) const {
    if (mode_ == Mode::explicit_list && list_.size() != n_factorial)
        throw PayloadLength("explicit gamma list has " + std::to_string(list_.size()) +
                            " entries, expected " + std::to_string(n_factorial));
}

Value GammaAssignment::at(std::uint64_t rank, const Ring& ring) const {
    switch (mode_) {
    case Mode::zero:
        return ring.zero();
    case Mode::constant:
        return *constant_;
    case Mode::explicit_list:
        if (rank >= list_.size())
            throw PayloadLength("gamma rank out of range");
        return list_[static_cast<size_t>(rank)];
    case Mode::seeded: {
        const auto h = mix(seed_ ^ mix(rank + 1));
        return ring.from_int(static_cast<long long>(h % 19) - 9);
    }
    }
    throw Error("unreachable gamma mode");
}

} // namespace edet
