#include "edet/counting_ring.hpp"

namespace edet {

std::uint64_t OpCounts::tagged(const std::string& tag) const {
    const auto it = multiplications_by_tag.find(tag);
    return it == multiplications_by_tag.end() ? 0 : it->second;
}

std::uint64_t OpCounts::untagged_multiplications() const {
    std::uint64_t tagged_total = 0;
    for (const auto& [tag, c] : multiplications_by_tag)
        tagged_total += c;
    return multiplications - tagged_total;
}

void OpCounts::merge(const OpCounts& other) {
    additions += other.additions;
    subtractions += other.subtractions;
    multiplications += other.multiplications;
    divisions += other.divisions;
    for (const auto& [tag, c] : other.multiplications_by_tag)
        multiplications_by_tag[tag] += c;
}

CountingRing::CountingRing(RingPtr inner)
    : Ring([&inner] {
          RingDescriptor d = inner->descriptor();
          return d; // transparent: same name, same capabilities
      }()),
      inner_(std::move(inner)) {}

Value CountingRing::zero() const { return inner_->zero(); }
Value CountingRing::one() const { return inner_->one(); }
Value CountingRing::from_int(long long k) const { return inner_->from_int(k); }

Value CountingRing::add(const Value& a, const Value& b) const {
    ++counts_.additions;
    return inner_->add(a, b);
}

Value CountingRing::sub(const Value& a, const Value& b) const {
    ++counts_.subtractions;
    return inner_->sub(a, b);
}

Value CountingRing::neg(const Value& a) const {
    ++counts_.subtractions;
    return inner_->neg(a);
}

Value CountingRing::mul(const Value& a, const Value& b) const {
    ++counts_.multiplications;
    if (!tags_.empty())
        ++counts_.multiplications_by_tag[tags_.back()];
    return inner_->mul(a, b);
}

Value CountingRing::div_int(const Value& x, long long k) const {
    ++counts_.divisions;
    return inner_->div_int(x, k);
}

bool CountingRing::equal(const Value& a, const Value& b) const {
    return inner_->equal(a, b);
}

Value CountingRing::sample(std::mt19937_64& rng) const {
    return inner_->sample(rng);
}

std::string CountingRing::to_string(const Value& a) const {
    return inner_->to_string(a);
}

Value CountingRing::parse(const nlohmann::json& j) const {
    return inner_->parse(j);
}

nlohmann::json CountingRing::to_json(const Value& a) const {
    return inner_->to_json(a);
}

void CountingRing::push_tag(const char* tag) const {
    tags_.push_back(tag);
}

void CountingRing::pop_tag() const {
    if (!tags_.empty())
        tags_.pop_back();
}

RingPtr CountingRing::worker_clone() const {
    return std::make_shared<CountingRing>(inner_);
}

void CountingRing::absorb_worker(const Ring& worker) const {
    if (const auto* w = dynamic_cast<const CountingRing*>(&worker))
        counts_.merge(w->counts_);
}

} // namespace edet
