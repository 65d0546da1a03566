#include "edet/free_algebra.hpp"

#include "edet/rational.hpp"

namespace edet {

FreeAlgebraRing::FreeAlgebraRing(int matrix_order)
    : Ring({.name = "free:" + std::to_string(matrix_order),
            .is_commutative = false,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = 0}),
      order_(matrix_order) {
    if (matrix_order < 1)
        throw OrderTooLarge("free algebra needs order >= 1");
}

const std::map<Word, mpq_class>& FreeAlgebraRing::get_terms(const Value& v) const {
    const auto& rep = v.as<FreeAlgebraRep>();
    if (rep.nletters != order_ * order_)
        throw RingMismatch("free-algebra element over a different letter set");
    return rep.terms;
}

Value FreeAlgebraRing::letter(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw DimensionMismatch("letter index out of range");
    std::map<Word, mpq_class> t;
    t.emplace(Word{static_cast<unsigned short>(i * order_ + j)}, mpq_class(1));
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::zero() const {
    return make_value<FreeAlgebraRep>(order_ * order_, std::map<Word, mpq_class>{});
}

Value FreeAlgebraRing::one() const {
    std::map<Word, mpq_class> t;
    t.emplace(Word{}, mpq_class(1)); // the empty word
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::from_int(long long k) const {
    std::map<Word, mpq_class> t;
    if (k != 0)
        t.emplace(Word{}, mpq_class(static_cast<long>(k)));
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::add(const Value& a, const Value& b) const {
    auto t = get_terms(a);
    for (const auto& [w, c] : get_terms(b)) {
        auto [it, inserted] = t.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                t.erase(it);
        }
    }
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::sub(const Value& a, const Value& b) const {
    auto t = get_terms(a);
    for (const auto& [w, c] : get_terms(b)) {
        auto [it, inserted] = t.emplace(w, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                t.erase(it);
        }
    }
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::neg(const Value& a) const {
    auto t = get_terms(a);
    for (auto& [w, c] : t)
        c = -c;
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::mul(const Value& a, const Value& b) const {
    const auto& x = get_terms(a);
    const auto& y = get_terms(b);
    std::map<Word, mpq_class> t;
    for (const auto& [wx, cx] : x) {
        for (const auto& [wy, cy] : y) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            auto [it, inserted] = t.emplace(std::move(w), cx * cy);
            if (!inserted) {
                it->second += cx * cy;
                if (it->second == 0)
                    t.erase(it);
            }
        }
    }
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

Value FreeAlgebraRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    auto t = get_terms(x);
    const mpq_class d(static_cast<long>(k));
    for (auto& [w, c] : t)
        c /= d;
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

bool FreeAlgebraRing::equal(const Value& a, const Value& b) const {
    return get_terms(a) == get_terms(b);
}

Value FreeAlgebraRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> l(0, order_ * order_ - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    const int idx = l(rng);
    return add(letter(idx / order_, idx % order_), from_int(c(rng)));
}

std::string FreeAlgebraRing::letter_name(int idx) const {
    return "a" + std::to_string(idx / order_ + 1) + std::to_string(idx % order_ + 1);
}

std::string FreeAlgebraRing::to_string(const Value& a) const {
    const auto& t = get_terms(a);
    if (t.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : t) {
        if (!s.empty())
            s += " + ";
        std::string word;
        for (const auto id : w) {
            if (!word.empty())
                word += "*";
            word += letter_name(static_cast<int>(id));
        }
        if (word.empty())
            s += c.get_str();
        else if (c == 1)
            s += word;
        else
            s += c.get_str() + "*" + word;
    }
    return s;
}

Value FreeAlgebraRing::parse(const nlohmann::json& j) const {
    if (j.is_number_integer())
        return from_int(j.get<long long>());
    if (j.is_object() && j.contains("terms") && j["terms"].is_array()) {
        // {"terms": [[coeff, [letter ids...]], ...]}, as written by to_json
        std::map<Word, mpq_class> t;
        const int nletters = order_ * order_;
        for (const auto& term : j["terms"]) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
                !term[1].is_array())
                throw ParseError("bad free-algebra term encoding");
            Word w;
            for (const auto& id : term[1]) {
                if (!id.is_number_unsigned() || id.get<int>() >= nletters)
                    throw ParseError("bad letter id");
                w.push_back(static_cast<unsigned short>(id.get<unsigned>()));
            }
            const mpq_class c = parse_rational_string(term[0].get<std::string>());
            if (c != 0) {
                auto [it, inserted] = t.emplace(std::move(w), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0)
                        t.erase(it);
                }
            }
        }
        return make_value<FreeAlgebraRep>(nletters, std::move(t));
    }
    if (!j.is_string())
        throw ParseError("free-algebra entry must be a string");
    const std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == 'a') {
        if (s.size() == 3 && s[1] >= '1' && s[2] >= '1') {
            const int i = s[1] - '1';
            const int jj = s[2] - '1';
            if (i < order_ && jj < order_)
                return letter(i, jj);
        }
        throw ParseError("unknown letter '" + s + "'");
    }
    std::map<Word, mpq_class> t;
    mpq_class q = parse_rational_string(s);
    if (q != 0)
        t.emplace(Word{}, std::move(q));
    return make_value<FreeAlgebraRep>(order_ * order_, std::move(t));
}

nlohmann::json FreeAlgebraRing::to_json(const Value& a) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : get_terms(a)) {
        nlohmann::json word = nlohmann::json::array();
        for (const auto id : w)
            word.push_back(static_cast<unsigned>(id));
        terms.push_back(nlohmann::json::array({c.get_str(), word}));
    }
    return nlohmann::json{{"terms", terms}};
}

RingPtr make_free_algebra(int matrix_order) {
    return std::make_shared<FreeAlgebraRing>(matrix_order);
}

} // namespace edet
