#include "edet/ring_registry.hpp"

#include <fstream>

#include "edet/free_algebra.hpp"
#include "edet/matrix_ring.hpp"
#include "edet/octonion.hpp"
#include "edet/polynomial.hpp"
#include "edet/prime_field.hpp"
#include "edet/quaternion.hpp"
#include "edet/rational.hpp"
#include "edet/table_algebra.hpp"

namespace edet {

namespace {

long long parse_integer(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw ParseError("bad " + what + " '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + " '" + s + "'");
    }
}

} // namespace

RingPtr make_ring(const std::string& name) {
    if (name == "rational")
        return make_rational_ring();
    if (name == "quaternion")
        return make_quaternion_ring();
    if (name == "octonion")
        return make_octonion_ring();
    if (name.rfind("mod:", 0) == 0) {
        const long long p = parse_integer(name.substr(4), "modulus");
        if (p < 2)
            throw ParseError("modulus must be a prime >= 2");
        return make_prime_field(static_cast<unsigned long long>(p));
    }
    if (name.rfind("poly:", 0) == 0)
        return make_polynomial_ring(static_cast<int>(parse_integer(name.substr(5), "order")));
    if (name.rfind("free:", 0) == 0)
        return make_free_algebra(static_cast<int>(parse_integer(name.substr(5), "order")));
    if (name.rfind("table:", 0) == 0) {
        const std::string path = name.substr(6);
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open table file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad JSON in table file '" + path + "': " + e.what());
        }
        return make_table_algebra(load_structure_table(j), name);
    }
    if (name.rfind("matrixring:", 0) == 0) {
        const std::string rest = name.substr(11);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError("matrixring needs the form matrixring:<m>:<inner-ring>");
        const long long m = parse_integer(rest.substr(0, colon), "matrix ring order");
        if (m < 1)
            throw ParseError("matrix ring order must be >= 1");
        return make_matrix_ring(static_cast<int>(m), make_ring(rest.substr(colon + 1)));
    }
    throw ParseError("unknown ring '" + name + "'");
}

} // namespace edet
