#include "edet/matrix_io.hpp"

#include <fstream>

#include "edet/ring_registry.hpp"

namespace edet {

Matrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix file needs 'ring', 'n' and 'entries'");
    if (!j["n"].is_number_integer())
        throw ParseError("'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1)
        throw ParseError("'n' must be >= 1");
    const auto& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("'entries' must be an array of " + std::to_string(n) + " rows");
    Matrix a(ring, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                             " entries");
        for (int jj = 0; jj < n; ++jj)
            a.set(i, jj, ring->parse(row[static_cast<size_t>(jj)]));
    }
    return a;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string())
        throw ParseError("matrix file needs a 'ring' name");
    return matrix_from_json(j, make_ring(j["ring"].get<std::string>()));
}

nlohmann::json matrix_to_json(const Matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.order(); ++j)
            row.push_back(a.ring()->to_json(a.at(i, j)));
        rows.push_back(row);
    }
    return nlohmann::json{{"ring", a.ring()->name()}, {"n", a.order()}, {"entries", rows}};
}

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix_file(const Matrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write matrix file '" + path + "'");
    out << matrix_to_json(a).dump(2) << "\n";
}

} // namespace edet
