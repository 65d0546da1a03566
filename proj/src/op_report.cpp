#include "edet/op_report.hpp"

#include <cmath>

namespace edet {

namespace {

mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

int ceil_log2(int n) {
    int bits = 0;
    while ((1 << bits) < n)
        ++bits;
    return bits;
}

double ratio(std::uint64_t measured, const mpz_class& predicted) {
    if (predicted == 0)
        return 0.0;
    return static_cast<double>(measured) / predicted.get_d();
}

} // namespace

mpz_class predicted_additions_budget(int n) {
    return (3 * mpz_class(n) - 1) * factorial_z(n);
}

mpz_class predicted_multiplications_budget(int n) {
    return factorial_z(n) * n * ceil_log2(n);
}

double predicted_multiplications_reference(int n) {
    return factorial_z(n + 1).get_d() * std::log(static_cast<double>(n));
}

double OpCountReport::addition_ratio() const {
    return ratio(counts.additions + counts.subtractions, predicted_additions);
}

double OpCountReport::multiplication_ratio() const {
    return ratio(counts.multiplications, predicted_multiplications);
}

double OpCountReport::multiplication_ref_ratio() const {
    if (predicted_multiplications_ref <= 0)
        return 0.0;
    return static_cast<double>(counts.multiplications) / predicted_multiplications_ref;
}

namespace {
std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}
} // namespace

nlohmann::json OpCountReport::to_json() const {
    // All counts are decimal strings so arbitrary precision survives any
    // JSON parser.
    nlohmann::json tags = nlohmann::json::object();
    for (const auto& [tag, c] : counts.multiplications_by_tag)
        tags[tag] = std::to_string(c);
    return nlohmann::json{
        {"n", n},
        {"method", det_method_name(method)},
        {"additions", std::to_string(counts.additions)},
        {"subtractions", std::to_string(counts.subtractions)},
        {"multiplications", std::to_string(counts.multiplications)},
        {"divisions", std::to_string(counts.divisions)},
        {"multiplications_by_tag", tags},
        {"multiplications_untagged", std::to_string(counts.untagged_multiplications())},
        {"predicted_additions", predicted_additions.get_str()},
        {"predicted_multiplications", predicted_multiplications.get_str()},
        {"predicted_multiplications_ref", fixed6(predicted_multiplications_ref)},
        {"addition_ratio", fixed6(addition_ratio())},
        {"multiplication_ratio", fixed6(multiplication_ratio())},
        {"multiplication_ref_ratio", fixed6(multiplication_ref_ratio())},
    };
}

std::pair<Value, OpCountReport> measure(DetMethod m, const Matrix& a,
                                        const GammaAssignment& gamma, const EvalOptions& opt) {
    auto counting = std::make_shared<CountingRing>(a.ring());
    const Matrix instrumented = a.with_ring(counting);
    Value result = evaluate_method(m, instrumented, gamma, opt);

    OpCountReport report;
    report.n = a.order();
    report.method = m;
    report.counts = counting->counts();
    report.predicted_additions = predicted_additions_budget(a.order());
    report.predicted_multiplications = predicted_multiplications_budget(a.order());
    report.predicted_multiplications_ref = predicted_multiplications_reference(a.order());
    return {std::move(result), std::move(report)};
}

} // namespace edet
