#include "twoschur/serialize.hpp"

#include "twoschur/errors.hpp"

namespace twoschur {

using nlohmann::json;

namespace {

Partition partition_from(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2) throw ValidationError(std::string(key) + " must be a pair");
    return {v.at(0).get<Natural>(), v.at(1).get<Natural>()};
}

json space_json(const WeightSpace& s)
{
    return {{"r", s.r()}, {"twos", s.twos()}};
}

}  // namespace

json to_json(const AlgebraElement& x)
{
    const AlgebraContext& ctx = x.context();
    return {{"lambda", {ctx.lambda1(), ctx.lambda2()}}, {"p", ctx.p()}, {"coeffs", x.coeffs()}};
}

AlgebraElement element_from_json(const json& j)
{
    try {
        const Partition lambda = partition_from(j, "lambda");
        const AlgebraContext ctx(lambda.first, lambda.second, j.at("p").get<Natural>());
        auto coeffs = j.at("coeffs").get<std::vector<Natural>>();
        std::vector<Residue> reduced;
        reduced.reserve(coeffs.size());
        for (Natural c : coeffs) {
            if (c >= ctx.p()) throw ValidationError("coefficient " + std::to_string(c) + " is not a canonical residue");
            reduced.push_back(static_cast<Residue>(c));
        }
        return AlgebraElement(ctx, std::move(reduced));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed element JSON: ") + e.what());
    }
}

json to_json(const SummandRecord& s)
{
    return {{"g", s.g}, {"mu", {s.mu.first, s.mu.second}}, {"B", s.b_value}, {"idempotent", s.idempotent.coeffs()}};
}

json to_json(const VerificationReport& report)
{
    json summands = json::array();
    for (const auto& s : report.summands) summands.push_back(to_json(s));
    return {
        {"lambda", {report.lambda.first, report.lambda.second}},
        {"p", report.p},
        {"summands", summands},
        {"checks",
         {{"idempotent", report.checks.idempotent},
          {"orthogonal", report.checks.orthogonal},
          {"sum_to_one", report.checks.sum_to_one},
          {"count_match", report.checks.count_match}}},
    };
}

VerificationReport report_from_json(const json& j)
{
    try {
        VerificationReport report;
        report.lambda = partition_from(j, "lambda");
        report.p = j.at("p").get<Residue>();
        const AlgebraContext ctx(report.lambda.first, report.lambda.second, report.p);
        for (const auto& s : j.at("summands")) {
            json element = {{"lambda", j.at("lambda")}, {"p", report.p}, {"coeffs", s.at("idempotent")}};
            report.summands.push_back(SummandRecord{s.at("g").get<Natural>(), partition_from(s, "mu"),
                                                    element_from_json(element), s.at("B").get<Residue>()});
        }
        const json& checks = j.at("checks");
        report.checks.idempotent = checks.at("idempotent").get<bool>();
        report.checks.orthogonal = checks.at("orthogonal").get<bool>();
        report.checks.sum_to_one = checks.at("sum_to_one").get<bool>();
        report.checks.count_match = checks.at("count_match").get<bool>();
        report.expected_count = report.summands.size();
        return report;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed report JSON: ") + e.what());
    }
}

json to_json(const OperatorMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return {
        {"domain", space_json(m.domain())},
        {"codomain", space_json(m.codomain())},
        {"p", m.p()},
        {"basis_order", "colex"},
        {"domain_masks", m.domain().masks()},
        {"codomain_masks", m.codomain().masks()},
        {"rows", rows},
    };
}

json to_json(const OracleReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"max_r", c.max_r},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"first_failure", c.first_failure}});
    }
    return {{"ok", report.ok()}, {"checks", checks}};
}

}  // namespace twoschur
