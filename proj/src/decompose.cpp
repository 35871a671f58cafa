#include "twoschur/decompose.hpp"

#include "twoschur/errors.hpp"
#include "twoschur/format.hpp"
#include "twoschur/idempotent.hpp"

namespace twoschur {

namespace {

std::string show(const Partition& p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void require_char3(const AlgebraContext& ctx)
{
    if (ctx.p() != 3) throw UnsupportedCharacteristic("decomposition is only implemented in characteristic 3");
}

}  // namespace

bool dominates(const Partition& mu, const Partition& lambda)
{
    return mu.second <= lambda.second;
}

Partition label_for(const AlgebraContext& ctx, Natural g)
{
    if (g > ctx.lambda2()) throw RangeError("g exceeds lambda2");
    return {ctx.lambda1() + g, ctx.lambda2() - g};
}

Natural g_for(const AlgebraContext& ctx, const Partition& mu)
{
    if (mu.first + mu.second != ctx.r() || mu.second > ctx.lambda2()) {
        throw ValidationError("mu " + show(mu) + " does not dominate lambda in the same size");
    }
    return ctx.lambda2() - mu.second;
}

std::vector<SummandRecord> summands(const AlgebraContext& ctx)
{
    require_char3(ctx);
    std::vector<SummandRecord> out;
    for (Natural g = 0; g <= ctx.lambda2(); ++g) {
        const Residue bv = big_b(ctx.m(), g, 3);
        if (bv == 0) continue;
        out.push_back(SummandRecord{g, label_for(ctx, g), build(ctx, g), bv});
    }
    return out;
}

unsigned kostka(const Partition& lambda, const Partition& mu, Natural p)
{
    if (lambda.first < lambda.second) throw ValidationError("lambda " + show(lambda) + " is not a partition");
    if (mu.first < mu.second) throw ValidationError("mu " + show(mu) + " is not a partition");
    if (lambda.first + lambda.second != mu.first + mu.second) {
        throw ValidationError("lambda " + show(lambda) + " and mu " + show(mu) + " have different sizes");
    }
    if (!dominates(mu, lambda)) return 0;
    return big_b(lambda.first - lambda.second, lambda.second - mu.second, p) != 0 ? 1U : 0U;
}

VerificationReport verify_complete_set(const AlgebraContext& ctx)
{
    require_char3(ctx);
    VerificationReport report;
    report.lambda = {ctx.lambda1(), ctx.lambda2()};
    report.p = ctx.p();
    report.summands = summands(ctx);

    auto fail = [&report](const std::string& why) {
        if (report.first_failure.empty()) report.first_failure = why;
    };

    report.checks.idempotent = true;
    for (const auto& s : report.summands) {
        if (s.idempotent.is_zero() || !(mul(s.idempotent, s.idempotent) == s.idempotent)) {
            report.checks.idempotent = false;
            fail("e_{" + std::to_string(ctx.m()) + "," + std::to_string(s.g) + "} is not a non-zero idempotent: " +
                 to_text(s.idempotent));
        }
    }

    report.checks.orthogonal = true;
    for (std::size_t a = 0; a < report.summands.size(); ++a) {
        for (std::size_t b = a + 1; b < report.summands.size(); ++b) {
            if (!mul(report.summands[a].idempotent, report.summands[b].idempotent).is_zero()) {
                report.checks.orthogonal = false;
                fail("e_{m," + std::to_string(report.summands[a].g) + "} e_{m," + std::to_string(report.summands[b].g) +
                     "} != 0");
            }
        }
    }

    AlgebraElement total = zero(ctx);
    for (const auto& s : report.summands) total += s.idempotent;
    report.checks.sum_to_one = total == one(ctx);
    if (!report.checks.sum_to_one) fail("sum of idempotents is " + to_text(total));

    // Count from the unshortcut factor product, compare with the binomial count.
    for (Natural g = 0; g <= ctx.lambda2(); ++g) {
        if (big_b(ctx.m(), g, 3) != 0) ++report.expected_count;
        if (!build_prefix(ctx, g, product_length(ctx, g), false).is_zero()) ++report.nonzero_count;
    }
    report.checks.count_match =
        report.nonzero_count == report.expected_count && report.summands.size() == report.expected_count;
    if (!report.checks.count_match) {
        fail("count mismatch: " + std::to_string(report.nonzero_count) + " non-zero products, " +
             std::to_string(report.expected_count) + " expected");
    }
    return report;
}

std::vector<Partition> two_row_partitions(Natural max_r)
{
    std::vector<Partition> out;
    for (Natural r = 0; r <= max_r; ++r) {
        for (Natural l2 = 0; 2 * l2 <= r; ++l2) out.emplace_back(r - l2, l2);
    }
    return out;
}

}  // namespace twoschur
