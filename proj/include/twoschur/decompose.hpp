#pragma once

// Young-module decomposition of M^lambda in characteristic 3: each g <= lambda2
// with B(m, g) != 0 mod 3 gives one summand Y^mu, mu = (lambda1 + g, lambda2 - g),
// cut out by the idempotent e_{m,g}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoschur/algebra.hpp"

namespace twoschur {

/// Two-row partition (first, second) with first >= second.
using Partition = std::pair<Natural, Natural>;

/// mu dominates lambda among two-row partitions of the same size iff mu2 <= lambda2.
bool dominates(const Partition& mu, const Partition& lambda);

struct SummandRecord {
    Natural g = 0;
    Partition mu;
    AlgebraElement idempotent;
    Residue b_value = 0;
};

/// One record per g in [0, lambda2] with B(m, g) != 0 mod 3, ascending in g.
std::vector<SummandRecord> summands(const AlgebraContext& ctx);

/// Label mu of the summand cut out by e_{m,g}, and back.
Partition label_for(const AlgebraContext& ctx, Natural g);
Natural g_for(const AlgebraContext& ctx, const Partition& mu);

/// [M^lambda : Y^mu] in {0, 1}. Throws ValidationError unless both are
/// two-row partitions of the same size.
unsigned kostka(const Partition& lambda, const Partition& mu, Natural p);

struct CompleteSetChecks {
    bool idempotent = false;
    bool orthogonal = false;
    bool sum_to_one = false;
    bool count_match = false;

    bool ok() const { return idempotent && orthogonal && sum_to_one && count_match; }
};

struct VerificationReport {
    Partition lambda;
    Residue p = 3;
    std::vector<SummandRecord> summands;
    CompleteSetChecks checks;
    /// Number of g <= lambda2 whose full factor product is non-zero.
    std::size_t nonzero_count = 0;
    /// |{g <= lambda2 : B(m,g) != 0 mod 3}|.
    std::size_t expected_count = 0;
    /// Primitivity is certified by the summand count, never by attempting to split.
    std::string certification = "count";
    /// First failing check, empty when ok.
    std::string first_failure;

    bool ok() const { return checks.ok(); }
};

/// Checks the constructed e_{m,g} are idempotent, pairwise orthogonal, sum
/// to 1, and that their number matches the summand count. Mathematical
/// failures are recorded in the report, never thrown.
VerificationReport verify_complete_set(const AlgebraContext& ctx);

/// All two-row partitions (lambda1, lambda2) with lambda1 + lambda2 <= max_r,
/// ordered by r, then by lambda2.
std::vector<Partition> two_row_partitions(Natural max_r);

}  // namespace twoschur
