#pragma once

// Characteristic-3 primitive idempotents e_{m,g} of S_F(lambda).
//
// Each base-3 digit position u of B(m, g) = C(m+2g, g) contributes a factor
// C((m+2g)_u, g_u), and each admissible factor is sent to an element of the
// algebra built from b(3^u) and b(2*3^u):
//
//   C(0,0) -> 1 + b(3^u) - b(2*3^u)     C(2,1) -> b(2*3^u) - b(3^u)
//   C(1,0) -> 1 - b(2*3^u)              C(2,2) -> b(2*3^u)
//   C(2,0) -> 1 - b(3^u) + b(2*3^u)     C(1,1) -> b(3^u) - b(2*3^u)
//
// and e_{m,g} is the product over all u. Any other factor is zero.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twoschur/algebra.hpp"

namespace twoschur {

/// One digit factor C(a, b) of B(m, g) in base 3.
struct FactorKind {
    unsigned a = 0;
    unsigned b = 0;

    /// 0 <= b <= a <= 2; all six such pairs occur in the assignment table.
    bool admissible() const { return b <= a && a <= 2; }
    /// z in {0,1,2} with z = a - 2b mod 3; selects the index-set pair I^(z)/J^(z).
    unsigned residue_class() const { return (a + 3 * 2 - 2 * b) % 3; }
    /// True for the three factors whose element has no identity term (the J sets).
    bool in_j_set() const { return admissible() && b > 0; }

    friend bool operator==(const FactorKind&, const FactorKind&) = default;
};

/// The factor sequence of B(m, g) in base 3, derived from (m, g) on demand.
class IdempotentSpec {
public:
    IdempotentSpec(Natural m, Natural g);

    Natural m() const { return m_; }
    Natural g() const { return g_; }
    const std::vector<FactorKind>& factors() const { return factors_; }
    /// Factor u; positions past the expansion are C(0,0).
    FactorKind factor(std::size_t u) const { return u < factors_.size() ? factors_[u] : FactorKind{}; }
    /// Every factor admissible, equivalently B(m, g) != 0 mod 3.
    bool valid() const;

    /// I^(z) (j_set = false) or J^(z) (j_set = true), restricted to the stored positions.
    std::vector<std::size_t> index_set(unsigned z, bool j_set) const;

private:
    Natural m_;
    Natural g_;
    std::vector<FactorKind> factors_;
};

/// The algebra element for factor u of the given kind, truncated to lambda2.
/// Throws UnsupportedCharacteristic unless ctx.p() == 3.
AlgebraElement factor_element(const AlgebraContext& ctx, std::size_t u, FactorKind kind);

/// e_{m,g} with m taken from ctx. Zero when B(m,g) = 0 mod 3 or g > lambda2.
AlgebraElement build(const AlgebraContext& ctx, Natural g);

/// (e_{m,g})_{<=t} (inclusive) or (e_{m,g})_{<t}. The product runs over the
/// listed positions without any shortcut, so it is also a direct evaluation
/// of the full product once t covers every non-trivial factor.
AlgebraElement build_prefix(const AlgebraContext& ctx, Natural g, std::size_t t, bool inclusive);

/// Number of digit positions the product must cover in ctx: every digit of
/// m + 2g and every u with 3^u <= lambda2.
std::size_t product_length(const AlgebraContext& ctx, Natural g);

/// psi_{m,u} = sum_{k=1}^{p^u - 1} C(m_{<u}, p^u - k) b(k), truncated to lambda2.
AlgebraElement psi(const AlgebraContext& ctx, std::size_t u);

enum class SquareIdentity {
    b3sq,  // b(3^u)^2
    b2sq,  // b(2*3^u)^2
    b3b2,  // b(3^u) b(2*3^u)
};

/// Closed-form right-hand side of the selected product, assembled from psi_{m,u}
/// with the digit shift b(c*3^u) b(k) = b(c*3^u + k) for k < 3^u.
/// Throws PreconditionError unless lambda2 >= 2*3^u.
AlgebraElement square_closed_form(const AlgebraContext& ctx, std::size_t u, SquareIdentity which);

/// The left-hand side of the same identity computed by direct multiplication.
AlgebraElement square_direct(const AlgebraContext& ctx, std::size_t u, SquareIdentity which);

/// Right-hand side of the recursion expressing psi_{m,t} through psi_{m,t-1}.
AlgebraElement psi_recursion_rhs(const AlgebraContext& ctx, std::size_t t);

/// psi(ctx, t) == psi_recursion_rhs(ctx, t). Requires t >= 1 and lambda2 >= 2*3^(t-1).
bool psi_recursion_check(const AlgebraContext& ctx, std::size_t t);

/// The non-identity factors of e_{m,g} after truncation, rendered as
/// "(b(1) - b(2))(b(3) - b(6))(-b(9))". "1" when every factor is the identity.
std::string factor_sequence_string(const AlgebraContext& ctx, Natural g);

}  // namespace twoschur
