#include "twoschur/idempotent.hpp"

#include <algorithm>
#include <limits>

#include "twoschur/errors.hpp"
#include "twoschur/format.hpp"

namespace twoschur {

namespace {

constexpr Natural kSaturated = std::numeric_limits<Natural>::max();

void require_char3(const AlgebraContext& ctx, const char* what)
{
    if (ctx.p() != 3) {
        throw UnsupportedCharacteristic(std::string(what) + " is only defined in characteristic 3, got p=" +
                                        std::to_string(ctx.p()));
    }
}

// b(n) for n that may have saturated; out-of-range indices truncate to zero.
AlgebraElement b_at(const AlgebraContext& ctx, Natural n)
{
    return basis_elem(ctx, n);
}

Natural twice(Natural q)
{
    return q > kSaturated / 2 ? kSaturated : 2 * q;
}

// x * b(offset) for x supported below the digit block that starts at offset,
// which is a plain index shift: b(offset) b(k) = b(offset + k).
AlgebraElement shifted(const AlgebraElement& x, Natural offset)
{
    AlgebraElement out(x.context());
    const Natural top = x.context().lambda2();
    for (Natural k = 0; k < x.coeffs().size(); ++k) {
        const Residue c = x.coeffs()[k];
        if (c == 0 || offset > top || k > top - offset) continue;
        out.set_coeff(offset + k, c);
    }
    return out;
}

}  // namespace

IdempotentSpec::IdempotentSpec(Natural m, Natural g) : m_(m), g_(g)
{
    for (auto [a, b] : factor_digits(m, g, 3)) factors_.push_back(FactorKind{a, b});
}

bool IdempotentSpec::valid() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const FactorKind& f) { return f.admissible(); });
}

std::vector<std::size_t> IdempotentSpec::index_set(unsigned z, bool j_set) const
{
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < factors_.size(); ++u) {
        const FactorKind f = factors_[u];
        if (f.admissible() && f.residue_class() == z && f.in_j_set() == j_set) out.push_back(u);
    }
    return out;
}

AlgebraElement factor_element(const AlgebraContext& ctx, std::size_t u, FactorKind kind)
{
    require_char3(ctx, "factor_element");
    const Natural q = saturating_pow(3, u);
    const AlgebraElement id = one(ctx);
    const AlgebraElement b1 = b_at(ctx, q);
    const AlgebraElement b2 = b_at(ctx, twice(q));
    if (!kind.admissible()) return zero(ctx);
    switch (kind.a * 3 + kind.b) {
    case 0:  // C(0,0)
        return id + b1 - b2;
    case 7:  // C(2,1)
        return b2 - b1;
    case 3:  // C(1,0)
        return id - b2;
    case 8:  // C(2,2)
        return b2;
    case 6:  // C(2,0)
        return id - b1 + b2;
    case 4:  // C(1,1)
        return b1 - b2;
    default:
        return zero(ctx);
    }
}

std::size_t product_length(const AlgebraContext& ctx, Natural g)
{
    std::size_t len = factor_digits(ctx.m(), g, 3).size();
    while (saturating_pow(3, len) <= ctx.lambda2()) ++len;
    return len;
}

AlgebraElement build_prefix(const AlgebraContext& ctx, Natural g, std::size_t t, bool inclusive)
{
    require_char3(ctx, "build_prefix");
    const IdempotentSpec spec(ctx.m(), g);
    std::size_t end = inclusive ? (t == std::numeric_limits<std::size_t>::max() ? t : t + 1) : t;
    end = std::min(end, product_length(ctx, g));

    AlgebraElement result = one(ctx);
    const AlgebraElement id = one(ctx);
    for (std::size_t u = 0; u < end; ++u) {
        const FactorKind kind = spec.factor(u);
        if (!kind.admissible()) return zero(ctx);
        const AlgebraElement w = factor_element(ctx, u, kind);
        if (w == id) continue;
        result = mul(result, w);
    }
    return result;
}

AlgebraElement build(const AlgebraContext& ctx, Natural g)
{
    require_char3(ctx, "build");
    if (g > ctx.lambda2() || big_b(ctx.m(), g, 3) == 0) return zero(ctx);
    return build_prefix(ctx, g, product_length(ctx, g), false);
}

AlgebraElement psi(const AlgebraContext& ctx, std::size_t u)
{
    const Natural p = ctx.p();
    const Natural q = saturating_pow(p, u);
    const Natural low = truncate_below(ctx.m(), p, u);
    AlgebraElement out(ctx);
    if (q <= 1) return out;
    // C(low, q - k) vanishes unless q - k <= low.
    const Natural first = q - std::min(low, q - 1);
    const Natural last = std::min(q - 1, ctx.lambda2());
    for (Natural k = first; k <= last; ++k) out.set_coeff(k, lucas_binom(low, q - k, p));
    return out;
}

AlgebraElement square_closed_form(const AlgebraContext& ctx, std::size_t u, SquareIdentity which)
{
    require_char3(ctx, "square_closed_form");
    const Natural q = saturating_pow(3, u);
    if (twice(q) > ctx.lambda2()) {
        throw PreconditionError("closed forms need lambda2 >= 2*3^u; lambda2=" + std::to_string(ctx.lambda2()) +
                                ", u=" + std::to_string(u));
    }
    const Natural mu = digits(ctx.m(), 3)[u];
    const AlgebraElement ps = psi(ctx, u);
    const AlgebraElement b1 = basis_elem(ctx, q);
    const AlgebraElement b2 = basis_elem(ctx, 2 * q);
    switch (which) {
    case SquareIdentity::b3sq:
        return scale(b1, lucas_binom(mu + 2, 1, 3)) + shifted(ps, q) + b2;
    case SquareIdentity::b2sq:
        return scale(b2, lucas_binom(mu + 1, 2, 3)) + scale(shifted(ps, 2 * q), lucas_binom(mu + 1, 1, 3));
    case SquareIdentity::b3b2:
        return scale(b2, 2 * lucas_binom(mu, 1, 3)) - shifted(ps, 2 * q);
    }
    throw PreconditionError("unknown identity");
}

AlgebraElement square_direct(const AlgebraContext& ctx, std::size_t u, SquareIdentity which)
{
    const Natural q = saturating_pow(3, u);
    const AlgebraElement b1 = basis_elem(ctx, q);
    const AlgebraElement b2 = basis_elem(ctx, twice(q));
    switch (which) {
    case SquareIdentity::b3sq:
        return mul(b1, b1);
    case SquareIdentity::b2sq:
        return mul(b2, b2);
    case SquareIdentity::b3b2:
        return mul(b1, b2);
    }
    throw PreconditionError("unknown identity");
}

AlgebraElement psi_recursion_rhs(const AlgebraContext& ctx, std::size_t t)
{
    require_char3(ctx, "psi_recursion_rhs");
    if (t == 0) throw PreconditionError("psi recursion needs t >= 1");
    const Natural q = saturating_pow(3, t - 1);
    if (twice(q) > ctx.lambda2()) {
        throw PreconditionError("psi recursion needs lambda2 >= 2*3^(t-1)");
    }
    const Natural d = digits(ctx.m(), 3)[t - 1];
    const AlgebraElement b1 = basis_elem(ctx, q);
    const AlgebraElement b2 = basis_elem(ctx, 2 * q);
    const AlgebraElement bracket =
        scale(one(ctx), lucas_binom(d, 2, 3)) + scale(b1, lucas_binom(d, 1, 3)) + scale(b2, lucas_binom(d, 0, 3));
    return mul(psi(ctx, t - 1), bracket) + scale(b1, lucas_binom(d, 2, 3)) + scale(b2, lucas_binom(d, 1, 3));
}

bool psi_recursion_check(const AlgebraContext& ctx, std::size_t t)
{
    return psi(ctx, t) == psi_recursion_rhs(ctx, t);
}

std::string factor_sequence_string(const AlgebraContext& ctx, Natural g)
{
    require_char3(ctx, "factor_sequence_string");
    const IdempotentSpec spec(ctx.m(), g);
    const AlgebraElement id = one(ctx);
    std::string out;
    for (std::size_t u = 0, n = product_length(ctx, g); u < n; ++u) {
        const FactorKind kind = spec.factor(u);
        if (!kind.admissible()) return "0";
        const AlgebraElement w = factor_element(ctx, u, kind);
        if (w == id) continue;
        out += "(" + to_text(w) + ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace twoschur
