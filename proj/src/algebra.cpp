#include "twoschur/algebra.hpp"

#include <algorithm>
#include <string>

#include "twoschur/errors.hpp"

namespace twoschur {

struct BinomialTables {
    std::size_t width;               // lambda2 + 1
    std::vector<Residue> low;        // [h * width + i] = C(h, i)
    std::vector<Residue> shifted;    // [k * width + b] = C(m + k, b)
};

namespace {

std::shared_ptr<const BinomialTables> make_tables(Natural m, Natural lambda2, Residue p)
{
    auto t = std::make_shared<BinomialTables>();
    t->width = static_cast<std::size_t>(lambda2) + 1;
    const std::size_t w = t->width;
    t->low.assign(w * w, 0);
    for (std::size_t h = 0; h < w; ++h) {
        for (std::size_t i = 0; i <= h; ++i) t->low[h * w + i] = lucas_binom(h, i, p);
    }
    const std::size_t rows = 2 * w - 1;
    t->shifted.assign(rows * w, 0);
    for (std::size_t k = 0; k < rows; ++k) {
        for (std::size_t b = 0; b < w; ++b) t->shifted[k * w + b] = lucas_binom(m + k, b, p);
    }
    return t;
}

void require_same(const AlgebraContext& a, const AlgebraContext& b)
{
    if (!(a == b)) {
        throw ContextMismatch("algebra elements from different contexts: (" + std::to_string(a.lambda1()) + "," +
                              std::to_string(a.lambda2()) + ") p=" + std::to_string(a.p()) + " vs (" +
                              std::to_string(b.lambda1()) + "," + std::to_string(b.lambda2()) +
                              ") p=" + std::to_string(b.p()));
    }
}

}  // namespace

AlgebraContext::AlgebraContext(Natural lambda1, Natural lambda2, Natural p) : lambda1_(lambda1), lambda2_(lambda2)
{
    if (lambda1 < lambda2) {
        throw ValidationError("not a partition: (" + std::to_string(lambda1) + "," + std::to_string(lambda2) + ")");
    }
    require_prime(p);
    p_ = static_cast<Residue>(p);
    if (lambda2 <= kTableThreshold) tables_ = make_tables(m(), lambda2, p_);
}

Residue AlgebraContext::binom_low(Natural h, Natural i) const
{
    if (tables_ && h < tables_->width && i < tables_->width) return tables_->low[h * tables_->width + i];
    return lucas_binom(h, i, p_);
}

Residue AlgebraContext::binom_shifted(Natural k, Natural b) const
{
    if (tables_ && k < 2 * tables_->width - 1 && b < tables_->width) return tables_->shifted[k * tables_->width + b];
    return lucas_binom(m() + k, b, p_);
}

AlgebraElement::AlgebraElement(AlgebraContext ctx) : ctx_(std::move(ctx)), coeffs_(ctx_.dimension(), 0) {}

AlgebraElement::AlgebraElement(AlgebraContext ctx, std::vector<Residue> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != ctx_.dimension()) {
        throw ValidationError("coefficient vector has length " + std::to_string(coeffs_.size()) + ", expected " +
                              std::to_string(ctx_.dimension()));
    }
    for (auto& c : coeffs_) c %= ctx_.p();
}

void AlgebraElement::set_coeff(Natural i, Residue value)
{
    if (i >= coeffs_.size()) throw RangeError("basis index " + std::to_string(i) + " exceeds lambda2");
    coeffs_[i] = value % ctx_.p();
}

bool AlgebraElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::optional<Natural> AlgebraElement::support_min() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
}

std::optional<Natural> AlgebraElement::support_max() const
{
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same(ctx_, other.ctx_);
    const Residue p = ctx_.p();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = static_cast<Residue>((Natural{coeffs_[i]} + other.coeffs_[i]) % p);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same(ctx_, other.ctx_);
    const Residue p = ctx_.p();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = static_cast<Residue>((Natural{coeffs_[i]} + p - other.coeffs_[i]) % p);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& other)
{
    *this = mul(*this, other);
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a)
{
    return zero(a.context()) - a;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same(a.ctx_, b.ctx_);
    return a.coeffs_ == b.coeffs_;
}

AlgebraElement zero(const AlgebraContext& ctx)
{
    return AlgebraElement(ctx);
}

AlgebraElement one(const AlgebraContext& ctx)
{
    return basis_elem(ctx, 0);
}

AlgebraElement basis_elem(const AlgebraContext& ctx, Natural i)
{
    AlgebraElement e(ctx);
    if (i <= ctx.lambda2()) e.set_coeff(i, 1);
    return e;
}

Residue structure_constant(const AlgebraContext& ctx, Natural i, Natural j, Natural h)
{
    if (h < std::max(i, j) || h > i + j) {
        throw RangeError("structure constant index h=" + std::to_string(h) + " outside [max(i,j), i+j]");
    }
    const Natural p = ctx.p();
    Natural c = lucas_binom(h, i, p);
    c = c * lucas_binom(h, j, p) % p;
    c = c * lucas_binom(ctx.m() + i + j, i + j - h, p) % p;
    return static_cast<Residue>(c);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y)
{
    return x + y;
}

AlgebraElement scale(const AlgebraElement& x, Natural c)
{
    const Residue p = x.context().p();
    c %= p;
    std::vector<Residue> out(x.coeffs());
    for (auto& v : out) v = static_cast<Residue>(Natural{v} * c % p);
    return AlgebraElement(x.context(), std::move(out));
}

// Hot loop: O(|supp x| * |supp y| * min(i, j)) table lookups.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y)
{
    require_same(x.context(), y.context());
    const AlgebraContext& ctx = x.context();
    const Natural p = ctx.p();
    const Natural top = ctx.lambda2();

    std::vector<std::size_t> sx;
    std::vector<std::size_t> sy;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] != 0) sx.push_back(i);
    }
    for (std::size_t j = 0; j < y.coeffs().size(); ++j) {
        if (y.coeffs()[j] != 0) sy.push_back(j);
    }

    std::vector<Natural> acc(ctx.dimension(), 0);
    for (std::size_t i : sx) {
        const Natural xi = x.coeffs()[i];
        for (std::size_t j : sy) {
            const Natural w = xi * y.coeffs()[j] % p;
            const Natural hi = std::min<Natural>(i + j, top);
            for (Natural h = std::max(i, j); h <= hi; ++h) {
                const Natural a = ctx.binom_low(h, i);
                if (a == 0) continue;
                const Natural b = ctx.binom_low(h, j);
                if (b == 0) continue;
                const Natural c = ctx.binom_shifted(i + j, i + j - h);
                if (c == 0) continue;
                acc[h] += w * (a * b % p) % p * c % p;
            }
        }
    }
    std::vector<Residue> out(acc.size());
    for (std::size_t h = 0; h < acc.size(); ++h) out[h] = static_cast<Residue>(acc[h] % p);
    return AlgebraElement(ctx, std::move(out));
}

bool equals(const AlgebraElement& x, const AlgebraElement& y)
{
    return x == y;
}

AlgebraElement power(const AlgebraElement& x, unsigned n)
{
    AlgebraElement result = one(x.context());
    AlgebraElement base = x;
    while (n > 0) {
        if (n & 1U) result = mul(result, base);
        n >>= 1U;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

AlgebraElement restrict_to(const AlgebraElement& x, const AlgebraContext& target)
{
    const AlgebraContext& src = x.context();
    if (src.m() != target.m() || src.p() != target.p()) {
        throw ContextMismatch("restrict_to requires the same m and p");
    }
    std::vector<Residue> out(target.dimension(), 0);
    const std::size_t n = std::min(out.size(), x.coeffs().size());
    std::copy_n(x.coeffs().begin(), n, out.begin());
    return AlgebraElement(target, std::move(out));
}

}  // namespace twoschur
