#pragma once

// The commutative algebra S_F(lambda) = End(M^lambda) for a two-row partition
// lambda = (lambda1, lambda2), with canonical basis b(0), ..., b(lambda2) and
// structure constants
//
//   b(i) b(j) = sum_{h = max(i,j)}^{i+j} C(h,i) C(h,j) C(m+i+j, i+j-h) b(h),
//
// where m = lambda1 - lambda2 and b(h) = 0 for h > lambda2.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "twoschur/padic.hpp"

namespace twoschur {

struct BinomialTables;

class AlgebraContext {
public:
    /// Throws ValidationError unless lambda1 >= lambda2, InvalidPrime unless p is prime.
    AlgebraContext(Natural lambda1, Natural lambda2, Natural p);

    Natural lambda1() const { return lambda1_; }
    Natural lambda2() const { return lambda2_; }
    Natural r() const { return lambda1_ + lambda2_; }
    Natural m() const { return lambda1_ - lambda2_; }
    Residue p() const { return p_; }
    std::size_t dimension() const { return static_cast<std::size_t>(lambda2_) + 1; }

    /// C(h, i) mod p for 0 <= i, h <= lambda2.
    Residue binom_low(Natural h, Natural i) const;
    /// C(m + k, b) mod p for k <= 2 * lambda2 and b <= lambda2.
    Residue binom_shifted(Natural k, Natural b) const;

    friend bool operator==(const AlgebraContext& a, const AlgebraContext& b)
    {
        return a.lambda1_ == b.lambda1_ && a.lambda2_ == b.lambda2_ && a.p_ == b.p_;
    }

private:
    Natural lambda1_;
    Natural lambda2_;
    Residue p_;
    // Lucas values cached per context; absent above the size threshold.
    std::shared_ptr<const BinomialTables> tables_;
};

/// Largest lambda2 for which a context caches its binomial tables.
inline constexpr Natural kTableThreshold = 768;

class AlgebraElement {
public:
    /// The zero element of the algebra.
    explicit AlgebraElement(AlgebraContext ctx);
    /// Coefficients are reduced mod p; length must equal lambda2 + 1.
    AlgebraElement(AlgebraContext ctx, std::vector<Residue> coeffs);

    const AlgebraContext& context() const { return ctx_; }
    const std::vector<Residue>& coeffs() const { return coeffs_; }
    /// Coefficient of b(i); zero for i > lambda2.
    Residue coeff(Natural i) const { return i < coeffs_.size() ? coeffs_[i] : 0U; }
    void set_coeff(Natural i, Residue value);

    bool is_zero() const;
    /// Lowest / highest index with a non-zero coefficient.
    std::optional<Natural> support_min() const;
    std::optional<Natural> support_max() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const AlgebraElement& other);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
    friend AlgebraElement operator-(const AlgebraElement& a);

    /// Exact equality; throws ContextMismatch across contexts.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    AlgebraContext ctx_;
    std::vector<Residue> coeffs_;
};

AlgebraElement zero(const AlgebraContext& ctx);
AlgebraElement one(const AlgebraContext& ctx);

/// b(i), or the zero element when i > lambda2.
AlgebraElement basis_elem(const AlgebraContext& ctx, Natural i);

/// C(h,i) C(h,j) C(m+i+j, i+j-h) mod p, straight from lucas_binom.
/// Throws RangeError unless max(i,j) <= h <= i+j.
Residue structure_constant(const AlgebraContext& ctx, Natural i, Natural j, Natural h);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, Natural c);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
bool equals(const AlgebraElement& x, const AlgebraElement& y);

/// x^n by repeated squaring; x^0 = 1.
AlgebraElement power(const AlgebraElement& x, unsigned n);

/// The same coefficients read in a context with a different lambda2 (and the
/// same m and p): entries above the new lambda2 are dropped, new ones are zero.
AlgebraElement restrict_to(const AlgebraElement& x, const AlgebraContext& target);

}  // namespace twoschur
