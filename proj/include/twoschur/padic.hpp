#pragma once

// Base-p digit arithmetic: expansions, Lucas binomials mod p, carries in
// p-ary addition, and the binomial B(m, g) = C(m + 2g, g).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace twoschur {

using Natural = std::uint64_t;
using Residue = std::uint32_t;

bool is_prime(Natural p);

// Throws InvalidPrime unless p is a prime that fits in a Residue.
void require_prime(Natural p);

/// Little-endian base-p expansion: digits[u] is the coefficient of p^u.
/// Zero is the empty sequence; otherwise the top digit is non-zero.
class DigitVector {
public:
    DigitVector(Natural value, unsigned p);

    unsigned prime() const { return p_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Digit u, or 0 past the end (the expansion is implicitly zero-padded).
    unsigned operator[](std::size_t u) const { return u < digits_.size() ? digits_[u] : 0U; }

    const std::vector<unsigned>& digits() const { return digits_; }
    Natural value() const;

    friend bool operator==(const DigitVector&, const DigitVector&) = default;

private:
    std::vector<unsigned> digits_;
    unsigned p_;
};

DigitVector digits(Natural a, Natural p);

/// a_{<s}: the number formed by the lowest s digits of a in base p.
Natural truncate_below(Natural a, Natural p, std::size_t s);

/// C(a, b) mod p by Lucas' theorem, as a residue in [0, p).
Residue lucas_binom(Natural a, Natural b, Natural p);

/// B(m, g) mod p.
Residue big_b(Natural m, Natural g, Natural p);

/// Carries x_0, x_1, ... of the base-p addition m + g. The entry before
/// column 0 is x_{-1} = 0 and is exposed through at(-1).
class CarrySequence {
public:
    CarrySequence() = default;
    explicit CarrySequence(std::vector<unsigned> carries) : carries_(std::move(carries)) {}

    /// x_u for u >= -1; zero beyond the stored length.
    unsigned at(long u) const
    {
        if (u < 0 || static_cast<std::size_t>(u) >= carries_.size()) return 0;
        return carries_[static_cast<std::size_t>(u)];
    }

    std::size_t size() const { return carries_.size(); }
    const std::vector<unsigned>& carries() const { return carries_; }

    bool all_zero() const;

private:
    std::vector<unsigned> carries_;
};

/// Length is one more than the longer of the two operands' digit lengths,
/// so the final (zero) carry is explicit.
CarrySequence carry_sequence(Natural m, Natural g, Natural p);

/// Pairs ((m+2g)_u, g_u), one per digit of max(m + 2g, g).
std::vector<std::pair<unsigned, unsigned>> factor_digits(Natural m, Natural g, Natural p);

/// p^u, saturating at the maximum Natural instead of overflowing.
Natural saturating_pow(Natural p, std::size_t u);

}  // namespace twoschur
