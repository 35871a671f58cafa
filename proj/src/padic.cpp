#include "twoschur/padic.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "twoschur/errors.hpp"

namespace twoschur {

namespace {

Natural mul_mod(Natural a, Natural b, Natural p)
{
    return static_cast<Natural>((static_cast<unsigned __int128>(a) * b) % p);
}

Natural pow_mod(Natural base, Natural exp, Natural p)
{
    Natural result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

// C(a, b) mod p for digits 0 <= b <= a < p; the denominator is a unit.
Natural digit_binom(Natural a, Natural b, Natural p)
{
    if (b > a) return 0;
    b = std::min(b, a - b);
    Natural num = 1;
    Natural den = 1;
    for (Natural k = 0; k < b; ++k) {
        num = mul_mod(num, a - k, p);
        den = mul_mod(den, k + 1, p);
    }
    return mul_mod(num, pow_mod(den, p - 2, p), p);
}

Natural checked_add(Natural a, Natural b)
{
    if (a > std::numeric_limits<Natural>::max() - b) throw RangeError("natural overflow in m + 2g");
    return a + b;
}

}  // namespace

bool is_prime(Natural p)
{
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Natural d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void require_prime(Natural p)
{
    if (p > std::numeric_limits<Residue>::max() || !is_prime(p)) {
        throw InvalidPrime("not a supported prime: " + std::to_string(p));
    }
}

DigitVector::DigitVector(Natural value, unsigned p) : p_(p)
{
    require_prime(p);
    while (value > 0) {
        digits_.push_back(static_cast<unsigned>(value % p));
        value /= p;
    }
}

Natural DigitVector::value() const
{
    Natural v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * p_ + *it;
    return v;
}

DigitVector digits(Natural a, Natural p)
{
    require_prime(p);
    return DigitVector(a, static_cast<unsigned>(p));
}

Natural truncate_below(Natural a, Natural p, std::size_t s)
{
    require_prime(p);
    Natural result = 0;
    Natural place = 1;
    for (std::size_t u = 0; u < s && a > 0; ++u) {
        result += (a % p) * place;
        a /= p;
        if (a > 0) place *= p;
    }
    return result;
}

Residue lucas_binom(Natural a, Natural b, Natural p)
{
    require_prime(p);
    if (b > a) return 0;
    Natural result = 1 % p;
    while (b > 0) {
        Natural au = a % p;
        Natural bu = b % p;
        if (bu > au) return 0;
        result = mul_mod(result, digit_binom(au, bu, p), p);
        a /= p;
        b /= p;
    }
    return static_cast<Residue>(result);
}

Residue big_b(Natural m, Natural g, Natural p)
{
    return lucas_binom(checked_add(m, checked_add(g, g)), g, p);
}

bool CarrySequence::all_zero() const
{
    return std::all_of(carries_.begin(), carries_.end(), [](unsigned x) { return x == 0; });
}

CarrySequence carry_sequence(Natural m, Natural g, Natural p)
{
    require_prime(p);
    const DigitVector md(m, static_cast<unsigned>(p));
    const DigitVector gd(g, static_cast<unsigned>(p));
    const std::size_t len = std::max(md.size(), gd.size()) + 1;
    std::vector<unsigned> carries(len, 0);
    unsigned incoming = 0;
    for (std::size_t u = 0; u < len; ++u) {
        const Natural column = Natural{md[u]} + gd[u] + incoming;
        carries[u] = column >= p ? 1U : 0U;
        incoming = carries[u];
    }
    return CarrySequence(std::move(carries));
}

std::vector<std::pair<unsigned, unsigned>> factor_digits(Natural m, Natural g, Natural p)
{
    require_prime(p);
    const DigitVector top(checked_add(m, checked_add(g, g)), static_cast<unsigned>(p));
    const DigitVector bottom(g, static_cast<unsigned>(p));
    const std::size_t len = std::max(top.size(), bottom.size());
    std::vector<std::pair<unsigned, unsigned>> out;
    out.reserve(len);
    for (std::size_t u = 0; u < len; ++u) out.emplace_back(top[u], bottom[u]);
    return out;
}

Natural saturating_pow(Natural p, std::size_t u)
{
    Natural result = 1;
    for (std::size_t k = 0; k < u; ++k) {
        if (result > std::numeric_limits<Natural>::max() / p) return std::numeric_limits<Natural>::max();
        result *= p;
    }
    return result;
}

}  // namespace twoschur
