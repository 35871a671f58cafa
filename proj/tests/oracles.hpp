#pragma once

// Test-only reference computations. Nothing here calls the library's
// digit or Lucas routines, so the suites can compare against them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::vector<BigInt> factorials(unsigned n)
{
    std::vector<BigInt> f(n + 1);
    f[0] = 1;
    for (unsigned k = 1; k <= n; ++k) f[k] = f[k - 1] * k;
    return f;
}

/// C(a, b) mod p from exact factorials.
inline unsigned binom_mod_factorial(const std::vector<BigInt>& fact, unsigned a, unsigned b, unsigned p)
{
    if (b > a) return 0;
    const BigInt c = fact[a] / (fact[b] * fact[a - b]);
    return static_cast<unsigned>(c % p);
}

/// C(a, b) mod p with plain 64-bit arithmetic, for small arguments.
inline unsigned binom_mod_small(std::uint64_t a, std::uint64_t b, unsigned p)
{
    if (b > a) return 0;
    BigInt c = 1;
    for (std::uint64_t k = 0; k < b; ++k) c = c * (a - k) / (k + 1);
    return static_cast<unsigned>(c % p);
}

/// Exact Pascal rows 0..n; row a holds C(a, 0..a).
class PascalTriangle {
public:
    explicit PascalTriangle(unsigned n) : rows_(n + 1)
    {
        rows_[0] = {BigInt(1)};
        for (unsigned a = 1; a <= n; ++a) {
            rows_[a].resize(a + 1);
            rows_[a][0] = 1;
            rows_[a][a] = 1;
            for (unsigned b = 1; b < a; ++b) rows_[a][b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
        }
    }
    const BigInt& at(unsigned a, unsigned b) const { return rows_[a][b]; }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Schoolbook base-p addition: digit lists of a, b and the carry out of each column.
struct Addition {
    std::vector<unsigned> a_digits;
    std::vector<unsigned> b_digits;
    std::vector<unsigned> sum_digits;
    std::vector<unsigned> carries;
};

inline std::vector<unsigned> to_base(std::uint64_t x, unsigned p, std::size_t width)
{
    std::vector<unsigned> d(width, 0);
    for (std::size_t u = 0; u < width; ++u) {
        d[u] = static_cast<unsigned>(x % p);
        x /= p;
    }
    return d;
}

inline Addition add_columns(std::uint64_t a, std::uint64_t b, unsigned p, std::size_t width)
{
    Addition out{to_base(a, p, width), to_base(b, p, width), {}, {}};
    unsigned carry = 0;
    for (std::size_t u = 0; u < width; ++u) {
        const unsigned s = out.a_digits[u] + out.b_digits[u] + carry;
        out.sum_digits.push_back(s % p);
        carry = s / p;
        out.carries.push_back(carry);
    }
    return out;
}

/// Dense polynomial arithmetic in S_F(lambda) with structure constants from
/// exact integer binomials reduced mod p.
inline std::vector<unsigned> reference_product(const std::vector<unsigned>& x, const std::vector<unsigned>& y,
                                               std::uint64_t m, unsigned p)
{
    const std::size_t n = x.size();
    std::vector<unsigned> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (x[i] == 0 || y[j] == 0) continue;
            for (std::size_t h = std::max(i, j); h <= i + j && h < n; ++h) {
                const unsigned c = binom_mod_small(h, i, p) * binom_mod_small(h, j, p) % p *
                                   binom_mod_small(m + i + j, i + j - h, p) % p;
                out[h] = (out[h] + x[i] * y[j] % p * c) % p;
            }
        }
    }
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(0x5eed5eedULL);
    return engine;
}

}  // namespace oracle
