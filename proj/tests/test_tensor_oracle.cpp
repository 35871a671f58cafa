#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>

#include "oracles.hpp"
#include "twoschur/errors.hpp"
#include "twoschur/idempotent.hpp"
#include "twoschur/tensor_oracle.hpp"

using namespace twoschur;

namespace {

using IntVector = std::map<Mask, long long>;

// Plain e (one lowering at a time) on integer tensors.
IntVector lower_once(const IntVector& v)
{
    IntVector out;
    for (auto [s, c] : v) {
        for (Mask t = s; t != 0; t &= t - 1) out[s ^ (t & -t)] += c;
    }
    return out;
}

IntVector raise_once(const IntVector& v, unsigned r)
{
    IntVector out;
    for (auto [s, c] : v) {
        for (unsigned k = 0; k < r; ++k) {
            if (!(s >> k & 1U)) out[s | Mask{1} << k] += c;
        }
    }
    return out;
}

long long factorial(unsigned n)
{
    long long f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// Permutation matrix of the transposition (k k+1) on a weight space.
OperatorMatrix swap_matrix(const WeightSpace& space, unsigned k)
{
    OperatorMatrix out(space, space, 3);
    for (std::size_t col = 0; col < space.dimension(); ++col) {
        Mask s = space.mask(col);
        const Mask a = s >> k & 1U, b = s >> (k + 1) & 1U;
        if (a != b) s ^= (Mask{1} << k) | (Mask{1} << (k + 1));
        out.set(space.index(s), col, 1);
    }
    return out;
}

}  // namespace

TEST_CASE("weight spaces in colex order")
{
    const WeightSpace w(4, 2);
    CHECK(w.masks() == std::vector<Mask>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
    for (std::size_t k = 0; k < w.dimension(); ++k) CHECK(w.index(w.mask(k)) == k);
    CHECK_THROWS_AS(w.index(0b0111), RangeError);
    CHECK(WeightSpace(4, -1).dimension() == 0);
    CHECK(WeightSpace(4, 5).dimension() == 0);
    CHECK(WeightSpace(0, 0).dimension() == 1);
    CHECK_THROWS_AS(WeightSpace(kMaxTensorDegree + 1, 0), RangeError);
    for (unsigned r = 0; r <= 12; ++r) {
        for (unsigned k = 0; k <= r; ++k) {
            const WeightSpace s(r, k);
            CHECK(s.dimension() == static_cast<std::size_t>(oracle::binom_mod_small(r, k, 1000003)));
            for (std::size_t i = 1; i < s.dimension(); ++i) REQUIRE(s.mask(i - 1) < s.mask(i));
        }
    }
}

TEST_CASE("divided power matrices")
{
    const OperatorMatrix e = divided_e(2, {1, 1}, 1);
    CHECK(e.rows() == 1);
    CHECK(e.entries() == std::vector<Residue>{1, 1});
    const OperatorMatrix f = divided_f(2, {2, 0}, 1);
    CHECK(f.entries() == std::vector<Residue>{1, 1});
    CHECK(realize_b(2, {1, 1}, 1).entries() == std::vector<Residue>{1, 1, 1, 1});
    CHECK(realize_b(2, {1, 1}, 2).is_zero());
    CHECK(realize_b(5, {3, 2}, 0) == identity_matrix(WeightSpace(5, 2)));
    CHECK_THROWS_AS(divided_e(4, {2, 1}, 1), ValidationError);
}

TEST_CASE("divided powers are e^i / i! and f^i / i!")
{
    for (unsigned r = 1; r <= 9; ++r) {
        for (unsigned twos = 0; twos <= r; ++twos) {
            const WeightSpace space(r, twos);
            for (Mask s : space.masks()) {
                IntVector lowered{{s, 1}};
                IntVector raised{{s, 1}};
                for (unsigned i = 1; i <= r; ++i) {
                    lowered = lower_once(lowered);
                    raised = raise_once(raised, r);
                    const WeightVector de = apply_divided_e(basis_vector(r, s), i);
                    const WeightVector df = apply_divided_f(basis_vector(r, s), i);
                    const long long fi = factorial(i);
                    for (auto [t, c] : lowered) {
                        REQUIRE(c % fi == 0);
                        REQUIRE(de.coeff(t) == static_cast<Residue>((c / fi) % 3));
                    }
                    for (auto [t, c] : raised) {
                        REQUIRE(c % fi == 0);
                        REQUIRE(df.coeff(t) == static_cast<Residue>((c / fi) % 3));
                    }
                    if (lowered.empty()) CHECK(de.is_zero());
                    if (raised.empty()) CHECK(df.is_zero());
                }
            }
        }
    }
}

TEST_CASE("realized b(i) commute with the symmetric group")
{
    for (unsigned r = 2; r <= 8; ++r) {
        for (unsigned l2 = 0; 2 * l2 <= r; ++l2) {
            const WeightSpace space(r, l2);
            for (unsigned i = 0; i <= l2; ++i) {
                const OperatorMatrix b = realize_b(r, {r - l2, l2}, i);
                for (unsigned k = 0; k + 1 < r; ++k) {
                    const OperatorMatrix s = swap_matrix(space, k);
                    REQUIRE(b * s == s * b);
                }
            }
        }
    }
}

TEST_CASE("matrix plumbing")
{
    const WeightSpace w(5, 2);
    const OperatorMatrix id = identity_matrix(w);
    CHECK(rank(id) == w.dimension());
    CHECK(rank(OperatorMatrix(w, w)) == 0);
    CHECK(rank(realize_b(2, {1, 1}, 1)) == 1);
    const WeightVector v = basis_vector(5, 0b00101);
    CHECK(id.apply(v) == v);
    CHECK_THROWS_AS(id * divided_e(5, {4, 1}, 1), ContextMismatch);
    OperatorMatrix two = id;
    two += id;
    CHECK(two == id.scaled(2));
}

TEST_CASE("realize_element and apply_element agree")
{
    const AlgebraContext ctx(5, 3, 3);
    const AlgebraElement x = basis_elem(ctx, 1) + scale(basis_elem(ctx, 3), 2);
    const OperatorMatrix mx = realize_element(x);
    CHECK(realize_element(one(ctx)) == identity_matrix(WeightSpace(8, 3)));
    const WeightSpace w(8, 3);
    for (Mask s : w.masks()) {
        const WeightVector v = basis_vector(8, s);
        REQUIRE(apply_element(x, v) == mx.apply(v));
    }
    CHECK_THROWS_AS(apply_element(x, basis_vector(8, 0b11)), ContextMismatch);
}

TEST_CASE("specht generator")
{
    const WeightVector v = specht_generator(4, {2, 2}, {3, 1});
    const auto terms = v.terms();
    CHECK(terms.size() == 4);
    CHECK(v.coeff(0b0110) == 1);
    CHECK(v.coeff(0b0101) == 2);
    CHECK(v.coeff(0b1010) == 1);
    CHECK(v.coeff(0b1001) == 2);
    CHECK(specht_generator(4, {2, 2}, {2, 2}).terms().size() == 4);
    CHECK_THROWS_AS(specht_generator(4, {3, 1}, {2, 2}), ValidationError);
    CHECK_THROWS_AS(specht_generator(4, {2, 2}, {2, 1}), ValidationError);
}

TEST_CASE("j map")
{
    const WeightVector j0 = j_map(basis_vector(0, 0));
    CHECK(j0.space() == WeightSpace(2, 1));
    CHECK(j0.coeff(0b10) == 1);
    CHECK(j0.coeff(0b01) == 2);
    const WeightVector j1 = j_map(basis_vector(3, 0b100));
    CHECK(j1.coeff(0b10010) == 1);
    CHECK(j1.coeff(0b10001) == 2);
    for (unsigned r = 0; r <= 8; ++r) {
        for (unsigned k = 0; k <= r; ++k) CHECK(rank(j_matrix(WeightSpace(r, k))) == WeightSpace(r, k).dimension());
    }
}

TEST_CASE("idempotent ranks add up to the dimension")
{
    for (const auto& lambda : two_row_partitions(10)) {
        const AlgebraContext ctx(lambda.first, lambda.second, 3);
        std::size_t total = 0;
        for (Natural g = 0; g <= lambda.second; ++g) total += rank(realize_element(build(ctx, g)));
        CHECK(total == WeightSpace(static_cast<unsigned>(ctx.r()), static_cast<long>(lambda.second)).dimension());
    }
}

TEST_CASE("individual cross-checks")
{
    for (const auto& lambda : two_row_partitions(8)) {
        CHECK_FALSE(check_structure_constants(lambda).has_value());
        CHECK_FALSE(check_idempotent_matrices(lambda).has_value());
        CHECK_FALSE(check_j_commutation(lambda).has_value());
        CHECK_FALSE(check_specht_nonvanishing(lambda).has_value());
    }
}

TEST_CASE("cross_validate summary")
{
    const OracleReport report = cross_validate(6);
    CHECK(report.ok());
    REQUIRE(report.checks.size() == 4);
    for (const auto& c : report.checks) {
        CHECK(c.max_r == 6);
        CHECK(c.cases == 16);
    }
}
