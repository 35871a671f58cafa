#pragma once

// Brute-force realization of M^lambda inside the tensor space E^{(x) r}, n = 2.
//
// A basis tensor v_{i_1} (x) ... (x) v_{i_r} is identified with the set of
// positions holding v_2, stored as a bitmask (bit k-1 <-> position k). The
// weight-(r - k, k) space has basis the k-subsets of {1..r} in colexicographic
// order, which for fixed popcount is increasing numeric order of the masks.
//
// e lowers a v_2 to a v_1 and f raises a v_1 to a v_2. The divided powers
// e^(i) = e^i / i! and f^(i) = f^i / i! act integrally by summing over the
// i-subsets of positions they change, and b(i) = 1_lambda f^(i) e^(i) 1_lambda.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoschur/algebra.hpp"
#include "twoschur/decompose.hpp"

namespace twoschur {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxTensorDegree = 24;

/// The weight space with `twos` copies of v_2 among r factors. A twos value
/// outside [0, r] gives the zero space, which is how maps into a weight that
/// is not a composition vanish.
class WeightSpace {
public:
    WeightSpace(unsigned r, long twos);

    unsigned r() const { return r_; }
    long twos() const { return twos_; }
    std::size_t dimension() const { return masks_.size(); }
    const std::vector<Mask>& masks() const { return masks_; }
    Mask mask(std::size_t index) const { return masks_[index]; }
    /// Colex rank of a mask with the right popcount; throws RangeError otherwise.
    std::size_t index(Mask mask) const;
    bool contains(Mask mask) const;

    friend bool operator==(const WeightSpace& a, const WeightSpace& b) { return a.r_ == b.r_ && a.twos_ == b.twos_; }

private:
    unsigned r_;
    long twos_;
    std::vector<Mask> masks_;
};

class WeightVector {
public:
    explicit WeightVector(WeightSpace space, Residue p = 3);

    const WeightSpace& space() const { return space_; }
    Residue p() const { return p_; }
    const std::vector<Residue>& coeffs() const { return coeffs_; }

    Residue coeff(Mask mask) const;
    void add_at(Mask mask, Natural value);
    void set_at(Mask mask, Natural value);

    /// Coefficient map keyed by mask, dropping zeros.
    std::vector<std::pair<Mask, Residue>> terms() const;

    bool is_zero() const;

    WeightVector& operator+=(const WeightVector& other);
    WeightVector& operator-=(const WeightVector& other);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    WeightVector scaled(Natural c) const;

    friend bool operator==(const WeightVector& a, const WeightVector& b);

private:
    WeightSpace space_;
    Residue p_;
    std::vector<Residue> coeffs_;
};

/// The basis tensor for `mask` in its weight space.
WeightVector basis_vector(unsigned r, Mask mask, Residue p = 3);

/// A linear map between weight spaces; entries are residues mod p, stored
/// row-major with rows indexed by the codomain basis.
class OperatorMatrix {
public:
    OperatorMatrix(WeightSpace domain, WeightSpace codomain, Residue p = 3);

    const WeightSpace& domain() const { return domain_; }
    const WeightSpace& codomain() const { return codomain_; }
    Residue p() const { return p_; }
    std::size_t rows() const { return codomain_.dimension(); }
    std::size_t cols() const { return domain_.dimension(); }

    Residue at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
    void set(std::size_t row, std::size_t col, Natural value) { entries_[row * cols() + col] = static_cast<Residue>(value % p_); }
    const std::vector<Residue>& entries() const { return entries_; }

    /// Composition: (*this) after `rhs`. Throws ContextMismatch on shape mismatch.
    OperatorMatrix operator*(const OperatorMatrix& rhs) const;
    OperatorMatrix& operator+=(const OperatorMatrix& rhs);
    OperatorMatrix scaled(Natural c) const;
    WeightVector apply(const WeightVector& v) const;

    bool is_zero() const;
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

private:
    WeightSpace domain_;
    WeightSpace codomain_;
    Residue p_;
    std::vector<Residue> entries_;
};

OperatorMatrix identity_matrix(const WeightSpace& space, Residue p = 3);

/// Rank over F_p by Gaussian elimination.
std::size_t rank(const OperatorMatrix& m);

/// e^(i) applied to a vector: each mask S maps to the sum of S \ T over the
/// i-subsets T of S.
WeightVector apply_divided_e(const WeightVector& v, unsigned i);
/// f^(i) applied to a vector: each mask S maps to the sum of S u T over the
/// i-subsets T of the complement of S.
WeightVector apply_divided_f(const WeightVector& v, unsigned i);

/// Matrices of e^(i), f^(i) with domain the weight-lambda space; lambda is a
/// composition of r.
OperatorMatrix divided_e(unsigned r, const Partition& lambda, unsigned i, Residue p = 3);
OperatorMatrix divided_f(unsigned r, const Partition& lambda, unsigned i, Residue p = 3);

/// b(i) = f^(i) e^(i) on the weight-lambda space.
OperatorMatrix realize_b(unsigned r, const Partition& lambda, unsigned i, Residue p = 3);

/// sum_i x_i b(i) as a matrix on M^lambda, lambda taken from x's context.
OperatorMatrix realize_element(const AlgebraElement& x);

/// x acting on v; x's (lambda, p) must match v's weight space.
WeightVector apply_element(const AlgebraElement& x, const WeightVector& v);

/// Polytabloid generating the copy of S^mu in M^lambda, for the standard
/// mu-tableau whose columns are (1,2), (3,4), ..., (2 mu2 - 1, 2 mu2):
/// omega sums the weight-lambda tensors with v_2 at every second-row position
/// 2, 4, ..., 2 mu2, and the result is omega * prod_k (1 - (2k-1 2k)).
/// Throws ValidationError unless mu dominates lambda, both two-row partitions of r.
WeightVector specht_generator(unsigned r, const Partition& lambda, const Partition& mu, Residue p = 3);

/// x -> (v_1 (x) v_2 - v_2 (x) v_1) (x) x, from weight (a, b) in degree r to
/// weight (a+1, b+1) in degree r+2.
WeightVector j_map(const WeightVector& v);
/// Matrix of j_map on the given space.
OperatorMatrix j_matrix(const WeightSpace& space, Residue p = 3);

// Individual cross-checks. Each returns an empty optional on success and a
// description of the first counterexample otherwise.

/// realize_b(i) realize_b(j) == realize_element(b(i) b(j)) for all i, j <= lambda2.
std::optional<std::string> check_structure_constants(const Partition& lambda);
/// Every constructed e_{m,g} realizes to an idempotent matrix.
std::optional<std::string> check_idempotent_matrices(const Partition& lambda);
/// j(e x) == e j(x) on every basis tensor x of M^lambda, for every g <= lambda2 + 1
/// with B(m, g) != 0; also checks j is injective on M^lambda.
std::optional<std::string> check_j_commutation(const Partition& lambda);
/// e_{m,g} kills the polytabloid for mu unless g = lambda2 - mu2, for every
/// summand label mu and every constructed e_{m,g}.
std::optional<std::string> check_specht_nonvanishing(const Partition& lambda);

struct OracleCheck {
    std::string name;
    unsigned max_r = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool ok() const;
};

struct OracleLimits {
    unsigned structure_r = 12;
    unsigned idempotent_r = 12;
    unsigned commutation_r = 8;
    unsigned specht_r = 10;
};

/// Runs every check above over all two-row partitions within the limits.
OracleReport cross_validate(const OracleLimits& limits);
/// All four checks up to the same r.
OracleReport cross_validate(unsigned r_max);

}  // namespace twoschur
