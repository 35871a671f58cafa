#include "twoschur/tensor_oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "twoschur/errors.hpp"
#include "twoschur/format.hpp"
#include "twoschur/idempotent.hpp"

namespace twoschur {

namespace {

Natural small_binom(unsigned n, unsigned k)
{
    if (k > n) return 0;
    Natural c = 1;
    for (unsigned t = 0; t < k; ++t) c = c * (n - t) / (t + 1);
    return c;
}

std::string show(const Partition& p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

Mask full_mask(unsigned r)
{
    return r >= 32 ? ~Mask{0} : (Mask{1} << r) - 1;
}

// Calls fn(T) for every i-subset T of the set bits of `from`.
template <typename Fn>
void for_each_subset(Mask from, unsigned i, Fn&& fn)
{
    const unsigned n = static_cast<unsigned>(std::popcount(from));
    if (i > n) return;
    if (i == 0) {
        fn(Mask{0});
        return;
    }
    std::vector<unsigned> bits;
    for (unsigned b = 0; b < 32; ++b) {
        if (from & (Mask{1} << b)) bits.push_back(b);
    }
    // Gosper's hack over the index space [0, n).
    std::uint64_t combo = (std::uint64_t{1} << i) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (combo < limit) {
        Mask t = 0;
        for (unsigned k = 0; k < n; ++k) {
            if (combo & (std::uint64_t{1} << k)) t |= Mask{1} << bits[k];
        }
        fn(t);
        const std::uint64_t low = combo & (~combo + 1);
        const std::uint64_t ripple = combo + low;
        combo = (((ripple ^ combo) >> 2) / low) | ripple;
    }
}

Mask swap_positions(Mask s, unsigned bit_a, unsigned bit_b)
{
    const bool a = (s >> bit_a) & 1U;
    const bool b = (s >> bit_b) & 1U;
    if (a == b) return s;
    return s ^ ((Mask{1} << bit_a) | (Mask{1} << bit_b));
}

void require_same_space(const WeightVector& a, const WeightVector& b)
{
    if (!(a.space() == b.space()) || a.p() != b.p()) throw ContextMismatch("weight vectors from different spaces");
}

template <typename Acc>
std::vector<Residue> multiply_entries(const OperatorMatrix& a, const OperatorMatrix& b)
{
    const std::size_t n = a.rows();
    const std::size_t inner = a.cols();
    const std::size_t m = b.cols();
    const Residue p = a.p();
    std::vector<Acc> rhs(b.entries().begin(), b.entries().end());
    std::vector<Residue> out(n * m, 0);
    std::vector<Acc> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), Acc{0});
        const Residue* row = a.entries().data() + i * inner;
        for (std::size_t k = 0; k < inner; ++k) {
            const Acc x = static_cast<Acc>(row[k]);
            if (x == 0) continue;
            const Acc* brow = rhs.data() + k * m;
            for (std::size_t j = 0; j < m; ++j) acc[j] = static_cast<Acc>(acc[j] + x * brow[j]);
        }
        Residue* orow = out.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) orow[j] = static_cast<Residue>(acc[j] % p);
    }
    return out;
}

std::vector<Residue> multiply_entries_wide(const OperatorMatrix& a, const OperatorMatrix& b)
{
    const std::size_t n = a.rows();
    const std::size_t inner = a.cols();
    const std::size_t m = b.cols();
    const Natural p = a.p();
    std::vector<Residue> out(n * m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Natural s = 0;
            for (std::size_t k = 0; k < inner; ++k) s = (s + Natural{a.at(i, k)} * b.at(k, j)) % p;
            out[i * m + j] = static_cast<Residue>(s);
        }
    }
    return out;
}

OperatorMatrix combine(const std::vector<OperatorMatrix>& basis, const AlgebraElement& x)
{
    OperatorMatrix out(basis.front().domain(), basis.front().codomain(), basis.front().p());
    for (std::size_t i = 0; i < basis.size() && i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] != 0) out += basis[i].scaled(x.coeffs()[i]);
    }
    return out;
}

std::vector<OperatorMatrix> realize_all(const Partition& lambda, Residue p)
{
    const unsigned r = static_cast<unsigned>(lambda.first + lambda.second);
    std::vector<OperatorMatrix> out;
    for (unsigned i = 0; i <= lambda.second; ++i) out.push_back(realize_b(r, lambda, i, p));
    return out;
}

WeightSpace space_of(unsigned r, const Partition& lambda)
{
    if (lambda.first + lambda.second != r) {
        throw ValidationError("weight " + show(lambda) + " is not a composition of " + std::to_string(r));
    }
    return WeightSpace(r, static_cast<long>(lambda.second));
}

}  // namespace

// ---------------------------------------------------------------------------

WeightSpace::WeightSpace(unsigned r, long twos) : r_(r), twos_(twos)
{
    if (r > kMaxTensorDegree) {
        throw RangeError("tensor degree " + std::to_string(r) + " exceeds " + std::to_string(kMaxTensorDegree));
    }
    if (twos < 0 || twos > static_cast<long>(r)) return;
    masks_.reserve(small_binom(r, static_cast<unsigned>(twos)));
    if (twos == 0) {
        masks_.push_back(0);
        return;
    }
    const Mask limit = full_mask(r);
    Mask s = (Mask{1} << twos) - 1;
    while (true) {
        masks_.push_back(s);
        if (s == (limit & ~((Mask{1} << (r - twos)) - 1))) break;
        const Mask low = s & (~s + 1);
        const Mask ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
}

bool WeightSpace::contains(Mask mask) const
{
    return twos_ >= 0 && (mask & ~full_mask(r_)) == 0 && std::popcount(mask) == twos_;
}

std::size_t WeightSpace::index(Mask mask) const
{
    if (!contains(mask)) throw RangeError("mask not in weight space");
    std::size_t rank = 0;
    unsigned k = 0;
    for (unsigned b = 0; b < r_; ++b) {
        if (mask & (Mask{1} << b)) {
            ++k;
            rank += small_binom(b, k);
        }
    }
    return rank;
}

// ---------------------------------------------------------------------------

WeightVector::WeightVector(WeightSpace space, Residue p) : space_(std::move(space)), p_(p), coeffs_(space_.dimension(), 0)
{
    require_prime(p);
}

Residue WeightVector::coeff(Mask mask) const
{
    return space_.contains(mask) ? coeffs_[space_.index(mask)] : 0U;
}

void WeightVector::add_at(Mask mask, Natural value)
{
    Residue& c = coeffs_[space_.index(mask)];
    c = static_cast<Residue>((Natural{c} + value % p_) % p_);
}

void WeightVector::set_at(Mask mask, Natural value)
{
    coeffs_[space_.index(mask)] = static_cast<Residue>(value % p_);
}

std::vector<std::pair<Mask, Residue>> WeightVector::terms() const
{
    std::vector<std::pair<Mask, Residue>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) out.emplace_back(space_.mask(i), coeffs_[i]);
    }
    return out;
}

bool WeightVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& other)
{
    require_same_space(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + other.coeffs_[i]) % p_;
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other)
{
    require_same_space(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p_ - other.coeffs_[i]) % p_;
    return *this;
}

WeightVector WeightVector::scaled(Natural c) const
{
    WeightVector out(*this);
    for (auto& x : out.coeffs_) x = static_cast<Residue>(Natural{x} * (c % p_) % p_);
    return out;
}

bool operator==(const WeightVector& a, const WeightVector& b)
{
    require_same_space(a, b);
    return a.coeffs_ == b.coeffs_;
}

WeightVector basis_vector(unsigned r, Mask mask, Residue p)
{
    WeightVector v(WeightSpace(r, std::popcount(mask)), p);
    v.set_at(mask, 1);
    return v;
}

// ---------------------------------------------------------------------------

OperatorMatrix::OperatorMatrix(WeightSpace domain, WeightSpace codomain, Residue p)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), p_(p), entries_(rows() * cols(), 0)
{
    require_prime(p);
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const
{
    if (!(domain_ == rhs.codomain_) || p_ != rhs.p_) throw ContextMismatch("matrix shapes do not compose");
    OperatorMatrix out(rhs.domain_, codomain_, p_);
    const Natural bound = Natural{p_ - 1} * (p_ - 1) * std::max<std::size_t>(cols(), 1);
    if (bound < std::numeric_limits<std::uint16_t>::max()) {
        out.entries_ = multiply_entries<std::uint16_t>(*this, rhs);
    } else if (bound < std::numeric_limits<std::uint32_t>::max()) {
        out.entries_ = multiply_entries<std::uint32_t>(*this, rhs);
    } else {
        out.entries_ = multiply_entries_wide(*this, rhs);
    }
    return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs)
{
    if (!(domain_ == rhs.domain_) || !(codomain_ == rhs.codomain_) || p_ != rhs.p_) {
        throw ContextMismatch("matrix shapes differ");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] = (entries_[k] + rhs.entries_[k]) % p_;
    return *this;
}

OperatorMatrix OperatorMatrix::scaled(Natural c) const
{
    OperatorMatrix out(*this);
    for (auto& x : out.entries_) x = static_cast<Residue>(Natural{x} * (c % p_) % p_);
    return out;
}

WeightVector OperatorMatrix::apply(const WeightVector& v) const
{
    if (!(v.space() == domain_) || v.p() != p_) throw ContextMismatch("vector not in the matrix domain");
    WeightVector out(codomain_, p_);
    for (std::size_t row = 0; row < rows(); ++row) {
        Natural s = 0;
        for (std::size_t col = 0; col < cols(); ++col) s = (s + Natural{at(row, col)} * v.coeffs()[col]) % p_;
        out.set_at(codomain_.mask(row), s);
    }
    return out;
}

bool OperatorMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](Residue c) { return c == 0; });
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b)
{
    if (!(a.domain_ == b.domain_) || !(a.codomain_ == b.codomain_) || a.p_ != b.p_) {
        throw ContextMismatch("matrix shapes differ");
    }
    return a.entries_ == b.entries_;
}

OperatorMatrix identity_matrix(const WeightSpace& space, Residue p)
{
    OperatorMatrix id(space, space, p);
    for (std::size_t k = 0; k < space.dimension(); ++k) id.set(k, k, 1);
    return id;
}

std::size_t rank(const OperatorMatrix& m)
{
    const Natural p = m.p();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Natural> a(m.entries().begin(), m.entries().end());
    auto inv = [p](Natural x) {
        Natural result = 1;
        Natural base = x % p;
        for (Natural e = p - 2; e > 0; e >>= 1U) {
            if (e & 1U) result = result * base % p;
            base = base * base % p;
        }
        return result;
    };
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rk;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a[rk * cols + c], a[pivot * cols + c]);
        const Natural scale = inv(a[rk * cols + col]);
        for (std::size_t c = 0; c < cols; ++c) a[rk * cols + c] = a[rk * cols + c] * scale % p;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rk || a[row * cols + col] == 0) continue;
            const Natural f = a[row * cols + col];
            for (std::size_t c = 0; c < cols; ++c) {
                a[row * cols + c] = (a[row * cols + c] + p * p - f * a[rk * cols + c]) % p;
            }
        }
        ++rk;
    }
    return rk;
}

// ---------------------------------------------------------------------------

WeightVector apply_divided_e(const WeightVector& v, unsigned i)
{
    const WeightSpace& src = v.space();
    WeightVector out(WeightSpace(src.r(), src.twos() - static_cast<long>(i)), v.p());
    if (out.space().dimension() == 0) return out;
    for (auto [s, c] : v.terms()) {
        for_each_subset(s, i, [&](Mask t) { out.add_at(s ^ t, c); });
    }
    return out;
}

WeightVector apply_divided_f(const WeightVector& v, unsigned i)
{
    const WeightSpace& src = v.space();
    WeightVector out(WeightSpace(src.r(), src.twos() + static_cast<long>(i)), v.p());
    if (out.space().dimension() == 0) return out;
    const Mask all = full_mask(src.r());
    for (auto [s, c] : v.terms()) {
        for_each_subset(all & ~s, i, [&](Mask t) { out.add_at(s | t, c); });
    }
    return out;
}

OperatorMatrix divided_e(unsigned r, const Partition& lambda, unsigned i, Residue p)
{
    const WeightSpace domain = space_of(r, lambda);
    OperatorMatrix out(domain, WeightSpace(r, domain.twos() - static_cast<long>(i)), p);
    if (out.rows() == 0) return out;
    for (std::size_t col = 0; col < domain.dimension(); ++col) {
        const Mask s = domain.mask(col);
        for_each_subset(s, i, [&](Mask t) {
            const std::size_t row = out.codomain().index(s ^ t);
            out.set(row, col, Natural{out.at(row, col)} + 1);
        });
    }
    return out;
}

OperatorMatrix divided_f(unsigned r, const Partition& lambda, unsigned i, Residue p)
{
    const WeightSpace domain = space_of(r, lambda);
    OperatorMatrix out(domain, WeightSpace(r, domain.twos() + static_cast<long>(i)), p);
    if (out.rows() == 0) return out;
    const Mask all = full_mask(r);
    for (std::size_t col = 0; col < domain.dimension(); ++col) {
        const Mask s = domain.mask(col);
        for_each_subset(all & ~s, i, [&](Mask t) {
            const std::size_t row = out.codomain().index(s | t);
            out.set(row, col, Natural{out.at(row, col)} + 1);
        });
    }
    return out;
}

OperatorMatrix realize_b(unsigned r, const Partition& lambda, unsigned i, Residue p)
{
    const WeightSpace domain = space_of(r, lambda);
    const long lowered = domain.twos() - static_cast<long>(i);
    if (lowered < 0) return OperatorMatrix(domain, domain, p);
    const Partition middle{lambda.first + i, static_cast<Natural>(lowered)};
    return divided_f(r, middle, i, p) * divided_e(r, lambda, i, p);
}

OperatorMatrix realize_element(const AlgebraElement& x)
{
    const AlgebraContext& ctx = x.context();
    return combine(realize_all({ctx.lambda1(), ctx.lambda2()}, ctx.p()), x);
}

WeightVector apply_element(const AlgebraElement& x, const WeightVector& v)
{
    const AlgebraContext& ctx = x.context();
    if (ctx.r() != v.space().r() || static_cast<long>(ctx.lambda2()) != v.space().twos() || ctx.p() != v.p()) {
        throw ContextMismatch("algebra element does not act on this weight space");
    }
    WeightVector out(v.space(), v.p());
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const Residue c = x.coeffs()[i];
        if (c == 0) continue;
        const auto i_u = static_cast<unsigned>(i);
        out += apply_divided_f(apply_divided_e(v, i_u), i_u).scaled(c);
    }
    return out;
}

WeightVector specht_generator(unsigned r, const Partition& lambda, const Partition& mu, Residue p)
{
    if (lambda.first < lambda.second || mu.first < mu.second || lambda.first + lambda.second != r ||
        mu.first + mu.second != r || !dominates(mu, lambda)) {
        throw ValidationError("specht_generator needs two-row partitions mu " + show(mu) + " dominating lambda " +
                              show(lambda) + " of " + std::to_string(r));
    }
    const WeightSpace space = space_of(r, lambda);
    const auto columns = static_cast<unsigned>(mu.second);

    Mask forced = 0;
    for (unsigned k = 1; k <= columns; ++k) forced |= Mask{1} << (2 * k - 1);

    WeightVector v(space, p);
    for (Mask s : space.masks()) {
        if ((s & forced) == forced) v.set_at(s, 1);
    }
    for (unsigned k = 1; k <= columns; ++k) {
        WeightVector swapped(space, p);
        for (auto [s, c] : v.terms()) swapped.add_at(swap_positions(s, 2 * k - 2, 2 * k - 1), c);
        v -= swapped;
    }
    return v;
}

WeightVector j_map(const WeightVector& v)
{
    const WeightSpace& src = v.space();
    WeightVector out(WeightSpace(src.r() + 2, src.twos() + 1), v.p());
    for (auto [s, c] : v.terms()) {
        const Mask shifted = s << 2;
        out.add_at(shifted | Mask{0b10}, c);
        out.add_at(shifted | Mask{0b01}, Natural{v.p()} - c);
    }
    return out;
}

OperatorMatrix j_matrix(const WeightSpace& space, Residue p)
{
    OperatorMatrix out(space, WeightSpace(space.r() + 2, space.twos() + 1), p);
    for (std::size_t col = 0; col < space.dimension(); ++col) {
        const WeightVector image = j_map(basis_vector(space.r(), space.mask(col), p));
        for (std::size_t row = 0; row < out.rows(); ++row) out.set(row, col, image.coeffs()[row]);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<std::string> check_structure_constants(const Partition& lambda)
{
    const AlgebraContext ctx(lambda.first, lambda.second, 3);
    const auto basis = realize_all(lambda, 3);
    for (Natural i = 0; i <= lambda.second; ++i) {
        for (Natural j = 0; j <= lambda.second; ++j) {
            const OperatorMatrix lhs = basis[i] * basis[j];
            const OperatorMatrix rhs = combine(basis, mul(basis_elem(ctx, i), basis_elem(ctx, j)));
            if (!(lhs == rhs)) {
                return "lambda=" + show(lambda) + ": matrix b(" + std::to_string(i) + ") b(" + std::to_string(j) +
                       ") differs from " + to_text(mul(basis_elem(ctx, i), basis_elem(ctx, j)));
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_idempotent_matrices(const Partition& lambda)
{
    const AlgebraContext ctx(lambda.first, lambda.second, 3);
    const auto basis = realize_all(lambda, 3);
    for (const auto& s : summands(ctx)) {
        const OperatorMatrix e = combine(basis, s.idempotent);
        if (e.is_zero() || !(e * e == e)) {
            return "lambda=" + show(lambda) + ": e_{m," + std::to_string(s.g) + "} is not a non-zero idempotent matrix";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_j_commutation(const Partition& lambda)
{
    const AlgebraContext small(lambda.first, lambda.second, 3);
    const AlgebraContext large(lambda.first + 1, lambda.second + 1, 3);
    const unsigned r = static_cast<unsigned>(small.r());
    const WeightSpace space = space_of(r, lambda);

    if (rank(j_matrix(space)) != space.dimension()) return "lambda=" + show(lambda) + ": j is not injective";

    for (Natural g = 0; g <= lambda.second + 1; ++g) {
        if (big_b(small.m(), g, 3) == 0) continue;
        const AlgebraElement e_small = build(small, g);
        const AlgebraElement e_large = build(large, g);
        for (Mask s : space.masks()) {
            const WeightVector x = basis_vector(r, s);
            if (!(j_map(apply_element(e_small, x)) == apply_element(e_large, j_map(x)))) {
                return "lambda=" + show(lambda) + ", g=" + std::to_string(g) + ": j e != e j on basis mask " +
                       std::to_string(s);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_specht_nonvanishing(const Partition& lambda)
{
    const AlgebraContext ctx(lambda.first, lambda.second, 3);
    const unsigned r = static_cast<unsigned>(ctx.r());
    const auto parts = summands(ctx);
    for (const auto& label : parts) {
        const WeightVector eps = specht_generator(r, lambda, label.mu);
        if (eps.is_zero()) return "lambda=" + show(lambda) + ": zero polytabloid for mu=" + show(label.mu);
        for (const auto& s : parts) {
            const bool nonzero = !apply_element(s.idempotent, eps).is_zero();
            const bool expected = s.g == lambda.second - label.mu.second;
            if (nonzero != expected) {
                return "lambda=" + show(lambda) + ", mu=" + show(label.mu) + ": e_{m," + std::to_string(s.g) +
                       "} " + (nonzero ? "does not kill" : "kills") + " the polytabloid";
            }
        }
        if (r + 2 <= kMaxTensorDegree) {
            const Partition lifted_lambda{lambda.first + 1, lambda.second + 1};
            const Partition lifted_mu{label.mu.first + 1, label.mu.second + 1};
            if (!(j_map(eps) == specht_generator(r + 2, lifted_lambda, lifted_mu))) {
                return "lambda=" + show(lambda) + ", mu=" + show(label.mu) + ": j does not add a column";
            }
        }
    }
    return std::nullopt;
}

bool OracleReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.ok(); });
}

OracleReport cross_validate(const OracleLimits& limits)
{
    using CheckFn = std::optional<std::string> (*)(const Partition&);
    struct Entry {
        const char* name;
        unsigned max_r;
        CheckFn fn;
    };
    const Entry entries[] = {
        {"structure_constants", limits.structure_r, &check_structure_constants},
        {"idempotent_matrices", limits.idempotent_r, &check_idempotent_matrices},
        {"j_commutation", limits.commutation_r, &check_j_commutation},
        {"specht_nonvanishing", limits.specht_r, &check_specht_nonvanishing},
    };
    OracleReport report;
    for (const auto& entry : entries) {
        OracleCheck check{entry.name, entry.max_r, 0, 0, {}};
        for (const auto& lambda : two_row_partitions(entry.max_r)) {
            ++check.cases;
            if (auto failure = entry.fn(lambda)) {
                if (check.failures++ == 0) check.first_failure = *failure;
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

OracleReport cross_validate(unsigned r_max)
{
    return cross_validate(OracleLimits{r_max, r_max, r_max, r_max});
}

}  // namespace twoschur
