#pragma once

// Exact linear algebra over Z and (1/2)Z: bilinear forms, row Hermite normal
// form, integral-span membership, isometries and standard lattices.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bnlat/errors.hpp"
#include "bnlat/integer.hpp"
#include "bnlat/rational.hpp"

namespace bnlat {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  /// row(dst) += factor * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) = checked::fma((*this)(dst, c), factor, (*this)(src, c));
  }

  void negate_row(std::size_t r) {
    for (auto& x : row(r)) x = checked::neg(x);
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = checked::fma(p(i, j), aik, b(k, j));
      }
    return p;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact integer determinant (fraction-free Bareiss elimination).
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(a(i, j)) * a(k, k) - static_cast<__int128>(a(i, k)) * a(k, j);
        const __int128 q = v / prev;  // exact by Bareiss
        if (q > std::numeric_limits<Int>::max() || q < std::numeric_limits<Int>::min())
          throw OverflowError("integer overflow in determinant");
        a(i, j) = static_cast<Int>(q);
      }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

/// An element of the rational span of a fixed basis whose coordinates all
/// lie in (1/2)Z. Stored as the doubled integer coordinates.
class HalfIntVector {
 public:
  HalfIntVector() = default;
  HalfIntVector(std::string basis, std::vector<Int> doubled)
      : basis_(std::move(basis)), doubled_(std::move(doubled)) {}

  static HalfIntVector zero(std::string basis, std::size_t rank) {
    return {std::move(basis), std::vector<Int>(rank, 0)};
  }
  /// Basis vector e_i (true coordinate 1).
  static HalfIntVector unit(std::string basis, std::size_t rank, std::size_t i) {
    if (i >= rank) throw DomainError("unit vector index out of range");
    std::vector<Int> d(rank, 0);
    d[i] = 2;
    return {std::move(basis), std::move(d)};
  }
  static HalfIntVector from_integers(std::string basis, std::span<const Int> coords) {
    std::vector<Int> d;
    d.reserve(coords.size());
    for (Int c : coords) d.push_back(checked::mul(c, 2));
    return {std::move(basis), std::move(d)};
  }

  const std::string& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return doubled_.size(); }
  const std::vector<Int>& doubled() const noexcept { return doubled_; }
  Int doubled(std::size_t i) const { return doubled_.at(i); }
  Rational coord(std::size_t i) const { return Rational::half(doubled_.at(i)); }

  bool is_integral() const noexcept {
    return std::all_of(doubled_.begin(), doubled_.end(), [](Int d) { return is_even(d); });
  }
  bool is_zero() const noexcept {
    return std::all_of(doubled_.begin(), doubled_.end(), [](Int d) { return d == 0; });
  }

  HalfIntVector operator-() const {
    HalfIntVector r = *this;
    for (auto& d : r.doubled_) d = checked::neg(d);
    return r;
  }
  friend HalfIntVector operator+(const HalfIntVector& a, const HalfIntVector& b) {
    require_same_space(a, b);
    HalfIntVector r = a;
    for (std::size_t i = 0; i < r.rank(); ++i) r.doubled_[i] = checked::add(r.doubled_[i], b.doubled_[i]);
    return r;
  }
  friend HalfIntVector operator-(const HalfIntVector& a, const HalfIntVector& b) { return a + (-b); }
  friend HalfIntVector operator*(Int k, const HalfIntVector& v) {
    HalfIntVector r = v;
    for (auto& d : r.doubled_) d = checked::mul(d, k);
    return r;
  }
  /// Scaling by a rational; the result must stay in (1/2)Z.
  friend HalfIntVector operator*(const Rational& k, const HalfIntVector& v) {
    HalfIntVector r = v;
    for (auto& d : r.doubled_) {
      const Rational scaled = k * Rational(d);
      if (!scaled.is_integer()) throw DomainError("scaling leaves (1/2)Z: factor " + k.str());
      d = scaled.num();
    }
    return r;
  }
  HalfIntVector& operator+=(const HalfIntVector& o) { return *this = *this + o; }
  HalfIntVector& operator-=(const HalfIntVector& o) { return *this = *this - o; }

  friend bool operator==(const HalfIntVector&, const HalfIntVector&) = default;
  /// Lexicographic on doubled coordinates (basis first).
  friend auto operator<=>(const HalfIntVector& a, const HalfIntVector& b) {
    if (auto c = a.basis_ <=> b.basis_; c != 0) return c;
    return a.doubled_ <=> b.doubled_;
  }

  static void require_same_space(const HalfIntVector& a, const HalfIntVector& b) {
    if (a.basis_ != b.basis_ || a.rank() != b.rank())
      throw BasisMismatch(a.basis_ + "[" + std::to_string(a.rank()) + "]",
                          b.basis_ + "[" + std::to_string(b.rank()) + "]");
  }

 private:
  std::string basis_;
  std::vector<Int> doubled_;
};

/// A lattice Z^r with an integral symmetric bilinear form given by its Gram
/// matrix. The name doubles as the basis identifier of its vectors.
class GramLattice {
 public:
  GramLattice(std::string name, IntMatrix gram) : name_(std::move(name)), gram_(std::move(gram)) {
    if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) throw DomainError("Gram matrix must be square and nonempty");
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix of '" + name_ + "' is not symmetric");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  Int gram(std::size_t i, std::size_t j) const { return gram_(i, j); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!bnlat::is_even(gram_(i, i))) return false;
    return true;
  }
  Int determinant() const { return bnlat::determinant(gram_); }

  HalfIntVector zero() const { return HalfIntVector::zero(name_, rank()); }
  HalfIntVector unit(std::size_t i) const { return HalfIntVector::unit(name_, rank(), i); }
  HalfIntVector vector(std::span<const Int> integer_coords) const {
    if (integer_coords.size() != rank()) throw DomainError("coordinate count does not match rank of '" + name_ + "'");
    return HalfIntVector::from_integers(name_, integer_coords);
  }

  void require_member(const HalfIntVector& v) const {
    if (v.basis() != name_ || v.rank() != rank())
      throw BasisMismatch(v.basis() + "[" + std::to_string(v.rank()) + "]",
                          name_ + "[" + std::to_string(rank()) + "]");
  }

 private:
  std::string name_;
  IntMatrix gram_;
};

/// u^T G v on doubled coordinates, i.e. four times the true pairing.
inline Int bilinear_quadrupled(const HalfIntVector& u, const HalfIntVector& v, const GramLattice& lat) {
  HalfIntVector::require_same_space(u, v);
  lat.require_member(u);
  Int acc = 0;
  const std::size_t r = lat.rank();
  for (std::size_t i = 0; i < r; ++i) {
    const Int ui = u.doubled(i);
    if (ui == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < r; ++j) row = checked::fma(row, lat.gram(i, j), v.doubled(j));
    acc = checked::fma(acc, ui, row);
  }
  return acc;
}

/// The pairing <u, v>; its denominator divides 4.
inline Rational bilinear(const HalfIntVector& u, const HalfIntVector& v, const GramLattice& lat) {
  return {bilinear_quadrupled(u, v, lat), 4};
}

inline Rational norm(const HalfIntVector& v, const GramLattice& lat) { return bilinear(v, v, lat); }

// ---------------------------------------------------------------------------
// Hermite normal form

/// Row-style HNF of an m x n integer matrix.
///
/// `form` has the same shape as the input: the first `rank` rows are the
/// nonzero HNF rows (positive pivots, strictly increasing pivot columns,
/// entries above a pivot reduced into [0, pivot)), the rest are zero.
/// `transform` is unimodular with transform * input == form.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Columns are processed in basis order. Among rows still carrying a nonzero
/// entry in the current column, the pivot is the one with the smallest
/// absolute value, ties going to the lowest row index; reduction by
/// Euclidean steps then repeats until one nonzero entry remains.
inline HermiteForm hermite_normal_form(const IntMatrix& rows) {
  HermiteForm out{rows, IntMatrix::identity(rows.rows()), 0, {}};
  IntMatrix& a = out.form;
  IntMatrix& u = out.transform;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (!pivot || checked::abs(a(i, c)) < checked::abs(a(*pivot, c))) pivot = i;
      }
      if (!pivot) break;
      a.swap_rows(r, *pivot);
      u.swap_rows(r, *pivot);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        const Int q = floor_div(a(i, c), a(r, c));
        a.add_row_multiple(i, r, checked::neg(q));
        u.add_row_multiple(i, r, checked::neg(q));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(a(i, c), a(r, c));
      a.add_row_multiple(i, r, checked::neg(q));
      u.add_row_multiple(i, r, checked::neg(q));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

/// Basis (as rows) of the left kernel {c in Z^m : c * rows = 0}.
inline IntMatrix left_kernel(const IntMatrix& rows) {
  const HermiteForm h = hermite_normal_form(rows);
  IntMatrix k(rows.rows() - h.rank, rows.rows());
  for (std::size_t i = h.rank; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.rows(); ++j) k(i - h.rank, j) = h.transform(i, j);
  return k;
}

/// Reduce `target` by the HNF rows. Returns the coefficients over the HNF
/// basis when the remainder vanishes, nothing otherwise.
inline std::optional<std::vector<Int>> solve_in_row_span(const HermiteForm& h, std::span<const Int> target) {
  std::vector<Int> rest(target.begin(), target.end());
  if (rest.size() != h.form.cols()) throw DomainError("target length does not match HNF width");
  std::vector<Int> coeffs(h.rank, 0);
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t c = h.pivot_cols[k];
    const Int p = h.form(k, c);
    if (rest[c] % p != 0) return std::nullopt;
    const Int q = rest[c] / p;
    coeffs[k] = q;
    for (std::size_t j = c; j < rest.size(); ++j) rest[j] = checked::sub(rest[j], checked::mul(q, h.form(k, j)));
  }
  if (std::any_of(rest.begin(), rest.end(), [](Int x) { return x != 0; })) return std::nullopt;
  return coeffs;
}

namespace detail {

/// LLL reduction (delta = 3/4) of the standard basis of Z^n under a positive
/// definite integral Gram matrix. Returns a unimodular U whose rows are the
/// reduced vectors. Gram-Schmidt data is kept in exact GMP rationals. Only
/// used to fix the witness-search basis; not a general reduction facility.
inline IntMatrix lll_reduce(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw DomainError("LLL needs a square Gram matrix");
  IntMatrix u = IntMatrix::identity(n);
  auto pair = [&](std::size_t a, std::size_t b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s += mpz_class(static_cast<long>(u(a, i))) * static_cast<long>(gram(i, j)) * static_cast<long>(u(b, j));
    return mpq_class(s);
  };
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> bstar(n);
  auto orthogonalize = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class s = pair(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
        mu[i][j] = s / bstar[j];
      }
      mpq_class s = pair(i, i);
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
      if (s <= 0) throw DomainError("LLL needs a positive definite Gram matrix");
      bstar[i] = s;
    }
  };
  orthogonalize();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      // Only |mu| > 1/2 is reduced, by the nearest integer.
      if (2 * abs(mu[k][j]) <= 1) continue;
      const mpq_class twice = 2 * mu[k][j] + 1;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), twice.get_num_mpz_t(), mpz_class(2 * twice.get_den()).get_mpz_t());
      if (!q.fits_slong_p()) throw OverflowError("LLL size reduction left 64-bit range");
      const Int c = q.get_si();
      for (std::size_t t = 0; t < n; ++t) u(k, t) = checked::sub(u(k, t), checked::mul(c, u(j, t)));
      orthogonalize();
    }
    if (bstar[k] >= (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      for (std::size_t t = 0; t < n; ++t) std::swap(u(k, t), u(k - 1, t));
      orthogonalize();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

}  // namespace detail

/// The Z-span of a list of generators, with exact membership.
class IntegralSpan {
 public:
  IntegralSpan(std::string basis, std::size_t rank, std::vector<HalfIntVector> generators)
      : basis_(std::move(basis)), rank_(rank), generators_(std::move(generators)) {
    IntMatrix m(generators_.size(), rank_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.basis() != basis_ || g.rank() != rank_)
        throw BasisMismatch(g.basis() + "[" + std::to_string(g.rank()) + "]", basis_ + "[" + std::to_string(rank_) + "]");
      for (std::size_t j = 0; j < rank_; ++j) m(i, j) = g.doubled(j);
    }
    hnf_cache_ = hermite_normal_form(m);
  }

  const std::string& basis() const noexcept { return basis_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t rank() const noexcept { return hnf_cache_.rank; }
  const std::vector<HalfIntVector>& generators() const noexcept { return generators_; }
  const HermiteForm& hnf() const noexcept { return hnf_cache_; }

  /// The canonical basis: the nonzero rows of the HNF.
  std::vector<HalfIntVector> hnf_basis() const {
    std::vector<HalfIntVector> b;
    for (std::size_t i = 0; i < rank(); ++i) {
      auto row = hnf_cache_.form.row(i);
      b.emplace_back(basis_, std::vector<Int>(row.begin(), row.end()));
    }
    return b;
  }

  /// Integer coefficients of v over hnf_basis(), if v is a member.
  std::optional<std::vector<Int>> coefficients(const HalfIntVector& v) const {
    require_member_space(v);
    return solve_in_row_span(hnf_cache_, v.doubled());
  }

  bool contains(const HalfIntVector& v) const { return coefficients(v).has_value(); }

 private:
  void require_member_space(const HalfIntVector& v) const {
    if (v.basis() != basis_ || v.rank() != rank_)
      throw BasisMismatch(v.basis() + "[" + std::to_string(v.rank()) + "]", basis_ + "[" + std::to_string(rank_) + "]");
  }

  std::string basis_;
  std::size_t rank_;
  std::vector<HalfIntVector> generators_;
  HermiteForm hnf_cache_;
};

inline bool span_contains(const IntegralSpan& span, const HalfIntVector& v) { return span.contains(v); }

// ---------------------------------------------------------------------------
// Isometries

/// A linear self-map of the rational span acting on column coordinates by
/// matrix_doubled / 2.
class IsometryMap {
 public:
  /// Checked construction: fails unless the map preserves the form of
  /// `lattice` (and squares to the identity when `involution` is set).
  static IsometryMap make(IntMatrix matrix_doubled, const GramLattice& lattice, bool involution) {
    IsometryMap f(std::move(matrix_doubled), lattice.name(), involution);
    if (f.matrix_.rows() != lattice.rank()) throw ConstructionError("isometry matrix has wrong size");
    if (!f.preserves_form(lattice)) throw ConstructionError("map does not preserve the form of '" + lattice.name() + "'");
    if (involution && !f.is_involution()) throw ConstructionError("map flagged as involution does not square to the identity");
    return f;
  }

  /// No verification; for fault injection and for composing maps.
  static IsometryMap unchecked(IntMatrix matrix_doubled, std::string domain, bool involution) {
    return {std::move(matrix_doubled), std::move(domain), involution};
  }

  static IsometryMap identity(const GramLattice& lattice) {
    IntMatrix m = IntMatrix::identity(lattice.rank());
    for (std::size_t i = 0; i < lattice.rank(); ++i) m(i, i) = 2;
    return {std::move(m), lattice.name(), true};
  }

  const IntMatrix& matrix_doubled() const noexcept { return matrix_; }
  const std::string& domain() const noexcept { return domain_; }
  bool flagged_involution() const noexcept { return involution_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }

  HalfIntVector apply(const HalfIntVector& v) const {
    if (v.basis() != domain_ || v.rank() != rank())
      throw BasisMismatch(v.basis() + "[" + std::to_string(v.rank()) + "]", domain_ + "[" + std::to_string(rank()) + "]");
    std::vector<Int> out(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < rank(); ++j) acc = checked::fma(acc, matrix_(i, j), v.doubled(j));
      if (!is_even(acc)) throw DomainError("image leaves (1/2)Z");
      out[i] = acc / 2;
    }
    return {domain_, std::move(out)};
  }

  /// <f(e_i), f(e_j)> == <e_i, e_j> for every pair of basis vectors.
  bool preserves_form(const GramLattice& lattice) const {
    if (lattice.name() != domain_ || lattice.rank() != rank()) return false;
    const IntMatrix lhs = matrix_.transpose() * lattice.gram() * matrix_;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (lhs(i, j) != checked::mul(4, lattice.gram(i, j))) return false;
    return true;
  }

  /// f(f(e_i)) == e_i on every basis vector.
  bool is_involution() const {
    const IntMatrix sq = matrix_ * matrix_;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (sq(i, j) != (i == j ? 4 : 0)) return false;
    return true;
  }

  friend bool operator==(const IsometryMap& a, const IsometryMap& b) {
    return a.domain_ == b.domain_ && a.matrix_ == b.matrix_;
  }

 private:
  IsometryMap(IntMatrix m, std::string domain, bool involution)
      : matrix_(std::move(m)), domain_(std::move(domain)), involution_(involution) {
    if (matrix_.rows() != matrix_.cols()) throw DomainError("isometry matrix must be square");
  }

  friend IsometryMap compose(const IsometryMap& f, const IsometryMap& g);

  IntMatrix matrix_;
  std::string domain_;
  bool involution_ = false;
};

inline HalfIntVector apply(const IsometryMap& f, const HalfIntVector& v) { return f.apply(v); }

/// f o g.
inline IsometryMap compose(const IsometryMap& f, const IsometryMap& g) {
  if (f.domain_ != g.domain_ || f.rank() != g.rank()) throw BasisMismatch(f.domain_, g.domain_);
  IntMatrix p = f.matrix_ * g.matrix_;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (!is_even(p(i, j))) throw DomainError("composition leaves (1/2)Z");
      p(i, j) /= 2;
    }
  return {std::move(p), f.domain_, false};
}

// ---------------------------------------------------------------------------
// Standard lattices

/// The hyperbolic plane, Gram [[0,1],[1,0]].
inline GramLattice hyperbolic_U() { return {"U", IntMatrix{{0, 1}, {1, 0}}}; }

/// E8(-1) on simple roots a1..a8 in Bourbaki numbering: the chain
/// a1-a3-a4-a5-a6-a7-a8 with a2 attached to a4. Diagonal -2, +1 on edges.
inline GramLattice e8_minus() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  constexpr std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return {"E8(-1)", std::move(g)};
}

/// Orthogonal direct sum with block-diagonal Gram matrix.
inline GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram(i, j);
  return {a.name() + "+" + b.name(), std::move(g)};
}

/// U + E8(-1), the numerical lattice of an Enriques surface.
inline const GramLattice& enriques_lattice() {
  static const GramLattice lattice = direct_sum(hyperbolic_U(), e8_minus());
  return lattice;
}

}  // namespace bnlat
