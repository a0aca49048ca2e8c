#pragma once

// The Picard lattice of a generic Jacobian Kummer surface together with the
// switch involution theta*.
//
// Basis (rank 17), all coordinates in (1/2)Z:
//   0      L   (hyperplane class, L^2 = 4)
//   1      E0
//   2..16  E12 E13 E14 E15 E16 E23 E24 E25 E26 E34 E35 E36 E45 E46 E56
// The sixteen node classes are pairwise orthogonal (-2)-classes orthogonal
// to L. Tropes are half-integer combinations of L and six nodes.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnlat/errors.hpp"
#include "bnlat/integer.hpp"
#include "bnlat/lattice_core.hpp"
#include "bnlat/rational.hpp"

namespace bnlat {

inline constexpr std::size_t kKummerRank = 17;
inline constexpr const char* kKummerBasis = "kummer";
inline constexpr std::size_t kLIndex = 0;

/// A node E0 (i = j = 0) or E_ij with 1 <= i < j <= 6.
struct NodeLabel {
  int i = 0;
  int j = 0;

  bool is_zero() const noexcept { return i == 0 && j == 0; }
  bool valid() const noexcept { return is_zero() || (1 <= i && i < j && j <= 6); }

  /// Position in the 17-element basis.
  std::size_t basis_index() const {
    if (!valid()) throw DomainError("invalid node label E" + std::to_string(i) + std::to_string(j));
    if (is_zero()) return 1;
    // Lexicographic rank of (i, j) among pairs of {1..6}.
    std::size_t idx = 2;
    for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(6 - a);
    return idx + static_cast<std::size_t>(j - i - 1);
  }

  std::string name() const { return is_zero() ? "E0" : "E" + std::to_string(i) + std::to_string(j); }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// All sixteen nodes in basis order.
inline const std::array<NodeLabel, 16>& all_node_labels() {
  static const std::array<NodeLabel, 16> labels = [] {
    std::array<NodeLabel, 16> out{};
    out[0] = {0, 0};
    std::size_t k = 1;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) out[k++] = {i, j};
    return out;
  }();
  return labels;
}

inline NodeLabel node_label_at(std::size_t basis_index) {
  if (basis_index < 1 || basis_index >= kKummerRank) throw DomainError("basis index is not a node");
  return all_node_labels()[basis_index - 1];
}

/// A trope T_i (j == 0) or T_ij6 with 1 <= i < j <= 5.
struct TropeLabel {
  int i = 0;
  int j = 0;

  bool is_single() const noexcept { return j == 0; }
  bool valid() const noexcept { return is_single() ? (1 <= i && i <= 6) : (1 <= i && i < j && j <= 5); }
  std::string name() const {
    return is_single() ? "T" + std::to_string(i) : "T" + std::to_string(i) + std::to_string(j) + "6";
  }
  friend bool operator==(const TropeLabel&, const TropeLabel&) = default;
};

/// T1..T6 then T126, T136, ..., T456.
inline const std::array<TropeLabel, 16>& all_trope_labels() {
  static const std::array<TropeLabel, 16> labels = [] {
    std::array<TropeLabel, 16> out{};
    std::size_t k = 0;
    for (int i = 1; i <= 6; ++i) out[k++] = {i, 0};
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) out[k++] = {i, j};
    return out;
  }();
  return labels;
}

inline HalfIntVector kummer_zero() { return HalfIntVector::zero(kKummerBasis, kKummerRank); }
inline HalfIntVector kummer_L() { return HalfIntVector::unit(kKummerBasis, kKummerRank, kLIndex); }

inline HalfIntVector node(NodeLabel label) {
  if (!label.valid()) throw DomainError("invalid node label E" + std::to_string(label.i) + std::to_string(label.j));
  return HalfIntVector::unit(kKummerBasis, kKummerRank, label.basis_index());
}

/// E0; the only single-index node.
inline HalfIntVector node(int zero) {
  if (zero != 0) throw DomainError("single-index node must be E0");
  return node(NodeLabel{0, 0});
}

/// E_ij, requires 1 <= i < j <= 6.
inline HalfIntVector node(int i, int j) {
  const NodeLabel label{i, j};
  if (label.is_zero() || !label.valid())
    throw DomainError("invalid node E" + std::to_string(i) + std::to_string(j) + ": need 1 <= i < j <= 6");
  return node(label);
}

/// Sum of all sixteen nodes.
inline HalfIntVector node_sum() {
  HalfIntVector s = kummer_zero();
  for (const auto& n : all_node_labels()) s += node(n);
  return s;
}

/// T_i = 1/2 (L - E0 - sum_{k != i} E_ik)
inline HalfIntVector trope(int i) {
  if (i < 1 || i > 6) throw DomainError("trope index T" + std::to_string(i) + " out of range 1..6");
  HalfIntVector twice = kummer_L() - node(0);
  for (int k = 1; k <= 6; ++k)
    if (k != i) twice -= node(std::min(i, k), std::max(i, k));
  return Rational(1, 2) * twice;
}

/// T_ij6 = 1/2 (L - E_i6 - E_j6 - E_ij - E_lm - E_mn - E_ln), {l,m,n} the
/// complement of {i,j} in {1..5}.
inline HalfIntVector trope(int i, int j) {
  if (!(1 <= i && i < j && j <= 5))
    throw DomainError("trope T" + std::to_string(i) + std::to_string(j) + "6 needs 1 <= i < j <= 5");
  std::vector<int> rest;
  for (int k = 1; k <= 5; ++k)
    if (k != i && k != j) rest.push_back(k);
  const int l = rest[0], m = rest[1], n = rest[2];
  const HalfIntVector twice = kummer_L() - node(i, 6) - node(j, 6) - node(i, j) - node(l, m) - node(m, n) - node(l, n);
  return Rational(1, 2) * twice;
}

inline HalfIntVector trope(TropeLabel label) {
  if (!label.valid()) throw DomainError("invalid trope label " + label.name());
  return label.is_single() ? trope(label.i) : trope(label.i, label.j);
}

/// The node <-> trope pairs exchanged by theta*.
inline const std::array<std::pair<NodeLabel, TropeLabel>, 16>& theta_table() {
  static const std::array<std::pair<NodeLabel, TropeLabel>, 16> table = {{
      {{0, 0}, {4, 5}},  // E0  <-> T456
      {{1, 2}, {3, 0}},  // E12 <-> T3
      {{1, 3}, {2, 0}},  // E13 <-> T2
      {{1, 4}, {1, 5}},  // E14 <-> T156
      {{1, 5}, {1, 4}},  // E15 <-> T146
      {{1, 6}, {2, 3}},  // E16 <-> T236
      {{2, 3}, {1, 0}},  // E23 <-> T1
      {{2, 4}, {2, 5}},  // E24 <-> T256
      {{2, 5}, {2, 4}},  // E25 <-> T246
      {{2, 6}, {1, 3}},  // E26 <-> T136
      {{3, 4}, {3, 5}},  // E34 <-> T356
      {{3, 5}, {3, 4}},  // E35 <-> T346
      {{3, 6}, {1, 2}},  // E36 <-> T126
      {{4, 5}, {6, 0}},  // E45 <-> T6
      {{4, 6}, {5, 0}},  // E46 <-> T5
      {{5, 6}, {4, 0}},  // E56 <-> T4
  }};
  return table;
}

inline GramLattice kummer_lattice() {
  IntMatrix g(kKummerRank, kKummerRank);
  g(kLIndex, kLIndex) = 4;
  for (std::size_t i = 1; i < kKummerRank; ++i) g(i, i) = -2;
  return {kKummerBasis, std::move(g)};
}

/// theta* L = 3L - (sum of all sixteen nodes).
inline HalfIntVector theta_of_L() { return 3 * kummer_L() - node_sum(); }

/// Raw doubled matrix of theta*: column k holds the image of basis vector k.
inline IntMatrix theta_matrix() {
  IntMatrix m(kKummerRank, kKummerRank);
  auto set_column = [&m](std::size_t col, const HalfIntVector& image) {
    for (std::size_t r = 0; r < kKummerRank; ++r) m(r, col) = image.doubled(r);
  };
  set_column(kLIndex, theta_of_L());
  for (const auto& [n, t] : theta_table()) set_column(n.basis_index(), trope(t));
  return m;
}

/// theta* as a verified involutive isometry. Besides involutivity and
/// isometry, the image of L must agree with the table through the identity
/// L = 2 T_i + E0 + sum_{k != i} E_ik for every i.
inline IsometryMap build_theta() {
  const GramLattice lattice = kummer_lattice();
  IsometryMap theta = IsometryMap::make(theta_matrix(), lattice, /*involution=*/true);
  const HalfIntVector theta_L = theta.apply(kummer_L());
  for (int i = 1; i <= 6; ++i) {
    HalfIntVector rhs = 2 * theta.apply(trope(i)) + theta.apply(node(0));
    for (int k = 1; k <= 6; ++k)
      if (k != i) rhs += theta.apply(node(std::min(i, k), std::max(i, k)));
    if (rhs != theta_L)
      throw ConstructionError("theta*L disagrees with the node/trope table via T" + std::to_string(i));
  }
  return theta;
}

/// F_1..F_4, each a sum of four nodes; together they partition the sixteen.
inline HalfIntVector f_vector(int k) {
  switch (k) {
    case 1: return node(1, 2) + node(1, 5) + node(2, 6) + node(5, 6);
    case 2: return node(1, 3) + node(1, 4) + node(3, 6) + node(4, 6);
    case 3: return node(2, 3) + node(2, 5) + node(3, 4) + node(4, 5);
    case 4: return node(0) + node(1, 6) + node(2, 4) + node(3, 5);
    default: throw DomainError("F index " + std::to_string(k) + " out of range 1..4");
  }
}

/// A subset of the sixteen nodes; bit b stands for basis index b + 1.
using NodeSet = std::bitset<16>;

inline NodeSet make_node_set(std::initializer_list<NodeLabel> labels) {
  NodeSet s;
  for (const auto& l : labels) s.set(l.basis_index() - 1);
  return s;
}

inline HalfIntVector node_set_sum(const NodeSet& s) {
  HalfIntVector v = kummer_zero();
  for (std::size_t b = 0; b < 16; ++b)
    if (s.test(b)) v += HalfIntVector::unit(kKummerBasis, kKummerRank, b + 1);
  return v;
}

/// beta_1..beta_4 in (1/2)Z, stored doubled. alpha is always recomputed.
struct BetaQuadruple {
  std::array<Int, 4> doubled{};

  static BetaQuadruple from_rationals(const std::array<Rational, 4>& b) {
    return {{b[0].doubled(), b[1].doubled(), b[2].doubled(), b[3].doubled()}};
  }

  Rational beta(std::size_t k) const { return Rational::half(doubled.at(k)); }
  Rational alpha() const {
    return Rational::half(checked::add(checked::add(doubled[0], doubled[1]), checked::add(doubled[2], doubled[3])));
  }
  /// d = 4 alpha^2 - 8 sum beta_k^2, an integer for half-integral betas.
  Int degree() const {
    const Int two_alpha = alpha().doubled();
    Int sq = 0;
    for (Int b : doubled) sq = checked::fma(sq, b, b);
    return checked::sub(checked::mul(two_alpha, two_alpha), checked::mul(2, sq));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < 4; ++k) s += (k ? ", " : "") + beta(k).str();
    return s + ")";
  }

  friend bool operator==(const BetaQuadruple&, const BetaQuadruple&) = default;
};

/// alpha L - sum beta_k F_k with alpha = sum beta_k.
inline HalfIntVector family_vector(const BetaQuadruple& beta) {
  HalfIntVector v = beta.alpha() * kummer_L();
  for (int k = 1; k <= 4; ++k) v -= beta.beta(static_cast<std::size_t>(k - 1)) * f_vector(k);
  return v;
}

/// beta_1 + beta_2 and beta_3 + beta_4 integral.
inline bool lemma33_check(const BetaQuadruple& beta) {
  return is_even(checked::add(beta.doubled[0], beta.doubled[1])) && is_even(checked::add(beta.doubled[2], beta.doubled[3]));
}

/// The Picard lattice (Z-span of nodes and tropes) inside the rank-17
/// ambient (1/2)Z-lattice, theta*, the F classes and the theta*-invariant
/// sublattice. Immutable once built.
class PicardModel {
 public:
  PicardModel()
      : ambient_(kummer_lattice()),
        picard_(kKummerBasis, kKummerRank, picard_generators()),
        theta_(build_theta()),
        invariant_(kKummerBasis, kKummerRank, compute_invariant_generators(picard_, theta_)) {
    if (picard_.rank() != kKummerRank) throw ConstructionError("node/trope span is not of full rank");
    for (const auto& g : picard_.generators())
      if (!picard_.contains(theta_.apply(g))) throw ConstructionError("theta* does not preserve the Picard span");
    build_search_basis();
  }

  /// Process-wide instance, built on first use.
  static const PicardModel& standard() {
    static const PicardModel model;
    return model;
  }

  const GramLattice& ambient() const noexcept { return ambient_; }
  const IntegralSpan& picard() const noexcept { return picard_; }
  const IsometryMap& theta() const noexcept { return theta_; }
  const IntegralSpan& invariant() const noexcept { return invariant_; }

  Rational bilinear(const HalfIntVector& u, const HalfIntVector& v) const { return bnlat::bilinear(u, v, ambient_); }
  Rational norm(const HalfIntVector& v) const { return bnlat::norm(v, ambient_); }

  bool is_picard(const HalfIntVector& v) const { return picard_.contains(v); }
  bool is_theta_invariant(const HalfIntVector& v) const { return theta_.apply(v) == v; }

  /// Whether half the sum of the eight given nodes lies in the Picard span.
  bool is_even_eight(const NodeSet& s) const {
    if (s.count() != 8) throw DomainError("even-eight test needs exactly 8 nodes, got " + std::to_string(s.count()));
    return picard_.contains(Rational(1, 2) * node_set_sum(s));
  }

  /// Whether v is divisible by 2 inside the Picard span.
  bool divisible_by_two(const HalfIntVector& v) const { return picard_.contains(Rational(1, 2) * v); }

  /// Generators of the invariant sublattice: the HNF basis of the kernel.
  std::vector<HalfIntVector> invariant_basis() const { return invariant_.hnf_basis(); }

  /// Gram matrix of invariant_basis(); integral and even.
  IntMatrix invariant_gram() const {
    const auto b = invariant_basis();
    IntMatrix g(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = norm_to_int(bilinear(b[i], b[j]));
    return g;
  }

  /// Basis of the invariant sublattice used by the witness search: LLL
  /// reduced under the positive definite majorant
  ///     P(x, y) = 2 (x.h)(y.h) / h^2 - x.y,   h = 2L - 1/2 (F1 + F2 + F3 + F4),
  /// so that small coefficient boxes hold the short classes near h.
  const std::vector<HalfIntVector>& search_basis() const noexcept { return search_basis_; }

  /// Gram matrix of search_basis().
  const IntMatrix& search_gram() const noexcept { return search_gram_; }

  /// Coefficients of an invariant class over search_basis().
  std::optional<std::vector<Int>> search_coefficients(const HalfIntVector& v) const {
    const auto c = invariant_.coefficients(v);
    if (!c) return std::nullopt;
    std::vector<Int> out(search_inverse_.cols(), 0);
    for (std::size_t j = 0; j < out.size(); ++j)
      for (std::size_t i = 0; i < c->size(); ++i) out[j] = checked::fma(out[j], (*c)[i], search_inverse_(i, j));
    return out;
  }

  static std::vector<HalfIntVector> picard_generators() {
    std::vector<HalfIntVector> g;
    for (const auto& n : all_node_labels()) g.push_back(node(n));
    for (const auto& t : all_trope_labels()) g.push_back(trope(t));
    return g;
  }

 private:
  static Int norm_to_int(const Rational& r) {
    if (!r.is_integer()) throw ConstructionError("invariant sublattice pairing is not integral");
    return r.num();
  }

  // {v in picard : theta v = v}: with v = c * B over the Picard HNF basis B,
  // solve c * (B (Theta^T - 2I)) = 0 in doubled coordinates.
  static std::vector<HalfIntVector> compute_invariant_generators(const IntegralSpan& picard, const IsometryMap& theta) {
    const auto basis = picard.hnf_basis();
    IntMatrix k(basis.size(), kKummerRank);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& b = basis[i];
      for (std::size_t r = 0; r < kKummerRank; ++r) {
        Int acc = checked::mul(-2, b.doubled(r));
        for (std::size_t c = 0; c < kKummerRank; ++c) acc = checked::fma(acc, theta.matrix_doubled()(r, c), b.doubled(c));
        k(i, r) = acc;
      }
    }
    const IntMatrix kernel = left_kernel(k);
    std::vector<HalfIntVector> gens;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
      HalfIntVector v = kummer_zero();
      for (std::size_t j = 0; j < basis.size(); ++j) v += kernel(i, j) * basis[j];
      gens.push_back(std::move(v));
    }
    return gens;
  }

  void build_search_basis() {
    const auto basis = invariant_basis();
    const IntMatrix g = invariant_gram();
    const std::size_t n = basis.size();
    const auto h = invariant_.coefficients(2 * kummer_L() - Rational(1, 2) * node_sum());
    if (!h) throw ConstructionError("majorant class missing from the invariant sublattice");
    std::vector<Int> gh(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gh[i] = checked::fma(gh[i], g(i, j), (*h)[j]);
    Int h2 = 0;
    for (std::size_t i = 0; i < n; ++i) h2 = checked::fma(h2, (*h)[i], gh[i]);
    // h^2 * P, integral.
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = checked::sub(checked::mul(2, checked::mul(gh[i], gh[j])), checked::mul(h2, g(i, j)));
    const IntMatrix u = detail::lll_reduce(p);
    const HermiteForm inv = hermite_normal_form(u);
    if (inv.form != IntMatrix::identity(n)) throw ConstructionError("LLL transform is not unimodular");
    search_inverse_ = inv.transform;
    search_basis_.clear();
    for (std::size_t k = 0; k < n; ++k) {
      HalfIntVector v = kummer_zero();
      for (std::size_t i = 0; i < n; ++i) v += u(k, i) * basis[i];
      search_basis_.push_back(std::move(v));
    }
    search_gram_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) search_gram_(i, j) = norm_to_int(bilinear(search_basis_[i], search_basis_[j]));
  }

  GramLattice ambient_;
  IntegralSpan picard_;
  IsometryMap theta_;
  IntegralSpan invariant_;
  std::vector<HalfIntVector> search_basis_;
  IntMatrix search_gram_;
  IntMatrix search_inverse_;
};

/// Canonical generators of the theta*-invariant part of the Picard lattice.
inline const IntegralSpan& invariant_sublattice() { return PicardModel::standard().invariant(); }

}  // namespace bnlat
