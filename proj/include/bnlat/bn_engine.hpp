#pragma once

// Witness verification, construction and search for the equations
//
//   K3 side:       (M - H)^2 = (M - 2H)^2 = -4,  H, M theta*-invariant Picard classes
//   Enriques side: (N - h)^2 = (N - 2h)^2 = -2,  h, N in U + E8(-1)
//
// On the K3 side, H = alpha L - sum beta_k F_k and M = alpha' L - sum beta'_k F_k
// with (S, T, U, V) = beta' - beta turn the equations into
//
//   (S+T+U+V)^2 - 2(S^2+T^2+U^2+V^2) = -1
//   2 alpha (S+T+U+V) - 4(beta_1 S + beta_2 T + beta_3 U + beta_4 V) - d/4 = 0,
//
// d = H^2 = 4 alpha^2 - 8 sum beta_k^2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bnlat/errors.hpp"
#include "bnlat/integer.hpp"
#include "bnlat/kummer_model.hpp"
#include "bnlat/lattice_core.hpp"
#include "bnlat/rational.hpp"
#include "bnlat/slice_enumeration.hpp"

namespace bnlat {

enum class Side { k3, enriques };

inline const char* side_name(Side s) { return s == Side::k3 ? "k3" : "enriques"; }

struct Check {
  std::string name;
  bool passed = false;
  bool mandatory = true;
};

/// A pair of classes checked against the witness equations. `H`/`M` hold
/// (H_X, M) on the K3 side and (h, N) on the Enriques side.
struct WitnessCertificate {
  Side side = Side::k3;
  HalfIntVector H;
  HalfIntVector M;
  Rational h2;
  Rational m2;
  Rational hm;
  Rational genus;
  std::vector<Check> checks;

  /// All mandatory checks pass; informational ones are ignored.
  bool valid() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.mandatory || c.passed; });
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }
};

/// (S, T, U, V) in (1/2)Z, stored doubled.
struct StuvSolution {
  std::array<Int, 4> doubled{};

  Rational component(std::size_t k) const { return Rational::half(doubled.at(k)); }
  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < 4; ++k) s += (k ? ", " : "") + component(k).str();
    return s + ")";
  }
  friend bool operator==(const StuvSolution&, const StuvSolution&) = default;
  friend auto operator<=>(const StuvSolution& a, const StuvSolution& b) { return a.doubled <=> b.doubled; }
};

/// An integral class of U + E8(-1): (a, b) on U, then eight simple-root
/// coordinates of E8(-1).
struct EnriquesVector {
  std::array<Int, 10> coords{};

  HalfIntVector vector() const { return enriques_lattice().vector(coords); }
  Int dot(const EnriquesVector& o) const { return bilinear(vector(), o.vector(), enriques_lattice()).to_integer(); }
  Int norm() const { return dot(*this); }

  friend bool operator==(const EnriquesVector&, const EnriquesVector&) = default;
  friend auto operator<=>(const EnriquesVector& a, const EnriquesVector& b) { return a.coords <=> b.coords; }
};

struct SearchConfig {
  /// Bound on the infinity norm of the coefficient vector over the search
  /// basis (doubled values for (S, T, U, V)).
  Int radius = 0;
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  bool parallel = false;
};

// ---------------------------------------------------------------------------
// Positivity

struct PositivityReport {
  Rational h2;
  /// H.E for the sixteen nodes (basis order), then H.T for the sixteen tropes.
  std::vector<std::pair<std::string, Rational>> intersections;

  bool square_positive() const { return h2 > Rational(0); }
  bool any_negative() const {
    return std::any_of(intersections.begin(), intersections.end(), [](const auto& p) { return p.second < Rational(0); });
  }
  bool ok() const { return square_positive() && !any_negative(); }
};

/// H^2 > 0 and the 32 intersection numbers with nodes and tropes. Necessary
/// for ampleness only.
inline PositivityReport necessary_positivity(const HalfIntVector& H, const PicardModel& model = PicardModel::standard()) {
  PositivityReport r;
  r.h2 = model.norm(H);
  for (const auto& n : all_node_labels()) r.intersections.emplace_back(n.name(), model.bilinear(H, node(n)));
  for (const auto& t : all_trope_labels()) r.intersections.emplace_back(t.name(), model.bilinear(H, trope(t)));
  return r;
}

// ---------------------------------------------------------------------------
// Verification

inline WitnessCertificate verify_k3_witness(const HalfIntVector& H, const HalfIntVector& M,
                                            const PicardModel& model = PicardModel::standard()) {
  WitnessCertificate c;
  c.side = Side::k3;
  c.H = H;
  c.M = M;
  c.h2 = model.norm(H);
  c.m2 = model.norm(M);
  c.hm = model.bilinear(H, M);
  c.genus = c.h2 * Rational(1, 2) + Rational(1);
  const Rational minus4(-4);
  const bool picard = model.is_picard(H) && model.is_picard(M);
  c.checks.push_back({"picard_membership", picard, true});
  // theta* only keeps Picard classes inside (1/2)Z.
  c.checks.push_back({"theta_invariance", picard && model.is_theta_invariant(H) && model.is_theta_invariant(M), true});
  c.checks.push_back({"squares_minus4", model.norm(M - H) == minus4 && model.norm(M - 2 * H) == minus4, true});
  c.checks.push_back({"positivity_necessary", necessary_positivity(H, model).ok(), false});
  return c;
}

inline WitnessCertificate verify_enriques_witness(const EnriquesVector& h, const EnriquesVector& N) {
  const GramLattice& lat = enriques_lattice();
  WitnessCertificate c;
  c.side = Side::enriques;
  c.H = h.vector();
  c.M = N.vector();
  c.h2 = norm(c.H, lat);
  c.m2 = norm(c.M, lat);
  c.hm = bilinear(c.H, c.M, lat);
  c.genus = c.h2 + Rational(1);
  const Rational minus2(-2);
  c.checks.push_back({"squares_minus2", norm(c.M - c.H, lat) == minus2 && norm(c.M - 2 * c.H, lat) == minus2, true});
  c.checks.push_back({"positivity_necessary", c.h2 > Rational(0), false});
  return c;
}

/// Linear and quadratic targets equivalent to the Enriques-side system:
/// N.h = 3 h^2 / 2 and N^2 = 2 h^2 - 2.
struct EnriquesTargets {
  Rational target_dot;
  Int target_norm = 0;
};

inline EnriquesTargets reduce_enriques_conditions(const EnriquesVector& h) {
  const Int h2 = h.norm();
  if (h2 <= 0) throw PreconditionError("not a polarization-type class: h^2 = " + std::to_string(h2) + " <= 0");
  return {Rational(checked::mul(3, h2), 2), checked::sub(checked::mul(2, h2), 2)};
}

// ---------------------------------------------------------------------------
// The Diophantine system

struct Residual {
  Rational quadratic;  // (S+T+U+V)^2 - 2 sum S^2 + 1
  Rational linear;     // 2 alpha sum S - 4 sum beta_k S_k - d/4
  bool zero() const { return quadratic == Rational(0) && linear == Rational(0); }
};

inline Residual diophantine_residual(const BetaQuadruple& beta, const StuvSolution& s) {
  Rational sum = 0, squares = 0, weighted = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational x = s.component(k);
    sum += x;
    squares += x * x;
    weighted += beta.beta(k) * x;
  }
  Residual r;
  r.quadratic = sum * sum - Rational(2) * squares + Rational(1);
  r.linear = Rational(2) * beta.alpha() * sum - Rational(4) * weighted - Rational(beta.degree(), 4);
  return r;
}

/// beta' = beta + s keeps beta'_1 + beta'_2 and beta'_3 + beta'_4 integral.
inline bool admissible(const BetaQuadruple& beta, const StuvSolution& s) {
  BetaQuadruple shifted;
  for (std::size_t k = 0; k < 4; ++k) shifted.doubled[k] = checked::add(beta.doubled[k], s.doubled[k]);
  return lemma33_check(shifted);
}

/// The sufficient-condition formula is undefined for beta_3 + beta_4 = 0.
class FormulaUndefined : public PreconditionError {
 public:
  FormulaUndefined() : PreconditionError("sufficient-condition formula undefined: beta_3 + beta_4 = 0") {}
};

/// 2S = [alpha^2 - 2 sum beta_k^2 + 2(beta_3 - beta_4)] / (2 (beta_3 + beta_4)).
inline Rational sufficient_two_s(const BetaQuadruple& beta) {
  const Rational b34 = beta.beta(2) + beta.beta(3);
  if (b34 == Rational(0)) throw FormulaUndefined();
  Rational squares = 0;
  for (std::size_t k = 0; k < 4; ++k) squares += beta.beta(k) * beta.beta(k);
  const Rational a = beta.alpha();
  return (a * a - Rational(2) * squares + Rational(2) * (beta.beta(2) - beta.beta(3))) / (Rational(2) * b34);
}

/// (S, S, 1/2, -1/2) when 2S is an integer, nothing otherwise.
inline std::optional<StuvSolution> solve_sufficient(const BetaQuadruple& beta) {
  const Rational two_s = sufficient_two_s(beta);
  if (!two_s.is_integer()) return std::nullopt;
  StuvSolution s{{two_s.num(), two_s.num(), 1, -1}};
  if (!diophantine_residual(beta, s).zero() || (lemma33_check(beta) && !admissible(beta, s)))
    throw ConstructionError("sufficient solution " + s.str() + " fails its own residual check for beta " + beta.str());
  return s;
}

/// alpha' L - sum beta'_k F_k with beta' = beta + s.
inline HalfIntVector build_M_from_solution(const BetaQuadruple& beta, const StuvSolution& s) {
  BetaQuadruple shifted;
  for (std::size_t k = 0; k < 4; ++k) shifted.doubled[k] = checked::add(beta.doubled[k], s.doubled[k]);
  return family_vector(shifted);
}

/// True when d/4 is not an even integer; then no admissible solution exists.
inline bool parity_obstruction(const BetaQuadruple& beta) {
  if (!lemma33_check(beta)) throw PreconditionError("beta " + beta.str() + " fails the invariance conditions");
  return beta.degree() % 8 != 0;
}

/// All admissible solutions with |doubled coordinates| <= radius, sorted.
inline std::vector<StuvSolution> search_stuv(const BetaQuadruple& beta, const SearchConfig& cfg) {
  if (!lemma33_check(beta)) throw PreconditionError("beta " + beta.str() + " fails the invariance conditions");
  if (cfg.radius < 0) throw DomainError("search radius must be nonnegative");
  const Int r = cfg.radius;
  const Int two_alpha = beta.alpha().doubled();
  const Int d = beta.degree();
  // 4 * residuals in doubled coordinates s':
  //   (sum s')^2 - 2 sum s'^2 + 4 = 0,   2 (2 alpha) sum s' - 4 sum (2 beta_k) s'_k - d = 0
  auto scan = [&](Int a, std::vector<StuvSolution>& out) {
    for (Int b = -r; b <= r; ++b) {
      if (!is_even(a + b)) continue;
      for (Int c = -r; c <= r; ++c)
        for (Int e = -r; e <= r; ++e) {
          if (!is_even(c + e)) continue;
          const std::array<Int, 4> s{a, b, c, e};
          Int sum = 0, sq = 0, weighted = 0;
          for (std::size_t k = 0; k < 4; ++k) {
            sum = checked::add(sum, s[k]);
            sq = checked::fma(sq, s[k], s[k]);
            weighted = checked::fma(weighted, beta.doubled[k], s[k]);
          }
          if (checked::add(checked::sub(checked::mul(sum, sum), checked::mul(2, sq)), 4) != 0) continue;
          if (checked::sub(checked::sub(checked::mul(checked::mul(2, two_alpha), sum), checked::mul(4, weighted)), d) != 0)
            continue;
          out.push_back({s});
        }
    }
  };
  std::vector<StuvSolution> out;
  if (cfg.parallel) {
    const std::size_t span = static_cast<std::size_t>(2 * r + 1);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(span, std::thread::hardware_concurrency()));
    std::vector<std::vector<StuvSolution>> partial(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (Int a = -r + static_cast<Int>(w); a <= r; a += static_cast<Int>(workers)) scan(a, partial[w]);
      });
    for (auto& t : pool) t.join();
    for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  } else {
    for (Int a = -r; a <= r; ++a) scan(a, out);
  }
  std::sort(out.begin(), out.end());
  if (out.size() > cfg.max_results) out.resize(cfg.max_results);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

struct FamilyMember {
  Int k = 0;
  BetaQuadruple beta;
  StuvSolution solution;
  HalfIntVector H;
  HalfIntVector M;
  WitnessCertificate certificate;
};

/// H = (k+1)L - k/2 (F1+F2) - 1/2 (F3+F4) with the witness from the
/// sufficient solution; H^2 = 8k, genus 4k+1.
inline FamilyMember theorem_family(Int k, const PicardModel& model = PicardModel::standard()) {
  if (k <= 0) throw PreconditionError("family index k must be positive, got " + std::to_string(k));
  FamilyMember f;
  f.k = k;
  f.beta = BetaQuadruple{{k, k, 1, 1}};
  const auto s = solve_sufficient(f.beta);
  if (!s) throw ConstructionError("sufficient formula not integral for k = " + std::to_string(k));
  f.solution = *s;
  f.H = family_vector(f.beta);
  f.M = build_M_from_solution(f.beta, f.solution);
  f.certificate = verify_k3_witness(f.H, f.M, model);
  return f;
}

/// 1/2 (E0 + E13 + E14 + E16 + E25 + E34 + E36 + E46), an even eight.
inline HalfIntVector half_even_eight() {
  return Rational(1, 2) *
         (node(0) + node(1, 3) + node(1, 4) + node(1, 6) + node(2, 5) + node(3, 4) + node(3, 6) + node(4, 6));
}

/// L - T1 - T346 - E12 - E15, an integral expression of half_even_eight().
/// (L - T1 - T346 alone equals half_even_eight() + E12 + E15.)
inline HalfIntVector even_eight_witness() { return kummer_L() - trope(1) - trope(3, 4) - node(1, 2) - node(1, 5); }

struct DegreeExample {
  std::string label;
  HalfIntVector H;
  HalfIntVector M;
  WitnessCertificate certificate;
};

/// The three explicit pairs of degrees 20, 36 and 52. Each certificate
/// carries the extra mandatory check "even_eight_identity".
inline std::vector<DegreeExample> remark_examples(const PicardModel& model = PicardModel::standard()) {
  const HalfIntVector L = kummer_L();
  const HalfIntVector F1 = f_vector(1), F2 = f_vector(2), F3 = f_vector(3), F4 = f_vector(4);
  const HalfIntVector eight = half_even_eight();
  const Rational half(1, 2);

  std::vector<DegreeExample> out;
  out.push_back({"d20", 4 * L - 2 * F1 - F2 - half * F3 - half * F4, 6 * L - 3 * F1 - 3 * eight, {}});
  out.push_back({"d36", 6 * L - 3 * F1 - 2 * F2 - half * F3 - half * F4,
                 8 * L - Rational(7, 2) * F1 - Rational(3, 2) * F2 - 3 * eight, {}});
  out.push_back({"d52", 8 * L - 4 * F1 - 3 * F2 - half * F3 - half * F4,
                 10 * L - 4 * (F1 + F2) - eight - (node(2, 3) + node(2, 4) + node(3, 5) + node(4, 5)), {}});
  const bool identity = even_eight_witness() == eight && model.is_picard(even_eight_witness());
  for (auto& ex : out) {
    ex.certificate = verify_k3_witness(ex.H, ex.M, model);
    ex.certificate.checks.insert(ex.certificate.checks.begin() + 1, Check{"even_eight_identity", identity, true});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Searches

struct K3Witness {
  HalfIntVector M;
  std::vector<Int> coefficients;  // over PicardModel::search_basis()
  WitnessCertificate certificate;
};

/// All witnesses M = sum c_i b_i over the invariant-sublattice HNF basis with
/// |c_i| <= radius, sorted by the doubled coordinates of M.
inline std::vector<K3Witness> search_k3_witness(const HalfIntVector& H, const SearchConfig& cfg,
                                                const PicardModel& model = PicardModel::standard()) {
  if (!model.is_picard(H)) throw PreconditionError("search target is not in the Picard lattice");
  if (!model.is_theta_invariant(H)) throw PreconditionError("search target is not theta*-invariant");
  const Rational h2 = model.norm(H);
  if (h2 <= Rational(0)) throw PreconditionError("search target must have positive square, got " + h2.str());
  if (cfg.radius < 0) throw DomainError("search radius must be nonnegative");

  std::vector<K3Witness> out;
  const Rational dot = Rational(3, 2) * h2;
  if (!dot.is_integer() || !h2.is_integer()) return out;
  const auto coeffs = model.search_coefficients(H);
  if (!coeffs) throw ConstructionError("invariant Picard class missing from the invariant sublattice");

  SliceQuery q{model.search_gram(), *coeffs, dot.num(), checked::sub(checked::mul(2, h2.num()), 4), cfg.radius};
  const auto& basis = model.search_basis();
  for (auto& c : enumerate_slice(q, cfg.parallel)) {
    HalfIntVector M = kummer_zero();
    for (std::size_t i = 0; i < basis.size(); ++i) M += c[i] * basis[i];
    WitnessCertificate cert = verify_k3_witness(H, M, model);
    if (!cert.valid()) throw ConstructionError("slice enumeration returned a non-witness");
    out.push_back({std::move(M), std::move(c), std::move(cert)});
  }
  std::sort(out.begin(), out.end(), [](const K3Witness& a, const K3Witness& b) { return a.M < b.M; });
  if (out.size() > cfg.max_results) out.resize(cfg.max_results);
  return out;
}

struct EnriquesWitness {
  EnriquesVector N;
  WitnessCertificate certificate;
};

/// All witnesses N with |N_i| <= radius, sorted by coordinates.
inline std::vector<EnriquesWitness> search_enriques_witness(const EnriquesVector& h, const SearchConfig& cfg) {
  const EnriquesTargets t = reduce_enriques_conditions(h);
  if (cfg.radius < 0) throw DomainError("search radius must be nonnegative");
  std::vector<EnriquesWitness> out;
  if (!t.target_dot.is_integer()) return out;
  SliceQuery q{enriques_lattice().gram(), std::vector<Int>(h.coords.begin(), h.coords.end()), t.target_dot.num(),
               t.target_norm, cfg.radius};
  for (const auto& x : enumerate_slice(q, cfg.parallel)) {
    EnriquesVector N;
    std::copy(x.begin(), x.end(), N.coords.begin());
    WitnessCertificate cert = verify_enriques_witness(h, N);
    if (!cert.valid()) throw ConstructionError("slice enumeration returned a non-witness");
    out.push_back({N, std::move(cert)});
  }
  std::sort(out.begin(), out.end(), [](const EnriquesWitness& a, const EnriquesWitness& b) { return a.N < b.N; });
  if (out.size() > cfg.max_results) out.resize(cfg.max_results);
  return out;
}

/// Smallest |h.f| > 0 over nonzero isotropic f with |f_i| <= bound; an upper
/// bound for phi(h). Nothing when the box holds no such f.
inline std::optional<Int> phi_invariant(const EnriquesVector& h, Int bound) {
  if (bound < 0) throw DomainError("phi bound must be nonnegative, got " + std::to_string(bound));
  if (h.norm() <= 0) throw PreconditionError("phi needs h^2 > 0");
  if (bound == 0) return std::nullopt;
  const GramLattice& lat = enriques_lattice();
  Int reach = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    Int gh = 0;
    for (std::size_t j = 0; j < lat.rank(); ++j) gh = checked::fma(gh, lat.gram(i, j), h.coords[j]);
    reach = checked::add(reach, checked::mul(bound, checked::abs(gh)));
  }
  // f -> -f flips the sign of h.f, so positive pairings suffice.
  for (Int p = 1; p <= reach; ++p) {
    SliceQuery q{lat.gram(), std::vector<Int>(h.coords.begin(), h.coords.end()), p, 0, bound};
    if (!enumerate_slice(q).empty()) return p;
  }
  return std::nullopt;
}

}  // namespace bnlat
