#include <gtest/gtest.h>

#include <algorithm>

#include "bnlat/bn_engine.hpp"
#include "bnlat/class_expr.hpp"
#include "bnlat/slice_enumeration.hpp"
#include "oracles.hpp"

using namespace bnlat;

namespace {

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat r(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// 4 x.y on Kummer doubled coordinates.
Int quad(const HalfIntVector& a, const HalfIntVector& b) {
  Int s = 4 * a.doubled(0) * b.doubled(0);
  for (std::size_t i = 1; i < 17; ++i) s -= 2 * a.doubled(i) * b.doubled(i);
  return s;
}

// Gram of the search basis recomputed from the doubled coordinates.
oracle::Mat search_gram_oracle() {
  const auto& b = PicardModel::standard().search_basis();
  oracle::Mat g(b.size(), oracle::Vec(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = quad(b[i], b[j]) / 4;
  return g;
}

HalfIntVector combine(const oracle::Vec& c) {
  const auto& b = PicardModel::standard().search_basis();
  HalfIntVector v = kummer_zero();
  for (std::size_t i = 0; i < b.size(); ++i) v += c[i] * b[i];
  return v;
}

std::vector<oracle::Vec> k3_coefficients(const std::vector<K3Witness>& ws) {
  std::vector<oracle::Vec> out;
  for (const auto& w : ws) out.push_back(w.coefficients);
  std::sort(out.begin(), out.end());
  return out;
}

EnriquesVector ev(const oracle::Vec& c) {
  EnriquesVector v;
  std::copy(c.begin(), c.end(), v.coords.begin());
  return v;
}

}  // namespace

TEST(SliceEnumeration, MatchesBoxOnSmallLattices) {
  // Hyperbolic forms: U + <-2> + <-2>, U + A2(-1), and a rank-3 one.
  const IntMatrix grams[] = {
      IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}},
      IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -2}},
      IntMatrix{{2, 1, 0}, {1, -2, 0}, {0, 0, -4}},
  };
  int total = 0;
  for (const auto& g : grams) {
    const oracle::Mat gm = to_mat(g);
    for (int trial = 0; trial < 60; ++trial) {
      oracle::Vec h(g.rows());
      for (auto& x : h) x = oracle::uniform(-3, 3);
      const oracle::I h2 = oracle::form(gm, h, h);
      if (h2 <= 0) continue;
      // Targets read off a random box point, so each slice is nonempty.
      const oracle::I r = oracle::uniform(0, 5);
      oracle::Vec p(g.rows());
      for (auto& x : p) x = oracle::uniform(-r, r);
      const oracle::I dot = oracle::form(gm, p, h), nrm = oracle::form(gm, p, p);
      std::vector<oracle::Vec> expected;
      oracle::box_walk(gm, r, [&](const oracle::Vec& x, const oracle::Vec& gx) {
        if (oracle::dot(x, gx) == nrm && oracle::form(gm, x, h) == dot) expected.push_back(x);
      });
      std::sort(expected.begin(), expected.end());
      const auto got = enumerate_slice(SliceQuery{g, h, dot, nrm, r});
      EXPECT_EQ(got, expected);
      EXPECT_EQ(enumerate_slice(SliceQuery{g, h, dot, nrm, r}, true), got);
      total += static_cast<int>(got.size());
    }
  }
  EXPECT_GT(total, 60);
}

TEST(SliceEnumeration, Preconditions) {
  const IntMatrix u{{0, 1}, {1, 0}};
  EXPECT_THROW(enumerate_slice(SliceQuery{u, {1, 0}, 0, 0, 2}), PreconditionError);
  EXPECT_THROW(enumerate_slice(SliceQuery{u, {1, 1}, 0, 0, -1}), DomainError);
  EXPECT_THROW(enumerate_slice(SliceQuery{u, {1, 1, 0}, 0, 0, 1}), DomainError);
  // Positive definite form: the orthogonal complement of h is not negative definite.
  EXPECT_THROW(enumerate_slice(SliceQuery{IntMatrix{{2, 0}, {0, 2}}, {1, 0}, 0, 0, 1}), PreconditionError);
}

// Oracle equivalence on the K3 side: every point of the box over the
// search basis is tested against both squares.
TEST(K3Search, MatchesNaiveOracle) {
  const oracle::Mat g = search_gram_oracle();
  const auto& model = PicardModel::standard();
  std::vector<oracle::Vec> targets;
  for (const char* t : {"2L - 1/2 F1 - 1/2 F2 - 1/2 F3 - 1/2 F4", "3L - F1 - 1/2 F3 - 1/2 F4 - F2", "4L - F1 - F2 - F3 - F4"})
    targets.push_back(*model.search_coefficients(parse_class(t)));
  // Random positive targets: unit perturbations of the first, which often
  // have witnesses inside the radius-2 box.
  const oracle::Vec base = targets.front();
  while (targets.size() < 12) {
    oracle::Vec c = base;
    for (auto& x : c) x += oracle::uniform(-1, 1);
    if (oracle::form(g, c, c) > 0) targets.push_back(c);
  }
  int witnesses = 0;
  for (const auto& h : targets) {
    const HalfIntVector H = combine(h);
    auto expected = oracle::witness_box(g, h, 2, -4);
    std::sort(expected.begin(), expected.end());
    const auto got = search_k3_witness(H, SearchConfig{2});
    EXPECT_EQ(k3_coefficients(got), expected) << format_class(H);
    for (const auto& w : got) {
      EXPECT_EQ(w.M, combine(w.coefficients));
      EXPECT_TRUE(w.certificate.valid());
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const K3Witness& a, const K3Witness& b) { return a.M < b.M; }));
    witnesses += static_cast<int>(got.size());
  }
  EXPECT_GT(witnesses, 0);
}

TEST(K3Search, FamilyWitnessFoundAtRadiusSix) {
  const FamilyMember f = theorem_family(1);
  const auto got = search_k3_witness(f.H, SearchConfig{6});
  EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](const K3Witness& w) { return w.M == f.M; }));
  const auto example = parse_class("3L - F1 - F2 - F4");
  EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](const K3Witness& w) { return w.M == example; }));
  SearchConfig par{6};
  par.parallel = true;
  const auto p = search_k3_witness(f.H, par);
  ASSERT_EQ(p.size(), got.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[i].M, got[i].M);
  SearchConfig capped{6, 5};
  EXPECT_EQ(search_k3_witness(f.H, capped).size(), 5u);
}

// Radius taken from the witness itself, so the box must contain it.
TEST(K3Search, DegreeExampleWitnessesFound) {
  const auto& model = PicardModel::standard();
  for (const auto& ex : remark_examples()) {
    const auto c = model.search_coefficients(ex.M);
    ASSERT_TRUE(c.has_value());
    Int r = 0;
    for (Int x : *c) r = std::max(r, std::abs(x));
    const auto got = search_k3_witness(ex.H, SearchConfig{r});
    EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](const K3Witness& w) { return w.M == ex.M; })) << format_class(ex.H);
  }
}

TEST(K3Search, Preconditions) {
  EXPECT_THROW(search_k3_witness(parse_class("3L - F1 - F2"), SearchConfig{1}), PreconditionError);
  EXPECT_THROW(search_k3_witness(Rational(1, 2) * node(0), SearchConfig{1}), PreconditionError);
  EXPECT_THROW(search_k3_witness(parse_class("F1 + F2"), SearchConfig{1}), PreconditionError);
  EXPECT_THROW(search_k3_witness(parse_class("4L - F1 - F2 - F3 - F4"), SearchConfig{-2}), DomainError);
}

TEST(EnriquesSearch, MatchesNaiveOracle) {
  const oracle::Mat g = to_mat(enriques_lattice().gram());
  std::vector<oracle::Vec> targets = {{1, 2, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 0, 1, 0, 0, 0, 0, 0, 0}};
  while (targets.size() < 7) {
    oracle::Vec c(10);
    for (auto& x : c) x = oracle::uniform(-2, 2);
    if (oracle::form(g, c, c) > 0) targets.push_back(c);
  }
  int witnesses = 0;
  for (const auto& h : targets) {
    auto expected = oracle::witness_box(g, h, 2, -2);
    std::sort(expected.begin(), expected.end());
    const auto got = search_enriques_witness(ev(h), SearchConfig{2});
    std::vector<oracle::Vec> found;
    for (const auto& w : got) found.emplace_back(w.N.coords.begin(), w.N.coords.end());
    EXPECT_EQ(found, expected);
    witnesses += static_cast<int>(found.size());
  }
  EXPECT_GT(witnesses, 0);
}

TEST(EnriquesSearch, DegreeFourExample) {
  const EnriquesVector h = ev({1, 2, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto got = search_enriques_witness(h, SearchConfig{4});
  ASSERT_FALSE(got.empty());
  bool root_witness = false;
  for (const auto& w : got) {
    EXPECT_EQ(w.N.dot(h), 6);
    EXPECT_EQ(w.N.norm(), 6);
    if (w.N.coords[0] == 1 && w.N.coords[1] == 4) root_witness = true;
  }
  EXPECT_TRUE(root_witness);
  SearchConfig par{4};
  par.parallel = true;
  const auto p = search_enriques_witness(h, par);
  ASSERT_EQ(p.size(), got.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[i].N, got[i].N);
}

TEST(Phi, MatchesBoxMinimum) {
  const oracle::Mat g = to_mat(enriques_lattice().gram());
  const std::vector<oracle::Vec> hs = {{1, 2, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 5, 0, 0, 0, 0, 0, 0, 0, 0}, {2, 3, 1, 0, 0, 0, 0, 0, 0, 0}};
  for (const auto& h : hs) {
    const oracle::Vec gh = oracle::mul(g, h);
    oracle::I best = 0;
    oracle::box_walk(g, 1, [&](const oracle::Vec& x, const oracle::Vec& gx) {
      if (oracle::dot(x, gx) != 0) return;
      const oracle::I p = std::abs(oracle::dot(x, gh));
      if (p > 0 && (best == 0 || p < best)) best = p;
    });
    const auto phi = phi_invariant(ev(h), 1);
    if (best == 0) {
      EXPECT_FALSE(phi.has_value());
    } else {
      EXPECT_EQ(phi, std::optional<Int>(best));
    }
  }
  EXPECT_EQ(phi_invariant(ev({1, 2, 0, 0, 0, 0, 0, 0, 0, 0}), 2), std::optional<Int>(1));
  EXPECT_EQ(phi_invariant(ev({1, 2, 0, 0, 0, 0, 0, 0, 0, 0}), 0), std::nullopt);
  EXPECT_THROW(phi_invariant(ev({1, 2, 0, 0, 0, 0, 0, 0, 0, 0}), -1), DomainError);
  EXPECT_THROW(phi_invariant(ev({0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 1), PreconditionError);
}

TEST(Phi, SquareBound) {
  // phi^2 <= h^2 for the box minimum, which only overestimates phi.
  const EnriquesVector h = ev({2, 3, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto phi = phi_invariant(h, 1);
  ASSERT_TRUE(phi.has_value());
  EXPECT_LE(*phi * *phi, h.norm());
}
