#pragma once

// Exact enumeration of lattice points on the slice
//
//     { x in Z^n : |x_i| <= radius,  x.h = dot,  x.x = norm }
//
// of a lattice with Gram matrix G of signature (1, n-1), for a target h with
// h.h > 0. The orthogonal complement of h is then negative definite, so on
// the hyperplane x.h = dot the condition x.x = norm pins x to the boundary
// of a bounded ellipsoid. One coordinate with nonzero (Gh)_p is eliminated
// through the linear condition; the remaining n-1 are enumerated
// Fincke-Pohst style with the ellipsoid bound intersected with the box.
// All bounds are computed in exact rational arithmetic (GMP); every leaf is
// re-verified with checked 64-bit integer arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "bnlat/errors.hpp"
#include "bnlat/integer.hpp"
#include "bnlat/lattice_core.hpp"

namespace bnlat {

struct SliceQuery {
  IntMatrix gram;
  std::vector<Int> target;
  Int dot = 0;
  Int norm = 0;
  Int radius = 0;
};

namespace detail {

inline mpq_class to_mpq(Int v) { return mpq_class(mpz_class(static_cast<long>(v))); }

inline mpz_class floor_mpq(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline mpz_class ceil_mpq(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

class SliceEnumerator {
 public:
  explicit SliceEnumerator(const SliceQuery& q) : q_(q), n_(q.gram.rows()) {
    if (q_.gram.cols() != n_ || q_.target.size() != n_) throw DomainError("slice query dimensions disagree");
    if (q_.radius < 0) throw DomainError("search radius must be nonnegative");
    gh_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) gh_[i] = checked::fma(gh_[i], q_.gram(i, j), q_.target[j]);
    Int h2 = 0;
    for (std::size_t i = 0; i < n_; ++i) h2 = checked::fma(h2, q_.target[i], gh_[i]);
    if (h2 <= 0) throw PreconditionError("slice target must have positive square");
    setup();
  }

  /// All solutions, sorted lexicographically.
  std::vector<std::vector<Int>> run(bool parallel) {
    std::vector<std::vector<Int>> out;
    if (infeasible_) return out;
    if (m_ == 0) {
      leaf({}, out);
      return out;
    }
    const std::size_t top = m_ - 1;
    std::vector<mpq_class> z(m_);
    const std::vector<Int> first = candidates(top, ybudget_, z);
    if (!parallel || first.size() < 2) {
      std::vector<Int> y(m_, 0);
      for (Int v : first) descend_from(top, v, y, z, ybudget_, out);
    } else {
      const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(first.size(), std::thread::hardware_concurrency()));
      std::vector<std::vector<std::vector<Int>>> partial(workers);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          std::vector<Int> y(m_, 0);
          std::vector<mpq_class> zz(m_);
          for (std::size_t k = w; k < first.size(); k += workers) descend_from(top, first[k], y, zz, ybudget_, partial[w]);
        });
      for (auto& t : pool) t.join();
      for (auto& p : partial) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void setup() {
    // Pivot: smallest nonzero |(Gh)_p|, lowest index on ties.
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n_; ++i)
      if (gh_[i] != 0 && (!p || checked::abs(gh_[i]) < checked::abs(gh_[*p]))) p = i;
    pivot_ = *p;
    for (std::size_t i = 0; i < n_; ++i)
      if (i != pivot_) free_.push_back(i);
    m_ = free_.size();

    const mpq_class ghp = to_mpq(gh_[pivot_]);
    const mpq_class t = to_mpq(q_.dot) / ghp;  // x_hat = t e_p
    auto G = [&](std::size_t i, std::size_t j) { return to_mpq(q_.gram(i, j)); };
    std::vector<mpq_class> ratio(m_);
    for (std::size_t a = 0; a < m_; ++a) ratio[a] = to_mpq(gh_[free_[a]]) / ghp;

    // B = -W^T G W with W's columns w_a = e_fa - ratio_a e_p; b = W^T G x_hat.
    std::vector<std::vector<mpq_class>> B(m_, std::vector<mpq_class>(m_));
    std::vector<mpq_class> b(m_);
    for (std::size_t a = 0; a < m_; ++a) {
      const std::size_t fa = free_[a];
      for (std::size_t c = 0; c < m_; ++c) {
        const std::size_t fc = free_[c];
        const mpq_class w = G(fa, fc) - ratio[c] * G(fa, pivot_) - ratio[a] * G(pivot_, fc) + ratio[a] * ratio[c] * G(pivot_, pivot_);
        B[a][c] = -w;
      }
      b[a] = t * (G(fa, pivot_) - ratio[a] * G(pivot_, pivot_));
    }
    const mpq_class xhat2 = t * t * G(pivot_, pivot_);

    // B = U^T D U, U unit upper triangular.
    D_.assign(m_, 0);
    U_.assign(m_, std::vector<mpq_class>(m_, 0));
    for (std::size_t i = 0; i < m_; ++i) {
      mpq_class d = B[i][i];
      for (std::size_t k = 0; k < i; ++k) d -= D_[k] * U_[k][i] * U_[k][i];
      if (sgn(d) <= 0) throw PreconditionError("lattice form is not hyperbolic with respect to the target");
      D_[i] = d;
      U_[i][i] = 1;
      for (std::size_t j = i + 1; j < m_; ++j) {
        mpq_class s = B[i][j];
        for (std::size_t k = 0; k < i; ++k) s -= D_[k] * U_[k][i] * U_[k][j];
        U_[i][j] = s / d;
      }
    }

    // center c = B^{-1} b via U^T w = b, D v = w, U c = v.
    std::vector<mpq_class> w(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      mpq_class s = b[i];
      for (std::size_t k = 0; k < i; ++k) s -= U_[k][i] * w[k];
      w[i] = s;
    }
    center_.assign(m_, 0);
    for (std::size_t ii = m_; ii-- > 0;) {
      mpq_class s = w[ii] / D_[ii];
      for (std::size_t j = ii + 1; j < m_; ++j) s -= U_[ii][j] * center_[j];
      center_[ii] = s;
    }
    mpq_class btc = 0;
    for (std::size_t i = 0; i < m_; ++i) btc += b[i] * center_[i];
    // (y - c)^T B (y - c) = x_hat^2 - norm + b^T c
    ybudget_ = xhat2 - to_mpq(q_.norm) + btc;
    infeasible_ = sgn(ybudget_) < 0;
  }

  mpq_class level_center(std::size_t i, const std::vector<mpq_class>& z) const {
    mpq_class g = center_[i];
    for (std::size_t j = i + 1; j < m_; ++j) g -= U_[i][j] * z[j];
    return g;
  }

  std::vector<Int> candidates(std::size_t i, const mpq_class& budget, const std::vector<mpq_class>& z) const {
    std::vector<Int> vals;
    const mpq_class gamma = level_center(i, z);
    const mpq_class s = budget / D_[i];
    const mpz_class w = sqrt(floor_mpq(s)) + 1;
    mpz_class lo = floor_mpq(gamma) - w;
    mpz_class hi = ceil_mpq(gamma) + w;
    const mpz_class r(static_cast<long>(q_.radius));
    if (lo < -r) lo = -r;
    if (hi > r) hi = r;
    if (lo > hi) return vals;
    for (long v = lo.get_si(); v <= hi.get_si(); ++v) {
      const mpq_class diff = to_mpq(v) - gamma;
      if (D_[i] * diff * diff <= budget) vals.push_back(v);
    }
    return vals;
  }

  void descend_from(std::size_t i, Int value, std::vector<Int>& y, std::vector<mpq_class>& z, const mpq_class& budget,
                    std::vector<std::vector<Int>>& out) const {
    const mpq_class gamma = level_center(i, z);
    const mpq_class diff = to_mpq(value) - gamma;
    const mpq_class rest = budget - D_[i] * diff * diff;
    y[i] = value;
    z[i] = to_mpq(value) - center_[i];
    if (i == 0) {
      leaf(y, out);
      return;
    }
    for (Int v : candidates(i - 1, rest, z)) descend_from(i - 1, v, y, z, rest, out);
  }

  void leaf(const std::vector<Int>& y, std::vector<std::vector<Int>>& out) const {
    Int rest = q_.dot;
    for (std::size_t a = 0; a < m_; ++a) rest = checked::sub(rest, checked::mul(gh_[free_[a]], y[a]));
    if (rest % gh_[pivot_] != 0) return;
    const Int xp = rest / gh_[pivot_];
    if (checked::abs(xp) > q_.radius) return;
    std::vector<Int> x(n_, 0);
    x[pivot_] = xp;
    for (std::size_t a = 0; a < m_; ++a) x[free_[a]] = y[a];
    Int dot = 0, nrm = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      dot = checked::fma(dot, x[i], gh_[i]);
      Int row = 0;
      for (std::size_t j = 0; j < n_; ++j) row = checked::fma(row, q_.gram(i, j), x[j]);
      nrm = checked::fma(nrm, x[i], row);
    }
    if (dot == q_.dot && nrm == q_.norm) out.push_back(std::move(x));
  }

  const SliceQuery& q_;
  std::size_t n_;
  std::vector<Int> gh_;
  std::size_t pivot_ = 0;
  std::vector<std::size_t> free_;
  std::size_t m_ = 0;
  std::vector<mpq_class> D_;
  std::vector<std::vector<mpq_class>> U_;
  std::vector<mpq_class> center_;
  mpq_class ybudget_;
  bool infeasible_ = false;
};

}  // namespace detail

/// Every box point on the slice, sorted lexicographically. With `parallel`
/// the outermost coordinate is split across threads; the result is the same.
inline std::vector<std::vector<Int>> enumerate_slice(const SliceQuery& query, bool parallel = false) {
  return detail::SliceEnumerator(query).run(parallel);
}

}  // namespace bnlat
