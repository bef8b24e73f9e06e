#include <gmpxx.h>

#include <stdexcept>

#include "ringlab/error.hpp"
#include "ringlab/reduction.hpp"

namespace ringlab {

namespace {

using Grid = std::vector<std::vector<mpz_class>>;

struct TwoByTwo {
  mpz_class e00, e01, e10, e11;

  TwoByTwo inverse() const {
    const mpz_class det = e00 * e11 - e01 * e10;  // +-1
    return {det * e11, -det * e01, -det * e10, det * e00};
  }
};

Grid identity(std::size_t n) {
  Grid g(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

// Rows i, j of m replaced by E * (row_i; row_j).
void row_op(Grid& m, std::size_t i, std::size_t j, const TwoByTwo& e) {
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    const mpz_class ri = m[i][k], rj = m[j][k];
    m[i][k] = e.e00 * ri + e.e01 * rj;
    m[j][k] = e.e10 * ri + e.e11 * rj;
  }
}

// Columns i, j of m replaced by (col_i, col_j) * G.
void col_op(Grid& m, std::size_t i, std::size_t j, const TwoByTwo& g) {
  for (auto& row : m) {
    const mpz_class ci = row[i], cj = row[j];
    row[i] = ci * g.e00 + cj * g.e10;
    row[j] = ci * g.e01 + cj * g.e11;
  }
}

// Row and column operations applied to A while P, P^-1, Q, Q^-1 track them:
// A = P * A0 * Q throughout.
class Elimination {
 public:
  explicit Elimination(Grid a)
      : a_(std::move(a)),
        m_(a_.size()),
        n_(a_.front().size()),
        p_(identity(m_)),
        p_inv_(identity(m_)),
        q_(identity(n_)),
        q_inv_(identity(n_)) {}

  void rows(std::size_t i, std::size_t j, const TwoByTwo& e) {
    row_op(a_, i, j, e);
    row_op(p_, i, j, e);
    col_op(p_inv_, i, j, e.inverse());
  }
  void cols(std::size_t i, std::size_t j, const TwoByTwo& g) {
    col_op(a_, i, j, g);
    col_op(q_, i, j, g);
    row_op(q_inv_, i, j, g.inverse());
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i != j) rows(i, j, {0, 1, 1, 0});
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i != j) cols(i, j, {0, 1, 1, 0});
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& c) {
    if (i < j) {
      rows(i, j, {1, c, 0, 1});
    } else {
      rows(j, i, {1, 0, c, 1});
    }
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& c) {
    if (i < j) {
      cols(i, j, {1, 0, c, 1});
    } else {
      cols(j, i, {1, c, 0, 1});
    }
  }
  void negate_row(std::size_t i) {
    const std::size_t j = i + 1 < m_ ? i + 1 : (i == 0 ? i : i - 1);
    if (j == i) {
      for (auto& x : a_[i]) x = -x;
      for (auto& x : p_[i]) x = -x;
      for (auto& row : p_inv_) row[i] = -row[i];
      return;
    }
    if (i < j) {
      rows(i, j, {-1, 0, 0, 1});
    } else {
      rows(j, i, {1, 0, 0, -1});
    }
  }

  void run(PivotRule rule) {
    const std::size_t r = std::min(m_, n_);
    for (std::size_t k = 0; k < r; ++k) {
      if (!reduce_block(k, rule)) return;
      if (sgn(a_[k][k]) < 0) negate_row(k);
    }
  }

  Grid a_;
  std::size_t m_, n_;
  Grid p_, p_inv_, q_, q_inv_;

 private:
  bool find_pivot(std::size_t k, PivotRule rule, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t j = k; j < n_; ++j) {
      for (std::size_t i = k; i < m_; ++i) {
        if (sgn(a_[i][j]) == 0) continue;
        if (rule == PivotRule::gcd_combination) {
          pi = i;
          pj = j;
          return true;
        }
        if (!found || abs(a_[i][j]) < abs(a_[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    return found;
  }

  bool clean(std::size_t k) const {
    for (std::size_t i = k + 1; i < m_; ++i) {
      if (sgn(a_[i][k]) != 0) return false;
    }
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (sgn(a_[k][j]) != 0) return false;
    }
    return true;
  }

  void eliminate(std::size_t k, PivotRule rule) {
    for (std::size_t i = k + 1; i < m_; ++i) {
      if (sgn(a_[i][k]) == 0) continue;
      if (rule == PivotRule::smallest_entry) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_[i][k].get_mpz_t(), a_[k][k].get_mpz_t());
        add_row(i, k, -q);
      } else {
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a_[k][k].get_mpz_t(),
                   a_[i][k].get_mpz_t());
        const mpz_class s = a_[i][k] / g, t = a_[k][k] / g;
        rows(k, i, {x, y, -s, t});
      }
    }
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (sgn(a_[k][j]) == 0) continue;
      if (rule == PivotRule::smallest_entry) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_[k][j].get_mpz_t(), a_[k][k].get_mpz_t());
        add_col(j, k, -q);
      } else {
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a_[k][k].get_mpz_t(),
                   a_[k][j].get_mpz_t());
        const mpz_class s = a_[k][j] / g, t = a_[k][k] / g;
        cols(k, j, {x, -s, y, t});
      }
    }
  }

  // Returns false when the remaining block is zero.
  bool reduce_block(std::size_t k, PivotRule rule) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(k, rule, pi, pj)) return false;
      swap_rows(k, pi);
      swap_cols(k, pj);
      while (!clean(k)) {
        eliminate(k, rule);
        if (rule == PivotRule::smallest_entry && !clean(k)) break;  // re-pick smaller pivot
      }
      if (!clean(k)) continue;
      // The pivot must divide the rest of the block.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < m_ && divides_all; ++i) {
        for (std::size_t j = k + 1; j < n_; ++j) {
          if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[k][k].get_mpz_t())) {
            add_row(k, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) return true;
    }
  }
};

MatrixOverRing to_matrix(const RingHandle& z, const Grid& g) {
  std::vector<Element> entries;
  for (const auto& row : g) {
    for (const auto& x : row) entries.emplace_back(x);
  }
  return MatrixOverRing(z, g.size(), g.front().size(), std::move(entries));
}

}  // namespace

ReductionCertificate smith_form_integers(const MatrixOverRing& a, PivotRule rule) {
  if (a.ring()->descriptor().kind() != RingKind::Integer) {
    throw RingError(ErrorKind::UnsupportedDescriptor, "Smith form requires a matrix over Z");
  }
  Grid grid(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) grid[i][j] = a.at(i, j).integer();
  }
  Elimination e(std::move(grid));
  e.run(rule);
  const RingHandle& z = a.ring();
  ReductionCertificate cert{to_matrix(z, e.p_), to_matrix(z, e.q_), to_matrix(z, e.a_),
                            to_matrix(z, e.p_inv_), to_matrix(z, e.q_inv_), {}, {}, "smith", 0};
  cert.diagonal = cert.d.diagonal();
  const VerifyResult v = verify_certificate(a, cert);
  if (!v.ok) throw std::logic_error("Smith elimination produced an invalid certificate: " + v.clause);
  cert.flags = v.flags;
  return cert;
}

}  // namespace ringlab
