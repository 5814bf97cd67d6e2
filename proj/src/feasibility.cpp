#include "hyparr/feasibility.hpp"

#include <stdexcept>

namespace hyparr {

namespace {

// Dense simplex tableau for: maximize t subject to
//   -g_r . y+  +  g_r . y-  +  w_r t  +  s_r  = 0     (one per system row)
//                                 t  +  s_cap = 1
// Columns: y+ (k), y- (k), t, then one slack per constraint, then rhs.
class Tableau {
 public:
  explicit Tableau(const LinearSystem& sys)
      : k_(sys.variables), m_(sys.rows.size() + 1) {
    cols_ = 2 * k_ + 1 + m_;
    a_.assign(m_, RationalVector(cols_ + 1, 0));
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      const auto& g = sys.rows[r];
      if (g.size() != k_) throw std::invalid_argument("system row has wrong length");
      for (std::size_t j = 0; j < k_; ++j) {
        if (sgn(g[j]) == 0) continue;
        a_[r][j] = -g[j];
        a_[r][k_ + j] = g[j];
      }
      if (sys.strict[r]) a_[r][t_col()] = 1;
      a_[r][2 * k_ + 1 + r] = 1;
    }
    auto& cap = a_[m_ - 1];
    cap[t_col()] = 1;
    cap[2 * k_ + 1 + (m_ - 1)] = 1;
    cap[cols_] = 1;

    objective_.assign(cols_ + 1, 0);
    objective_[t_col()] = -1;

    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) basis_[r] = 2 * k_ + 1 + r;
  }

  std::optional<RationalVector> run() {
    for (;;) {
      if (auto w = positive_slack_witness()) return w;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(objective_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return std::nullopt;  // optimal with t <= 0

      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      // t <= 1 bounds the objective, so an improving column always has a row.
      if (leave == m_) throw std::logic_error("slack LP reported unbounded");
      pivot(leave, enter);
    }
  }

 private:
  std::size_t t_col() const { return 2 * k_; }

  std::optional<RationalVector> positive_slack_witness() const {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] == t_col() && sgn(a_[r][cols_]) > 0) {
        RationalVector y(k_, 0);
        for (std::size_t q = 0; q < m_; ++q) {
          if (basis_[q] < k_) y[basis_[q]] += a_[q][cols_];
          else if (basis_[q] < 2 * k_) y[basis_[q] - k_] -= a_[q][cols_];
        }
        return y;
      }
    }
    return std::nullopt;
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / a_[row][col];
    auto& pr = a_[row];
    for (auto& x : pr) {
      if (sgn(x) != 0) x *= inv;
    }
    auto eliminate = [&](RationalVector& target) {
      if (sgn(target[col]) == 0) return;
      Rational f = target[col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(pr[j]) != 0) target[j] -= f * pr[j];
      }
    };
    for (std::size_t r = 0; r < m_; ++r) {
      if (r != row) eliminate(a_[r]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  std::size_t k_;
  std::size_t m_;
  std::size_t cols_;
  RationalMatrix a_;
  RationalVector objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> find_solution(const LinearSystem& system) {
  if (system.strict.size() != system.rows.size()) {
    throw std::invalid_argument("strict flags do not match rows");
  }
  bool any_strict = false;
  for (bool s : system.strict) any_strict = any_strict || s;
  if (!any_strict) return RationalVector(system.variables, 0);
  if (system.variables == 0) return std::nullopt;
  return Tableau(system).run();
}

LinearSystem restrict_to_kernel(const LinearSystem& system,
                                const RationalMatrix& equalities) {
  RationalMatrix basis = null_space(equalities, system.variables);
  LinearSystem out;
  out.variables = basis.size();
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    RationalVector row(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) row[b] = dot(system.rows[r], basis[b]);
    out.add(std::move(row), system.strict[r]);
  }
  return out;
}

}  // namespace hyparr
