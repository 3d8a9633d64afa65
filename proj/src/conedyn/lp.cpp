#include "ampdyn/conedyn/lp.hpp"

namespace ampdyn::conedyn {

namespace {

class Tableau {
 public:
  // Rows: constraints with basis variable basis_[i]; last column is the right-hand side.
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, cols + 1), basis_(rows) {}

  mpq_class& at(std::size_t i, std::size_t j) { return t_(i, j); }
  mpq_class& rhs(std::size_t i) { return t_(i, t_.cols() - 1); }
  std::size_t rows() const { return t_.rows(); }
  std::size_t cols() const { return t_.cols() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class p = t_(r, c);
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(r, j) /= p;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const mpq_class f = t_(i, c);
      for (std::size_t j = 0; j < t_.cols(); ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    RatMatrix next(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) next(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Minimizes cost over the columns allowed[j]; returns false when unbounded.
  bool optimize(const RatVector& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Reduced costs c_j - c_B B^-1 A_j; Bland: first improving column.
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols() && enter == cols(); ++j) {
        if (!allowed[j]) continue;
        mpq_class reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (t_(i, j) != 0) reduced -= cost[basis_[i]] * t_(i, j);
        if (reduced < 0) enter = j;
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      mpq_class best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_(i, enter) <= 0) continue;
        mpq_class ratio = rhs(i) / t_(i, enter);
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

 private:
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) fail(ErrorKind::Dimension, "LP dimension mismatch");
  Tableau tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = a(i, j) * s;
    tab.at(i, n + i) = 1;
    tab.rhs(i) = b[i] * s;
    tab.basis()[i] = n + i;
  }
  // Phase I: minimize the sum of artificials.
  RatVector phase1(n + m, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, std::vector<bool>(n + m, true));
  mpq_class infeasibility = 0;
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] >= n) infeasibility += tab.rhs(i);
  LpResult res;
  if (infeasibility > 0) return res;

  // Drive the remaining (zero) artificials out of the basis, dropping redundant rows.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col == n) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }
  RatVector cost(n + m, mpq_class(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  std::vector<bool> allowed(n + m, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  if (!tab.optimize(cost, allowed)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] < n) res.x[tab.basis()[i]] = tab.rhs(i);
  res.value = dot(c, res.x);
  return res;
}

std::optional<RatVector> lp_feasible(const RatMatrix& a, const RatVector& b) {
  LpResult r = lp_minimize(a, b, RatVector(a.cols(), mpq_class(0)));
  if (r.status != LpResult::Status::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace ampdyn::conedyn
