#include "spheromo/lp.hpp"

#include <limits>

namespace spheromo {

LinearProgram::LinearProgram(std::size_t nvars)
    : nvars_(nvars), nonneg_(nvars, false), objective_(zeros(nvars)) {}

void LinearProgram::set_nonnegative(std::size_t j) { nonneg_.at(j) = true; }
void LinearProgram::set_all_nonnegative() { nonneg_.assign(nvars_, true); }

void LinearProgram::add(QVec coeffs, Rel rel, Rational rhs) {
  if (coeffs.size() != nvars_) throw DomainError("LP constraint has wrong length");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_objective(QVec objective) {
  if (objective.size() != nvars_) throw DomainError("LP objective has wrong length");
  objective_ = std::move(objective);
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Tableau {
  QMat t;                          // rows x (cols + 1), last column is the rhs
  std::vector<std::size_t> basis;  // basic column per row
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t k = 0; k <= cols; ++k) t[i][k] -= f * t[r][k];
    }
    basis[r] = c;
  }

  // Maximize obj over columns [0, allowed). Bland's rule guarantees termination.
  LPStatus run(const QVec& obj, std::size_t allowed) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < allowed && enter == npos; ++j) {
        bool basic = false;
        for (auto b : basis) basic = basic || b == j;
        if (basic) continue;
        Rational red = obj[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i][j] != 0) red -= obj[basis[i]] * t[i][j];
        if (red > 0) enter = j;
      }
      if (enter == npos) return LPStatus::optimal;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) return LPStatus::unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult LinearProgram::solve() const {
  // Column layout: one column per nonnegative var, two per free var, then
  // slacks, then artificials.
  std::vector<std::size_t> pos_col(nvars_), neg_col(nvars_, npos);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars_; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg_[j]) neg_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(rows_.size(), npos);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].rel != Rel::eq) slack_col[i] = ncols++;
  std::size_t real_cols = ncols;
  std::size_t m = rows_.size();
  ncols += m;

  Tableau tab;
  tab.cols = ncols;
  tab.t.assign(m, zeros(ncols + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = rows_[i];
    auto& tr = tab.t[i];
    for (std::size_t j = 0; j < nvars_; ++j) {
      tr[pos_col[j]] = row.a[j];
      if (neg_col[j] != npos) tr[neg_col[j]] = -row.a[j];
    }
    if (row.rel == Rel::le) tr[slack_col[i]] = 1;
    if (row.rel == Rel::ge) tr[slack_col[i]] = -1;
    tr[ncols] = row.b;
    if (row.b < 0)
      for (auto& x : tr) x = -x;
    tr[real_cols + i] = 1;
    tab.basis[i] = real_cols + i;
  }

  QVec phase1 = zeros(ncols);
  for (std::size_t i = 0; i < m; ++i) phase1[real_cols + i] = -1;
  tab.run(phase1, ncols);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= real_cols) infeas += tab.t[i][ncols];
  LPResult res;
  if (infeas != 0) {
    res.status = LPStatus::infeasible;
    return res;
  }
  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < real_cols) {
      ++i;
      continue;
    }
    std::size_t c = npos;
    for (std::size_t j = 0; j < real_cols && c == npos; ++j)
      if (tab.t[i][j] != 0) c = j;
    if (c != npos) {
      tab.pivot(i, c);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  QVec obj = zeros(ncols);
  for (std::size_t j = 0; j < nvars_; ++j) {
    obj[pos_col[j]] = objective_[j];
    if (neg_col[j] != npos) obj[neg_col[j]] = -objective_[j];
  }
  LPStatus st = tab.run(obj, real_cols);
  res.status = st;
  if (st != LPStatus::optimal) return res;
  QVec val = zeros(ncols);
  for (std::size_t i = 0; i < tab.t.size(); ++i) val[tab.basis[i]] = tab.t[i][ncols];
  res.x = zeros(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) {
    res.x[j] = val[pos_col[j]];
    if (neg_col[j] != npos) res.x[j] -= val[neg_col[j]];
  }
  res.value = dot(objective_, res.x);
  return res;
}

bool in_cone(const std::vector<QVec>& gens, const QVec& x) {
  if (gens.empty()) return is_zero(x);
  std::size_t k = gens.size();
  LinearProgram lp(k);
  lp.set_all_nonnegative();
  for (std::size_t d = 0; d < x.size(); ++d) {
    QVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][d];
    lp.add(row, Rel::eq, x[d]);
  }
  return lp.solve().status != LPStatus::infeasible;
}

}  // namespace spheromo
