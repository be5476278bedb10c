#pragma once

#include "spheromo/core.hpp"

namespace spheromo {

enum class Rel { le, ge, eq };
enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  QVec x;
};

// Exact two-phase simplex with Bland's rule. Variables are free unless
// marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t nvars);

  std::size_t num_vars() const { return nvars_; }
  void set_nonnegative(std::size_t j);
  void set_all_nonnegative();
  void add(QVec coeffs, Rel rel, Rational rhs);
  void set_objective(QVec objective);  // maximized

  LPResult solve() const;

 private:
  struct Row {
    QVec a;
    Rel rel;
    Rational b;
  };
  std::size_t nvars_;
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
  QVec objective_;
};

// Is x a nonnegative combination of gens?
bool in_cone(const std::vector<QVec>& gens, const QVec& x);

}  // namespace spheromo
