#pragma once

#include <optional>
#include <vector>

#include "entangle/exact/matrix.hpp"

namespace entangle::lp {

using exact::Rat;
using exact::Vec;

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };
enum class LpStatus { Feasible, Infeasible, Unbounded };

struct Constraint {
  Vec coeffs;
  Relation relation;
  Rat rhs;
};

struct Objective {
  Vec coeffs;
  Sense sense;
};

/// Linear program over free (sign-unrestricted) rational variables.
/// Sign constraints are ordinary rows.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables) : variables_(variables) {}

  [[nodiscard]] std::size_t variables() const { return variables_; }
  [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }
  [[nodiscard]] const std::optional<Objective>& objective() const { return objective_; }

  /// Throws DimensionMismatch if `coeffs` does not have one entry per variable.
  void add(Vec coeffs, Relation rel, Rat rhs);
  void add_nonnegative(std::size_t var);
  void set_objective(Vec coeffs, Sense sense);

 private:
  std::size_t variables_;
  std::vector<Constraint> constraints_;
  std::optional<Objective> objective_;
};

/// Result of an exact solve.
///
/// `farkas`, when present, holds one multiplier per constraint, applied to the
/// constraint written as `coeffs·x ≤ rhs` (rows with ≥ are negated first, rows
/// with = keep their orientation). Multipliers of inequalities are ≥ 0, the
/// combined coefficient vector is zero, and the combined right-hand side is
/// negative: the system implies 0 ≤ (negative number).
struct LpOutcome {
  LpStatus status;
  std::optional<Vec> point;
  std::optional<Rat> optimum;
  std::optional<Vec> farkas;
};

/// Two-phase primal simplex with Bland's rule.
LpOutcome lp_solve(const LinearProgram& program);

/// True if x satisfies every constraint exactly.
bool satisfies(const LinearProgram& program, const Vec& x);

/// True if y is a valid infeasibility certificate in the sense documented on LpOutcome.
bool verify_farkas(const LinearProgram& program, const Vec& y);

/// Convenience: feasibility-only solve, returning the point if any.
std::optional<Vec> find_feasible(const LinearProgram& program);

}  // namespace entangle::lp
