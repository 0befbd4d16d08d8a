#include "entangle/lp/lp.hpp"

#include <limits>
#include <string>

namespace entangle::lp {

void LinearProgram::add(Vec coeffs, Relation rel, Rat rhs) {
  if (coeffs.size() != variables_) {
    throw DimensionMismatch("constraint has " + std::to_string(coeffs.size()) +
                            " coefficients for " + std::to_string(variables_) + " variables");
  }
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::add_nonnegative(std::size_t var) {
  add(Vec::unit(variables_, var), Relation::GreaterEqual, Rat(0));
}

void LinearProgram::set_objective(Vec coeffs, Sense sense) {
  if (coeffs.size() != variables_) throw DimensionMismatch("objective length mismatch");
  objective_ = Objective{std::move(coeffs), sense};
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Coefficient vector and right-hand side of a constraint in `n·x ≤ rhs` form.
std::pair<Vec, Rat> normalized(const Constraint& c) {
  if (c.relation == Relation::GreaterEqual) return {-c.coeffs, -c.rhs};
  return {c.coeffs, c.rhs};
}

// If the constraint reads c·x_j ≥ 0 with c > 0 (in either orientation), returns j.
std::size_t sign_row_variable(const Constraint& c) {
  if (!c.rhs.is_zero() || c.relation == Relation::Equal) return kNone;
  std::size_t j = kNone;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    if (c.coeffs[k].is_zero()) continue;
    if (j != kNone) return kNone;
    j = k;
  }
  if (j == kNone) return kNone;
  const int s = c.coeffs[j].sign();
  const bool ok = (c.relation == Relation::GreaterEqual && s > 0) ||
                  (c.relation == Relation::LessEqual && s < 0);
  return ok ? j : kNone;
}

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows * cols, Rat(0)), b_(rows, Rat(0)), basis_(rows, kNone),
        cost_(cols, Rat(0)), reduced_(cols, Rat(0)), allowed_(cols, true) {}

  Rat& at(std::size_t i, std::size_t j) { return t_[i * n_ + j]; }
  [[nodiscard]] const Rat& at(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }
  Rat& rhs(std::size_t i) { return b_[i]; }
  [[nodiscard]] const Rat& rhs(std::size_t i) const { return b_[i]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }
  std::vector<Rat>& cost() { return cost_; }
  [[nodiscard]] const Rat& reduced(std::size_t j) const { return reduced_[j]; }
  [[nodiscard]] const Rat& value() const { return value_; }
  void forbid(std::size_t j) { allowed_[j] = false; }

  void recompute_reduced() {
    value_ = Rat(0);
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = cost_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!at(i, j).is_zero()) reduced_[j] -= cb * at(i, j);
      }
      value_ += cb * b_[i];
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const Rat inv = at(p, q).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      if (!at(p, j).is_zero()) at(p, j) *= inv;
    }
    b_[p] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || at(i, q).is_zero()) continue;
      const Rat f = at(i, q);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!at(p, j).is_zero()) at(i, j) -= f * at(p, j);
      }
      b_[i] -= f * b_[p];
    }
    if (!reduced_[q].is_zero()) {
      const Rat f = reduced_[q];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!at(p, j).is_zero()) reduced_[j] -= f * at(p, j);
      }
      value_ += f * b_[p];
    }
    basis_[p] = q;
  }

  enum class Step { Optimal, Pivoted, Unbounded };

  // One Bland iteration for minimization.
  Step step() {
    std::size_t q = kNone;
    for (std::size_t j = 0; j < n_; ++j) {
      if (allowed_[j] && reduced_[j].sign() < 0) {
        q = j;
        break;
      }
    }
    if (q == kNone) return Step::Optimal;
    std::size_t p = kNone;
    Rat best;
    for (std::size_t i = 0; i < m_; ++i) {
      if (at(i, q).sign() <= 0) continue;
      Rat ratio = b_[i] / at(i, q);
      if (p == kNone || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
        p = i;
        best = std::move(ratio);
      }
    }
    if (p == kNone) return Step::Unbounded;
    pivot(p, q);
    return Step::Pivoted;
  }

  Step run() {
    for (;;) {
      const Step s = step();
      if (s != Step::Pivoted) return s;
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * n_),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rat> t_;
  std::vector<Rat> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> cost_;
  std::vector<Rat> reduced_;
  std::vector<bool> allowed_;
  Rat value_{0};
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& program) {
  const std::size_t nvars = program.variables();
  const auto& cons = program.constraints();

  // Sign rows x_j ≥ 0 become column bounds instead of tableau rows.
  std::vector<std::size_t> elided_var(cons.size(), kNone);
  std::vector<bool> nonneg(nvars, false);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::size_t j = sign_row_variable(cons[i]);
    if (j != kNone && !nonneg[j]) {
      nonneg[j] = true;
      elided_var[i] = j;
    }
  }

  // Column layout: variable parts, then slacks, then artificials.
  std::vector<std::size_t> pos_col(nvars), neg_col(nvars, kNone);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg[j]) neg_col[j] = ncols++;
  }
  std::vector<std::size_t> rows;  // constraint index per tableau row
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (elided_var[i] == kNone) rows.push_back(i);
  }
  const std::size_t m = rows.size();
  std::vector<std::size_t> slack_col(m, kNone);
  for (std::size_t r = 0; r < m; ++r) {
    if (cons[rows[r]].relation != Relation::Equal) slack_col[r] = ncols++;
  }
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> unit_col(m, kNone);  // column holding e_r initially
  std::vector<bool> unit_is_artificial(m, false);
  const std::size_t first_artificial = ncols;
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& c = cons[rows[r]];
    flip[r] = c.rhs.sign() < 0 ? -1 : 1;
    const int slack_sign = c.relation == Relation::LessEqual ? 1 : -1;
    if (slack_col[r] != kNone && slack_sign * flip[r] > 0) {
      unit_col[r] = slack_col[r];
    } else {
      unit_col[r] = ncols++;
      unit_is_artificial[r] = true;
    }
  }

  Tableau tab(m, ncols);
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& c = cons[rows[r]];
    const Rat s(flip[r]);
    for (std::size_t j = 0; j < nvars; ++j) {
      if (c.coeffs[j].is_zero()) continue;
      tab.at(r, pos_col[j]) = s * c.coeffs[j];
      if (neg_col[j] != kNone) tab.at(r, neg_col[j]) = -(s * c.coeffs[j]);
    }
    if (slack_col[r] != kNone) {
      tab.at(r, slack_col[r]) = Rat(c.relation == Relation::LessEqual ? flip[r] : -flip[r]);
    }
    if (unit_is_artificial[r]) tab.at(r, unit_col[r]) = Rat(1);
    tab.rhs(r) = s * c.rhs;
    tab.basic(r) = unit_col[r];
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t r = 0; r < m; ++r) {
    if (unit_is_artificial[r]) tab.cost()[unit_col[r]] = Rat(1);
  }
  for (std::size_t j = first_artificial; j < ncols; ++j) tab.forbid(j);
  tab.recompute_reduced();
  tab.run();

  if (tab.value().sign() > 0) {
    // Simplex multipliers y = c_B B^{-1}, read off the initial unit columns.
    std::vector<Rat> z(m);
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t u = unit_col[r];
      Rat y = tab.cost()[u] - tab.reduced(u);
      z[r] = Rat(flip[r]) * y;
    }
    Vec farkas(cons.size());
    Vec column_sum(nvars);
    for (std::size_t r = 0; r < m; ++r) {
      const Constraint& c = cons[rows[r]];
      Rat w = c.relation == Relation::GreaterEqual ? z[r] : -z[r];
      const auto [n, rhs] = normalized(c);
      for (std::size_t j = 0; j < nvars; ++j) column_sum[j] += w * n[j];
      farkas[rows[r]] = std::move(w);
    }
    for (std::size_t i = 0; i < cons.size(); ++i) {
      const std::size_t j = elided_var[i];
      if (j == kNone) continue;
      // Normalized elided row is -c·x_j ≤ 0; its multiplier cancels column j.
      farkas[i] = column_sum[j] / cons[i].coeffs[j].abs();
      column_sum[j] = Rat(0);
    }
    ensure(verify_farkas(program, farkas), "simplex produced an invalid Farkas certificate");
    return {LpStatus::Infeasible, std::nullopt, std::nullopt, std::move(farkas)};
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basic(r) < first_artificial) {
      ++r;
      continue;
    }
    std::size_t q = kNone;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (!tab.at(r, j).is_zero()) {
        q = j;
        break;
      }
    }
    if (q == kNone) {
      tab.drop_row(r);
    } else {
      tab.pivot(r, q);
      ++r;
    }
  }

  auto extract = [&]() {
    std::vector<Rat> col_value(ncols, Rat(0));
    for (std::size_t r = 0; r < tab.rows(); ++r) col_value[tab.basic(r)] = tab.rhs(r);
    Vec x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
      x[j] = col_value[pos_col[j]];
      if (neg_col[j] != kNone) x[j] -= col_value[neg_col[j]];
    }
    return x;
  };

  if (!program.objective()) {
    Vec x = extract();
    ensure(satisfies(program, x), "simplex produced an infeasible point");
    return {LpStatus::Feasible, std::move(x), std::nullopt, std::nullopt};
  }

  const Objective& obj = *program.objective();
  const Rat dir(obj.sense == Sense::Maximize ? -1 : 1);
  for (auto& c : tab.cost()) c = Rat(0);
  for (std::size_t j = 0; j < nvars; ++j) {
    tab.cost()[pos_col[j]] = dir * obj.coeffs[j];
    if (neg_col[j] != kNone) tab.cost()[neg_col[j]] = -(dir * obj.coeffs[j]);
  }
  tab.recompute_reduced();
  const auto result = tab.run();
  Vec x = extract();
  ensure(satisfies(program, x), "simplex produced an infeasible point");
  if (result == Tableau::Step::Unbounded) {
    return {LpStatus::Unbounded, std::move(x), std::nullopt, std::nullopt};
  }
  Rat opt = dot(obj.coeffs, x);
  return {LpStatus::Feasible, std::move(x), std::move(opt), std::nullopt};
}

bool satisfies(const LinearProgram& program, const Vec& x) {
  if (x.size() != program.variables()) return false;
  for (const auto& c : program.constraints()) {
    const Rat lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_farkas(const LinearProgram& program, const Vec& y) {
  const auto& cons = program.constraints();
  if (y.size() != cons.size()) return false;
  Vec combined(program.variables());
  Rat rhs(0);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (cons[i].relation != Relation::Equal && y[i].sign() < 0) return false;
    if (y[i].is_zero()) continue;
    const auto [n, b] = normalized(cons[i]);
    combined += y[i] * n;
    rhs += y[i] * b;
  }
  return combined.is_zero() && rhs.sign() < 0;
}

std::optional<Vec> find_feasible(const LinearProgram& program) {
  LinearProgram feas(program.variables());
  for (const auto& c : program.constraints()) feas.add(c.coeffs, c.relation, c.rhs);
  auto out = lp_solve(feas);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return out.point;
}

}  // namespace entangle::lp
