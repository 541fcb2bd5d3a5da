// Copyright 2026 The SIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sia/lp.hpp"

#include <utility>

#include "sia/error.hpp"

namespace sia {
namespace {

enum class NbState : uint8_t { kBasic, kLower, kUpper };

// Dense bounded-variable tableau over the presolved problem. Columns are
// [structurals | slacks | artificials]; every row is kept scaled so that its
// basic column has coefficient one.
class Simplex {
 public:
  Simplex(const LpProblem& problem, const LpOptions& options)
      : problem_(problem), options_(options) {}

  LpResult Run();

 private:
  bool Presolve();
  void BuildTableau();
  // Returns false when the phase ends unbounded.
  bool Optimize();
  int Price() const;
  void Pivot(int row, int col);
  void ComputeReducedCosts();
  const Rational& Value(int col) const {
    return state_[col] == NbState::kUpper ? *upper_[col] : lower_[col];
  }
  void DriveOutArtificials();
  LpResult Assemble(LpStatus status) const;

  const LpProblem& problem_;
  const LpOptions& options_;
  int n_ = 0;  // original variable count
  int m_ = 0;  // original row count

  // Presolve.
  std::vector<int> compact_col_;  // -1 when the variable is fixed
  std::vector<int> struct_orig_;  // compact structural -> original var
  std::vector<int> row_orig_;     // tableau row -> original row
  std::vector<std::vector<Term>> row_terms_;  // compact column indices
  std::vector<Rational> row_rhs_;
  std::vector<bool> dropped_row_;  // empty after fixing variables

  // Tableau.
  int num_struct_ = 0;
  int first_art_ = 0;
  std::vector<int> slack_of_row_;  // tableau row -> slack column or -1
  std::vector<int> slack_orig_row_;  // slack column - num_struct_ -> row
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> beta_;
  std::vector<int> basis_;
  std::vector<NbState> state_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<bool> movable_;
  std::vector<Rational> cost_;
  std::vector<Rational> d_;
  std::vector<int> redundant_rows_;  // original indices

  int64_t iterations_ = 0;
  bool use_bland_ = true;
};

void Validate(const LpProblem& p) {
  const size_t n = p.objective.size();
  if (p.lower.size() != n || p.upper.size() != n) {
    throw Error(ErrorCode::kMalformedProblem,
                "objective and bound vectors differ in length");
  }
  for (size_t j = 0; j < n; ++j) {
    if (p.upper[j] && *p.upper[j] < p.lower[j]) {
      throw Error(ErrorCode::kMalformedProblem,
                  "variable " + std::to_string(j) + " has lower > upper");
    }
  }
  for (size_t r = 0; r < p.rows.size(); ++r) {
    for (const Term& t : p.rows[r].terms) {
      if (t.var < 0 || static_cast<size_t>(t.var) >= n) {
        throw Error(ErrorCode::kMalformedProblem,
                    "row " + std::to_string(r) + " references variable " +
                        std::to_string(t.var));
      }
    }
  }
}

bool Holds(int sign, Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return sign <= 0;
    case Relation::kEqual: return sign == 0;
    case Relation::kGreaterEqual: return sign >= 0;
  }
  return false;
}

bool Simplex::Presolve() {
  n_ = problem_.num_vars();
  m_ = static_cast<int>(problem_.rows.size());
  compact_col_.assign(n_, -1);
  for (int j = 0; j < n_; ++j) {
    bool fixed = problem_.upper[j] && *problem_.upper[j] == problem_.lower[j];
    if (!fixed) {
      compact_col_[j] = static_cast<int>(struct_orig_.size());
      struct_orig_.push_back(j);
    }
  }
  num_struct_ = static_cast<int>(struct_orig_.size());
  dropped_row_.assign(m_, false);
  for (int r = 0; r < m_; ++r) {
    const LinearConstraint& row = problem_.rows[r];
    Rational rhs = row.rhs;
    std::vector<Term> terms;
    for (const Term& t : row.terms) {
      if (t.coef.is_zero()) continue;
      int c = compact_col_[t.var];
      if (c < 0) {
        rhs -= t.coef * problem_.lower[t.var];
        continue;
      }
      bool merged = false;
      for (Term& existing : terms) {
        if (existing.var == c) {
          existing.coef += t.coef;
          merged = true;
          break;
        }
      }
      if (!merged) terms.push_back({c, t.coef});
    }
    std::erase_if(terms, [](const Term& t) { return t.coef.is_zero(); });
    if (terms.empty()) {
      // 0 (rel) rhs
      if (!Holds(-rhs.sign(), row.relation)) return false;
      dropped_row_[r] = true;
      continue;
    }
    row_orig_.push_back(r);
    row_terms_.push_back(std::move(terms));
    row_rhs_.push_back(std::move(rhs));
  }
  return true;
}

void Simplex::BuildTableau() {
  const int rows = static_cast<int>(row_orig_.size());
  lower_.clear();
  upper_.clear();
  for (int c = 0; c < num_struct_; ++c) {
    lower_.push_back(problem_.lower[struct_orig_[c]]);
    upper_.push_back(problem_.upper[struct_orig_[c]]);
  }
  slack_of_row_.assign(rows, -1);
  for (int r = 0; r < rows; ++r) {
    if (problem_.rows[row_orig_[r]].relation != Relation::kEqual) {
      slack_of_row_[r] = static_cast<int>(lower_.size());
      slack_orig_row_.push_back(row_orig_[r]);
      lower_.emplace_back(0);
      upper_.emplace_back(std::nullopt);
    }
  }
  first_art_ = static_cast<int>(lower_.size());

  // Residual of each row with every structural at its lower bound decides
  // whether the slack can start basic or an artificial is needed.
  std::vector<Rational> residual(rows);
  std::vector<int> art_sign(rows, 0);
  int num_art = 0;
  for (int r = 0; r < rows; ++r) {
    Rational res = row_rhs_[r];
    for (const Term& t : row_terms_[r]) res -= t.coef * lower_[t.var];
    Relation rel = problem_.rows[row_orig_[r]].relation;
    int s = res.sign();
    bool slack_ok = (rel == Relation::kLessEqual && s >= 0) ||
                    (rel == Relation::kGreaterEqual && s <= 0);
    if (!slack_ok) {
      art_sign[r] = s >= 0 ? 1 : -1;
      ++num_art;
    }
    residual[r] = std::move(res);
  }
  for (int a = 0; a < num_art; ++a) {
    lower_.emplace_back(0);
    upper_.emplace_back(std::nullopt);
  }
  const int cols = static_cast<int>(lower_.size());
  state_.assign(cols, NbState::kLower);
  t_.assign(rows, std::vector<Rational>(cols));
  beta_.assign(rows, Rational());
  basis_.assign(rows, -1);
  int next_art = first_art_;
  for (int r = 0; r < rows; ++r) {
    std::vector<Rational>& row = t_[r];
    for (const Term& t : row_terms_[r]) row[t.var] = t.coef;
    Relation rel = problem_.rows[row_orig_[r]].relation;
    if (slack_of_row_[r] >= 0) {
      row[slack_of_row_[r]] = rel == Relation::kLessEqual ? 1 : -1;
    }
    int basic;
    int scale;
    if (art_sign[r] != 0) {
      basic = next_art++;
      row[basic] = art_sign[r];
      scale = art_sign[r];
    } else {
      basic = slack_of_row_[r];
      scale = rel == Relation::kLessEqual ? 1 : -1;
    }
    if (scale < 0) {
      for (Rational& v : row) {
        if (!v.is_zero()) v = -v;
      }
      beta_[r] = -residual[r];
    } else {
      beta_[r] = residual[r];
    }
    basis_[r] = basic;
    state_[basic] = NbState::kBasic;
  }
  movable_.assign(cols, true);
  for (int c = 0; c < cols; ++c) {
    movable_[c] = !(upper_[c] && *upper_[c] == lower_[c]);
  }
}

void Simplex::ComputeReducedCosts() {
  d_ = cost_;
  for (size_t r = 0; r < t_.size(); ++r) {
    const Rational& cb = cost_[basis_[r]];
    if (cb.is_zero()) continue;
    const std::vector<Rational>& row = t_[r];
    for (size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) d_[c] -= cb * row[c];
    }
  }
}

int Simplex::Price() const {
  const int cols = static_cast<int>(d_.size());
  int best = -1;
  Rational best_mag;
  for (int c = 0; c < cols; ++c) {
    if (state_[c] == NbState::kBasic || !movable_[c]) continue;
    int s = d_[c].sign();
    bool improving = (state_[c] == NbState::kLower && s < 0) ||
                     (state_[c] == NbState::kUpper && s > 0);
    if (!improving) continue;
    if (use_bland_) return c;
    Rational mag = d_[c].abs();
    if (best < 0 || mag > best_mag) {
      best = c;
      best_mag = std::move(mag);
    }
  }
  return best;
}

void Simplex::Pivot(int row, int col) {
  std::vector<Rational>& prow = t_[row];
  std::vector<int> nz;
  for (size_t c = 0; c < prow.size(); ++c) {
    if (!prow[c].is_zero()) nz.push_back(static_cast<int>(c));
  }
  const Rational inv = Rational(1) / prow[col];
  for (int c : nz) prow[c] *= inv;
  for (size_t r = 0; r < t_.size(); ++r) {
    if (static_cast<int>(r) == row) continue;
    std::vector<Rational>& other = t_[r];
    if (other[col].is_zero()) continue;
    const Rational f = other[col];
    for (int c : nz) other[c] -= f * prow[c];
  }
  if (!d_.empty() && !d_[col].is_zero()) {
    const Rational f = d_[col];
    for (int c : nz) d_[c] -= f * prow[c];
  }
  state_[col] = NbState::kBasic;
  basis_[row] = col;
}

bool Simplex::Optimize() {
  int degenerate_run = 0;
  for (;;) {
    if (iterations_ >= options_.iteration_cap) {
      throw Error(ErrorCode::kHardCapExceeded,
                  "simplex exceeded " + std::to_string(options_.iteration_cap) +
                      " iterations");
    }
    const int q = Price();
    if (q < 0) return true;
    const int dir = state_[q] == NbState::kLower ? 1 : -1;

    // Ratio test: the entering variable moves by theta * dir and basic
    // variable r moves by -theta * dir * t_[r][q].
    int leave_row = -1;
    bool leave_to_upper = false;
    std::optional<Rational> theta;
    for (size_t r = 0; r < t_.size(); ++r) {
      const Rational& alpha = t_[r][q];
      if (alpha.is_zero()) continue;
      const int b = basis_[r];
      const bool decreasing = (alpha.sign() > 0) == (dir > 0);
      Rational limit;
      if (decreasing) {
        limit = (beta_[r] - lower_[b]) / alpha.abs();
      } else {
        if (!upper_[b]) continue;
        limit = (*upper_[b] - beta_[r]) / alpha.abs();
      }
      bool better = !theta || limit < *theta ||
                    (limit == *theta && b < basis_[leave_row]);
      if (better) {
        theta = std::move(limit);
        leave_row = static_cast<int>(r);
        leave_to_upper = !decreasing;
      }
    }
    bool flip = false;
    if (upper_[q]) {
      Rational span = *upper_[q] - lower_[q];
      if (!theta || span <= *theta) {
        theta = std::move(span);
        flip = true;
      }
    }
    if (!theta) return false;

    ++iterations_;
    if (theta->is_zero()) {
      if (++degenerate_run > options_.degenerate_run_limit) use_bland_ = true;
    } else {
      degenerate_run = 0;
    }

    if (!theta->is_zero()) {
      const Rational step = dir > 0 ? *theta : -*theta;
      for (size_t r = 0; r < t_.size(); ++r) {
        if (!t_[r][q].is_zero()) beta_[r] -= step * t_[r][q];
      }
    }
    if (flip) {
      state_[q] = state_[q] == NbState::kLower ? NbState::kUpper
                                               : NbState::kLower;
      continue;
    }
    const Rational entering =
        dir > 0 ? Value(q) + *theta : Value(q) - *theta;
    const int leaving = basis_[leave_row];
    state_[leaving] = leave_to_upper ? NbState::kUpper : NbState::kLower;
    Pivot(leave_row, q);
    beta_[leave_row] = entering;
  }
}

void Simplex::DriveOutArtificials() {
  const int cols = static_cast<int>(lower_.size());
  for (int c = first_art_; c < cols; ++c) {
    upper_[c] = Rational(0);
    movable_[c] = false;
    if (state_[c] != NbState::kBasic) state_[c] = NbState::kLower;
  }
  for (size_t r = 0; r < t_.size();) {
    if (basis_[r] < first_art_) {
      ++r;
      continue;
    }
    int entering = -1;
    for (int c = 0; c < first_art_; ++c) {
      if (state_[c] != NbState::kBasic && !t_[r][c].is_zero()) {
        entering = c;
        break;
      }
    }
    if (entering >= 0) {
      const Rational value = Value(entering);
      state_[basis_[r]] = NbState::kLower;
      Pivot(static_cast<int>(r), entering);
      beta_[r] = value;
      ++r;
      continue;
    }
    // Every non-artificial entry is zero: the row is implied by the others.
    state_[basis_[r]] = NbState::kLower;
    redundant_rows_.push_back(row_orig_[r]);
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    row_orig_.erase(row_orig_.begin() + static_cast<std::ptrdiff_t>(r));
    slack_of_row_.erase(slack_of_row_.begin() + static_cast<std::ptrdiff_t>(r));
  }
}

LpResult Simplex::Assemble(LpStatus status) const {
  LpResult out;
  out.status = status;
  out.iterations = iterations_;
  out.x.assign(n_, Rational());
  out.columns.assign(n_ + m_, ColumnState::kFixed);
  out.basis.assign(m_, -1);
  for (int j = 0; j < n_; ++j) {
    if (compact_col_[j] < 0) out.x[j] = problem_.lower[j];
  }
  auto column_state = [this](int c) {
    switch (state_[c]) {
      case NbState::kBasic: return ColumnState::kBasic;
      case NbState::kUpper: return ColumnState::kAtUpper;
      case NbState::kLower: return ColumnState::kAtLower;
    }
    return ColumnState::kFixed;
  };
  for (int c = 0; c < num_struct_; ++c) {
    out.x[struct_orig_[c]] = Value(c);
    out.columns[struct_orig_[c]] = column_state(c);
  }
  for (size_t s = 0; s < slack_orig_row_.size(); ++s) {
    out.columns[n_ + slack_orig_row_[s]] = column_state(num_struct_ + s);
  }
  for (size_t r = 0; r < basis_.size(); ++r) {
    const int b = basis_[r];
    if (b < num_struct_) {
      out.x[struct_orig_[b]] = beta_[r];
      out.basis[row_orig_[r]] = struct_orig_[b];
    } else if (b < first_art_) {
      out.basis[row_orig_[r]] = n_ + slack_orig_row_[b - num_struct_];
    }
  }
  for (int r = 0; r < m_; ++r) {
    if (dropped_row_[r] && problem_.rows[r].relation != Relation::kEqual) {
      out.basis[r] = n_ + r;
      out.columns[n_ + r] = ColumnState::kBasic;
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (!problem_.objective[j].is_zero())
      out.value += problem_.objective[j] * out.x[j];
  }
  return out;
}

LpResult Simplex::Run() {
  Validate(problem_);
  use_bland_ = options_.pivot_rule == PivotRule::kBland;
  if (!Presolve()) {
    n_ = problem_.num_vars();
    m_ = static_cast<int>(problem_.rows.size());
    LpResult out;
    out.status = LpStatus::kInfeasible;
    return out;
  }
  BuildTableau();
  const int cols = static_cast<int>(lower_.size());

  if (first_art_ < cols) {
    cost_.assign(cols, Rational());
    for (int c = first_art_; c < cols; ++c) cost_[c] = 1;
    ComputeReducedCosts();
    Optimize();  // bounded below by zero
    Rational infeasibility;
    for (size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] >= first_art_) infeasibility += beta_[r];
    }
    if (infeasibility.sign() > 0) {
      LpResult out;
      out.status = LpStatus::kInfeasible;
      out.iterations = iterations_;
      return out;
    }
    DriveOutArtificials();
  }

  cost_.assign(cols, Rational());
  for (int c = 0; c < num_struct_; ++c) {
    cost_[c] = problem_.objective[struct_orig_[c]];
  }
  ComputeReducedCosts();
  use_bland_ = options_.pivot_rule == PivotRule::kBland;
  if (!Optimize()) return Assemble(LpStatus::kUnbounded);
  return Assemble(LpStatus::kOptimal);
}

}  // namespace

LpResult SolveLp(const LpProblem& problem, const LpOptions& options) {
  return Simplex(problem, options).Run();
}

}  // namespace sia
