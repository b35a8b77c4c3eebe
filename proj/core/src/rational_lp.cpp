#include "confequiv/rational_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace confequiv {

namespace {

void scale_to_integers(std::vector<Rational>& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& q : v) {
    q *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  if (gcd != 0 && gcd != 1)
    for (auto& q : v) q /= gcd;
}

}  // namespace

LpFeasibility solve_feasibility(const RationalMatrix& A, const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  if (b.size() != rows) throw std::invalid_argument("solve_feasibility: b has wrong length");
  const std::size_t vars = rows ? A.front().size() : 0;
  for (const auto& row : A)
    if (row.size() != vars) throw std::invalid_argument("solve_feasibility: ragged matrix");

  // Tableau [A' | I | b'] with rows oriented so that b' >= 0.
  const std::size_t cols = vars + rows;
  const std::size_t rhs = cols;
  std::vector<int> sign(rows, 1);
  RationalMatrix T(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < vars; ++j) T[i][j] = sign[i] * A[i][j];
    T[i][vars + i] = 1;
    T[i][rhs] = sign[i] * b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  auto cost = [vars](std::size_t j) { return j >= vars ? 1 : 0; };

  // Reduced costs d_j = c_j - c_B^T T_j (and objective value in d[rhs], negated).
  std::vector<Rational> d(cols + 1);
  auto recompute_costs = [&] {
    for (std::size_t j = 0; j <= cols; ++j) {
      Rational acc = j < cols ? Rational(cost(j)) : Rational(0);
      for (std::size_t i = 0; i < rows; ++i)
        if (cost(basis[i])) acc -= T[i][j];
      d[j] = acc;
    }
  };
  recompute_costs();

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a pivot.
    if (leave == rows) throw std::logic_error("phase-one simplex unbounded");

    const Rational pivot = T[leave][enter];
    for (auto& v : T[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    const Rational f = d[enter];
    for (std::size_t j = 0; j <= cols; ++j) d[j] -= f * T[leave][j];
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (cost(basis[i])) objective += T[i][rhs];

  LpFeasibility out;
  if (objective == 0) {
    out.feasible = true;
    out.x.assign(vars, 0);
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < vars) out.x[basis[i]] = T[i][rhs];
    return out;
  }

  // pi = c_B^T B^-1; B^-1 sits in the artificial columns.
  out.y.assign(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational pi = 0;
    for (std::size_t i = 0; i < rows; ++i)
      if (cost(basis[i])) pi += T[i][vars + r];
    out.y[r] = -pi * sign[r];
  }
  scale_to_integers(out.y);
  return out;
}

bool verify_witness(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& x) {
  if (A.size() != b.size()) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != x.size()) return false;
    Rational acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += A[i][j] * x[j];
    if (acc != b[i]) return false;
  }
  return true;
}

bool verify_certificate(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  if (A.size() != b.size() || y.size() != b.size()) return false;
  const std::size_t vars = A.empty() ? 0 : A.front().size();
  for (std::size_t j = 0; j < vars; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < A.size(); ++i) acc += y[i] * A[i][j];
    if (acc < 0) return false;
  }
  Rational yb = 0;
  for (std::size_t i = 0; i < b.size(); ++i) yb += y[i] * b[i];
  return yb < 0;
}

}  // namespace confequiv
