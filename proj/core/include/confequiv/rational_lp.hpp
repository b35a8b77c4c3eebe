#pragma once

#include <gmpxx.h>

#include <vector>

namespace confequiv {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Outcome of deciding { x : A x = b, x >= 0 } != empty in exact arithmetic.
struct LpFeasibility {
  bool feasible = false;
  std::vector<Rational> x;  ///< witness when feasible
  std::vector<Rational> y;  ///< Farkas certificate when infeasible: y^T A >= 0, y^T b < 0
};

/// Phase-one simplex over the rationals with Bland's rule (terminates on
/// degenerate problems). The certificate is read off the final basis
/// inverse and scaled to coprime integers.
LpFeasibility solve_feasibility(const RationalMatrix& A, const std::vector<Rational>& b);

bool verify_witness(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& x);
bool verify_certificate(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& y);

}  // namespace confequiv
