#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confequiv/configuration.hpp"
#include "confequiv/rational_lp.hpp"

namespace confequiv {

/// Weighting system attached to a one-sided configuration set, following the
/// Rosenblatt–Willis criterion: unknowns x_C >= 0, one per configuration,
///
///   sum_C x_C = 1
///   sum_{C : c_0 = j} x_C = sum_{C : c_i = j} x_C     for i in 1..n, j in 1..m.
///
/// A group is amenable iff every configuration pair admits such a weighting.
/// Rows are the normalization row followed by balance rows in (i, j) order;
/// columns follow the configuration set's tuple order.
class AmenabilitySystem {
 public:
  struct BalanceRow {
    std::size_t generator;  ///< 1-based i
    std::uint32_t color;    ///< 1-based j
    std::vector<std::uint8_t> lhs;  ///< [c_0 == j] per variable
    std::vector<std::uint8_t> rhs;  ///< [c_i == j] per variable
  };

  explicit AmenabilitySystem(const ConfigurationSet& cs);

  std::size_t variables() const noexcept { return variables_; }
  std::size_t rows() const noexcept { return 1 + balance_.size(); }
  const std::vector<BalanceRow>& balance_rows() const noexcept { return balance_; }
  const std::vector<ColorTuple>& configurations() const noexcept { return configurations_; }
  const Exactness& exactness() const noexcept { return exactness_; }

  /// Equality-constraint matrix (balance rows as lhs - rhs) and right-hand side.
  RationalMatrix matrix() const;
  std::vector<Rational> rhs() const;

 private:
  std::size_t variables_;
  std::vector<ColorTuple> configurations_;
  std::vector<BalanceRow> balance_;
  Exactness exactness_;
};

/// Throws UnsupportedKind on two-sided sets.
AmenabilitySystem build_system(const ConfigurationSet& cs);

struct FeasibilityVerdict {
  enum class Status { feasible, infeasible } status = Status::feasible;
  std::vector<Rational> witness;      ///< weights x_C, when feasible
  std::vector<Rational> certificate;  ///< y with y^T A >= 0, y^T b < 0, when infeasible
  Exactness exactness;                ///< carried over from the configuration set

  bool feasible() const noexcept { return status == Status::feasible; }
};

/// Exact decision; the witness or certificate is re-verified before return.
FeasibilityVerdict solve(const AmenabilitySystem& system);

bool verify(const AmenabilitySystem& system, const FeasibilityVerdict& verdict);

}  // namespace confequiv
