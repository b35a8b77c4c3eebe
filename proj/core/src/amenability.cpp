#include "confequiv/amenability.hpp"

#include <stdexcept>

#include "confequiv/errors.hpp"

namespace confequiv {

AmenabilitySystem::AmenabilitySystem(const ConfigurationSet& cs)
    : variables_(cs.size()), configurations_(cs.tuples()), exactness_(cs.exactness()) {
  if (cs.kind() != ConfigKind::one_sided)
    throw Error(ErrorKind::UnsupportedKind, "the weighting criterion is stated for one-sided configuration sets");
  for (std::size_t i = 1; i <= cs.n(); ++i) {
    for (std::uint32_t j = 1; j <= cs.m(); ++j) {
      BalanceRow row{i, j, std::vector<std::uint8_t>(variables_), std::vector<std::uint8_t>(variables_)};
      for (std::size_t v = 0; v < variables_; ++v) {
        row.lhs[v] = configurations_[v][0] == j;
        row.rhs[v] = configurations_[v][i] == j;
      }
      balance_.push_back(std::move(row));
    }
  }
}

RationalMatrix AmenabilitySystem::matrix() const {
  RationalMatrix A;
  A.reserve(rows());
  A.emplace_back(variables_, Rational(1));
  for (const auto& row : balance_) {
    auto& out = A.emplace_back(variables_);
    for (std::size_t v = 0; v < variables_; ++v) out[v] = int(row.lhs[v]) - int(row.rhs[v]);
  }
  return A;
}

std::vector<Rational> AmenabilitySystem::rhs() const {
  std::vector<Rational> b(rows(), Rational(0));
  b[0] = 1;
  return b;
}

AmenabilitySystem build_system(const ConfigurationSet& cs) { return AmenabilitySystem(cs); }

FeasibilityVerdict solve(const AmenabilitySystem& system) {
  const auto A = system.matrix();
  const auto b = system.rhs();
  auto lp = solve_feasibility(A, b);
  FeasibilityVerdict verdict;
  verdict.exactness = system.exactness();
  if (lp.feasible) {
    verdict.status = FeasibilityVerdict::Status::feasible;
    verdict.witness = std::move(lp.x);
  } else {
    verdict.status = FeasibilityVerdict::Status::infeasible;
    verdict.certificate = std::move(lp.y);
  }
  if (!verify(system, verdict)) throw std::logic_error("simplex result failed exact re-verification");
  return verdict;
}

bool verify(const AmenabilitySystem& system, const FeasibilityVerdict& verdict) {
  const auto A = system.matrix();
  const auto b = system.rhs();
  return verdict.feasible() ? verify_witness(A, b, verdict.witness) : verify_certificate(A, b, verdict.certificate);
}

}  // namespace confequiv
