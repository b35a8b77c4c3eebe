#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace confequiv {

/// Sparse Laurent polynomial in t with arbitrary-precision integer
/// coefficients. Terms are kept sorted by degree and no stored coefficient is
/// zero, so the zero polynomial is the empty term list and structural
/// equality is mathematical equality.
class LaurentPoly {
 public:
  using Degree = std::int64_t;
  using Term = std::pair<Degree, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<Degree, long>> terms);

  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(Degree degree, const mpz_class& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Coefficient of t^degree (zero if absent).
  mpz_class coefficient(Degree degree) const;
  Degree min_degree() const;  ///< precondition: nonzero
  Degree max_degree() const;  ///< precondition: nonzero

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  /// Multiply by t^k (degree shift).
  LaurentPoly shifted(Degree k) const;

  /// Keep only the terms whose degree satisfies the predicate.
  LaurentPoly filtered(const std::function<bool(Degree)>& keep) const;

  /// Apply a map to every coefficient, dropping terms that become zero.
  LaurentPoly map_coefficients(const std::function<mpz_class(Degree, const mpz_class&)>& f) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Total order (degree-major, then coefficient); used for canonical sorting only.
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const noexcept;

  /// Human-readable form such as "2t^-1 + 1 - t^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void normalize();

  std::vector<Term> terms_;
};

}  // namespace confequiv
