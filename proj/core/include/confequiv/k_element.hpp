#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "confequiv/laurent.hpp"

namespace confequiv {

/// Which quotient of the metabelian matrix group K an element lives in.
///
///   none        K itself
///   mod_n0      G = K / N_0,            N_0 = Z[t] in the central D-slot
///   mod_2z_n1   H = K / (2Z + N_1),     N_1 = t Z[t]
enum class QuotientMode { none, mod_n0, mod_2z_n1 };

/// Element of K, i.e. the upper unitriangular-like matrix
///
///     | 1  B  D |
///     | 0  A  C |      with A = t^a and B, C, D Laurent polynomials.
///     | 0  0  1 |
///
/// stored as (a, B, C, D).
struct KElement {
  std::int64_t a = 0;
  LaurentPoly B;
  LaurentPoly C;
  LaurentPoly D;

  friend bool operator==(const KElement& x, const KElement& y) {
    return x.a == y.a && x.B == y.B && x.C == y.C && x.D == y.D;
  }
  friend bool operator!=(const KElement& x, const KElement& y) { return !(x == y); }
  friend bool operator<(const KElement& x, const KElement& y);

  std::size_t hash() const noexcept;
  std::string to_string() const;
};

KElement k_identity();
KElement k_generator(int index);  ///< index in {1,2,3}: k1=(t,0,0,0), k2=(1,1,0,0), k3=(1,0,1,0)

/// Canonical representative of x modulo the central subgroup selected by q.
KElement reduce(KElement x, QuotientMode q);

/// Product under the law read off from matrix multiplication:
/// (A,B,C,D)(X,Y,Z,W) = (AX, BX+Y, C+AZ, D+BZ+W), followed by reduction.
KElement k_mul(const KElement& x, const KElement& y, QuotientMode q = QuotientMode::none);

/// (A,B,C,D)^-1 = (A^-1, -B A^-1, -A^-1 C, -D + B A^-1 C), followed by reduction.
KElement k_inv(const KElement& x, QuotientMode q = QuotientMode::none);

/// x^k for any integer k (negative powers via the inverse).
KElement k_pow(const KElement& x, std::int64_t k, QuotientMode q = QuotientMode::none);

/// Group commutator x^-1 y^-1 x y.
KElement k_commutator(const KElement& x, const KElement& y, QuotientMode q = QuotientMode::none);

/// The automorphism (A,B,C,D) -> (A,B,tC,tD) of K. Throws UnsupportedOnQuotient
/// unless q is QuotientMode::none.
KElement phi(const KElement& x, QuotientMode q = QuotientMode::none);
KElement phi_inverse(const KElement& x, QuotientMode q = QuotientMode::none);

/// Least k in 1..bound with x^k = e, or nullopt when no such k exists.
std::optional<std::uint64_t> order_bounded(const KElement& x, QuotientMode q, std::uint64_t bound);

/// x lies in Z(K) = {(1,0,0,D)}.
bool center_membership(const KElement& x);

}  // namespace confequiv
