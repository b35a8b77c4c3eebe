#pragma once

// Independent reference computations used to derive expected values in the
// tests. None of these call into the library's algorithms; they only read
// raw data (multiplication tables, polynomial terms) from it.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "confequiv/finite_group.hpp"
#include "confequiv/k_element.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Laurent polynomials as plain degree -> coefficient maps, and the 3x3 matrix
// model of K: [[1, B, D], [0, t^a, C], [0, 0, 1]].

using Poly = std::map<std::int64_t, mpz_class>;

inline Poly clean(Poly p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
  return p;
}

inline Poly add(const Poly& x, const Poly& y) {
  Poly out = x;
  for (const auto& [d, c] : y) out[d] += c;
  return clean(out);
}

inline Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [dx, cx] : x)
    for (const auto& [dy, cy] : y) out[dx + dy] += cx * cy;
  return clean(out);
}

inline Poly from(const confequiv::LaurentPoly& p) {
  Poly out;
  for (const auto& [d, c] : p.terms()) out[d] = c;
  return out;
}

inline Poly monomial(std::int64_t d, long c = 1) { return clean(Poly{{d, mpz_class(c)}}); }

using Mat3 = std::array<std::array<Poly, 3>, 3>;

inline Mat3 to_matrix(const confequiv::KElement& x) {
  Mat3 m;
  m[0][0] = monomial(0);
  m[0][1] = from(x.B);
  m[0][2] = from(x.D);
  m[1][1] = monomial(x.a);
  m[1][2] = from(x.C);
  m[2][2] = monomial(0);
  return m;
}

inline Mat3 matmul(const Mat3& x, const Mat3& y) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = add(out[i][j], mul(x[i][k], y[k][j]));
  return out;
}

/// True when the matrix has the K shape and its entries equal x's fields.
inline bool matches(const Mat3& m, const confequiv::KElement& x) {
  const Poly zero;
  return m[0][0] == monomial(0) && m[2][2] == monomial(0) && m[1][0] == zero && m[2][0] == zero &&
         m[2][1] == zero && m[1][1] == monomial(x.a) && m[0][1] == from(x.B) && m[1][2] == from(x.C) &&
         m[0][2] == from(x.D);
}

inline confequiv::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 3, int span = 4, int coeff = 5) {
  std::uniform_int_distribution<int> count(0, max_terms), degree(-span, span), c(-coeff, coeff);
  confequiv::LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += confequiv::LaurentPoly::monomial(degree(rng), c(rng));
  return p;
}

inline confequiv::KElement random_k(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exponent(-4, 4);
  confequiv::KElement x;
  x.a = exponent(rng);
  x.B = random_poly(rng);
  x.C = random_poly(rng);
  x.D = random_poly(rng);
  return x;
}

/// Inverse of a K-shaped matrix [[1, B, D], [0, t^a, C], [0, 0, 1]].
inline Mat3 inverse(const Mat3& m) {
  const auto a = m[1][1].begin()->first;
  const Poly ainv = monomial(-a);
  const Poly neg = monomial(0, -1);
  Mat3 out;
  out[0][0] = monomial(0);
  out[0][1] = mul(neg, mul(m[0][1], ainv));
  out[0][2] = add(mul(neg, m[0][2]), mul(m[0][1], mul(ainv, m[1][2])));
  out[1][1] = ainv;
  out[1][2] = mul(neg, mul(ainv, m[1][2]));
  out[2][2] = monomial(0);
  return out;
}

/// (A, B, C, D) -> (A, B, tC, tD), applied to the matrix entries.
inline Mat3 phi(const Mat3& m) {
  Mat3 out = m;
  out[1][2] = mul(monomial(1), m[1][2]);
  out[0][2] = mul(monomial(1), m[0][2]);
  return out;
}

// ---------------------------------------------------------------------------
// Finite groups by brute force over the multiplication table.

using confequiv::FiniteGroup;
using confequiv::FiniteIndex;

inline std::size_t element_order(const FiniteGroup& g, FiniteIndex x) {
  const auto& t = g.table();
  const std::size_t n = g.size();
  FiniteIndex e = 0;
  while (t[e * n + e] != e) ++e;
  FiniteIndex p = x;
  std::size_t k = 1;
  while (p != e) {
    p = t[p * n + x];
    ++k;
  }
  return k;
}

/// Number of conjugacy classes via |{(x, y) : xy = yx}| / |G|.
inline std::size_t class_number(const FiniteGroup& g) {
  const auto& t = g.table();
  const std::size_t n = g.size();
  std::size_t commuting = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t[x * n + y] == t[y * n + x]) ++commuting;
  return commuting / n;
}

/// Sizes of conjugacy classes (sorted) by orbit computation on raw tables.
inline std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  const auto& t = g.table();
  const std::size_t n = g.size();
  std::vector<std::size_t> sizes;
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t y = 0; y < n; ++y)
        if (t[h * n + x] == t[y * n + h]) orbit.insert(y);  // h x = y h  <=>  y = h x h^-1
    for (auto y : orbit) seen[y] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Subgroup generated by a set, by naive fixpoint iteration.
inline std::set<FiniteIndex> generated(const FiniteGroup& g, const std::vector<FiniteIndex>& gens) {
  const auto& t = g.table();
  const std::size_t n = g.size();
  FiniteIndex e = 0;
  while (t[e * n + e] != e) ++e;
  std::set<FiniteIndex> s{e};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : std::vector<FiniteIndex>(s.begin(), s.end()))
      for (auto y : std::vector<FiniteIndex>(s.begin(), s.end()))
        grew |= s.insert(t[x * n + y]).second;
  }
  return s;
}

/// Configuration set computed straight from the definition.
inline std::set<std::vector<std::uint32_t>> configurations(const FiniteGroup& g, const std::vector<FiniteIndex>& gens,
                                                           const std::vector<std::uint32_t>& colors0,
                                                           bool two_sided) {
  const auto& t = g.table();
  const std::size_t n = g.size();
  std::set<std::vector<std::uint32_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint32_t> c{colors0[x] + 1};
    for (auto gi : gens) c.push_back(colors0[t[gi * n + x]] + 1);
    if (two_sided)
      for (auto gi : gens) c.push_back(colors0[t[x * n + gi]] + 1);
    out.insert(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting.

inline std::uint64_t stirling2(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline std::uint64_t partitions_up_to(unsigned n, unsigned max_k) {
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= max_k; ++k) total += stirling2(n, k);
  return total;
}

/// Reduced words of length <= R in a free group of rank r.
inline std::uint64_t free_ball_size(std::uint64_t r, unsigned R) {
  std::uint64_t total = 1, layer = 2 * r;
  for (unsigned i = 1; i <= R; ++i) {
    total += layer;
    layer *= 2 * r - 1;
  }
  return total;
}

/// Every set partition of {0..n-1} with at most max_k blocks, as restricted
/// growth strings.
inline std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n, std::uint32_t max_k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> c(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
    if (i == n) {
      out.push_back(c);
      return;
    }
    for (std::uint32_t k = 0; k <= used && k < max_k; ++k) {
      c[i] = k;
      self(self, i + 1, std::max(used, k + 1));
    }
  };
  if (n == 0) return {{}};
  c[0] = 0;
  rec(rec, 1, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Free group of rank 2 on strings: a, b lower case, inverses upper case.

inline char inverse_letter(char c) {
  return std::islower(static_cast<unsigned char>(c)) ? char(std::toupper(c)) : char(std::tolower(c));
}

inline std::string left_multiply(char g, const std::string& w) {
  if (!w.empty() && w.front() == inverse_letter(g)) return w.substr(1);
  return g + w;
}

/// Color under the first-letter partition: e -> 1, a -> 2, A -> 3, b -> 4, B -> 5.
inline std::uint32_t first_letter_color(const std::string& w) {
  if (w.empty()) return 1;
  return static_cast<std::uint32_t>(std::string("aAbB").find(w.front())) + 2;
}

/// One-sided configurations (a, b) of the first-letter partition, read off
/// every reduced word up to max_len.
inline std::set<std::vector<std::uint32_t>> free_first_letter_configs(std::size_t max_len) {
  std::vector<std::string> words{""}, layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : std::string("aAbB"))
        if (w.empty() || w.back() != inverse_letter(c)) next.push_back(w + c);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& w : words)
    out.insert({first_letter_color(w), first_letter_color(left_multiply('a', w)),
                first_letter_color(left_multiply('b', w))});
  return out;
}

// ---------------------------------------------------------------------------
// Random data.

/// Uniform-ish random coloring with exactly `blocks` nonempty colors.
inline std::vector<std::uint32_t> random_coloring(std::mt19937_64& rng, std::size_t size, std::uint32_t blocks) {
  std::vector<std::uint32_t> colors(size);
  std::uniform_int_distribution<std::uint32_t> pick(0, blocks - 1);
  do {
    for (auto& c : colors) c = pick(rng);
  } while (std::set<std::uint32_t>(colors.begin(), colors.end()).size() != blocks);
  return colors;
}

}  // namespace oracle
