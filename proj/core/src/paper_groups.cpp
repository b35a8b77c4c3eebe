#include "confequiv/paper_groups.hpp"

#include <algorithm>

#include "confequiv/errors.hpp"

namespace confequiv {

// ---------------------------------------------------------------------------
// KElement arithmetic

bool operator<(const KElement& x, const KElement& y) {
  if (x.a != y.a) return x.a < y.a;
  if (int c = LaurentPoly::compare(x.B, y.B); c != 0) return c < 0;
  if (int c = LaurentPoly::compare(x.C, y.C); c != 0) return c < 0;
  return LaurentPoly::compare(x.D, y.D) < 0;
}

std::size_t KElement::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(a);
  for (const LaurentPoly* p : {&B, &C, &D}) h ^= p->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string KElement::to_string() const {
  std::string A = a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a));
  return "(" + A + ", " + B.to_string() + ", " + C.to_string() + ", " + D.to_string() + ")";
}

KElement k_identity() { return {}; }

KElement k_generator(int index) {
  switch (index) {
    case 1: return {1, {}, {}, {}};
    case 2: return {0, LaurentPoly::constant(1), {}, {}};
    case 3: return {0, {}, LaurentPoly::constant(1), {}};
    default: throw Error(ErrorKind::InvalidInput, "K has generators k1, k2, k3 only");
  }
}

KElement reduce(KElement x, QuotientMode q) {
  switch (q) {
    case QuotientMode::none:
      break;
    case QuotientMode::mod_n0:
      x.D = x.D.filtered([](LaurentPoly::Degree d) { return d < 0; });
      break;
    case QuotientMode::mod_2z_n1:
      x.D = x.D.filtered([](LaurentPoly::Degree d) { return d <= 0; })
                .map_coefficients([](LaurentPoly::Degree d, const mpz_class& c) -> mpz_class {
                  if (d != 0) return c;
                  mpz_class r;
                  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), 2);
                  return r;
                });
      break;
  }
  return x;
}

KElement k_mul(const KElement& x, const KElement& y, QuotientMode q) {
  KElement out;
  out.a = x.a + y.a;
  out.B = x.B.shifted(y.a) + y.B;
  out.C = x.C + y.C.shifted(x.a);
  out.D = x.D + x.B * y.C + y.D;
  return reduce(std::move(out), q);
}

KElement k_inv(const KElement& x, QuotientMode q) {
  KElement out;
  out.a = -x.a;
  out.B = -x.B.shifted(-x.a);
  out.C = -x.C.shifted(-x.a);
  out.D = -x.D + x.B.shifted(-x.a) * x.C;
  return reduce(std::move(out), q);
}

KElement k_pow(const KElement& x, std::int64_t k, QuotientMode q) {
  const KElement base = k < 0 ? k_inv(x, q) : reduce(x, q);
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  KElement result = k_identity();
  KElement sq = base;
  while (e != 0) {
    if (e & 1U) result = k_mul(result, sq, q);
    e >>= 1U;
    if (e != 0) sq = k_mul(sq, sq, q);
  }
  return result;
}

KElement k_commutator(const KElement& x, const KElement& y, QuotientMode q) {
  return k_mul(k_mul(k_inv(x, q), k_inv(y, q), q), k_mul(x, y, q), q);
}

KElement phi(const KElement& x, QuotientMode q) {
  if (q != QuotientMode::none)
    throw Error(ErrorKind::UnsupportedOnQuotient, "phi is an automorphism of K, not of its quotients");
  return {x.a, x.B, x.C.shifted(1), x.D.shifted(1)};
}

KElement phi_inverse(const KElement& x, QuotientMode q) {
  if (q != QuotientMode::none)
    throw Error(ErrorKind::UnsupportedOnQuotient, "phi is an automorphism of K, not of its quotients");
  return {x.a, x.B, x.C.shifted(-1), x.D.shifted(-1)};
}

std::optional<std::uint64_t> order_bounded(const KElement& x, QuotientMode q, std::uint64_t bound) {
  const KElement base = reduce(x, q);
  const KElement e = k_identity();
  KElement power = base;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (power == e) return k;
    power = k_mul(power, base, q);
  }
  return std::nullopt;
}

bool center_membership(const KElement& x) { return x.a == 0 && x.B.is_zero() && x.C.is_zero(); }

// ---------------------------------------------------------------------------
// Group view

PaperGroupView::PaperGroupView(QuotientMode mode) : mode_(mode) {}

GroupKind PaperGroupView::kind() const noexcept {
  switch (mode_) {
    case QuotientMode::none: return GroupKind::paper_k;
    case QuotientMode::mod_n0: return GroupKind::paper_g;
    case QuotientMode::mod_2z_n1: return GroupKind::paper_h;
  }
  return GroupKind::paper_k;
}

std::string PaperGroupView::describe() const {
  switch (mode_) {
    case QuotientMode::none: return "K";
    case QuotientMode::mod_n0: return "G = K/N0";
    case QuotientMode::mod_2z_n1: return "H = K/(2Z+N1)";
  }
  return "K";
}

Element PaperGroupView::identity() const { return k_identity(); }

Element PaperGroupView::multiply(const Element& x, const Element& y) const {
  return k_mul(as_k(x), as_k(y), mode_);
}

Element PaperGroupView::inverse(const Element& x) const { return k_inv(as_k(x), mode_); }

std::string PaperGroupView::format(const Element& x) const { return as_k(x).to_string(); }

Element PaperGroupView::parse(std::string_view name) const {
  for (int i = 1; i <= 3; ++i)
    if (name == "k" + std::to_string(i)) return reduce(k_generator(i), mode_);
  if (name == "e" || name == "1") return k_identity();
  throw Error(ErrorKind::InvalidInput,
              "unknown element name '" + std::string(name) +
                  "' (use k1, k2, k3, e, or a JSON element literal)");
}

std::vector<Element> PaperGroupView::default_generators() const {
  return {reduce(k_generator(1), mode_), reduce(k_generator(2), mode_), reduce(k_generator(3), mode_)};
}

std::vector<std::string> PaperGroupView::generator_names() const { return {"k1", "k2", "k3"}; }

const KElement& PaperGroupView::as_k(const Element& x) const {
  if (const auto* k = std::get_if<KElement>(&x)) return *k;
  throw Error(ErrorKind::InvalidInput, "element does not belong to " + describe());
}

KElement PaperGroupView::canonical(const KElement& x) const { return reduce(x, mode_); }

PartitionOracle a_sign_partition() {
  return {"a-sign", 3, [](const Element& x) -> std::uint32_t {
            const auto& k = std::get<KElement>(x);
            return k.a == 0 ? 0U : (k.a > 0 ? 1U : 2U);
          }};
}

Element reduction_map(const Element& x, QuotientMode target) { return reduce(std::get<KElement>(x), target); }

std::vector<KElement> bounded_torsion_search(QuotientMode mode, std::size_t radius, std::uint64_t bound) {
  const PaperGroupView view(mode);
  const auto gens = view.default_generators();
  std::vector<KElement> torsion;
  for (const auto& entry : ball(view, gens, radius)) {
    const auto& k = std::get<KElement>(entry.element);
    if (k == k_identity()) continue;
    // x^j has A-exponent j*a and, when a = 0, B- and C-parts jB and jC, so
    // only central elements can have finite order.
    if (!center_membership(k)) continue;
    if (order_bounded(k, mode, bound)) torsion.push_back(k);
  }
  return torsion;
}

}  // namespace confequiv
