#include "confequiv/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace confequiv {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Degree, long>> terms) {
  for (const auto& [d, c] : terms) terms_.emplace_back(d, mpz_class(c));
  normalize();
}

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(Degree degree, const mpz_class& c) {
  if (c == 0) return {};
  return LaurentPoly(std::vector<Term>{{degree, c}});
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

mpz_class LaurentPoly::coefficient(Degree degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, Degree d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) return it->second;
  return 0;
}

LaurentPoly::Degree LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.front().first;
}

LaurentPoly::Degree LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

// Sorted merge of two term lists with sign applied to the right operand.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : mpz_class(-b[j].second));
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].second + b[j].second)
                             : mpz_class(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.terms_.size() == 1) {
    const auto& [d, c] = rhs.terms_.front();
    std::vector<LaurentPoly::Term> out;
    out.reserve(lhs.terms_.size());
    for (const auto& t : lhs.terms_) out.emplace_back(t.first + d, t.second * c);
    return LaurentPoly(std::move(out));
  }
  std::map<LaurentPoly::Degree, mpz_class> acc;
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) acc[a.first + b.first] += a.second * b.second;
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [d, c] : acc)
    if (c != 0) out.emplace_back(d, std::move(c));
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(Degree k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

LaurentPoly LaurentPoly::filtered(const std::function<bool(Degree)>& keep) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (keep(t.first)) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::map_coefficients(
    const std::function<mpz_class(Degree, const mpz_class&)>& f) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    mpz_class c = f(t.first, t.second);
    if (c != 0) out.emplace_back(t.first, std::move(c));
  }
  return LaurentPoly(std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first)
      return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
    const int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::size_t LaurentPoly::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [d, c] : terms_) {
    h ^= std::hash<Degree>{}(d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    const std::size_t limb = mpz_size(c.get_mpz_t()) ? mpz_getlimbn(c.get_mpz_t(), 0) : 0;
    h ^= limb + static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace confequiv
