#include "confequiv/free_group.hpp"

#include <algorithm>
#include <cctype>

#include "confequiv/errors.hpp"

namespace confequiv {

namespace {

constexpr std::string_view kLetters = "abcdfghijklmnopqrstuvwxyz";

}  // namespace

FreeGroup::FreeGroup(std::size_t rank) : rank_(rank) {
  if (rank == 0 || rank > kLetters.size())
    throw Error(ErrorKind::InvalidGroupSpec, "free group rank must be in 1.." + std::to_string(kLetters.size()));
}

const FreeWord& as_word(const Element& x) {
  if (const auto* w = std::get_if<FreeWord>(&x)) return *w;
  throw Error(ErrorKind::InvalidInput, "element is not a free-group word");
}

FreeWord reduce_concat(const FreeWord& x, const FreeWord& y) {
  std::size_t cancel = 0;
  while (cancel < x.letters.size() && cancel < y.letters.size() &&
         x.letters[x.letters.size() - 1 - cancel] == -y.letters[cancel])
    ++cancel;
  FreeWord out;
  out.letters.reserve(x.letters.size() + y.letters.size() - 2 * cancel);
  out.letters.insert(out.letters.end(), x.letters.begin(), x.letters.end() - static_cast<std::ptrdiff_t>(cancel));
  out.letters.insert(out.letters.end(), y.letters.begin() + static_cast<std::ptrdiff_t>(cancel), y.letters.end());
  return out;
}

FreeWord word_inverse(const FreeWord& x) {
  FreeWord out;
  out.letters.reserve(x.letters.size());
  for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

bool is_reduced(const FreeWord& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i] == 0) return false;
    if (i > 0 && w.letters[i] == -w.letters[i - 1]) return false;
  }
  return true;
}

bool has_prefix(const FreeWord& w, const FreeWord& prefix) {
  return prefix.letters.size() <= w.letters.size() &&
         std::equal(prefix.letters.begin(), prefix.letters.end(), w.letters.begin());
}

Element FreeGroup::multiply(const Element& x, const Element& y) const {
  return reduce_concat(as_word(x), as_word(y));
}

Element FreeGroup::inverse(const Element& x) const { return word_inverse(as_word(x)); }

char FreeGroup::letter_name(std::int32_t letter) const {
  const auto k = static_cast<std::size_t>(letter > 0 ? letter : -letter);
  if (k == 0 || k > rank_) throw Error(ErrorKind::InvalidInput, "letter outside the free group's alphabet");
  const char c = kLetters[k - 1];
  return letter > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

std::string FreeGroup::to_text(const FreeWord& w) const {
  if (w.letters.empty()) return "e";
  std::string out;
  for (auto l : w.letters) out.push_back(letter_name(l));
  return out;
}

std::string FreeGroup::format(const Element& x) const { return to_text(as_word(x)); }

FreeWord FreeGroup::word(std::string_view text) const {
  FreeWord out;
  if (text == "e" || text.empty()) return out;
  for (char ch : text) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto pos = kLetters.find(lower);
    if (pos == std::string_view::npos || pos >= rank_)
      throw Error(ErrorKind::InvalidInput, "'" + std::string(1, ch) + "' is not a letter of " + describe());
    const auto letter = static_cast<std::int32_t>(pos + 1);
    out = reduce_concat(out, FreeWord{{ch == lower ? letter : -letter}});
  }
  return out;
}

Element FreeGroup::parse(std::string_view name) const { return word(name); }

std::vector<Element> FreeGroup::default_generators() const {
  std::vector<Element> gens;
  for (std::size_t k = 1; k <= rank_; ++k) gens.emplace_back(FreeWord{{static_cast<std::int32_t>(k)}});
  return gens;
}

PartitionOracle first_letter_partition(std::size_t rank) {
  return {"first-letter", static_cast<std::uint32_t>(2 * rank + 1), [](const Element& x) -> std::uint32_t {
            const auto& w = as_word(x);
            if (w.letters.empty()) return 0;
            const std::int32_t l = w.letters.front();
            return l > 0 ? static_cast<std::uint32_t>(2 * l - 1) : static_cast<std::uint32_t>(-2 * l);
          }};
}

}  // namespace confequiv
