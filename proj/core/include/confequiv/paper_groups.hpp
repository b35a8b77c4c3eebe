#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confequiv/group.hpp"
#include "confequiv/k_element.hpp"
#include "confequiv/partition.hpp"

namespace confequiv {

/// K, G = K/N_0 or H = K/(2Z + N_1) as a ball-enumerable group view.
/// Standard generators are the images of k1, k2, k3.
class PaperGroupView final : public GroupView {
 public:
  explicit PaperGroupView(QuotientMode mode);

  GroupKind kind() const noexcept override;
  std::optional<std::size_t> order() const noexcept override { return std::nullopt; }
  Element identity() const override;
  Element multiply(const Element& x, const Element& y) const override;
  Element inverse(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view name) const override;
  std::vector<Element> default_generators() const override;
  std::vector<std::string> generator_names() const override;
  std::string describe() const override;

  QuotientMode mode() const noexcept { return mode_; }
  KElement canonical(const KElement& x) const;

 private:
  const KElement& as_k(const Element& x) const;
  QuotientMode mode_;
};

/// Three blocks by the sign of the A-exponent: a = 0, a > 0, a < 0.
PartitionOracle a_sign_partition();

/// Natural projection onto the quotient selected by `target`.
Element reduction_map(const Element& x, QuotientMode target);

/// Non-identity elements of the ball of the given radius (in the standard
/// generators) having finite order <= bound.
std::vector<KElement> bounded_torsion_search(QuotientMode mode, std::size_t radius, std::uint64_t bound);

}  // namespace confequiv
