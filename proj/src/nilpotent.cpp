#include "renner/nilpotent.hpp"

#include <algorithm>
#include <unordered_set>

#include "renner/error.hpp"
#include "renner/order.hpp"

namespace renner {

NilpotentReport nilpotent_analysis(const FamilySpec& family, int workers) {
  if (!is_nil_family(family.family))
    throw InvalidArgument(std::string(family_name(family.family)) + " is not a nilpotent family");
  if (family.rank) throw InvalidArgument("nilpotent analysis runs on the whole family");

  NilpotentReport report;
  report.family = family;
  auto elements = enum_family(family, workers);
  report.count = static_cast<int>(elements.size());

  const std::unordered_set<Rook, RookHash> members(elements.begin(), elements.end());
  report.closed_under_product = std::all_of(elements.begin(), elements.end(), [&](const Rook& x) {
    return std::all_of(elements.begin(), elements.end(),
                       [&](const Rook& y) { return members.count(x * y) != 0; });
  });

  const auto poset = build_poset(std::move(elements), Comparator::one_line, nullptr, workers);
  const Rook zero = Rook::zero(family.n);
  for (int m : poset.maximals) {
    report.maximals.push_back(poset.elements[static_cast<std::size_t>(m)]);
    report.chain_to_maximal.push_back(poset.rank_of[static_cast<std::size_t>(m)]);
  }
  // Zero is the unique minimum of every nil family, so rank_of measures
  // chains from zero.
  if (poset.minimals.size() != 1 || poset.elements[static_cast<std::size_t>(poset.minimals[0])] != zero)
    throw InternalError("nilpotent family without zero as its minimum");
  report.unique_max = report.maximals.size() == 1;
  report.longest_chain =
      report.chain_to_maximal.empty()
          ? 0
          : *std::max_element(report.chain_to_maximal.begin(), report.chain_to_maximal.end());
  return report;
}

}  // namespace renner
