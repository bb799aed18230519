#include <map>

#include "commensurate/oracle/oracle.hpp"

namespace commensurate::oracle {

Refinement refine_by_conjugates(const FiniteModel &model, const ElementSet &n, ElementIndex g) {
  const FiniteGroup &group = model.group();
  const ElementSet left = set_product(group, ElementSet({g}), n);

  Refinement result;
  std::map<ElementSet, ElementIndex> distinct;
  for (ElementIndex h = 0; h < group.order(); ++h) {
    ElementSet piece = set_intersection(left, set_product(group, n, ElementSet({h})));
    if (distinct.emplace(piece, h).second) {
      result.representatives.push_back(h);
      result.pieces.push_back(std::move(piece));
    }
  }

  ElementSet m = n;
  for (ElementIndex h : result.representatives)
    m = set_intersection(m, conjugate_set(group, n, group.inverse(h)));
  result.m = m;

  result.postcondition = true;
  for (ElementIndex h = 0; h < group.order() && result.postcondition; ++h) {
    const ElementSet piece = set_intersection(left, set_product(group, n, ElementSet({h})));
    result.postcondition = is_union_of_left_cosets(group, piece, result.m);
  }
  return result;
}

ExhaustiveReport verify_refinement(const FiniteModel &model) {
  ExhaustiveReport report;
  const FiniteGroup &group = model.group();
  for (std::size_t level = 0; level < model.chain_length(); ++level) {
    const ElementSet &n = model.chain()[level];
    for (ElementIndex g = 0; g < group.order(); ++g) {
      const Refinement r = refine_by_conjugates(model, n, g);
      report.checks += group.order();
      if (!r.m.is_subset_of(n) || !is_subgroup(group, r.m))
        report.failures.push_back(model.name() + ": level " + std::to_string(level) + ", g = " +
                                  group.label(g) + ": M is not a subgroup of N");
      if (!r.postcondition)
        report.failures.push_back(model.name() + ": level " + std::to_string(level) + ", g = " +
                                  group.label(g) +
                                  ": some g N ∩ N h is not a union of left cosets of M");
    }
  }
  return report;
}

} // namespace commensurate::oracle
