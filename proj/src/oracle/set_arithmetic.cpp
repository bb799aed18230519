#include <algorithm>
#include <iterator>

#include "commensurate/oracle/oracle.hpp"

namespace commensurate::oracle {

ElementSet set_product(const FiniteGroup &group, const ElementSet &a, const ElementSet &b) {
  std::vector<ElementIndex> out;
  out.reserve(a.size() * b.size());
  for (ElementIndex x : a.elements()) {
    for (ElementIndex y : b.elements())
      out.push_back(group.multiply(x, y));
  }
  return ElementSet(std::move(out));
}

ElementSet set_inverse(const FiniteGroup &group, const ElementSet &a) {
  std::vector<ElementIndex> out;
  for (ElementIndex x : a.elements())
    out.push_back(group.inverse(x));
  return ElementSet(std::move(out));
}

ElementSet set_intersection(const ElementSet &a, const ElementSet &b) {
  std::vector<ElementIndex> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet conjugate_set(const FiniteGroup &group, const ElementSet &s, ElementIndex x) {
  std::vector<ElementIndex> out;
  for (ElementIndex y : s.elements())
    out.push_back(group.conjugate(y, x));
  return ElementSet(std::move(out));
}

bool is_union_of_left_cosets(const FiniteGroup &group, const ElementSet &s,
                             const ElementSet &subgroup) {
  return set_product(group, s, subgroup) == s;
}

} // namespace commensurate::oracle
