#include <algorithm>
#include <functional>
#include <map>

#include "commensurate/errors.hpp"
#include "commensurate/oracle/oracle.hpp"

namespace commensurate::oracle {

namespace {

/// Minimal element of each coset of the bottom, in increasing order.
std::vector<ElementIndex> bottom_coset_reps(const FiniteModel &model) {
  std::vector<ElementIndex> reps;
  std::vector<bool> covered(model.group().order(), false);
  for (ElementIndex x = 0; x < model.group().order(); ++x) {
    if (covered[x])
      continue;
    const ElementSet coset = model.left_coset(x, model.bottom_depth());
    for (ElementIndex y : coset.elements())
      covered[y] = true;
    reps.push_back(x);
  }
  return reps;
}

std::size_t index_of(const std::vector<ElementIndex> &reps, ElementIndex rep) {
  return static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
}

void require_normal_bottom(const FiniteModel &model) {
  if (!instances::is_normalised_by(model.group(), model.bottom(), instances::whole_group(model.group())))
    throw ModelError("model '" + model.name() + "': bottom of the chain is not normal in G");
}

std::vector<std::size_t> element_orders(const GroupTable &t, std::size_t identity) {
  std::vector<std::size_t> orders(t.size(), 0);
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t k = 1;
    for (std::size_t y = x; y != identity; y = t.multiply(y, x))
      ++k;
    orders[x] = k;
  }
  return orders;
}

std::optional<std::size_t> find_identity(const GroupTable &t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size() && ok; ++x)
      ok = t.multiply(e, x) == x && t.multiply(x, e) == x;
    if (ok)
      return e;
  }
  return std::nullopt;
}

} // namespace

GroupTable enumerate_completion(const FiniteModel &model) {
  require_normal_bottom(model);
  const FiniteGroup &group = model.group();
  GroupTable table;
  table.reps = bottom_coset_reps(model);
  const std::size_t k = table.size();
  table.product.assign(k * k, 0);

  for (std::size_t i = 0; i < k; ++i) {
    const ElementIndex g1 = table.reps[i];
    for (std::size_t j = 0; j < k; ++j) {
      const ElementIndex g2 = table.reps[j];
      const ElementIndex g1g2 = group.multiply(g1, g2);
      std::optional<ElementSet> coarser;
      for (std::size_t level = 0; level < model.chain_length(); ++level) {
        const ElementSet &n = model.chain()[level];
        const ElementSet m = set_intersection(n, conjugate_set(group, n, g2));
        // The filter of g1 contains exactly one left coset of M: g1 M.
        const ElementSet g1m = set_product(group, ElementSet({g1}), m);
        const ElementSet f_n = set_product(group, set_product(group, g1m, ElementSet({g2})), n);
        if (f_n != model.left_coset(g1g2, Depth{level}))
          throw ContractViolation("model '" + model.name() + "': F_N at level " +
                                  std::to_string(level) + " for " + group.label(g1) + " * " +
                                  group.label(g2) + " is not the coset g1 g2 N");
        if (coarser && !f_n.is_subset_of(*coarser))
          throw ContractViolation("model '" + model.name() + "': product filter not nested");
        coarser = f_n;
      }
      const ElementIndex rep = coarser->min();
      table.product[i * k + j] = index_of(table.reps, rep);
    }
  }
  return table;
}

GroupTable quotient_table(const FiniteModel &model) {
  require_normal_bottom(model);
  GroupTable table;
  table.reps = bottom_coset_reps(model);
  const std::size_t k = table.size();
  table.product.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ElementIndex x = model.group().multiply(table.reps[i], table.reps[j]);
      table.product[i * k + j] = index_of(table.reps, model.left_coset(x, model.bottom_depth()).min());
    }
  }
  return table;
}

bool is_group(const GroupTable &t) {
  const std::size_t n = t.size();
  if (n == 0 || t.product.size() != n * n)
    return false;
  for (std::size_t v : t.product) {
    if (v >= n)
      return false;
  }
  const auto e = find_identity(t);
  if (!e)
    return false;
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y)
      has_inverse = t.multiply(x, y) == *e && t.multiply(y, x) == *e;
    if (!has_inverse)
      return false;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (t.multiply(t.multiply(x, y), z) != t.multiply(x, t.multiply(y, z)))
          return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const GroupTable &a, const GroupTable &b) {
  if (a.size() != b.size() || !is_group(a) || !is_group(b))
    return std::nullopt;
  const std::size_t n = a.size();
  const std::size_t ea = *find_identity(a);
  const std::size_t eb = *find_identity(b);
  const auto orders_a = element_orders(a, ea);
  const auto orders_b = element_orders(b, eb);
  {
    auto sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
  }

  // Greedy generating set of a: add anything outside the span so far.
  std::vector<std::size_t> gens;
  {
    std::vector<bool> span(n, false);
    span[ea] = true;
    std::vector<std::size_t> members{ea};
    for (std::size_t x = 0; x < n; ++x) {
      if (span[x])
        continue;
      gens.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t g : gens) {
          const std::size_t y = a.multiply(members[i], g);
          if (!span[y]) {
            span[y] = true;
            members.push_back(y);
          }
        }
      }
    }
  }

  // Extend a generator assignment to the whole group; reject on conflict.
  const auto extend = [&](const std::vector<std::size_t> &images) -> std::optional<std::vector<std::size_t>> {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(n, unset);
    std::vector<bool> used(n, false);
    phi[ea] = eb;
    used[eb] = true;
    std::vector<std::size_t> queue{ea};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t y = a.multiply(x, gens[k]);
        const std::size_t image = b.multiply(phi[x], images[k]);
        if (phi[y] == unset) {
          if (used[image])
            return std::nullopt;
          phi[y] = image;
          used[image] = true;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return std::nullopt;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (phi[a.multiply(x, y)] != b.multiply(phi[x], phi[y]))
          return std::nullopt;
      }
    }
    return phi;
  };

  std::vector<std::size_t> images(gens.size());
  std::function<std::optional<std::vector<std::size_t>>(std::size_t)> search =
      [&](std::size_t k) -> std::optional<std::vector<std::size_t>> {
    if (k == gens.size())
      return extend(images);
    for (std::size_t candidate = 0; candidate < n; ++candidate) {
      if (orders_b[candidate] != orders_a[gens[k]])
        continue;
      images[k] = candidate;
      if (auto phi = search(k + 1))
        return phi;
    }
    return std::nullopt;
  };
  return search(0);
}

} // namespace commensurate::oracle
