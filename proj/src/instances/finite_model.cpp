#include "commensurate/instances/finite_model.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "commensurate/errors.hpp"

namespace commensurate::instances {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation> &generators) {
  std::size_t degree = 1;
  for (const auto &g : generators)
    degree = std::max(degree, g.degree());

  FiniteGroup group;
  group.degree_ = degree;
  std::vector<Permutation> gens;
  for (const auto &g : generators)
    gens.push_back(g.extended(degree));

  std::deque<ElementIndex> queue;
  const auto add = [&](const Permutation &p) {
    auto [it, inserted] = group.lookup_.emplace(p, static_cast<ElementIndex>(group.permutations_.size()));
    if (inserted) {
      if (group.permutations_.size() == max_order)
        throw ModelError("permutation group has more than " + std::to_string(max_order) +
                         " elements");
      group.permutations_.push_back(p);
      queue.push_back(it->second);
    }
    return it->second;
  };
  add(Permutation(degree));
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (const auto &g : gens)
      add(group.permutations_[x].then(g));
  }

  const std::size_t n = group.permutations_.size();
  group.table_.resize(n * n);
  group.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      group.table_[x * n + y] = group.lookup_.at(group.permutations_[x].then(group.permutations_[y]));
    group.inverse_[x] = group.lookup_.at(group.permutations_[x].inverse());
  }
  group.identity_ = 0;
  return group;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<ElementIndex>> rows) {
  const std::size_t n = rows.size();
  if (n == 0)
    throw ModelError("empty multiplication table");
  if (n > max_order)
    throw ModelError("multiplication table larger than " + std::to_string(max_order));
  FiniteGroup group;
  group.table_.reserve(n * n);
  for (const auto &row : rows) {
    if (row.size() != n)
      throw ModelError("multiplication table is not square");
    for (ElementIndex v : row) {
      if (v >= n)
        throw ModelError("table entry " + std::to_string(v) + " out of range");
      group.table_.push_back(v);
    }
  }
  group.inverse_.assign(n, 0);

  std::optional<ElementIndex> e;
  for (ElementIndex x = 0; x < n && !e; ++x) {
    bool neutral = true;
    for (ElementIndex y = 0; y < n && neutral; ++y)
      neutral = group.multiply(x, y) == y && group.multiply(y, x) == y;
    if (neutral)
      e = x;
  }
  if (!e)
    throw ModelError("multiplication table has no identity");
  group.identity_ = *e;
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      for (ElementIndex z = 0; z < n; ++z) {
        if (group.multiply(group.multiply(x, y), z) != group.multiply(x, group.multiply(y, z)))
          throw ModelError("multiplication table is not associative");
      }
    }
  }
  for (ElementIndex x = 0; x < n; ++x) {
    bool found = false;
    for (ElementIndex y = 0; y < n && !found; ++y) {
      if (group.multiply(x, y) == *e && group.multiply(y, x) == *e) {
        group.inverse_[x] = y;
        found = true;
      }
    }
    if (!found)
      throw ModelError("element #" + std::to_string(x) + " has no inverse");
  }
  return group;
}

std::string FiniteGroup::label(ElementIndex x) const {
  if (is_permutation_group())
    return permutations_.at(x).to_cycles();
  return "#" + std::to_string(x);
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation &p) const {
  if (!is_permutation_group())
    return std::nullopt;
  for (std::size_t i = degree_; i < p.degree(); ++i) {
    if (p[i] != i)
      return std::nullopt;
  }
  std::vector<std::uint8_t> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    images[i] = i < p.degree() ? p[i] : static_cast<std::uint8_t>(i);
  auto it = lookup_.find(Permutation(std::move(images)));
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

ElementIndex FiniteGroup::parse_element(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '#') {
    const std::string_view digits = text.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) != 0;
        }))
      throw MalformedLiteral("bad table index '" + std::string(text) + "'");
    if (digits.size() > 6 || std::stoul(std::string(digits)) >= order())
      throw ContractViolation("table index '" + std::string(text) + "' out of range (order " +
                              std::to_string(order()) + ")");
    return static_cast<ElementIndex>(std::stoul(std::string(digits)));
  }
  if (!is_permutation_group())
    throw MalformedLiteral("expected a table index '#k', got '" + std::string(text) + "'");
  const Permutation p = Permutation::parse(text);
  auto found = find(p);
  if (!found)
    throw ContractViolation("permutation " + p.to_cycles() + " is not in the group");
  return *found;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<ElementIndex> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ElementSet ElementSet::generated(const FiniteGroup &group, std::span<const ElementIndex> generators) {
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementIndex> members{group.identity()};
  seen[group.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementIndex g : generators) {
      const ElementIndex next = group.multiply(members[i], g);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  return ElementSet(std::move(members));
}

bool ElementSet::contains(ElementIndex x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet &other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool is_subgroup(const FiniteGroup &group, const ElementSet &set) {
  if (!set.contains(group.identity()))
    return false;
  for (ElementIndex x : set.elements()) {
    if (!set.contains(group.inverse(x)))
      return false;
    for (ElementIndex y : set.elements()) {
      if (!set.contains(group.multiply(x, y)))
        return false;
    }
  }
  return true;
}

bool is_normalised_by(const FiniteGroup &group, const ElementSet &subgroup, const ElementSet &over) {
  for (ElementIndex x : over.elements()) {
    for (ElementIndex h : subgroup.elements()) {
      if (!subgroup.contains(group.conjugate(h, x)))
        return false;
    }
  }
  return true;
}

ElementSet whole_group(const FiniteGroup &group) {
  std::vector<ElementIndex> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<ElementIndex>(i);
  return ElementSet(std::move(all));
}

// ---------------------------------------------------------------------------
// FiniteModel

FiniteModel::FiniteModel(std::string name, FiniteGroup group, std::vector<ElementSet> chain,
                         std::vector<NamedGenerator> generators, ConjDepthMode conj_mode)
    : name_(std::move(name)), group_(std::move(group)), chain_(std::move(chain)),
      generators_(std::move(generators)), conj_mode_(conj_mode) {
  if (chain_.empty())
    throw ModelError("model '" + name_ + "': chain must contain at least K");
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (!chain_[i].elements().empty() && chain_[i].elements().back() >= group_.order())
      throw ModelError("model '" + name_ + "': level " + std::to_string(i) +
                       " names elements outside the group");
    if (!is_subgroup(group_, chain_[i]))
      throw ModelError("model '" + name_ + "': level " + std::to_string(i) + " is not a subgroup");
    if (i > 0 && !chain_[i].is_subset_of(chain_[0]))
      throw ModelError("model '" + name_ + "': level " + std::to_string(i) +
                       " is not contained in K");
  }
  for (const auto &g : generators_) {
    if (g.element >= group_.order())
      throw ModelError("model '" + name_ + "': generator " + g.name + " out of range");
  }
}

FiniteModel FiniteModel::from_generator_sets(std::string name, FiniteGroup group,
                                             const std::vector<std::vector<ElementIndex>> &levels,
                                             std::vector<NamedGenerator> generators,
                                             ConjDepthMode conj_mode) {
  std::vector<ElementSet> chain;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (ElementIndex g : levels[i]) {
      if (g >= group.order())
        throw ModelError("model '" + name + "': level " + std::to_string(i) +
                         " generator out of range");
    }
    chain.push_back(ElementSet::generated(group, levels[i]));
  }
  return FiniteModel(std::move(name), std::move(group), std::move(chain), std::move(generators),
                     conj_mode);
}

const ElementSet &FiniteModel::level(Depth d) const {
  return chain_[std::min(d.value(), chain_.size() - 1)];
}

ElementSet FiniteModel::left_coset(ElementIndex x, Depth d) const {
  std::vector<ElementIndex> out;
  for (ElementIndex n : level(d).elements())
    out.push_back(group_.multiply(x, n));
  return ElementSet(std::move(out));
}

ElementSet FiniteModel::right_coset(ElementIndex x, Depth d) const {
  std::vector<ElementIndex> out;
  for (ElementIndex n : level(d).elements())
    out.push_back(group_.multiply(n, x));
  return ElementSet(std::move(out));
}

void FiniteModel::validate_pair_chain() const {
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (!(chain_[i].is_subset_of(chain_[i - 1]) && chain_[i].size() < chain_[i - 1].size()))
      throw ModelError("model '" + name_ + "': chain is not strictly descending at level " +
                       std::to_string(i));
  }
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (!is_normalised_by(group_, chain_[i], chain_[0]))
      throw ModelError("model '" + name_ + "': level " + std::to_string(i) +
                       " is not normal in K");
  }
  if (!is_normalised_by(group_, chain_.back(), whole_group(group_)))
    throw ModelError("model '" + name_ + "': bottom of the chain is not normal in G");
}

// ---------------------------------------------------------------------------
// FiniteModelPair

FiniteModelPair::FiniteModelPair(std::shared_ptr<const FiniteModel> model)
    : FiniteModelPair(model, model ? model->conj_mode() : ConjDepthMode::exact) {}

FiniteModelPair::FiniteModelPair(std::shared_ptr<const FiniteModel> model, ConjDepthMode mode)
    : model_(std::move(model)), mode_(mode) {
  if (!model_)
    throw ModelError("null finite model");
  model_->validate_pair_chain();
  const std::size_t n = model_->group().order();
  const std::size_t len = model_->chain_length();
  conj_table_.assign(n * len, 0);
  for (ElementIndex g = 0; g < n; ++g) {
    std::size_t running = 0;
    for (std::size_t d = 0; d < len; ++d) {
      running = std::max(running, least_conj_depth({g}, Depth{d}).value());
      conj_table_[g * len + d] = running;
    }
  }
}

std::string FiniteModelPair::chain_spec() const {
  std::string out;
  for (const auto &level : model_->chain()) {
    if (!out.empty())
      out += " > ";
    out += std::to_string(level.size());
  }
  return "orders " + out;
}

Depth FiniteModelPair::least_conj_depth(FiniteElement g, Depth d) const {
  const FiniteGroup &group = model_->group();
  const std::size_t last = model_->chain_length() - 1;
  if (d.value() >= last)
    return d; // the bottom is normal in G
  const ElementSet &target = model_->level(d);
  const ElementSet coset = model_->left_coset(g.index, d);
  for (std::size_t j = d.value(); j < last; ++j) {
    bool ok = true;
    for (ElementIndex n : model_->level(Depth{j}).elements()) {
      for (ElementIndex x : coset.elements()) {
        if (!target.contains(group.conjugate(n, x)) ||
            !target.contains(group.conjugate(n, group.inverse(x)))) {
          ok = false;
          break;
        }
      }
      if (!ok)
        break;
    }
    if (ok)
      return Depth{j};
  }
  return Depth{last};
}

Depth FiniteModelPair::conj_depth(FiniteElement g, Depth d) const {
  const std::size_t len = model_->chain_length();
  if (mode_ == ConjDepthMode::understated || d.value() >= len)
    return d;
  return Depth{conj_table_[g.index * len + d.value()]};
}

BigInt FiniteModelPair::index_of_level(Depth d) const {
  return BigInt(static_cast<unsigned long>(model_->subgroup_k().size() / model_->level(d).size()));
}

FiniteElement FiniteModelPair::canonical_rep(FiniteElement x, Depth d) const {
  return {model_->left_coset(x.index, d).min()};
}

std::vector<FiniteElement> FiniteModelPair::level_transversal(Depth d) const {
  std::vector<FiniteElement> out;
  std::vector<bool> covered(model_->group().order(), false);
  for (ElementIndex k : model_->subgroup_k().elements()) {
    if (covered[k])
      continue;
    const ElementSet coset = model_->left_coset(k, d);
    for (ElementIndex x : coset.elements())
      covered[x] = true;
    out.push_back({coset.min()});
  }
  return out;
}

} // namespace commensurate::instances
