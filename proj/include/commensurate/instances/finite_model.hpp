#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commensurate/bigint.hpp"
#include "commensurate/depth.hpp"
#include "commensurate/instances/permutation.hpp"

namespace commensurate::instances {

using ElementIndex = std::uint32_t;

/// A finite group given by its full multiplication table.
class FiniteGroup {
public:
  static constexpr std::size_t max_order = 200;

  /// Closure of the generators; elements are numbered in breadth-first order
  /// from the identity. Throws ModelError beyond max_order elements.
  static FiniteGroup from_permutations(const std::vector<Permutation> &generators);
  /// Validates the group axioms. Throws ModelError.
  static FiniteGroup from_table(std::vector<std::vector<ElementIndex>> rows);

  std::size_t order() const { return inverse_.size(); }
  ElementIndex identity() const { return identity_; }
  ElementIndex multiply(ElementIndex x, ElementIndex y) const { return table_[x * order() + y]; }
  ElementIndex inverse(ElementIndex x) const { return inverse_[x]; }
  ElementIndex conjugate(ElementIndex x, ElementIndex by) const {
    return multiply(multiply(by, x), inverse(by));
  }

  bool is_permutation_group() const { return !permutations_.empty(); }
  std::size_t degree() const { return degree_; }
  const Permutation &permutation(ElementIndex x) const { return permutations_.at(x); }

  /// Cycle notation for permutation groups, "#k" otherwise.
  std::string label(ElementIndex x) const;
  std::optional<ElementIndex> find(const Permutation &p) const;
  /// Accepts "#k" always and cycle notation for permutation groups. Throws
  /// MalformedLiteral on bad syntax and ContractViolation when the
  /// permutation is not in the group.
  ElementIndex parse_element(std::string_view text) const;

private:
  FiniteGroup() = default;

  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  ElementIndex identity_ = 0;
  std::vector<Permutation> permutations_;
  std::map<Permutation, ElementIndex> lookup_;
  std::size_t degree_ = 0;
};

/// Sorted set of element indices; used for subgroups and cosets.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<ElementIndex> elements);

  /// Smallest subgroup containing the generators.
  static ElementSet generated(const FiniteGroup &group, std::span<const ElementIndex> generators);

  const std::vector<ElementIndex> &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(ElementIndex x) const;
  bool is_subset_of(const ElementSet &other) const;
  ElementIndex min() const { return elements_.front(); }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;
  friend auto operator<=>(const ElementSet &, const ElementSet &) = default;

private:
  std::vector<ElementIndex> elements_;
};

bool is_subgroup(const FiniteGroup &group, const ElementSet &set);
/// x H x^-1 = H for every x in `over`.
bool is_normalised_by(const FiniteGroup &group, const ElementSet &subgroup, const ElementSet &over);
ElementSet whole_group(const FiniteGroup &group);

struct NamedGenerator {
  std::string name;
  ElementIndex element;
};

/// How a finite-model pair answers conj_depth. `understated` always returns
/// d; it breaks the pair contract and exists to check that the oracle
/// notices.
enum class ConjDepthMode { exact, understated };

/// A finite group with K = chain[0] and a descending chain of subgroups.
/// Depths beyond the chain's last member denote that last member.
class FiniteModel {
public:
  FiniteModel(std::string name, FiniteGroup group, std::vector<ElementSet> chain,
              std::vector<NamedGenerator> generators = {},
              ConjDepthMode conj_mode = ConjDepthMode::exact);

  /// Builds each chain level as the subgroup generated by a generator set.
  static FiniteModel from_generator_sets(std::string name, FiniteGroup group,
                                         const std::vector<std::vector<ElementIndex>> &levels,
                                         std::vector<NamedGenerator> generators = {},
                                         ConjDepthMode conj_mode = ConjDepthMode::exact);

  const std::string &name() const { return name_; }
  const FiniteGroup &group() const { return group_; }
  const std::vector<ElementSet> &chain() const { return chain_; }
  std::size_t chain_length() const { return chain_.size(); }
  Depth bottom_depth() const { return Depth{chain_.size() - 1}; }
  const ElementSet &level(Depth d) const;
  const ElementSet &subgroup_k() const { return chain_.front(); }
  const ElementSet &bottom() const { return chain_.back(); }
  const std::vector<NamedGenerator> &generators() const { return generators_; }
  ConjDepthMode conj_mode() const { return conj_mode_; }

  /// Left coset x N_d.
  ElementSet left_coset(ElementIndex x, Depth d) const;
  /// Right coset N_d x.
  ElementSet right_coset(ElementIndex x, Depth d) const;

  /// Checks what a pair needs: strictly descending, every level normal in K,
  /// bottom normal in G. Throws ModelError naming the first failure.
  void validate_pair_chain() const;

private:
  std::string name_;
  FiniteGroup group_;
  std::vector<ElementSet> chain_;
  std::vector<NamedGenerator> generators_;
  ConjDepthMode conj_mode_;
};

struct FiniteElement {
  ElementIndex index = 0;

  friend auto operator<=>(const FiniteElement &, const FiniteElement &) = default;
};

/// Commensurated pair over a finite model. conj_depth is found by brute
/// force: the least j >= d with N_j inside x N_d x^-1 and x^-1 N_d x for all
/// x in g N_d, raised to the running maximum over coarser depths so that it
/// is monotone in d.
class FiniteModelPair {
public:
  using element_type = FiniteElement;

  /// Throws ModelError if the chain does not meet validate_pair_chain().
  explicit FiniteModelPair(std::shared_ptr<const FiniteModel> model);
  FiniteModelPair(std::shared_ptr<const FiniteModel> model, ConjDepthMode mode);

  const FiniteModel &model() const { return *model_; }
  const std::shared_ptr<const FiniteModel> &model_ptr() const { return model_; }
  std::string chain_spec() const;

  FiniteElement identity() const { return {model_->group().identity()}; }
  FiniteElement multiply(FiniteElement x, FiniteElement y) const {
    return {model_->group().multiply(x.index, y.index)};
  }
  FiniteElement inverse(FiniteElement x) const { return {model_->group().inverse(x.index)}; }
  bool equal(FiniteElement x, FiniteElement y) const { return x == y; }
  bool in_level(FiniteElement x, Depth d) const { return model_->level(d).contains(x.index); }
  Depth conj_depth(FiniteElement g, Depth d) const;

  /// The unmodified least j for the coset g N_d.
  Depth least_conj_depth(FiniteElement g, Depth d) const;

  BigInt index_of_level(Depth d) const;
  /// Smallest index in x N_d.
  FiniteElement canonical_rep(FiniteElement x, Depth d) const;
  /// Canonical representatives of the cosets of N_d in K.
  std::vector<FiniteElement> level_transversal(Depth d) const;

  std::string render(FiniteElement x) const { return model_->group().label(x.index); }
  FiniteElement parse(std::string_view text) const {
    return {model_->group().parse_element(text)};
  }

private:
  std::shared_ptr<const FiniteModel> model_;
  ConjDepthMode mode_;
  std::vector<std::size_t> conj_table_; // [g * chain_length + d]
};

} // namespace commensurate::instances
