#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "commensurate/instances/finite_model.hpp"

// Brute-force ground truth on finite models. Everything here works on
// explicit element sets and never calls the completion engine, except
// compare_engine, whose job is to check the engine against the rest.
namespace commensurate::oracle {

using instances::ElementIndex;
using instances::ElementSet;
using instances::FiniteGroup;
using instances::FiniteModel;
using instances::FiniteModelPair;

// -- literal set arithmetic -------------------------------------------------

/// { a b : a in A, b in B }
ElementSet set_product(const FiniteGroup &group, const ElementSet &a, const ElementSet &b);
/// { a^-1 : a in A }
ElementSet set_inverse(const FiniteGroup &group, const ElementSet &a);
ElementSet set_intersection(const ElementSet &a, const ElementSet &b);
/// x S x^-1
ElementSet conjugate_set(const FiniteGroup &group, const ElementSet &s, ElementIndex x);
/// S M = S, i.e. S is a union of left cosets of M.
bool is_union_of_left_cosets(const FiniteGroup &group, const ElementSet &s,
                             const ElementSet &subgroup);

// -- refining N by finitely many of its conjugates -------------------------

struct Refinement {
  ElementSet m;
  /// h_1 .. h_n picking out the distinct sets g N  ∩  N h.
  std::vector<ElementIndex> representatives;
  std::vector<ElementSet> pieces;
  /// Every g N ∩ N h (h in G) is a union of left cosets of m.
  bool postcondition = false;
};

/// M = N ∩ h_1^-1 N h_1 ∩ ... ∩ h_n^-1 N h_n, with the h_i enumerating the
/// distinct intersections g N ∩ N h, then checked against every h in G.
Refinement refine_by_conjugates(const FiniteModel &model, const ElementSet &n, ElementIndex g);

struct ExhaustiveReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// refine_by_conjugates for every chain member N and every g in G.
ExhaustiveReport verify_refinement(const FiniteModel &model);

// -- completion as a group table -------------------------------------------

/// A finite group on `reps.size()` elements; entry i stands for the coset
/// reps[i] N_bottom.
struct GroupTable {
  std::vector<ElementIndex> reps;
  std::vector<std::size_t> product; // [i * size + j]

  std::size_t size() const { return reps.size(); }
  std::size_t multiply(std::size_t i, std::size_t j) const { return product[i * size() + j]; }
};

/// Multiplication of Cauchy filters computed literally: for every level N,
/// F_N = (g1 M)(g2 N) with M = N ∩ g2 N g2^-1, checked to be the single
/// coset g1 g2 N. Requires the bottom of the chain to be normal in G
/// (ModelError otherwise); throws ContractViolation if some F_N is not a
/// single left coset.
GroupTable enumerate_completion(const FiniteModel &model);

/// G / N_bottom read straight off the group table.
GroupTable quotient_table(const FiniteModel &model);

bool is_group(const GroupTable &table);

/// A bijection phi with phi(i j) = phi(i) phi(j), found by mapping a
/// generating set of `a` and extending; nullopt if none exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const GroupTable &a, const GroupTable &b);

// -- left versus right Cauchy ----------------------------------------------

/// cosets[i] is a left coset of N_i and cosets[i + 1] ⊆ cosets[i].
struct CoherentChain {
  std::vector<ElementSet> cosets;
};

/// Every coherent chain of left cosets running to the bottom of the chain.
std::vector<CoherentChain> coherent_chains(const FiniteModel &model);

/// For every level N: splits the level-N coset g N by the M of refine_by_conjugates,
/// locates the M-coset holding the chain's bottom intersection, and checks
/// that exactly one right coset N h contains it. Also checks the right
/// cosets so found are nested.
bool left_right_check(const FiniteModel &model, const CoherentChain &chain);

ExhaustiveReport verify_left_right(const FiniteModel &model);

// -- engine comparison ------------------------------------------------------

struct EngineReport {
  std::string model;
  std::size_t trials = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Random elements of the pair's completion; mul, inv, eq_at_depth,
/// valuation and right_rep checked against set arithmetic and against
/// enumerate_completion. Mismatches are collected, never thrown.
EngineReport compare_engine(const std::shared_ptr<const FiniteModelPair> &pair, std::size_t trials,
                            std::uint64_t seed);

/// {"model": ..., "trials": ..., "mismatches": [...]}
std::string to_json(const EngineReport &report, int indent = 2);

} // namespace commensurate::oracle
