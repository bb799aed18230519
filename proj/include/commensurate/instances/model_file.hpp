#pragma once

#include <filesystem>
#include <string_view>

#include "commensurate/instances/finite_model.hpp"

namespace commensurate::instances {

/// Reads the finite-model text format:
///
///   # comment
///   name: s4
///   gens: (1 2), (1 2 3 4)        permutation generators of G, named g1, g2, ...
///   table:                        or an explicit table, one row per line,
///   0 1 2 ...                     closed by "end"
///   end
///   level: (1 2), (1 2 3)         generators of N_0 = K
///   level: (1 2 3)                generators of N_1, ...
///   level:                        the trivial subgroup
///   fixture: understate-conj-depth
///
/// In table mode a "gens:" line only names elements ("#k"). Throws ModelError.
FiniteModel parse_model(std::string_view text);
FiniteModel load_model(const std::filesystem::path &path);

} // namespace commensurate::instances
