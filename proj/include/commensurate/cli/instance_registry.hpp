#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "commensurate/cli/expression.hpp"
#include "commensurate/depth.hpp"

namespace commensurate::cli {

/// Bad command line or an expression that is well-formed but not
/// evaluable (unknown target, embed of a truncated element, ...). Exit 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LevelRow {
  std::size_t level = 0;
  std::string modulus_or_index;
  std::string rep;
};

struct ElementOutcome {
  std::size_t requested_depth = 0;
  std::size_t attained_depth = 0;
  std::string rep;
  std::vector<LevelRow> levels;
};

struct PsiOutcome {
  std::string target;
  std::size_t kill_level = 0;
  std::string value;
};

using Outcome = std::variant<ElementOutcome, PsiOutcome>;

/// A named instance the command line can evaluate expressions in.
///
/// Evaluation treats generators, literals and their products and powers as
/// exact group elements (principal filters). inv(.) and embed(.) move into
/// the completion at the requested depth; from there products go through
/// the engine's precision rule. The final value is read at the requested
/// depth, or at whatever depth the engine attained.
class Instance {
public:
  virtual ~Instance() = default;

  virtual std::string name() const = 0;
  virtual std::string chain_spec() const = 0;
  virtual std::string description() const = 0;
  /// Meaning of the per-level number: "modulus", "congruence" or "index".
  virtual std::string level_column() const = 0;
  virtual const Syntax &syntax() const = 0;
  virtual std::vector<std::string> target_names() const = 0;

  /// Throws UsageError, PrecisionExhausted or ContractViolation.
  virtual Outcome evaluate(const Expression &expr, Depth depth) const = 0;
};

/// "z<base>", "zfact", "bs12", "sl2p<prime>" or "model:<path>". Throws
/// UsageError for unknown names and ModelError for bad model files.
std::unique_ptr<Instance> open_instance(std::string_view name);

struct CatalogEntry {
  std::string name;
  std::string chain;
  std::string description;
};

/// Representative instances for the `instances` command.
std::vector<CatalogEntry> instance_catalog();

} // namespace commensurate::cli
