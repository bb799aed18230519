#include "commensurate/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "commensurate/cli/expression.hpp"
#include "commensurate/cli/instance_registry.hpp"
#include "commensurate/errors.hpp"
#include "commensurate/instances/finite_model.hpp"
#include "commensurate/instances/model_file.hpp"
#include "commensurate/oracle/oracle.hpp"

namespace commensurate::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t default_seed = 20240601;
constexpr std::size_t listing_limit = 20;

std::uint64_t seed_from_env() {
  const char *raw = std::getenv("COMMENSURATE_SEED");
  if (!raw || !*raw)
    return default_seed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception &) {
    throw UsageError("COMMENSURATE_SEED must be a non-negative integer, got '" + std::string(raw) +
                     "'");
  }
}

struct Request {
  std::string instance;
  std::string target;
  std::vector<std::string> positional;
  std::size_t depth = 8;
  std::size_t trials = 1000;
  bool json = false;
};

/// Fills in whichever of the named slots were not given as flags, in order,
/// from the positional arguments.
void take_positional(Request &req, std::vector<std::string *> slots, const char *usage) {
  std::size_t next = 0;
  for (std::string *slot : slots) {
    if (!slot->empty())
      continue;
    if (next >= req.positional.size())
      throw UsageError(std::string("missing argument; usage: ") + usage);
    *slot = req.positional[next++];
  }
  if (next != req.positional.size())
    throw UsageError("unexpected argument '" + req.positional[next] + "'; usage: " + usage);
}

Expression parse_for(const Instance &inst, const std::string &source) {
  return parse_expression(source, inst.syntax());
}

void print_rows(std::ostream &out, const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  for (const auto &row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

json levels_json(const ElementOutcome &e) {
  json levels = json::array();
  for (const auto &row : e.levels)
    levels.push_back({{"level", row.level}, {"modulus_or_index", row.modulus_or_index}, {"rep", row.rep}});
  return levels;
}

void print_level_table(std::ostream &out, const Instance &inst, const ElementOutcome &e) {
  std::vector<std::vector<std::string>> rows{{"level", inst.level_column(), "rep"}};
  for (const auto &row : e.levels)
    rows.push_back({std::to_string(row.level), row.modulus_or_index, row.rep});
  print_rows(out, rows);
}

void print_psi(std::ostream &out, const Request &req, const Instance &inst, const PsiOutcome &p) {
  if (req.json) {
    out << json{{"instance", inst.name()},
                {"target", p.target},
                {"kill_level", p.kill_level},
                {"requested_depth", req.depth},
                {"value", p.value}}
               .dump(2)
        << '\n';
  } else {
    out << p.value << '\n';
  }
}

int cmd_instances(const Request &req, std::ostream &out) {
  const auto catalog = instance_catalog();
  if (req.json) {
    json arr = json::array();
    for (const auto &entry : catalog)
      arr.push_back({{"name", entry.name}, {"chain", entry.chain}, {"description", entry.description}});
    out << arr.dump(2) << '\n';
    return exit_ok;
  }
  std::vector<std::vector<std::string>> rows{{"name", "chain", "description"}};
  for (const auto &entry : catalog)
    rows.push_back({entry.name, entry.chain, entry.description});
  print_rows(out, rows);
  return exit_ok;
}

int cmd_eval(Request req, std::ostream &out, bool table_only) {
  std::string expr;
  take_positional(req, {&req.instance, &expr},
                  table_only ? "table <instance> <expr>" : "eval <instance> <expr>");
  const auto inst = open_instance(req.instance);
  const Outcome outcome = inst->evaluate(parse_for(*inst, expr), Depth{req.depth});
  if (const auto *p = std::get_if<PsiOutcome>(&outcome)) {
    if (table_only)
      throw UsageError("table needs a group element, not a psi(...) value");
    print_psi(out, req, *inst, *p);
    return exit_ok;
  }
  const auto &e = std::get<ElementOutcome>(outcome);
  if (req.json) {
    json doc{{"instance", inst->name()},
             {"requested_depth", e.requested_depth},
             {"attained_depth", e.attained_depth}};
    if (table_only)
      doc["level_column"] = inst->level_column();
    else
      doc["rep"] = e.rep;
    doc["levels"] = levels_json(e);
    out << doc.dump(2) << '\n';
    return exit_ok;
  }
  if (!table_only) {
    print_rows(out, {{"instance", inst->name()},
                     {"chain", inst->chain_spec()},
                     {"requested depth", std::to_string(e.requested_depth)},
                     {"attained depth", std::to_string(e.attained_depth)},
                     {"rep", e.rep}});
    out << '\n';
  }
  print_level_table(out, *inst, e);
  return exit_ok;
}

int cmd_psi(Request req, std::ostream &out) {
  std::string expr;
  take_positional(req, {&req.instance, &req.target, &expr}, "psi <instance> <target> <expr>");
  const auto inst = open_instance(req.instance);
  Expression call;
  call.kind = Expression::Kind::psi;
  call.text = req.target;
  call.operands.push_back(parse_for(*inst, expr));
  const Outcome outcome = inst->evaluate(call, Depth{req.depth});
  print_psi(out, req, *inst, std::get<PsiOutcome>(outcome));
  return exit_ok;
}

void list_failures(std::ostream &out, const std::vector<std::string> &items) {
  const std::size_t shown = std::min(items.size(), listing_limit);
  for (std::size_t i = 0; i < shown; ++i)
    out << "  " << items[i] << '\n';
  if (items.size() > shown)
    out << "  ... and " << items.size() - shown << " more\n";
}

json failures_json(const std::vector<std::string> &items) {
  const std::size_t shown = std::min(items.size(), listing_limit);
  return json(std::vector<std::string>(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(shown)));
}

int cmd_oracle(Request req, std::ostream &out) {
  std::string path;
  if (req.instance.rfind("model:", 0) == 0)
    path = req.instance.substr(6);
  else
    path = req.instance;
  take_positional(req, {&path}, "oracle <model-file> [--trials N]");
  const std::uint64_t seed = seed_from_env();

  auto model = std::make_shared<const instances::FiniteModel>(instances::load_model(path));
  auto pair = std::make_shared<const instances::FiniteModelPair>(model);

  const auto engine = oracle::compare_engine(pair, req.trials, seed);
  const auto refinement = oracle::verify_refinement(*model);
  const auto left_right = oracle::verify_left_right(*model);

  std::vector<std::string> completion_failures;
  std::size_t completion_order = 0;
  try {
    const auto completion = oracle::enumerate_completion(*model);
    completion_order = completion.size();
    if (!oracle::is_group(completion))
      completion_failures.push_back("completion table is not a group");
    else if (!oracle::find_isomorphism(completion, oracle::quotient_table(*model)))
      completion_failures.push_back("completion table is not isomorphic to G/N_bottom");
  } catch (const ContractViolation &e) {
    completion_failures.push_back(e.what());
  }

  const bool ok = engine.ok() && refinement.ok() && left_right.ok() && completion_failures.empty();

  if (req.json) {
    std::vector<std::string> all;
    for (const auto *items : std::array<const std::vector<std::string> *, 4>{&engine.mismatches, &refinement.failures,
                                        &left_right.failures, &completion_failures})
      all.insert(all.end(), items->begin(), items->end());
    auto suite = [](std::size_t runs, const char *unit, std::size_t failed) {
      return json{{unit, runs}, {"failures", failed}};
    };
    json doc{
        {"model", model->name()},
        {"trials", engine.trials},
        {"mismatches", failures_json(all)},
        {"mismatch_count", all.size()},
        {"chain", pair->chain_spec()},
        {"seed", seed},
        {"suites",
         {
             {"compare_engine", suite(engine.trials, "trials", engine.mismatches.size())},
             {"refinement", suite(refinement.checks, "checks", refinement.failures.size())},
             {"left_right", suite(left_right.checks, "checks", left_right.failures.size())},
             {"completion", suite(completion_order, "order", completion_failures.size())},
         }},
        {"ok", ok},
    };
    out << doc.dump(2) << '\n';
    return ok ? exit_ok : exit_mismatch;
  }

  out << "model " << model->name() << " (order " << model->group().order() << ", chain "
      << pair->chain_spec() << ")\n";
  print_rows(out, {
                      {"compare_engine", std::to_string(engine.trials) + " trials",
                       std::to_string(engine.mismatches.size()) + " mismatches"},
                      {"refinement", std::to_string(refinement.checks) + " checks",
                       std::to_string(refinement.failures.size()) + " failures"},
                      {"left_right", std::to_string(left_right.checks) + " checks",
                       std::to_string(left_right.failures.size()) + " failures"},
                      {"completion", "order " + std::to_string(completion_order),
                       std::to_string(completion_failures.size()) + " failures"},
                  });
  list_failures(out, engine.mismatches);
  list_failures(out, refinement.failures);
  list_failures(out, left_right.failures);
  list_failures(out, completion_failures);
  out << (ok ? "result: ok" : "result: MISMATCH") << '\n';
  return ok ? exit_ok : exit_mismatch;
}

void report_parse_error(std::ostream &err, const ParseError &e, const std::string &source) {
  err << "error: " << e.what() << '\n';
  if (!source.empty() && e.position() <= source.size())
    err << "  " << source << "\n  " << std::string(e.position(), ' ') << "^\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Arithmetic in localised profinite completions at finite precision", "commensurate"};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&req](CLI::App *sub, bool depth, bool json_flag) {
    sub->add_option("--instance", req.instance, "instance name");
    if (depth)
      sub->add_option("--depth", req.depth, "requested depth (default 8)");
    if (json_flag)
      sub->add_flag("--json", req.json, "emit JSON");
  };

  // One single-valued option per slot: CLI11 splits bracketed values given
  // to vector options, which would break matrix literals.
  std::array<std::string, 3> slots;
  auto add_positional = [&slots](CLI::App *sub, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      sub->add_option("arg" + std::to_string(i + 1), slots[i]);
  };

  auto *instances = app.add_subcommand("instances", "list the shipped instances");
  instances->add_flag("--json", req.json, "emit JSON");

  auto *eval = app.add_subcommand("eval", "evaluate an expression");
  add_common(eval, true, true);
  add_positional(eval, 2);

  auto *table = app.add_subcommand("table", "per-level coset table of an expression");
  add_common(table, true, true);
  add_positional(table, 2);

  auto *psi = app.add_subcommand("psi", "evaluate the extension of a discrete target");
  add_common(psi, true, true);
  psi->add_option("--target", req.target, "target name");
  add_positional(psi, 3);

  auto *oracle = app.add_subcommand("oracle", "check the engine against brute force on a model");
  add_common(oracle, false, true);
  oracle->add_option("--trials", req.trials, "random engine trials (default 1000)");
  add_positional(oracle, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  for (const auto &slot : slots) {
    if (!slot.empty())
      req.positional.push_back(slot);
  }
  std::string source;
  if (!req.positional.empty())
    source = req.positional.back();
  try {
    if (instances->parsed())
      return cmd_instances(req, out);
    if (eval->parsed())
      return cmd_eval(req, out, false);
    if (table->parsed())
      return cmd_eval(req, out, true);
    if (psi->parsed())
      return cmd_psi(req, out);
    return cmd_oracle(req, out);
  } catch (const ParseError &e) {
    report_parse_error(err, e, source);
    return exit_usage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ModelError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const MalformedLiteral &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PrecisionExhausted &e) {
    err << "error: " << e.what() << '\n';
    return exit_precision;
  } catch (const ContractViolation &e) {
    err << "error: contract violation: " << e.what() << '\n';
    return exit_contract;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_mismatch;
  }
}

} // namespace commensurate::cli
