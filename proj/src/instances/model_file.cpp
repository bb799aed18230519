#include "commensurate/instances/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "commensurate/errors.hpp"

namespace commensurate::instances {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty())
    return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

struct RawModel {
  std::string name = "model";
  std::optional<std::vector<std::string>> gens;
  std::optional<std::vector<std::vector<ElementIndex>>> table;
  std::vector<std::vector<std::string>> levels;
  ConjDepthMode mode = ConjDepthMode::exact;
};

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

RawModel read_raw(std::string_view text) {
  RawModel raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool in_table = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (in_table) {
      if (body == "end") {
        in_table = false;
        continue;
      }
      if (body.empty())
        continue;
      std::istringstream row_in(body);
      std::vector<ElementIndex> row;
      std::string cell;
      while (row_in >> cell) {
        if (!std::all_of(cell.begin(), cell.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) ||
            cell.size() > 6)
          throw ModelError(where(line_no) + "bad table entry '" + cell + "'");
        row.push_back(static_cast<ElementIndex>(std::stoul(cell)));
      }
      raw.table->push_back(std::move(row));
      continue;
    }
    if (body.empty() || body.front() == '#')
      continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw ModelError(where(line_no) + "expected 'key: value'");
    const std::string key = trim(std::string_view(body).substr(0, colon));
    const std::string value = trim(std::string_view(body).substr(colon + 1));
    if (key == "name") {
      raw.name = value;
    } else if (key == "gens") {
      if (raw.gens)
        throw ModelError(where(line_no) + "duplicate 'gens'");
      raw.gens = split_list(value);
    } else if (key == "table") {
      if (raw.table)
        throw ModelError(where(line_no) + "duplicate 'table'");
      if (!value.empty())
        throw ModelError(where(line_no) + "table rows start on the next line");
      raw.table.emplace();
      in_table = true;
    } else if (key == "level") {
      raw.levels.push_back(split_list(value));
    } else if (key == "fixture") {
      if (value != "understate-conj-depth")
        throw ModelError(where(line_no) + "unknown fixture '" + value + "'");
      raw.mode = ConjDepthMode::understated;
    } else {
      throw ModelError(where(line_no) + "unknown key '" + key + "'");
    }
  }
  if (in_table)
    throw ModelError("table not closed by 'end'");
  return raw;
}

ElementIndex resolve(const FiniteGroup &group, const std::string &text) {
  try {
    return group.parse_element(text);
  } catch (const MalformedLiteral &e) {
    throw ModelError(e.what());
  } catch (const ContractViolation &e) {
    throw ModelError(e.what());
  }
}

} // namespace

FiniteModel parse_model(std::string_view text) {
  RawModel raw = read_raw(text);
  if (raw.levels.empty())
    throw ModelError("model '" + raw.name + "' has no 'level' lines");

  std::optional<FiniteGroup> group;
  if (raw.table) {
    group = FiniteGroup::from_table(std::move(*raw.table));
  } else {
    if (!raw.gens)
      throw ModelError("model '" + raw.name + "' needs 'gens' or 'table'");
    std::vector<Permutation> perms;
    for (const auto &g : *raw.gens) {
      try {
        perms.push_back(Permutation::parse(g));
      } catch (const MalformedLiteral &e) {
        throw ModelError(e.what());
      }
    }
    group = FiniteGroup::from_permutations(perms);
  }

  std::vector<NamedGenerator> named;
  if (raw.gens) {
    for (std::size_t i = 0; i < raw.gens->size(); ++i)
      named.push_back({"g" + std::to_string(i + 1), resolve(*group, (*raw.gens)[i])});
  }

  std::vector<std::vector<ElementIndex>> levels;
  for (const auto &level : raw.levels) {
    std::vector<ElementIndex> gens;
    for (const auto &g : level)
      gens.push_back(resolve(*group, g));
    levels.push_back(std::move(gens));
  }
  return FiniteModel::from_generator_sets(raw.name, std::move(*group), levels, std::move(named),
                                          raw.mode);
}

FiniteModel load_model(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ModelError("cannot open model file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

} // namespace commensurate::instances
