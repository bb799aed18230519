#include "commensurate/instances/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "commensurate/errors.hpp"

namespace commensurate::instances {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation out(std::max(degree, this->degree()));
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Permutation Permutation::then(const Permutation &other) const {
  const std::size_t n = std::max(degree(), other.degree());
  const Permutation x = extended(n);
  const Permutation y = other.extended(n);
  Permutation out(n);
  for (std::size_t i = 0; i < n; ++i)
    out.images_[i] = y.images_[x.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    out += "(";
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first)
        out += " ";
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse(std::string_view text) {
  const auto malformed = [&](const std::string &why) {
    return MalformedLiteral("bad permutation '" + std::string(text) + "': " + why);
  };
  Permutation result;
  std::size_t i = 0;
  bool any = false;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw malformed("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size())
        throw malformed("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw malformed("expected a point");
      std::size_t point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + static_cast<std::size_t>(text[i] - '0');
        if (point > max_degree)
          throw malformed("points must lie in 1.." + std::to_string(max_degree));
        ++i;
      }
      if (point == 0)
        throw malformed("points are numbered from 1");
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end())
        throw malformed("repeated point in cycle");
      cycle.push_back(point - 1);
    }
    any = true;
    std::size_t n = 0;
    for (std::size_t p : cycle)
      n = std::max(n, p + 1);
    Permutation c(n);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c.images_[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    result = result.then(c);
    skip_space();
  }
  if (!any)
    throw malformed("empty");
  return result;
}

} // namespace commensurate::instances
