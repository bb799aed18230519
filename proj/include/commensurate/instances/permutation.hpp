#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace commensurate::instances {

/// Permutation of the points 1..degree, stored as 0-based images.
///
/// Products read left to right: (x * y)(i) = y(x(i)), so "(1 2)*(2 3)" first
/// applies (1 2).
class Permutation {
public:
  static constexpr std::size_t max_degree = 16;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint8_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator[](std::size_t point) const { return images_[point]; }

  /// Same permutation acting on more points.
  Permutation extended(std::size_t degree) const;

  Permutation then(const Permutation &other) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycles with 1-based points, smallest point first, "()" for the
  /// identity.
  std::string to_cycles() const;
  /// Parses products of cycles such as "(1 2)(3 4)" or "()". Cycles need not
  /// be disjoint; they compose left to right. Throws MalformedLiteral.
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint8_t> images_;
};

} // namespace commensurate::instances
