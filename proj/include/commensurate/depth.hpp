#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

namespace commensurate {

/// Position in the filtration chain N_0 = K >= N_1 >= N_2 >= ...
///
/// Depth 0 is K itself; larger depths are finer levels. An element known at
/// depth d is known up to right multiplication by N_d.
class Depth {
public:
  constexpr Depth() = default;
  constexpr explicit Depth(std::size_t value) : value_(value) {}

  constexpr std::size_t value() const { return value_; }

  constexpr Depth operator+(std::size_t steps) const { return Depth(value_ + steps); }

  friend constexpr auto operator<=>(Depth, Depth) = default;

  friend std::ostream &operator<<(std::ostream &os, Depth d) { return os << d.value_; }

private:
  std::size_t value_ = 0;
};

inline std::string to_string(Depth d) { return std::to_string(d.value()); }

} // namespace commensurate
