#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chargraph {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1}, stored as its image array.
// Products act left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;

  // Throws MalformedPermutation unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // 0-based cycles, e.g. {{0, 1}, {2, 3, 4}}; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  // Extends (or keeps) the action to `degree` points, fixing the new ones.
  Permutation widened(std::size_t degree) const;

  // 1-based cycle notation; the identity prints as "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses comma-separated 1-based cycle notation, e.g. "(1 2)(3 4),(1 2 3)".
// Cycle entries may be separated by blanks or commas inside the parentheses.
// All generators are widened to the largest point mentioned.
std::vector<Permutation> parse_generators(std::string_view text);

// Parses {"degree": n, "generators": [[[1,2],[3,4]], [[1,2,3]]]}, 1-based.
std::vector<Permutation> parse_generators_json(std::string_view json_text);

}  // namespace chargraph
