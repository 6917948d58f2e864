#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace galcomp {

/// A bijection of {0, ..., n-1} stored in one-line notation: images()[i] is the
/// image of point i.
///
/// Products follow the convention of function composition: p * q applies q
/// first and then p, so (p * q)(i) == p(q(i)). Every group-theoretic formula in
/// the library (double cosets H g K, conjugates g H g^-1) uses this order.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;

  /// Throws InvalidInput unless images is a bijection on [0, images.size()).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1)(2 3 4)" or "(0,1)"; points not
  /// mentioned are fixed. "()" and "" denote the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;
  /// One-line notation, e.g. "[1,0,2]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on the image sequence. Permutations of different
  /// degree compare by degree first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// p * q, i.e. apply q, then p. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace galcomp
