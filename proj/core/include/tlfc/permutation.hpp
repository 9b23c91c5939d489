#pragma once

#include <span>
#include <string>
#include <vector>

#include "tlfc/fc_element.hpp"

namespace tlfc {

/// A permutation of {1..m} in one-line notation. This is the brute-force
/// oracle for fc_core: a word sigma_{a_1}...sigma_{a_L} acts as the product
/// of adjacent transpositions (k, k+1), composed left to right.
class Permutation {
 public:
  explicit Permutation(int points);
  static Permutation from_images(std::vector<int> images);
  static Permutation from_word(int points, std::span<const int> word);

  int points() const noexcept { return static_cast<int>(images_.size()); }
  std::span<const int> images() const noexcept { return images_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  /// this * sigma_k: swaps positions k and k+1.
  Permutation right_multiply(int k) const;
  /// sigma_k * this: swaps values k and k+1.
  Permutation left_multiply(int k) const;

  Permutation inverse() const;
  /// Conjugation by the longest element, x -> m + 1 - x on both sides.
  Permutation reflect() const;

  long inversions() const;
  bool avoids_321() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation to_permutation(const FCElement& w);

/// Descent sets by literal inversion counting: s is a left descent iff
/// inv(sigma_s w) < inv(w), a right descent iff inv(w sigma_s) < inv(w).
GeneratorSet oracle_left_descents(const Permutation& perm);
GeneratorSet oracle_right_descents(const Permutation& perm);

/// All permutations of {1..points} in lexicographic order.
std::vector<Permutation> all_permutations(int points);

std::string to_string(const Permutation& perm);

}  // namespace tlfc
