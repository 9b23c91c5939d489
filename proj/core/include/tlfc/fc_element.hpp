#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tlfc {

/// The ascending run sigma_i sigma_{i+1} ... sigma_j, written [i,j].
struct Block {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Generator indices, 1-based, sorted ascending.
using GeneratorSet = std::vector<int>;

/// A fully commutative element of the type-A Coxeter group W(A_n), stored
/// as its canonical form [i_1,j_1][i_2,j_2]...[i_p,j_p] with
///
///   n >= i_1 > i_2 > ... > i_p >= 1,
///   n >= j_1 > j_2 > ... > j_p >= 1,
///   i_t <= j_t.
///
/// Instances can only be obtained through validate() or identity(), so every
/// FCElement in circulation satisfies these inequalities. Rank 0 (the
/// trivial group) is allowed and only holds the identity.
class FCElement {
 public:
  FCElement() = default;

  /// Throws Error{RankOutOfRange} for negative rank and Error{NotStandard}
  /// naming the first violated inequality otherwise.
  static FCElement validate(int rank, std::vector<Block> blocks);
  static FCElement identity(int rank);

  int rank() const noexcept { return rank_; }
  /// Number of blocks p.
  std::size_t size() const noexcept { return blocks_.size(); }
  bool is_identity() const noexcept { return blocks_.empty(); }
  std::span<const Block> blocks() const noexcept { return blocks_; }

  friend auto operator<=>(const FCElement&, const FCElement&) = default;
  friend bool operator==(const FCElement&, const FCElement&) = default;

 private:
  FCElement(int rank, std::vector<Block> blocks)
      : rank_(rank), blocks_(std::move(blocks)) {}

  int rank_ = 0;
  std::vector<Block> blocks_;
};

enum class Shape { Identity, Thick, Slim };

std::string_view to_string(Shape shape) noexcept;

/// Coxeter length: sum of the block lengths j_t - i_t + 1.
int length(const FCElement& w);

Shape classify(const FCElement& w);

/// [i_t, j_t] -> [i_t, j_t - 1] at rank n-1. Requires a thick element.
FCElement shrink(const FCElement& w);
/// Inverse of shrink: [i_t, j_t] -> [i_t, j_t + 1] at rank n+1.
FCElement grow(const FCElement& w);

/// Complement duality: the i-set of the result is the complement of the
/// j-set of w and vice versa. Swaps size p with n - p.
FCElement dual(const FCElement& w);

/// Delta = iota composed with inversion, iota(k) = n + 1 - k. On canonical
/// forms it reverses the block order and reflects every block.
FCElement delta_involution(const FCElement& w);

/// Throw Error{IdentityHasNoDescents} on the identity.
GeneratorSet left_descents(const FCElement& w);
GeneratorSet right_descents(const FCElement& w);

GeneratorSet support(const FCElement& w);

/// True iff every generator lo..hi lies in some block interval. An empty
/// interval (lo > hi) is vacuously saturated.
bool is_saturated_in(std::span<const Block> blocks, int lo, int hi);

/// The canonical reduced word, generator indices left to right.
std::vector<int> canonical_word(const FCElement& w);

/// Visits every element of W^c(A_n) once: by size p ascending, then
/// lexicographically on (i_1, j_1, i_2, j_2, ...).
void for_each_fc(int n, const std::function<void(const FCElement&)>& visit);
std::vector<FCElement> enumerate_fc(int n);
/// Same order as enumerate_fc, restricted to size p.
std::vector<FCElement> enumerate_fc(int n, int p);

/// A slim element factors uniquely as g * sigma_pivot * d, where g is the
/// (possibly empty) thick prefix before the first single-generator block,
/// supported on sigma_{pivot+1}..sigma_n, and d is an arbitrary element of
/// W^c(A_{pivot-1}).
struct SlimSplit {
  std::vector<Block> prefix;
  int pivot = 0;
  FCElement tail;
};

SlimSplit slim_split(const FCElement& w);
FCElement slim_join(int rank, std::span<const Block> prefix, int pivot,
                    const FCElement& tail);

/// Text form `n=5:[4,5][3,3][1,1]`; the identity is `n=5:[]`.
std::string to_string(const FCElement& w);
FCElement parse_fc(std::string_view text);
std::ostream& operator<<(std::ostream& os, const FCElement& w);

}  // namespace tlfc
