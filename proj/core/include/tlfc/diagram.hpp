#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlfc/fc_element.hpp"

namespace tlfc {

enum class Row { Top, Bottom };

/// A dot of a two-row diagram; index is 1-based. The defaulted ordering is
/// the total order 1 < 2 < ... < k < 1' < 2' < ... < k'.
struct Dot {
  Row row = Row::Top;
  int index = 1;

  friend auto operator<=>(const Dot&, const Dot&) = default;
};

/// An arrow always points from the smaller dot (tail) to the larger (head).
struct Arrow {
  Dot tail;
  Dot head;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A non-crossing perfect matching on two rows of `strings` dots.
///
/// Storage is a flat involution over dot positions: top dot x sits at
/// position x-1, bottom dot x' at position strings + x - 1. Positions are
/// therefore numbered in the total dot order.
class Diagram {
 public:
  static Diagram identity(int strings);
  /// E_i: arrows (i, i+1), (i', (i+1)') and verticals elsewhere.
  static Diagram generator(int strings, int i);

  /// Builds a diagram from arrows given in either orientation. Throws
  /// IndexOutOfRange, NotMatching, Crossing (with the witness pair) or
  /// ParityViolation.
  static Diagram validate(int strings, std::span<const Arrow> arrows);
  /// Same checks for a 0-based partner array over dot positions.
  static Diagram from_partners(int strings, std::vector<int> partner);

  int strings() const noexcept { return strings_; }
  int rank() const noexcept { return strings_ - 1; }
  Dot partner(Dot d) const;
  std::span<const int> partners() const noexcept { return partner_; }

  /// Arrows sorted by tail in the total dot order.
  std::vector<Arrow> arrows() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  friend class DiagramBuilder;
  Diagram(int strings, std::vector<int> partner)
      : strings_(strings), partner_(std::move(partner)) {}

  int strings_ = 0;
  std::vector<int> partner_;
};

int position_of(int strings, Dot d);
Dot dot_at(int strings, int position);

/// Incremental construction used by the bijection and the rendering code.
/// finish() validates the result.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(int strings);

  int strings() const noexcept { return strings_; }
  bool is_free(Dot d) const;
  void join(Dot a, Dot b);
  Diagram finish() &&;
  /// Joins remaining free dots pairwise: the lowest free top dot with the
  /// lowest free bottom dot, left to right.
  void join_remaining_left_to_right();

 private:
  int strings_;
  std::vector<int> partner_;
};

struct Product {
  Diagram diagram;
  int loops = 0;
};

/// Places `bottom` below `top`, traces the composite strands and deletes
/// the closed circles, reporting how many there were.
Product concatenate(const Diagram& top, const Diagram& bottom);

/// The four-way split of a diagram's arrows together with the index sets
/// that characterise it:
///   top_row      arrows inside the top row (AD)
///   bottom_row   arrows inside the bottom row (BD)
///   positive     (x, y') with y > x
///   negative     (x, y') with y <= x, verticals included
///   tails        top tails of top_row and positive arrows (I)
///   heads        y - 1 for every head y' of bottom_row or positive (J)
struct Components {
  std::vector<Arrow> top_row;
  std::vector<Arrow> bottom_row;
  std::vector<Arrow> positive;
  std::vector<Arrow> negative;
  GeneratorSet tails;
  GeneratorSet heads;
  int size = 0;
};

Components components(const Diagram& d);

/// Swaps the two rows.
Diagram flip_vertical(const Diagram& d);
/// Reflects each row, x -> strings + 1 - x.
Diagram flip_horizontal(const Diagram& d);

/// Every non-crossing diagram on `strings` strings, each once.
std::vector<Diagram> enumerate_diagrams(int strings);

/// Rebuilds a diagram from its row arrows alone by joining the remaining
/// free dots left to right.
Diagram complete_from_rows(int strings, std::span<const Arrow> top_row,
                           std::span<const Arrow> bottom_row);

/// `strings=2;1-2,1'-2'`: arrows sorted by tail, bottom dots primed.
std::string to_string(const Diagram& d);
std::string to_string(const Dot& d);
std::string to_string(const Arrow& a);
Diagram parse_diagram(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Diagram& d);

/// Deterministic SVG drawing: two rows of dots, arrows as cubic curves.
std::string render_svg(const Diagram& d, std::string_view caption = {});

}  // namespace tlfc
