#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"

namespace tlfc {

/// Candidate set and choice for one block while drawing a diagram.
/// For the top row the candidates are A(r) and the choice is its minimum;
/// for the bottom row they are B(r) and the choice is its maximum. An empty
/// candidate set means the block's dot is already the endpoint of a
/// positive arrow.
struct RowChoice {
  int block = 0;  // r, 1-based
  std::vector<int> candidates;
  std::optional<int> chosen;
};

struct BijectionTrace {
  /// (s, t) for every positive arrow (i_s, (j_t + 1)').
  std::vector<std::pair<int, int>> positive;
  std::vector<RowChoice> top;     // r = 1..p
  std::vector<RowChoice> bottom;  // r = 1..p
};

struct TracedDiagram {
  Diagram diagram;
  BijectionTrace trace;
};

/// Whether (i_s, (j_t + 1)') is a positive arrow of D(w), decided from the
/// canonical form alone: the index equation, the minimality conditions and
/// the saturation of blocks t+1..s-1 in generators i_s+1..j_t-1.
/// Requires 1 <= t < s <= p, else Error{IndexOutOfRange}.
bool dplus_condition(const FCElement& w, int s, int t);

/// Draws D(w) directly from the canonical form, without concatenating.
TracedDiagram fc_to_diagram_traced(const FCElement& w);
Diagram fc_to_diagram(const FCElement& w);

/// D(w) as the top-to-bottom concatenation of E_k along the canonical word.
/// Throws Error{UnexpectedLoop} if a circle appears.
Diagram fc_to_diagram_reference(const FCElement& w);

/// Reads [i_1,j_1]...[i_p,j_p] off the tails of rightward top arrows and
/// the heads (minus one) of rightward bottom arrows, both in decreasing
/// order.
FCElement diagram_to_fc(const Diagram& d);

}  // namespace tlfc
