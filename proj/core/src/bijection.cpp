#include "tlfc/bijection.hpp"

#include <algorithm>
#include <set>

#include "tlfc/error.hpp"

namespace tlfc {

namespace {

// 1-based views on the canonical form.
struct Pairs {
  std::span<const Block> blocks;

  int p() const { return static_cast<int>(blocks.size()); }
  int i(int t) const { return blocks[static_cast<std::size_t>(t - 1)].i; }
  int j(int t) const { return blocks[static_cast<std::size_t>(t - 1)].j; }
  // Blocks first..last inclusive, 1-based; empty when first > last.
  std::span<const Block> range(int first, int last) const {
    if (first > last) return {};
    return blocks.subspan(static_cast<std::size_t>(first - 1),
                          static_cast<std::size_t>(last - first + 1));
  }
};

}  // namespace

bool dplus_condition(const FCElement& w, int s, int t) {
  const Pairs w_(w.blocks());
  if (t < 1 || t >= s || s > w_.p()) {
    fail(ErrorCode::IndexOutOfRange, "need 1 <= t < s <= " + std::to_string(w_.p()) +
                                         ", got s=" + std::to_string(s) +
                                         " t=" + std::to_string(t));
  }
  if (w_.j(t) != w_.i(s) + 2 * (s - t) - 1) return false;
  for (int r = t + 1; r < s; ++r) {
    if (w_.j(r) == w_.i(s) + 2 * (s - r) - 1) return false;
    if (w_.j(t) == w_.i(r) + 2 * (r - t) - 1) return false;
  }
  return is_saturated_in(w_.range(t + 1, s - 1), w_.i(s) + 1, w_.j(t) - 1);
}

TracedDiagram fc_to_diagram_traced(const FCElement& w) {
  const int strings = w.rank() + 1;
  if (w.is_identity()) return {Diagram::identity(strings), {}};

  const Pairs w_(w.blocks());
  const int p = w_.p();
  DiagramBuilder builder(strings);
  BijectionTrace trace;

  // Verticals left of i_p and right of j_1 + 1.
  for (int u = 1; u <= strings; ++u) {
    if (u < w_.i(p) || u > w_.j(1) + 1) builder.join({Row::Top, u}, {Row::Bottom, u});
  }

  // Positive arrows, for increasing s: the highest admissible t wins.
  std::set<int> positive_tails, positive_heads;
  for (int s = 2; s <= p; ++s) {
    if (w_.i(s) + 1 != w_.i(s - 1)) continue;
    for (int t = s - 1; t >= 1; --t) {
      const Dot head{Row::Bottom, w_.j(t) + 1};
      if (w_.j(t) != w_.i(s - 1) + 2 * (s - 1 - t) || !builder.is_free(head)) continue;
      if (!is_saturated_in(w_.range(t + 1, s - 1), w_.i(s - 1), w_.j(t) - 1)) continue;
      builder.join({Row::Top, w_.i(s)}, head);
      trace.positive.emplace_back(s, t);
      positive_tails.insert(w_.i(s));
      positive_heads.insert(w_.j(t) + 1);
      break;
    }
  }

  // Top row: (i_r, f_r) with f_r = min A(r).
  std::set<int> used_top;  // i_1..i_{r-1} and the f's chosen so far
  for (int r = 1; r <= p; ++r) {
    RowChoice choice{r, {}, std::nullopt};
    if (!positive_tails.contains(w_.i(r))) {
      for (int x = w_.i(r) + 1; x <= w_.j(1) + 1; ++x) {
        if (!used_top.contains(x)) choice.candidates.push_back(x);
      }
      if (choice.candidates.empty()) {
        fail(ErrorCode::Internal, "A(" + std::to_string(r) + ") is empty for " + to_string(w));
      }
      choice.chosen = choice.candidates.front();
      builder.join({Row::Top, w_.i(r)}, {Row::Top, *choice.chosen});
      used_top.insert(*choice.chosen);
    }
    used_top.insert(w_.i(r));
    trace.top.push_back(std::move(choice));
  }

  // Bottom row: (g_r', (j_r + 1)') with g_r = max B(r), for decreasing r.
  std::vector<RowChoice> bottom(static_cast<std::size_t>(p));
  std::set<int> used_bottom;  // j_s + 1 for s > r and the g's chosen so far
  for (int r = p; r >= 1; --r) {
    RowChoice choice{r, {}, std::nullopt};
    if (!positive_heads.contains(w_.j(r) + 1)) {
      for (int y = w_.i(p); y <= w_.j(r); ++y) {
        if (!used_bottom.contains(y)) choice.candidates.push_back(y);
      }
      if (choice.candidates.empty()) {
        fail(ErrorCode::Internal, "B(" + std::to_string(r) + ") is empty for " + to_string(w));
      }
      choice.chosen = choice.candidates.back();
      builder.join({Row::Bottom, *choice.chosen}, {Row::Bottom, w_.j(r) + 1});
      used_bottom.insert(*choice.chosen);
    }
    used_bottom.insert(w_.j(r) + 1);
    bottom[static_cast<std::size_t>(r - 1)] = std::move(choice);
  }
  trace.bottom = std::move(bottom);

  builder.join_remaining_left_to_right();
  return {std::move(builder).finish(), std::move(trace)};
}

Diagram fc_to_diagram(const FCElement& w) { return fc_to_diagram_traced(w).diagram; }

Diagram fc_to_diagram_reference(const FCElement& w) {
  const int strings = w.rank() + 1;
  Diagram acc = Diagram::identity(strings);
  for (int k : canonical_word(w)) {
    Product step = concatenate(acc, Diagram::generator(strings, k));
    if (step.loops != 0) {
      fail(ErrorCode::UnexpectedLoop, "circle while multiplying by E_" + std::to_string(k) +
                                          " in " + to_string(w));
    }
    acc = std::move(step.diagram);
  }
  return acc;
}

FCElement diagram_to_fc(const Diagram& d) {
  const Components c = components(d);
  std::vector<Block> blocks(c.tails.size());
  // tails and heads come sorted ascending; the canonical form lists both
  // in decreasing order.
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] = {c.tails[c.tails.size() - 1 - k], c.heads[c.heads.size() - 1 - k]};
  }
  return FCElement::validate(d.rank(), std::move(blocks));
}

}  // namespace tlfc
