#include "tlfc/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <utility>

#include "tlfc/error.hpp"

namespace tlfc {

namespace {

constexpr int kFree = -1;

// Position along the rectangle boundary: top row left to right, then the
// bottom row right to left. Non-crossing is a statement about this cyclic
// order, not about the total dot order.
int boundary_of(int strings, int position) {
  return position < strings ? position : 3 * strings - 1 - position;
}

int position_of_boundary(int strings, int boundary) {
  return boundary < strings ? boundary : 3 * strings - 1 - boundary;
}

void check_matching(int strings, const std::vector<int>& partner) {
  const int total = 2 * strings;
  for (int pos = 0; pos < total; ++pos) {
    const int other = partner[static_cast<std::size_t>(pos)];
    if (other == kFree) {
      fail(ErrorCode::NotMatching, "dot " + to_string(dot_at(strings, pos)) + " is unmatched");
    }
    if (other < 0 || other >= total || other == pos ||
        partner[static_cast<std::size_t>(other)] != pos) {
      fail(ErrorCode::NotMatching, "dot " + to_string(dot_at(strings, pos)) +
                                       " is not matched to exactly one other dot");
    }
  }
}

void check_planar(int strings, const std::vector<int>& partner) {
  const int total = 2 * strings;
  std::vector<int> open;  // boundary positions of arcs still open
  for (int b = 0; b < total; ++b) {
    const int pos = position_of_boundary(strings, b);
    const int other_b = boundary_of(strings, partner[static_cast<std::size_t>(pos)]);
    if (other_b > b) {
      open.push_back(b);
      continue;
    }
    if (open.back() != other_b) {
      const int a1 = position_of_boundary(strings, open.back());
      const int a2 = pos;
      const Arrow first{std::min(dot_at(strings, a1), dot_at(strings, partner[static_cast<std::size_t>(a1)])),
                        std::max(dot_at(strings, a1), dot_at(strings, partner[static_cast<std::size_t>(a1)]))};
      const Arrow second{std::min(dot_at(strings, a2), dot_at(strings, partner[static_cast<std::size_t>(a2)])),
                         std::max(dot_at(strings, a2), dot_at(strings, partner[static_cast<std::size_t>(a2)]))};
      fail(ErrorCode::Crossing, to_string(first) + " crosses " + to_string(second));
    }
    open.pop_back();
  }
}

void check_parity(int strings, const std::vector<int>& partner) {
  for (int pos = 0; pos < 2 * strings; ++pos) {
    const Dot a = dot_at(strings, pos);
    const Dot b = dot_at(strings, partner[static_cast<std::size_t>(pos)]);
    const bool same_row = a.row == b.row;
    const bool same_parity = (a.index - b.index) % 2 == 0;
    if (same_row == same_parity) {
      fail(ErrorCode::ParityViolation,
           to_string(Arrow{std::min(a, b), std::max(a, b)}) +
               (same_row ? " joins same-row dots of equal parity"
                         : " joins cross-row dots of different parity"));
    }
  }
}

void check_strings(int strings) {
  if (strings < 1) {
    fail(ErrorCode::IndexOutOfRange, "a diagram needs at least one string, got " +
                                         std::to_string(strings));
  }
}

}  // namespace

int position_of(int strings, Dot d) {
  if (d.index < 1 || d.index > strings) {
    fail(ErrorCode::IndexOutOfRange, "dot " + to_string(d) + " outside 1.." +
                                         std::to_string(strings));
  }
  return d.row == Row::Top ? d.index - 1 : strings + d.index - 1;
}

Dot dot_at(int strings, int position) {
  return position < strings ? Dot{Row::Top, position + 1}
                            : Dot{Row::Bottom, position - strings + 1};
}

Diagram Diagram::identity(int strings) {
  check_strings(strings);
  std::vector<int> partner(static_cast<std::size_t>(2 * strings));
  for (int x = 0; x < strings; ++x) {
    partner[static_cast<std::size_t>(x)] = strings + x;
    partner[static_cast<std::size_t>(strings + x)] = x;
  }
  return Diagram(strings, std::move(partner));
}

Diagram Diagram::generator(int strings, int i) {
  check_strings(strings);
  if (i < 1 || i > strings - 1) {
    fail(ErrorCode::IndexOutOfRange, "E_" + std::to_string(i) + " needs 1 <= i <= " +
                                         std::to_string(strings - 1));
  }
  Diagram d = identity(strings);
  auto& p = d.partner_;
  const int a = i - 1, b = i;
  p[static_cast<std::size_t>(a)] = b;
  p[static_cast<std::size_t>(b)] = a;
  p[static_cast<std::size_t>(strings + a)] = strings + b;
  p[static_cast<std::size_t>(strings + b)] = strings + a;
  return d;
}

Diagram Diagram::validate(int strings, std::span<const Arrow> arrows) {
  check_strings(strings);
  std::vector<int> partner(static_cast<std::size_t>(2 * strings), kFree);
  for (const Arrow& arrow : arrows) {
    const int a = position_of(strings, arrow.tail);
    const int b = position_of(strings, arrow.head);
    if (a == b || partner[static_cast<std::size_t>(a)] != kFree ||
        partner[static_cast<std::size_t>(b)] != kFree) {
      fail(ErrorCode::NotMatching, "arrow " + to_string(arrow) + " reuses a dot");
    }
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  return from_partners(strings, std::move(partner));
}

Diagram Diagram::from_partners(int strings, std::vector<int> partner) {
  check_strings(strings);
  if (partner.size() != static_cast<std::size_t>(2 * strings)) {
    fail(ErrorCode::NotMatching, "partner array must have " +
                                     std::to_string(2 * strings) + " entries");
  }
  check_matching(strings, partner);
  check_planar(strings, partner);
  check_parity(strings, partner);
  return Diagram(strings, std::move(partner));
}

Dot Diagram::partner(Dot d) const {
  return dot_at(strings_, partner_[static_cast<std::size_t>(position_of(strings_, d))]);
}

std::vector<Arrow> Diagram::arrows() const {
  std::vector<Arrow> out;
  out.reserve(static_cast<std::size_t>(strings_));
  for (int pos = 0; pos < 2 * strings_; ++pos) {
    const int other = partner_[static_cast<std::size_t>(pos)];
    if (other > pos) out.push_back({dot_at(strings_, pos), dot_at(strings_, other)});
  }
  return out;
}

DiagramBuilder::DiagramBuilder(int strings)
    : strings_(strings), partner_(static_cast<std::size_t>(2 * strings), kFree) {
  check_strings(strings);
}

bool DiagramBuilder::is_free(Dot d) const {
  return partner_[static_cast<std::size_t>(position_of(strings_, d))] == kFree;
}

void DiagramBuilder::join(Dot a, Dot b) {
  const int pa = position_of(strings_, a);
  const int pb = position_of(strings_, b);
  if (pa == pb || partner_[static_cast<std::size_t>(pa)] != kFree ||
      partner_[static_cast<std::size_t>(pb)] != kFree) {
    fail(ErrorCode::NotMatching, "cannot join " + to_string(a) + " and " + to_string(b));
  }
  partner_[static_cast<std::size_t>(pa)] = pb;
  partner_[static_cast<std::size_t>(pb)] = pa;
}

void DiagramBuilder::join_remaining_left_to_right() {
  int top = 1, bottom = 1;
  while (true) {
    while (top <= strings_ && !is_free({Row::Top, top})) ++top;
    while (bottom <= strings_ && !is_free({Row::Bottom, bottom})) ++bottom;
    if (top > strings_ || bottom > strings_) break;
    join({Row::Top, top}, {Row::Bottom, bottom});
  }
}

Diagram DiagramBuilder::finish() && {
  return Diagram::from_partners(strings_, std::move(partner_));
}

Product concatenate(const Diagram& top, const Diagram& bottom) {
  if (top.strings() != bottom.strings()) {
    fail(ErrorCode::StringMismatch, std::to_string(top.strings()) + " vs " +
                                        std::to_string(bottom.strings()) + " strings");
  }
  const int k = top.strings();
  const auto up = top.partners();
  const auto down = bottom.partners();
  std::vector<int> result(static_cast<std::size_t>(2 * k), kFree);
  // Middle dot m is the bottom dot m of `top`, glued to the top dot m of
  // `bottom`.
  std::vector<bool> middle_seen(static_cast<std::size_t>(k), false);

  // Walks a strand that enters the middle row at dot m, coming from the
  // layer named by `from_top`, until it leaves through an outer dot.
  auto walk = [&](int m, bool from_top) {
    while (true) {
      middle_seen[static_cast<std::size_t>(m)] = true;
      if (from_top) {
        const int next = down[static_cast<std::size_t>(m)];
        if (next >= k) return next;  // bottom row of `bottom`
        m = next;
        from_top = false;
      } else {
        const int next = up[static_cast<std::size_t>(k + m)];
        if (next < k) return next;  // top row of `top`
        m = next - k;
        from_top = true;
      }
    }
  };

  for (int x = 0; x < k; ++x) {
    if (result[static_cast<std::size_t>(x)] != kFree) continue;
    const int next = up[static_cast<std::size_t>(x)];
    const int end = next < k ? next : walk(next - k, true);
    result[static_cast<std::size_t>(x)] = end;
    result[static_cast<std::size_t>(end)] = x;
  }
  for (int y = k; y < 2 * k; ++y) {
    if (result[static_cast<std::size_t>(y)] != kFree) continue;
    const int next = down[static_cast<std::size_t>(y)];
    const int end = next >= k ? next : walk(next, false);
    result[static_cast<std::size_t>(y)] = end;
    result[static_cast<std::size_t>(end)] = y;
  }

  int loops = 0;
  for (int m = 0; m < k; ++m) {
    if (middle_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      cur = down[static_cast<std::size_t>(cur)];              // across `bottom`
      middle_seen[static_cast<std::size_t>(cur)] = true;
      cur = up[static_cast<std::size_t>(k + cur)] - k;        // across `top`
    } while (cur != m);
  }
  return {Diagram::from_partners(k, std::move(result)), loops};
}

Components components(const Diagram& d) {
  Components c;
  for (const Arrow& a : d.arrows()) {
    if (a.tail.row == Row::Top && a.head.row == Row::Top) {
      c.top_row.push_back(a);
      c.tails.push_back(a.tail.index);
    } else if (a.tail.row == Row::Bottom) {
      c.bottom_row.push_back(a);
      c.heads.push_back(a.head.index - 1);
    } else if (a.head.index > a.tail.index) {
      c.positive.push_back(a);
      c.tails.push_back(a.tail.index);
      c.heads.push_back(a.head.index - 1);
    } else {
      c.negative.push_back(a);
    }
  }
  std::sort(c.tails.begin(), c.tails.end());
  std::sort(c.heads.begin(), c.heads.end());
  c.size = static_cast<int>(c.top_row.size() + c.positive.size());
  return c;
}

Diagram flip_vertical(const Diagram& d) {
  const int k = d.strings();
  std::vector<int> partner(static_cast<std::size_t>(2 * k));
  auto swap_rows = [k](int pos) { return pos < k ? pos + k : pos - k; };
  for (int pos = 0; pos < 2 * k; ++pos) {
    partner[static_cast<std::size_t>(swap_rows(pos))] =
        swap_rows(d.partners()[static_cast<std::size_t>(pos)]);
  }
  return Diagram::from_partners(k, std::move(partner));
}

Diagram flip_horizontal(const Diagram& d) {
  const int k = d.strings();
  std::vector<int> partner(static_cast<std::size_t>(2 * k));
  auto mirror = [k](int pos) { return pos < k ? k - 1 - pos : 3 * k - 1 - pos; };
  for (int pos = 0; pos < 2 * k; ++pos) {
    partner[static_cast<std::size_t>(mirror(pos))] =
        mirror(d.partners()[static_cast<std::size_t>(pos)]);
  }
  return Diagram::from_partners(k, std::move(partner));
}

std::vector<Diagram> enumerate_diagrams(int strings) {
  check_strings(strings);
  const int total = 2 * strings;
  std::vector<Diagram> out;
  std::vector<int> partner(static_cast<std::size_t>(total), kFree);
  std::vector<std::pair<int, int>> pending{{0, total - 1}};

  // Matches the lowest boundary point of the next pending interval with
  // every admissible partner, splitting the rest into inside and outside.
  std::function<void()> expand = [&]() {
    if (pending.empty()) {
      out.push_back(Diagram::from_partners(strings, partner));
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo > hi) {
      expand();
    } else {
      for (int m = lo + 1; m <= hi; m += 2) {
        const int a = position_of_boundary(strings, lo);
        const int b = position_of_boundary(strings, m);
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        pending.push_back({m + 1, hi});
        pending.push_back({lo + 1, m - 1});
        expand();
        pending.pop_back();
        pending.pop_back();
        partner[static_cast<std::size_t>(a)] = kFree;
        partner[static_cast<std::size_t>(b)] = kFree;
      }
    }
    pending.push_back({lo, hi});
  };
  expand();
  return out;
}

Diagram complete_from_rows(int strings, std::span<const Arrow> top_row,
                           std::span<const Arrow> bottom_row) {
  DiagramBuilder builder(strings);
  for (const Arrow& a : top_row) builder.join(a.tail, a.head);
  for (const Arrow& a : bottom_row) builder.join(a.tail, a.head);
  builder.join_remaining_left_to_right();
  return std::move(builder).finish();
}

std::string to_string(const Dot& d) {
  return std::to_string(d.index) + (d.row == Row::Bottom ? "'" : "");
}

std::string to_string(const Arrow& a) { return to_string(a.tail) + "-" + to_string(a.head); }

std::string to_string(const Diagram& d) {
  std::string out = "strings=" + std::to_string(d.strings()) + ";";
  bool first = true;
  for (const Arrow& a : d.arrows()) {
    if (!first) out += ',';
    out += to_string(a);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) { return os << to_string(d); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in '" +
                                    std::string(whole) + "'");
  }
  return value;
}

Dot parse_dot(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.back() == '\'') {
    return {Row::Bottom, parse_int(s.substr(0, s.size() - 1), whole)};
  }
  return {Row::Top, parse_int(s, whole)};
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  constexpr std::string_view prefix = "strings=";
  if (text.substr(0, prefix.size()) != prefix) {
    fail(ErrorCode::ParseError, "expected 'strings=' in '" + std::string(whole) + "'");
  }
  text.remove_prefix(prefix.size());
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    fail(ErrorCode::ParseError, "expected ';' in '" + std::string(whole) + "'");
  }
  const int strings = parse_int(text.substr(0, semi), whole);
  text.remove_prefix(semi + 1);
  std::vector<Arrow> arrows;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      fail(ErrorCode::ParseError, "expected 'a-b' arrow, got '" + std::string(item) + "'");
    }
    arrows.push_back({parse_dot(item.substr(0, dash), whole),
                      parse_dot(item.substr(dash + 1), whole)});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Diagram::validate(strings, arrows);
}

}  // namespace tlfc
