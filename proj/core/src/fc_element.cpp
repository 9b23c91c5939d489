#include "tlfc/fc_element.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "tlfc/error.hpp"

namespace tlfc {

namespace {

std::string block_text(const Block& b) {
  return "[" + std::to_string(b.i) + "," + std::to_string(b.j) + "]";
}

// Decreasing complement of `taken` inside {1..n}.
std::vector<int> decreasing_complement(int n, const std::vector<int>& taken) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : taken) used[static_cast<std::size_t>(v)] = true;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - taken.size());
  for (int v = n; v >= 1; --v) {
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

void extend(int n, int p, std::vector<Block>& acc,
            const std::function<void(const FCElement&)>& visit) {
  const int depth = static_cast<int>(acc.size());
  if (depth == p) {
    visit(FCElement::validate(n, acc));
    return;
  }
  const int remaining = p - depth;
  const int i_max = depth == 0 ? n : acc.back().i - 1;
  const int j_max = depth == 0 ? n : acc.back().j - 1;
  // Each later block needs a strictly smaller i (and j), so the current
  // indices must leave room for remaining - 1 further blocks.
  for (int i = remaining; i <= i_max; ++i) {
    for (int j = std::max(i, remaining); j <= j_max; ++j) {
      acc.push_back({i, j});
      extend(n, p, acc, visit);
      acc.pop_back();
    }
  }
}

}  // namespace

FCElement FCElement::validate(int rank, std::vector<Block> blocks) {
  if (rank < 0) {
    fail(ErrorCode::RankOutOfRange,
         "rank must be nonnegative, got " + std::to_string(rank));
  }
  if (blocks.size() > static_cast<std::size_t>(rank)) {
    fail(ErrorCode::NotStandard, "size " + std::to_string(blocks.size()) +
                                     " exceeds rank " + std::to_string(rank));
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    const std::string at = " at t=" + std::to_string(k + 1);
    if (b.i < 1 || b.j > rank) {
      fail(ErrorCode::NotStandard, "block " + block_text(b) +
                                       " outside generators 1.." +
                                       std::to_string(rank) + at);
    }
    if (b.i > b.j) {
      fail(ErrorCode::NotStandard, "i_t <= j_t violated by " + block_text(b) + at);
    }
    if (k > 0) {
      const Block& prev = blocks[k - 1];
      if (b.i >= prev.i) {
        fail(ErrorCode::NotStandard, "i_{t-1} > i_t violated (" +
                                         std::to_string(prev.i) + " vs " +
                                         std::to_string(b.i) + ")" + at);
      }
      if (b.j >= prev.j) {
        fail(ErrorCode::NotStandard, "j_{t-1} > j_t violated (" +
                                         std::to_string(prev.j) + " vs " +
                                         std::to_string(b.j) + ")" + at);
      }
    }
  }
  return FCElement(rank, std::move(blocks));
}

FCElement FCElement::identity(int rank) { return validate(rank, {}); }

std::string_view to_string(Shape shape) noexcept {
  switch (shape) {
    case Shape::Identity: return "identity";
    case Shape::Thick: return "thick";
    case Shape::Slim: return "slim";
  }
  return "?";
}

int length(const FCElement& w) {
  int total = 0;
  for (const Block& b : w.blocks()) total += b.j - b.i + 1;
  return total;
}

Shape classify(const FCElement& w) {
  if (w.is_identity()) return Shape::Identity;
  const auto blocks = w.blocks();
  const bool thick = std::all_of(blocks.begin(), blocks.end(),
                                 [](const Block& b) { return b.j > b.i; });
  return thick ? Shape::Thick : Shape::Slim;
}

FCElement shrink(const FCElement& w) {
  if (classify(w) != Shape::Thick) {
    fail(ErrorCode::NotThick, to_string(w) + " is not thick");
  }
  std::vector<Block> blocks(w.blocks().begin(), w.blocks().end());
  for (Block& b : blocks) --b.j;
  return FCElement::validate(w.rank() - 1, std::move(blocks));
}

FCElement grow(const FCElement& w) {
  std::vector<Block> blocks(w.blocks().begin(), w.blocks().end());
  for (Block& b : blocks) ++b.j;
  return FCElement::validate(w.rank() + 1, std::move(blocks));
}

FCElement dual(const FCElement& w) {
  const int n = w.rank();
  std::vector<int> is, js;
  for (const Block& b : w.blocks()) {
    is.push_back(b.i);
    js.push_back(b.j);
  }
  const std::vector<int> dual_i = decreasing_complement(n, js);
  const std::vector<int> dual_j = decreasing_complement(n, is);
  std::vector<Block> blocks(dual_i.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    blocks[t] = {dual_i[t], dual_j[t]};
  }
  return FCElement::validate(n, std::move(blocks));
}

FCElement delta_involution(const FCElement& w) {
  const int n = w.rank();
  std::vector<Block> blocks;
  blocks.reserve(w.size());
  const auto src = w.blocks();
  for (auto it = src.rbegin(); it != src.rend(); ++it) {
    blocks.push_back({n + 1 - it->j, n + 1 - it->i});
  }
  return FCElement::validate(n, std::move(blocks));
}

GeneratorSet left_descents(const FCElement& w) {
  if (w.is_identity()) {
    fail(ErrorCode::IdentityHasNoDescents, "left descents of " + to_string(w));
  }
  const auto b = w.blocks();
  GeneratorSet out{b[0].i};
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (b[k].i < b[k - 1].i - 1) out.push_back(b[k].i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet right_descents(const FCElement& w) {
  if (w.is_identity()) {
    fail(ErrorCode::IdentityHasNoDescents, "right descents of " + to_string(w));
  }
  const auto b = w.blocks();
  GeneratorSet out{b.back().j};
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    if (b[k].j > b[k + 1].j + 1) out.push_back(b[k].j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet support(const FCElement& w) {
  std::vector<bool> hit(static_cast<std::size_t>(w.rank()) + 1, false);
  for (const Block& b : w.blocks()) {
    for (int k = b.i; k <= b.j; ++k) hit[static_cast<std::size_t>(k)] = true;
  }
  GeneratorSet out;
  for (int k = 1; k <= w.rank(); ++k) {
    if (hit[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

bool is_saturated_in(std::span<const Block> blocks, int lo, int hi) {
  for (int h = lo; h <= hi; ++h) {
    const bool covered = std::any_of(blocks.begin(), blocks.end(), [h](const Block& b) {
      return b.i <= h && h <= b.j;
    });
    if (!covered) return false;
  }
  return true;
}

std::vector<int> canonical_word(const FCElement& w) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(length(w)));
  for (const Block& b : w.blocks()) {
    for (int k = b.i; k <= b.j; ++k) word.push_back(k);
  }
  return word;
}

void for_each_fc(int n, const std::function<void(const FCElement&)>& visit) {
  if (n < 0) {
    fail(ErrorCode::RankOutOfRange, "rank must be nonnegative, got " + std::to_string(n));
  }
  std::vector<Block> acc;
  for (int p = 0; p <= n; ++p) extend(n, p, acc, visit);
}

std::vector<FCElement> enumerate_fc(int n) {
  std::vector<FCElement> out;
  for_each_fc(n, [&out](const FCElement& w) { out.push_back(w); });
  return out;
}

std::vector<FCElement> enumerate_fc(int n, int p) {
  if (n < 0) {
    fail(ErrorCode::RankOutOfRange, "rank must be nonnegative, got " + std::to_string(n));
  }
  std::vector<FCElement> out;
  if (p < 0 || p > n) return out;
  std::vector<Block> acc;
  extend(n, p, acc, [&out](const FCElement& w) { out.push_back(w); });
  return out;
}

SlimSplit slim_split(const FCElement& w) {
  if (classify(w) != Shape::Slim) {
    fail(ErrorCode::NotStandard, to_string(w) + " is not slim");
  }
  const auto b = w.blocks();
  std::size_t r = 0;
  while (b[r].i != b[r].j) ++r;
  SlimSplit split;
  split.prefix.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(r));
  split.pivot = b[r].i;
  split.tail = FCElement::validate(split.pivot - 1,
                                   std::vector<Block>(b.begin() + static_cast<std::ptrdiff_t>(r) + 1, b.end()));
  return split;
}

FCElement slim_join(int rank, std::span<const Block> prefix, int pivot,
                    const FCElement& tail) {
  if (tail.rank() != pivot - 1) {
    fail(ErrorCode::RankMismatch, "tail must live in W(A_" + std::to_string(pivot - 1) + ")");
  }
  for (const Block& g : prefix) {
    if (g.j <= g.i || g.i <= pivot) {
      fail(ErrorCode::NotStandard, "prefix block " + block_text(g) +
                                       " is not thick above the pivot");
    }
  }
  std::vector<Block> blocks(prefix.begin(), prefix.end());
  blocks.push_back({pivot, pivot});
  blocks.insert(blocks.end(), tail.blocks().begin(), tail.blocks().end());
  return FCElement::validate(rank, std::move(blocks));
}

std::string to_string(const FCElement& w) {
  std::string out = "n=" + std::to_string(w.rank()) + ":";
  if (w.is_identity()) return out + "[]";
  for (const Block& b : w.blocks()) out += block_text(b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const FCElement& w) {
  return os << to_string(w);
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) +
                                    " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FCElement parse_fc(std::string_view text) {
  Cursor in(text);
  in.expect('n');
  in.expect('=');
  const int rank = in.integer();
  in.expect(':');
  std::vector<Block> blocks;
  if (in.peek('[')) {
    in.expect('[');
    if (in.peek(']')) {
      in.expect(']');
      if (!in.done()) in.error("trailing input after identity");
      return FCElement::validate(rank, {});
    }
    const int i = in.integer();
    in.expect(',');
    const int j = in.integer();
    in.expect(']');
    blocks.push_back({i, j});
    while (in.peek('[')) {
      in.expect('[');
      const int i2 = in.integer();
      in.expect(',');
      const int j2 = in.integer();
      in.expect(']');
      blocks.push_back({i2, j2});
    }
  }
  if (!in.done()) in.error("unexpected character");
  return FCElement::validate(rank, std::move(blocks));
}

}  // namespace tlfc
