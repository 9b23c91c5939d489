#include "tlfc/lattice.hpp"

#include <algorithm>

#include "tlfc/error.hpp"

namespace tlfc {

DyckPath DyckPath::validate(std::vector<Step> steps) {
  int rights = 0, ups = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    (steps[k] == Step::Right ? rights : ups) += 1;
    if (ups > rights) {
      fail(ErrorCode::InvalidPath, "rises above the diagonal at step " + std::to_string(k + 1));
    }
  }
  if (rights != ups) {
    fail(ErrorCode::InvalidPath,
         "ends at (" + std::to_string(rights) + "," + std::to_string(ups) + ")");
  }
  return DyckPath(std::move(steps));
}

Ballot Ballot::validate(std::vector<int> signs) {
  int sum = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) {
      fail(ErrorCode::InvalidBallot, "entry " + std::to_string(k + 1) + " is not +1 or -1");
    }
    sum += signs[k];
    if (sum < 0) {
      fail(ErrorCode::InvalidBallot, "negative partial sum at entry " + std::to_string(k + 1));
    }
  }
  if (sum != 0) fail(ErrorCode::InvalidBallot, "total is " + std::to_string(sum));
  return Ballot(std::move(signs));
}

std::vector<std::pair<int, int>> peaks(const DyckPath& path) {
  std::vector<std::pair<int, int>> out;
  int x = 0, y = 0;
  const auto& s = path.steps();
  for (std::size_t k = 0; k < s.size(); ++k) {
    (s[k] == Step::Right ? x : y) += 1;
    if (s[k] == Step::Up && k + 1 < s.size() && s[k + 1] == Step::Right) out.emplace_back(x, y);
  }
  return out;
}

namespace {

void append(std::vector<int>& out, int sign, int count) {
  out.insert(out.end(), static_cast<std::size_t>(count), sign);
}

}  // namespace

Ballot fc_to_ballot(const FCElement& w) {
  const int m = w.rank() + 1;
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(2 * m));
  int x = 0, y = 0;
  // Corners from the bottom-left, i.e. last block first.
  const auto blocks = w.blocks();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    append(signs, 1, it->j - x);
    append(signs, -1, it->i - y);
    x = it->j;
    y = it->i;
  }
  append(signs, 1, m - x);
  append(signs, -1, m - y);
  return Ballot::validate(std::move(signs));
}

Ballot dyck_to_ballot(const DyckPath& path) {
  std::vector<int> signs;
  signs.reserve(path.steps().size());
  for (Step s : path.steps()) signs.push_back(s == Step::Right ? 1 : -1);
  return Ballot::validate(std::move(signs));
}

DyckPath ballot_to_dyck(const Ballot& ballot) {
  std::vector<Step> steps;
  steps.reserve(ballot.signs().size());
  for (int s : ballot.signs()) steps.push_back(s > 0 ? Step::Right : Step::Up);
  return DyckPath::validate(std::move(steps));
}

DyckPath fc_to_dyck(const FCElement& w) { return ballot_to_dyck(fc_to_ballot(w)); }

FCElement dyck_to_fc(const DyckPath& path) {
  if (path.half_length() < 1) fail(ErrorCode::InvalidPath, "empty path has no rank");
  std::vector<Block> blocks;
  for (const auto& [x, y] : peaks(path)) blocks.push_back({y, x});
  // Corners come bottom-left first; the canonical form starts top-right.
  std::reverse(blocks.begin(), blocks.end());
  return FCElement::validate(path.half_length() - 1, std::move(blocks));
}

Ballot diagram_to_ballot(const Diagram& d) {
  const int k = d.strings();
  std::vector<int> signs(static_cast<std::size_t>(2 * k));
  for (const Arrow& a : d.arrows()) {
    signs[static_cast<std::size_t>(position_of(k, a.tail))] = 1;
    signs[static_cast<std::size_t>(position_of(k, a.head))] = -1;
  }
  return Ballot::validate(std::move(signs));
}

std::string to_string(const DyckPath& path) {
  std::string out;
  for (Step s : path.steps()) out += s == Step::Right ? 'R' : 'U';
  return out;
}

std::string to_string(const Ballot& ballot) {
  std::string out;
  for (int s : ballot.signs()) out += s > 0 ? '+' : '-';
  return out;
}

DyckPath parse_dyck(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    if (c == 'R' || c == 'r') {
      steps.push_back(Step::Right);
    } else if (c == 'U' || c == 'u') {
      steps.push_back(Step::Up);
    } else if (c != ' ') {
      fail(ErrorCode::ParseError, std::string("unexpected '") + c + "' in path");
    }
  }
  return DyckPath::validate(std::move(steps));
}

Ballot parse_ballot(std::string_view text) {
  static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  std::vector<int> signs;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '+') {
      signs.push_back(1);
    } else if (text[k] == '-') {
      signs.push_back(-1);
    } else if (text.substr(k, unicode_minus.size()) == unicode_minus) {
      signs.push_back(-1);
      k += unicode_minus.size() - 1;
    } else if (text[k] != ' ') {
      fail(ErrorCode::ParseError, std::string("unexpected '") + text[k] + "' in ballot");
    }
  }
  return Ballot::validate(std::move(signs));
}

}  // namespace tlfc
