#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"

namespace tlfc {

enum class Step { Right, Up };

/// A lattice path from (0,0) to (m,m) that never rises above y = x.
class DyckPath {
 public:
  /// Throws InvalidPath if the steps leave the region or do not end on the
  /// diagonal.
  static DyckPath validate(std::vector<Step> steps);

  int half_length() const noexcept { return static_cast<int>(steps_.size() / 2); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

/// A +1/-1 sequence with nonnegative prefix sums and total zero.
class Ballot {
 public:
  /// Throws InvalidBallot.
  static Ballot validate(std::vector<int> signs);

  int half_length() const noexcept { return static_cast<int>(signs_.size() / 2); }
  const std::vector<int>& signs() const noexcept { return signs_; }

  friend bool operator==(const Ballot&, const Ballot&) = default;

 private:
  explicit Ballot(std::vector<int> signs) : signs_(std::move(signs)) {}
  std::vector<int> signs_;
};

/// Corners where an Up step is followed by a Right step, as (x, y). The
/// final point of the path is not a corner.
std::vector<std::pair<int, int>> peaks(const DyckPath& path);

/// Path on an (n+1)-square with a corner at (j_t, i_t) for every block.
DyckPath fc_to_dyck(const FCElement& w);
/// Reads the corners back as blocks; the rank is half_length() - 1.
FCElement dyck_to_fc(const DyckPath& path);

/// Right -> +, Up -> -.
Ballot dyck_to_ballot(const DyckPath& path);
DyckPath ballot_to_dyck(const Ballot& ballot);

/// + ^ j_p  - ^ i_p  ...  + ^ (j_t - j_{t+1})  - ^ (i_t - i_{t+1})  ...
/// + ^ (n+1-j_1)  - ^ (n+1-i_1), straight from the canonical form.
Ballot fc_to_ballot(const FCElement& w);

/// Dots read in the total order 1..k, 1'..k': tails give +, heads give -.
Ballot diagram_to_ballot(const Diagram& d);

/// `RURU`, `+-+-`.
std::string to_string(const DyckPath& path);
std::string to_string(const Ballot& ballot);
/// Accept `R`/`U` and `+`/`-` (also the Unicode minus sign).
DyckPath parse_dyck(std::string_view text);
Ballot parse_ballot(std::string_view text);

}  // namespace tlfc
