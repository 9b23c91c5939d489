#include "tlfc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "tlfc/error.hpp"

namespace tlfc {

Permutation::Permutation(int points) : images_(static_cast<std::size_t>(points)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      fail(ErrorCode::ParseError, "images are not a permutation of 1..m");
    }
  }
  Permutation perm(0);
  perm.images_ = std::move(images);
  return perm;
}

Permutation Permutation::from_word(int points, std::span<const int> word) {
  Permutation perm(points);
  for (int k : word) {
    if (k < 1 || k >= points) {
      fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(k) +
                                           " outside 1.." + std::to_string(points - 1));
    }
    std::swap(perm.images_[static_cast<std::size_t>(k - 1)],
              perm.images_[static_cast<std::size_t>(k)]);
  }
  return perm;
}

Permutation Permutation::right_multiply(int k) const {
  Permutation out = *this;
  std::swap(out.images_[static_cast<std::size_t>(k - 1)],
            out.images_[static_cast<std::size_t>(k)]);
  return out;
}

Permutation Permutation::left_multiply(int k) const {
  Permutation out = *this;
  for (int& v : out.images_) {
    if (v == k) {
      v = k + 1;
    } else if (v == k + 1) {
      v = k;
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(points());
  for (int x = 1; x <= points(); ++x) {
    out.images_[static_cast<std::size_t>((*this)(x) - 1)] = x;
  }
  return out;
}

Permutation Permutation::reflect() const {
  const int m = points();
  Permutation out(m);
  for (int x = 1; x <= m; ++x) {
    out.images_[static_cast<std::size_t>(x - 1)] = m + 1 - (*this)(m + 1 - x);
  }
  return out;
}

long Permutation::inversions() const {
  long count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

bool Permutation::avoids_321() const {
  const std::size_t m = images_.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (images_[a] <= images_[b]) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        if (images_[b] > images_[c]) return false;
      }
    }
  }
  return true;
}

Permutation to_permutation(const FCElement& w) {
  const std::vector<int> word = canonical_word(w);
  return Permutation::from_word(w.rank() + 1, word);
}

GeneratorSet oracle_left_descents(const Permutation& perm) {
  GeneratorSet out;
  const long base = perm.inversions();
  for (int s = 1; s < perm.points(); ++s) {
    if (perm.left_multiply(s).inversions() < base) out.push_back(s);
  }
  return out;
}

GeneratorSet oracle_right_descents(const Permutation& perm) {
  GeneratorSet out;
  const long base = perm.inversions();
  for (int s = 1; s < perm.points(); ++s) {
    if (perm.right_multiply(s).inversions() < base) out.push_back(s);
  }
  return out;
}

std::vector<Permutation> all_permutations(int points) {
  std::vector<int> images(static_cast<std::size_t>(points));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& perm) {
  std::string out = "(";
  for (std::size_t k = 0; k < perm.images().size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(perm.images()[k]);
  }
  return out + ")";
}

}  // namespace tlfc
