// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tlfc/bijection.hpp"
#include "tlfc/counting.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"
#include "tlfc/lattice.hpp"
#include "tlfc/permutation.hpp"
#include "tlfc/tl_algebra.hpp"

using namespace tlfc;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 when the criterion states no limit
  std::function<Verdict()> run;
};

FCElement fc(int n, std::vector<Block> blocks) { return FCElement::validate(n, std::move(blocks)); }

std::string at(int n) { return " at n=" + std::to_string(n); }

Verdict catalan_counts() {
  Verdict v;
  for (int n = 0; n <= 10; ++n) {
    long count = 0;
    for_each_fc(n, [&](const FCElement&) { ++count; });
    v.require(BigCount(count) == catalan(n + 1), "count " + std::to_string(count) + at(n));
  }
  v.require(enumerate_fc(2).size() == 5 && enumerate_fc(3).size() == 14, "small ranks");
  if (v.ok) v.detail = "n=0..10, n=10 has " + catalan(11).str();
  return v;
}

Verdict narayana_counts() {
  Verdict v;
  for (int n = 0; n <= 10; ++n) {
    std::vector<long> by_size(static_cast<std::size_t>(n) + 1, 0);
    for_each_fc(n, [&](const FCElement& w) { ++by_size[w.size()]; });
    for (int p = 0; p <= n; ++p) {
      v.require(narayana(n, p) == by_size[static_cast<std::size_t>(p)],
                "narayana(" + std::to_string(n) + "," + std::to_string(p) + ")");
    }
  }
  return v;
}

Verdict two_parameter_formulas() {
  Verdict v;
  long compared = 0;
  for (int n = 1; n <= 10; ++n) {
    using Key = std::pair<int, int>;
    std::map<int, long> start, end;
    std::map<Key, long> first, last, start_size, size_end, start_end;
    for_each_fc(n, [&](const FCElement& w) {
      if (w.is_identity()) {
        ++start[0];
        return;
      }
      const Block b1 = w.blocks().front(), bp = w.blocks().back();
      const int p = static_cast<int>(w.size());
      ++start[b1.i];
      ++end[bp.j];
      ++first[{b1.i, b1.j}];
      ++last[{bp.i, bp.j}];
      ++start_size[{b1.i, p}];
      ++size_end[{p, bp.j}];
      ++start_end[{b1.i, bp.j}];
    });
    auto get = [](const auto& m, const auto& k) {
      const auto it = m.find(k);
      return BigCount(it == m.end() ? 0 : it->second);
    };
    auto same = [&](const BigCount& formula, const BigCount& brute, const std::string& what) {
      ++compared;
      v.require(formula == brute, what + at(n) + ": " + formula.str() + " vs " + brute.str());
    };
    for (int i = 0; i <= n; ++i) same(triangle_start(n, i), get(start, i), "triangle_start i=" + std::to_string(i));
    for (int a = 1; a <= n; ++a) {
      same(triangle_end(n, a), get(end, a), "triangle_end j=" + std::to_string(a));
      for (int b = 1; b <= n; ++b) {
        const Key k{a, b};
        const std::string args = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        same(count_first_block(n, a, b), get(first, k), "first block " + args);
        same(count_last_block(n, a, b), get(last, k), "last block " + args);
        same(count_start_size(n, a, b), get(start_size, k), "start/size " + args);
        same(count_size_end(n, a, b), get(size_end, k), "size/end " + args);
        if (b >= a - 1) {
          const StartEndCount c = count_start_end(n, a, b);
          v.require(c.closed_form, "start/end not closed " + args);
          same(c.value, get(start_end, k), "start/end " + args);
        }
      }
    }
  }
  if (v.ok) v.detail = std::to_string(compared) + " values";
  return v;
}

Verdict duality() {
  Verdict v;
  for (int n = 0; n <= 10; ++n) {
    for_each_fc(n, [&](const FCElement& w) {
      const FCElement d = dual(w);
      const int p = static_cast<int>(w.size());
      v.require(dual(d) == w, "not an involution at " + to_string(w));
      v.require(static_cast<int>(d.size()) == n - p, "size at " + to_string(w));
      v.require(length(w) - length(d) == 2 * p - n, "length at " + to_string(w));
    });
  }
  return v;
}

Verdict bijection() {
  Verdict v;
  long at8 = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const FCElement& w : enumerate_fc(n)) {
      v.require(fc_to_diagram(w) == fc_to_diagram_reference(w), "oracle disagrees at " + to_string(w));
      if (n == 8) ++at8;
    }
  }
  v.require(at8 == 4862, "n=8 has " + std::to_string(at8) + " elements");
  for (int n = 0; n <= 9; ++n) {
    for (const FCElement& w : enumerate_fc(n)) {
      v.require(diagram_to_fc(fc_to_diagram(w)) == w, "roundtrip at " + to_string(w));
    }
    for (const Diagram& d : enumerate_diagrams(n + 1)) {
      v.require(fc_to_diagram(diagram_to_fc(d)) == d, "roundtrip at " + to_string(d));
    }
  }
  if (v.ok) v.detail = "4862 elements at n=8, roundtrips to n=9";
  return v;
}

Verdict multiplication() {
  Verdict v;
  long pairs5 = 0;
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate_fc(n);
    std::vector<Diagram> images;
    for (const FCElement& w : all) images.push_back(fc_to_diagram(w));
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        const Product p = concatenate(images[a], images[b]);
        const MonomialProduct m = monomial_product(all[a], all[b]);
        v.require(p.diagram == fc_to_diagram(m.element) && p.loops == m.loops,
                  to_string(all[a]) + " * " + to_string(all[b]));
        if (n == 5) ++pairs5;
      }
    }
  }
  v.require(pairs5 == 17424, "n=5 pair count " + std::to_string(pairs5));
  if (v.ok) v.detail = "17424 pairs at n=5";
  return v;
}

Verdict worked_products() {
  Verdict v;
  const FCElement a = fc(4, {{1, 4}}), b = fc(4, {{4, 4}, {3, 3}, {1, 1}});
  const MonomialProduct ab = monomial_product(a, b), ba = monomial_product(b, a);
  v.require(ab.loops == 1 && ab.element == fc(4, {{3, 3}, {1, 1}}),
            "first product gave delta^" + std::to_string(ab.loops) + " " + to_string(ab.element));
  v.require(ba.loops == 1 && ba.element == fc(4, {{4, 4}, {1, 1}}),
            "second product gave delta^" + std::to_string(ba.loops) + " " + to_string(ba.element));
  if (v.ok) v.detail = "delta " + to_string(ab.element) + ", delta " + to_string(ba.element);
  return v;
}

Verdict relations() {
  Verdict v;
  for (int n = 1; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      const TLElement ei = TLElement::generator(n, i);
      v.require(multiply(ei, ei) == TLElement::monomial(fc(n, {{i, i}}), DeltaPoly::monomial(1)),
                "e_i^2" + at(n));
      for (int j = 1; j <= n; ++j) {
        const TLElement ej = TLElement::generator(n, j);
        if (std::abs(i - j) == 1) v.require(multiply(multiply(ei, ej), ei) == ei, "e_i e_j e_i" + at(n));
        if (std::abs(i - j) > 1) v.require(multiply(ei, ej) == multiply(ej, ei), "commutation" + at(n));
      }
    }
  }
  return v;
}

Verdict descents() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    for (const FCElement& w : enumerate_fc(n)) {
      if (w.is_identity()) continue;
      const DiagramDescents d = descents_from_diagram(fc_to_diagram(w));
      const Permutation perm = to_permutation(w);
      v.require(d.left == left_descents(w) && d.left == oracle_left_descents(perm),
                "left descents at " + to_string(w));
      v.require(d.right == right_descents(w) && d.right == oracle_right_descents(perm),
                "right descents at " + to_string(w));
    }
  }
  return v;
}

Verdict example_one() {
  Verdict v;
  const FCElement w = fc(5, {{4, 5}, {3, 3}, {1, 1}});
  const std::string fb = to_string(fc_to_ballot(w));
  v.require(fb == "+-++--++-+--", "FB gave " + fb);
  v.require(to_string(dyck_to_ballot(fc_to_dyck(w))) == fb, "path route disagrees");
  v.require(peaks(fc_to_dyck(w)) == std::vector<std::pair<int, int>>{{1, 1}, {3, 3}, {5, 4}}, "peaks");
  const std::string nb = to_string(diagram_to_ballot(fc_to_diagram(w)));
  v.require(nb != fb, "NB equals FB");
  if (v.ok) v.detail = "FB " + fb + ", NB " + nb;
  return v;
}

Verdict census_sizes() {
  Verdict v;
  long classes = 0;
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<Arrow>, BigCount> recount;
    for (const Diagram& d : enumerate_diagrams(n + 1)) ++recount[equivalence_key(d)];
    for (int p = 0; p <= n; ++p) {
      BigCount total = 0;
      for (const CensusClass& c : census(n, p)) {
        ++classes;
        total += c.size;
        v.require(c.size == recount[c.key], "recount of " + key_to_string(c.key) + at(n));
        v.require(c.size == c.catalan_product, "catalan product of " + key_to_string(c.key) + at(n));
      }
      v.require(total == narayana(n, p), "total" + at(n) + " p=" + std::to_string(p));
    }
  }
  if (v.ok) v.detail = std::to_string(classes) + " classes";
  return v;
}

Verdict binomial_identity() {
  Verdict v;
  for (int n = 0; n <= 30; ++n) {
    for (int p = 0; p <= n; ++p) {
      v.require(appendix_binomial_identity_check(n, p), "n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Catalan counts of enumerate_fc, n <= 10", 10, catalan_counts},
      {2, "Narayana numbers against brute force, n <= 10", 30, narayana_counts},
      {3, "Catalan triangle and two-parameter formulas, n <= 10", 0, two_parameter_formulas},
      {4, "Duality involution, size and length, n <= 10", 60, duality},
      {5, "Bijection equals concatenation oracle; roundtrips", 0, bijection},
      {6, "Multiplication compatibility, n <= 5", 60, multiplication},
      {7, "Worked monomial products", 0, worked_products},
      {8, "TL relations, n <= 10", 0, relations},
      {9, "Descents: diagram, formula and permutation agree, n <= 8", 0, descents},
      {10, "Example path, ballot and diagram-ballot counterexample", 0, example_one},
      {11, "Census class sizes, n <= 7", 0, census_sizes},
      {12, "Binomial identity, 0 <= p <= n <= 30", 0, binomial_identity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      v.ok = false;
      v.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d  %-56s %7.3f s  %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
