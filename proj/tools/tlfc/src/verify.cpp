#include "tlfc_cli/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "tlfc/bijection.hpp"
#include "tlfc/counting.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/error.hpp"
#include "tlfc/fc_element.hpp"
#include "tlfc/lattice.hpp"
#include "tlfc/permutation.hpp"
#include "tlfc/tl_algebra.hpp"

namespace tlfc::cli {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && !result_.counterexample) result_.counterexample = describe();
    return ok;
  }
  bool failed() const { return result_.counterexample.has_value(); }
  SuiteResult finish() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string set_string(const GeneratorSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

GeneratorSet reflect_set(const GeneratorSet& s, int n) {
  GeneratorSet out;
  for (int k : s) out.push_back(n + 1 - k);
  std::sort(out.begin(), out.end());
  return out;
}

SuiteResult fc_core_suite(int max_n) {
  Checker c("fc_core");
  for (int n = 0; n <= std::min(max_n, 10) && !c.failed(); ++n) {
    const auto all = enumerate_fc(n);
    c.expect(BigCount(all.size()) == catalan(n + 1), [&] {
      return "rank " + std::to_string(n) + ": " + std::to_string(all.size()) + " elements";
    });
    std::set<FCElement> thick_images;
    long identities = 0, thick = 0, slim = 0;
    std::set<FCElement> slim_rebuilt;
    for (const FCElement& w : all) {
      const FCElement d = dual(w);
      c.expect(dual(d) == w && static_cast<int>(d.size()) == n - static_cast<int>(w.size()) &&
                   length(w) - length(d) == 2 * static_cast<int>(w.size()) - n,
               [&] { return "dual fails at " + to_string(w); });
      const FCElement delta = delta_involution(w);
      c.expect(delta_involution(delta) == w &&
                   to_permutation(delta) == to_permutation(w).inverse().reflect(),
               [&] { return "delta fails at " + to_string(w); });
      switch (classify(w)) {
        case Shape::Identity:
          ++identities;
          break;
        case Shape::Thick: {
          ++thick;
          const FCElement s = shrink(w);
          c.expect(!s.is_identity() && s.size() == w.size() &&
                       length(w) - length(s) == static_cast<int>(w.size()) && grow(s) == w,
                   [&] { return "shrink fails at " + to_string(w); });
          thick_images.insert(s);
          break;
        }
        case Shape::Slim: {
          ++slim;
          const SlimSplit split = slim_split(w);
          const FCElement back = slim_join(n, split.prefix, split.pivot, split.tail);
          c.expect(back == w, [&] { return "slim split fails at " + to_string(w); });
          slim_rebuilt.insert(back);
          break;
        }
      }
      if (w.is_identity() || n > 8) continue;
      const Permutation perm = to_permutation(w);
      c.expect(perm.avoids_321() && perm.inversions() == length(w),
               [&] { return "permutation fails at " + to_string(w); });
      c.expect(left_descents(w) == oracle_left_descents(perm) &&
                   right_descents(w) == oracle_right_descents(perm),
               [&] { return "descents disagree with the permutation at " + to_string(w); });
      c.expect(right_descents(delta) == reflect_set(left_descents(w), n),
               [&] { return "delta does not carry left descents at " + to_string(w); });
    }
    c.expect(identities == 1 && static_cast<long>(slim_rebuilt.size()) == slim &&
                 identities + thick + slim == static_cast<long>(all.size()),
             [&] { return "thick/slim partition fails at rank " + std::to_string(n); });
    if (n >= 1) {
      c.expect(static_cast<long>(thick_images.size()) == thick &&
                   BigCount(thick) == catalan(n) - 1,
               [&] { return "shrink is not onto at rank " + std::to_string(n); });
    }
    if (n <= 7) {
      std::set<Permutation> images;
      for (const FCElement& w : all) images.insert(to_permutation(w));
      long avoiding = 0;
      for (const Permutation& p : all_permutations(n + 1)) {
        if (!p.avoids_321()) continue;
        ++avoiding;
        c.expect(images.contains(p), [&] { return "321-avoiding " + to_string(p) + " missed"; });
      }
      c.expect(avoiding == static_cast<long>(images.size()),
               [&] { return "permutation image size at rank " + std::to_string(n); });
    }
  }
  return std::move(c).finish();
}

SuiteResult counting_suite(int max_n) {
  Checker c("counting");
  for (int n = 0; n <= std::min(max_n, 20); ++n) {
    BigCount row = 0;
    for (int p = 0; p <= n; ++p) {
      row += narayana(n, p);
      c.expect(narayana(n, p) == narayana(n, n - p),
               [&] { return "narayana symmetry at " + std::to_string(n); });
    }
    c.expect(row == catalan(n + 1), [&] { return "narayana row sum at " + std::to_string(n); });
    if (n <= 15) {
      BigCount triangle = 0;
      for (int i = 0; i <= n; ++i) {
        triangle += triangle_start(n, i);
        if (i >= 1) {
          c.expect(triangle_start(n, i) == triangle_start(n, i - 1) + triangle_start(n - 1, i),
                   [&] { return "triangle recurrence at " + std::to_string(n); });
        }
      }
      c.expect(triangle == catalan(n + 1),
               [&] { return "triangle row sum at " + std::to_string(n); });
    }
    if (n <= 12) {
      for (int p = 0; p <= n; ++p) {
        c.expect(recurrence::narayana(n, p) == narayana(n, p),
                 [&] { return "thick/slim recurrence at n=" + std::to_string(n); });
      }
      for (int i = 0; i <= n; ++i) {
        c.expect(recurrence::triangle_start_mixed(n, i) == triangle_start(n, i),
                 [&] { return "mixed recurrence at n=" + std::to_string(n); });
      }
    }
  }
  for (int n = 1; n <= std::min(max_n, 10); ++n) {
    using Key = std::tuple<int, int>;
    std::map<int, long> by_size, by_start, by_end;
    std::map<Key, long> first, last, start_size, size_end, start_end;
    for (const FCElement& w : enumerate_fc(n)) {
      const int p = static_cast<int>(w.size());
      ++by_size[p];
      if (p == 0) {
        ++by_start[0];
        continue;
      }
      const Block b1 = w.blocks().front(), bp = w.blocks().back();
      ++by_start[b1.i];
      ++by_end[bp.j];
      ++first[{b1.i, b1.j}];
      ++last[{bp.i, bp.j}];
      ++start_size[{b1.i, p}];
      ++size_end[{p, bp.j}];
      ++start_end[{b1.i, bp.j}];
    }
    auto get = [](const auto& m, const auto& k) {
      auto it = m.find(k);
      return BigCount(it == m.end() ? 0 : it->second);
    };
    const std::string at = " at n=" + std::to_string(n);
    for (int a = 0; a <= n; ++a) {
      c.expect(narayana(n, a) == get(by_size, a), [&] { return "narayana" + at; });
      c.expect(triangle_start(n, a) == get(by_start, a), [&] { return "triangle_start" + at; });
      if (a >= 1) c.expect(triangle_end(n, a) == get(by_end, a), [&] { return "triangle_end" + at; });
    }
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const Key k{a, b};
        c.expect(count_first_block(n, a, b) == get(first, k), [&] { return "first block" + at; });
        c.expect(count_last_block(n, a, b) == get(last, k), [&] { return "last block" + at; });
        c.expect(count_start_size(n, a, b) == get(start_size, k), [&] { return "start/size" + at; });
        c.expect(count_size_end(n, a, b) == get(size_end, k), [&] { return "size/end" + at; });
        c.expect(count_start_end(n, a, b).value == get(start_end, k),
                 [&] { return "start/end" + at; });
      }
    }
  }
  for (int n = 0; n <= std::min(std::max(max_n, 0) * 3, 30); ++n) {
    for (int p = 0; p <= n; ++p) {
      c.expect(appendix_binomial_identity_check(n, p), [&] {
        return "binomial identity at n=" + std::to_string(n) + " p=" + std::to_string(p);
      });
    }
  }
  return std::move(c).finish();
}

SuiteResult diagram_suite(int max_n) {
  Checker c("diagram");
  std::mt19937_64 rng(20240611);
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    const int k = n + 1;
    const auto all = enumerate_diagrams(k);
    c.expect(BigCount(all.size()) == catalan(k),
             [&] { return std::to_string(all.size()) + " diagrams on " + std::to_string(k); });
    if (n > 8) continue;
    const Diagram id = Diagram::identity(k);
    for (const Diagram& d : all) {
      const Product left = concatenate(id, d), right = concatenate(d, id);
      c.expect(left.diagram == d && right.diagram == d && left.loops == 0 && right.loops == 0,
               [&] { return "identity is not neutral for " + to_string(d); });
      const Components comp = components(d);
      c.expect(complete_from_rows(k, comp.top_row, comp.bottom_row) == d,
               [&] { return "rows do not determine " + to_string(d); });
      for (const Arrow& a : d.arrows()) {
        // Dots enclosed by a same-row arrow, or left of a cross arrow, pair up.
        const int enclosed = a.tail.row == a.head.row ? a.head.index - a.tail.index - 1
                                                      : a.tail.index + a.head.index - 2;
        c.expect(enclosed % 2 == 0, [&] { return "parity fails for " + to_string(d); });
      }
    }
    if (n <= 5) {
      for (const Diagram& d1 : all) {
        const Components c1 = components(d1);
        for (const Diagram& d2 : all) {
          const Product p = concatenate(d1, d2);
          const Components c12 = components(p.diagram), c2 = components(d2);
          const bool top_kept = std::all_of(c1.top_row.begin(), c1.top_row.end(), [&](const Arrow& a) {
            return std::find(c12.top_row.begin(), c12.top_row.end(), a) != c12.top_row.end();
          });
          const bool bottom_kept = std::all_of(c2.bottom_row.begin(), c2.bottom_row.end(), [&](const Arrow& a) {
            return std::find(c12.bottom_row.begin(), c12.bottom_row.end(), a) != c12.bottom_row.end();
          });
          c.expect(top_kept && bottom_kept, [&] {
            return "row arrows lost in " + to_string(d1) + " * " + to_string(d2);
          });
        }
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const int triples = 10000 / (std::min(max_n, 8) + 1) + 1;
    for (int t = 0; t < triples; ++t) {
      const Diagram &a = all[pick(rng)], &b = all[pick(rng)], &d = all[pick(rng)];
      const Product ab = concatenate(a, b), bd = concatenate(b, d);
      const Product ab_d = concatenate(ab.diagram, d), a_bd = concatenate(a, bd.diagram);
      c.expect(ab_d.diagram == a_bd.diagram && ab.loops + ab_d.loops == bd.loops + a_bd.loops,
               [&] { return "associativity fails for " + to_string(a) + ", " + to_string(b) +
                            ", " + to_string(d); });
    }
  }
  return std::move(c).finish();
}

SuiteResult bijection_suite(int max_n) {
  Checker c("bijection");
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    const auto elements = enumerate_fc(n);
    for (const FCElement& w : elements) {
      const Diagram d = fc_to_diagram(w);
      c.expect(diagram_to_fc(d) == w, [&] { return "roundtrip fails at " + to_string(w); });
      c.expect(components(d).size == static_cast<int>(w.size()),
               [&] { return "size is not preserved at " + to_string(w); });
      if (n > 8) continue;
      c.expect(d == fc_to_diagram_reference(w),
               [&] { return "disagrees with the concatenation oracle at " + to_string(w); });
      c.expect(flip_horizontal(flip_vertical(d)) == fc_to_diagram(delta_involution(w)),
               [&] { return "rotation property fails at " + to_string(w); });
      // The positive arrows drawn are exactly those predicted by the index
      // conditions.
      std::set<std::pair<int, int>> drawn;
      for (const Arrow& a : components(d).positive) drawn.emplace(a.tail.index, a.head.index);
      std::set<std::pair<int, int>> predicted;
      const auto b = w.blocks();
      for (int s = 2; s <= static_cast<int>(b.size()); ++s) {
        for (int t = 1; t < s; ++t) {
          if (dplus_condition(w, s, t)) {
            predicted.emplace(b[static_cast<std::size_t>(s - 1)].i,
                              b[static_cast<std::size_t>(t - 1)].j + 1);
          }
        }
      }
      c.expect(drawn == predicted,
               [&] { return "positive arrows differ from prediction at " + to_string(w); });
    }
    const auto diagrams = enumerate_diagrams(n + 1);
    for (const Diagram& d : diagrams) {
      c.expect(fc_to_diagram(diagram_to_fc(d)) == d,
               [&] { return "roundtrip fails at " + to_string(d); });
    }
    if (n <= 6) {
      std::map<std::pair<GeneratorSet, GeneratorSet>, int> by_indices;
      for (const Diagram& d : diagrams) {
        const Components comp = components(d);
        ++by_indices[{comp.tails, comp.heads}];
      }
      for (const FCElement& w : elements) {
        GeneratorSet is, js;
        for (const Block& blk : w.blocks()) {
          is.push_back(blk.i);
          js.push_back(blk.j);
        }
        std::sort(is.begin(), is.end());
        std::sort(js.begin(), js.end());
        c.expect(by_indices[{is, js}] == 1,
                 [&] { return "no unique diagram for " + to_string(w); });
      }
    }
    if (n <= 5) {
      std::vector<Diagram> images;
      for (const FCElement& w : elements) images.push_back(fc_to_diagram(w));
      for (std::size_t x = 0; x < elements.size(); ++x) {
        for (std::size_t y = 0; y < elements.size(); ++y) {
          const Product p = concatenate(images[x], images[y]);
          const MonomialProduct m = monomial_product(elements[x], elements[y]);
          c.expect(p.diagram == fc_to_diagram(m.element) && p.loops == m.loops, [&] {
            return "product mismatch for " + to_string(elements[x]) + " * " +
                   to_string(elements[y]);
          });
        }
      }
    }
  }
  return std::move(c).finish();
}

SuiteResult tl_algebra_suite(int max_n) {
  Checker c("tl_algebra");
  for (int n = 1; n <= std::min(max_n, 10); ++n) {
    for (int i = 1; i <= n; ++i) {
      const TLElement ei = TLElement::generator(n, i);
      c.expect(multiply(ei, ei) == TLElement::monomial(ei.terms().begin()->first, DeltaPoly::monomial(1)),
               [&] { return "e_i^2 != delta e_i for i=" + std::to_string(i); });
      for (int j = 1; j <= n; ++j) {
        const TLElement ej = TLElement::generator(n, j);
        if (std::abs(i - j) == 1) {
          c.expect(multiply(multiply(ei, ej), ei) == ei, [&] {
            return "e_i e_j e_i != e_i for i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        } else if (std::abs(i - j) > 1) {
          c.expect(multiply(ei, ej) == multiply(ej, ei), [&] {
            return "e_i, e_j do not commute for i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const auto all = enumerate_fc(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      const TLElement a = TLElement::monomial(all[pick(rng)]);
      const TLElement b = TLElement::monomial(all[pick(rng)]) + TLElement::monomial(all[pick(rng)]);
      const TLElement d = TLElement::monomial(all[pick(rng)]);
      c.expect(multiply(multiply(a, b), d) == multiply(a, multiply(b, d)),
               [&] { return "associativity fails: " + to_string(a) + ", " + to_string(b) + ", " + to_string(d); });
    }
  }
  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    for (const FCElement& w : enumerate_fc(n)) {
      if (w.is_identity()) continue;
      const DiagramDescents dd = descents_from_diagram(fc_to_diagram(w));
      const Permutation perm = to_permutation(w);
      c.expect(dd.left == left_descents(w) && dd.right == right_descents(w) &&
                   dd.left == oracle_left_descents(perm) && dd.right == oracle_right_descents(perm),
               [&] { return "descents disagree at " + to_string(w) + ": diagram gives " +
                            set_string(dd.left) + " " + set_string(dd.right); });
    }
  }
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    std::map<std::vector<Arrow>, long> recount;
    for (const Diagram& d : enumerate_diagrams(n + 1)) ++recount[equivalence_key(d)];
    for (int p = 0; p <= n; ++p) {
      BigCount total = 0;
      for (const CensusClass& cls : census(n, p)) {
        total += cls.size;
        c.expect(cls.size == recount[cls.key] && cls.size == cls.catalan_product, [&] {
          return "class " + key_to_string(cls.key) + " has size " + cls.size.str() +
                 ", recount " + std::to_string(recount[cls.key]) + ", catalan product " +
                 cls.catalan_product.str();
        });
      }
      c.expect(total == narayana(n, p), [&] {
        return "census at n=" + std::to_string(n) + " p=" + std::to_string(p) + " sums to " +
               total.str();
      });
    }
  }
  return std::move(c).finish();
}

SuiteResult lattice_suite(int max_n) {
  Checker c("lattice");
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    bool violated = false;
    for (const FCElement& w : enumerate_fc(n)) {
      const DyckPath path = fc_to_dyck(w);
      const Ballot ballot = dyck_to_ballot(path);
      c.expect(dyck_to_fc(path) == w && ballot_to_dyck(ballot) == path,
               [&] { return "path roundtrip fails at " + to_string(w); });
      c.expect(fc_to_ballot(w) == ballot,
               [&] { return "direct ballot differs at " + to_string(w); });
      c.expect(peaks(path).size() == w.size(),
               [&] { return "peak count differs at " + to_string(w); });
      if (diagram_to_ballot(fc_to_diagram(w)) != fc_to_ballot(w)) violated = true;
    }
    if (n >= 2) {
      c.expect(violated, [&] {
        return "diagram ballot agrees with the path ballot everywhere at n=" + std::to_string(n);
      });
    }
  }
  if (max_n >= 5) {
    const FCElement w = FCElement::validate(5, {{4, 5}, {3, 3}, {1, 1}});
    c.expect(to_string(fc_to_ballot(w)) == "+-++--++-+--",
             [&] { return "example ballot is " + to_string(fc_to_ballot(w)); });
    c.expect(diagram_to_ballot(fc_to_diagram(w)) != fc_to_ballot(w),
             [&] { return std::string("counterexample does not separate the readings"); });
  }
  for (int k = 1; k <= std::min(max_n + 1, 8); ++k) {
    std::set<std::vector<int>> seen;
    const auto all = enumerate_diagrams(k);
    for (const Diagram& d : all) seen.insert(diagram_to_ballot(d).signs());
    c.expect(seen.size() == all.size(), [&] {
      return "diagram ballots collide on " + std::to_string(k) + " strings";
    });
  }
  return std::move(c).finish();
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"fc_core", "enumeration, duality, shrink, slim split, descents, permutations", fc_core_suite},
      {"counting", "closed formulas, recurrences and brute-force counts", counting_suite},
      {"diagram", "enumeration, neutrality, row reconstruction, associativity", diagram_suite},
      {"bijection", "oracle agreement, roundtrips, uniqueness, products", bijection_suite},
      {"tl_algebra", "relations, associativity, descents, census", tl_algebra_suite},
      {"lattice", "path and ballot roundtrips, counterexample sweep", lattice_suite},
  };
  return all;
}

const Suite* find_suite(std::string_view name) {
  for (const Suite& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace tlfc::cli
