#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "tlfc/bijection.hpp"
#include "tlfc/error.hpp"
#include "tlfc/permutation.hpp"
#include "tlfc/tl_algebra.hpp"

using namespace tlfc;

namespace {

FCElement fc(int n, std::vector<Block> blocks) { return FCElement::validate(n, std::move(blocks)); }
Dot top(int x) { return {Row::Top, x}; }
Dot bot(int x) { return {Row::Bottom, x}; }

}  // namespace

TEST_CASE("delta polynomials") {
  const DeltaPoly one = DeltaPoly::monomial(0);
  const DeltaPoly d = DeltaPoly::monomial(1);
  CHECK(to_string(one + d) == "delta + 1");
  CHECK(to_string((one + d) * (one + d)) == "delta^2 + 2*delta + 1");
  CHECK(to_string(DeltaPoly{}) == "0");
  CHECK((d + DeltaPoly::monomial(1, -1)).is_zero());
  CHECK(DeltaPoly::monomial(3, 0).is_zero());
  CHECK(to_string(DeltaPoly::monomial(2, -3) + one) == "-3*delta^2 + 1");
  CHECK((one + d).coefficient(1) == 1);
  CHECK((one + d).coefficient(5) == 0);
}

TEST_CASE("worked monomial products") {
  const FCElement a = fc(4, {{1, 4}}), b = fc(4, {{4, 4}, {3, 3}, {1, 1}});
  const MonomialProduct ab = monomial_product(a, b);
  CHECK(ab.loops == 1);
  CHECK(ab.element == fc(4, {{3, 3}, {1, 1}}));
  const MonomialProduct ba = monomial_product(b, a);
  CHECK(ba.loops == 1);
  CHECK(ba.element == fc(4, {{4, 4}, {1, 1}}));
  for (const FCElement& w : enumerate_fc(4)) {
    const MonomialProduct m = monomial_product(w, FCElement::identity(4));
    CHECK(m.element == w);
    CHECK(m.loops == 0);
  }
  CHECK_THROWS_AS(monomial_product(a, fc(3, {})), Error);
}

TEST_CASE("linear combinations") {
  const TLElement e1 = TLElement::generator(3, 1), e2 = TLElement::generator(3, 2);
  CHECK(multiply(e1, e1) == TLElement::monomial(fc(3, {{1, 1}}), DeltaPoly::monomial(1)));
  CHECK(multiply(e1 + e2, TLElement::one(3)) == e1 + e2);
  CHECK(multiply(multiply(e1, e2), e1) == e1);
  const TLElement sum = e1 + e2;
  CHECK(to_string(multiply(sum, sum)) ==
        "delta * n=3:[1,1] + 1 * n=3:[1,2] + delta * n=3:[2,2] + 1 * n=3:[2,2][1,1]");
  CHECK(to_string(TLElement(3)) == "0");
  CHECK_THROWS_AS(e1 + TLElement::generator(4, 1), Error);
  CHECK_THROWS_AS(multiply(e1, TLElement::one(2)), Error);
  CHECK_THROWS_AS(TLElement::generator(3, 4), Error);
  CHECK((e1 + TLElement::monomial(fc(3, {{1, 1}}), DeltaPoly::monomial(0, -1))).is_zero());
}

TEST_CASE("relations") {
  for (int n = 1; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      const TLElement ei = TLElement::generator(n, i);
      CHECK(multiply(ei, ei) == TLElement::monomial(fc(n, {{i, i}}), DeltaPoly::monomial(1)));
      for (int j = 1; j <= n; ++j) {
        const TLElement ej = TLElement::generator(n, j);
        if (std::abs(i - j) == 1) CHECK(multiply(multiply(ei, ej), ei) == ei);
        if (std::abs(i - j) > 1) CHECK(multiply(ei, ej) == multiply(ej, ei));
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(99);
  long triples = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_fc(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 1700; ++t, ++triples) {
      const TLElement a = TLElement::monomial(all[pick(rng)]);
      const TLElement b = TLElement::monomial(all[pick(rng)]);
      const TLElement c = TLElement::monomial(all[pick(rng)]);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
  CHECK(triples >= 10000);
}

TEST_CASE("monomial products agree with word rewriting") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_fc(n);
    for (const FCElement& w1 : all) {
      for (const FCElement& w2 : all) {
        std::vector<int> word = canonical_word(w1);
        const std::vector<int> tail = canonical_word(w2);
        word.insert(word.end(), tail.begin(), tail.end());
        const testing::RewriteResult r = testing::rewrite_word(n, word);
        const MonomialProduct m = monomial_product(w1, w2);
        CHECK(r.element == m.element);
        CHECK(r.loops == m.loops);
      }
    }
  }
}

TEST_CASE("descents from diagrams") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      const DiagramDescents d = descents_from_diagram(Diagram::generator(n + 1, i));
      CHECK(d.left == GeneratorSet{i});
      CHECK(d.right == GeneratorSet{i});
    }
  }
  const DiagramDescents id = descents_from_diagram(Diagram::identity(4));
  CHECK(id.left.empty());
  CHECK(id.right.empty());
  const DiagramDescents ex = descents_from_diagram(fc_to_diagram(fc(5, {{4, 5}, {3, 3}, {1, 1}})));
  CHECK(ex.left == GeneratorSet{1, 4});
  CHECK(ex.right == GeneratorSet{1, 3, 5});
  for (int n = 1; n <= 8; ++n) {
    for (const FCElement& w : enumerate_fc(n)) {
      if (w.is_identity()) continue;
      const DiagramDescents d = descents_from_diagram(fc_to_diagram(w));
      const Permutation perm = to_permutation(w);
      CHECK(d.left == left_descents(w));
      CHECK(d.right == right_descents(w));
      CHECK(d.left == oracle_left_descents(perm));
      CHECK(d.right == oracle_right_descents(perm));
    }
  }
}

TEST_CASE("equivalence keys") {
  const Diagram d = fc_to_diagram(fc(3, {{2, 2}, {1, 1}}));
  CHECK(equivalence_key(d) == std::vector<Arrow>{{top(1), bot(3)}, {top(4), bot(4)}});
  CHECK(key_to_string(equivalence_key(d)) == "1-3',4-4'");
  CHECK(key_to_string({}) == "-");
}

TEST_CASE("census examples") {
  const auto one = census(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size == 1);
  BigCount total = 0;
  for (const CensusClass& c : census(2, 1)) total += c.size;
  CHECK(total == 3);
  total = 0;
  for (const CensusClass& c : census(4, 2)) total += c.size;
  CHECK(total == 20);
}

TEST_CASE("census classes match their completions") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<Arrow>, BigCount> recount;
    for (const Diagram& d : enumerate_diagrams(n + 1)) ++recount[equivalence_key(d)];
    for (int p = 0; p <= n; ++p) {
      BigCount total = 0;
      for (const CensusClass& c : census(n, p)) {
        total += c.size;
        CHECK(c.size == recount[c.key]);
        CHECK(c.size == c.catalan_product);
        CHECK(completion_count(n + 1, c.key) == c.catalan_product);
      }
      CHECK(total == narayana(n, p));
    }
  }
}
