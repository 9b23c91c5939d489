#include <doctest.h>

#include "oracles.hpp"
#include "tlfc/counting.hpp"
#include "tlfc/fc_element.hpp"

using namespace tlfc;
using tlfc::testing::brute_count;

namespace {

int first_i(const FCElement& w) { return w.is_identity() ? 0 : w.blocks().front().i; }
int last_j(const FCElement& w) { return w.is_identity() ? 0 : w.blocks().back().j; }
int size_of(const FCElement& w) { return static_cast<int>(w.size()); }

}  // namespace

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(9) == 4862);
  CHECK(catalan(15) == 9694845);
  CHECK(catalan(-1) == 0);
  for (int m = 0; m <= 40; ++m) CHECK(catalan(m) * (m + 1) == binomial(2 * m, m));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));
}

TEST_CASE("narayana") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(narayana(n, 0) == 1);
    CHECK(narayana(n, n) == 1);
  }
  CHECK(brute_count(4, [](const FCElement& w) { return w.size() == 2; }) == 20);
  CHECK(narayana(4, 2) == 20);
  CHECK(narayana(-1, 0) == 0);
  CHECK(narayana(3, 4) == 0);
  for (int n = 0; n <= 20; ++n) {
    BigCount row = 0;
    for (int p = 0; p <= n; ++p) {
      row += narayana(n, p);
      CHECK(narayana(n, p) == narayana(n, n - p));
    }
    CHECK(row == catalan(n + 1));
  }
}

TEST_CASE("catalan triangle by first and last generator") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(triangle_start(n, 1) == n);
    CHECK(triangle_start(n, n) == catalan(n));
  }
  CHECK(brute_count(5, [](const FCElement& w) { return first_i(w) == 3; }) == 28);
  CHECK(triangle_start(5, 3) == 28);
  CHECK(brute_count(5, [](const FCElement& w) { return last_j(w) == 5; }) == 5);
  CHECK(triangle_end(5, 5) == 5);
  CHECK(triangle_end(5, 1) == triangle_start(5, 5));
  CHECK(brute_count(4, [](const FCElement& w) { return last_j(w) == 2; }) == 14);
  CHECK(triangle_end(4, 2) == 14);
  CHECK(triangle_start(5, 0) == 1);
  CHECK(triangle_end(5, 0) == 0);
  for (int n = 1; n <= 15; ++n) {
    BigCount row = 0;
    for (int i = 0; i <= n; ++i) {
      row += triangle_start(n, i);
      if (i >= 1) CHECK(triangle_start(n, i) == triangle_start(n, i - 1) + triangle_start(n - 1, i));
    }
    CHECK(row == catalan(n + 1));
  }
}

TEST_CASE("two-parameter counts") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      CHECK(count_first_block(n, i, i) == catalan(i));
      CHECK(count_first_block(n, 1, i) == 1);
      CHECK(count_start_end(n, 1, i).value == 1);
      for (int p = i + 1; p <= n; ++p) CHECK(count_start_size(n, i, p) == 0);
    }
  }
  CHECK(brute_count(5, [](const FCElement& w) {
          return !w.is_identity() && w.blocks().front() == Block{2, 4};
        }) == 4);
  CHECK(count_first_block(5, 2, 4) == 4);
  CHECK(brute_count(5, [](const FCElement& w) {
          return !w.is_identity() && w.blocks().back() == Block{2, 4};
        }) == 4);
  CHECK(count_last_block(5, 2, 4) == 4);
  CHECK(count_last_block(5, 5, 5) == 1);
  CHECK(brute_count(4, [](const FCElement& w) {
          return !w.is_identity() && w.blocks().back() == Block{1, 1};
        }) == 14);
  CHECK(count_last_block(4, 1, 1) == 14);
  CHECK(brute_count(5, [](const FCElement& w) { return first_i(w) == 3 && size_of(w) == 2; }) == 15);
  CHECK(count_start_size(5, 3, 2) == 15);
  CHECK(count_start_size(4, 4, 1) == 1);
  CHECK(brute_count(5, [](const FCElement& w) { return first_i(w) == 3 && last_j(w) == 2; }) == 9);
  CHECK(count_start_end(5, 3, 2).value == 9);
  CHECK(count_start_end(5, 3, 2).closed_form);
  CHECK(count_start_end(5, 2, 4).value == 2);
  CHECK_FALSE(count_start_end(5, 4, 1).closed_form);
}

TEST_CASE("every closed formula matches the filtered enumeration") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_fc(n);
    auto count = [&](auto&& keep) {
      BigCount c = 0;
      for (const FCElement& w : all) {
        if (keep(w)) ++c;
      }
      return c;
    };
    for (int a = 0; a <= n; ++a) {
      CHECK(narayana(n, a) == count([&](const FCElement& w) { return size_of(w) == a; }));
      CHECK(triangle_start(n, a) == count([&](const FCElement& w) { return first_i(w) == a; }));
    }
    for (int a = 1; a <= n; ++a) {
      CHECK(triangle_end(n, a) == count([&](const FCElement& w) { return last_j(w) == a; }));
      for (int b = 1; b <= n; ++b) {
        CHECK(count_first_block(n, a, b) == count([&](const FCElement& w) {
                return !w.is_identity() && w.blocks().front() == Block{a, b};
              }));
        CHECK(count_last_block(n, a, b) == count([&](const FCElement& w) {
                return !w.is_identity() && w.blocks().back() == Block{a, b};
              }));
        CHECK(count_start_size(n, a, b) ==
              count([&](const FCElement& w) { return first_i(w) == a && size_of(w) == b; }));
        CHECK(count_size_end(n, a, b) ==
              count([&](const FCElement& w) { return size_of(w) == a && last_j(w) == b; }));
        CHECK(count_start_end(n, a, b).value ==
              count([&](const FCElement& w) { return first_i(w) == a && last_j(w) == b; }));
        CHECK(count_start_end_exact(n, a, b) == count_start_end(n, a, b).value);
      }
    }
  }
}

TEST_CASE("recurrences reproduce the closed forms") {
  for (int n = 0; n <= 12; ++n) {
    for (int p = 0; p <= n; ++p) CHECK(recurrence::narayana(n, p) == narayana(n, p));
    for (int i = 0; i <= n; ++i) {
      CHECK(recurrence::triangle_start(n, i) == triangle_start(n, i));
      CHECK(recurrence::triangle_start_mixed(n, i) == triangle_start(n, i));
    }
  }
}

TEST_CASE("binomial identity") {
  CHECK(appendix_binomial_identity(7, 0).lhs == 1);
  CHECK(appendix_binomial_identity(7, 0).rhs == 1);
  CHECK(appendix_binomial_identity_check(6, 3));
  CHECK(appendix_binomial_identity_check(10, 7));
  for (int n = 0; n <= 30; ++n) {
    for (int p = 0; p <= n; ++p) CHECK(appendix_binomial_identity_check(n, p));
  }
}
