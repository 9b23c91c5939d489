#include "tlfc/counting.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tlfc/error.hpp"

namespace tlfc {

namespace {

BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    fail(ErrorCode::Internal, "non-integral count " + num.str() + "/" + den.str());
  }
  return q;
}

}  // namespace

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;  // exact: result is C(n-k+t, t) after this step
  }
  return result;
}

BigCount catalan(int m) {
  if (m < 0) return 0;
  static std::mutex guard;
  static std::vector<BigCount> table{1};
  std::lock_guard lock(guard);
  while (static_cast<int>(table.size()) <= m) {
    const std::size_t next = table.size();  // computing C_next
    BigCount sum = 0;
    for (std::size_t k = 0; k < next; ++k) sum += table[k] * table[next - 1 - k];
    table.push_back(sum);
  }
  return table[static_cast<std::size_t>(m)];
}

BigCount narayana(int n, int p) {
  if (n < 0 || p < 0 || p > n) return 0;
  return exact_div(binomial(n, p) * binomial(n + 1, p), p + 1);
}

BigCount triangle_start(int n, int i) {
  if (n < 0 || i < 0 || i > n) return 0;
  return exact_div((n + 1 - i) * binomial(n + i, i), n + 1);
}

BigCount triangle_end(int n, int j) {
  if (n < 1 || j < 1 || j > n) return 0;
  return exact_div(j * binomial(2L * n - j + 1, n), n + 1);
}

BigCount count_first_block(int n, int i1, int j1) {
  if (i1 < 1 || i1 > j1 || j1 > n) return 0;
  return exact_div((j1 - i1 + 2) * binomial(j1 + i1 - 1, j1), j1 + 1);
}

BigCount count_last_block(int n, int ip, int jp) {
  if (ip < 1 || ip > jp || jp > n) return 0;
  return exact_div((jp - ip + 2) * binomial(2L * n - jp - ip + 1, n - jp), n - ip + 2);
}

BigCount count_start_size(int n, int i, int p) {
  if (i < 1 || i > n || p < 1 || p > n) return 0;
  return exact_div((n + 1 - i) * binomial(i - 1, p - 1) * binomial(n, p), n + 1 - p);
}

BigCount count_size_end(int n, int p, int j) {
  if (j < 1 || j > n || p < 1 || p > n) return 0;
  return exact_div(j * binomial(n - j, p - 1) * binomial(n, p), n + 1 - p);
}

BigCount count_start_end_exact(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) return 0;
  // chains[a][b]: number of block sequences whose first block is [a,b] and
  // whose last block ends at j.
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<BigCount>> chains(size, std::vector<BigCount>(size, 0));
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      BigCount total = b == j ? 1 : 0;
      for (int a2 = 1; a2 < a; ++a2) {
        for (int b2 = a2; b2 < b; ++b2) total += chains[a2][b2];
      }
      chains[a][b] = total;
    }
  }
  BigCount result = 0;
  for (int b = i; b <= n; ++b) result += chains[i][b];
  return result;
}

StartEndCount count_start_end(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) return {0, true};
  if (i <= j) return {binomial(n - j + i - 1, i - 1), true};
  if (j == i - 1) return {binomial(n, i - 1) - 1, true};
  return {count_start_end_exact(n, i, j), false};
}

BinomialIdentity appendix_binomial_identity(int n, int p) {
  BinomialIdentity out;
  out.lhs = 0;
  for (int t = 0; t <= p; ++t) {
    out.lhs += BigRational(binomial(p, t) * binomial(n - p, t), t + 1);
  }
  out.rhs = BigRational(binomial(n + 1, p), p + 1);
  return out;
}

bool appendix_binomial_identity_check(int n, int p) {
  return appendix_binomial_identity(n, p).holds();
}

namespace recurrence {

BigCount narayana(int n, int p) {
  if (n < 0 || p < 0 || p > n) return 0;
  const auto rows = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<BigCount>> table(rows);
  auto at = [&table](int a, int b) -> BigCount {
    if (a < 0 || b < 0 || b > a) return 0;
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int m = 0; m <= n; ++m) {
    table[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, 0);
    table[static_cast<std::size_t>(m)][0] = 1;
    for (int q = 1; q <= m; ++q) {
      BigCount value = at(m - 1, q) + at(m - 1, q - 1);
      for (int r = 1; r <= q; ++r) {
        for (int i = 1; i <= m - 1; ++i) value += at(m - i - 1, r - 1) * at(i - 1, q - r);
      }
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)] = value;
    }
  }
  return at(n, p);
}

BigCount triangle_start(int n, int i) {
  if (n < 0 || i < 0 || i > n) return 0;
  // row[k] holds ^kS_m for the current m.
  std::vector<BigCount> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m) + 1, 0);
    next[0] = 1;
    for (int k = 1; k <= m; ++k) {
      const BigCount above = k < m ? row[static_cast<std::size_t>(k)] : BigCount(0);
      next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k - 1)] + above;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

namespace {

BigCount mixed(int n, int i, std::map<std::pair<int, int>, BigCount>& memo) {
  if (n < 0 || i < 0 || i > n) return 0;
  if (i == 0) return 1;
  const auto key = std::make_pair(n, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigCount value = catalan(i);
  for (int k = 0; k <= i - 1; ++k) value += mixed(n - (k + 1), i - k, memo) * catalan(k);
  memo.emplace(key, value);
  return value;
}

}  // namespace

BigCount triangle_start_mixed(int n, int i) {
  std::map<std::pair<int, int>, BigCount> memo;
  return mixed(n, i, memo);
}

}  // namespace recurrence

}  // namespace tlfc
