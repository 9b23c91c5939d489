#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tlfc {

/// Exact nonnegative counts. Every rational prefactor below is evaluated by
/// exact division; a nonzero remainder throws Error{Internal}.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k); zero outside 0 <= k <= n.
BigCount binomial(long n, long k);

/// Catalan number C_m from C_{m+1} = sum_{k=0}^{m} C_k C_{m-k}, C_0 = 1.
/// Memoized; safe to call concurrently.
BigCount catalan(int m);

// Counts over W^c(A_n). Out-of-range parameters give 0.

/// Elements of size p: (1/(p+1)) C(n,p) C(n+1,p).
BigCount narayana(int n, int p);

/// Elements whose canonical word starts with sigma_i (i_1 = i); i = 0 counts
/// the identity alone.
BigCount triangle_start(int n, int i);
/// Elements whose canonical word ends with sigma_j (j_p = j).
BigCount triangle_end(int n, int j);

/// Elements with first block [i1, j1]; independent of n >= j1.
BigCount count_first_block(int n, int i1, int j1);
/// Elements with last block [ip, jp].
BigCount count_last_block(int n, int ip, int jp);

/// Elements of size p with i_1 = i.
BigCount count_start_size(int n, int i, int p);
/// Elements of size p with j_p = j.
BigCount count_size_end(int n, int p, int j);

struct StartEndCount {
  BigCount value;
  /// False when j < i - 1, where no closed formula is known and the value
  /// comes from an exact transfer count instead.
  bool closed_form = true;
};

/// Elements with i_1 = i and j_p = j.
StartEndCount count_start_end(int n, int i, int j);

/// Exact count of elements with i_1 = i and j_p = j by dynamic programming
/// over chains of standard pairs. Valid for every 1 <= i, j <= n.
BigCount count_start_end_exact(int n, int i, int j);

struct BinomialIdentity {
  BigRational lhs;  // sum_t (1/(t+1)) C(p,t) C(n-p,t)
  BigRational rhs;  // (1/(p+1)) C(n+1,p)
  bool holds() const { return lhs == rhs; }
};

BinomialIdentity appendix_binomial_identity(int n, int p);
bool appendix_binomial_identity_check(int n, int p);

/// Recurrence-side evaluations, independent of the closed forms above.
namespace recurrence {

/// Size counts from the thick/slim set partition:
///   N(n,p) = N(n-1,p) + N(n-1,p-1)
///            + sum_{r=1}^{p} sum_{i=1}^{n-1} N(n-i-1, r-1) N(i-1, p-r)
/// with N(n,p) = 0 for n < 0, p < 0 or p > n.
BigCount narayana(int n, int p);

/// Catalan triangle by ^iS_n = ^{i-1}S_n + ^iS_{n-1}, ^0S_n = 1.
BigCount triangle_start(int n, int i);

/// Catalan triangle via thick and slim elements:
///   ^iS_n = C_i + sum_{k=0}^{i-1} ^{i-k}S_{n-(k+1)} C_k.
BigCount triangle_start_mixed(int n, int i);

}  // namespace recurrence

}  // namespace tlfc
