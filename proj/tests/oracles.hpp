// Brute-force reference computations, deliberately independent of the library algorithms.
#ifndef MODSPRINGER_TESTS_ORACLES_HPP
#define MODSPRINGER_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Parts = std::vector<int>;  // weakly decreasing, no zeros

inline std::vector<Parts> all_partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline bool dominated(const Parts& p, const Parts& q) {
  long a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    a += i < p.size() ? p[i] : 0;
    b += i < q.size() ? q[i] : 0;
    if (a > b) return false;
  }
  return true;
}

// B, D: even parts with even multiplicity. C: odd parts with even multiplicity. A: anything.
inline bool valid(const Parts& p, char family) {
  if (family == 'A') return true;
  const int restricted = family == 'C' ? 1 : 0;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == restricted && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

// The unique dominance-maximum of the valid partitions below p; nullopt if no unique maximum exists.
inline std::optional<Parts> brute_collapse(const Parts& p, char family, const std::vector<Parts>& universe) {
  std::vector<Parts> below;
  for (const auto& q : universe)
    if (valid(q, family) && dominated(q, p)) below.push_back(q);
  for (const auto& m : below)
    if (std::all_of(below.begin(), below.end(), [&](const Parts& q) { return dominated(q, m); })) return m;
  return std::nullopt;
}

// Euler's pentagonal recurrence.
inline std::vector<Int> partition_numbers(int n) {
  std::vector<Int> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = k % 2 ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p;
}

// Partitions with no part divisible by ell (Glaisher: equinumerous with ell-regular partitions).
inline std::vector<Int> no_multiple_of_ell(int n, int ell) {
  std::vector<Int> c(n + 1);
  c[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (part % ell == 0) continue;
    for (int m = part; m <= n; ++m) c[m] += c[m - part];
  }
  return c;
}

inline std::vector<Int> convolve_self(const std::vector<Int>& a) {
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * a[j];
  return r;
}

inline Int bipartitions(int n, int ell = 0) {
  return convolve_self(ell ? no_multiple_of_ell(n, ell) : partition_numbers(n))[n];
}

// Lusztig's count of pairs for Sp(2n): sum over k of |Bipart(n - k(k+1)/2)|.
inline Int sp_pair_count(int n) {
  Int s = 0;
  for (int k = 0; k * (k + 1) / 2 <= n; ++k) s += bipartitions(n - k * (k + 1) / 2);
  return s;
}

inline Int hook_degree(const Parts& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  Int num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  Int den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

// ell-core by repeatedly removing rim hooks of length ell, via an abacus.
inline Parts core(const Parts& p, int ell) {
  const int len = static_cast<int>(p.size());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(p[i] + (len - 1 - i));
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto& b : beta)
      if (b >= ell && std::find(beta.begin(), beta.end(), b - ell) == beta.end()) {
        b -= ell;
        moved = true;
      }
  }
  std::sort(beta.rbegin(), beta.rend());
  Parts out;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) out.push_back(part);
  }
  return out;
}

}  // namespace oracle

#endif
