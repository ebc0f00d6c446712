#pragma once

// Symbol-composition constrained codes.
//
// C_n(m, k): length-n words in which every length-m window holds at least k
// A's and at most k-1 T's. Such a word is m-SSA: the reverse complement of a
// window with k A's holds k T's and so cannot occur.
//
// For k = 1 the code lives over {A, C, G} and "every m-window contains an A"
// is the same as "no run of C/G longer than m-1". That run length is the
// whole state of an enumerative codec over the lexicographic order A < C < G.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssa/dna.hpp"
#include "ssa/errors.hpp"

namespace ssa {

using BigInt = boost::multiprecision::cpp_int;

/// Window rule above; strings shorter than m only need the T budget.
inline bool is_member(BaseSpan x, std::size_t m, std::size_t k) {
  if (k == 0 || k > m) throw std::invalid_argument("is_member: need 1 <= k <= m");
  std::size_t a_count = 0;
  std::size_t t_count = 0;
  if (x.size() < m) {
    for (Base b : x) t_count += b == Base::T;
    return t_count <= k - 1;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    a_count += x[i] == Base::A;
    t_count += x[i] == Base::T;
    if (i >= m) {
      a_count -= x[i - m] == Base::A;
      t_count -= x[i - m] == Base::T;
    }
    if (i + 1 >= m && (a_count < k || t_count > k - 1)) return false;
  }
  return true;
}

/// |C_0(m)| .. |C_n_max(m)| for k = 1: 3^i below m, then
/// c[n] = sum_{j<m} 2^j c[n-j-1].
inline std::vector<BigInt> count_sequence(std::size_t m, std::size_t n_max) {
  if (m == 0) throw std::invalid_argument("count_sequence: m must be positive");
  std::vector<BigInt> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n < m) {
      c[n] = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n));
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < m; ++j) sum += c[n - j - 1] << j;
    c[n] = std::move(sum);
  }
  return c;
}

inline BigInt count(std::size_t n, std::size_t m) { return count_sequence(m, n).back(); }

/// Cardinalities and completion counts for the k = 1 enumerative codec.
///
/// completions(r, len) is the number of ways to append `len` symbols to a word
/// whose trailing C/G run has length r (0 <= r < m) without creating a run
/// of length m.
class CountTable {
 public:
  CountTable(std::size_t m, std::size_t n_max) : m_(m), n_max_(n_max), counts_(count_sequence(m, n_max)) {
    completions_.assign(m_, std::vector<BigInt>(n_max_ + 1));
    for (std::size_t r = 0; r < m_; ++r) completions_[r][0] = 1;
    for (std::size_t len = 1; len <= n_max_; ++len) {
      for (std::size_t r = 0; r < m_; ++r) {
        BigInt v = completions_[0][len - 1];
        if (r + 1 < m_) v += completions_[r + 1][len - 1] * 2;
        completions_[r][len] = std::move(v);
      }
    }
  }

  std::size_t window() const noexcept { return m_; }
  std::size_t max_length() const noexcept { return n_max_; }

  const BigInt& count(std::size_t n) const { return counts_.at(n); }
  const BigInt& completions(std::size_t run, std::size_t len) const { return completions_.at(run).at(len); }

  /// Position of x among the members of C_{|x|}(m) in A < C < G order.
  BigInt rank(BaseSpan x) const {
    check_length(x.size());
    if (!is_member(x, m_, 1)) throw not_a_codeword("word violates the composition constraint");
    BigInt idx = 0;
    std::size_t run = 0;
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
      const std::size_t rem = x.size() - pos - 1;
      for (Base s : kOrder) {
        if (s == x[pos]) break;
        if (const auto next = successor(run, s); next < m_) idx += completions_[next][rem];
      }
      run = successor(run, x[pos]);
    }
    return idx;
  }

  DnaSeq unrank(BigInt idx, std::size_t n) const {
    check_length(n);
    if (idx < 0 || idx >= counts_[n]) throw std::out_of_range("unrank: index outside [0, count)");
    DnaSeq out;
    out.reserve(n);
    std::size_t run = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t rem = n - pos - 1;
      for (Base s : kOrder) {
        const auto next = successor(run, s);
        if (next >= m_) continue;
        const BigInt& block = completions_[next][rem];
        if (idx < block) {
          out.push_back(s);
          run = next;
          break;
        }
        idx -= block;
      }
    }
    return out;
  }

 private:
  static constexpr std::array<Base, 3> kOrder = {Base::A, Base::C, Base::G};

  std::size_t successor(std::size_t run, Base s) const noexcept {
    if (s == Base::A) return 0;
    if (s == Base::T) return m_;  // never allowed
    return run + 1;
  }

  void check_length(std::size_t n) const {
    if (n > n_max_) throw std::out_of_range("CountTable: length exceeds table size");
  }

  std::size_t m_;
  std::size_t n_max_;
  std::vector<BigInt> counts_;
  std::vector<std::vector<BigInt>> completions_;
};

inline BigInt rank(BaseSpan x, std::size_t m) { return CountTable(m, x.size()).rank(x); }

inline DnaSeq unrank(const BigInt& idx, std::size_t n, std::size_t m) { return CountTable(m, n).unrank(idx, n); }

struct CharRoot {
  std::size_t m = 0;
  double lambda = 0.0;
  double rate = 0.0;  // log2(lambda), bits/nt
  double residual = 0.0;
};

/// h(x) = x^m - sum_{j<m} 2^j x^(m-1-j), the characteristic polynomial of
/// the k = 1 count recurrence.
inline double char_poly(std::size_t m, double x) {
  double h = 1.0;  // Horner over coefficients 1, -1, -2, -4, ...
  double coeff = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    h = h * x - coeff;
    coeff *= 2.0;
  }
  return h;
}

/// Largest real root of char_poly by bisection. h < 0 just below 2 and
/// h(3) = 2^m > 0, and x^-m h(x) is increasing for x > 0, so the bracket holds
/// exactly one root.
inline CharRoot char_root(std::size_t m) {
  if (m < 2) throw std::invalid_argument("char_root: m must be at least 2");
  double lo = 2.0 - 1e-3;
  double hi = 3.0;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (char_poly(m, mid) < 0.0 ? lo : hi) = mid;
  }
  const double lambda = std::abs(char_poly(m, lo)) <= std::abs(char_poly(m, hi)) ? lo : hi;
  return CharRoot{m, lambda, std::log2(lambda), std::abs(char_poly(m, lambda))};
}

/// Exact quotient num/den as a double, for operands far beyond double range.
inline double big_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("big_ratio: zero denominator");
  const unsigned shift = 64;
  const BigInt scaled = (num << shift) / den;
  return std::ldexp(scaled.convert_to<double>(), -static_cast<int>(shift));
}

/// count(n+1, m) / count(n, m); tends to the characteristic root.
inline double rate_convergence(std::size_t m, std::size_t n) {
  if (n < m) throw std::invalid_argument("rate_convergence: need n >= m");
  const auto c = count_sequence(m, n + 1);
  return big_ratio(c[n + 1], c[n]);
}

inline constexpr std::size_t kMaxBruteLength = 12;

/// |C_n(m, k)| by enumerating all 4^n words, n <= 12.
inline std::uint64_t brute_count(std::size_t n, std::size_t m, std::size_t k) {
  if (n > kMaxBruteLength) throw std::out_of_range("brute_count: n must be at most 12");
  if (k == 0 || k > m) throw std::invalid_argument("brute_count: need 1 <= k <= m");
  std::vector<Base> word(n, Base::A);
  std::uint64_t hits = 0;
  while (true) {
    hits += is_member(word, m, k);
    // Odometer increment, last position fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (word[pos] != Base::G) {
        word[pos] = base_from_digit(digit(word[pos]) + 1u);
        break;
      }
      word[pos] = Base::A;
      if (pos == 0) return hits;
    }
    if (n == 0) return hits;
  }
}

}  // namespace ssa
