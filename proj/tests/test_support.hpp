#pragma once

// Test-only oracles. These work on plain strings with their own complement
// table so that they share no code path with the library under test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ssa/dna.hpp"

namespace ssa::test {

inline char complement_char(char c) {
  switch (c) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
  }
  return '?';
}

inline std::string rc_string(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = complement_char(c);
  return out;
}

/// Direct reading of the definition: for every k >= m, every pair of
/// non-overlapping length-k windows, is one the reverse complement of the
/// other?
inline bool naive_is_m_ssa(const std::string& x, std::size_t m) {
  const std::size_t n = x.size();
  for (std::size_t k = m; 2 * k <= n; ++k) {
    for (std::size_t p = 0; p + k <= n; ++p) {
      for (std::size_t q = 0; q + k <= n; ++q) {
        const bool disjoint = p + k <= q || q + k <= p;
        if (disjoint && x.substr(p, k) == rc_string(x.substr(q, k))) return false;
      }
    }
  }
  return true;
}

/// All strings of length n over "ATCG", in A < T < C < G order.
inline std::vector<std::string> all_words(std::size_t n, const std::string& alphabet = "ATCG") {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out) {
      for (char c : alphabet) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

inline std::size_t count_char(const std::string& s, char c) {
  std::size_t k = 0;
  for (char x : s) k += x == c;
  return k;
}

/// Composition membership straight from the window definition.
inline bool naive_member(const std::string& x, std::size_t m, std::size_t k) {
  if (x.size() < m) return count_char(x, 'T') <= k - 1;
  for (std::size_t i = 0; i + m <= x.size(); ++i) {
    const std::string w = x.substr(i, m);
    if (count_char(w, 'A') < k || count_char(w, 'T') > k - 1) return false;
  }
  return true;
}

inline DnaSeq random_seq(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<unsigned> d(0, 3);
  DnaSeq s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(base_from_digit(d(rng)));
  return s;
}

inline DnaSeq seq(const std::string& s) { return DnaSeq::parse(s); }

}  // namespace ssa::test
