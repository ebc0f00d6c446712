#pragma once

// Ground-truth checks for secondary-structure avoidance.
//
// A sequence x is m-SSA when no two non-overlapping windows of any length
// k >= m are reverse complements of each other. A violating pair of length
// k > m always contains one of length exactly m (a prefix of the first window
// against the matching suffix of the second), so every check here runs at a
// single window length.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssa/dna.hpp"

namespace ssa {

/// x[first, first+length) == RC(x[second, second+length)), first + length <= second.
struct RcPairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t length = 0;

  friend bool operator==(const RcPairWitness&, const RcPairWitness&) = default;
};

/// x[first..last] (inclusive) equals (ab)^((last-first+1)/2).
struct Period2Run {
  std::size_t first = 0;
  std::size_t last = 0;
  Base a = Base::A;
  Base b = Base::A;

  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Period2Run&, const Period2Run&) = default;
};

namespace detail {

inline void require_window_length(std::size_t len) {
  if (len == 0) throw std::invalid_argument("window length must be at least 1");
}

inline bool window_is_rc_of(BaseSpan x, std::size_t p, std::size_t q, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    if (x[p + t] != complement(x[q + len - 1 - t])) return false;
  }
  return true;
}

// 2-bit packed code of every length-k window (k <= 32), and the code of the
// reverse complement of every such window, both computed by rolling update.
struct PackedWindows {
  std::vector<std::uint64_t> forward;
  std::vector<std::uint64_t> reverse;
};

inline PackedWindows pack_windows(BaseSpan x, std::size_t k) {
  PackedWindows out;
  if (k == 0 || k > 32 || x.size() < k) return out;
  const std::size_t count = x.size() - k + 1;
  const std::uint64_t mask = k == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * k)) - 1;
  const unsigned top = static_cast<unsigned>(2 * (k - 1));
  out.forward.resize(count);
  out.reverse.resize(count);
  std::uint64_t fwd = 0;
  std::uint64_t rev = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t d = digit(x[i]);
    fwd = ((fwd << 2) | d) & mask;
    rev = (rev >> 2) | ((d ^ 1u) << top);
    if (i + 1 >= k) {
      out.forward[i + 1 - k] = fwd;
      out.reverse[i + 1 - k] = rev;
    }
  }
  return out;
}

}  // namespace detail

/// Reference all-pairs search. Returns the witness with the lexicographically
/// smallest (first, second); O(n^2 * len).
inline std::optional<RcPairWitness> find_rc_pair_quadratic(BaseSpan x, std::size_t len) {
  detail::require_window_length(len);
  const std::size_t n = x.size();
  if (n < 2 * len) return std::nullopt;
  for (std::size_t p = 0; p + 2 * len <= n; ++p) {
    for (std::size_t q = p + len; q + len <= n; ++q) {
      if (detail::window_is_rc_of(x, p, q, len)) return RcPairWitness{p, q, len};
    }
  }
  return std::nullopt;
}

/// Indexed search: every window is keyed by a packed 2-bit code and the
/// (key, start) pairs are sorted, so the smallest partner start for a given
/// first window is one binary search away. Windows longer than 32 symbols are
/// keyed by a 32-symbol sub-window and verified on hit. Returns the same
/// witness as find_rc_pair_quadratic.
inline std::optional<RcPairWitness> find_rc_pair(BaseSpan x, std::size_t len) {
  detail::require_window_length(len);
  const std::size_t n = x.size();
  if (n < 2 * len) return std::nullopt;

  const std::size_t key_len = std::min<std::size_t>(len, 32);
  const auto packed = detail::pack_windows(x, key_len);
  const std::size_t windows = n - len + 1;
  // For a window starting at q the key is the code of its last key_len
  // symbols; RC(window at p) ends with RC of the first key_len symbols of p.
  const std::size_t key_shift = len - key_len;

  std::vector<std::pair<std::uint64_t, std::size_t>> index;
  index.reserve(windows);
  for (std::size_t q = len; q < windows; ++q) index.emplace_back(packed.forward[q + key_shift], q);
  std::sort(index.begin(), index.end());

  for (std::size_t p = 0; p + 2 * len <= n; ++p) {
    const std::uint64_t want = packed.reverse[p];
    auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(want, p + len));
    for (; it != index.end() && it->first == want; ++it) {
      if (key_len == len || detail::window_is_rc_of(x, p, it->second, len)) {
        return RcPairWitness{p, it->second, len};
      }
    }
  }
  return std::nullopt;
}

/// True iff x has no reverse-complement pair of non-overlapping windows of
/// length >= m. Vacuously true when m > length(x).
inline bool is_m_ssa(BaseSpan x, std::size_t m) {
  detail::require_window_length(m);
  return !find_rc_pair(x, m).has_value();
}

/// Earliest start i at which a period-2 stretch (ab)^t with 2t >= min_len
/// begins, extended to its maximal even length at that start. a == b counts
/// (A^4 = (AA)^2).
inline std::optional<Period2Run> find_period2_run(BaseSpan x, std::size_t min_len) {
  if (min_len < 2) throw std::invalid_argument("period-2 run length must be at least 2");
  const std::size_t n = x.size();
  if (n < min_len) return std::nullopt;
  // ext[i]: number of consecutive positions k >= i with x[k] == x[k+2].
  std::vector<std::size_t> ext(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) {
    ext[k] = (k + 2 < n && x[k] == x[k + 2]) ? ext[k + 1] + 1 : 0;
  }
  for (std::size_t i = 0; i + min_len <= n; ++i) {
    std::size_t stretch = std::min(ext[i] + 2, n - i);
    stretch -= stretch % 2;
    if (stretch >= min_len) return Period2Run{i, i + stretch - 1, x[i], x[i + 1]};
  }
  return std::nullopt;
}

/// A set of length-m words containing no word together with its reverse
/// complement (a word equal to its own reverse complement is excluded).
struct AntiRcSet {
  std::size_t m = 0;
  std::vector<DnaSeq> members;

  std::size_t size() const noexcept { return members.size(); }
};

inline constexpr std::size_t kMaxExhaustiveBlock = 8;

/// Maximum anti-RC set: from every RC pair {w, RC(w)} with w != RC(w) keep
/// the lexicographically smaller word. Exhaustive over 4^m words, m <= 8.
inline AntiRcSet max_anti_rc_set(std::size_t m) {
  if (m == 0 || m > kMaxExhaustiveBlock) {
    throw std::out_of_range("max_anti_rc_set: m must be in 1..8");
  }
  AntiRcSet out{m, {}};
  const std::uint64_t total = std::uint64_t{1} << (2 * m);
  for (std::uint64_t w = 0; w < total; ++w) {
    DnaSeq word = dna_rep(w, m);
    if (w < int_of_dna_rep(revcomp(word))) out.members.push_back(std::move(word));
  }
  return out;
}

struct CapacityBound {
  std::size_t m = 0;
  std::size_t anti_rc_size = 0;
  double bits_per_nt = 0.0;          // (1/m) log2 |anti-RC set|
  double trivial_bits_per_nt = 0.0;  // (1/m) log2 (4^m / 2)
};

inline CapacityBound capacity_upper_bound(std::size_t m) {
  const AntiRcSet set = max_anti_rc_set(m);
  const double md = static_cast<double>(m);
  return CapacityBound{m, set.size(), std::log2(static_cast<double>(set.size())) / md, (2.0 * md - 1.0) / md};
}

}  // namespace ssa
