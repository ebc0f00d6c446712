#pragma once

// Block-concatenation SSA codes.
//
// A block set of length-m words is usable for concatenation when no length-t
// window (t = ceil(m/3)) of one block is the reverse complement of a length-t
// window of another block, the same block included. Every concatenation of
// such blocks is then m-SSA.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssa/dna.hpp"
#include "ssa/errors.hpp"

namespace ssa {

enum class BlockMethod { exact, greedy, fixed };

inline const char* to_string(BlockMethod m) {
  switch (m) {
    case BlockMethod::exact: return "exact";
    case BlockMethod::greedy: return "greedy";
    case BlockMethod::fixed: return "fixed";
  }
  return "?";
}

inline BlockMethod parse_block_method(std::string_view s) {
  if (s == "exact") return BlockMethod::exact;
  if (s == "greedy") return BlockMethod::greedy;
  if (s == "fixed") return BlockMethod::fixed;
  throw parse_error("unknown block-set method '" + std::string(s) + "'");
}

constexpr std::size_t compatibility_window(std::size_t block_length) { return (block_length + 2) / 3; }

struct BlockSet {
  std::size_t block_length = 0;
  std::size_t window = 0;
  std::vector<DnaSeq> blocks;
  BlockMethod method = BlockMethod::fixed;

  std::size_t size() const noexcept { return blocks.size(); }
  friend bool operator==(const BlockSet&, const BlockSet&) = default;
};

/// No length-t window of x1 equals RC of a length-t window of x2. Symmetric.
inline bool blocks_compatible(BaseSpan x1, BaseSpan x2, std::size_t t) {
  if (x1.size() != x2.size()) throw std::invalid_argument("blocks_compatible: blocks differ in length");
  if (t == 0 || t > x1.size()) throw std::invalid_argument("blocks_compatible: window must be in 1..block length");
  for (std::size_t i = 0; i + t <= x1.size(); ++i) {
    for (std::size_t j = 0; j + t <= x2.size(); ++j) {
      bool rc = true;
      for (std::size_t s = 0; s < t && rc; ++s) rc = x1[i + s] == complement(x2[j + t - 1 - s]);
      if (rc) return false;
    }
  }
  return true;
}

namespace detail {

// Bit w of the mask is set when the t-mer with packed code w occurs in the
// block. With t <= 3 there are at most 64 t-mers.
inline std::uint64_t window_mask(BaseSpan block, std::size_t t) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + t <= block.size(); ++i) {
    mask |= std::uint64_t{1} << int_of_dna_rep(block.subspan(i, t));
  }
  return mask;
}

inline std::uint64_t rc_mask(std::uint64_t mask, std::size_t t) {
  std::uint64_t out = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << (2 * t)); ++w) {
    if ((mask >> w) & 1u) out |= std::uint64_t{1} << int_of_dna_rep(revcomp(dna_rep(w, t)));
  }
  return out;
}

inline BlockSet build_exact(std::size_t m) {
  // A family of blocks is pairwise (and self) compatible iff the union W of
  // their t-mers satisfies W ∩ RC(W) = ∅. Every such W sits inside a maximal
  // anti-RC t-mer alphabet U (one word from each RC pair, no palindromes), and
  // all blocks spelled from U form a compatible family. The maximum set is
  // therefore the largest "all blocks over U" family across the 2^pairs
  // choices of U; ties go to the lexicographically smallest block list.
  const std::size_t t = compatibility_window(m);
  const std::uint64_t tmers = std::uint64_t{1} << (2 * t);
  std::vector<std::uint64_t> rc_pair_members;
  for (std::uint64_t w = 0; w < tmers; ++w) {
    const std::uint64_t r = int_of_dna_rep(revcomp(dna_rep(w, t)));
    if (w < r) rc_pair_members.push_back(w);
  }

  const std::uint64_t words = std::uint64_t{1} << (2 * m);
  std::vector<std::uint64_t> masks(words);
  for (std::uint64_t w = 0; w < words; ++w) masks[w] = window_mask(dna_rep(w, m), t);

  std::vector<std::uint64_t> best;
  const std::uint64_t choices = std::uint64_t{1} << rc_pair_members.size();
  for (std::uint64_t choice = 0; choice < choices; ++choice) {
    std::uint64_t alphabet = 0;
    for (std::size_t b = 0; b < rc_pair_members.size(); ++b) {
      const std::uint64_t w = rc_pair_members[b];
      const std::uint64_t pick = ((choice >> b) & 1u) ? int_of_dna_rep(revcomp(dna_rep(w, t))) : w;
      alphabet |= std::uint64_t{1} << pick;
    }
    std::vector<std::uint64_t> family;
    for (std::uint64_t w = 0; w < words; ++w) {
      if ((masks[w] & ~alphabet) == 0) family.push_back(w);
    }
    if (family.size() > best.size() || (family.size() == best.size() && family < best)) {
      best = std::move(family);
    }
  }

  BlockSet out{m, t, {}, BlockMethod::exact};
  for (std::uint64_t w : best) out.blocks.push_back(dna_rep(w, m));
  return out;
}

inline BlockSet build_greedy(std::size_t m) {
  const std::size_t t = compatibility_window(m);
  BlockSet out{m, t, {}, BlockMethod::greedy};
  std::uint64_t chosen = 0;  // union of t-mers over chosen blocks
  const std::uint64_t words = std::uint64_t{1} << (2 * m);
  for (std::uint64_t w = 0; w < words; ++w) {
    DnaSeq block = dna_rep(w, m);
    const std::uint64_t mask = window_mask(block, t);
    // Compatible with itself and every chosen block.
    if ((mask & rc_mask(mask | chosen, t)) != 0) continue;
    chosen |= mask;
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace detail

inline constexpr std::size_t kMaxExactBlockLength = 6;
inline constexpr std::size_t kMaxGreedyBlockLength = 8;

/// exact: maximum-cardinality compatible set, m <= 6.
/// greedy: lexicographic first-fit maximal set, m <= 8.
inline BlockSet build_block_set(std::size_t m, BlockMethod method) {
  if (m == 0) throw std::invalid_argument("build_block_set: block length must be positive");
  switch (method) {
    case BlockMethod::exact:
      if (m > kMaxExactBlockLength) throw std::out_of_range("build_block_set: exact search needs m <= 6");
      return detail::build_exact(m);
    case BlockMethod::greedy:
      if (m > kMaxGreedyBlockLength) throw std::out_of_range("build_block_set: greedy search needs m <= 8");
      return detail::build_greedy(m);
    case BlockMethod::fixed: break;
  }
  throw std::invalid_argument("build_block_set: fixed sets are not searched");
}

/// The five-block m=2 set whose concatenations are all 3-SSA, in its
/// published order AA, CC, AC, CA, TC.
inline BlockSet benerjee_set() {
  using enum Base;
  return BlockSet{2, 1, {{A, A}, {C, C}, {A, C}, {C, A}, {T, C}}, BlockMethod::fixed};
}

inline DnaSeq block_encode(std::span<const std::size_t> message, const BlockSet& set) {
  DnaSeq out;
  out.reserve(message.size() * set.block_length);
  for (std::size_t idx : message) {
    if (idx >= set.blocks.size()) throw std::out_of_range("block_encode: block index out of range");
    out.append(set.blocks[idx]);
  }
  return out;
}

inline std::vector<std::size_t> block_decode(BaseSpan x, const BlockSet& set) {
  const std::size_t m = set.block_length;
  if (m == 0 || x.size() % m != 0) throw not_a_codeword("length is not a multiple of the block length");
  std::unordered_map<std::uint64_t, std::size_t> lookup;
  for (std::size_t i = 0; i < set.blocks.size(); ++i) lookup.emplace(int_of_dna_rep(set.blocks[i]), i);
  std::vector<std::size_t> out;
  out.reserve(x.size() / m);
  for (std::size_t pos = 0; pos < x.size(); pos += m) {
    auto it = lookup.find(int_of_dna_rep(x.subspan(pos, m)));
    if (it == lookup.end()) throw not_a_codeword("block at offset " + std::to_string(pos) + " is not in the set");
    out.push_back(it->second);
  }
  return out;
}

inline double block_code_rate(const BlockSet& set) {
  if (set.blocks.empty()) throw std::invalid_argument("block_code_rate: empty block set");
  return std::log2(static_cast<double>(set.blocks.size())) / static_cast<double>(set.block_length);
}

// Text serialisation: header "m t size method", then one block per line.

inline void write_block_set(std::ostream& os, const BlockSet& set) {
  os << set.block_length << ' ' << set.window << ' ' << set.blocks.size() << ' ' << to_string(set.method) << '\n';
  for (const auto& b : set.blocks) os << b.str() << '\n';
}

inline std::string serialize(const BlockSet& set) {
  std::ostringstream os;
  write_block_set(os, set);
  return os.str();
}

inline BlockSet read_block_set(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw parse_error("block set: missing header line");
  std::istringstream hs(header);
  BlockSet set;
  std::size_t size = 0;
  std::string method;
  std::string extra;
  if (!(hs >> set.block_length >> set.window >> size >> method) || (hs >> extra)) {
    throw parse_error("block set: header must be 'm t size method'");
  }
  set.method = parse_block_method(method);
  if (set.block_length == 0 || set.block_length > 32) throw parse_error("block set: m must be in 1..32");
  if (set.window == 0 || set.window > set.block_length) throw parse_error("block set: t must be in 1..m");
  if (set.method != BlockMethod::fixed && set.window != compatibility_window(set.block_length)) {
    throw parse_error("block set: t must equal ceil(m/3) for searched sets");
  }
  std::string line;
  while (set.blocks.size() < size && std::getline(is, line)) {
    DnaSeq block = DnaSeq::parse(line);
    if (block.size() != set.block_length) throw parse_error("block set: block length differs from m");
    set.blocks.push_back(std::move(block));
  }
  if (set.blocks.size() != size) throw parse_error("block set: fewer blocks than declared");
  while (std::getline(is, line)) {
    if (!line.empty() && line != "\r") throw parse_error("block set: trailing content after last block");
  }
  std::vector<std::uint64_t> codes;
  for (const auto& b : set.blocks) codes.push_back(int_of_dna_rep(b));
  std::sort(codes.begin(), codes.end());
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) throw parse_error("block set: duplicate block");
  if (set.method != BlockMethod::fixed) {
    if (!std::is_sorted(set.blocks.begin(), set.blocks.end())) throw parse_error("block set: blocks not sorted");
    for (const auto& x1 : set.blocks) {
      for (const auto& x2 : set.blocks) {
        if (!blocks_compatible(x1, x2, set.window)) throw parse_error("block set: incompatible blocks " + x1.str() + ", " + x2.str());
      }
    }
  }
  return set;
}

inline BlockSet parse_block_set(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_block_set(is);
}

}  // namespace ssa
