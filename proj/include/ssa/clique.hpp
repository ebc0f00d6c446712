#pragma once

// Maximum clique by branch and bound over dense bitset adjacency, with a
// greedy-colouring upper bound. Candidates are expanded in ascending vertex
// order and only strictly larger cliques replace the incumbent, so the result
// is the lexicographically smallest maximum clique (as a sorted vertex list).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ssa {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t bits() const noexcept { return bits_; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Lowest set index, or bits() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return bits_;
  }

  /// Lowest set index strictly greater than `i`, or bits().
  std::size_t next(std::size_t i) const {
    ++i;
    if (i >= bits_) return bits_;
    std::size_t w = i / 64;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return bits_;
      cur = words_[w];
    }
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t bits_ = 0;
};

/// Undirected graph on vertices 0..n-1. Self loops are ignored.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbours(std::size_t u) const { return adj_[u]; }

 private:
  std::vector<Bitset> adj_;
};

namespace detail {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    Bitset all(g_.size());
    for (std::size_t v = 0; v < g_.size(); ++v) all.set(v);
    expand(all);
    return best_;
  }

 private:
  // Number of colour classes in a greedy colouring of `cand`; bounds the
  // largest clique inside it.
  std::size_t colour_bound(Bitset cand) const {
    std::size_t colours = 0;
    while (!cand.none()) {
      ++colours;
      Bitset open = cand;
      for (std::size_t v = open.first(); v < open.bits(); v = open.next(v)) {
        cand.reset(v);
        // Neighbours of v cannot share its colour.
        for (std::size_t u = open.next(v); u < open.bits(); u = open.next(u)) {
          if (g_.adjacent(u, v)) open.reset(u);
        }
      }
    }
    return colours;
  }

  void expand(const Bitset& cand) {
    if (cand.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + cand.count() <= best_.size()) return;
    if (current_.size() + colour_bound(cand) <= best_.size()) return;

    Bitset rest = cand;
    for (std::size_t v = cand.first(); v < cand.bits(); v = cand.next(v)) {
      if (current_.size() + rest.count() <= best_.size()) return;
      rest.reset(v);
      Bitset next = rest;
      next &= g_.neighbours(v);
      current_.push_back(v);
      expand(next);
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Lexicographically smallest maximum clique, vertices ascending.
inline std::vector<std::size_t> max_clique(const Graph& g) { return detail::CliqueSearch(g).run(); }

}  // namespace ssa
