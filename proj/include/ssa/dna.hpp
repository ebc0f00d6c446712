#pragma once

// Four-letter DNA alphabet, sequences over it, Watson-Crick operations and
// fixed-width integer <-> DNA radix conversion.
//
// Symbols carry their 2-bit digit value directly: A=0, T=1, C=2, G=3. The
// same mapping drives radix conversion, byte packing and the alphabet order
// (A < T < C < G). Complement pairs differ only in the low bit.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssa/errors.hpp"

namespace ssa {

enum class Base : std::uint8_t { A = 0, T = 1, C = 2, G = 3 };

inline constexpr std::array<Base, 4> kAllBases = {Base::A, Base::T, Base::C, Base::G};

constexpr std::uint8_t digit(Base b) noexcept { return static_cast<std::uint8_t>(b); }

constexpr Base base_from_digit(unsigned d) noexcept { return static_cast<Base>(d & 3u); }

constexpr Base complement(Base b) noexcept { return static_cast<Base>(digit(b) ^ 1u); }

constexpr char to_char(Base b) noexcept {
  constexpr char kLetters[4] = {'A', 'T', 'C', 'G'};
  return kLetters[digit(b)];
}

/// Returns false for anything outside the uppercase letters A, T, C, G.
constexpr bool base_from_char(char c, Base& out) noexcept {
  switch (c) {
    case 'A': out = Base::A; return true;
    case 'T': out = Base::T; return true;
    case 'C': out = Base::C; return true;
    case 'G': out = Base::G; return true;
    default: return false;
  }
}

using BaseSpan = std::span<const Base>;

/// Ordered finite sequence of bases. Value type; comparisons are
/// lexicographic under A < T < C < G.
class DnaSeq {
 public:
  using value_type = Base;
  using size_type = std::size_t;
  using iterator = std::vector<Base>::iterator;
  using const_iterator = std::vector<Base>::const_iterator;

  DnaSeq() = default;
  DnaSeq(std::initializer_list<Base> bases) : bases_(bases) {}
  explicit DnaSeq(std::vector<Base> bases) : bases_(std::move(bases)) {}
  explicit DnaSeq(BaseSpan bases) : bases_(bases.begin(), bases.end()) {}
  DnaSeq(size_type count, Base b) : bases_(count, b) {}

  /// Strict text form: uppercase A/T/C/G with at most one trailing newline
  /// ("\n" or "\r\n"). Throws parse_error on anything else.
  static DnaSeq parse(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
      text.remove_suffix(1);
      if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    }
    DnaSeq out;
    out.bases_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      Base b{};
      if (!base_from_char(text[i], b)) {
        throw parse_error("invalid DNA symbol at offset " + std::to_string(i));
      }
      out.bases_.push_back(b);
    }
    return out;
  }

  size_type size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }

  Base operator[](size_type i) const noexcept { return bases_[i]; }
  Base& operator[](size_type i) noexcept { return bases_[i]; }

  Base at(size_type i) const {
    if (i >= bases_.size()) throw std::out_of_range("DnaSeq::at: index out of range");
    return bases_[i];
  }

  const_iterator begin() const noexcept { return bases_.begin(); }
  const_iterator end() const noexcept { return bases_.end(); }
  iterator begin() noexcept { return bases_.begin(); }
  iterator end() noexcept { return bases_.end(); }

  BaseSpan view() const noexcept { return {bases_.data(), bases_.size()}; }
  operator BaseSpan() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  /// The `len` consecutive bases starting at `pos`; throws if pos + len > size().
  DnaSeq substr(size_type pos, size_type len) const {
    if (pos > bases_.size() || len > bases_.size() - pos) {
      throw std::out_of_range("DnaSeq::substr: window exceeds sequence");
    }
    return DnaSeq(view().subspan(pos, len));
  }

  void push_back(Base b) { bases_.push_back(b); }

  DnaSeq& append(BaseSpan tail) {
    bases_.insert(bases_.end(), tail.begin(), tail.end());
    return *this;
  }

  DnaSeq& insert(size_type pos, BaseSpan piece) {
    if (pos > bases_.size()) throw std::out_of_range("DnaSeq::insert: position past end");
    bases_.insert(bases_.begin() + static_cast<std::ptrdiff_t>(pos), piece.begin(), piece.end());
    return *this;
  }

  DnaSeq& erase(size_type pos, size_type len) {
    if (pos > bases_.size() || len > bases_.size() - pos) {
      throw std::out_of_range("DnaSeq::erase: window exceeds sequence");
    }
    auto first = bases_.begin() + static_cast<std::ptrdiff_t>(pos);
    bases_.erase(first, first + static_cast<std::ptrdiff_t>(len));
    return *this;
  }

  void reserve(size_type n) { bases_.reserve(n); }

  std::string str() const {
    std::string s(bases_.size(), '\0');
    std::transform(bases_.begin(), bases_.end(), s.begin(), to_char);
    return s;
  }

  friend bool operator==(const DnaSeq&, const DnaSeq&) = default;
  friend auto operator<=>(const DnaSeq&, const DnaSeq&) = default;

  friend DnaSeq operator+(DnaSeq lhs, const DnaSeq& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const DnaSeq& s) { return os << s.str(); }

 private:
  std::vector<Base> bases_;
};

inline DnaSeq revcomp(BaseSpan x) {
  DnaSeq out;
  out.reserve(x.size());
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(complement(*it));
  return out;
}

/// (ab)^reps, e.g. repeat_pair(A, C, 3) = ACACAC.
inline DnaSeq repeat_pair(Base a, Base b, std::size_t reps) {
  DnaSeq out;
  out.reserve(2 * reps);
  for (std::size_t r = 0; r < reps; ++r) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

inline DnaSeq repeat(const DnaSeq& unit, std::size_t reps) {
  DnaSeq out;
  out.reserve(unit.size() * reps);
  for (std::size_t r = 0; r < reps; ++r) out.append(unit);
  return out;
}

/// Fixed-width big-endian base-4 rendering of `value` (0->A, 1->T, 2->C, 3->G).
inline DnaSeq dna_rep(std::uint64_t value, std::size_t width) {
  if (width < 32 && (value >> (2 * width)) != 0) {
    throw std::out_of_range("dna_rep: value does not fit in " + std::to_string(width) + " symbols");
  }
  DnaSeq out(width, Base::A);
  for (std::size_t i = width; i-- > 0;) {
    out[i] = base_from_digit(static_cast<unsigned>(value & 3u));
    value >>= 2;
  }
  return out;
}

/// Inverse of dna_rep. Sequences longer than 32 symbols do not fit a 64-bit
/// result and are rejected.
inline std::uint64_t int_of_dna_rep(BaseSpan x) {
  if (x.size() > 32) throw std::length_error("int_of_dna_rep: more than 32 symbols");
  std::uint64_t v = 0;
  for (Base b : x) v = (v << 2) | digit(b);
  return v;
}

namespace literals {

inline DnaSeq operator""_dna(const char* text, std::size_t len) { return DnaSeq::parse({text, len}); }

}  // namespace literals

}  // namespace ssa
