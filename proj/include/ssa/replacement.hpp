#pragma once

// One-redundant-symbol SSA codec by sequence replacement.
//
// Codeword length n = 4^p (p >= 3). Every index fits a p-symbol DNA
// representation. Scanning uses window length m' = 3p + 2; the output is
// guaranteed m-SSA for m = 2m' = 6p + 4.
//
// Encoder: prepend A. If that is already m-SSA, done. Otherwise repeatedly
// take the earliest trigger in the current sequence:
//   RC pair y (at i..j) / z (at k), |y| = |z| = m':
//       delete z, prepend  T rep(i) rep(j) rep(k)      (length -1)
//   period-2 run (ab)^t at i..j, 2t >= m':
//       delete run, prepend C a b rep(i) rep(j)        (length <= -(p-1))
// then pad to n with ACAC...(A). The decoder peels pointers off the front in
// LIFO order until it reaches the leading A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "ssa/dna.hpp"
#include "ssa/errors.hpp"
#include "ssa/oracle.hpp"

namespace ssa {

struct CodecParams {
  std::size_t n = 0;            // codeword length, 4^p
  std::size_t p = 0;            // symbols per recorded index
  std::size_t mprime = 0;       // scan window, 3p + 2
  std::size_t m_guarantee = 0;  // output is m-SSA for this m, 6p + 4

  std::size_t rc_pointer_length() const noexcept { return 1 + 3 * p; }
  std::size_t run_pointer_length() const noexcept { return 3 + 2 * p; }
  friend bool operator==(const CodecParams&, const CodecParams&) = default;
};

inline CodecParams validate_params(std::size_t n) {
  std::size_t p = 0;
  std::size_t v = 1;
  while (v < n && v <= (SIZE_MAX >> 2)) {
    v <<= 2;
    ++p;
  }
  if (v != n) throw std::invalid_argument("codeword length " + std::to_string(n) + " is not a power of 4");
  if (p < 3) throw std::invalid_argument("codeword length must exceed 16");
  return CodecParams{n, p, 3 * p + 2, 6 * p + 4};
}

/// y = c[first..last] is the reverse complement of z = c[target..target+len-1].
struct RcPairTrigger {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t target = 0;
  friend bool operator==(const RcPairTrigger&, const RcPairTrigger&) = default;
};

/// c[first..last] = (ab)^((last-first+1)/2).
struct RunTrigger {
  std::size_t first = 0;
  std::size_t last = 0;
  Base a = Base::A;
  Base b = Base::A;
  friend bool operator==(const RunTrigger&, const RunTrigger&) = default;
};

using Trigger = std::variant<std::monostate, RcPairTrigger, RunTrigger>;

inline bool is_none(const Trigger& t) noexcept { return std::holds_alternative<std::monostate>(t); }

/// Earliest trigger at window length `threshold`. An RC pair and a run that
/// start at the same index resolve to the RC pair.
inline Trigger scan_trigger(BaseSpan c, std::size_t threshold) {
  const auto pair = find_rc_pair(c, threshold);
  const auto run = find_period2_run(c, threshold);
  if (pair && (!run || pair->first <= run->first)) {
    return RcPairTrigger{pair->first, pair->first + threshold - 1, pair->second};
  }
  if (run) return RunTrigger{run->first, run->last, run->a, run->b};
  return std::monostate{};
}

inline Trigger scan_trigger(BaseSpan c, const CodecParams& params) { return scan_trigger(c, params.mprime); }

struct EncodeResult {
  DnaSeq codeword;
  std::size_t payload_length = 0;  // length before padding
  std::size_t replacements = 0;
};

namespace detail {

inline void append_index(DnaSeq& out, std::size_t value, const CodecParams& params) {
  if (value >= params.n) throw std::logic_error("recorded index does not fit the pointer width");
  out.append(dna_rep(value, params.p));
}

inline std::size_t read_index(BaseSpan c, std::size_t pos, const CodecParams& params) {
  return static_cast<std::size_t>(int_of_dna_rep(c.subspan(pos, params.p)));
}

struct NoObserver {
  void operator()(const Trigger&, const DnaSeq&, const DnaSeq&) const noexcept {}
};

}  // namespace detail

/// Full encoder. `observe(trigger, before, after)` is called once per
/// replacement step.
template <class Observer = detail::NoObserver>
EncodeResult encode_detailed(BaseSpan x, const CodecParams& params, Observer&& observe = {}) {
  if (x.size() + 1 != params.n) {
    throw std::invalid_argument("encode: message must have " + std::to_string(params.n - 1) + " symbols");
  }
  EncodeResult result;
  DnaSeq& c = result.codeword;
  c.reserve(params.n);
  c.push_back(Base::A);
  c.append(x);
  if (is_m_ssa(c, params.m_guarantee)) {
    result.payload_length = c.size();
    return result;
  }

  while (true) {
    const Trigger trigger = scan_trigger(c, params);
    if (is_none(trigger)) break;
    DnaSeq pointer;
    std::size_t cut_at = 0;
    std::size_t cut_len = 0;
    if (const auto* rc = std::get_if<RcPairTrigger>(&trigger)) {
      pointer.push_back(Base::T);
      detail::append_index(pointer, rc->first, params);
      detail::append_index(pointer, rc->last, params);
      detail::append_index(pointer, rc->target, params);
      cut_at = rc->target;
      cut_len = params.mprime;
    } else {
      const auto& run = std::get<RunTrigger>(trigger);
      pointer.push_back(Base::C);
      pointer.push_back(run.a);
      pointer.push_back(run.b);
      detail::append_index(pointer, run.first, params);
      detail::append_index(pointer, run.last, params);
      cut_at = run.first;
      cut_len = run.last - run.first + 1;
    }
    if constexpr (std::is_same_v<std::decay_t<Observer>, detail::NoObserver>) {
      c.erase(cut_at, cut_len).insert(0, pointer);
    } else {
      const DnaSeq before = c;
      c.erase(cut_at, cut_len).insert(0, pointer);
      observe(trigger, before, c);
    }
    ++result.replacements;
  }

  result.payload_length = c.size();
  const std::size_t pad = params.n - c.size();
  c.append(repeat_pair(Base::A, Base::C, pad / 2));
  if (pad % 2 != 0) c.push_back(Base::A);
  return result;
}

inline DnaSeq encode(BaseSpan x, const CodecParams& params) { return encode_detailed(x, params).codeword; }

inline DnaSeq decode(BaseSpan codeword, const CodecParams& params) {
  if (codeword.size() != params.n) {
    throw not_a_codeword("expected " + std::to_string(params.n) + " symbols, got " + std::to_string(codeword.size()));
  }
  DnaSeq c(codeword);
  // Each encoder step leaves one pointer; there are fewer than n of them.
  for (std::size_t step = 0; step <= params.n; ++step) {
    if (c.empty()) throw not_a_codeword("sequence exhausted");
    switch (c[0]) {
      case Base::A: {
        if (c.size() < params.n) throw not_a_codeword("reconstruction shorter than the message");
        return c.substr(1, params.n - 1);
      }
      case Base::G: throw not_a_codeword("leading G");
      case Base::T: {
        const std::size_t len = params.rc_pointer_length();
        if (c.size() < len) throw not_a_codeword("truncated RC pointer");
        const std::size_t i = detail::read_index(c, 1, params);
        const std::size_t j = detail::read_index(c, 1 + params.p, params);
        const std::size_t k = detail::read_index(c, 1 + 2 * params.p, params);
        c.erase(0, len);
        if (i > j || j - i + 1 != params.mprime || k <= j || k > c.size()) {
          throw not_a_codeword("inconsistent RC pointer");
        }
        c.insert(k, revcomp(c.view().subspan(i, params.mprime)));
        break;
      }
      case Base::C: {
        const std::size_t len = params.run_pointer_length();
        if (c.size() < len) throw not_a_codeword("truncated run pointer");
        const Base a = c[1];
        const Base b = c[2];
        const std::size_t i = detail::read_index(c, 3, params);
        const std::size_t j = detail::read_index(c, 3 + params.p, params);
        c.erase(0, len);
        if (i > j || (j - i + 1) % 2 != 0 || j - i + 1 < params.mprime || i > c.size()) {
          throw not_a_codeword("inconsistent run pointer");
        }
        c.insert(i, repeat_pair(a, b, (j - i + 1) / 2));
        break;
      }
    }
  }
  throw not_a_codeword("too many pointers");
}

}  // namespace ssa
