#pragma once

// Subcommand implementations for the `ssa` command-line tool. Each command
// reads from `in`, writes results to `out` and diagnostics to `err`, and
// returns the process exit status.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssa/block_code.hpp"
#include "ssa/dna.hpp"

namespace ssa::cli {

enum Status : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsage = 2,
  kNotCodeword = 3,
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

enum class Scheme { replacement, composition, block };
enum class Format { text, rows };
enum class TableKind { rates, counts };

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "a..b" or a single number "a".
Range parse_range(const std::string& text);

struct CheckOptions {
  std::size_t m = 0;
  bool witness = false;
};

struct CodecOptions {
  Scheme scheme = Scheme::replacement;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::string> set_file;
  bool bytes = false;  // replacement scheme: raw byte payloads, framed
};

struct CountOptions {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 1;
};

struct UnrankOptions {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string index;
};

struct SearchOptions {
  std::size_t m = 0;
  BlockMethod method = BlockMethod::exact;
};

struct TableOptions {
  TableKind kind = TableKind::rates;
  Range m_range{2, 8};
  Range n_range{1, 12};
  Format format = Format::text;
};

int run_check(const CheckOptions& opts, Io io);
int run_encode(const CodecOptions& opts, Io io);
int run_decode(const CodecOptions& opts, Io io);
int run_count(const CountOptions& opts, Io io);
int run_rank(std::size_t m, Io io);
int run_unrank(const UnrankOptions& opts, Io io);
int run_rate(std::size_t m, Format format, Io io);
int run_search(const SearchOptions& opts, Io io);
int run_table(const TableOptions& opts, Io io);
int run_pack(Io io);
int run_unpack(Io io);

// Byte <-> DNA packing: each byte becomes four symbols, most significant
// bit pair first, with the digit map 0->A 1->T 2->C 3->G.
DnaSeq pack_bytes(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> unpack_bytes(BaseSpan dna);

/// Width in symbols of the byte-count header of a replacement-codec frame.
std::size_t frame_header_width(std::size_t n);
/// Payload bytes carried by one frame.
std::size_t frame_capacity(std::size_t n);

}  // namespace ssa::cli
