#include "commands.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "ssa/composition.hpp"
#include "ssa/errors.hpp"
#include "ssa/oracle.hpp"
#include "ssa/replacement.hpp"

namespace ssa::cli {

namespace {

constexpr std::size_t kMaxTableLength = 10000;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

DnaSeq read_dna(std::istream& in) { return DnaSeq::parse(read_all(in)); }

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const not_a_codeword& e) {
    err << "error: " << e.what() << '\n';
    return kNotCodeword;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw parse_error("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw parse_error("expected a non-negative decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

BlockSet load_block_set(const std::optional<std::string>& path) {
  if (!path) return benerjee_set();
  std::ifstream in(*path);
  if (!in) throw parse_error("cannot open block-set file '" + *path + "'");
  return read_block_set(in);
}

// Fixed byte width of a composition payload: enough bytes for count - 1.
std::size_t payload_width(const BigInt& count) {
  if (count <= 1) return 1;
  const BigInt top = count - 1;
  return boost::multiprecision::msb(top) / 8 + 1;
}

std::vector<std::uint8_t> to_bytes(const BigInt& v, std::size_t width) {
  std::vector<std::uint8_t> raw;
  boost::multiprecision::export_bits(v, std::back_inserter(raw), 8, true);
  while (raw.size() > 1 && raw.front() == 0) raw.erase(raw.begin());
  if (raw.size() > width) throw std::logic_error("payload wider than its declared width");
  std::vector<std::uint8_t> out(width - raw.size(), 0);
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

BigInt from_bytes(std::span<const std::uint8_t> bytes) {
  BigInt v = 0;
  if (!bytes.empty()) boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8, true);
  return v;
}

void write_bytes(std::ostream& out, std::span<const std::uint8_t> bytes) {
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

int encode_replacement(const CodecOptions& opts, Io io) {
  const CodecParams params = validate_params(opts.n);
  if (!opts.bytes) {
    const DnaSeq msg = read_dna(io.in);
    io.out << encode(msg, params) << '\n';
    return kOk;
  }
  const std::string data = read_all(io.in);
  const std::size_t header = frame_header_width(params.n);
  const std::size_t cap = frame_capacity(params.n);
  for (std::size_t off = 0; off < data.size(); off += cap) {
    const std::size_t chunk = std::min(cap, data.size() - off);
    const auto* first = reinterpret_cast<const std::uint8_t*>(data.data() + off);
    DnaSeq msg = dna_rep(chunk, header);
    msg.append(pack_bytes({first, chunk}));
    msg.append(DnaSeq(params.n - 1 - msg.size(), Base::A));
    io.out << encode(msg, params) << '\n';
  }
  return kOk;
}

int decode_replacement(const CodecOptions& opts, Io io) {
  const CodecParams params = validate_params(opts.n);
  if (!opts.bytes) {
    io.out << decode(read_dna(io.in), params) << '\n';
    return kOk;
  }
  const std::size_t header = frame_header_width(params.n);
  const std::size_t cap = frame_capacity(params.n);
  std::vector<std::uint8_t> data;
  for (const auto& line : nonempty_lines(read_all(io.in))) {
    const DnaSeq msg = decode(DnaSeq::parse(line), params);
    const std::size_t chunk = int_of_dna_rep(msg.view().first(header));
    if (chunk > cap) throw not_a_codeword("frame declares more bytes than it can carry");
    const auto bytes = unpack_bytes(msg.view().subspan(header, 4 * chunk));
    data.insert(data.end(), bytes.begin(), bytes.end());
  }
  write_bytes(io.out, data);
  return kOk;
}

int encode_composition(const CodecOptions& opts, Io io) {
  const CountTable table(opts.m, opts.n);
  const std::size_t width = payload_width(table.count(opts.n));
  const std::string data = read_all(io.in);
  if (data.size() != width) {
    throw std::invalid_argument("composition payload must be exactly " + std::to_string(width) + " bytes");
  }
  const BigInt idx = from_bytes({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
  if (idx >= table.count(opts.n)) throw std::out_of_range("payload value exceeds the code size");
  io.out << table.unrank(idx, opts.n) << '\n';
  return kOk;
}

int decode_composition(const CodecOptions& opts, Io io) {
  const DnaSeq word = read_dna(io.in);
  if (word.size() != opts.n) throw not_a_codeword("expected " + std::to_string(opts.n) + " symbols");
  const CountTable table(opts.m, opts.n);
  write_bytes(io.out, to_bytes(table.rank(word), payload_width(table.count(opts.n))));
  return kOk;
}

int encode_block(const CodecOptions& opts, Io io) {
  const BlockSet set = load_block_set(opts.set_file);
  std::vector<std::size_t> message;
  std::istringstream is(read_all(io.in));
  std::string token;
  while (is >> token) message.push_back(parse_size(token));
  io.out << block_encode(message, set) << '\n';
  return kOk;
}

int decode_block(const CodecOptions& opts, Io io) {
  const BlockSet set = load_block_set(opts.set_file);
  const auto message = block_decode(read_dna(io.in), set);
  for (std::size_t i = 0; i < message.size(); ++i) io.out << (i ? " " : "") << message[i];
  io.out << '\n';
  return kOk;
}

void require_composition_params(const CodecOptions& opts) {
  if (opts.m == 0) throw std::invalid_argument("--m is required for the composition scheme");
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = parse_size(text);
    return {v, v};
  }
  Range r{parse_size(std::string_view(text).substr(0, dots)), parse_size(std::string_view(text).substr(dots + 2))};
  if (r.lo > r.hi) throw parse_error("range '" + text + "' is empty");
  return r;
}

DnaSeq pack_bytes(std::span<const std::uint8_t> bytes) {
  DnaSeq out;
  out.reserve(4 * bytes.size());
  for (std::uint8_t byte : bytes) {
    for (int shift = 6; shift >= 0; shift -= 2) out.push_back(base_from_digit(static_cast<unsigned>(byte >> shift)));
  }
  return out;
}

std::vector<std::uint8_t> unpack_bytes(BaseSpan dna) {
  if (dna.size() % 4 != 0) throw parse_error("DNA length must be a multiple of 4 to unpack");
  std::vector<std::uint8_t> out;
  out.reserve(dna.size() / 4);
  for (std::size_t i = 0; i < dna.size(); i += 4) {
    out.push_back(static_cast<std::uint8_t>(int_of_dna_rep(dna.subspan(i, 4))));
  }
  return out;
}

std::size_t frame_header_width(std::size_t n) {
  for (std::size_t h = 1;; ++h) {
    if (h + 1 >= n) throw std::invalid_argument("codeword too short to frame bytes");
    const std::size_t cap = (2 * (n - 1 - h)) / 8;
    if (h >= 32 || (std::uint64_t{1} << (2 * h)) > cap) return h;
  }
}

std::size_t frame_capacity(std::size_t n) { return (2 * (n - 1 - frame_header_width(n))) / 8; }

int run_check(const CheckOptions& opts, Io io) {
  return guarded(io.err, [&] {
    if (opts.m == 0) throw std::invalid_argument("--m must be at least 1");
    const DnaSeq x = read_dna(io.in);
    const auto witness = find_rc_pair(x, opts.m);
    if (!witness) {
      io.out << "m-SSA\n";
      return static_cast<int>(kOk);
    }
    io.out << "not m-SSA\n";
    if (opts.witness) io.out << "witness " << witness->first << ' ' << witness->second << ' ' << witness->length << '\n';
    return static_cast<int>(kPropertyFails);
  });
}

int run_encode(const CodecOptions& opts, Io io) {
  return guarded(io.err, [&] {
    switch (opts.scheme) {
      case Scheme::replacement: return encode_replacement(opts, io);
      case Scheme::composition: require_composition_params(opts); return encode_composition(opts, io);
      case Scheme::block: return encode_block(opts, io);
    }
    return static_cast<int>(kUsage);
  });
}

int run_decode(const CodecOptions& opts, Io io) {
  return guarded(io.err, [&] {
    switch (opts.scheme) {
      case Scheme::replacement: return decode_replacement(opts, io);
      case Scheme::composition: require_composition_params(opts); return decode_composition(opts, io);
      case Scheme::block: return decode_block(opts, io);
    }
    return static_cast<int>(kUsage);
  });
}

int run_count(const CountOptions& opts, Io io) {
  return guarded(io.err, [&] {
    if (opts.k == 1) {
      if (opts.m == 0) throw std::invalid_argument("--m must be at least 1");
      io.out << count(opts.n, opts.m) << '\n';
    } else {
      io.out << brute_count(opts.n, opts.m, opts.k) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run_rank(std::size_t m, Io io) {
  return guarded(io.err, [&] {
    if (m == 0) throw std::invalid_argument("--m must be at least 1");
    io.out << rank(read_dna(io.in), m) << '\n';
    return static_cast<int>(kOk);
  });
}

int run_unrank(const UnrankOptions& opts, Io io) {
  return guarded(io.err, [&] {
    if (opts.m == 0) throw std::invalid_argument("--m must be at least 1");
    io.out << unrank(parse_bigint(opts.index), opts.n, opts.m) << '\n';
    return static_cast<int>(kOk);
  });
}

int run_rate(std::size_t m, Format format, Io io) {
  return guarded(io.err, [&] {
    const CharRoot root = char_root(m);
    std::string bound = "-";
    std::string trivial = "-";
    if (m <= kMaxExhaustiveBlock) {
      const CapacityBound b = capacity_upper_bound(m);
      bound = fixed(b.bits_per_nt, 6);
      trivial = fixed(b.trivial_bits_per_nt, 6);
    }
    if (format == Format::rows) {
      io.out << "m,lambda,rate,bound,trivial_bound\n"
             << m << ',' << fixed(root.lambda, 10) << ',' << fixed(root.rate, 10) << ',' << bound << ',' << trivial << '\n';
    } else {
      io.out << "m " << m << "\nlambda " << fixed(root.lambda, 6) << "\nrate " << fixed(root.rate, 6) << "\nbound "
             << bound << "\ntrivial_bound " << trivial << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run_search(const SearchOptions& opts, Io io) {
  return guarded(io.err, [&] {
    write_block_set(io.out, build_block_set(opts.m, opts.method));
    return static_cast<int>(kOk);
  });
}

int run_table(const TableOptions& opts, Io io) {
  return guarded(io.err, [&] {
    std::ostringstream os;
    if (opts.kind == TableKind::rates) {
      if (opts.m_range.lo < 2 || opts.m_range.hi > kMaxExhaustiveBlock) {
        throw std::out_of_range("rates table needs m within 2..8");
      }
      struct Row {
        std::string scheme;
        std::size_t m;
        std::string block;
        std::string size;
        double rate;
        double bound;
      };
      std::vector<Row> rows;
      const BlockSet ben = benerjee_set();
      rows.push_back({"benerjee", 3, std::to_string(ben.block_length), std::to_string(ben.size()),
                      block_code_rate(ben), capacity_upper_bound(3).bits_per_nt});
      for (std::size_t m = opts.m_range.lo; m <= opts.m_range.hi; ++m) {
        const double bound = capacity_upper_bound(m).bits_per_nt;
        const CharRoot root = char_root(m);
        rows.push_back({"composition", m, "-", fixed(root.lambda), root.rate, bound});
        if (m <= kMaxExactBlockLength) {
          const BlockSet set = build_block_set(m, BlockMethod::exact);
          rows.push_back({"block-exact", m, std::to_string(m), std::to_string(set.size()), block_code_rate(set), bound});
        }
        const BlockSet greedy = build_block_set(m, BlockMethod::greedy);
        rows.push_back({"block-greedy", m, std::to_string(m), std::to_string(greedy.size()), block_code_rate(greedy), bound});
      }
      if (opts.format == Format::rows) {
        os << "scheme,m,block,size_or_lambda,rate,bound\n";
        for (const auto& r : rows) {
          os << r.scheme << ',' << r.m << ',' << r.block << ',' << r.size << ',' << fixed(r.rate) << ',' << fixed(r.bound) << '\n';
        }
      } else {
        os << std::left << std::setw(13) << "scheme" << std::right << std::setw(3) << "m" << std::setw(7) << "block"
           << std::setw(13) << "size/lambda" << std::setw(8) << "rate" << std::setw(8) << "bound" << '\n';
        for (const auto& r : rows) {
          os << std::left << std::setw(13) << r.scheme << std::right << std::setw(3) << r.m << std::setw(7) << r.block
             << std::setw(13) << r.size << std::setw(8) << fixed(r.rate) << std::setw(8) << fixed(r.bound) << '\n';
        }
      }
    } else {
      if (opts.m_range.lo < 1) throw std::out_of_range("counts table needs m >= 1");
      if (opts.n_range.hi > kMaxTableLength) throw std::out_of_range("counts table needs n <= 10000");
      std::vector<std::vector<BigInt>> columns;
      for (std::size_t m = opts.m_range.lo; m <= opts.m_range.hi; ++m) columns.push_back(count_sequence(m, opts.n_range.hi));
      if (opts.format == Format::rows) {
        os << "m,n,count\n";
        for (std::size_t m = opts.m_range.lo; m <= opts.m_range.hi; ++m) {
          for (std::size_t n = opts.n_range.lo; n <= opts.n_range.hi; ++n) {
            os << m << ',' << n << ',' << columns[m - opts.m_range.lo][n] << '\n';
          }
        }
      } else {
        os << std::setw(6) << "n";
        for (std::size_t m = opts.m_range.lo; m <= opts.m_range.hi; ++m) os << ' ' << std::setw(12) << ("m=" + std::to_string(m));
        os << '\n';
        for (std::size_t n = opts.n_range.lo; n <= opts.n_range.hi; ++n) {
          os << std::setw(6) << n;
          for (const auto& col : columns) os << ' ' << std::setw(12) << col[n].str();
          os << '\n';
        }
      }
    }
    io.out << os.str();
    return static_cast<int>(kOk);
  });
}

int run_pack(Io io) {
  return guarded(io.err, [&] {
    const std::string data = read_all(io.in);
    io.out << pack_bytes({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()}) << '\n';
    return static_cast<int>(kOk);
  });
}

int run_unpack(Io io) {
  return guarded(io.err, [&] {
    write_bytes(io.out, unpack_bytes(read_dna(io.in)));
    return static_cast<int>(kOk);
  });
}

}  // namespace ssa::cli
