#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "commands.hpp"

using namespace ssa;
using namespace ssa::cli;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& command, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = command(Io{in, out, err});
  return {status, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("check", "[cli]") {
  auto check = [](std::size_t m, bool witness) { return [=](Io io) { return run_check({m, witness}, io); }; };
  CHECK(run(check(5, false), "ATACCGGTAT\n").status == kPropertyFails);
  const Run r = run(check(5, true), "ATACCGGTAT\n");
  CHECK(r.out == "not m-SSA\nwitness 0 5 5\n");
  CHECK(run(check(6, false), "ATACCGGTAT").out == "m-SSA\n");
  CHECK(run(check(6, false), "ATACCGGTAT").status == kOk);
  CHECK(run(check(2, false), "AXGT").status == kUsage);
  CHECK(run(check(0, false), "ACGT").status == kUsage);
}

TEST_CASE("replacement codec on text", "[cli]") {
  CodecOptions opts;
  opts.scheme = Scheme::replacement;
  opts.n = 64;
  const std::string msg = std::string(63, 'A');
  const Run enc = run([&](Io io) { return run_encode(opts, io); }, msg + "\n");
  CHECK(enc.status == kOk);
  CHECK(trim(enc.out) == std::string(64, 'A'));
  const Run dec = run([&](Io io) { return run_decode(opts, io); }, enc.out);
  CHECK(trim(dec.out) == msg);
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "G" + std::string(63, 'A')).status == kNotCodeword);
  CHECK(run([&](Io io) { return run_decode(opts, io); }, std::string(60, 'A')).status == kNotCodeword);
  CHECK(run([&](Io io) { return run_encode(opts, io); }, std::string(62, 'A')).status == kUsage);
  opts.n = 60;
  CHECK(run([&](Io io) { return run_encode(opts, io); }, msg).status == kUsage);
}

TEST_CASE("byte framing", "[cli]") {
  CHECK(frame_header_width(64) == 2);
  CHECK(frame_capacity(64) == 15);
  CHECK(frame_header_width(256) == 3);
  CHECK(frame_capacity(256) == 63);

  CodecOptions opts;
  opts.scheme = Scheme::replacement;
  opts.n = 64;
  opts.bytes = true;
  std::mt19937_64 rng(8);
  for (std::size_t len : {0u, 1u, 14u, 15u, 16u, 100u}) {
    std::string data(len, '\0');
    for (auto& ch : data) ch = static_cast<char>(rng() & 0xFF);
    const Run enc = run([&](Io io) { return run_encode(opts, io); }, data);
    REQUIRE(enc.status == kOk);
    std::istringstream lines(enc.out);
    std::string line;
    std::size_t frames = 0;
    while (std::getline(lines, line)) {
      REQUIRE(line.size() == 64);
      ++frames;
    }
    REQUIRE(frames == (len + 14) / 15);
    const Run dec = run([&](Io io) { return run_decode(opts, io); }, enc.out);
    REQUIRE(dec.status == kOk);
    REQUIRE(dec.out == data);
  }
}

TEST_CASE("composition codec", "[cli]") {
  CodecOptions opts;
  opts.scheme = Scheme::composition;
  opts.n = 3;
  opts.m = 3;
  const Run enc = run([&](Io io) { return run_encode(opts, io); }, std::string(1, '\0'));
  CHECK(enc.out == "AAA\n");
  CHECK(run([&](Io io) { return run_encode(opts, io); }, std::string(1, '\x12')).out == "GGA\n");
  CHECK(run([&](Io io) { return run_encode(opts, io); }, std::string(1, '\x13')).status == kUsage);
  CHECK(run([&](Io io) { return run_encode(opts, io); }, std::string(2, '\0')).status == kUsage);
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "GGA\n").out == std::string(1, '\x12'));
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "CCC\n").status == kNotCodeword);
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "AAAA\n").status == kNotCodeword);
  opts.m = 0;
  CHECK(run([&](Io io) { return run_encode(opts, io); }, std::string(1, '\0')).status == kUsage);

  opts.m = 3;
  opts.n = 64;
  std::mt19937_64 rng(4);
  const Run probe = run([&](Io io) { return run_decode(opts, io); }, std::string(64, 'A'));
  const std::size_t width = probe.out.size();
  CHECK(probe.out == std::string(width, '\0'));
  for (int trial = 0; trial < 50; ++trial) {
    std::string data(width, '\0');
    for (auto& ch : data) ch = static_cast<char>(rng() & 0xFF);
    data[0] = '\0';  // stay below the code size
    const Run enc64 = run([&](Io io) { return run_encode(opts, io); }, data);
    REQUIRE(enc64.status == kOk);
    REQUIRE(run([&](Io io) { return run_decode(opts, io); }, enc64.out).out == data);
  }
}

TEST_CASE("block codec", "[cli]") {
  CodecOptions opts;
  opts.scheme = Scheme::block;
  CHECK(run([&](Io io) { return run_encode(opts, io); }, "0 1 4\n").out == "AACCTC\n");
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "AACCTC\n").out == "0 1 4\n");
  CHECK(run([&](Io io) { return run_decode(opts, io); }, "TTAA\n").status == kNotCodeword);
  CHECK(run([&](Io io) { return run_encode(opts, io); }, "0 9\n").status == kUsage);
  CHECK(run([&](Io io) { return run_encode(opts, io); }, "0 x\n").status == kUsage);
  opts.set_file = "/nonexistent/set.txt";
  CHECK(run([&](Io io) { return run_encode(opts, io); }, "0\n").status == kUsage);
}

TEST_CASE("pack and unpack", "[cli]") {
  CHECK(run(run_pack, std::string(1, '\x1B')).out == "ATCG\n");
  CHECK(run(run_pack, std::string(1, '\0')).out == "AAAA\n");
  std::string all;
  for (int b = 0; b < 256; ++b) all.push_back(static_cast<char>(b));
  const Run packed = run(run_pack, all);
  CHECK(packed.out.size() == 4 * 256 + 1);
  CHECK(run(run_unpack, packed.out).out == all);
  CHECK(run(run_unpack, "ACG\n").status == kUsage);
}

TEST_CASE("counting commands", "[cli]") {
  CHECK(run([](Io io) { return run_count({3, 3, 1}, io); }, "").out == "19\n");
  CHECK(run([](Io io) { return run_count({3, 4, 3}, io); }, "").out == "1\n");
  CHECK(run([](Io io) { return run_count({3, 13, 2}, io); }, "").status == kUsage);
  CHECK(run([](Io io) { return run_rank(3, io); }, "GGA\n").out == "18\n");
  CHECK(run([](Io io) { return run_rank(3, io); }, "CCC\n").status == kNotCodeword);
  CHECK(run([](Io io) { return run_unrank({3, 3, "18"}, io); }, "").out == "GGA\n");
  CHECK(run([](Io io) { return run_unrank({3, 3, "19"}, io); }, "").status == kUsage);
  CHECK(run([](Io io) { return run_unrank({3, 3, "-1"}, io); }, "").status == kUsage);
}

TEST_CASE("rate and search", "[cli]") {
  const Run r = run([](Io io) { return run_rate(3, Format::text, io); }, "");
  CHECK(r.out == "m 3\nlambda 2.467504\nrate 1.303052\nbound 1.666667\ntrivial_bound 1.666667\n");
  CHECK(run([](Io io) { return run_rate(1, Format::text, io); }, "").status == kUsage);
  const Run s = run([](Io io) { return run_search({3, BlockMethod::exact}, io); }, "");
  CHECK(s.out == "3 1 8 exact\nAAA\nAAC\nACA\nACC\nCAA\nCAC\nCCA\nCCC\n");
  CHECK(run([](Io io) { return run_search({9, BlockMethod::greedy}, io); }, "").status == kUsage);
}

TEST_CASE("tables", "[cli]") {
  TableOptions opts;
  opts.m_range = {3, 3};
  opts.format = Format::rows;
  const Run rates = run([&](Io io) { return run_table(opts, io); }, "");
  CHECK(rates.out ==
        "scheme,m,block,size_or_lambda,rate,bound\n"
        "benerjee,3,2,5,1.1610,1.6667\n"
        "composition,3,-,2.4675,1.3031,1.6667\n"
        "block-exact,3,3,8,1.0000,1.6667\n"
        "block-greedy,3,3,8,1.0000,1.6667\n");
  opts.m_range = {1, 3};
  CHECK(run([&](Io io) { return run_table(opts, io); }, "").status == kUsage);

  opts.kind = TableKind::counts;
  opts.m_range = {3, 3};
  opts.n_range = {1, 4};
  CHECK(run([&](Io io) { return run_table(opts, io); }, "").out == "m,n,count\n3,1,3\n3,2,9\n3,3,19\n3,4,49\n");
  opts.n_range = {1, 10001};
  CHECK(run([&](Io io) { return run_table(opts, io); }, "").status == kUsage);
}

TEST_CASE("parse_range", "[cli]") {
  CHECK(parse_range("2..8").lo == 2);
  CHECK(parse_range("2..8").hi == 8);
  CHECK(parse_range("5").hi == 5);
  CHECK_THROWS_AS(parse_range("8..2"), parse_error);
  CHECK_THROWS_AS(parse_range("a..b"), parse_error);
}

TEST_CASE("bytes survive pack, encode, decode and unpack", "[cli]") {
  CodecOptions opts;
  opts.scheme = Scheme::replacement;
  opts.n = 256;
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::string data(63, '\0');
    for (auto& ch : data) ch = static_cast<char>(rng() & 0xFF);
    // 63 bytes pack to 252 symbols; three A's fill the 255-symbol message.
    const Run packed = run(run_pack, data);
    const std::string msg = trim(packed.out) + "AAA";
    const Run enc = run([&](Io io) { return run_encode(opts, io); }, msg);
    const Run dec = run([&](Io io) { return run_decode(opts, io); }, enc.out);
    REQUIRE(trim(dec.out) == msg);
    const Run unpacked = run(run_unpack, trim(dec.out).substr(0, 252));
    REQUIRE(unpacked.out == data);
  }
}
