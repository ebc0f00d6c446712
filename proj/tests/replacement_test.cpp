#include <catch_amalgamated.hpp>

#include <random>

#include "ssa/replacement.hpp"
#include "test_support.hpp"

using namespace ssa;
using namespace ssa::literals;
using ssa::test::seq;

namespace {

DnaSeq adversarial_stem(std::size_t n) {
  // A^k C^3 A^2 G^3 T^k: one long A/T stem around a small hairpin.
  const std::size_t k = (n - 1 - 8) / 2;
  return DnaSeq(k, Base::A) + "CCCAAGGG"_dna + DnaSeq(n - 1 - 8 - k, Base::T);
}

std::vector<DnaSeq> adversarial_inputs(std::size_t n) {
  std::vector<DnaSeq> out;
  out.push_back(adversarial_stem(n));
  out.push_back(DnaSeq(n - 1, Base::A));
  out.push_back(DnaSeq(n - 1, Base::G));
  for (auto [a, b] : {std::pair{Base::A, Base::T}, {Base::A, Base::C}, {Base::C, Base::G}, {Base::G, Base::T}}) {
    DnaSeq x = repeat_pair(a, b, (n - 1) / 2);
    x.push_back(a);
    out.push_back(x);
  }
  DnaSeq half = repeat("ACG"_dna, (n - 1) / 6);
  DnaSeq mixed = half + revcomp(half);
  while (mixed.size() < n - 1) mixed.push_back(Base::C);
  out.push_back(mixed);
  return out;
}

}  // namespace

TEST_CASE("codec parameters", "[replacement]") {
  const CodecParams p = validate_params(64);
  CHECK(p.p == 3);
  CHECK(p.mprime == 11);
  CHECK(p.m_guarantee == 22);
  CHECK(p.rc_pointer_length() == 10);
  CHECK(p.run_pointer_length() == 9);
  CHECK(validate_params(256).m_guarantee == 28);
  CHECK_THROWS_AS(validate_params(60), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(16), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(0), std::invalid_argument);
}

TEST_CASE("scan_trigger", "[replacement]") {
  CHECK(scan_trigger("ACGT"_dna, 2) == Trigger{RcPairTrigger{0, 1, 2}});
  CHECK(scan_trigger("ACACAC"_dna, 4) == Trigger{RunTrigger{0, 5, Base::A, Base::C}});
  // Both an RC pair and a run start at 0; the pair wins.
  CHECK(scan_trigger("ATATAT"_dna, 2) == Trigger{RcPairTrigger{0, 1, 2}});
  CHECK(is_none(scan_trigger("AACC"_dna, 3)));
  // The run starts earlier than any pair.
  CHECK(scan_trigger("GCGCGAAT"_dna, 4) == Trigger{RunTrigger{0, 3, Base::G, Base::C}});
}

TEST_CASE("golden codewords", "[replacement]") {
  const CodecParams p64 = validate_params(64);
  CHECK(encode(adversarial_stem(64), p64).str() ==
        "CAATAGCGCTACTTAGCGCTAAAACCCTACCCAAGGGTTTTTTACACACACACACACACACACA");
  DnaSeq alt = repeat_pair(Base::A, Base::T, 31);
  alt.push_back(Base::A);
  CHECK(encode(alt, p64).str() == "TTGGCCTCGTTTTTTGGCACTACGTTTTTGTAATACGAGAAATATATATATAAAAATATAACAC");
  CHECK(encode(DnaSeq(63, Base::A), p64) == DnaSeq(64, Base::A));
  CHECK(encode(DnaSeq(255, Base::A), validate_params(256)) == DnaSeq(256, Base::A));
  CHECK(encode(adversarial_stem(256), validate_params(256)).str() ==
        "CAATCTGGCACTTTCCTCTGGTGGTTAGTTTCCGTACTTAAATAGTGATTTAGAGTAAACGCATACTCAGAGCCCGTATCTACTCCTGCTAAGAATCTCTATTAAAAAAGTC"
        "ATACCCAAGGGTTTTTTTTTTTT" + repeat_pair(Base::A, Base::C, 60).str() + "A");

  const std::vector<std::pair<std::string, std::string>> planted{
      {"GGGTTGTAGCTAAGGTAAAATTAGCGTTCGAAGCGCTAATTTTACCTTAGCTACAACATCCAC",
       "TTCACACCGCTAAGAGTCGGAGGGTTGTAGCTAAGGTAAAATTAGCGTTCGAAGCGATCCACAC"},
      {"CAGATTAAAGGTTGTTGGAGGTACCATTGAATTGGGTACCTCCAACAACCTTTAATTTTTGGA",
       "TTCTCAGCGTTATAAGCCGCACAGATTAAAGGTTGTTGGAGGTACCATTGAATTGTTTTGGAAC"},
      {"GAAAACTGCGGCTATTGACTTAACGGTAATCCTCCGTTAAGTCAATAGCCGCAGTCATCCAGA",
       "TTCCCTACGATATTAGGCGTAGAAAACTGCGGCTATTGACTTAACGGTAATCCTCATCCAGAAC"},
  };
  for (const auto& [x, c] : planted) {
    CHECK(encode(seq(x), p64).str() == c);
    CHECK(decode(seq(c), p64).str() == x);
  }

  const std::string r256 =
      "CTGAAACATAAGGATAGAATAGATATCGTACTATCAAATGGCGGCCTTTACGCGCAAGTCTGGAACCCGGAACGAACGCGCAGCTAGATCTTGGGATGGCTGCGCGTT"
      "ATTTTAGTCCATGCCTAGGGGGAGGATATGTACAAATACAATGTCCCGAAGGGGCATACCGTATCTACACCTCTCTTTGTTGCAACGCTCGCCATATGTCTGAGCAAG"
      "TGTGCAGGGATTTATGTGCTTAAATGTTACTCTCCGTAC";
  REQUIRE(r256.size() == 255);
  CHECK(encode(seq(r256), validate_params(256)) == "A"_dna + seq(r256));
}

TEST_CASE("encode rejects wrong message lengths", "[replacement]") {
  CHECK_THROWS_AS(encode(DnaSeq(64, Base::A), validate_params(64)), std::invalid_argument);
  CHECK_THROWS_AS(encode(DnaSeq(62, Base::A), validate_params(64)), std::invalid_argument);
}

TEST_CASE("round trip, validity and progress", "[replacement][property]") {
  for (std::size_t n : {std::size_t{64}, std::size_t{256}}) {
    const CodecParams params = validate_params(n);
    std::mt19937_64 rng(n);
    std::vector<DnaSeq> inputs = adversarial_inputs(n);
    const int random_count = n == 64 ? 10000 : 1000;
    for (int i = 0; i < random_count; ++i) {
      DnaSeq x = test::random_seq(rng, n - 1);
      // One in four inputs gets a planted stem so replacement paths are hit.
      if (i % 4 == 0) {
        std::uniform_int_distribution<std::size_t> pos(0, n - 1 - 2 * params.m_guarantee);
        const std::size_t a = pos(rng);
        const DnaSeq z = revcomp(x.substr(a, params.m_guarantee));
        const std::size_t b = n - 1 - params.m_guarantee;
        for (std::size_t t = 0; t < z.size(); ++t) x[b + t] = z[t];
      }
      inputs.push_back(std::move(x));
    }

    std::size_t replaced = 0;
    for (const auto& x : inputs) {
      std::size_t steps = 0;
      const EncodeResult res = encode_detailed(x, params, [&](const Trigger& t, const DnaSeq& before, const DnaSeq& after) {
        ++steps;
        if (std::holds_alternative<RcPairTrigger>(t)) {
          REQUIRE(after.size() + 1 == before.size());
        } else {
          REQUIRE(after.size() + (params.p - 1) <= before.size());
        }
        REQUIRE(after[0] != Base::G);
      });
      REQUIRE(steps == res.replacements);
      REQUIRE(res.replacements <= n - (params.mprime - 1));
      replaced += res.replacements > 0;
      REQUIRE(res.codeword.size() == n);
      REQUIRE(res.codeword[0] != Base::G);
      REQUIRE(is_m_ssa(res.codeword, params.m_guarantee));
      REQUIRE(decode(res.codeword, params) == x);
    }
    CHECK(replaced > inputs.size() / 5);
  }
}

TEST_CASE("the padding suffix does not affect decoding", "[replacement][property]") {
  const CodecParams params = validate_params(64);
  std::mt19937_64 rng(99);
  std::size_t checked = 0;
  for (int i = 0; i < 2000; ++i) {
    DnaSeq x = test::random_seq(rng, 63);
    if (i % 2 == 0) {
      const DnaSeq z = revcomp(x.substr(0, 22));
      for (std::size_t t = 0; t < 22; ++t) x[41 + t] = z[t];
    }
    const EncodeResult res = encode_detailed(x, params);
    if (res.payload_length == params.n) continue;
    DnaSeq c = res.codeword;
    for (std::size_t t = res.payload_length; t < c.size(); ++t) c[t] = base_from_digit(static_cast<unsigned>(rng() % 4));
    REQUIRE(decode(c, params) == x);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("decode rejects non-codewords", "[replacement]") {
  const CodecParams params = validate_params(64);
  CHECK_THROWS_AS(decode(DnaSeq(63, Base::A), params), not_a_codeword);
  CHECK_THROWS_AS(decode("G"_dna + DnaSeq(63, Base::A), params), not_a_codeword);
  // RC pointer whose window length is not m'.
  CHECK_THROWS_AS(decode("TAAAAATAAA"_dna + DnaSeq(54, Base::A), params), not_a_codeword);
  // RC pointer with its target inside the source window.
  CHECK_THROWS_AS(decode("TAAAACCATT"_dna + DnaSeq(54, Base::A), params), not_a_codeword);
  // Run pointer of odd length.
  CHECK_THROWS_AS(decode("CACAAAACC"_dna + DnaSeq(55, Base::A), params), not_a_codeword);
  // Run pointer shorter than m'.
  CHECK_THROWS_AS(decode("CACAAAATT"_dna + DnaSeq(55, Base::A), params), not_a_codeword);
  // All-T parses as an RC pointer with i = j.
  CHECK_THROWS_AS(decode(DnaSeq(64, Base::T), params), not_a_codeword);
}
