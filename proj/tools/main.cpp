// ssa: build, check, count and run secondary-structure-avoiding DNA codes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "commands.hpp"

namespace {

using namespace ssa::cli;

// Opens the optional positional input path, falling back to stdin.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "'");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Secondary-structure-avoidance DNA codes"};
  app.require_subcommand(1);

  const std::map<std::string, Scheme> schemes{
      {"replacement", Scheme::replacement}, {"composition", Scheme::composition}, {"block", Scheme::block}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"rows", Format::rows}};
  const std::map<std::string, TableKind> kinds{{"rates", TableKind::rates}, {"counts", TableKind::counts}};
  const std::map<std::string, ssa::BlockMethod> methods{{"exact", ssa::BlockMethod::exact},
                                                        {"greedy", ssa::BlockMethod::greedy}};

  std::string input_path;
  CheckOptions check;
  CodecOptions codec;
  CountOptions counting;
  UnrankOptions unranking;
  SearchOptions search;
  TableOptions table;
  std::string m_range = "2..8";
  std::string n_range = "1..12";
  std::size_t m = 0;
  Format format = Format::text;

  auto* check_cmd = app.add_subcommand("check", "Test whether a sequence is m-SSA (exit 1 if not)");
  check_cmd->add_option("--m", check.m, "Stem length")->required();
  check_cmd->add_flag("--witness", check.witness, "Print the first violating pair");
  check_cmd->add_option("input", input_path, "DNA text file (default: stdin)");

  auto add_codec = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", codec.scheme, "replacement | composition | block")
        ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case))
        ->required();
    cmd->add_option("--n", codec.n, "Codeword length");
    cmd->add_option("--m", codec.m, "Window length (composition scheme)");
    cmd->add_option("--set-file", codec.set_file, "Block-set file (block scheme; default: the 5-block m=2 set)");
    cmd->add_flag("--bytes", codec.bytes, "Replacement scheme: raw byte payload, one codeword per frame");
    cmd->add_option("input", input_path, "Input file (default: stdin)");
  };
  auto* encode_cmd = app.add_subcommand("encode", "Encode a message");
  add_codec(encode_cmd);
  auto* decode_cmd = app.add_subcommand("decode", "Decode a codeword (exit 3 if it is not one)");
  add_codec(decode_cmd);

  auto* count_cmd = app.add_subcommand("count", "Size of the composition code C_n(m) (or C_n(m,k) by enumeration)");
  count_cmd->add_option("--m", counting.m, "Window length")->required();
  count_cmd->add_option("--n", counting.n, "Word length")->required();
  count_cmd->add_option("--k", counting.k, "A-quota per window (k > 1 enumerates, n <= 12)");

  auto* rank_cmd = app.add_subcommand("rank", "Lexicographic index of a composition codeword");
  rank_cmd->add_option("--m", m, "Window length")->required();
  rank_cmd->add_option("input", input_path, "DNA text file (default: stdin)");

  auto* unrank_cmd = app.add_subcommand("unrank", "Composition codeword with the given index");
  unrank_cmd->add_option("--m", unranking.m, "Window length")->required();
  unrank_cmd->add_option("--n", unranking.n, "Word length")->required();
  unrank_cmd->add_option("--index", unranking.index, "Decimal index")->required();

  auto* rate_cmd = app.add_subcommand("rate", "Asymptotic composition-code rate and capacity bounds");
  rate_cmd->add_option("--m", m, "Window length")->required();
  rate_cmd->add_option("--format", format, "text | rows")->transform(CLI::CheckedTransformer(formats));

  auto* search_cmd = app.add_subcommand("search", "Search for a block set and print it");
  search_cmd->add_option("--m", search.m, "Block length")->required();
  search_cmd->add_option("--method", search.method, "exact | greedy")->transform(CLI::CheckedTransformer(methods));

  auto* table_cmd = app.add_subcommand("table", "Rate or count tables");
  table_cmd->add_option("--kind", table.kind, "rates | counts")->transform(CLI::CheckedTransformer(kinds));
  table_cmd->add_option("--m-range", m_range, "a..b");
  table_cmd->add_option("--n-range", n_range, "a..b (counts)");
  table_cmd->add_option("--format", table.format, "text | rows")->transform(CLI::CheckedTransformer(formats));

  auto* pack_cmd = app.add_subcommand("pack", "Bytes to DNA, 4 symbols per byte");
  pack_cmd->add_option("input", input_path, "Input file (default: stdin)");
  auto* unpack_cmd = app.add_subcommand("unpack", "DNA to bytes");
  unpack_cmd->add_option("input", input_path, "Input file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Input input(input_path);
    Io io{input.stream(), std::cout, std::cerr};
    int status = kUsage;
    if (*check_cmd) status = run_check(check, io);
    else if (*encode_cmd) status = run_encode(codec, io);
    else if (*decode_cmd) status = run_decode(codec, io);
    else if (*count_cmd) status = run_count(counting, io);
    else if (*rank_cmd) status = run_rank(m, io);
    else if (*unrank_cmd) status = run_unrank(unranking, io);
    else if (*rate_cmd) status = run_rate(m, format, io);
    else if (*search_cmd) status = run_search(search, io);
    else if (*table_cmd) {
      table.m_range = parse_range(m_range);
      table.n_range = parse_range(n_range);
      status = run_table(table, io);
    } else if (*pack_cmd) status = run_pack(io);
    else if (*unpack_cmd) status = run_unpack(io);
    std::cout.flush();
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
