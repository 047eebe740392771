#include "ranklens/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ranklens/adversarial.hpp"
#include "ranklens/io.hpp"
#include "ranklens/oracle.hpp"
#include "ranklens/rationalize.hpp"
#include "ranklens/structure.hpp"

namespace ranklens::cli {

namespace {

using io::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSize:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::EmptySubgame:
    case ErrorCode::ChoiceOutsideSubgame:
    case ErrorCode::ProfileOutsideSubgame:
    case ErrorCode::SizeMismatch:
      return kMalformed;
    case ErrorCode::NotRationalizable:
    case ErrorCode::CyclicGraph:
      return kNegative;
    default:
      return kPrecondition;
  }
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string output_path;
};

std::string read_source(Context& ctx, const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(ctx.in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

void emit(Context& ctx, const std::string& text) {
  if (ctx.output_path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + ctx.output_path);
  f << text;
}

void error_record(Context& ctx, std::string_view name, const std::string& message) {
  ctx.err << json{{"error", name}, {"message", message}}.dump() << "\n";
}

DataSet load_dataset(Context& ctx, const std::string& path) {
  return io::dataset_from_json(io::parse_json(read_source(ctx, path)));
}

json witness_json(const RationalizabilityResult& r) {
  json cycle = json::array();
  for (const auto& p : r.cycle) cycle.push_back(io::profile_to_json(p));
  return {{"player", r.player == ConstraintPlayer::Row ? "row" : "column"}, {"cycle", cycle}};
}

int cmd_validate(Context& ctx, const std::string& file) {
  emit(ctx, io::canonical(io::dataset_to_json(load_dataset(ctx, file))));
  return kOk;
}

int cmd_analyze(Context& ctx, const std::string& file) {
  const auto d = load_dataset(ctx, file);
  const auto report = analyze_structure(d);
  emit(ctx, io::canonical(io::structure_to_json(report, is_rationalizable(d).rationalizable)));
  return kOk;
}

int cmd_rationalize(Context& ctx, const std::string& file, const std::string& method) {
  const auto d = load_dataset(ctx, file);
  try {
    RationalizationCertificate cert = [&] {
      if (method == "rank1") return rationalize_rank_one(d);
      if (method == "zerosum") return rationalize_zero_sum(d);
      if (method == "bounded") return rationalize_bounded_rank(d);
      if (method == "general") return rationalize_general(d);
      return rationalize_auto(d);
    }();
    emit(ctx, io::canonical(io::certificate_to_json(cert)));
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRationalizable) throw;
    json doc{{"rationalizable", false}, {"message", e.what()}};
    if (auto r = is_rationalizable(d); !r.rationalizable) doc["witness"] = witness_json(r);
    emit(ctx, io::canonical(doc));
    return kNegative;
  }
}

int cmd_verify(Context& ctx, const std::string& game_file, const std::string& data_file) {
  const auto game = io::game_from_json(io::parse_json(read_source(ctx, game_file)));
  const auto d = load_dataset(ctx, data_file);
  const auto report = rationalizes(game, d);
  emit(ctx, io::canonical(io::verification_to_json(report, game_rank(game))));
  return report.rationalizes() ? kOk : kNegative;
}

std::size_t size_cap_from_env() {
  const char* raw = std::getenv("RANKLENS_SIZE_CAP");
  if (!raw || !*raw) return kDefaultHadamardCap;
  char* end = nullptr;
  const auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0)
    throw Error(ErrorCode::SizeLimitExceeded, std::string("invalid RANKLENS_SIZE_CAP: ") + raw);
  return static_cast<std::size_t>(v);
}

int cmd_generate(Context& ctx, unsigned k, const std::string& variant) {
  auto d = two_regular_dataset(sylvester_hadamard(k, size_cap_from_env()));
  if (variant == "unique") d = uniqueness_variant(d);
  emit(ctx, io::canonical(io::dataset_to_json(d)));
  return kOk;
}

int cmd_minrank(Context& ctx, const std::string& file, int max_abs) {
  const auto d = load_dataset(ctx, file);
  SearchConfig config;
  config.max_abs_payoff = max_abs;
  const auto r = brute_force_min_rank(d, config);
  emit(ctx, r ? std::to_string(*r) + "\n" : std::string("none\n"));
  return r ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err, {}};
  CLI::App app{"Rationalize observed two-player play data with low-rank bimatrix games", "ranklens"};
  app.require_subcommand(1);
  app.add_option("-o,--output", ctx.output_path, "Write the result to this file");

  std::string file;
  std::string game_file;
  std::string method = "auto";
  unsigned k = 0;
  std::string variant = "laminar";
  int max_abs = 3;

  auto* validate = app.add_subcommand("validate", "Validate and canonicalize a data set");
  validate->add_option("dataset", file, "Data set file ('-' for stdin)")->required();

  auto* analyze = app.add_subcommand("analyze", "Report laminarity, uniqueness and crossing span");
  analyze->add_option("dataset", file, "Data set file ('-' for stdin)")->required();

  auto* rationalize = app.add_subcommand("rationalize", "Construct a rationalizing game");
  rationalize->add_option("dataset", file, "Data set file ('-' for stdin)")->required();
  rationalize->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"auto", "rank1", "zerosum", "bounded", "general"}));

  auto* verify = app.add_subcommand("verify", "Check a game against a data set");
  verify->add_option("game", game_file, "Game file")->required();
  verify->add_option("dataset", file, "Data set file")->required();

  auto* generate = app.add_subcommand("generate", "Generate adversarial data sets");
  generate->require_subcommand(1);
  auto* hadamard = generate->add_subcommand("hadamard", "Data set from the Sylvester matrix of order 2^k");
  hadamard->add_option("--k", k, "Hadamard exponent")->required();
  hadamard->add_option("--variant", variant, "laminar or unique")
      ->check(CLI::IsMember({"laminar", "unique"}));

  auto* minrank = app.add_subcommand("minrank", "Brute-force minimum rank (n <= 2)");
  minrank->add_option("dataset", file, "Data set file ('-' for stdin)")->required();
  minrank->add_option("--max-abs", max_abs, "Payoff bound M")->check(CLI::Range(1, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_record(ctx, "UsageError", e.what());
    return kPrecondition;
  }

  try {
    if (*validate) return cmd_validate(ctx, file);
    if (*analyze) return cmd_analyze(ctx, file);
    if (*rationalize) return cmd_rationalize(ctx, file, method);
    if (*verify) return cmd_verify(ctx, game_file, file);
    if (*hadamard) return cmd_generate(ctx, k, variant);
    if (*minrank) return cmd_minrank(ctx, file, max_abs);
  } catch (const Error& e) {
    error_record(ctx, e.name(), e.what());
    return exit_code_for(e.code());
  }
  return kPrecondition;
}

}  // namespace ranklens::cli
