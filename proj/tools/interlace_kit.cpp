#include "interlace_kit/classify.hpp"
#include "interlace_kit/errors.hpp"
#include "interlace_kit/gen.hpp"
#include "interlace_kit/interlace.hpp"
#include "interlace_kit/io.hpp"
#include "interlace_kit/report.hpp"
#include "interlace_kit/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ikit;
using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct Output {
  bool json = false;
  bool decimal = false;
};

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(const json& document) { std::cout << document.dump(2) << '\n'; }

MatrixFile read_square(const std::string& path) {
  MatrixFile file = read_matrix_file(path);
  if (file.matrix.rows() != file.matrix.cols()) {
    throw DomainError("expected a square matrix, got " + std::to_string(file.matrix.rows()) + " x " +
                      std::to_string(file.matrix.cols()));
  }
  return file;
}

int run_classify(const std::string& path, const Output& out) {
  Timer timer;
  const MatrixFile file = read_square(path);
  const ClassReport report = classify(file.matrix);
  if (out.json) {
    emit_json(envelope("classify", &file, class_report_json(report, out.decimal), timer.elapsed_ms()));
  } else {
    std::cout << class_report_text(report, out.decimal);
  }
  return kHolds;
}

int run_compound(const std::string& path, int k, const Output& out) {
  Timer timer;
  const MatrixFile file = read_square(path);
  const RationalMatrix c = compound(file.matrix, k);
  if (out.json) {
    json result = {{"k", k}, {"rows", c.rows()}, {"cols", c.cols()}, {"matrix", matrix_to_json(c, out.decimal)}};
    emit_json(envelope("compound", &file, std::move(result), timer.elapsed_ms()));
  } else {
    std::cout << format_matrix(c, file.format, out.decimal);
  }
  return kHolds;
}

struct VerifyArgs {
  std::string property;
  std::string path;
  std::optional<int> r;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  bool zigzag = false;
  bool all_pairs = false;
};

void check_verify_flags(const VerifyArgs& args) {
  if (args.r && args.property != "theorem10") throw ParseError("--r applies to --property theorem10 only");
  if ((args.alpha || args.beta || args.zigzag) && args.property != "kotelyansky") {
    throw ParseError("--alpha, --beta and --zigzag apply to --property kotelyansky only");
  }
  if (args.alpha.has_value() != args.beta.has_value()) throw ParseError("--alpha and --beta must be given together");
  if (args.all_pairs && args.property != "tau" && args.property != "tau-strict") {
    throw ParseError("--all-pairs applies to --property tau and tau-strict only");
  }
}

int run_verify(const VerifyArgs& args, const Output& out) {
  check_verify_flags(args);
  Timer timer;
  const MatrixFile file = read_square(args.path);
  const RationalMatrix& a = file.matrix;

  if (args.property == "kotelyansky") {
    std::optional<std::pair<Rational, Rational>> bracket;
    if (args.alpha) bracket.emplace(parse_rational(*args.alpha), parse_rational(*args.beta));
    const KotelyanskyPipeline p = run_kotelyansky_pipeline(a, args.zigzag, bracket);
    const DescartesResult d = descartes_border_check(a);
    if (out.json) {
      emit_json(envelope("verify", &file, pipeline_json(p, d, out.decimal), timer.elapsed_ms()));
    } else {
      std::cout << pipeline_text(p, d, out.decimal);
    }
    return p.holds() ? kHolds : kViolated;
  }

  InterlaceReport report;
  if (args.property == "tau" || args.property == "tau-strict") {
    TauOptions options;
    options.all_pairs = args.all_pairs;
    report = verify_tau(a, args.property == "tau-strict", options);
  } else if (args.property == "weak") {
    report = verify_weak_interlacing(a);
  } else {
    report = verify_theorem10(a, args.r);
  }
  if (out.json) {
    emit_json(envelope("verify", &file, interlace_report_json(report, out.decimal), timer.elapsed_ms()));
  } else {
    std::cout << interlace_report_text(report, out.decimal);
  }
  return report.holds ? kHolds : kViolated;
}

struct SearchArgs {
  std::string target;
  std::string cls = "stp";
  std::uint64_t seed = 0;
  long budget = 0;
  std::vector<int> sizes;
};

bool target_member(const RationalMatrix& a, GenTarget t) {
  switch (t) {
    case GenTarget::Positive: return is_positive(a).member;
    case GenTarget::STP: return is_stp(a).member;
    case GenTarget::SKNotSTP: return is_sk(a).member && !is_stp(a).member;
    case GenTarget::SJSKConjugated: return is_sjsk(a).member;
    case GenTarget::Arbitrary: return true;
  }
  return false;
}

int run_search(const SearchArgs& args, const Output& out) {
  if (args.budget <= 0) throw ParseError("--budget must be positive");
  Timer timer;
  SearchConfig config;
  config.seed = args.seed;
  config.budget = args.budget;
  if (!args.sizes.empty()) config.sizes = args.sizes;

  if (args.target == "interior-counterexample") {
    config.target = parse_target(args.cls);
    const SearchResult result = search_interior_counterexample(config);
    if (out.json) {
      emit_json(envelope("search", nullptr, search_json(result, out.decimal), timer.elapsed_ms()));
    } else {
      std::cout << search_text(result, out.decimal);
    }
    return kHolds;
  }

  config.target = parse_target(args.target);
  for (int n : config.sizes) {
    if (n < 1) throw DomainError("matrix sizes must be positive");
  }
  std::vector<GeneratedInstance> instances;
  long skipped = 0;
  for (long i = 0; i < config.budget; ++i) {
    GenConfig gc;
    gc.seed = sample_seed(config, i);
    gc.n = config.sizes[static_cast<std::size_t>(i) % config.sizes.size()];
    gc.target = config.target;
    try {
      RationalMatrix a = generate(gc);
      const bool member = target_member(a, config.target);
      instances.push_back({i, gc.seed, std::move(a), member});
    } catch (const GenerationError&) {
      ++skipped;
    }
  }
  if (out.json) {
    emit_json(envelope("search", nullptr, generated_json(config, instances, skipped, out.decimal), timer.elapsed_ms()));
  } else {
    std::cout << generated_text(config, instances, skipped, out.decimal);
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification and eigenvalue interlacing checks for sign-regular matrices", "interlace-kit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Output out;
  auto add_output_flags = [&out](CLI::App* sub) {
    sub->add_flag("--json", out.json, "Emit a JSON report");
    sub->add_flag("--decimal", out.decimal, "Print rationals as rounded decimals instead of p/q");
  };

  std::string classify_path;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Decide membership in every matrix class, with witnesses");
  classify_cmd->add_option("file", classify_path, "Matrix file, or - for standard input")->required();
  add_output_flags(classify_cmd);

  std::string compound_path;
  int compound_k = 0;
  CLI::App* compound_cmd = app.add_subcommand("compound", "Print the k-th compound matrix");
  compound_cmd->add_option("-k", compound_k, "Compound order")->required();
  compound_cmd->add_option("file", compound_path, "Matrix file, or - for standard input")->required();
  add_output_flags(compound_cmd);

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check an interlacing property exactly");
  verify_cmd->add_option("--property", verify_args.property, "Property to check")
      ->required()
      ->check(CLI::IsMember({"tau", "tau-strict", "weak", "theorem10", "kotelyansky"}));
  verify_cmd->add_option("--r", verify_args.r, "theorem10: check only the chain for this deleted index (1-based)");
  verify_cmd->add_option("--alpha", verify_args.alpha, "kotelyansky: left end of the bracket");
  verify_cmd->add_option("--beta", verify_args.beta, "kotelyansky: right end of the bracket");
  verify_cmd->add_flag("--zigzag", verify_args.zigzag, "kotelyansky: conjugate by the order (1, n, 2, n-1, ...) first");
  verify_cmd->add_flag("--all-pairs", verify_args.all_pairs, "tau: compare every nested pair, not just covering pairs");
  verify_cmd->add_option("file", verify_args.path, "Matrix file, or - for standard input")->required();
  add_output_flags(verify_cmd);

  SearchArgs search_args;
  CLI::App* search_cmd = app.add_subcommand("search", "Seeded generation and the interior-index counterexample search");
  search_cmd->add_option("--target", search_args.target, "interior-counterexample or a generator target")
      ->required()
      ->check(CLI::IsMember({"interior-counterexample", "positive", "stp", "sk-not-stp", "sjsk-conjugated", "arbitrary"}));
  search_cmd->add_option("--seed", search_args.seed, "Base seed")->required();
  search_cmd->add_option("--budget", search_args.budget, "Number of samples")->required();
  search_cmd->add_option("--n", search_args.sizes, "Matrix size, repeatable; samples cycle through the sizes (default 4)")
      ->take_all();
  search_cmd->add_option("--class", search_args.cls, "interior-counterexample: sampled class")
      ->check(CLI::IsMember({"stp", "sk-not-stp"}));
  add_output_flags(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_path, out);
    if (compound_cmd->parsed()) return run_compound(compound_path, compound_k, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
    return run_search(search_args, out);
  } catch (const ikit::Error& e) {
    std::cerr << "interlace-kit: " << e.what() << '\n';
    return kUsage;
  }
}
