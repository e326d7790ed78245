// k3cert: runs the certificate steps and reports the outcome.
//
//   k3cert verify <step>... [--trials N] [--seed S] [--bound B]
//                 [--format json|text] [--out PATH] [--dump] [--timing]
//
// Exit status: 0 when every step passes, 1 when any fails, 2 on usage or
// I/O errors. K3CERT_SEED sets the seed when --seed is absent.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "k3cert/cli.hpp"

namespace {

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace k3cert;
  CLI::App app{"Exact certificates for the quartic-scroll and (3,2)-curve computations"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run certificate steps");

  cli::RunConfig config;
  std::string seed_text;
  std::string out_path;
  verify->add_option("steps", config.steps, "Steps to run, or 'all'")->required();
  verify->add_option("--trials", config.trials, "Random trials per randomized step")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed_text, "Master seed (decimal or 0x-prefixed hex)");
  verify->add_option("--bound", config.bound, "Coefficient sampling bound")->check(CLI::PositiveNumber);
  const std::map<std::string, cli::Format> formats{{"json", cli::Format::Json}, {"text", cli::Format::Text}};
  verify->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_flag("--dump", config.dump, "Dump matrices and subspaces to stderr");
  verify->add_flag("--timing", config.timing, "Record elapsed_ms (makes output run-dependent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!seed_text.empty()) {
      config.seed = parse_seed(seed_text);
    } else if (const char* env = std::getenv("K3CERT_SEED"); env != nullptr && *env != '\0') {
      config.seed = parse_seed(env);
    }
  } catch (const std::exception&) {
    std::cerr << "k3cert: invalid seed\n";
    return 2;
  }
  if (!out_path.empty()) config.out = out_path;

  try {
    const auto reports = cli::run(config, &std::cerr);
    cli::emit_to(config, reports, std::cout);
    return cli::exit_code(reports);
  } catch (const UsageError& e) {
    std::cerr << "k3cert: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "k3cert: " << e.what() << "\n";
    return 2;
  }
}
