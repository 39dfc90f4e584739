#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quotidx/cli.hpp"

namespace {

struct CommonFlags {
  std::string input;
  std::uint64_t seed = 1;
  double tol_root = 1e-10;
  double tol_classify = 1e-6;
  int max_degree = 4;
  bool with_oracle = false;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
  cmd->add_option("--input", flags.input, "problem description file")->required();
  cmd->add_option("--seed", flags.seed, "PRNG seed for the numeric oracle");
  cmd->add_option("--tol-root", flags.tol_root, "root-finding residual tolerance");
  cmd->add_option("--tol-classify", flags.tol_classify,
                  "orbit classification tolerance");
  cmd->add_option("--max-degree", flags.max_degree,
                  "degree bound for invariant perturbation generators");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"radial index of invariant 1-forms on real quotient singularities"};
  app.require_subcommand(1);
  CommonFlags flags;

  CLI::App *sig = app.add_subcommand(
      "signature", "signature of the invariant residue pairing");
  add_common(sig, flags);
  sig->add_flag("--with-oracle", flags.with_oracle,
                "attach the numeric conservation-law cross-check");
  CLI::App *qu = app.add_subcommand("quantum", "sector dimensions and signatures");
  add_common(qu, flags);
  CLI::App *oc = app.add_subcommand(
      "oracle-check", "numeric conservation-law check against the signature");
  add_common(oc, flags);
  CLI::App *bu = app.add_subcommand("burnside", "Burnside ring reductions");
  add_common(bu, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : quotidx::kInputError;
  }

  std::ifstream in(flags.input);
  if (!in) {
    std::cerr << "error: cannot open " << flags.input << "\n";
    return quotidx::kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  quotidx::ProblemDescription desc;
  try {
    desc = quotidx::parse_problem(buf.str());
  } catch (const quotidx::InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return quotidx::kInputError;
  }

  quotidx::RunOptions options;
  options.seed = flags.seed;
  options.tol_root = flags.tol_root;
  options.tol_classify = flags.tol_classify;
  options.max_degree = flags.max_degree;
  options.with_oracle = flags.with_oracle;

  std::string command = app.get_subcommands().front()->get_name();
  return quotidx::run_command(command, desc, options, std::cout, std::cerr);
}
