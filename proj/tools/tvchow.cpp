#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tvchow/commands.hpp"
#include "tvchow/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tvchow::ParseError(0, 0, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Chow generator counts of complexity-one T-varieties"};
  app.require_subcommand(1);

  std::string input, k_range, mode = "auto", format = "text", strategy;
  std::size_t N = 0;
  bool serial = false;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "computation document ('-' for stdin)")->required();
  };
  auto* validate = app.add_subcommand("validate", "check a computation document");
  with_input(validate);
  validate->add_option("--format", format, "text or csv");

  auto* downgrade = app.add_subcommand("downgrade", "build Y_C for X x E_T^N");
  with_input(downgrade);
  downgrade->add_option("--N", N, "size of the approximation E_T^N");
  downgrade->add_option("--mode", mode, "geometric, counting or auto");
  downgrade->add_flag("--serial", serial, "disable OpenMP");

  auto* count = app.add_subcommand("count", "generator counts |r_k|, |v_k|, |t_k|");
  with_input(count);
  count->add_option("--N", N, "size of the approximation E_T^N");
  count->add_option("--k", k_range, "codimension k or range lo..hi");
  count->add_option("--format", format, "text or csv");
  count->add_option("--strategy", strategy, "example-table or textbook");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite");
  selfcheck->add_flag("--serial", serial, "disable OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tvchow::kExitParse;
  }

  tvchow::CommandOptions opts;
  std::string text;
  try {
    opts.caps = tvchow::ResourceCaps::from_environment();
    if (N != 0) opts.N = N;
    if (!k_range.empty()) opts.k = tvchow::parse_k_range(k_range);
    if (!strategy.empty()) opts.strategy = tvchow::parse_strategy(strategy);
    opts.mode = tvchow::parse_mode(mode);
    opts.format = tvchow::parse_format(format);
    opts.exec = serial ? tvchow::Execution::serial : tvchow::Execution::parallel;
    if (!input.empty()) text = read_input(input);
  } catch (const tvchow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tvchow::kExitParse;
  }

  if (*validate) return tvchow::cmd_validate(text, opts, std::cout, std::cerr);
  if (*downgrade) return tvchow::cmd_downgrade(text, opts, std::cout, std::cerr);
  if (*count) return tvchow::cmd_count(text, opts, std::cout, std::cerr);
  return tvchow::cmd_selfcheck(opts, std::cout, std::cerr);
}
