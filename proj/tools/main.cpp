#include "pact/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv)
{
  CLI::App app{"Partial actions of Z on the Cantor set: envelope, filtration and convolution checks"};
  app.require_subcommand(1);

  pact::CommandOptions opt;
  std::string file;
  int bound = 0;
  std::size_t depth = 0;
  std::size_t level = 0;
  std::size_t levels = 0;
  int t = 0;
  int s = 0;
  int support = 0;
  std::string p;
  std::string q;
  std::string base;

  const std::map<std::string, std::string> about{
      {"validate", "check rules and run the axiom check"},
      {"hausdorff", "decide whether the domains are clopen"},
      {"related", "test two germs for the envelope relation"},
      {"axioms", "full axiom report at a bound"},
      {"etale", "bijectivity of range and source on basic opens"},
      {"quotient", "classes of the relation on cells"},
      {"filtrate", "inclusion witness or truncated relation"},
      {"bratteli", "Bratteli diagram as JSON or DOT"},
      {"verify-psi", "randomized exact check of the psi identities"}};

  for (const auto& name : pact::command_names()) {
    auto* cmd = app.add_subcommand(name, about.contains(name) ? about.at(name) : "");
    cmd->add_option("file", file, "system definition (JSON)")->required();
    cmd->add_option("--bound", bound, "index bound N");
    cmd->add_option("--depth", depth, "search or cell depth");
    cmd->add_option("--level", level, "truncation level k of a generated map");
    cmd->add_option("--levels", levels, "number of Bratteli levels");
    cmd->add_option("--seed", opt.seed, "random seed (mt19937_64)");
    cmd->add_option("--out", opt.out, "json or dot");
    cmd->add_option("--cap", opt.cap, "search cap");
    cmd->add_option("--p", p, "germ r:pre(per)");
    cmd->add_option("--q", q, "germ s:pre(per)");
    cmd->add_option("--t", t, "first index");
    cmd->add_option("--s", s, "second index");
    cmd->add_option("--base", base, "clopen base set, e.g. {0,11}");
    cmd->add_option("--trials", opt.trials, "random trials");
    cmd->add_option("--support", support, "index bound of random blocks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto* cmd = app.get_subcommands().front();
  auto given = [cmd](const char* flag) { return cmd->count(flag) > 0; };
  if (given("--bound"))
    opt.bound = bound;
  if (given("--depth"))
    opt.depth = depth;
  if (given("--level"))
    opt.level = level;
  if (given("--levels"))
    opt.levels = levels;
  if (given("--t"))
    opt.t = t;
  if (given("--s"))
    opt.s = s;
  if (given("--support"))
    opt.support = support;
  if (given("--p"))
    opt.p = p;
  if (given("--q"))
    opt.q = q;
  if (given("--base"))
    opt.base = base;

  return pact::run_command(cmd->get_name(), file, opt, std::cout, std::cerr);
}
