#include <CLI11.hpp>

#include <iostream>

#include "bockstein/error.hpp"
#include "bockstein/expr.hpp"
#include "commands.hpp"

using namespace bockstein;

namespace {

cli::Output from_value(const expr::Value& v) { return {expr::render_text(v) + "\n", expr::render_json(v), 0}; }

int emit(const cli::Output& out, bool json) {
  if (json) {
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomological dimension types and Bockstein functions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON")->configurable(false);

  std::string text;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", text, "Expression")->required();

  auto* dec = app.add_subcommand("decompose", "Wedge decomposition of a cd-type into basis types");
  dec->add_option("expr", text, "cd-type expression")->required();

  auto* sig = app.add_subcommand("sigma", "Bockstein family of an abelian group");
  sig->add_option("group", text, "Group expression")->required();

  cli::TableArgs targs;
  auto* table = app.add_subcommand("table", "Tables of fundamental types and their products");
  table->add_option("kind", targs.kind, "fundamental or products")->required()->check(
      CLI::IsMember({"fundamental", "products"}));
  table->add_option("--n", targs.n, "Dimension n");
  table->add_option("--m", targs.m, "Dimension m of the second factor");
  table->add_option("--p", targs.p, "Prime p");
  table->add_option("--q", targs.q, "Prime q");

  cli::VerifyArgs vargs;
  auto* ver = app.add_subcommand("verify", "Check the homological constructions");
  ver->add_option("target", vargs.target, "pontryagin, mp-pair, ew or join")
      ->required()
      ->check(CLI::IsMember({"pontryagin", "mp-pair", "ew", "join"}));
  ver->add_option("--p", vargs.p, "Prime p");
  ver->add_option("--q", vargs.q, "Second prime");
  ver->add_option("--n", vargs.n, "Degree n (ew)");
  ver->add_option("--stages", vargs.stages, "Number of Pontryagin stages");
  ver->add_option("--max", vargs.max_degree, "Highest degree (join)");
  ver->add_option("--coeff", vargs.coeff, "Coefficients (mp-pair): Q, Z/q or Z/p");

  cli::LawArgs largs;
  auto* laws = app.add_subcommand("check-laws", "Check the algebraic laws over a finite universe");
  laws->add_option("--primes", largs.primes, "Exceptional primes")->delimiter(',');
  laws->add_option("--max", largs.max, "Largest finite value");
  laws->add_option("--laws", largs.laws, "Comma-separated law names, or all");
  laws->add_option("--samples", largs.samples, "Sampled tuples when exhaustive checking is too large");

  for (auto* sub : {eval, dec, sig, table, ver, laws}) sub->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return emit(from_value(expr::evaluate(text)), json);
    if (*dec) return emit(from_value(decompose(expr::evaluate_cdtype(text))), json);
    if (*sig) return emit(from_value(sigma(expr::parse_group(text))), json);
    if (*table) return emit(cli::emit_table(targs), json);
    if (*ver) return emit(cli::verify(vargs), json);
    if (*laws) return emit(cli::check_laws_cmd(largs), json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
