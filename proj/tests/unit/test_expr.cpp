#include <doctest.h>

#include "bockstein/error.hpp"
#include "bockstein/expr.hpp"
#include "bockstein/oracle.hpp"

using namespace bockstein;

namespace {

std::string run(std::string_view text) { return expr::render_text(expr::evaluate(text)); }

std::size_t error_position(std::string_view text) {
  try {
    expr::evaluate(text);
  } catch (const ParseError& e) {
    return e.position();
  } catch (const EvalError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("worked examples") {
  CHECK(run("norm(Phi(Zp(2),3) [+] Phi(Q,2))") == "4");
  CHECK(run("dim(nat(3), Z/2^2)") == "3");
  CHECK(run("sigma(Zinv(3))") == "Zloc(p) for all p ≠ 3");
  CHECK(run("decompose(triple(S={2}, D={2}, d={zero:1, default:1, 2:2}))") == "Phi(Zp(2),2) ∨ 1-types");
  CHECK(run("inorm(nat(5))") == "5");
  CHECK_THROWS_AS(expr::parse("Phi(Z,3)"), ParseError);
}

TEST_CASE("precedence and aliases") {
  auto a = expr::evaluate_cdtype("nat(1) \\/ nat(2) [+] nat(3) [x] nat(2)");
  CHECK(a == nat(8));
  CHECK(expr::evaluate_cdtype("(nat(1) \\/ nat(2)) [+] nat(3)") == nat(5));
  CHECK(expr::evaluate_cdtype("prod(nat(1), nat(2), nat(3))") == nat(6));
  CHECK(expr::evaluate_cdtype("times(nat(2), nat(3))") == nat(6));
  CHECK(expr::evaluate_cdtype("wedge(nat(2), nat(3))") == nat(3));
  CHECK(expr::evaluate_cdtype("pow(Phi(Zp(2),2), 2)") == sum(phi_basis(BasisKind::zp(Prime(2)), 2),
                                                              phi_basis(BasisKind::zp(Prime(2)), 2)));
  CHECK(run("leq(Phi(Q,2), nat(2))") == "true");
  CHECK(run("norm(nat(inf))") == "inf");
}

TEST_CASE("errors carry positions") {
  CHECK(error_position("Phi(Z,3)") == 4);
  CHECK(error_position("nat(2) [+] ") == 11);
  CHECK(error_position("norm(Phi(Zp(4),2))") == 12);
  CHECK(error_position("triple(S={2}, D={3}, d={default:1})") == 0);
  CHECK(error_position("decompose(nat(0))") != std::string::npos);
  CHECK_THROWS_AS(expr::evaluate("nosuch(nat(1))"), ParseError);
}

TEST_CASE("render then parse is the identity on cd-types") {
  Universe u{{Prime(2), Prime(3)}, 2, false};
  for (const auto& f : enumerate_types(u)) {
    auto text = expr::render_text(expr::Value{f});
    CHECK(expr::evaluate_cdtype(text) == f);
    CHECK(cdtype_from_json(to_json(f)) == f);
  }
  Universe ext{{Prime(2)}, 1, true};
  for (const auto& f : enumerate_extended(ext)) CHECK(expr::evaluate_cdtype(f.to_string()) == f);
  CHECK(expr::evaluate_cdtype("zero").is_zero());
}

TEST_CASE("output is deterministic") {
  std::string text = "phi(Phi(Zpinf(3),4) \\/ Phi(Zloc(2),2))";
  auto first = expr::render_json(expr::evaluate(text)).dump();
  for (int i = 0; i < 5; ++i) CHECK(expr::render_json(expr::evaluate(text)).dump() == first);
  CHECK(expr::render_json(expr::evaluate("norm(nat(3))")).dump() == R"({"kind":"number","value":3})");
}
