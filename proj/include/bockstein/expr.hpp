#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bockstein/cdtype.hpp"
#include "bockstein/dimension.hpp"
#include "bockstein/groups.hpp"
#include "bockstein/json.hpp"

namespace bockstein::expr {

struct Node {
  enum class Kind : std::uint8_t { Literal, Phi, Nat, Conj, Pow, Test, Sum, Times, Wedge, Query };

  Kind kind = Kind::Literal;
  std::size_t pos = 0;
  std::string name;  // query name
  std::vector<Node> args;
  CdType literal;
  BasisKind basis;
  GroupExpr group;
  ExtInt number;
};

using Value = std::variant<ExtInt, bool, CdType, BocksteinFn, BocksteinFamily, Decomposition, PowerReport, AnrReport>;

/// Throws ParseError with the byte offset of the offending token.
Node parse(std::string_view text);
GroupExpr parse_group(std::string_view text);

/// Throws EvalError carrying the position of the failing node.
Value eval(const Node& node);
Value evaluate(std::string_view text);
/// Evaluates text that must denote a cd-type.
CdType evaluate_cdtype(std::string_view text);

std::string render_text(const Value& v);
Json render_json(const Value& v);

/// Query names accepted at the top level.
const std::vector<std::string>& query_names();

}  // namespace bockstein::expr
