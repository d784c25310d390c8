#include "bockstein/expr.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "bockstein/error.hpp"

namespace bockstein::expr {

namespace {

enum class Arg : std::uint8_t { Cd, Group, Val, Nat, Prime };

const std::map<std::string, std::vector<Arg>>& queries() {
  static const std::map<std::string, std::vector<Arg>> table = {
      {"norm", {Arg::Cd}},
      {"inorm", {Arg::Cd}},
      {"dim", {Arg::Cd, Arg::Group}},
      {"sigma", {Arg::Group}},
      {"decompose", {Arg::Cd}},
      {"leq", {Arg::Cd, Arg::Cd}},
      {"phi", {Arg::Cd}},
      {"fullvalued", {Arg::Cd}},
      {"anr", {Arg::Cd}},
      {"power", {Arg::Cd, Arg::Nat}},
      {"testdim", {Arg::Cd, Arg::Group, Arg::Val}},
      {"deficiency", {Arg::Cd, Arg::Prime}},
      {"regular", {Arg::Cd, Arg::Prime}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Node top() {
    skip();
    std::size_t start = i_;
    std::string id = peek_ident();
    Node n;
    if (queries().count(id) != 0) {
      n = query();
    } else {
      i_ = start;
      n = cdexpr();
    }
    finish();
    return n;
  }

  GroupExpr group_only() {
    GroupExpr g = group();
    finish();
    return g;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(s_.substr(i_, 8)) + "'");
  }

  bool accept(std::string_view lit) {
    skip();
    if (s_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::string peek_ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    return std::string(s_.substr(i_, j - i_));
  }

  std::string ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected a name");
    i_ += id.size();
    return id;
  }

  std::int64_t integer() {
    skip();
    std::size_t start = i_;
    bool neg = accept("-");
    skip();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec == std::errc::invalid_argument) fail("expected a number");
    if (ec == std::errc::result_out_of_range || v > static_cast<std::uint64_t>(INT64_MAX)) {
      i_ = start;
      fail("number out of range");
    }
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  }

  ExtInt value() {
    skip();
    if (accept("inf")) return ExtInt::inf();
    if (accept("-inf")) return ExtInt::neg_inf();
    return integer();
  }

  std::int64_t natural() {
    std::size_t start = (skip(), i_);
    std::int64_t v = integer();
    if (v < 1) {
      i_ = start;
      fail("expected a positive integer");
    }
    return v;
  }

  Prime prime() {
    std::size_t start = (skip(), i_);
    std::int64_t v = integer();
    if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) {
      i_ = start;
      fail(std::to_string(v) + " is not a prime");
    }
    return Prime(static_cast<std::uint64_t>(v));
  }

  std::vector<Prime> prime_list(std::string_view close) {
    std::vector<Prime> out;
    if (accept(close)) return out;
    do {
      out.push_back(prime());
    } while (accept(","));
    expect(close);
    return out;
  }

  PrimeSet prime_set() {
    if (accept("{")) return PrimeSet::finite(prime_list("}"));
    if (accept("all")) {
      if (accept("-")) {
        expect("{");
        return PrimeSet::cofinite(prime_list("}"));
      }
      return PrimeSet::all();
    }
    fail("expected a prime set");
  }

  PrimeFn<ExtInt> dspec() {
    expect("{");
    std::optional<ExtInt> zero;
    if (accept("zero")) {
      expect(":");
      zero = value();
      expect(",");
    }
    expect("default");
    expect(":");
    ExtInt fallback = value();
    std::vector<PrimeFn<ExtInt>::Exception> ex;
    while (accept(",")) {
      Prime p = prime();
      expect(":");
      ex.emplace_back(p, value());
    }
    expect("}");
    return PrimeFn<ExtInt>(zero.value_or(fallback), fallback, std::move(ex));
  }

  BasisKind basis() {
    std::size_t start = (skip(), i_);
    std::string id = ident();
    if (id == "Q") return BasisKind::q();
    auto with_prime = [&](BasisKind (*make)(Prime)) {
      expect("(");
      Prime p = prime();
      expect(")");
      return make(p);
    };
    if (id == "Zp") return with_prime(&BasisKind::zp);
    if (id == "Zpinf") return with_prime(&BasisKind::zp_inf);
    if (id == "Zloc") return with_prime(&BasisKind::zloc);
    i_ = start;
    fail("'" + id + "' is not in the Bockstein basis (Q, Zp(p), Zpinf(p), Zloc(p))");
  }

  GroupExpr::Pattern pattern() {
    std::string id = ident();
    if (id == "Zp") return GroupExpr::Pattern::Zp;
    if (id == "Zpinf") return GroupExpr::Pattern::ZpInfinity;
    fail("expected Zp or Zpinf");
  }

  GroupExpr group_term() {
    skip();
    std::size_t start = i_;
    if (accept("(")) {
      GroupExpr g = group();
      expect(")");
      return g;
    }
    std::string id = ident();
    if (id == "Q") return GroupExpr::q();
    if (id == "Z") {
      if (!accept("/")) return GroupExpr::z();
      Prime p = prime();
      std::int64_t k = accept("^") ? natural() : 1;
      return GroupExpr::zpk(p, static_cast<std::uint64_t>(k));
    }
    if (id == "Zpinf" || id == "Zinv") {
      expect("(");
      Prime p = prime();
      expect(")");
      return id == "Zpinf" ? GroupExpr::zp_inf(p) : GroupExpr::zinv(p);
    }
    if (id == "Zloc") {
      expect("{");
      auto ps = prime_list("}");
      if (ps.empty()) fail("Zloc needs at least one prime");
      return GroupExpr::zlocal(PrimeSet::finite(ps));
    }
    if (id == "SumAll") {
      expect("(");
      auto pat = pattern();
      expect(")");
      return GroupExpr::sum_over(PrimeSet::all(), pat);
    }
    if (id == "SumOver") {
      expect("(");
      PrimeSet ps = prime_set();
      expect(",");
      auto pat = pattern();
      expect(")");
      return GroupExpr::sum_over(ps, pat);
    }
    i_ = start;
    fail("unknown group '" + id + "'");
  }

  GroupExpr group() {
    std::vector<GroupExpr> terms{group_term()};
    while (true) {
      skip();
      if (s_.substr(i_, 1) != "+") break;
      ++i_;
      terms.push_back(group_term());
    }
    return GroupExpr::direct_sum(std::move(terms));
  }

  Node make(Node::Kind kind, std::size_t pos) {
    Node n;
    n.kind = kind;
    n.pos = pos;
    return n;
  }

  Node binary(Node::Kind kind, std::size_t pos, Node lhs, Node rhs) {
    if (lhs.kind == kind) {
      lhs.args.push_back(std::move(rhs));
      return lhs;
    }
    Node n = make(kind, pos);
    n.args.push_back(std::move(lhs));
    n.args.push_back(std::move(rhs));
    return n;
  }

  Node cdexpr() {
    Node lhs = pterm();
    while (true) {
      std::size_t pos = (skip(), i_);
      if (!accept("\\/")) break;
      lhs = binary(Node::Kind::Wedge, pos, std::move(lhs), pterm());
    }
    return lhs;
  }

  Node pterm() {
    Node lhs = xterm();
    while (true) {
      std::size_t pos = (skip(), i_);
      if (!accept("[+]")) break;
      lhs = binary(Node::Kind::Sum, pos, std::move(lhs), xterm());
    }
    return lhs;
  }

  Node xterm() {
    Node lhs = atom();
    while (true) {
      std::size_t pos = (skip(), i_);
      if (!accept("[x]")) break;
      lhs = binary(Node::Kind::Times, pos, std::move(lhs), atom());
    }
    return lhs;
  }

  Node atom() {
    skip();
    std::size_t pos = i_;
    if (accept("(")) {
      Node n = cdexpr();
      expect(")");
      return n;
    }
    std::string id = ident();
    if (id == "zero") return make(Node::Kind::Literal, pos);
    if (id == "Phi") {
      Node n = make(Node::Kind::Phi, pos);
      expect("(");
      n.basis = basis();
      expect(",");
      n.number = value();
      expect(")");
      return n;
    }
    if (id == "nat") {
      Node n = make(Node::Kind::Nat, pos);
      expect("(");
      n.number = value();
      expect(")");
      return n;
    }
    if (id == "triple") {
      Node n = make(Node::Kind::Literal, pos);
      expect("(");
      expect("S");
      expect("=");
      PrimeSet s = prime_set();
      expect(",");
      expect("D");
      expect("=");
      PrimeSet d = prime_set();
      expect(",");
      expect("d");
      expect("=");
      auto fn = dspec();
      expect(")");
      try {
        n.literal = CdType::triple(s, d, fn);
      } catch (const Error& e) {
        throw ParseError(pos, e.what());
      }
      return n;
    }
    if (id == "conj") {
      Node n = make(Node::Kind::Conj, pos);
      expect("(");
      n.args.push_back(cdexpr());
      expect(")");
      return n;
    }
    if (id == "pow") {
      Node n = make(Node::Kind::Pow, pos);
      expect("(");
      n.args.push_back(cdexpr());
      expect(",");
      n.number = natural();
      expect(")");
      return n;
    }
    if (id == "test") {
      Node n = make(Node::Kind::Test, pos);
      expect("(");
      n.group = group();
      expect(",");
      n.number = value();
      expect(")");
      return n;
    }
    if (id == "prod" || id == "times" || id == "wedge") {
      Node n = make(id == "prod" ? Node::Kind::Sum : id == "times" ? Node::Kind::Times : Node::Kind::Wedge, pos);
      expect("(");
      do {
        n.args.push_back(cdexpr());
      } while (accept(","));
      expect(")");
      if (n.args.size() < 2) throw ParseError(pos, id + " needs at least two operands");
      return n;
    }
    i_ = pos;
    fail(id.empty() ? "expected a cd-type expression" : "unknown cd-type constructor '" + id + "'");
  }

  Node query() {
    skip();
    Node n = make(Node::Kind::Query, i_);
    n.name = ident();
    const auto& sig = queries().at(n.name);
    expect("(");
    for (std::size_t k = 0; k < sig.size(); ++k) {
      if (k > 0) expect(",");
      switch (sig[k]) {
        case Arg::Cd: n.args.push_back(cdexpr()); break;
        case Arg::Group: n.group = group(); break;
        case Arg::Val: n.number = value(); break;
        case Arg::Nat: n.number = natural(); break;
        case Arg::Prime: n.number = static_cast<std::int64_t>(prime().value()); break;
      }
    }
    expect(")");
    return n;
  }
};

CdType eval_cd(const Node& n);

CdType eval_cd_inner(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Literal: return n.literal;
    case Node::Kind::Phi: return phi_basis(n.basis, n.number);
    case Node::Kind::Nat: return nat(n.number);
    case Node::Kind::Conj: return conjugate(eval_cd(n.args[0]));
    case Node::Kind::Pow: return scale(static_cast<std::uint64_t>(n.number.value()), eval_cd(n.args[0]));
    case Node::Kind::Test: return test_space(n.group, n.number);
    case Node::Kind::Sum:
    case Node::Kind::Times:
    case Node::Kind::Wedge: {
      CdType acc = eval_cd(n.args[0]);
      for (std::size_t k = 1; k < n.args.size(); ++k) {
        CdType rhs = eval_cd(n.args[k]);
        acc = n.kind == Node::Kind::Sum ? sum(acc, rhs) : n.kind == Node::Kind::Times ? times(acc, rhs) : wedge(acc, rhs);
      }
      return acc;
    }
    case Node::Kind::Query: break;
  }
  throw EvalError(n.pos, "query '" + n.name + "' does not denote a cd-type");
}

CdType eval_cd(const Node& n) {
  try {
    return eval_cd_inner(n);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(n.pos, e.what());
  }
}

Value eval_query(const Node& n) {
  const std::string& q = n.name;
  if (q == "sigma") return sigma(n.group);
  CdType f = eval_cd(n.args[0]);
  if (q == "norm") return norm(f);
  if (q == "inorm") return inferior_norm(f);
  if (q == "dim") return dim(f, n.group);
  if (q == "decompose") return decompose(f);
  if (q == "leq") return leq(f, eval_cd(n.args[1]));
  if (q == "phi") return to_phi(f);
  if (q == "fullvalued") return is_full_valued(f);
  if (q == "anr") return anr_admissible(f);
  if (q == "power") return power_report(f, static_cast<std::uint64_t>(n.number.value()));
  if (q == "testdim") return testing_dim(f, n.group, n.number);
  Prime p(static_cast<std::uint64_t>(n.number.value()));
  if (q == "deficiency") return ExtInt(deficiency(f, p));
  if (q == "regular") return p_regular(f, p);
  throw EvalError(n.pos, "unknown query '" + q + "'");
}

std::string slot_text(const PrimeFn<ExtInt>& f) {
  std::string out = "{default:" + f.fallback().to_string();
  for (const auto& [p, v] : f.exceptions()) out += ", " + std::to_string(p.value()) + ":" + v.to_string();
  return out + "}";
}

}  // namespace

Node parse(std::string_view text) { return Parser(text).top(); }

GroupExpr parse_group(std::string_view text) { return Parser(text).group_only(); }

Value eval(const Node& node) {
  if (node.kind != Node::Kind::Query) return eval_cd(node);
  try {
    return eval_query(node);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(node.pos, e.what());
  }
}

Value evaluate(std::string_view text) { return eval(parse(text)); }

CdType evaluate_cdtype(std::string_view text) {
  Node n = parse(text);
  if (n.kind == Node::Kind::Query) throw ParseError(n.pos, "expected a cd-type expression, got query '" + n.name + "'");
  return eval_cd(n);
}

std::string render_text(const Value& v) {
  struct {
    std::string operator()(const ExtInt& x) const { return x.to_string(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const CdType& f) const { return f.to_string(); }
    std::string operator()(const BocksteinFn& phi) const {
      return "Q:" + phi.q.to_string() + ", Zp:" + slot_text(phi.zp) + ", Zpinf:" + slot_text(phi.zpinf) +
             ", Zloc:" + slot_text(phi.zloc);
    }
    std::string operator()(const BocksteinFamily& fam) const { return fam.to_string(); }
    std::string operator()(const Decomposition& d) const { return d.to_string(); }
    std::string operator()(const PowerReport& r) const {
      std::string out = r.kind == PowerReport::Kind::Basic ? "basic" : "exceptional";
      out += ", norms";
      for (const auto& x : r.power_norms) out += " " + x.to_string();
      return out;
    }
    std::string operator()(const AnrReport& r) const {
      if (r.admissible) return "admissible";
      std::string out = "not admissible:";
      for (const auto& c : r.violated) out += " " + c;
      return out;
    }
  } visitor;
  return std::visit(visitor, v);
}

Json render_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExtInt>) {
          return Json{{"kind", "number"}, {"value", to_json(x)}};
        } else if constexpr (std::is_same_v<T, bool>) {
          return Json{{"kind", "bool"}, {"value", x}};
        } else {
          return to_json(x);
        }
      },
      v);
}

const std::vector<std::string>& query_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, sig] : queries()) out.push_back(k);
    return out;
  }();
  return names;
}

}  // namespace bockstein::expr
