#include "bockstein/json.hpp"

#include "bockstein/error.hpp"

namespace bockstein {

Json to_json(const ExtInt& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

Json to_json(const PrimeSet& s) {
  Json primes = Json::array();
  for (Prime p : s.primes()) primes.push_back(p.value());
  return Json{{"mode", s.is_finite() ? "finite" : "cofinite"}, {"primes", primes}};
}

Json to_json(const PrimeFn<ExtInt>& f) {
  Json ex = Json::object();
  for (const auto& [p, v] : f.exceptions()) ex[std::to_string(p.value())] = to_json(v);
  return Json{{"at_zero", to_json(f.at_zero())}, {"default", to_json(f.fallback())}, {"exceptions", ex}};
}

Json to_json(const CdType& f) {
  Json j{{"kind", "cdtype"}, {"zero", f.is_zero()}};
  if (f.is_zero()) return j;
  j["S"] = to_json(f.S());
  j["D"] = to_json(f.D());
  j["d"] = to_json(f.d());
  return j;
}

namespace {

// Prime-indexed slot without its unused 0 entry.
Json slot(const PrimeFn<ExtInt>& f) {
  Json j = to_json(f);
  j.erase("at_zero");
  return j;
}

}  // namespace

Json to_json(const BocksteinFn& phi) {
  return Json{{"kind", "phi"}, {"Q", to_json(phi.q)}, {"Zp", slot(phi.zp)}, {"Zpinf", slot(phi.zpinf)},
              {"Zloc", slot(phi.zloc)}};
}

Json to_json(const BocksteinFamily& family) {
  return Json{{"kind", "family"},   {"text", family.to_string()},       {"Q", family.has_q},
              {"Zloc", to_json(family.loc)}, {"Zp", to_json(family.zp_primes())}, {"Zpinf", to_json(family.zp_inf_primes())}};
}

Json to_json(const Decomposition& dec) {
  return Json{{"kind", "decomposition"}, {"text", dec.to_string()}, {"Q", to_json(dec.k_q)},
              {"Zloc", slot(dec.k_zloc)},  {"Zp", slot(dec.k_zp)},     {"Zpinf", slot(dec.k_zpinf)}};
}

Json to_json(const PowerReport& r) {
  Json norms = Json::array();
  for (const auto& v : r.power_norms) norms.push_back(to_json(v));
  return Json{{"kind", "power"},
              {"base_norm", to_json(r.base_norm)},
              {"type", r.kind == PowerReport::Kind::Basic ? "basic" : "exceptional"},
              {"norms", norms}};
}

Json to_json(const AnrReport& r) {
  return Json{{"kind", "anr"}, {"admissible", r.admissible}, {"violated", r.violated}};
}

Json to_json(const LawReport& r) {
  Json laws = Json::array();
  for (const auto& res : r.results) {
    Json failures = Json::array();
    for (const auto& f : res.failures) {
      failures.push_back(Json{{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    }
    laws.push_back(Json{{"law", res.law},
                        {"pass", res.pass()},
                        {"checked", res.checked},
                        {"failed", res.failed},
                        {"failures", failures}});
  }
  return Json{{"kind", "laws"}, {"universe_size", r.universe_size}, {"pass", r.pass()}, {"laws", laws}};
}

ExtInt ext_int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return ExtInt::parse(j.get<std::string>());
  throw Error("expected an integer or \"inf\", got " + j.dump());
}

PrimeSet prime_set_from_json(const Json& j) {
  try {
    std::vector<Prime> primes;
    for (const auto& v : j.at("primes")) primes.emplace_back(v.get<std::uint64_t>());
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "finite") return PrimeSet::finite(primes);
    if (mode == "cofinite") return PrimeSet::cofinite(primes);
    throw Error("unknown prime-set mode '" + mode + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed prime set: ") + e.what());
  }
}

PrimeFn<ExtInt> prime_fn_from_json(const Json& j) {
  try {
    std::vector<PrimeFn<ExtInt>::Exception> ex;
    for (const auto& [key, v] : j.at("exceptions").items()) ex.emplace_back(Prime(std::stoull(key)), ext_int_from_json(v));
    return PrimeFn<ExtInt>(ext_int_from_json(j.at("at_zero")), ext_int_from_json(j.at("default")), std::move(ex));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed prime function: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("malformed prime key: ") + e.what());
  }
}

CdType cdtype_from_json(const Json& j) {
  try {
    if (j.at("kind") != "cdtype") throw Error("not a cd-type: " + j.dump());
    if (j.at("zero").get<bool>()) return CdType::zero();
    return CdType::triple(prime_set_from_json(j.at("S")), prime_set_from_json(j.at("D")), prime_fn_from_json(j.at("d")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed cd-type: ") + e.what());
  }
}

}  // namespace bockstein
