#pragma once

#include <json.hpp>

#include "bockstein/cdtype.hpp"
#include "bockstein/dimension.hpp"
#include "bockstein/groups.hpp"
#include "bockstein/oracle.hpp"

namespace bockstein {

using Json = nlohmann::ordered_json;

/// Integers as numbers, infinities as "inf" / "-inf".
Json to_json(const ExtInt& v);
Json to_json(const PrimeSet& s);
Json to_json(const PrimeFn<ExtInt>& f);
/// The canonical cd-type form; Zero is {"kind":"cdtype","zero":true}.
Json to_json(const CdType& f);
Json to_json(const BocksteinFn& phi);
Json to_json(const BocksteinFamily& family);
Json to_json(const Decomposition& dec);
Json to_json(const PowerReport& r);
Json to_json(const AnrReport& r);
Json to_json(const LawReport& r);

/// Inverses; throw Error on malformed input.
ExtInt ext_int_from_json(const Json& j);
PrimeSet prime_set_from_json(const Json& j);
PrimeFn<ExtInt> prime_fn_from_json(const Json& j);
CdType cdtype_from_json(const Json& j);

}  // namespace bockstein
