#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockstein/json.hpp"

namespace bockstein::cli {

struct Output {
  std::string text;
  Json json;
  int status = 0;
};

struct TableArgs {
  std::string kind;
  std::int64_t n = 3;
  std::int64_t m = 2;
  std::uint64_t p = 2;
  std::uint64_t q = 3;
};

Output emit_table(const TableArgs& args);

struct VerifyArgs {
  std::string target;
  std::uint64_t p = 2;
  std::uint64_t q = 0;  // 0: choose a prime different from p
  std::size_t n = 2;
  std::size_t stages = 1;
  std::size_t max_degree = 4;
  std::string coeff;
};

Output verify(const VerifyArgs& args);

struct LawArgs {
  std::vector<std::uint64_t> primes{2, 3};
  std::int64_t max = 3;
  std::string laws = "all";
  std::uint64_t samples = 20000;
};

Output check_laws_cmd(const LawArgs& args);

}  // namespace bockstein::cli
