#include "bockstein/error.hpp"

namespace bockstein {

namespace {
std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "invalid Bockstein function:";
  for (const auto& s : v) out += " " + s + ";";
  return out;
}
}  // namespace

InvalidPhiError::InvalidPhiError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

EvalError::EvalError(std::size_t position, const std::string& message)
    : Error("error at " + std::to_string(position) + ": " + message), position_(position) {}

}  // namespace bockstein
