#include "bockstein/ext_int.hpp"

#include <charconv>
#include <ostream>

#include "bockstein/error.hpp"

namespace bockstein {

std::int64_t ExtInt::value() const {
  if (!is_finite()) throw ArithmeticError("finite value requested from " + to_string());
  return value_;
}

ExtInt operator+(ExtInt a, ExtInt b) {
  if (a.is_finite() && b.is_finite()) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw ArithmeticError("integer overflow in addition");
    return ExtInt(r);
  }
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw ArithmeticError("undefined sum (+inf) + (-inf)");
  }
  return a.is_finite() ? b : a;
}

ExtInt operator-(ExtInt a) {
  if (a.is_pos_inf()) return ExtInt::neg_inf();
  if (a.is_neg_inf()) return ExtInt::inf();
  if (a.value_ == INT64_MIN) throw ArithmeticError("integer overflow in negation");
  return ExtInt(-a.value_);
}

ExtInt operator-(ExtInt a, ExtInt b) {
  if (!a.is_finite() && a.kind_ == b.kind_) throw ArithmeticError("undefined difference " + a.to_string() + " - " + b.to_string());
  return a + (-b);
}

ExtInt operator*(ExtInt a, ExtInt b) {
  if (a.is_finite() && b.is_finite()) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw ArithmeticError("integer overflow in product");
    return ExtInt(r);
  }
  // inf * 0 = 0: the factor (d - d(0)) vanishes on regular primes.
  if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0)) return ExtInt(0);
  auto sign = [](ExtInt x) { return x.is_neg_inf() || (x.is_finite() && x.value_ < 0) ? -1 : 1; };
  return sign(a) * sign(b) > 0 ? ExtInt::inf() : ExtInt::neg_inf();
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return std::to_string(value_);
}

ExtInt ExtInt::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return inf();
  if (text == "-inf") return neg_inf();
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ArithmeticError("malformed extended integer '" + std::string(text) + "'");
  }
  return ExtInt(v);
}

std::ostream& operator<<(std::ostream& out, const ExtInt& x) { return out << x.to_string(); }

}  // namespace bockstein
