#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bockstein {

/// An integer extended by -inf and +inf.
///
/// Conventions: inf + x = inf for x > -inf, inf - k = inf for finite k,
/// inf * 0 = 0, inf * k = ±inf for k != 0. The forms inf - inf and
/// (+inf) + (-inf) raise ArithmeticError, as does int64 overflow.
/// Values of N ∪ {inf} are represented by the same type; callers that need
/// nonnegativity check is_nonnegative().
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() noexcept = default;
  constexpr ExtInt(std::int64_t value) noexcept : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtInt inf() noexcept { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() noexcept { return ExtInt(Kind::NegInf); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  constexpr bool is_nonnegative() const noexcept {
    return kind_ == Kind::PosInf || (kind_ == Kind::Finite && value_ >= 0);
  }

  /// The finite value; throws ArithmeticError on an infinity.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.value_ <=> b.value_;
  }

  friend ExtInt operator+(ExtInt a, ExtInt b);
  friend ExtInt operator-(ExtInt a, ExtInt b);
  friend ExtInt operator*(ExtInt a, ExtInt b);
  friend ExtInt operator-(ExtInt a);

  ExtInt& operator+=(ExtInt other) { return *this = *this + other; }
  ExtInt& operator-=(ExtInt other) { return *this = *this - other; }

  /// "inf", "-inf" or the decimal value.
  std::string to_string() const;
  /// Inverse of to_string(); throws ArithmeticError on malformed text.
  static ExtInt parse(std::string_view text);

 private:
  constexpr explicit ExtInt(Kind kind) noexcept : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;  // zero for infinities, so defaulted == works
};

std::ostream& operator<<(std::ostream& out, const ExtInt& x);

inline ExtInt max(ExtInt a, ExtInt b) noexcept { return a < b ? b : a; }
inline ExtInt min(ExtInt a, ExtInt b) noexcept { return b < a ? b : a; }

}  // namespace bockstein
