#include "bockstein/prime_fn.hpp"

#include "bockstein/error.hpp"

namespace bockstein {

namespace {

ExtInt apply(PointwiseOp op, ExtInt a, ExtInt b) {
  switch (op) {
    case PointwiseOp::Add: return a + b;
    case PointwiseOp::Sub: return a - b;
    case PointwiseOp::Max: return max(a, b);
    case PointwiseOp::Min: return min(a, b);
    case PointwiseOp::Mul: return a * b;
  }
  return a;
}

ExtInt apply_at(PointwiseOp op, ExtInt a, ExtInt b, const std::string& slot) {
  try {
    return apply(op, a, b);
  } catch (const ArithmeticError& e) {
    throw ArithmeticError(std::string(e.what()) + " at slot " + slot);
  }
}

}  // namespace

PrimeFn<ExtInt> pointwise(PointwiseOp op, const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g) {
  std::vector<PrimeFn<ExtInt>::Exception> ex;
  for (Prime p : exception_union(f, g)) {
    ex.emplace_back(p, apply_at(op, f.at(p), g.at(p), std::to_string(p.value())));
  }
  return {apply_at(op, f.at_zero(), g.at_zero(), "0"), apply_at(op, f.fallback(), g.fallback(), "default"),
          std::move(ex)};
}

ExtInt extremum(const PrimeFn<ExtInt>& f, Extremum kind) {
  ExtInt best = f.fallback();
  auto take = [&](ExtInt v) { best = kind == Extremum::Sup ? max(best, v) : min(best, v); };
  take(f.at_zero());
  for (const auto& e : f.exceptions()) take(e.second);
  return best;
}

PrimeFn<ExtInt> indicator(const PrimeSet& a) {
  ExtInt inside = 1;
  ExtInt outside = 0;
  std::vector<PrimeFn<ExtInt>::Exception> ex;
  for (Prime p : a.primes()) ex.emplace_back(p, a.is_finite() ? inside : outside);
  return {0, a.is_finite() ? outside : inside, std::move(ex)};
}

PrimeFn<ExtInt> delta(Prime p) { return indicator(PrimeSet::finite({p})); }

PrimeFn<ExtInt> delta_zero() { return {1, 0}; }

PrimeFn<ExtInt> operator+(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g) {
  return pointwise(PointwiseOp::Add, f, g);
}

PrimeFn<ExtInt> operator-(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g) {
  return pointwise(PointwiseOp::Sub, f, g);
}

PrimeFn<ExtInt> operator*(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g) {
  return pointwise(PointwiseOp::Mul, f, g);
}

PrimeFn<ExtInt> operator-(const PrimeFn<ExtInt>& f) { return PrimeFn<ExtInt>::constant(0) - f; }

std::string to_string(const PrimeFn<ExtInt>& f) {
  std::string out = "{zero:" + f.at_zero().to_string() + ", default:" + f.fallback().to_string();
  for (const auto& [p, v] : f.exceptions()) out += ", " + std::to_string(p.value()) + ":" + v.to_string();
  return out + "}";
}

}  // namespace bockstein
