#include "pforge/period_closed.hpp"

#include <cmath>

namespace pforge {

namespace {

// B_2, B_4, ..., B_12 over (2j)!; the B_12 term only feeds the remainder
// bound.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12,            // B_2 / 2!
    -1.0 / 720,          // B_4 / 4!
    1.0 / 30240,         // B_6 / 6!
    -1.0 / 1209600,      // B_8 / 8!
    1.0 / 47900160,      // B_10 / 10!
    -691.0 / 1307674368000.0,  // B_12 / 12!
};

// Magnitude of the first dropped Euler-Maclaurin term (the B_12 one).
double remainder_bound(int s, int terms) {
  double rising = 1.0;
  for (int j = 0; j < 2 * 5 + 1; ++j) rising *= s + j;
  return std::abs(kBernoulliOverFactorial[5]) * rising *
         std::pow(terms, -(s + 11.0));
}

}  // namespace

double zeta(int s, double target_rel_error) {
  if (s < 2) throw std::invalid_argument("zeta needs an integer argument >= 2");
  if (target_rel_error < 1e-14)
    throw std::invalid_argument("zeta cannot promise relative error below 1e-14");

  int terms = 4;
  while (terms < 64 && remainder_bound(s, terms) > target_rel_error) ++terms;

  double sum = 0.0;
  for (int k = terms - 1; k >= 1; --k) sum += std::pow(k, -static_cast<double>(s));
  double x = terms;
  sum += 0.5 * std::pow(x, -static_cast<double>(s));
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  double rising = s;
  for (int j = 0; j < 5; ++j) {
    sum += kBernoulliOverFactorial[j] * rising * std::pow(x, -(s + 2.0 * j + 1.0));
    rising *= (s + 2 * j + 1.0) * (s + 2 * j + 2.0);
  }
  return sum;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

}  // namespace

ClosedFormValue zigzag_period(int n) {
  if (n < 3) throw std::invalid_argument("zig-zag periods need n >= 3");
  BigRat coefficient =
      BigRat(4 * factorial(2 * n - 2), factorial(n) * factorial(n - 1));
  if (n % 2 != 0) {
    BigInt power = BigInt(1) << (2 * n - 3);
    coefficient *= BigRat(power - 2, power);
  }
  return {coefficient, 2 * n - 3};
}

ClosedFormValue family_period(const FamilyParams& p) {
  int n = p.n();
  BigRat coefficient = BigRat(4, n) * binomial(2 * n - 2, n - 1);
  return {coefficient, 2 * n - 3};
}

double as_float(const ClosedFormValue& v, double target_rel_error) {
  if (v.coefficient == 0) return 0.0;
  double c = v.coefficient.convert_to<double>();
  return c * zeta(v.zeta_argument, std::max(target_rel_error / 2, 1e-14));
}

std::string coefficient_string(const ClosedFormValue& v) {
  BigInt num = boost::multiprecision::numerator(v.coefficient);
  BigInt den = boost::multiprecision::denominator(v.coefficient);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace pforge
