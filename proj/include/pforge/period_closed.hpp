#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pforge/families.hpp"

namespace pforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational multiple of a single zeta value: coefficient * zeta(arg).
struct ClosedFormValue {
  BigRat coefficient;
  int zeta_argument;
};

// Riemann zeta on integer arguments s >= 2 by Euler-Maclaurin summation
// (partial sum to K terms, tail through the B_10 correction, K picked from
// the explicit remainder bound). target_rel_error may not be below 1e-14.
double zeta(int s, double target_rel_error = 1e-14);

// P(Z_n) = 4 (2n-2)!/(n!(n-1)!) (1 - (1-(-1)^n)/2^(2n-3)) zeta(2n-3).
ClosedFormValue zigzag_period(int n);

// P(G_{k,l,m}) = (4/n) C(2n-2, n-1) zeta(2n-3) with n = 2(k+l+m).
ClosedFormValue family_period(const FamilyParams& p);

double as_float(const ClosedFormValue& v, double target_rel_error = 1e-12);

// "441/8" or "168"
std::string coefficient_string(const ClosedFormValue& v);

}  // namespace pforge
