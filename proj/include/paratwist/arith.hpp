#pragma once

#include <gmpxx.h>

#include <string>

#include "paratwist/errors.hpp"

namespace paratwist {

using Int = mpz_class;
using Rat = mpq_class;

Int pow_int(const Int& base, unsigned long e);

// base^e as a rational; negative e allowed, base != 0 then.
Rat pow_rat(const Int& base, long e);

// Exact p-adic valuation of n != 0.
int v_p(const Int& n, const Int& p);

// d | n, with divides(d, 0) true for d != 0.
bool divides(const Int& d, const Int& n);

// n / d, throwing InternalError unless the division is exact.
Int divide_exact(const Int& n, const Int& d);

// Least non-negative residue of a mod m, m > 0.
Int mod_pos(const Int& a, const Int& m);

// "num" or "num/den" in lowest terms, den > 0.
std::string rat_to_string(const Rat& q);

// Inverse of rat_to_string; throws std::invalid_argument on malformed input
// or a zero denominator.
Rat rat_from_string(const std::string& s);

// Narrowing for JSON output; throws InternalError if n does not fit.
long to_long_checked(const Int& n);

}  // namespace paratwist
