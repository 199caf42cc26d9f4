#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpc {

// Exact arithmetic only: every quantity in the library lives in Z or Q.
// mpq_class keeps values canonical (lowest terms, positive denominator), which
// is exactly the Rational invariant.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den reduced to canonical form; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Strict parse of a canonical rational string: "-3", "1/2", "5".
/// Rejects non-lowest-terms ("2/4"), zero or negative denominators, "/1",
/// leading zeros, "-0" and anything else that the writer would never emit.
Rat parse_rat(std::string_view text);

/// Canonical rendering: lowest terms, "/den" omitted when den == 1.
std::string rat_str(const Rat& q);
std::string int_str(const Int& n);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Floor division for Int (round toward -infinity).
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int mod_inverse(const Int& a, const Int& mod);  // mod > 0, gcd(a, mod) == 1

}  // namespace qpc
