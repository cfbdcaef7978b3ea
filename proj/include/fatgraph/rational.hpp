#pragma once

#include <gmpxx.h>

#include <string>

namespace fatgraph {

// All geometric predicates run on exact rationals so that intersection and
// containment decisions never depend on floating-point rounding.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "p", or a plain decimal integer string. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

// Largest r >= 0 with r*r <= v. Requires v >= 0.
Integer isqrt(const Integer& v);

// Rational bounds on sqrt(q), q >= 0, with error below 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

// Rational upper bound on n^(1/d) with error below 2^-bits. Requires n >= 1.
Rational nth_root_upper(const Integer& n, unsigned d, unsigned bits);

// floor(2^bits * log2(x)) / 2^bits, computed exactly; monotone in x.
// Requires x >= 1. Intended for small x (clique sizes), bits <= 16.
Rational log2_fixed(const Integer& x, unsigned bits);

// Sign of (diam - t / n^(1/d)) where diam = sqrt(diam_sq) >= 0, t > 0, n >= 1.
// Decided exactly via (diam_sq)^d * n^2 vs t^(2d).
int compare_diam_to_scaled(const Rational& diam_sq, const Rational& t,
                           const Integer& n, unsigned d);

}  // namespace fatgraph
