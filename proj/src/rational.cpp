#include "fatgraph/rational.hpp"

#include <stdexcept>

namespace fatgraph {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: " + text);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer isqrt(const Integer& v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// sqrt(num/den) = sqrt(num*den)/den; bracket sqrt(num*den * 4^bits) by
// integer square root.
Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  Integer prod = q.get_num() * q.get_den();
  mpz_mul_2exp(prod.get_mpz_t(), prod.get_mpz_t(), 2 * bits);
  Integer r = isqrt(prod);
  Integer scale = q.get_den();
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  Integer prod = q.get_num() * q.get_den();
  mpz_mul_2exp(prod.get_mpz_t(), prod.get_mpz_t(), 2 * bits);
  Integer r = isqrt(prod) + 1;
  Integer scale = q.get_den();
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

Rational nth_root_upper(const Integer& n, unsigned d, unsigned bits) {
  if (n < 1) throw std::invalid_argument("nth_root_upper requires n >= 1");
  if (d == 0) throw std::invalid_argument("nth_root_upper requires d >= 1");
  Integer shifted = n;
  mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(),
               static_cast<mp_bitcnt_t>(d) * bits);
  Integer root;
  mpz_root(root.get_mpz_t(), shifted.get_mpz_t(), d);
  root += 1;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational out(root, scale);
  out.canonicalize();
  return out;
}

// floor(2^bits * log2(x)) == bitlength(x^(2^bits)) - 1, both computed exactly.
Rational log2_fixed(const Integer& x, unsigned bits) {
  if (x < 1) throw std::invalid_argument("log2_fixed requires x >= 1");
  Integer p = x;
  for (unsigned i = 0; i < bits; ++i) p *= p;
  unsigned long bl = mpz_sizeinbase(p.get_mpz_t(), 2);
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational out(Integer(bl - 1), scale);
  out.canonicalize();
  return out;
}

int compare_diam_to_scaled(const Rational& diam_sq, const Rational& t,
                           const Integer& n, unsigned d) {
  if (t <= 0) throw std::invalid_argument("threshold must be positive");
  Rational lhs = 1;
  for (unsigned i = 0; i < d; ++i) lhs *= diam_sq;
  lhs *= Rational(n * n);
  Rational rhs = 1;
  for (unsigned i = 0; i < 2 * d; ++i) rhs *= t;
  return cmp(lhs, rhs);
}

}  // namespace fatgraph
