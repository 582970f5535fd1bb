#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "hfx/error.hpp"

namespace hfx {

/// Exact rational. GMP keeps every result of arithmetic in lowest terms with
/// a positive denominator; values built from a raw fraction go through
/// make_scalar, which canonicalizes.
using Scalar = mpq_class;

inline Scalar make_scalar(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::range, "zero denominator");
  Scalar q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

inline bool is_canonical(const Scalar& q) {
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

inline bool is_integral(const Scalar& q) { return q.get_den() == 1; }

/// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline Scalar parse_scalar(std::string_view text) {
  Scalar q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::parse, "bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace hfx
