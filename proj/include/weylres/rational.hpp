#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace weylres {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Integers fitting in int64 are emitted bare; everything else as
// {"num":..,"den":..} with decimal strings for oversized parts.
inline nlohmann::json rational_to_json(const Rational& r) {
  auto part = [](const mpz_class& z) -> nlohmann::json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  if (r.get_den() == 1) return part(r.get_num());
  return nlohmann::json{{"num", part(r.get_num())}, {"den", part(r.get_den())}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) -> mpz_class {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    return mpz_class(v.get<long>());
  };
  if (j.is_object()) {
    Rational r(part(j.at("num")), part(j.at("den")));
    r.canonicalize();
    return r;
  }
  return Rational(part(j));
}

inline nlohmann::json vector_to_json(const RationalVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class pow2(unsigned n) {
  mpz_class p = 1;
  p <<= n;
  return p;
}

}  // namespace weylres
