#ifndef LIEEXT_RATIONAL_HPP
#define LIEEXT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace lieext {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which is exactly the invariant we need; no rounding ever.
using Rat = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Rat>;

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline void axpy(Vec& y, const Rat& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Vec scaled(const Vec& v, const Rat& a) {
  Vec r(v);
  for (auto& x : r) x *= a;
  return r;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace lieext

#endif
