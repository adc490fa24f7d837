#ifndef LIEEXT_POLYNOMIAL_HPP
#define LIEEXT_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lieext/rational.hpp"

namespace lieext {

/// Sparse multivariate polynomial over Rat. Used to decide abelianity of
/// parameterized mixtures by coefficient vanishing instead of sampling.
class Poly {
 public:
  using Mono = std::vector<int>;  // exponent per variable

  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: implicit scalar lift is the point
    if (c != 0) terms_[{}] = c;
  }
  Poly(int c) : Poly(Rat(c)) {}

  static Poly var(std::size_t i, int exp = 1) {
    Poly p;
    Mono m(i + 1, 0);
    m[i] = exp;
    p.terms_[m] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  Poly operator+(const Poly& o) const {
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator==(int c) const { return *this == Poly(c); }
  bool operator!=(int c) const { return !(*this == Poly(c)); }

  Rat eval(const std::vector<Rat>& vals) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) t *= vals[i];
      out += t;
    }
    return out;
  }

  const std::map<Mono, Rat>& terms() const { return terms_; }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) {
          os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
          if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
  }

 private:
  static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) m[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) m[i] += b[i];
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
  }
  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Mono, Rat> terms_;
};

inline Poly operator*(const Rat& a, const Poly& p) { return Poly(a) * p; }

}  // namespace lieext

#endif
