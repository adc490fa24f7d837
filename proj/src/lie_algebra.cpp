#include "lieext/lie_algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lieext {

namespace {
const std::vector<std::pair<std::size_t, long>> kEmpty;
}

LieAlgebra::LieAlgebra(const RootSystem& rs) : rs_(rs) {
  npos_ = rs_.num_positive();
  dim_ = 2 * npos_ + rs_.rank();
  int n = rs_.rank();

  // Cocycle on simple roots: eps(i,i) = -1; for an edge choose -1 on the
  // (min,max) orientation; +1 elsewhere. Extended bimultiplicatively.
  eps_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) eps_[i][i] = -1;
  for (auto [a, b] : dynkin_edges(rs_.type())) eps_[std::min(a, b)][std::max(a, b)] = -1;

  table_.assign(dim_ * dim_, {});
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = k + 1; l < dim_; ++l)
      table_[k * dim_ + l] = compute_bracket(k, l);

  // gamma = parent + alpha_i decompositions for non-simple positive roots
  decomp_.resize(npos_);
  for (std::size_t g = n; g < npos_; ++g) {
    const auto& gamma = rs_.positive_roots()[g];
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      if (gamma[i] == 0) continue;
      RootVec d = gamma;
      --d[i];
      if (!rs_.is_positive_root(d)) continue;
      std::size_t parent = rs_.index_of(d);
      auto coeff_on = [&](std::size_t a, std::size_t b, std::size_t target) {
        bool neg;
        const auto& entries = bracket_basis(a, b, neg);
        for (auto [m, c] : entries)
          if (m == target) return neg ? -c : c;
        return 0L;
      };
      long nx = coeff_on(x_index(parent), x_index(i), x_index(g));
      long ny = coeff_on(y_index(parent), y_index(i), y_index(g));
      if (nx == 0 || ny == 0) throw std::logic_error("root decomposition constant vanished");
      decomp_[g] = {parent, i, nx, ny};
      found = true;
    }
    if (!found) throw std::logic_error("positive root without simple decomposition");
  }
}

int LieAlgebra::eps(const RootVec& a, const RootVec& b) const {
  int s = 0;
  int n = rs_.rank();
  for (int i = 0; i < n; ++i) {
    if ((a[i] & 1) == 0) continue;
    for (int j = 0; j < n; ++j)
      if ((b[j] & 1) && eps_[i][j] < 0) s ^= 1;
  }
  return s ? -1 : 1;
}

std::vector<std::pair<std::size_t, long>> LieAlgebra::compute_bracket(
    std::size_t k, std::size_t l) const {
  int n = rs_.rank();
  std::vector<std::pair<std::size_t, long>> out;
  auto root_scale = [&](std::size_t idx, RootVec& r, int& scale) -> bool {
    if (is_x(idx)) {
      r = rs_.positive_roots()[idx];
      scale = 1;
      return true;
    }
    if (is_y(idx)) {
      r = rs_.positive_roots()[idx - npos_];
      for (auto& c : r) c = -c;
      scale = -1;  // basis Y_a = -e_{-a}
      return true;
    }
    return false;
  };
  RootVec rk, rl;
  int sk = 1, sl = 1;
  bool ek = root_scale(k, rk, sk);
  bool el = root_scale(l, rl, sl);
  if (!ek && !el) return out;  // [H_i, H_j] = 0
  if (!ek) {
    int i = static_cast<int>(k - 2 * npos_);
    long c = 0;
    for (int j = 0; j < n; ++j) c += rl[j] * rs_.cartan()[i][j];
    if (c) out.push_back({l, c});
    return out;
  }
  if (!el) {
    int i = static_cast<int>(l - 2 * npos_);
    long c = 0;
    for (int j = 0; j < n; ++j) c += rk[j] * rs_.cartan()[i][j];
    if (c) out.push_back({k, -c});
    return out;
  }
  RootVec s(n);
  bool zero = true, pos = false;
  for (int i = 0; i < n; ++i) {
    s[i] = rk[i] + rl[i];
    if (s[i] != 0) zero = false;
    if (s[i] > 0) pos = true;
  }
  long sc = sk * sl;
  if (zero) {
    // [e_a, e_{-a}] = -h_a for positive a (Jacobi-consistent normalization).
    int hk = 0;
    for (int c : rk) hk += c;
    const RootVec& a = hk > 0 ? rk : rl;
    long sgn = hk > 0 ? -1 : 1;
    for (int i = 0; i < n; ++i)
      if (a[i]) out.push_back({h_index(i), sc * sgn * a[i]});
    return out;
  }
  RootVec key = s;
  if (!pos)
    for (auto& c : key) c = -c;
  if (!rs_.is_positive_root(key)) return out;
  long coeff = sc * eps(rk, rl);
  if (pos) {
    out.push_back({x_index(rs_.index_of(key)), coeff});
  } else {
    out.push_back({y_index(rs_.index_of(key)), -coeff});
  }
  return out;
}

const std::vector<std::pair<std::size_t, long>>& LieAlgebra::bracket_basis(
    std::size_t k, std::size_t l, bool& negate) const {
  if (k == l) {
    negate = false;
    return kEmpty;
  }
  if (k < l) {
    negate = false;
    return table_[k * dim_ + l];
  }
  negate = true;
  return table_[l * dim_ + k];
}

Elem LieAlgebra::bracket(const Elem& a, const Elem& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw std::invalid_argument("element dimension mismatch");
  Elem out = zero_vec(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (a[k] == 0) continue;
    for (std::size_t l = 0; l < dim_; ++l) {
      if (b[l] == 0) continue;
      bool neg;
      const auto& entries = bracket_basis(k, l, neg);
      for (auto [m, c] : entries) {
        Rat t = a[k] * b[l] * c;
        if (neg) t = -t;
        out[m] += t;
      }
    }
  }
  return out;
}

PolyElem LieAlgebra::bracket(const PolyElem& a, const PolyElem& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw std::invalid_argument("element dimension mismatch");
  PolyElem out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (a[k].is_zero()) continue;
    for (std::size_t l = 0; l < dim_; ++l) {
      if (b[l].is_zero()) continue;
      bool neg;
      const auto& entries = bracket_basis(k, l, neg);
      for (auto [m, c] : entries) {
        Poly t = a[k] * b[l] * Poly(Rat(neg ? -c : c));
        out[m] += t;
      }
    }
  }
  return out;
}

Elem LieAlgebra::nested_commutator(char kind, const std::vector<int>& indices) const {
  if (indices.empty()) throw std::invalid_argument("empty index list");
  auto gen = [&](int i1) {
    if (i1 < 1 || i1 > rs_.rank())
      throw std::invalid_argument("generator index out of range");
    return kind == 'X' ? gen_x(i1 - 1) : gen_y(i1 - 1);
  };
  Elem cur = gen(indices[0]);
  for (std::size_t i = 1; i < indices.size(); ++i)
    cur = bracket(cur, gen(indices[i]));
  return cur;
}

NamedElements LieAlgebra::named_elements() const {
  if (type().family != 'E')
    throw std::invalid_argument("named elements are defined for E types only");
  NamedElements ne;
  auto hvec = [&](std::vector<Rat> coeffs) {
    Elem e = zero_vec(dim_);
    for (int i = 0; i < rank(); ++i) e[h_index(i)] = coeffs[i];
    return e;
  };
  switch (rank()) {
    case 6: {
      ne.Xp = nested_commutator('X', {6, 5, 4, 3, 2, 4, 5});
      ne.Xpp = nested_commutator('X', {6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2});
      ne.H_special = hvec({2, Rat(3, 2), Rat(5, 2), 3, 2, 1});
      break;
    }
    case 7: {
      ne.Xp = nested_commutator('X', {6, 7, 5, 4, 3, 2, 4, 5, 6});
      ne.Xpp = nested_commutator('X', {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3});
      ne.Xppp = scaled(
          nested_commutator('X', {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1}), -1);
      ne.Yp = scaled(
          nested_commutator('Y', {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1}), -1);
      ne.Ypp = nested_commutator('Y', {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3});
      ne.H_special = hvec({2, 2, 3, 4, 3, 2, 1});
      break;
    }
    default: {
      ne.Xp = nested_commutator('X', {4, 5, 6, 7, 8, 2, 3, 4, 5, 6, 7});
      ne.Xpp = scaled(
          nested_commutator('X', {3, 4, 2, 1, 5, 4, 3, 6, 5, 4, 7, 2, 6, 5, 8, 7, 6, 4, 5, 3, 4, 2}),
          -1);
      ne.Xppp = nested_commutator(
          'X', {8, 7, 6, 5, 4, 3, 2, 1, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7, 8});
      ne.Yp = scaled(
          nested_commutator('Y', {5, 4, 2, 3, 6, 4, 1, 3, 5, 4, 7, 2, 6, 5, 4, 3, 1}), -1);
      ne.H_special = hvec({4, 5, 7, 10, 8, 6, 4, 2});
      break;
    }
  }
  for (const Elem* e : {&ne.Xp, &ne.Xpp, &ne.H_special})
    if (is_zero(*e)) throw std::logic_error("named element vanished");
  return ne;
}

std::vector<std::string> LieAlgebra::verify_serre() const {
  std::vector<std::string> failures;
  int n = rank();
  auto expect = [&](const Elem& got, const Elem& want, const std::string& what) {
    if (got != want) failures.push_back(what);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long m = rs_.cartan()[j][i];
      std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      expect(bracket(gen_h(i), gen_h(j)), zero_vec(dim_), "[H_i,H_j]!=0 " + ij);
      expect(bracket(gen_h(i), gen_x(j)), scaled(gen_x(j), m), "[H_i,X_j] " + ij);
      expect(bracket(gen_h(i), gen_y(j)), scaled(gen_y(j), -m), "[H_i,Y_j] " + ij);
      expect(bracket(gen_x(i), gen_y(j)), i == j ? gen_h(i) : zero_vec(dim_),
             "[X_i,Y_j] " + ij);
      if (i != j) {
        Elem ax = gen_x(j), ay = gen_y(j);
        for (long k = 0; k < 1 - m; ++k) {
          ax = bracket(gen_x(i), ax);
          ay = bracket(gen_y(i), ay);
        }
        expect(ax, zero_vec(dim_), "(ad X_i)^{1-M}(X_j) " + ij);
        expect(ay, zero_vec(dim_), "(ad Y_i)^{1-M}(Y_j) " + ij);
      }
    }
  }
  return failures;
}

Mat LieAlgebra::ad_basis(std::size_t k) const {
  Mat m(dim_, dim_);
  for (std::size_t l = 0; l < dim_; ++l) {
    bool neg;
    const auto& entries = bracket_basis(k, l, neg);
    for (auto [t, c] : entries) m(t, l) = neg ? -c : c;
  }
  return m;
}

Mat LieAlgebra::ad(const Elem& a) const {
  Mat m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (a[k] == 0) continue;
    for (std::size_t l = 0; l < dim_; ++l) {
      bool neg;
      const auto& entries = bracket_basis(k, l, neg);
      for (auto [t, c] : entries) m(t, l) += a[k] * Rat(neg ? -c : c);
    }
  }
  return m;
}

const LieAlgebra::RootDecomp& LieAlgebra::root_decomp(std::size_t root_idx) const {
  if (root_idx < static_cast<std::size_t>(rank()))
    throw std::invalid_argument("simple roots have no decomposition");
  return decomp_[root_idx];
}

std::string LieAlgebra::label(std::size_t k) const {
  auto root_str = [&](std::size_t idx) {
    std::string s;
    for (int c : rs_.positive_roots()[idx]) s += std::to_string(c);
    return s;
  };
  if (is_x(k)) return "X" + root_str(k);
  if (is_y(k)) return "Y" + root_str(k - npos_);
  return "H" + std::to_string(k - 2 * npos_ + 1);
}

void LieAlgebra::serialize(std::ostream& os) const {
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = k + 1; l < dim_; ++l) {
      const auto& entries = table_[k * dim_ + l];
      if (entries.empty()) continue;
      os << label(k) << " " << label(l) << " ->";
      for (auto [m, c] : entries) os << " " << c << "*" << label(m);
      os << "\n";
    }
}

void LieAlgebra::flip_constant_sign(std::size_t k, std::size_t l) {
  if (k > l) std::swap(k, l);
  for (auto& [m, c] : table_[k * dim_ + l]) c = -c;
}

}  // namespace lieext
