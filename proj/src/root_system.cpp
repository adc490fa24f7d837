#include "lieext/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieext {

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'D' && s[0] != 'E'))
    throw std::invalid_argument("unsupported type: " + s);
  int r = std::stoi(s.substr(1));
  SimpleType t{s[0], r};
  if (t.family == 'D' && r < 4)
    throw std::invalid_argument("D_n requires n >= 4");
  if (t.family == 'E' && (r < 6 || r > 8))
    throw std::invalid_argument("E_n requires n in {6,7,8}");
  return t;
}

long SimpleType::dimension() const {
  if (family == 'D') return 2L * rank * rank - rank;
  switch (rank) {
    case 6: return 78;
    case 7: return 133;
    default: return 248;
  }
}

std::vector<std::pair<int, int>> dynkin_edges(SimpleType t) {
  std::vector<std::pair<int, int>> e;
  if (t.family == 'D') {
    for (int i = 0; i + 1 < t.rank - 2; ++i) e.push_back({i, i + 1});
    e.push_back({t.rank - 3, t.rank - 2});
    e.push_back({t.rank - 3, t.rank - 1});
  } else {
    e.push_back({0, 2});
    e.push_back({1, 3});
    for (int i = 2; i + 1 < t.rank; ++i) e.push_back({i, i + 1});
  }
  return e;
}

RootSystem::RootSystem(SimpleType t) : type_(t) {
  int n = t.rank;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (auto [a, b] : dynkin_edges(t)) cartan_[a][b] = cartan_[b][a] = -1;

  // Close the simple roots under the root-string rule: alpha + alpha_i is a
  // root iff p - <alpha, alpha_i^vee> > 0 with p the depth of the i-string
  // below alpha.
  std::set<RootVec> roots;
  for (int i = 0; i < n; ++i) {
    RootVec v(n, 0);
    v[i] = 1;
    roots.insert(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : std::vector<RootVec>(roots.begin(), roots.end())) {
      for (int i = 0; i < n; ++i) {
        long pair = 0;
        for (int j = 0; j < n; ++j) pair += a[j] * cartan_[j][i];
        int p = 0;
        RootVec b = a;
        while (true) {
          --b[i];
          if (roots.count(b)) ++p;
          else break;
        }
        if (p - pair > 0) {
          RootVec c = a;
          ++c[i];
          if (roots.insert(c).second) changed = true;
        }
      }
    }
  }
  positive_.assign(roots.begin(), roots.end());
  std::sort(positive_.begin(), positive_.end(),
            [](const RootVec& a, const RootVec& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              // height 1 lex-descending so positive_[i] is alpha_{i+1}
              return ha == 1 ? a > b : a < b;
            });
  for (std::size_t i = 0; i < positive_.size(); ++i) index_[positive_[i]] = i;

  if (2 * positive_.size() + n != static_cast<std::size_t>(t.dimension()))
    throw std::logic_error("root count does not match algebra dimension");
}

std::size_t RootSystem::index_of(const RootVec& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw std::invalid_argument("not a positive root");
  return it->second;
}

int RootSystem::height(std::size_t idx) const {
  const auto& r = positive_[idx];
  return std::accumulate(r.begin(), r.end(), 0);
}

Weight RootSystem::to_weight(const RootVec& c) const {
  int n = type_.rank;
  Weight w(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) w[j] += static_cast<long>(cartan_[j][i]) * c[i];
  return w;
}

long RootSystem::pair_with_coroot(const RootVec& beta, int i) const {
  long s = 0;
  for (int j = 0; j < type_.rank; ++j) s += beta[j] * cartan_[i][j];
  return s;
}

Int weyl_dim(const RootSystem& rs, const Weight& hw) {
  if (hw.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("weight rank mismatch");
  for (long m : hw)
    if (m < 0) throw std::invalid_argument("weight is not dominant");
  // Simply laced: <lambda+rho, alpha^vee> = sum c_i (m_i + 1), and
  // <rho, alpha^vee> = height(alpha).
  Rat prod(1);
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const auto& c = rs.positive_roots()[k];
    long num = 0, den = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      num += c[i] * (hw[i] + 1);
      den += c[i];
    }
    prod *= Rat(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("weyl_dim not integral");
  return prod.get_num();
}

Weight weight_of_lowering_word(const RootSystem& rs, const Weight& hw,
                               const std::vector<int>& word) {
  Weight w = hw;
  for (int idx : word) {
    if (idx < 1 || idx > rs.rank())
      throw std::invalid_argument("lowering index out of range");
    // alpha_i in fundamental coordinates is column i of the Cartan matrix
    for (int j = 0; j < rs.rank(); ++j) w[j] -= rs.cartan()[j][idx - 1];
  }
  return w;
}

Weight simple_reflection(const RootSystem& rs, const Weight& mu, int i) {
  Weight w = mu;
  long mi = mu[i];
  for (int j = 0; j < rs.rank(); ++j) w[j] -= mi * rs.cartan()[j][i];
  return w;
}

std::string weight_str(const Weight& w) {
  // "0" for zero, otherwise "L2", "L1+L5", "2L1", ...
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (any) os << "+";
    if (w[i] != 1) os << w[i];
    os << "L" << (i + 1);
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace lieext
