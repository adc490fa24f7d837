#include "lieext/weight_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lieext {

namespace {

using Word = std::vector<int>;   // 0-based simple indices, outermost first
using Expr = std::map<Word, Rat>;
using Expansion = std::map<std::size_t, Rat>;  // coefficients on basis vectors

/// Scratch state for the lowering-closure construction.
struct Builder {
  const LieAlgebra& g;
  const RootSystem& rs;
  Weight hw;
  int n;

  std::vector<Word> basis;
  std::vector<Weight> basis_weight;
  std::map<Word, std::size_t> basis_index;
  std::map<Word, Expansion> expansions;  // non-basis words seen so far

  struct Space {
    std::vector<std::size_t> members;  // global basis indices
    Mat gram;
  };
  std::map<Weight, Space> spaces;
  std::map<std::pair<Word, Word>, Rat> form_memo;

  explicit Builder(const LieAlgebra& g_, const Weight& hw_)
      : g(g_), rs(g_.roots()), hw(hw_), n(g_.rank()) {}

  Weight weight_of(const Word& w) const {
    Weight out = hw;
    for (int j : w)
      for (int t = 0; t < n; ++t) out[t] -= rs.cartan()[t][j];
    return out;
  }

  /// X_i applied to a word: sum over occurrences of i, with the Cartan
  /// eigenvalue of the suffix strictly below the removed letter.
  Expr raise(int i, const Word& w) const {
    Expr out;
    // suffix weights computed right to left
    std::vector<long> coeff(w.size());
    Weight acc = hw;  // weight of empty suffix = hw
    for (std::size_t p = w.size(); p-- > 0;) {
      coeff[p] = acc[i];
      for (int t = 0; t < n; ++t) acc[t] -= rs.cartan()[t][w[p]];
    }
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != i) continue;
      Word sub;
      sub.reserve(w.size() - 1);
      for (std::size_t q = 0; q < w.size(); ++q)
        if (q != p) sub.push_back(w[q]);
      if (coeff[p] != 0) out[sub] += Rat(coeff[p]);
    }
    for (auto it = out.begin(); it != out.end();)
      it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
  }

  /// Contravariant form with <u~,u~> = 1.
  Rat form(const Word& a, const Word& b) {
    if (a.empty() && b.empty()) return 1;
    if (a.empty() || b.empty()) return 0;
    if (weight_of(a) != weight_of(b)) return 0;
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = form_memo.find(key);
    if (it != form_memo.end()) return it->second;
    // <Y_i rest, b> = <rest, X_i b>
    Word rest(a.begin() + 1, a.end());
    Rat out(0);
    for (const auto& [w, c] : raise(a[0], b)) out += c * form(rest, w);
    form_memo.emplace(key, out);
    return out;
  }

  /// Express a word in the chosen basis (valid once BFS has covered all
  /// single-letter extensions of basis words).
  Expansion express(const Word& w) {
    auto bi = basis_index.find(w);
    if (bi != basis_index.end()) return {{bi->second, Rat(1)}};
    auto it = expansions.find(w);
    if (it != expansions.end()) return it->second;
    if (w.empty()) throw std::logic_error("cyclic vector must be basis vector 0");
    Word rest(w.begin() + 1, w.end());
    Expansion er = express(rest);
    Expansion out;
    for (const auto& [k, c] : er) {
      Word ext;
      ext.reserve(basis[k].size() + 1);
      ext.push_back(w[0]);
      ext.insert(ext.end(), basis[k].begin(), basis[k].end());
      for (const auto& [m, d] : express(ext)) {
        out[m] += c * d;
        if (out[m] == 0) out.erase(m);
      }
    }
    expansions.emplace(w, out);
    return out;
  }
};

}  // namespace

WeightModule WeightModule::construct_irrep(const LieAlgebra& g, const Weight& hw,
                                           long cap) {
  Int want = weyl_dim(g.roots(), hw);
  if (want > cap) {
    std::ostringstream os;
    os << "module dimension " << want.get_str() << " exceeds cap " << cap;
    throw std::invalid_argument(os.str());
  }

  Builder b(g, hw);
  b.basis.push_back({});
  b.basis_weight.push_back(hw);
  b.basis_index[{}] = 0;
  b.spaces[hw].members = {0};
  b.spaces[hw].gram = Mat(1, 1);
  b.spaces[hw].gram(0, 0) = 1;

  for (std::size_t done = 0; done < b.basis.size(); ++done) {
    Word base = b.basis[done];
    for (int i = 0; i < b.n; ++i) {
      Word w;
      w.reserve(base.size() + 1);
      w.push_back(i);
      w.insert(w.end(), base.begin(), base.end());
      Weight wt = b.weight_of(w);
      auto& sp = b.spaces[wt];
      std::size_t k = sp.members.size();
      Vec gvec(k);
      for (std::size_t j = 0; j < k; ++j)
        gvec[j] = b.form(w, b.basis[sp.members[j]]);
      Rat ww = b.form(w, w);
      if (k == 0) {
        if (ww == 0) {
          b.expansions[w] = {};
          continue;
        }
      } else {
        Vec x = solve(sp.gram, gvec);
        Rat residual = ww;
        for (std::size_t j = 0; j < k; ++j) residual -= gvec[j] * x[j];
        if (residual == 0) {
          Expansion e;
          for (std::size_t j = 0; j < k; ++j)
            if (x[j] != 0) e[sp.members[j]] = x[j];
          b.expansions[w] = std::move(e);
          continue;
        }
      }
      // independent: new basis vector
      std::size_t idx = b.basis.size();
      b.basis.push_back(w);
      b.basis_weight.push_back(wt);
      b.basis_index[w] = idx;
      Mat gram(k + 1, k + 1);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) gram(r, c) = sp.gram(r, c);
      for (std::size_t j = 0; j < k; ++j) {
        gram(k, j) = gvec[j];
        gram(j, k) = gvec[j];
      }
      gram(k, k) = ww;
      sp.gram = std::move(gram);
      sp.members.push_back(idx);
    }
  }

  std::size_t dim = b.basis.size();
  if (Int(static_cast<long>(dim)) != want)
    throw std::logic_error("closure dimension disagrees with Weyl dimension");

  WeightModule m;
  m.alg_ = &g;
  m.dim_ = dim;
  m.weights_ = b.basis_weight;
  for (const auto& w : b.basis) {
    std::vector<int> w1;
    for (int j : w) w1.push_back(j + 1);
    m.words_.push_back(w1);
  }
  m.act_x_.assign(b.n, Mat(dim, dim));
  m.act_y_.assign(b.n, Mat(dim, dim));
  m.act_h_.assign(b.n, Mat(dim, dim));
  for (int i = 0; i < b.n; ++i) {
    for (std::size_t col = 0; col < dim; ++col) {
      m.act_h_[i](col, col) = b.basis_weight[col][i];
      // Y_i column
      Word ext;
      ext.push_back(i);
      ext.insert(ext.end(), b.basis[col].begin(), b.basis[col].end());
      for (const auto& [row, c] : b.express(ext)) m.act_y_[i](row, col) = c;
      // X_i column
      for (const auto& [w, c] : b.raise(i, b.basis[col]))
        for (const auto& [row, d] : b.express(w)) m.act_x_[i](row, col) += c * d;
    }
  }
  m.act_x_root_.assign(g.num_positive(), std::nullopt);
  m.act_y_root_.assign(g.num_positive(), std::nullopt);
  return m;
}

WeightModule WeightModule::adjoint_module(const LieAlgebra& g) {
  WeightModule m;
  m.alg_ = &g;
  m.dim_ = g.dim();
  m.adjoint_ = true;
  const auto& rs = g.roots();
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (g.is_x(k)) {
      m.weights_.push_back(rs.to_weight(rs.positive_roots()[k]));
    } else if (g.is_y(k)) {
      Weight w = rs.to_weight(rs.positive_roots()[k - g.num_positive()]);
      for (auto& c : w) c = -c;
      m.weights_.push_back(w);
    } else {
      m.weights_.push_back(Weight(g.rank(), 0));
    }
  }
  for (int i = 0; i < g.rank(); ++i) {
    m.act_x_.push_back(g.ad_basis(g.x_index(i)));
    m.act_y_.push_back(g.ad_basis(g.y_index(i)));
    m.act_h_.push_back(g.ad_basis(g.h_index(i)));
  }
  return m;
}

const Mat& WeightModule::root_action(bool positive, std::size_t root_idx) const {
  auto& cache = positive ? act_x_root_ : act_y_root_;
  if (cache.empty()) cache.assign(alg_->num_positive(), std::nullopt);
  if (cache[root_idx]) return *cache[root_idx];
  if (adjoint_) {
    std::size_t k = positive ? alg_->x_index(root_idx) : alg_->y_index(root_idx);
    cache[root_idx] = alg_->ad_basis(k);
    return *cache[root_idx];
  }
  if (root_idx < static_cast<std::size_t>(alg_->rank())) {
    cache[root_idx] = positive ? act_x_[root_idx] : act_y_[root_idx];
    return *cache[root_idx];
  }
  const auto& d = alg_->root_decomp(root_idx);
  const Mat& p = root_action(positive, d.parent);
  const Mat& s = root_action(positive, static_cast<std::size_t>(d.simple));
  Mat comm = p * s - s * p;
  comm.scale(Rat(1, positive ? d.n_x : d.n_y));
  cache[root_idx] = std::move(comm);
  return *cache[root_idx];
}

Mat WeightModule::action_of(const Elem& a) const {
  if (a.size() != alg_->dim())
    throw std::invalid_argument("element not in the acting algebra");
  if (adjoint_) return alg_->ad(a);
  Mat out(dim_, dim_);
  for (std::size_t k = 0; k < alg_->dim(); ++k) {
    if (a[k] == 0) continue;
    Mat term;
    if (alg_->is_x(k)) term = root_action(true, k);
    else if (alg_->is_y(k)) term = root_action(false, k - alg_->num_positive());
    else term = act_h_[k - 2 * alg_->num_positive()];
    term.scale(a[k]);
    out += term;
  }
  return out;
}

std::map<Weight, std::size_t> WeightModule::multiplicities() const {
  std::map<Weight, std::size_t> out;
  for (const auto& w : weights_) ++out[w];
  return out;
}

}  // namespace lieext
