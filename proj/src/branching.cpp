#include "lieext/branching.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieext {

namespace {

/// Inverse of a square matrix via Gauss-Jordan on [m | I].
Mat inverse(const Mat& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  return out;
}

}  // namespace

bool indecomposability_criterion(const LieAlgebra& g, const EmbeddingMap& emb) {
  RowSpan span(g.dim());
  for (std::size_t k = 0; k < emb.source().dim(); ++k)
    span.insert(emb.image_basis(k));
  if (emb.has_radical())
    for (const Vec& v : emb.radical_basis()) span.insert(v);
  bool all_x = true, all_y = true;
  for (std::size_t r = 0; r < g.num_positive(); ++r) {
    if (all_x && !span.contains(g.basis_elem(g.x_index(r)))) all_x = false;
    if (all_y && !span.contains(g.basis_elem(g.y_index(r)))) all_y = false;
    if (!all_x && !all_y) return false;
  }
  return all_x || all_y;
}

BranchingReport branch_with_linkage(const LieAlgebra& g,
                                    const EmbeddingMap& emb) {
  if (&emb.target() != &g)
    throw std::invalid_argument("branch_with_linkage: embedding targets a "
                                "different algebra");
  BranchingReport rep;
  WeightModule adj = WeightModule::adjoint_module(g);
  rep.decomposition = decompose_under(adj, emb);
  rep.parameter_dependent = emb.parametrized();

  // One copy per highest weight vector, generated by the image action.
  for (const auto& [hw, mult] : rep.decomposition.constituents) {
    const auto& hws = rep.decomposition.hw_spaces.at(hw);
    for (std::size_t i = 0; i < mult; ++i)
      rep.copies.push_back({hw, generated_submodule(g, hws[i], emb)});
  }

  // Stack the copy bases into a change of basis; the decomposition already
  // certified that the multiplicities account for the whole dimension, so
  // the stack must be invertible.
  std::size_t n = g.dim(), total = 0;
  std::vector<std::size_t> offset(rep.copies.size());
  for (std::size_t i = 0; i < rep.copies.size(); ++i) {
    offset[i] = total;
    total += rep.copies[i].basis.size();
  }
  if (total != n)
    throw std::logic_error("branch_with_linkage: copies do not fill the "
                           "ambient dimension");
  Mat B(n, n);  // column block i = basis of copy i
  for (std::size_t i = 0; i < rep.copies.size(); ++i)
    for (std::size_t c = 0; c < rep.copies[i].basis.size(); ++c)
      for (std::size_t r = 0; r < n; ++r)
        B(r, offset[i] + c) = rep.copies[i].basis[c][r];
  Mat Binv = inverse(B);

  auto coords = [&](const Vec& v) {
    Vec out = zero_vec(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (Binv(r, k) != 0) out[r] += v[k] * Binv(r, k);
    }
    return out;
  };
  auto block_of = [&](std::size_t col) {
    std::size_t i = 0;
    while (i + 1 < offset.size() && offset[i + 1] <= col) ++i;
    return i;
  };

  if (emb.has_radical()) {
    const auto& rad = emb.radical_basis();
    // The radical is abelian, so its action operators must commute; check
    // it directly on the basis.
    for (std::size_t a = 0; a < rad.size(); ++a)
      for (std::size_t b = a + 1; b < rad.size(); ++b)
        for (std::size_t k = 0; k < n; ++k) {
          Elem e = g.basis_elem(k);
          Elem uv = g.bracket(rad[a], g.bracket(rad[b], e));
          Elem vu = g.bracket(rad[b], g.bracket(rad[a], e));
          if (uv != vu)
            throw std::logic_error("branch_with_linkage: radical action "
                                   "operators do not commute");
        }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const Vec& u : rad)
      for (std::size_t i = 0; i < rep.copies.size(); ++i)
        for (const Vec& w : rep.copies[i].basis) {
          Vec c = coords(g.bracket(u, w));
          for (std::size_t col = 0; col < n; ++col) {
            if (c[col] == 0) continue;
            std::size_t j = block_of(col);
            if (j != i) edges.insert({std::min(i, j), std::max(i, j)});
          }
        }
    rep.linkage_edges.assign(edges.begin(), edges.end());
  }

  // Connected components of the linkage graph.
  std::vector<std::size_t> comp(rep.copies.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [i, j] : rep.linkage_edges) comp[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rep.copies.size(); ++i)
    groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) rep.blocks.push_back(members);

  rep.all_positive_roots_contained = indecomposability_criterion(g, emb);
  if (rep.all_positive_roots_contained && emb.has_radical() &&
      rep.blocks.size() != 1)
    throw std::logic_error("branch_with_linkage: criterion holds but the "
                           "linkage graph is disconnected");
  return rep;
}

std::string BranchingReport::str() const {
  std::ostringstream os;
  os << "restriction: " << decomposition.str() << "\n";
  os << "copies:";
  for (std::size_t i = 0; i < copies.size(); ++i) {
    os << " " << i << ":V(";
    const Weight& hw = copies[i].hw;
    bool zero = true;
    for (std::size_t k = 0; k < hw.size(); ++k)
      if (hw[k] != 0) {
        if (!zero) os << "+";
        if (hw[k] != 1) os << hw[k];
        os << "L" << (k + 1);
        zero = false;
      }
    if (zero) os << "0";
    os << ")";
  }
  os << "\n";
  os << "linkage:";
  if (linkage_edges.empty()) os << " none";
  for (const auto& [i, j] : linkage_edges) os << " " << i << "--" << j;
  os << "\n";
  os << "blocks:";
  for (const auto& b : blocks) {
    os << " {";
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
    os << "}";
  }
  os << "\n";
  os << "indecomposability criterion: "
     << (all_positive_roots_contained ? "satisfied" : "not satisfied") << "\n";
  if (parameter_dependent)
    os << "note: evaluated at one parameter value of a parametrized family\n";
  return os.str();
}

}  // namespace lieext
