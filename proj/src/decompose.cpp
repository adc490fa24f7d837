#include "lieext/decompose.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lieext {

std::map<Weight, std::size_t> IsotypicDecomposition::multiset() const {
  std::map<Weight, std::size_t> out;
  for (const auto& [w, m] : constituents) out[w] = m;
  return out;
}

std::string IsotypicDecomposition::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : constituents) {
    if (!first) os << " + ";
    first = false;
    if (m > 1) os << m;
    os << "V(" << weight_str(w) << ")";
  }
  return os.str();
}

IsotypicDecomposition decompose_under(const WeightModule& m,
                                      const EmbeddingMap& emb) {
  if (&emb.target() != &m.algebra())
    throw std::invalid_argument("embedding does not target the module's algebra");
  const RootSystem& srs = emb.source().roots();
  int n = emb.source().rank();
  std::size_t dim = m.dim();

  // Image Cartan actions are diagonal for these regular embeddings; grade
  // the module coordinates by their joint eigenvalue vectors.
  std::vector<Mat> hact, xact;
  for (int i = 0; i < n; ++i) {
    hact.push_back(m.action_of(emb.image_h(i)));
    xact.push_back(m.action_of(emb.image_x(i)));
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (r != c && hact[i](r, c) != 0)
          throw std::logic_error("image Cartan action is not diagonal");

  std::map<Weight, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < dim; ++k) {
    Weight w(n);
    for (int i = 0; i < n; ++i) {
      const Rat& e = hact[i](k, k);
      if (e.get_den() != 1)
        throw std::logic_error("non-integral image weight");
      w[i] = static_cast<long>(e.get_num().get_si());
    }
    classes[w].push_back(k);
  }

  IsotypicDecomposition out;
  out.total_dim = dim;
  Int dimsum(0);
  for (const auto& [w, cols] : classes) {
    // joint kernel of the raising images restricted to this weight class
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
      for (std::size_t r = 0; r < dim; ++r) {
        Vec row(cols.size());
        bool nz = false;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          row[j] = xact[i](r, cols[j]);
          if (row[j] != 0) nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
    std::vector<Vec> ker;
    if (rows.empty()) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        Vec e(cols.size(), Rat(0));
        e[j] = 1;
        ker.push_back(std::move(e));
      }
    } else {
      ker = nullspace(Mat::from_rows(rows));
    }
    if (ker.empty()) continue;
    for (long c : w)
      if (c < 0) throw std::logic_error("non-dominant highest weight found");
    std::vector<Vec> lifted;
    for (const Vec& v : ker) {
      Vec full = zero_vec(dim);
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
      lifted.push_back(std::move(full));
    }
    out.hw_spaces[w] = std::move(lifted);
    out.constituents.push_back({w, ker.size()});
    dimsum += Int(static_cast<long>(ker.size())) * weyl_dim(srs, w);
  }
  std::sort(out.constituents.begin(), out.constituents.end());
  if (dimsum != Int(static_cast<long>(dim)))
    throw std::logic_error("constituent dimensions do not sum to module dim");
  return out;
}

bool linear_equivalence_witness(const WeightModule& m, const EmbeddingMap& a,
                                const EmbeddingMap& b) {
  return decompose_under(m, a).multiset() == decompose_under(m, b).multiset();
}

}  // namespace lieext
