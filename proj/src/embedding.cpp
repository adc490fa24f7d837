#include "lieext/embedding.hpp"

#include <sstream>
#include <stdexcept>

#include "lieext/matrix.hpp"

namespace lieext {

EmbeddingMap EmbeddingMap::make(const LieAlgebra& target, bool twisted) {
  SimpleType tt = target.type();
  if (tt.family != 'E' || tt.rank < 6 || tt.rank > 8)
    throw std::invalid_argument("embedding target must be E6, E7 or E8");
  int n = tt.rank - 1;
  auto src = std::make_shared<LieAlgebra>(RootSystem(SimpleType{'D', n}));

  // source node s -> target node n+2-s (1-based), after the optional flip
  // of the two fork nodes n-1 and n.
  std::vector<int> node(n);
  for (int s = 1; s <= n; ++s) node[s - 1] = n + 2 - s;
  if (twisted) std::swap(node[n - 2], node[n - 1]);

  EmbeddingMap emb;
  emb.src_ = src;
  emb.dst_ = &target;
  emb.twisted_ = twisted;

  std::size_t sd = src->dim();
  emb.basis_images_.assign(sd, Elem());
  for (int i = 0; i < n; ++i) {
    int t = node[i] - 1;
    emb.basis_images_[src->x_index(i)] = target.gen_x(t);
    emb.basis_images_[src->y_index(i)] = target.gen_y(t);
    emb.basis_images_[src->h_index(i)] = target.gen_h(t);
  }
  // non-simple root vectors via gamma = parent + alpha_i
  for (std::size_t r = n; r < src->num_positive(); ++r) {
    const auto& d = src->root_decomp(r);
    Elem x = target.bracket(emb.basis_images_[src->x_index(d.parent)],
                            emb.basis_images_[src->x_index(d.simple)]);
    Elem y = target.bracket(emb.basis_images_[src->y_index(d.parent)],
                            emb.basis_images_[src->y_index(d.simple)]);
    for (auto& c : x) c /= d.n_x;
    for (auto& c : y) c /= d.n_y;
    emb.basis_images_[src->x_index(r)] = std::move(x);
    emb.basis_images_[src->y_index(r)] = std::move(y);
  }
  return emb;
}

EmbeddingMap EmbeddingMap::natural(const LieAlgebra& target) {
  return make(target, false);
}

EmbeddingMap EmbeddingMap::twisted(const LieAlgebra& target) {
  return make(target, true);
}

std::string EmbeddingMap::name() const {
  std::ostringstream os;
  os << (twisted_ ? "rho_" : "phi_") << src_->rank();
  if (has_radical()) {
    os << "~[" << weight_str(*radical_hw_);
    if (!radical_label_.empty()) os << ", " << radical_label_;
    os << "]";
  }
  return os.str();
}

Elem EmbeddingMap::apply(const Elem& a) const {
  if (a.size() != src_->dim())
    throw std::invalid_argument("element not in the source algebra");
  Elem out = zero_vec(dst_->dim());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) axpy(out, a[k], basis_images_[k]);
  return out;
}

std::vector<std::string> EmbeddingMap::verify_homomorphism() const {
  std::vector<std::string> fails;
  int n = src_->rank();
  std::vector<std::size_t> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(src_->x_index(i));
    gens.push_back(src_->y_index(i));
    gens.push_back(src_->h_index(i));
  }
  for (std::size_t a : gens)
    for (std::size_t b : gens) {
      Elem lhs = dst_->bracket(basis_images_[a], basis_images_[b]);
      Elem rhs = apply(src_->bracket(src_->basis_elem(a), src_->basis_elem(b)));
      for (auto& c : rhs) c = -c;
      axpy(lhs, 1, rhs);
      if (!is_zero(lhs))
        fails.push_back("bracket mismatch on (" + src_->label(a) + ", " +
                        src_->label(b) + ")");
    }
  if (has_radical()) {
    for (int i = 0; i < n; ++i) {
      if (!is_zero(dst_->bracket(image_x(i), *radical_image_)))
        fails.push_back("radical image not annihilated by raising image " +
                        std::to_string(i + 1));
      Elem hv = dst_->bracket(image_h(i), *radical_image_);
      Elem expect = scaled(*radical_image_, Rat((*radical_hw_)[i]));
      for (std::size_t k = 0; k < hv.size(); ++k)
        if (hv[k] != expect[k]) {
          fails.push_back("radical weight mismatch at H image " +
                          std::to_string(i + 1));
          break;
        }
    }
    for (std::size_t a = 0; a < radical_basis_.size(); ++a)
      for (std::size_t b = a; b < radical_basis_.size(); ++b)
        if (!is_zero(dst_->bracket(radical_basis_[a], radical_basis_[b])))
          fails.push_back("[V,V] != 0 on radical basis pair (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return fails;
}

std::vector<Vec> generated_submodule(const LieAlgebra& g, const Elem& seed,
                                     const EmbeddingMap& emb) {
  if (seed.size() != g.dim())
    throw std::invalid_argument("seed not in the ambient algebra");
  RowSpan span(g.dim());
  span.insert(seed);
  // worklist of rank-growing vectors; their span always equals the span
  std::vector<Vec> work{seed};
  int n = emb.source().rank();
  for (std::size_t w = 0; w < work.size(); ++w)
    for (int i = 0; i < n; ++i)
      for (int kind = 0; kind < 3; ++kind) {
        const Elem& gen = kind == 0   ? emb.image_x(i)
                          : kind == 1 ? emb.image_y(i)
                                      : emb.image_h(i);
        Vec b = g.bracket(gen, work[w]);
        if (span.insert(b)) work.push_back(std::move(b));
      }
  return span.basis();
}

std::vector<Vec> generated_subalgebra(const LieAlgebra& g,
                                      const std::vector<Elem>& seeds) {
  RowSpan span(g.dim());
  for (const auto& s : seeds) {
    if (s.size() != g.dim())
      throw std::invalid_argument("seed not in the ambient algebra");
    span.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> rows = span.basis();
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        if (span.insert(g.bracket(rows[a], rows[b]))) grew = true;
  }
  return span.basis();
}

EmbeddingMap lift_embedding(const EmbeddingMap& emb, const Weight& radical_hw,
                            const Elem& image_vector, std::string label,
                            bool parametrized) {
  const LieAlgebra& g = emb.target();
  if (is_zero(image_vector))
    throw std::invalid_argument("radical image vector is zero");
  if (radical_hw.size() != static_cast<std::size_t>(emb.source().rank()))
    throw std::invalid_argument("radical weight has wrong rank");
  int n = emb.source().rank();
  for (int i = 0; i < n; ++i) {
    if (!is_zero(g.bracket(emb.image_x(i), image_vector)))
      throw std::invalid_argument(
          "image vector is not a highest-weight vector: raising image " +
          std::to_string(i + 1) + " does not annihilate it");
    Elem hv = g.bracket(emb.image_h(i), image_vector);
    Elem expect = scaled(image_vector, Rat(radical_hw[i]));
    for (std::size_t k = 0; k < hv.size(); ++k)
      if (hv[k] != expect[k])
        throw std::invalid_argument(
            "image vector does not have the stated weight at node " +
            std::to_string(i + 1));
  }
  std::vector<Vec> basis = generated_submodule(g, image_vector, emb);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!is_zero(g.bracket(basis[a], basis[b]))) {
        std::ostringstream os;
        os << "generated submodule (dim " << basis.size()
           << ") is not abelian";
        throw std::invalid_argument(os.str());
      }
  EmbeddingMap out = emb;
  out.radical_hw_ = radical_hw;
  out.radical_image_ = image_vector;
  out.radical_basis_ = std::move(basis);
  out.radical_label_ = std::move(label);
  out.parametrized_ = parametrized;
  return out;
}

}  // namespace lieext
