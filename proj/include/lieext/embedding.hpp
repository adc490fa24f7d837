#ifndef LIEEXT_EMBEDDING_HPP
#define LIEEXT_EMBEDDING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieext/lie_algebra.hpp"

namespace lieext {

/// Embedding of D_n into E_{n+1}, optionally lifted to an abelian extension
/// D_n |x V by a radical image vector. Generator images are extended to the
/// whole source basis through the root decomposition, so apply() is defined
/// on arbitrary source elements.
class EmbeddingMap {
 public:
  /// Source generator i+1 maps to target node n+2-(i+1).
  static EmbeddingMap natural(const LieAlgebra& target);
  /// natural composed with the D_n diagram flip swapping nodes n-1 and n.
  static EmbeddingMap twisted(const LieAlgebra& target);

  const LieAlgebra& source() const { return *src_; }
  const LieAlgebra& target() const { return *dst_; }
  bool is_twisted() const { return twisted_; }
  std::string name() const;  // "phi_7" / "rho_5" style

  const Elem& image_x(int i) const { return basis_images_[src_->x_index(i)]; }
  const Elem& image_y(int i) const { return basis_images_[src_->y_index(i)]; }
  const Elem& image_h(int i) const { return basis_images_[src_->h_index(i)]; }
  const Elem& image_basis(std::size_t k) const { return basis_images_[k]; }

  Elem apply(const Elem& a) const;

  /// Checks bracket(image a, image b) = image [a,b] on every source
  /// generator pair, plus the radical conditions when one is present.
  /// Returns failure descriptions; empty means verified.
  std::vector<std::string> verify_homomorphism() const;

  bool has_radical() const { return radical_image_.has_value(); }
  const Weight& radical_hw() const { return *radical_hw_; }
  const Elem& radical_image() const { return *radical_image_; }
  const std::vector<Vec>& radical_basis() const { return radical_basis_; }
  const std::string& radical_label() const { return radical_label_; }
  /// Marks lifts whose radical image carries free parameters; branching
  /// reports propagate the flag instead of resolving splittings.
  bool parametrized() const { return parametrized_; }

  friend EmbeddingMap lift_embedding(const EmbeddingMap& emb,
                                     const Weight& radical_hw,
                                     const Elem& image_vector,
                                     std::string label, bool parametrized);

 private:
  EmbeddingMap() = default;
  static EmbeddingMap make(const LieAlgebra& target, bool twisted);

  std::shared_ptr<const LieAlgebra> src_;
  const LieAlgebra* dst_ = nullptr;
  bool twisted_ = false;
  std::vector<Elem> basis_images_;  // per source basis index
  std::optional<Weight> radical_hw_;
  std::optional<Elem> radical_image_;
  std::vector<Vec> radical_basis_;
  std::string radical_label_;
  bool parametrized_ = false;
};

/// Smallest ad(image)-invariant subspace of the target containing seed.
std::vector<Vec> generated_submodule(const LieAlgebra& g, const Elem& seed,
                                     const EmbeddingMap& emb);

/// Smallest bracket-closed subspace of g containing the seeds.
std::vector<Vec> generated_subalgebra(const LieAlgebra& g,
                                      const std::vector<Elem>& seeds);

/// Extends emb by a radical. Throws std::invalid_argument if image_vector is
/// not a highest-weight vector of the stated weight under the image action,
/// or if the submodule it generates is not abelian.
EmbeddingMap lift_embedding(const EmbeddingMap& emb, const Weight& radical_hw,
                            const Elem& image_vector, std::string label = "",
                            bool parametrized = false);

}  // namespace lieext

#endif
