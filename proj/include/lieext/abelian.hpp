#ifndef LIEEXT_ABELIAN_HPP
#define LIEEXT_ABELIAN_HPP

#include <array>
#include <string>
#include <vector>

#include "lieext/decompose.hpp"
#include "lieext/embedding.hpp"
#include "lieext/polynomial.hpp"

namespace lieext {

struct AbelianWitness {
  bool abelian = true;
  std::size_t i = 0, j = 0;  // offending basis pair when not abelian
  Elem bracket;              // its nonzero bracket
};

AbelianWitness is_abelian_subspace(const LieAlgebra& g,
                                   const std::vector<Vec>& basis);

/// Maximal abelian subalgebra dimension (used as a pre-filter).
long table1_bound(SimpleType t);

struct CatalogEntry {
  Weight radical_hw;
  std::string label;   // "X'''", "alpha*Y' + beta*X''' + gamma*H", "Y1 (+) X''"
  bool is_sum = false;
  bool is_pencil = false;
  bool abelian = false;
  std::size_t dim = 0;
  std::string note;  // dimension obstruction or witness description
};

struct AbelianExtensionCatalog {
  SimpleType ambient;
  bool twisted = false;
  std::vector<CatalogEntry> entries;
  std::string str() const;
};

/// Decomposes the adjoint module under emb and tests every non-image
/// constituent, every parameterized pencil over multiplicity spaces, and
/// every pairwise sum for abelianity.
AbelianExtensionCatalog scan_invariant_abelian(const LieAlgebra& g,
                                               const EmbeddingMap& emb);

/// Linear automorphism of g given by its matrix on the Chevalley basis.
struct AlgebraAut {
  const LieAlgebra* alg = nullptr;
  Mat m;
  Elem apply(const Elem& v) const { return m.apply(v); }
  /// Bracket-compatibility on all generator pairs; empty means verified.
  std::vector<std::string> verify() const;
};

/// X_gamma -> (prod scalings[i]^{c_i}) X_gamma for gamma = sum c_i alpha_i;
/// Y_gamma scales inversely, the Cartan is fixed.
AlgebraAut torus_automorphism(const LieAlgebra& g,
                              const std::vector<Rat>& scalings);

/// X_gamma -> u^{gamma(h)} X_gamma for an integral Cartan element h.
AlgebraAut torus_from_cartan(const LieAlgebra& g, const Elem& h, const Rat& u);

/// exp(ad x) for ad-nilpotent x.
AlgebraAut exp_ad(const LieAlgebra& g, const Elem& x);

/// Inner automorphism of E7 fixing generators 2..7 and acting on the
/// doublets {X_1, Y''} and {X'', Y_1} through the SL2 element [[a,d],[b,c]],
/// ac - bd = 1 (Lemma 7.5 / Eq. 33 shape). Built from exp(ad X'''),
/// exp(ad Y') and the H-torus.
AlgebraAut sl2_automorphism_e7(const LieAlgebra& e7, const Rat& a,
                               const Rat& b, const Rat& c, const Rat& d);

/// (alpha', beta', gamma') of the Theorem 7.6 substitution.
std::array<Poly, 3> theorem76_substitution(const std::array<Poly, 3>& abg,
                                           const Rat& a, const Rat& b,
                                           const Rat& c, const Rat& d);

struct LiftClass {
  std::string family;   // e.g. "phi~_7^{L1,1}"
  std::string radical;  // radical weight
  std::string image;    // "u -> X'''"
  std::string orbit;    // representative / continuum / orbit-rule text
  std::vector<std::string> certificates;
  bool verified = true;
};

/// The classification tables with their computational certificates.
std::vector<LiftClass> classify_lifts(const LieAlgebra& g);

}  // namespace lieext

#endif
