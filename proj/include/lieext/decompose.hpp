#ifndef LIEEXT_DECOMPOSE_HPP
#define LIEEXT_DECOMPOSE_HPP

#include <map>
#include <string>
#include <vector>

#include "lieext/embedding.hpp"
#include "lieext/weight_module.hpp"

namespace lieext {

/// Result of restricting a module to an embedded subalgebra.
struct IsotypicDecomposition {
  /// (highest weight, multiplicity), sorted by weight coordinates.
  std::vector<std::pair<Weight, std::size_t>> constituents;
  /// Joint highest-weight-vector space per occurring weight, in module
  /// coordinates; its dimension equals the multiplicity.
  std::map<Weight, std::vector<Vec>> hw_spaces;
  std::size_t total_dim = 0;

  std::map<Weight, std::size_t> multiset() const;
  std::string str() const;  // "V(L2) + 2V(L5) + 3V(0)"
};

/// Highest-weight vectors are the joint kernel of the raising images,
/// graded by the (diagonal) image-Cartan eigenvalues.
IsotypicDecomposition decompose_under(const WeightModule& m,
                                      const EmbeddingMap& emb);

/// Linear equivalence test of Theorem 5.2: constituent multisets agree.
bool linear_equivalence_witness(const WeightModule& m, const EmbeddingMap& a,
                                const EmbeddingMap& b);

}  // namespace lieext

#endif
