#ifndef LIEEXT_BRANCHING_HPP
#define LIEEXT_BRANCHING_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieext/decompose.hpp"
#include "lieext/embedding.hpp"

namespace lieext {

/// Branching of the ambient adjoint module over a lifted embedding: the
/// semisimple constituents plus the linkage the radical action induces
/// between them. Constituent copies are indexed in the order the highest
/// weight vectors come out of the decomposition.
struct BranchingReport {
  struct Copy {
    Weight hw;
    std::vector<Vec> basis;  // ambient coordinates
  };

  IsotypicDecomposition decomposition;
  std::vector<Copy> copies;
  /// (i, j) with i < j: some radical element maps copy i into copy j or
  /// vice versa.
  std::vector<std::pair<std::size_t, std::size_t>> linkage_edges;
  /// Connected components of the linkage graph, each a sorted copy-index
  /// list. One block means the radical glues everything together.
  std::vector<std::vector<std::size_t>> blocks;
  /// The sufficient criterion for indecomposability: the image together
  /// with the radical spans every positive root vector (or every negative
  /// one) of the ambient algebra.
  bool all_positive_roots_contained = false;
  /// Propagated from the lift: the report reflects one parameter choice of
  /// a parametrized family.
  bool parameter_dependent = false;

  std::string str() const;
};

/// True when span(image of the lift) contains all X_alpha or all Y_alpha of
/// the ambient algebra.
bool indecomposability_criterion(const LieAlgebra& g, const EmbeddingMap& emb);

/// Decomposes the adjoint module of g under emb's semisimple part and
/// records how the radical (if present) links the constituent copies.
/// Verifies along the way that the radical action matrices commute.
BranchingReport branch_with_linkage(const LieAlgebra& g,
                                    const EmbeddingMap& emb);

}  // namespace lieext

#endif
