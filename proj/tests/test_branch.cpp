#include <set>

#include "doctest.h"
#include "lieext/branching.hpp"

using namespace lieext;

namespace {

LieAlgebra make(const std::string& t) {
  return LieAlgebra{RootSystem(SimpleType::parse(t))};
}

Weight fw(int rank, int i) {
  Weight w(rank, 0);
  if (i > 0) w[i - 1] = 1;
  return w;
}

std::multiset<Weight> block_weights(const BranchingReport& r,
                                    const std::vector<std::size_t>& block) {
  std::multiset<Weight> out;
  for (std::size_t i : block) out.insert(r.copies[i].hw);
  return out;
}

}  // namespace

TEST_CASE("the E6 16-dimensional-radical lift links everything together") {
  LieAlgebra g = make("E6");
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  EmbeddingMap lift = lift_embedding(phi, fw(5, 5), ne.Xpp, "L5");
  CHECK(indecomposability_criterion(g, lift));
  BranchingReport r = branch_with_linkage(g, lift);
  CHECK(r.blocks.size() == 1);
  CHECK(r.all_positive_roots_contained);
  CHECK_FALSE(r.parameter_dependent);
}

TEST_CASE("a Cartan-radical lift produces no linkage at all") {
  LieAlgebra g = make("E6");
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  EmbeddingMap lift = lift_embedding(phi, fw(5, 0), ne.H_special, "H");
  CHECK_FALSE(indecomposability_criterion(g, lift));
  BranchingReport r = branch_with_linkage(g, lift);
  CHECK(r.linkage_edges.empty());
  CHECK(r.blocks.size() == r.copies.size());
}

TEST_CASE("E8 lifts reproduce the two-block structure of Example 8.4") {
  LieAlgebra g = make("E8");
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  for (const Elem* u : {&*ne.Xppp, &*ne.Yp}) {
    EmbeddingMap lift = lift_embedding(phi, fw(7, 1), *u, "L1");
    CHECK_FALSE(indecomposability_criterion(g, lift));
    BranchingReport r = branch_with_linkage(g, lift);
    REQUIRE(r.blocks.size() == 2);
    std::multiset<Weight> small{fw(7, 6), fw(7, 7)};
    std::multiset<Weight> big{fw(7, 0), fw(7, 1), fw(7, 1), fw(7, 2)};
    std::multiset<Weight> b0 = block_weights(r, r.blocks[0]);
    std::multiset<Weight> b1 = block_weights(r, r.blocks[1]);
    CHECK(((b0 == small && b1 == big) || (b0 == big && b1 == small)));
  }
}

TEST_CASE("the parametrized E7 pencil lift is flagged parameter-dependent") {
  LieAlgebra g = make("E7");
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  // alpha=1, beta=0, gamma=0 instance of the weight-zero pencil.
  EmbeddingMap lift =
      lift_embedding(phi, fw(6, 0), *ne.Yp, "pencil", /*parametrized=*/true);
  BranchingReport r = branch_with_linkage(g, lift);
  CHECK(r.parameter_dependent);
  CHECK(r.decomposition.total_dim == 133);
}
