#include "doctest.h"
#include "lieext/embedding.hpp"

using namespace lieext;

namespace {

Weight fw(int rank, int i) {
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

}  // namespace

TEST_CASE("natural and twisted embeddings are homomorphisms") {
  for (std::string t : {"E6", "E7", "E8"}) {
    LieAlgebra g{RootSystem(SimpleType::parse(t))};
    CHECK(EmbeddingMap::natural(g).verify_homomorphism().empty());
    CHECK(EmbeddingMap::twisted(g).verify_homomorphism().empty());
  }
}

TEST_CASE("generator images differ between the two variants exactly at the "
          "fork nodes") {
  LieAlgebra e6{RootSystem(SimpleType::parse("E6"))};
  EmbeddingMap phi = EmbeddingMap::natural(e6);
  EmbeddingMap rho = EmbeddingMap::twisted(e6);
  for (int i = 0; i < 3; ++i) CHECK(phi.image_x(i) == rho.image_x(i));
  CHECK(phi.image_x(3) == rho.image_x(4));
  CHECK(phi.image_x(4) == rho.image_x(3));
}

TEST_CASE("generated submodules have the paper's dimensions in E8") {
  LieAlgebra g{RootSystem(SimpleType::parse("E8"))};
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  CHECK(generated_submodule(g, *ne.Xppp, phi).size() == 14);
  CHECK(generated_submodule(g, *ne.Yp, phi).size() == 14);
  CHECK(generated_submodule(g, g.gen_y(0), phi).size() == 64);
  CHECK(generated_submodule(g, ne.Xp, phi).size() == 91);
  CHECK(generated_submodule(g, ne.H_special, phi).size() == 1);
}

TEST_CASE("the image of the embedding is a 91-dimensional subalgebra") {
  LieAlgebra g{RootSystem(SimpleType::parse("E8"))};
  EmbeddingMap phi = EmbeddingMap::natural(g);
  std::vector<Elem> seeds;
  for (int i = 0; i < 7; ++i) {
    seeds.push_back(phi.image_x(i));
    seeds.push_back(phi.image_y(i));
  }
  CHECK(generated_subalgebra(g, seeds).size() == 91);
}

TEST_CASE("lift_embedding validates its radical") {
  LieAlgebra g{RootSystem(SimpleType::parse("E6"))};
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  // valid: X'' is the L5 highest weight vector under phi_5
  EmbeddingMap lift = lift_embedding(phi, fw(5, 5), ne.Xpp, "L5", false);
  CHECK(lift.has_radical());
  CHECK(lift.radical_basis().size() == 16);
  CHECK(lift.verify_homomorphism().empty());
  // wrong weight
  CHECK_THROWS_AS(lift_embedding(phi, fw(5, 4), ne.Xpp, "L4", false),
                  std::invalid_argument);
  // not a highest weight vector
  CHECK_THROWS_AS(
      lift_embedding(phi, fw(5, 5), g.basis_elem(g.y_index(20)), "", false),
      std::invalid_argument);
  // zero vector
  CHECK_THROWS_AS(lift_embedding(phi, fw(5, 5), zero_vec(g.dim()), "", false),
                  std::invalid_argument);
}
