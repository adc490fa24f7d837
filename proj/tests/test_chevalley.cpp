#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lieext/lie_algebra.hpp"

using namespace lieext;

TEST_CASE("Chevalley-Serre relations hold for every supported type") {
  for (std::string t : {"D5", "D6", "D7", "E6", "E7", "E8"}) {
    LieAlgebra g{RootSystem(SimpleType::parse(t))};
    CHECK_MESSAGE(g.verify_serre().empty(), t);
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on random triples") {
  LieAlgebra g{RootSystem(SimpleType::parse("E6"))};
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Elem a = g.basis_elem(pick(rng)), b = g.basis_elem(pick(rng)),
         c = g.basis_elem(pick(rng));
    CHECK(g.bracket(a, b) == scaled(g.bracket(b, a), Rat(-1)));
    Elem s = g.bracket(g.bracket(a, b), c);
    axpy(s, Rat(1), g.bracket(g.bracket(b, c), a));
    axpy(s, Rat(1), g.bracket(g.bracket(c, a), b));
    CHECK(is_zero(s));
  }
}

TEST_CASE("the D5 structure table matches the golden file byte for byte") {
  LieAlgebra g{RootSystem(SimpleType::parse("D5"))};
  std::ostringstream fresh;
  g.serialize(fresh);
  std::ifstream in(std::string(LIEEXT_GOLDEN_DIR) + "/d5_structure.table");
  REQUIRE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(fresh.str() == golden.str());
}

TEST_CASE("flipping one structure constant breaks the Serre relations") {
  LieAlgebra g{RootSystem(SimpleType::parse("D5"))};
  g.flip_constant_sign(g.x_index(0), g.y_index(0));
  CHECK(!g.verify_serre().empty());
}

TEST_CASE("named elements satisfy the stated ad(H) eigenvalue relations") {
  for (std::string t : {"E6", "E7", "E8"}) {
    LieAlgebra g{RootSystem(SimpleType::parse(t))};
    NamedElements ne = g.named_elements();
    CHECK(is_zero(g.bracket(ne.H_special, ne.Xp)));
    if (t == "E6") {
      CHECK(g.bracket(ne.H_special, ne.Xpp) == scaled(ne.Xpp, Rat(3, 2)));
    } else {
      CHECK(g.bracket(ne.H_special, ne.Xpp) == ne.Xpp);
      CHECK(g.bracket(ne.H_special, *ne.Xppp) == scaled(*ne.Xppp, Rat(2)));
      CHECK(g.bracket(ne.H_special, *ne.Yp) == scaled(*ne.Yp, Rat(-2)));
    }
  }
}

TEST_CASE("ad matrices represent the bracket") {
  LieAlgebra g{RootSystem(SimpleType::parse("D5"))};
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = pick(rng), l = pick(rng);
    CHECK(g.ad_basis(k).apply(g.basis_elem(l)) ==
          g.bracket(g.basis_elem(k), g.basis_elem(l)));
  }
}
