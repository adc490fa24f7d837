#include <map>

#include "doctest.h"
#include "lieext/decompose.hpp"
#include "lieext/weight_module.hpp"

using namespace lieext;

namespace {

Weight fw(int rank, int i) {
  Weight w(rank, 0);
  if (i > 0) w[i - 1] = 1;
  return w;
}

std::map<Weight, std::size_t> restrict_multiset(const std::string& type,
                                                const Weight& hw,
                                                bool twisted) {
  LieAlgebra g{RootSystem(SimpleType::parse(type))};
  WeightModule m = WeightModule::construct_irrep(g, hw);
  EmbeddingMap e =
      twisted ? EmbeddingMap::twisted(g) : EmbeddingMap::natural(g);
  return decompose_under(m, e).multiset();
}

}  // namespace

TEST_CASE("V_E6(lambda6) restricts asymmetrically through the two variants") {
  std::map<Weight, std::size_t> phi = restrict_multiset("E6", fw(6, 6), false);
  std::map<Weight, std::size_t> rho = restrict_multiset("E6", fw(6, 6), true);
  std::map<Weight, std::size_t> want_phi{
      {fw(5, 0), 1}, {fw(5, 1), 1}, {fw(5, 5), 1}};
  std::map<Weight, std::size_t> want_rho{
      {fw(5, 0), 1}, {fw(5, 1), 1}, {fw(5, 4), 1}};
  CHECK(phi == want_phi);
  CHECK(rho == want_rho);
  CHECK(phi != rho);
}

TEST_CASE("V_E7(lambda7) restricts asymmetrically through the two variants") {
  std::map<Weight, std::size_t> phi = restrict_multiset("E7", fw(7, 7), false);
  std::map<Weight, std::size_t> rho = restrict_multiset("E7", fw(7, 7), true);
  std::map<Weight, std::size_t> want_phi{{fw(6, 1), 2}, {fw(6, 6), 1}};
  std::map<Weight, std::size_t> want_rho{{fw(6, 1), 2}, {fw(6, 5), 1}};
  CHECK(phi == want_phi);
  CHECK(rho == want_rho);
}

TEST_CASE("the E8 adjoint restriction is variant-independent") {
  LieAlgebra g{RootSystem(SimpleType::parse("E8"))};
  WeightModule m = WeightModule::adjoint_module(g);
  IsotypicDecomposition dphi = decompose_under(m, EmbeddingMap::natural(g));
  IsotypicDecomposition drho = decompose_under(m, EmbeddingMap::twisted(g));
  std::map<Weight, std::size_t> want{{fw(7, 0), 1},
                                     {fw(7, 1), 2},
                                     {fw(7, 2), 1},
                                     {fw(7, 6), 1},
                                     {fw(7, 7), 1}};
  CHECK(dphi.multiset() == want);
  CHECK(drho.multiset() == want);
  CHECK(dphi.total_dim == 248);
}

TEST_CASE("linear_equivalence_witness matches the multiset comparison") {
  LieAlgebra g{RootSystem(SimpleType::parse("E6"))};
  EmbeddingMap phi = EmbeddingMap::natural(g);
  EmbeddingMap rho = EmbeddingMap::twisted(g);
  WeightModule m27 = WeightModule::construct_irrep(g, fw(6, 6));
  CHECK_FALSE(linear_equivalence_witness(m27, phi, rho));
  WeightModule madj = WeightModule::adjoint_module(g);
  CHECK(linear_equivalence_witness(madj, phi, rho));
}

TEST_CASE("constituent dimensions add up in decompositions") {
  LieAlgebra g{RootSystem(SimpleType::parse("E7"))};
  WeightModule m = WeightModule::adjoint_module(g);
  EmbeddingMap phi = EmbeddingMap::natural(g);
  IsotypicDecomposition d = decompose_under(m, phi);
  const RootSystem src{SimpleType::parse("D6")};
  Int sum = 0;
  for (const auto& [hw, mult] : d.constituents)
    sum += Int(mult) * weyl_dim(src, hw);
  CHECK(sum == 133);
  for (const auto& [hw, vecs] : d.hw_spaces)
    CHECK(vecs.size() == d.multiset().at(hw));
}
