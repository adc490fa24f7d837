#include "doctest.h"
#include "lieext/weight_module.hpp"

using namespace lieext;

namespace {

Weight fw(int rank, int i) {
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

/// Weyl-reflection symmetry: multiplicities are invariant under every
/// simple reflection s_i(w) = w - w_i * alpha_i (fundamental coordinates).
void check_weyl_symmetry(const WeightModule& m) {
  const auto& cartan = m.algebra().roots().cartan();
  int n = m.algebra().rank();
  auto mults = m.multiplicities();
  for (const auto& [w, mult] : mults)
    for (int i = 0; i < n; ++i) {
      Weight r = w;
      for (int j = 0; j < n; ++j) r[j] -= w[i] * cartan[j][i];
      auto it = mults.find(r);
      REQUIRE(it != mults.end());
      CHECK(it->second == mult);
    }
}

}  // namespace

TEST_CASE("irreducible module dimensions match the Weyl formula") {
  LieAlgebra d5{RootSystem(SimpleType::parse("D5"))};
  CHECK(WeightModule::construct_irrep(d5, fw(5, 4)).dim() == 16);
  CHECK(WeightModule::construct_irrep(d5, fw(5, 5)).dim() == 16);
  LieAlgebra d7{RootSystem(SimpleType::parse("D7"))};
  CHECK(WeightModule::construct_irrep(d7, fw(7, 1)).dim() == 14);
  LieAlgebra e6{RootSystem(SimpleType::parse("E6"))};
  CHECK(WeightModule::construct_irrep(e6, fw(6, 6)).dim() == 27);
}

TEST_CASE("the generator actions satisfy [X_i, Y_i] = H_i on the module") {
  LieAlgebra d6{RootSystem(SimpleType::parse("D6"))};
  WeightModule m = WeightModule::construct_irrep(d6, fw(6, 5));
  CHECK(m.dim() == 32);
  for (int i = 0; i < 6; ++i) {
    Mat comm = m.action_x(i) * m.action_y(i) - m.action_y(i) * m.action_x(i);
    CHECK(comm == m.action_h(i));
  }
}

TEST_CASE("action_of is linear and bracket-compatible") {
  LieAlgebra d5{RootSystem(SimpleType::parse("D5"))};
  WeightModule m = WeightModule::construct_irrep(d5, fw(5, 1));
  Elem a = d5.basis_elem(7), b = d5.basis_elem(d5.y_index(3));
  Mat lhs = m.action_of(a) * m.action_of(b) - m.action_of(b) * m.action_of(a);
  CHECK(lhs == m.action_of(d5.bracket(a, b)));
}

TEST_CASE("weight multiplicities are Weyl-reflection symmetric") {
  LieAlgebra d5{RootSystem(SimpleType::parse("D5"))};
  check_weyl_symmetry(WeightModule::construct_irrep(d5, fw(5, 4)));
  LieAlgebra e6{RootSystem(SimpleType::parse("E6"))};
  check_weyl_symmetry(WeightModule::construct_irrep(e6, fw(6, 6)));
  check_weyl_symmetry(WeightModule::adjoint_module(e6));
}

TEST_CASE("the adjoint module has the algebra's dimension and zero-weight "
          "multiplicity equal to the rank") {
  for (std::string t : {"D5", "E7"}) {
    LieAlgebra g{RootSystem(SimpleType::parse(t))};
    WeightModule m = WeightModule::adjoint_module(g);
    CHECK(m.dim() == g.dim());
    CHECK(m.is_adjoint());
    auto mults = m.multiplicities();
    CHECK(mults.at(Weight(g.rank(), 0)) == std::size_t(g.rank()));
  }
}

TEST_CASE("construct_irrep enforces its dimension cap") {
  LieAlgebra e8{RootSystem(SimpleType::parse("E8"))};
  CHECK_THROWS(WeightModule::construct_irrep(e8, fw(8, 8), 100));
}
