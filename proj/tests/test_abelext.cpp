#include <algorithm>
#include <set>

#include "doctest.h"
#include "lieext/abelian.hpp"

using namespace lieext;

namespace {

LieAlgebra make(const std::string& t) {
  return LieAlgebra{RootSystem(SimpleType::parse(t))};
}

std::set<std::string> abelian_labels(const AbelianExtensionCatalog& cat) {
  std::set<std::string> out;
  for (const CatalogEntry& e : cat.entries)
    if (e.abelian) out.insert(e.label);
  return out;
}

}  // namespace

TEST_CASE("table 1 bounds") {
  CHECK(table1_bound(SimpleType::parse("E6")) == 16);
  CHECK(table1_bound(SimpleType::parse("E7")) == 27);
  CHECK(table1_bound(SimpleType::parse("E8")) == 36);
}

TEST_CASE("is_abelian_subspace reports an exact witness") {
  LieAlgebra g = make("E6");
  EmbeddingMap phi = EmbeddingMap::natural(g);
  NamedElements ne = g.named_elements();
  std::vector<Vec> rad = generated_submodule(g, ne.Xpp, phi);
  CHECK(rad.size() == 16);
  CHECK(is_abelian_subspace(g, rad).abelian);

  // A Cartan plus an X root vector fails: [H, X] is a nonzero multiple of X.
  std::vector<Vec> bad{g.gen_h(0), g.gen_x(0)};
  AbelianWitness w = is_abelian_subspace(g, bad);
  CHECK_FALSE(w.abelian);
  Elem br = g.bracket(bad[w.i], bad[w.j]);
  CHECK(br == w.bracket);
  CHECK(br != zero_vec(g.dim()));
}

TEST_CASE("E8 scan finds exactly the paper's abelian radicals") {
  LieAlgebra g = make("E8");
  AbelianExtensionCatalog cat =
      scan_invariant_abelian(g, EmbeddingMap::natural(g));
  std::set<std::string> ab = abelian_labels(cat);
  CHECK(ab.count("X'''"));
  CHECK(ab.count("Y'"));
  // the 64-dimensional constituents exceed the bound of 36
  for (const CatalogEntry& e : cat.entries)
    if (e.dim > 36) CHECK_FALSE(e.abelian);
}

TEST_CASE("E6 scan: both simple constituents and no abelian sum") {
  LieAlgebra g = make("E6");
  AbelianExtensionCatalog cat =
      scan_invariant_abelian(g, EmbeddingMap::natural(g));
  bool found_sum = false;
  for (const CatalogEntry& e : cat.entries) {
    if (e.is_sum) {
      found_sum = true;
      CHECK_FALSE(e.abelian);
    }
  }
  CHECK(found_sum);
  CHECK(abelian_labels(cat).size() >= 2);
}

TEST_CASE("torus and exponential automorphisms verify") {
  LieAlgebra g = make("E6");
  AlgebraAut t = torus_automorphism(g, {Rat(2), Rat(1), Rat(1), Rat(1),
                                        Rat(1), Rat(3)});
  CHECK(t.verify().empty());
  AlgebraAut e = exp_ad(g, g.gen_x(2));
  CHECK(e.verify().empty());
  AlgebraAut tc = torus_from_cartan(g, g.gen_h(0), Rat(5));
  CHECK(tc.verify().empty());
}

TEST_CASE("sl2_automorphism_e7 verifies on rational samples") {
  LieAlgebra g = make("E7");
  for (auto [a, b, c, d] : std::vector<std::array<Rat, 4>>{
           {Rat(1), Rat(0), Rat(1), Rat(0)},
           {Rat(0), Rat(1), Rat(-1), Rat(-1)},
           {Rat(2), Rat(1), Rat(1), Rat(1)},
           {Rat(1, 2), Rat(3), Rat(8), Rat(1)}}) {
    REQUIRE(a * c - b * d == Rat(1));
    AlgebraAut A = sl2_automorphism_e7(g, a, b, c, d);
    CHECK(A.verify().empty());
  }
}

TEST_CASE("theorem76_substitution preserves gamma^2 + alpha*beta and sends "
          "(1,0,0) to (1,-1,-1)") {
  std::array<Poly, 3> abg{Poly::var(0), Poly::var(1), Poly::var(2)};
  std::array<Poly, 3> out =
      theorem76_substitution(abg, Rat(0), Rat(1), Rat(-1), Rat(-1));
  std::vector<Rat> at{Rat(1), Rat(0), Rat(0)};  // alpha=1, beta=0, gamma=0
  CHECK(out[0].eval(at) == Rat(1));
  CHECK(out[1].eval(at) == Rat(-1));
  CHECK(out[2].eval(at) == Rat(-1));
  Poly inv_before = abg[2] * abg[2] + abg[0] * abg[1];
  Poly inv_after = out[2] * out[2] + out[0] * out[1];
  CHECK((inv_before - inv_after).is_zero());
}

TEST_CASE("classify_lifts returns the expected class counts, all verified") {
  for (auto [t, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"E6", 6}, {"E7", 2}, {"E8", 3}}) {
    LieAlgebra g = make(t);
    std::vector<LiftClass> classes = classify_lifts(g);
    CHECK(classes.size() == n);
    for (const LiftClass& c : classes) {
      CHECK(c.verified);
      CHECK_FALSE(c.certificates.empty());
    }
  }
}
