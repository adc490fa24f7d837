#include "doctest.h"
#include "lieext/root_system.hpp"

using namespace lieext;

namespace {

Weight fw(int rank, int i) {
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(RootSystem(SimpleType::parse("D5")).num_positive() == 20);
  CHECK(RootSystem(SimpleType::parse("D6")).num_positive() == 30);
  CHECK(RootSystem(SimpleType::parse("D7")).num_positive() == 42);
  CHECK(RootSystem(SimpleType::parse("E6")).num_positive() == 36);
  CHECK(RootSystem(SimpleType::parse("E7")).num_positive() == 63);
  CHECK(RootSystem(SimpleType::parse("E8")).num_positive() == 120);
}

TEST_CASE("the first rank entries are the simple roots in node order") {
  for (std::string t : {"D5", "D7", "E6", "E8"}) {
    RootSystem rs{SimpleType::parse(t)};
    for (int i = 0; i < rs.rank(); ++i) {
      RootVec e(rs.rank(), 0);
      e[i] = 1;
      CHECK(rs.positive_roots()[i] == e);
    }
  }
}

TEST_CASE("Cartan matrices are symmetric with diagonal 2") {
  for (std::string t : {"D6", "E7"}) {
    RootSystem rs{SimpleType::parse(t)};
    const auto& c = rs.cartan();
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(c[i][i] == 2);
      for (int j = 0; j < rs.rank(); ++j) CHECK(c[i][j] == c[j][i]);
    }
  }
}

TEST_CASE("root strings: every positive root is a sum of simple roots of "
          "its height") {
  RootSystem rs{SimpleType::parse("E6")};
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    int h = 0;
    for (int c : rs.positive_roots()[k]) {
      CHECK(c >= 0);
      h += c;
    }
    CHECK(h == rs.height(k));
  }
  CHECK(rs.height(rs.num_positive() - 1) == 11);  // E6 highest root
}

TEST_CASE("Weyl dimension formula reproduces the paper's module sizes") {
  RootSystem d5{SimpleType::parse("D5")}, d6{SimpleType::parse("D6")},
      d7{SimpleType::parse("D7")};
  CHECK(weyl_dim(d5, fw(5, 4)) == 16);
  CHECK(weyl_dim(d5, fw(5, 5)) == 16);
  CHECK(weyl_dim(d5, fw(5, 2)) == 45);
  CHECK(weyl_dim(d6, fw(6, 5)) == 32);
  CHECK(weyl_dim(d6, fw(6, 6)) == 32);
  CHECK(weyl_dim(d6, fw(6, 2)) == 66);
  CHECK(weyl_dim(d7, fw(7, 1)) == 14);
  CHECK(weyl_dim(d7, fw(7, 6)) == 64);
  CHECK(weyl_dim(d7, fw(7, 7)) == 64);
  CHECK(weyl_dim(d7, fw(7, 2)) == 91);
  RootSystem e6{SimpleType::parse("E6")}, e7{SimpleType::parse("E7")},
      e8{SimpleType::parse("E8")};
  CHECK(weyl_dim(e6, fw(6, 6)) == 27);
  CHECK(weyl_dim(e7, fw(7, 7)) == 56);
  CHECK(weyl_dim(e8, fw(8, 8)) == 248);
  CHECK(weyl_dim(e6, fw(6, 2)) == 78);
}

TEST_CASE("algebra dimensions: 2n^2 - n and 78/133/248") {
  CHECK(SimpleType::parse("D5").dimension() == 45);
  CHECK(SimpleType::parse("D6").dimension() == 66);
  CHECK(SimpleType::parse("D7").dimension() == 91);
  CHECK(SimpleType::parse("E6").dimension() == 78);
  CHECK(SimpleType::parse("E7").dimension() == 133);
  CHECK(SimpleType::parse("E8").dimension() == 248);
}
