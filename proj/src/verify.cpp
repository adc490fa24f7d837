#include "lieext/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lieext/abelian.hpp"
#include "lieext/branching.hpp"
#include "lieext/decompose.hpp"

namespace lieext {

namespace {

using Multiset = std::map<Weight, std::size_t>;

/// Shared lazily-built objects so a suite run constructs each algebra and
/// module once.
struct Ctx {
  VerifyOptions opts;
  std::map<std::string, LieAlgebra> algebras;
  std::map<std::string, EmbeddingMap> embeddings;
  std::map<std::string, WeightModule> modules;

  const LieAlgebra& algebra(const std::string& t) {
    auto it = algebras.find(t);
    if (it == algebras.end()) {
      LieAlgebra g{RootSystem(SimpleType::parse(t))};
      if (opts.mutate_fixture)
        g.flip_constant_sign(g.x_index(0), g.y_index(0));
      it = algebras.emplace(t, std::move(g)).first;
    }
    return it->second;
  }

  const EmbeddingMap& embedding(const std::string& t, bool twisted) {
    std::string key = t + (twisted ? ":rho" : ":phi");
    auto it = embeddings.find(key);
    if (it == embeddings.end()) {
      const LieAlgebra& g = algebra(t);
      it = embeddings
               .emplace(key, twisted ? EmbeddingMap::twisted(g)
                                     : EmbeddingMap::natural(g))
               .first;
    }
    return it->second;
  }

  const WeightModule& adjoint(const std::string& t) {
    std::string key = t + ":adj";
    auto it = modules.find(key);
    if (it == modules.end())
      it = modules.emplace(key, WeightModule::adjoint_module(algebra(t)))
               .first;
    return it->second;
  }

  const WeightModule& irrep(const std::string& t, const Weight& hw) {
    std::ostringstream key;
    key << t << ":";
    for (long c : hw) key << c << ",";
    auto it = modules.find(key.str());
    if (it == modules.end())
      it = modules
               .emplace(key.str(),
                        WeightModule::construct_irrep(algebra(t), hw))
               .first;
    return it->second;
  }
};

Weight fw(int rank, int i) {  // fundamental weight L_i, 1-based
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

std::string multiset_str(const Multiset& ms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, mult] : ms) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult;
    os << "V(";
    bool zero = true;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] != 0) {
        if (!zero) os << "+";
        if (w[k] != 1) os << w[k];
        os << "L" << (k + 1);
        zero = false;
      }
    if (zero) os << "0";
    os << ")";
  }
  return os.str();
}

void require(CheckResult& r, bool cond, const std::string& what) {
  if (!cond) {
    r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("FAILED: ") + what;
  }
}

void note(CheckResult& r, const std::string& what) {
  r.detail += (r.detail.empty() ? "" : "; ") + what;
}

/// If v is a joint highest weight vector under the image action, returns
/// its weight.
bool hw_weight_of(const LieAlgebra& g, const EmbeddingMap& emb, const Elem& v,
                  Weight& out) {
  int n = emb.source().rank();
  out.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!is_zero(g.bracket(emb.image_x(i), v))) return false;
    Elem hv = g.bracket(emb.image_h(i), v);
    Rat c;
    bool set = false;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) {
        if (hv[k] != 0) return false;
        continue;
      }
      Rat q = hv[k] / v[k];
      if (set && q != c) return false;
      c = q;
      set = true;
    }
    if (c.get_den() != 1) return false;
    out[i] = static_cast<long>(c.get_num().get_si());
  }
  return true;
}

/// Jacobi identity on a basis triple, evaluated on the sparse integer
/// structure table. acc/touched are caller-owned scratch (zeroed on exit).
bool jacobi_triple(const LieAlgebra& g, std::size_t a, std::size_t b,
                   std::size_t c, std::vector<long>& acc,
                   std::vector<std::size_t>& touched) {
  auto add_term = [&](std::size_t x, std::size_t y, std::size_t z) {
    bool neg1 = false;
    for (const auto& [i, n] : g.bracket_basis(x, y, neg1)) {
      bool neg2 = false;
      const auto& second = g.bracket_basis(i, z, neg2);
      long f = (neg1 != neg2) ? -n : n;
      for (const auto& [j, m] : second) {
        if (acc[j] == 0) touched.push_back(j);
        acc[j] += f * m;
      }
    }
  };
  add_term(a, b, c);
  add_term(b, c, a);
  add_term(c, a, b);
  bool ok = true;
  for (std::size_t j : touched) {
    if (acc[j] != 0) ok = false;
    acc[j] = 0;
  }
  touched.clear();
  return ok;
}

struct CheckDef {
  std::string name;
  std::string claim;
  std::vector<std::string> groups;
  std::function<void(Ctx&, CheckResult&)> fn;
};

void add_serre_checks(std::vector<CheckDef>& defs) {
  for (std::string t : {"D5", "D6", "D7", "E6", "E7", "E8"})
    defs.push_back(
        {"serre_" + t,
         "Eq. 1 Chevalley-Serre relations hold exactly for " + t,
         {"serre"},
         [t](Ctx& c, CheckResult& r) {
           auto fails = c.algebra(t).verify_serre();
           require(r, fails.empty(),
                   t + ": " + (fails.empty() ? "" : fails.front()));
           if (fails.empty())
             note(r, t + ": all relation families hold");
         }});

  defs.push_back(
      {"jacobi_exhaustive",
       "Jacobi identity on every basis triple of each algebra of dim <= 133",
       {"serre"},
       [](Ctx& c, CheckResult& r) {
         for (std::string t : {"D5", "D6", "D7", "E6", "E7"}) {
           const LieAlgebra& g = c.algebra(t);
           std::size_t n = g.dim(), count = 0;
           std::vector<long> acc(n, 0);
           std::vector<std::size_t> touched;
           // Bilinearity + antisymmetry of the table reduce the identity
           // to strictly increasing index triples.
           for (std::size_t a = 0; a < n; ++a)
             for (std::size_t b = a + 1; b < n; ++b)
               for (std::size_t cc = b + 1; cc < n; ++cc) {
                 ++count;
                 if (!jacobi_triple(g, a, b, cc, acc, touched)) {
                   std::ostringstream os;
                   os << t << ": Jacobi fails at (" << a << "," << b << ","
                      << cc << ")";
                   require(r, false, os.str());
                   return;
                 }
               }
           note(r, t + ": " + std::to_string(count) + " triples");
         }
       }});

  defs.push_back(
      {"jacobi_random_e8",
       "Jacobi identity on random basis triples of E8",
       {"serre"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E8");
         std::mt19937_64 rng(20240817);
         std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
         std::vector<long> acc(g.dim(), 0);
         std::vector<std::size_t> touched;
         for (unsigned long k = 0; k < c.opts.jacobi_samples; ++k) {
           std::size_t a = pick(rng), b = pick(rng), cc = pick(rng);
           if (!jacobi_triple(g, a, b, cc, acc, touched)) {
             std::ostringstream os;
             os << "E8: Jacobi fails at (" << a << "," << b << "," << cc
                << ")";
             require(r, false, os.str());
             return;
           }
         }
         note(r, std::to_string(c.opts.jacobi_samples) + " random triples");
       }});

  defs.push_back(
      {"dimension_identities",
       "dim D_n = 2n^2-n for n=5,6,7; dims 78/133/248 for E6/E7/E8; the "
       "Eq. 2 module dimensions",
       {"serre"},
       [](Ctx& c, CheckResult& r) {
         for (int n : {5, 6, 7}) {
           const LieAlgebra& g = c.algebra("D" + std::to_string(n));
           require(r, g.dim() == std::size_t(2 * n * n - n),
                   "dim D" + std::to_string(n));
         }
         require(r, c.algebra("E6").dim() == 78, "dim E6");
         require(r, c.algebra("E7").dim() == 133, "dim E7");
         require(r, c.algebra("E8").dim() == 248, "dim E8");
         RootSystem d7(SimpleType::parse("D7")), d6(SimpleType::parse("D6")),
             d5(SimpleType::parse("D5"));
         require(r, weyl_dim(d7, fw(7, 1)) == 14, "dim V_{D7}(L1) = 14");
         require(r, weyl_dim(d7, fw(7, 6)) == 64, "dim V_{D7}(L6) = 64");
         require(r, weyl_dim(d7, fw(7, 7)) == 64, "dim V_{D7}(L7) = 64");
         require(r, weyl_dim(d7, fw(7, 2)) == 91, "dim V_{D7}(L2) = 91");
         require(r, weyl_dim(d6, fw(6, 5)) == 32, "dim V_{D6}(L5) = 32");
         require(r, weyl_dim(d6, fw(6, 6)) == 32, "dim V_{D6}(L6) = 32");
         require(r, weyl_dim(d6, fw(6, 2)) == 66, "dim V_{D6}(L2) = 66");
         require(r, weyl_dim(d5, fw(5, 4)) == 16, "dim V_{D5}(L4) = 16");
         require(r, weyl_dim(d5, fw(5, 5)) == 16, "dim V_{D5}(L5) = 16");
         require(r, weyl_dim(d5, fw(5, 2)) == 45, "dim V_{D5}(L2) = 45");
         if (r.passed) note(r, "all dimension identities hold");
       }});
}

void add_restriction_checks(std::vector<CheckDef>& defs) {
  defs.push_back(
      {"eq10_e6_27_restriction",
       "V_{E6}(L6) restricts to V(0)+V(L1)+V(L5) under phi_5 and to "
       "V(0)+V(L1)+V(L4) under rho_5 (Eq. 10), so phi_5 !~ rho_5",
       {"eq10-12"},
       [](Ctx& c, CheckResult& r) {
         const WeightModule& m = c.irrep("E6", fw(6, 6));
         auto dp = decompose_under(m, c.embedding("E6", false));
         auto dr = decompose_under(m, c.embedding("E6", true));
         Multiset ep = {{Weight(5, 0), 1}, {fw(5, 1), 1}, {fw(5, 5), 1}};
         Multiset er = {{Weight(5, 0), 1}, {fw(5, 1), 1}, {fw(5, 4), 1}};
         require(r, dp.multiset() == ep, "phi_5 multiset: got " + dp.str());
         require(r, dr.multiset() == er, "rho_5 multiset: got " + dr.str());
         require(r, dp.multiset() != dr.multiset(), "asymmetry");
         note(r, "phi: " + dp.str() + " | rho: " + dr.str());
       }});

  defs.push_back(
      {"eq11_e7_56_restriction",
       "V_{E7}(L7) restricts to 2V(L1)+V(L6) under phi_6 and to "
       "2V(L1)+V(L5) under rho_6 (Eq. 11), so phi_6 !~ rho_6",
       {"eq10-12"},
       [](Ctx& c, CheckResult& r) {
         const WeightModule& m = c.irrep("E7", fw(7, 7));
         auto dp = decompose_under(m, c.embedding("E7", false));
         auto dr = decompose_under(m, c.embedding("E7", true));
         Multiset ep = {{fw(6, 1), 2}, {fw(6, 6), 1}};
         Multiset er = {{fw(6, 1), 2}, {fw(6, 5), 1}};
         require(r, dp.multiset() == ep, "phi_6 multiset: got " + dp.str());
         require(r, dr.multiset() == er, "rho_6 multiset: got " + dr.str());
         require(r, dp.multiset() != dr.multiset(), "asymmetry");
         note(r, "phi: " + dp.str() + " | rho: " + dr.str());
       }});

  defs.push_back(
      {"eq12_e8_adjoint_restriction_symmetry",
       "V_{E8}(L8) = E8 restricts identically under phi_7 and rho_7 "
       "(Eq. 12), so phi_7 ~_L rho_7",
       {"eq10-12"},
       [](Ctx& c, CheckResult& r) {
         const WeightModule& m = c.adjoint("E8");
         auto dp = decompose_under(m, c.embedding("E8", false));
         auto dr = decompose_under(m, c.embedding("E8", true));
         Multiset e = {{Weight(7, 0), 1},
                       {fw(7, 1), 2},
                       {fw(7, 2), 1},
                       {fw(7, 6), 1},
                       {fw(7, 7), 1}};
         require(r, dp.multiset() == e, "phi_7 multiset: got " + dp.str());
         require(r, dr.multiset() == e, "rho_7 multiset: got " + dr.str());
         note(r, "both: " + dp.str());
       }});
}

void add_adjoint_checks(std::vector<CheckDef>& defs) {
  defs.push_back(
      {"eq13_e8_adjoint_decomposition",
       "E8 = V(L2)+2V(L1)+V(L6)+V(L7)+V(0) under phi_7(D7) with "
       "248 = 91+14+64+64+14+1 (Eq. 13)",
       {"eq13-21"},
       [](Ctx& c, CheckResult& r) {
         auto d = decompose_under(c.adjoint("E8"), c.embedding("E8", false));
         Multiset e = {{Weight(7, 0), 1},
                       {fw(7, 1), 2},
                       {fw(7, 2), 1},
                       {fw(7, 6), 1},
                       {fw(7, 7), 1}};
         require(r, d.multiset() == e, "multiset: got " + d.str());
         RootSystem d7(SimpleType::parse("D7"));
         long sum = 0;
         for (const auto& [w, mult] : d.constituents)
           sum += long(mult) * long(weyl_dim(d7, w).get_si());
         require(r, sum == 248, "dimension sum " + std::to_string(sum));
         note(r, d.str() + "; 91+14+64+64+14+1 = 248");
       }});

  defs.push_back(
      {"eq15_16_e7_adjoint_decompositions",
       "E7 = V(L2)+2V(L5)+3V(0) under phi_6 and V(L2)+2V(L6)+3V(0) under "
       "rho_6 with 133 = 66+2*32+3 (Eqs. 15-16)",
       {"eq13-21"},
       [](Ctx& c, CheckResult& r) {
         auto dp = decompose_under(c.adjoint("E7"), c.embedding("E7", false));
         auto dr = decompose_under(c.adjoint("E7"), c.embedding("E7", true));
         Multiset ep = {{Weight(6, 0), 3}, {fw(6, 2), 1}, {fw(6, 5), 2}};
         Multiset er = {{Weight(6, 0), 3}, {fw(6, 2), 1}, {fw(6, 6), 2}};
         require(r, dp.multiset() == ep, "phi_6: got " + dp.str());
         require(r, dr.multiset() == er, "rho_6: got " + dr.str());
         require(r, 66 + 2 * 32 + 3 == 133, "dimension sum");
         note(r, "phi: " + dp.str() + " | rho: " + dr.str() +
                     "; 66+2*32+3 = 133");
       }});

  defs.push_back(
      {"eq19_20_e6_adjoint_decompositions",
       "E6 = V(L2)+V(L4)+V(L5)+V(0) under both phi_5 and rho_5 with "
       "78 = 45+16+16+1, and [Y_1]/[X''] swap constituents (Eqs. 19-20)",
       {"eq13-21"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E6");
         auto dp = decompose_under(c.adjoint("E6"), c.embedding("E6", false));
         auto dr = decompose_under(c.adjoint("E6"), c.embedding("E6", true));
         Multiset e = {{Weight(5, 0), 1},
                       {fw(5, 2), 1},
                       {fw(5, 4), 1},
                       {fw(5, 5), 1}};
         require(r, dp.multiset() == e, "phi_5: got " + dp.str());
         require(r, dr.multiset() == e, "rho_5: got " + dr.str());
         require(r, 45 + 16 + 16 + 1 == 78, "dimension sum");
         // constituent identification: X'' is the L5 vector under phi_5
         // and the L4 vector under rho_5; Y_1 the other way round.
         NamedElements ne = g.named_elements();
         Weight w;
         require(r,
                 hw_weight_of(g, c.embedding("E6", false), ne.Xpp, w) &&
                     w == fw(5, 5),
                 "[X''] = V(L5) under phi_5");
         require(r,
                 hw_weight_of(g, c.embedding("E6", false), g.gen_y(0), w) &&
                     w == fw(5, 4),
                 "[Y_1] = V(L4) under phi_5");
         require(r,
                 hw_weight_of(g, c.embedding("E6", true), ne.Xpp, w) &&
                     w == fw(5, 4),
                 "[X''] = V(L4) under rho_5");
         require(r,
                 hw_weight_of(g, c.embedding("E6", true), g.gen_y(0), w) &&
                     w == fw(5, 5),
                 "[Y_1] = V(L5) under rho_5");
         note(r, dp.str() + "; 45+16+16+1 = 78; constituents swap");
       }});

  for (std::string t : {"E6", "E7", "E8"})
    defs.push_back(
        {"named_elements_" + t,
         "the named elements of " + t +
             " are joint highest weight vectors, X' generates the image, "
             "and the stated ad(H) eigenvalues hold",
         {"eq13-21"},
         [t](Ctx& c, CheckResult& r) {
           const LieAlgebra& g = c.algebra(t);
           const EmbeddingMap& emb = c.embedding(t, false);
           NamedElements ne = g.named_elements();
           // X' lies in and generates the image.
           auto sub = generated_submodule(g, ne.Xp, emb);
           RowSpan img(g.dim());
           for (std::size_t k = 0; k < emb.source().dim(); ++k)
             img.insert(emb.image_basis(k));
           require(r, sub.size() == emb.source().dim(),
                   "[X'] has the source dimension");
           bool inside = true;
           for (const Vec& v : sub)
             if (!img.contains(v)) inside = false;
           require(r, inside, "[X'] = image of " + emb.name());
           // H is a weight-zero highest weight vector.
           Weight w;
           require(r,
                   hw_weight_of(g, emb, ne.H_special, w) &&
                       w == Weight(emb.source().rank(), 0),
                   "H is a weight-0 highest weight vector");
           // Eigenvalue relations among the named elements.
           require(r, is_zero(g.bracket(ne.H_special, ne.Xp)), "[H,X'] = 0");
           if (t == "E6") {
             require(r,
                     g.bracket(ne.H_special, ne.Xpp) ==
                         scaled(ne.Xpp, Rat(3, 2)),
                     "[H,X''] = (3/2)X''");
           } else {
             require(r, g.bracket(ne.H_special, ne.Xpp) == ne.Xpp,
                     "[H,X''] = X''");
             require(r,
                     g.bracket(ne.H_special, *ne.Xppp) ==
                         scaled(*ne.Xppp, Rat(2)),
                     "[H,X'''] = 2X'''");
             require(r,
                     g.bracket(ne.H_special, *ne.Yp) ==
                         scaled(*ne.Yp, Rat(-2)),
                     "[H,Y'] = -2Y'");
           }
           if (t == "E7")
             require(r,
                     g.bracket(ne.H_special, *ne.Ypp) ==
                         scaled(*ne.Ypp, Rat(-1)),
                     "[H,Y''] = -Y''");
           if (r.passed) note(r, "all named-element relations hold");
         }});
}

void add_lemma6_checks(std::vector<CheckDef>& defs) {
  defs.push_back(
      {"e8_abelian_radicals",
       "[X'''], [Y'] (dim 14) and [H] (dim 1) are abelian subalgebras of E8",
       {"lemmas6"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E8");
         const EmbeddingMap& emb = c.embedding("E8", false);
         NamedElements ne = g.named_elements();
         for (auto& [label, seed] :
              std::vector<std::pair<std::string, Elem>>{
                  {"[X''']", *ne.Xppp}, {"[Y']", *ne.Yp},
                  {"[H]", ne.H_special}}) {
           auto basis = generated_submodule(g, seed, emb);
           std::size_t want = label == "[H]" ? 1 : 14;
           require(r, basis.size() == want, label + " dimension");
           require(r, is_abelian_subspace(g, basis).abelian,
                   label + " abelian");
         }
         if (r.passed) note(r, "dims 14, 14, 1; all abelian");
       }});

  defs.push_back(
      {"lemma63_pencil_witness",
       "[alpha X''' + beta Y', [Y_8, alpha X''' + beta Y']] = -2 alpha beta "
       "X' as a polynomial identity, so the E8 pencils and sums are not "
       "abelian; [Y_1], [X''] exceed the dim-36 bound",
       {"lemmas6"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E8");
         NamedElements ne = g.named_elements();
         Poly al = Poly::var(0), be = Poly::var(1);
         PolyElem v(g.dim());
         for (std::size_t k = 0; k < g.dim(); ++k)
           v[k] = al * Poly((*ne.Xppp)[k]) + be * Poly((*ne.Yp)[k]);
         PolyElem y8(g.dim());
         for (std::size_t k = 0; k < g.dim(); ++k)
           y8[k] = Poly(g.gen_y(7)[k]);
         PolyElem w = g.bracket(v, g.bracket(y8, v));
         PolyElem expect(g.dim());
         for (std::size_t k = 0; k < g.dim(); ++k)
           expect[k] = Rat(-2) * al * be * Poly(ne.Xp[k]);
         require(r, w == expect, "witness bracket is -2*alpha*beta*X'");
         require(r, table1_bound(g.type()) == 36, "Table 1 bound for E8");
         RootSystem d7(SimpleType::parse("D7"));
         require(r, weyl_dim(d7, fw(7, 6)) == 64 && 64 > 36,
                 "dim V(L6) = 64 > 36");
         require(r, weyl_dim(d7, fw(7, 7)) == 64, "dim V(L7) = 64 > 36");
         note(r, "[v,[Y_8,v]] = (-2*alpha*beta)*X'");
       }});

  defs.push_back(
      {"e7_weight_zero_pencil",
       "every weight-0 highest weight vector in E7 is alpha Y' + beta X''' "
       "+ gamma H; those spans are abelian and all other constituents or "
       "sums are not",
       {"lemmas6"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E7");
         NamedElements ne = g.named_elements();
         auto d = decompose_under(c.adjoint("E7"), c.embedding("E7", false));
         const auto& zero_hw = d.hw_spaces.at(Weight(6, 0));
         require(r, zero_hw.size() == 3, "weight-0 multiplicity 3");
         RowSpan span(g.dim());
         for (const Vec& v : zero_hw) span.insert(v);
         require(r,
                 span.contains(*ne.Yp) && span.contains(*ne.Xppp) &&
                     span.contains(ne.H_special),
                 "span{Y', X''', H} fills the weight-0 space");
         require(r, !is_zero(g.bracket(*ne.Yp, *ne.Xppp)), "[Y',X'''] != 0");
         require(r, !is_zero(g.bracket(*ne.Yp, ne.H_special)), "[Y',H] != 0");
         require(r, !is_zero(g.bracket(*ne.Xppp, ne.H_special)),
                 "[X''',H] != 0");
         require(r, table1_bound(g.type()) == 27 && 32 > 27,
                 "dim V(L5) = dim V(L6) = 32 > 27");
         note(r, "weight-0 hw space = span{Y', X''', H}; pairwise brackets "
                 "nonzero");
       }});

  defs.push_back(
      {"e6_abelian_radicals",
       "[Y_1], [X''] (dim 16) and [H] (dim 1) are abelian subalgebras of "
       "E6 under both embeddings, and no direct sum of constituents is",
       {"lemmas6"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E6");
         NamedElements ne = g.named_elements();
         for (bool tw : {false, true}) {
           const EmbeddingMap& emb = c.embedding("E6", tw);
           std::string tag = tw ? " (rho_5)" : " (phi_5)";
           auto bx = generated_submodule(g, ne.Xpp, emb);
           auto by = generated_submodule(g, g.gen_y(0), emb);
           auto bh = generated_submodule(g, ne.H_special, emb);
           require(r, bx.size() == 16 && by.size() == 16 && bh.size() == 1,
                   "dims 16/16/1" + tag);
           require(r, is_abelian_subspace(g, bx).abelian, "[X'']" + tag);
           require(r, is_abelian_subspace(g, by).abelian, "[Y_1]" + tag);
           require(r, !is_abelian_subspace(g, sum_spans(bx, by)).abelian,
                   "[X''] + [Y_1] not abelian" + tag);
           require(r, !is_abelian_subspace(g, sum_spans(bx, bh)).abelian,
                   "[X''] + [H] not abelian" + tag);
           require(r, !is_abelian_subspace(g, sum_spans(by, bh)).abelian,
                   "[Y_1] + [H] not abelian" + tag);
         }
         if (r.passed) note(r, "radicals abelian, every sum non-abelian");
       }});
}

void add_prop6_checks(std::vector<CheckDef>& defs) {
  // Expected abelian verdicts per ambient: exactly these single-constituent
  // labels (plus, for E7, the weight-zero pencil).
  auto catalog_check = [](Ctx& c, CheckResult& r, const std::string& t,
                          const std::vector<std::string>& abelian_labels,
                          bool pencil_abelian) {
    for (bool tw : {false, true}) {
      auto cat = scan_invariant_abelian(c.algebra(t), c.embedding(t, tw));
      std::string tag = t + (tw ? "/rho" : "/phi");
      for (const auto& e : cat.entries) {
        bool expect =
            (!e.is_sum && !e.is_pencil &&
             std::find(abelian_labels.begin(), abelian_labels.end(),
                       e.label) != abelian_labels.end()) ||
            (e.is_pencil && pencil_abelian && e.dim == 1);
        require(r, e.abelian == expect,
                tag + " entry [" + e.label + "] verdict");
      }
      std::size_t n_abelian = 0;
      for (const auto& e : cat.entries)
        if (e.abelian) ++n_abelian;
      require(r,
              n_abelian == abelian_labels.size() + (pencil_abelian ? 1 : 0),
              tag + " abelian count");
    }
  };

  defs.push_back(
      {"prop61_e8_catalog",
       "the invariant abelian subspaces of E8 are exactly [H], [X'''] and "
       "[Y'] (Prop 6.1)",
       {"props6"},
       [catalog_check](Ctx& c, CheckResult& r) {
         catalog_check(c, r, "E8", {"H", "X'''", "Y'"}, false);
         if (r.passed)
           note(r, "abelian: [H] (C), [X'''] (C^14), [Y'] (C^14); all "
                   "others non-abelian");
       }});

  defs.push_back(
      {"prop66_e7_catalog",
       "the invariant abelian subspaces of E7 are exactly the spans of "
       "alpha Y' + beta X''' + gamma H (Prop 6.6)",
       {"props6"},
       [catalog_check](Ctx& c, CheckResult& r) {
         catalog_check(c, r, "E7", {"Y'", "X'''", "H"}, true);
         if (r.passed)
           note(r, "abelian: only the 1-dim weight-0 spans; all 32/64-dim "
                   "constituents and all sums non-abelian");
       }});

  defs.push_back(
      {"prop610_e6_catalog",
       "the invariant abelian subspaces of E6 are exactly [H], [X''] and "
       "[Y_1] (Prop 6.10)",
       {"props6"},
       [catalog_check](Ctx& c, CheckResult& r) {
         catalog_check(c, r, "E6", {"H", "X''", "Y1"}, false);
         if (r.passed)
           note(r, "abelian: [H] (C), [X''] (C^16), [Y_1] (C^16); all sums "
                   "non-abelian");
       }});
}

void add_section7_checks(std::vector<CheckDef>& defs) {
  for (std::string t : {"E6", "E7", "E8"})
    defs.push_back(
        {"classification_" + t,
         "the lift classification for " + t +
             " matches Section 7, every certificate passing",
         {"section7"},
         [t](Ctx& c, CheckResult& r) {
           auto classes = classify_lifts(c.algebra(t));
           std::size_t want = t == "E8" ? 3 : (t == "E7" ? 2 : 6);
           require(r, classes.size() == want, "class count");
           for (const auto& lc : classes) {
             require(r, lc.verified, lc.family);
             note(r, lc.family + ": " + lc.orbit);
           }
         }});

  defs.push_back(
      {"torus_equivalences",
       "the Lemma 7.2/7.7 scalings are realized by explicit torus "
       "automorphisms",
       {"section7"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& e8 = c.algebra("E8");
         NamedElements n8 = e8.named_elements();
         auto t8 = torus_automorphism(e8, {Rat(3), Rat(1), Rat(1), Rat(1),
                                           Rat(1), Rat(1), Rat(1), Rat(1)});
         require(r, t8.verify().empty(), "E8 torus map is an automorphism");
         require(r, t8.apply(*n8.Xppp) == scaled(*n8.Xppp, Rat(9)),
                 "E8: X''' -> beta^2 X''' with beta = 3");
         const LieAlgebra& e6 = c.algebra("E6");
         NamedElements n6 = e6.named_elements();
         auto t6 = torus_automorphism(
             e6, {Rat(5), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
         require(r, t6.verify().empty(), "E6 torus map is an automorphism");
         require(r, t6.apply(n6.Xpp) == scaled(n6.Xpp, Rat(5)),
                 "E6: X'' -> alpha X'' with alpha = 5");
         require(r, t6.apply(e6.gen_y(0)) == scaled(e6.gen_y(0), Rat(1, 5)),
                 "E6: Y_1 -> Y_1 / 5");
         note(r, "scaling automorphisms verified on all generator pairs");
       }});

  defs.push_back(
      {"eigenvalue_inequivalences",
       "[H,X'''] = 2X''' but [H,Y'] = -2Y' in E7 and E8 (Lemma 7.1 "
       "obstruction)",
       {"section7"},
       [](Ctx& c, CheckResult& r) {
         for (std::string t : {"E7", "E8"}) {
           const LieAlgebra& g = c.algebra(t);
           NamedElements ne = g.named_elements();
           require(r,
                   g.bracket(ne.H_special, *ne.Xppp) ==
                       scaled(*ne.Xppp, Rat(2)),
                   t + ": [H,X'''] = 2X'''");
           require(r,
                   g.bracket(ne.H_special, *ne.Yp) == scaled(*ne.Yp, Rat(-2)),
                   t + ": [H,Y'] = -2Y'");
         }
         note(r, "opposite ad(H) eigenvalues obstruct equivalence");
       }});

  defs.push_back(
      {"substitution_invariant",
       "the Theorem 7.6 substitution preserves gamma^2 + alpha*beta and "
       "composes as 2x2 matrix products",
       {"section7"},
       [](Ctx&, CheckResult& r) {
         Poly al = Poly::var(0), be = Poly::var(1), ga = Poly::var(2);
         std::vector<std::array<Rat, 4>> ms = {{Rat(1), Rat(0), Rat(1), Rat(0)},
                                               {Rat(2), Rat(1), Rat(1), Rat(1)},
                                               {Rat(0), Rat(1), Rat(-1),
                                                Rat(-1)},
                                               {Rat(1, 2), Rat(3), Rat(8),
                                                Rat(1)}};
         for (const auto& [a, b, cc, d] : ms) {
           auto s = theorem76_substitution({al, be, ga}, a, b, cc, d);
           require(r, s[2] * s[2] + s[0] * s[1] == ga * ga + al * be,
                   "invariant preserved");
         }
         auto s1 = theorem76_substitution({al, be, ga}, Rat(2), Rat(1),
                                          Rat(1), Rat(1));
         auto s12 = theorem76_substitution(s1, Rat(1), Rat(-1), Rat(3),
                                           Rat(2));
         // product [[1,2],[-1,3]]*[[2,1],[1,1]] on the (a,d;b,c) layout
         auto s3 = theorem76_substitution({al, be, ga}, Rat(4), Rat(1),
                                          Rat(2), Rat(3));
         require(r, s12[0] == s3[0] && s12[1] == s3[1] && s12[2] == s3[2],
                 "composition");
         note(r, "gamma^2 + alpha*beta invariant; substitutions compose");
       }});
}

void add_table_checks(std::vector<CheckDef>& defs) {
  defs.push_back(
      {"table1_consistency",
       "every abelian verdict in the six catalogs respects the maximal "
       "abelian dimensions 16/27/36 (Table 1)",
       {"tables"},
       [](Ctx& c, CheckResult& r) {
         require(r, table1_bound(SimpleType::parse("E6")) == 16, "E6 bound");
         require(r, table1_bound(SimpleType::parse("E7")) == 27, "E7 bound");
         require(r, table1_bound(SimpleType::parse("E8")) == 36, "E8 bound");
         for (std::string t : {"E6", "E7", "E8"})
           for (bool tw : {false, true}) {
             long bound = table1_bound(SimpleType::parse(t));
             auto cat =
                 scan_invariant_abelian(c.algebra(t), c.embedding(t, tw));
             for (const auto& e : cat.entries) {
               if (e.abelian)
                 require(r, long(e.dim) <= bound,
                         t + " abelian entry within bound");
               if (long(e.dim) > bound)
                 require(r, !e.abelian, t + " oversized entry non-abelian");
             }
           }
         if (r.passed) note(r, "all verdicts consistent with the bounds");
       }});

  auto table_rows = [](const std::vector<LiftClass>& classes) {
    std::map<std::string, std::vector<std::string>> rows;
    for (const auto& lc : classes) rows[lc.radical].push_back(lc.family);
    return rows;
  };

  defs.push_back(
      {"table2_e8_classification",
       "Table 2: D7 |x C^14 embeds via phi~_7^{L1,1} and phi~_7^{L1',1}; "
       "D7 |x C via the continuum phi~_7^{0,alpha}",
       {"tables"},
       [table_rows](Ctx& c, CheckResult& r) {
         auto rows = table_rows(classify_lifts(c.algebra("E8")));
         std::vector<std::string> l1;
         for (auto& [rad, fams] : rows)
           if (rad == "L1" || rad == "L1'")
             l1.insert(l1.end(), fams.begin(), fams.end());
         std::sort(l1.begin(), l1.end());
         require(r,
                 l1 == std::vector<std::string>{"phi~_7^{L1',1}",
                                                "phi~_7^{L1,1}"},
                 "C^14 row");
         require(r,
                 rows.count("0") &&
                     rows["0"] ==
                         std::vector<std::string>{"phi~_7^{0,alpha}"},
                 "C row");
         note(r, "D7 |x C^14: phi~_7^{L1,1}, phi~_7^{L1',1} | D7 |x C: "
                 "phi~_7^{0,alpha}, alpha != 0");
       }});

  defs.push_back(
      {"e7_classification_families",
       "D6 |x C embeds via the (alpha,beta,gamma) orbit families for phi_6 "
       "and rho_6 (Theorem 7.6)",
       {"tables"},
       [table_rows](Ctx& c, CheckResult& r) {
         auto rows = table_rows(classify_lifts(c.algebra("E7")));
         require(r,
                 rows.size() == 1 && rows.count("0") &&
                     rows["0"].size() == 2,
                 "single radical row with both variants");
         note(r, "D6 |x C: phi~_6^{0,(a,b,g)} and rho~_6^{0,(a,b,g)} up to "
                 "the substitution action");
       }});

  defs.push_back(
      {"table3_e6_classification",
       "Table 3: D5 |x V(L5) via phi~_5^{L5,1}, rho~_5^{L5,1}; D5 |x V(L4) "
       "via phi~_5^{L4,1}, rho~_5^{L4,1}; D5 |x C via the continua",
       {"tables"},
       [table_rows](Ctx& c, CheckResult& r) {
         auto rows = table_rows(classify_lifts(c.algebra("E6")));
         require(r,
                 rows.count("L5") &&
                     rows["L5"] == std::vector<std::string>{
                                       "phi~_5^{L5,1}", "rho~_5^{L5,1}"},
                 "V(L5) row");
         require(r,
                 rows.count("L4") &&
                     rows["L4"] == std::vector<std::string>{
                                       "phi~_5^{L4,1}", "rho~_5^{L4,1}"},
                 "V(L4) row");
         require(r,
                 rows.count("0") &&
                     rows["0"] == std::vector<std::string>{
                                      "phi~_5^{0,alpha}", "rho~_5^{0,alpha}"},
                 "C row");
         note(r, "D5 |x V(L5): phi/rho~_5^{L5,1} | D5 |x V(L4): "
                 "phi/rho~_5^{L4,1} | D5 |x C: continua");
       }});
}

void add_section8_checks(std::vector<CheckDef>& defs) {
  auto e6_lift = [](Ctx& c, bool tw, int which) {
    const LieAlgebra& g = c.algebra("E6");
    NamedElements ne = g.named_elements();
    // which = 5 or 4: the L5 or L4 radical of the given variant.
    bool use_xpp = (which == 5) != tw;
    return lift_embedding(c.embedding("E6", tw), fw(5, which),
                          use_xpp ? ne.Xpp : g.gen_y(0),
                          "L" + std::to_string(which), false);
  };

  defs.push_back(
      {"theorem81_e6_lifts_indecomposable",
       "all four E6 lifts with 16-dim radicals satisfy the "
       "indecomposability criterion and produce a single linkage block "
       "(Theorem 8.1)",
       {"section8"},
       [e6_lift](Ctx& c, CheckResult& r) {
         for (bool tw : {false, true})
           for (int which : {5, 4}) {
             auto lift = e6_lift(c, tw, which);
             auto rep = branch_with_linkage(c.algebra("E6"), lift);
             std::string tag = (tw ? "rho" : "phi") + std::string("~_5^{L") +
                               std::to_string(which) + ",1}";
             require(r, rep.all_positive_roots_contained,
                     tag + " criterion");
             require(r, rep.blocks.size() == 1, tag + " single block");
           }
         if (r.passed)
           note(r, "criterion satisfied and linkage connected for all four "
                   "lifts");
       }});

  defs.push_back(
      {"cartan_radical_lifts_decomposable",
       "every Cartan-radical lift (u -> H) fails the indecomposability "
       "criterion",
       {"section8"},
       [](Ctx& c, CheckResult& r) {
         for (std::string t : {"E6", "E7", "E8"})
           for (bool tw : {false, true}) {
             if (t == "E8" && tw) continue;  // rho_7 ~ phi_7
             const LieAlgebra& g = c.algebra(t);
             NamedElements ne = g.named_elements();
             auto lift =
                 lift_embedding(c.embedding(t, tw),
                                Weight(g.rank() - 1, 0), ne.H_special, "0",
                                true);
             require(r, !indecomposability_criterion(g, lift),
                     t + (tw ? "/rho" : "/phi") + " criterion false");
           }
         if (r.passed) note(r, "criterion false for all five Cartan lifts");
       }});

  defs.push_back(
      {"example84_e8_blocks",
       "branching E8 under phi~_7^{L1,1} links {V(L2), 2V(L1), V(0)} into "
       "one block and {V(L6), V(L7)} into another (Example 8.4)",
       {"section8"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E8");
         NamedElements ne = g.named_elements();
         for (auto& [tag, seed] : std::vector<std::pair<std::string, Elem>>{
                  {"X'''", *ne.Xppp}, {"Y'", *ne.Yp}}) {
           auto lift = lift_embedding(c.embedding("E8", false), fw(7, 1),
                                      seed, "L1", false);
           auto rep = branch_with_linkage(g, lift);
           require(r, rep.blocks.size() == 2, tag + ": two blocks");
           // Identify the block holding the 64-dim constituents.
           std::multiset<Weight> big, rest;
           for (const auto& blk : rep.blocks) {
             std::multiset<Weight> ws;
             for (std::size_t i : blk) ws.insert(rep.copies[i].hw);
             if (ws.count(fw(7, 6)))
               big = ws;
             else
               rest = ws;
           }
           require(r, big == std::multiset<Weight>{fw(7, 6), fw(7, 7)},
                   tag + ": {V(L6), V(L7)} block");
           require(r,
                   rest == std::multiset<Weight>{Weight(7, 0), fw(7, 1),
                                                 fw(7, 1), fw(7, 2)},
                   tag + ": {V(L2), 2V(L1), V(0)} block");
         }
         if (r.passed)
           note(r, "{L2, L1, L1, 0} (+) {L6, L7} for both 14-dim radicals");
       }});

  defs.push_back(
      {"example81_e7_constituents",
       "branching E7 under the u -> Y' lift gives constituents {L2:1, "
       "L5:2, 0:3} (natural) and {L2:1, L6:2, 0:3} (twisted), flagged as "
       "parameter-dependent (Example 8.1)",
       {"section8"},
       [](Ctx& c, CheckResult& r) {
         const LieAlgebra& g = c.algebra("E7");
         NamedElements ne = g.named_elements();
         for (bool tw : {false, true}) {
           auto lift = lift_embedding(c.embedding("E7", tw), Weight(6, 0),
                                      *ne.Yp, "0", true);
           auto rep = branch_with_linkage(g, lift);
           Multiset want = {{Weight(6, 0), 3},
                            {fw(6, 2), 1},
                            {fw(6, tw ? 6 : 5), 2}};
           require(r, rep.decomposition.multiset() == want,
                   std::string(tw ? "rho" : "phi") + " multiset: got " +
                       rep.decomposition.str());
           require(r, rep.parameter_dependent,
                   "parameter dependence flagged");
         }
         if (r.passed)
           note(r, "phi: V(L2) + 2V(L5) + 3V(0) | rho: V(L2) + 2V(L6) + "
                   "3V(0); parameter-dependent");
       }});

  defs.push_back(
      {"radical_actions_commute",
       "the radical action operators commute pairwise on every branched "
       "module",
       {"section8"},
       [](Ctx& c, CheckResult& r) {
         // 14-dim (E8) and 16-dim (E6) radicals: check ad(u)ad(v) =
         // ad(v)ad(u) on the full basis, pairwise.
         for (auto& [t, hw, which] :
              std::vector<std::tuple<std::string, Weight, int>>{
                  {"E8", fw(7, 1), 0}, {"E6", fw(5, 5), 1}}) {
           const LieAlgebra& g = c.algebra(t);
           NamedElements ne = g.named_elements();
           Elem seed = which == 0 ? *ne.Xppp : ne.Xpp;
           auto lift =
               lift_embedding(c.embedding(t, false), hw, seed,
                              "L" + std::to_string(hw.size()), false);
           const auto& rad = lift.radical_basis();
           for (std::size_t a = 0; a < rad.size(); ++a)
             for (std::size_t b = a + 1; b < rad.size(); ++b)
               for (std::size_t k = 0; k < g.dim(); ++k) {
                 Elem e = g.basis_elem(k);
                 require(r,
                         g.bracket(rad[a], g.bracket(rad[b], e)) ==
                             g.bracket(rad[b], g.bracket(rad[a], e)),
                         t + ": commutator of radical actions");
                 if (!r.passed) return;
               }
           note(r, t + ": " + std::to_string(rad.size()) +
                       "-dim radical operators commute");
         }
       }});
}

std::vector<CheckDef> registry() {
  std::vector<CheckDef> defs;
  add_serre_checks(defs);
  add_restriction_checks(defs);
  add_adjoint_checks(defs);
  add_lemma6_checks(defs);
  add_prop6_checks(defs);
  add_section7_checks(defs);
  add_table_checks(defs);
  add_section8_checks(defs);
  return defs;
}

}  // namespace

bool VerificationSuite::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& verify_selectors() {
  static const std::vector<std::string> s = {
      "serre",  "eq10-12",  "eq13-21", "lemmas6", "props6",
      "section7", "tables", "section8", "all"};
  return s;
}

std::string suite_to_json(const VerificationSuite& suite) {
  nlohmann::ordered_json out;
  out["selector"] = suite.selector;
  out["passed"] = suite.all_passed();
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : suite.checks)
    out["checks"].push_back({{"name", c.name},
                             {"claim", c.claim},
                             {"passed", c.passed},
                             {"detail", c.detail}});
  return out.dump(2);
}

VerificationSuite run_verification(const std::string& selector,
                                   const VerifyOptions& opts) {
  const auto& sels = verify_selectors();
  if (std::find(sels.begin(), sels.end(), selector) == sels.end())
    throw std::invalid_argument("unknown selector: " + selector);
  VerificationSuite suite;
  suite.selector = selector;
  Ctx ctx;
  ctx.opts = opts;
  for (const auto& def : registry()) {
    if (selector != "all" &&
        std::find(def.groups.begin(), def.groups.end(), selector) ==
            def.groups.end())
      continue;
    CheckResult res;
    res.name = def.name;
    res.claim = def.claim;
    res.passed = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
      def.fn(ctx, res);
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail += (res.detail.empty() ? "" : "; ") +
                    std::string("exception: ") + e.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    suite.checks.push_back(std::move(res));
  }
  return suite;
}

}  // namespace lieext
