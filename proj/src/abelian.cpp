#include "lieext/abelian.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lieext {

namespace {

const char* kGreek[] = {"alpha", "beta", "gamma", "delta", "epsilon"};

Rat rat_pow(const Rat& x, long e) {
  if (e < 0) return rat_pow(Rat(1) / x, -e);
  Rat out(1);
  for (long k = 0; k < e; ++k) out *= x;
  return out;
}

/// v = q * w for a scalar q?
std::optional<Rat> proportional(const Elem& v, const Elem& w) {
  std::size_t k0 = w.size();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) {
      k0 = k;
      break;
    }
  if (k0 == w.size()) return std::nullopt;
  Rat q = v[k0] / w[k0];
  for (std::size_t k = 0; k < w.size(); ++k)
    if (v[k] != q * w[k]) return std::nullopt;
  return q;
}

std::optional<Poly> proportional(const PolyElem& v, const Elem& w) {
  std::size_t k0 = w.size();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) {
      k0 = k;
      break;
    }
  if (k0 == w.size()) return std::nullopt;
  Poly q = (Rat(1) / w[k0]) * v[k0];
  for (std::size_t k = 0; k < w.size(); ++k)
    if (v[k] != q * Poly(w[k])) return std::nullopt;
  return q;
}

/// Candidate vectors used to give catalog directions their paper names.
std::vector<std::pair<std::string, Elem>> named_candidates(const LieAlgebra& g) {
  std::vector<std::pair<std::string, Elem>> out;
  if (g.type().family != 'E') return out;
  NamedElements ne = g.named_elements();
  if (g.rank() == 7) {
    // paper order of the zero-weight triple: alpha Y' + beta X''' + gamma H
    out.push_back({"Y'", *ne.Yp});
    out.push_back({"X'''", *ne.Xppp});
    out.push_back({"H", ne.H_special});
    out.push_back({"X''", ne.Xpp});
    out.push_back({"Y1", g.gen_y(0)});
    out.push_back({"X'", ne.Xp});
  } else {
    if (ne.Xppp) out.push_back({"X'''", *ne.Xppp});
    if (ne.Yp) out.push_back({"Y'", *ne.Yp});
    out.push_back({"Y1", g.gen_y(0)});
    out.push_back({"X''", ne.Xpp});
    out.push_back({"H", ne.H_special});
    out.push_back({"X'", ne.Xp});
  }
  return out;
}

std::vector<std::pair<std::string, Elem>> label_directions(
    const LieAlgebra& g, const Weight& w, const std::vector<Vec>& basis) {
  RowSpan space(g.dim());
  for (const auto& v : basis) space.insert(v);
  RowSpan chosen(g.dim());
  std::vector<std::pair<std::string, Elem>> out;
  for (const auto& [name, vec] : named_candidates(g))
    if (space.contains(vec) && chosen.insert(vec)) out.push_back({name, vec});
  for (std::size_t k = 0; k < basis.size() && chosen.rank() < basis.size(); ++k)
    if (chosen.insert(basis[k]))
      out.push_back({"hw(" + weight_str(w) + ")#" + std::to_string(k + 1),
                     basis[k]});
  return out;
}

/// Lowering-closure of seeds[0], applying the same generator sequence to all
/// seeds in parallel: tuple t spans the generic-mixture subspace.
std::vector<std::vector<Elem>> closure_with_transport(
    const LieAlgebra& g, const EmbeddingMap& emb,
    const std::vector<Elem>& seeds) {
  RowSpan span(g.dim());
  span.insert(seeds[0]);
  std::vector<std::vector<Elem>> work{seeds};
  int n = emb.source().rank();
  for (std::size_t w = 0; w < work.size(); ++w)
    for (int i = 0; i < n; ++i)
      for (int kind = 0; kind < 3; ++kind) {
        const Elem& gen = kind == 0   ? emb.image_x(i)
                          : kind == 1 ? emb.image_y(i)
                                      : emb.image_h(i);
        Vec lead = g.bracket(gen, work[w][0]);
        if (!span.insert(lead)) continue;
        std::vector<Elem> tup{std::move(lead)};
        for (std::size_t s = 1; s < seeds.size(); ++s)
          tup.push_back(g.bracket(gen, work[w][s]));
        work.push_back(std::move(tup));
      }
  return work;
}

std::string describe_bracket(const LieAlgebra& g, const Elem& b) {
  for (const auto& [name, vec] : named_candidates(g))
    if (auto q = proportional(b, vec))
      return "= " + q->get_str() + "*" + name;
  std::ostringstream os;
  os << "= ";
  bool first = true;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] != 0) {
      if (!first) os << " + ";
      first = false;
      os << b[k].get_str() << "*" << g.label(k);
    }
  return os.str();
}

}  // namespace

AbelianWitness is_abelian_subspace(const LieAlgebra& g,
                                   const std::vector<Vec>& basis) {
  AbelianWitness w;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Elem b = g.bracket(basis[i], basis[j]);
      if (!is_zero(b)) {
        w.abelian = false;
        w.i = i;
        w.j = j;
        w.bracket = std::move(b);
        return w;
      }
    }
  return w;
}

long table1_bound(SimpleType t) {
  if (t.family == 'E') {
    if (t.rank == 6) return 16;
    if (t.rank == 7) return 27;
    if (t.rank == 8) return 36;
  }
  throw std::invalid_argument("no abelian-dimension bound recorded for " +
                              t.name());
}

std::string AbelianExtensionCatalog::str() const {
  std::ostringstream os;
  os << ambient.name() << " under " << (twisted ? "twisted" : "natural")
     << " embedding:\n";
  for (const auto& e : entries) {
    os << "  [" << e.label << "]  weight " << weight_str(e.radical_hw)
       << "  dim " << e.dim << "  "
       << (e.abelian ? "abelian" : "not abelian");
    if (!e.note.empty()) os << "  (" << e.note << ")";
    os << "\n";
  }
  return os.str();
}

AbelianExtensionCatalog scan_invariant_abelian(const LieAlgebra& g,
                                               const EmbeddingMap& emb) {
  AbelianExtensionCatalog cat;
  cat.ambient = g.type();
  cat.twisted = emb.is_twisted();
  long bound = table1_bound(g.type());

  WeightModule adj = WeightModule::adjoint_module(g);
  IsotypicDecomposition dec = decompose_under(adj, emb);

  RowSpan image(g.dim());
  for (std::size_t k = 0; k < emb.source().dim(); ++k)
    image.insert(emb.image_basis(k));

  // directions: every labeled highest-weight direction outside the image
  struct Dir {
    Weight w;
    std::string label;
    Elem hw;
    std::vector<Vec> space;
  };
  std::vector<Dir> dirs;
  for (const auto& [w, mult] : dec.constituents) {
    auto labeled = label_directions(g, w, dec.hw_spaces.at(w));
    for (auto& [name, vec] : labeled) {
      if (image.contains(vec)) continue;  // the subalgebra itself, [X']
      dirs.push_back({w, name, vec, generated_submodule(g, vec, emb)});
    }
  }

  auto test_entry = [&](CatalogEntry e, const std::vector<Vec>& basis) {
    e.dim = basis.size();
    if (static_cast<long>(basis.size()) > bound) {
      e.abelian = false;
      std::ostringstream os;
      os << "dim " << basis.size() << " exceeds the maximal abelian dimension "
         << bound;
      e.note = os.str();
    } else {
      AbelianWitness w = is_abelian_subspace(g, basis);
      e.abelian = w.abelian;
      if (!w.abelian)
        e.note = "witness [b" + std::to_string(w.i + 1) + ", b" +
                 std::to_string(w.j + 1) + "] " + describe_bracket(g, w.bracket);
    }
    cat.entries.push_back(std::move(e));
  };

  for (const auto& d : dirs) {
    CatalogEntry e;
    e.radical_hw = d.w;
    e.label = d.label;
    test_entry(std::move(e), d.space);
  }

  // parameterized pencils over multiplicity spaces
  for (const auto& [w, mult] : dec.constituents) {
    if (mult < 2) continue;
    std::vector<const Dir*> group;
    for (const auto& d : dirs)
      if (d.w == w) group.push_back(&d);
    if (group.size() < 2) continue;
    CatalogEntry e;
    e.radical_hw = w;
    e.is_pencil = true;
    {
      std::ostringstream os;
      for (std::size_t k = 0; k < group.size(); ++k)
        os << (k ? " + " : "") << kGreek[k] << "*" << group[k]->label;
      e.label = os.str();
    }
    std::vector<Elem> seeds;
    for (auto* d : group) seeds.push_back(d->hw);
    auto tuples = closure_with_transport(g, emb, seeds);
    e.dim = tuples.size();
    if (static_cast<long>(tuples.size()) > bound) {
      e.abelian = false;
      std::ostringstream os;
      os << "generic dim " << tuples.size()
         << " exceeds the maximal abelian dimension " << bound;
      e.note = os.str();
      cat.entries.push_back(std::move(e));
      continue;
    }
    // symbolic elements p_t = sum_k param_k * tuple_t[k]
    std::vector<PolyElem> sym;
    for (const auto& tup : tuples) {
      PolyElem p(g.dim());
      for (std::size_t k = 0; k < tup.size(); ++k)
        for (std::size_t c = 0; c < g.dim(); ++c)
          p[c] += Poly::var(k) * Poly(tup[k][c]);
      sym.push_back(std::move(p));
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < group.size(); ++k) names.push_back(kGreek[k]);
    e.abelian = true;
    for (std::size_t i = 0; i < sym.size() && e.abelian; ++i)
      for (std::size_t j = i; j < sym.size() && e.abelian; ++j) {
        PolyElem b = g.bracket(sym[i], sym[j]);
        bool zero = true;
        for (const auto& p : b)
          if (!p.is_zero()) zero = false;
        if (zero) continue;
        e.abelian = false;
        std::ostringstream os;
        os << "witness pair (" << i + 1 << "," << j + 1 << "), bracket ";
        bool described = false;
        for (const auto& [name, vec] : named_candidates(g))
          if (auto q = proportional(b, vec)) {
            os << "= (" << q->str(names) << ")*" << name;
            described = true;
            break;
          }
        if (!described) os << "!= 0";
        e.note = os.str();
      }
    cat.entries.push_back(std::move(e));
  }

  // pairwise sums of distinct directions
  for (std::size_t a = 0; a < dirs.size(); ++a)
    for (std::size_t b = a + 1; b < dirs.size(); ++b) {
      CatalogEntry e;
      e.radical_hw = dirs[a].w;  // weight of the first summand
      e.is_sum = true;
      e.label = dirs[a].label + " (+) " + dirs[b].label;
      test_entry(std::move(e), sum_spans(dirs[a].space, dirs[b].space));
    }
  return cat;
}

std::vector<std::string> AlgebraAut::verify() const {
  std::vector<std::string> fails;
  int n = alg->rank();
  std::vector<std::size_t> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(alg->x_index(i));
    gens.push_back(alg->y_index(i));
    gens.push_back(alg->h_index(i));
  }
  for (std::size_t a : gens)
    for (std::size_t b : gens) {
      Elem lhs = alg->bracket(apply(alg->basis_elem(a)),
                              apply(alg->basis_elem(b)));
      Elem rhs = apply(alg->bracket(alg->basis_elem(a), alg->basis_elem(b)));
      if (lhs != rhs)
        fails.push_back("not bracket-compatible on (" + alg->label(a) + ", " +
                        alg->label(b) + ")");
    }
  return fails;
}

AlgebraAut torus_automorphism(const LieAlgebra& g,
                              const std::vector<Rat>& scalings) {
  if (scalings.size() != static_cast<std::size_t>(g.rank()))
    throw std::invalid_argument("one scalar per simple root required");
  for (const auto& s : scalings)
    if (s == 0) throw std::invalid_argument("torus scalars must be nonzero");
  AlgebraAut aut;
  aut.alg = &g;
  aut.m = Mat::identity(g.dim());
  const auto& roots = g.roots().positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Rat f(1);
    for (int i = 0; i < g.rank(); ++i) f *= rat_pow(scalings[i], roots[r][i]);
    aut.m(g.x_index(r), g.x_index(r)) = f;
    aut.m(g.y_index(r), g.y_index(r)) = Rat(1) / f;
  }
  return aut;
}

AlgebraAut torus_from_cartan(const LieAlgebra& g, const Elem& h, const Rat& u) {
  if (u == 0) throw std::invalid_argument("torus scalar must be nonzero");
  AlgebraAut aut;
  aut.alg = &g;
  aut.m = Mat::identity(g.dim());
  const auto& roots = g.roots().positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    // gamma(h) = sum_i h_i * gamma(H_i)
    Rat ev(0);
    for (int i = 0; i < g.rank(); ++i)
      ev += h[g.h_index(i)] * Rat(g.roots().pair_with_coroot(roots[r], i));
    if (ev.get_den() != 1)
      throw std::invalid_argument("Cartan element has non-integral pairing");
    long e = ev.get_num().get_si();
    aut.m(g.x_index(r), g.x_index(r)) = rat_pow(u, e);
    aut.m(g.y_index(r), g.y_index(r)) = rat_pow(u, -e);
  }
  return aut;
}

AlgebraAut exp_ad(const LieAlgebra& g, const Elem& x) {
  Mat n = g.ad(x);
  Mat out = Mat::identity(g.dim());
  Mat term = Mat::identity(g.dim());
  for (std::size_t k = 1; k <= g.dim() + 1; ++k) {
    term = term * n;
    term.scale(Rat(1, static_cast<long>(k)));
    if (term.is_zero()) return {&g, std::move(out)};
    out += term;
  }
  throw std::invalid_argument("exp_ad requires an ad-nilpotent element");
}

AlgebraAut sl2_automorphism_e7(const LieAlgebra& e7, const Rat& a,
                               const Rat& b, const Rat& c, const Rat& d) {
  if (!(e7.type() == SimpleType{'E', 7}))
    throw std::invalid_argument("sl2_automorphism_e7 needs E7");
  if (a * c - b * d != 1)
    throw std::invalid_argument("parameters must satisfy ac - bd = 1");
  NamedElements ne = e7.named_elements();
  const Elem& e = *ne.Xppp;
  const Elem& f = *ne.Yp;
  // The doublet basis here is (X_1, [Y', X_1]) = (X_1, -Y''), so the paper's
  // [[a,d],[b,c]] becomes [[a,-d],[-b,c]] in internal coordinates. Lower
  // unipotent = exp(ad tY'), upper = exp(ad sX'''), torus from H.
  AlgebraAut aut;
  aut.alg = &e7;
  if (a != 0) {
    Mat lo = exp_ad(e7, scaled(f, -b / a)).m;
    Mat to = torus_from_cartan(e7, ne.H_special, a).m;
    Mat up = exp_ad(e7, scaled(e, -d / a)).m;
    aut.m = lo * to * up;
  } else {
    // [[0,D],[B,C]] with BD = -1 factors as f(C/D) e(D) f(-1/D) e(D)
    Mat m1 = exp_ad(e7, scaled(f, -c / d)).m;
    Mat m2 = exp_ad(e7, scaled(e, -d)).m;
    Mat m3 = exp_ad(e7, scaled(f, Rat(1) / d)).m;
    aut.m = m1 * m2 * m3 * m2;
  }
  return aut;
}

namespace {

/// rho(H_1) forced by rho(H) = r H and rho(H_i) = H_i for i >= 2; the ad
/// eigenvalue on Y_1 then pins r (Lemmas 7.3 / 7.8 shape). Returns that
/// eigenvalue as a polynomial in r (variable 0).
Poly eigenvalue_forcing_poly(const LieAlgebra& g) {
  NamedElements ne = g.named_elements();
  int n = g.rank();
  Poly r = Poly::var(0);
  Rat c1 = ne.H_special[g.h_index(0)];
  PolyElem h1(g.dim());
  h1[g.h_index(0)] = r;
  for (int i = 1; i < n; ++i) {
    Rat ci = ne.H_special[g.h_index(i)];
    h1[g.h_index(i)] = (ci / c1) * (r - Poly(1));
  }
  PolyElem y1(g.dim());
  y1[g.y_index(0)] = Poly(1);
  PolyElem b = g.bracket(h1, y1);
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (k != g.y_index(0) && !b[k].is_zero())
      throw std::logic_error("forced [H1,Y1] not proportional to Y1");
  return b[g.y_index(0)];
}

std::string poly_str_r(const Poly& p) { return p.str({"r"}); }

/// 20+ rational SL2 samples with ac - bd = 1, including the identity and
/// an a = 0 representative.
std::vector<std::array<Rat, 4>> sl2_samples() {
  std::vector<std::array<Rat, 4>> out = {{Rat(1), Rat(0), Rat(1), Rat(0)},
                                         {Rat(0), Rat(1), Rat(2), Rat(-1)},
                                         {Rat(0), Rat(-2), Rat(-3), Rat(1, 2)}};
  std::vector<Rat> as = {Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3)};
  std::vector<std::pair<Rat, Rat>> bds = {{Rat(0), Rat(0)},
                                          {Rat(1), Rat(1)},
                                          {Rat(1), Rat(-2)},
                                          {Rat(-1), Rat(3)},
                                          {Rat(2, 3), Rat(3)}};
  for (const Rat& a : as)
    for (const auto& [b, d] : bds) out.push_back({a, b, (1 + b * d) / a, d});
  return out;
}

}  // namespace

std::vector<LiftClass> classify_lifts(const LieAlgebra& g) {
  SimpleType t = g.type();
  if (t.family != 'E')
    throw std::invalid_argument("classification is defined for E6/E7/E8");
  NamedElements ne = g.named_elements();
  std::vector<LiftClass> out;

  auto eigen_cert = [&](LiftClass& lc) {
    Poly ev = eigenvalue_forcing_poly(g);
    // -2 = ev(r) must force r = 1: ev is linear, check ev(1) = -2 and that
    // the slope is nonzero.
    bool ok = ev.eval({Rat(1)}) == -2 && ev - Poly(ev.eval({Rat(0)})) != 0;
    lc.verified = lc.verified && ok;
    lc.certificates.push_back(
        "distinct parameters: [rho(H_1), Y_1] = (" + poly_str_r(ev) +
        ")*Y_1 under rho(H) = r*H, so -2 = " + poly_str_r(ev) +
        " forces r = 1" + (ok ? "" : " [FAILED]"));
  };

  if (t.rank == 8) {
    Elem H = ne.H_special;
    Elem X3 = *ne.Xppp, Y1p = *ne.Yp;
    // eigenvalue contradiction between the two 14-dim radicals
    Elem hx = g.bracket(H, X3), hy = g.bracket(H, Y1p);
    bool ok1 = hx == scaled(X3, Rat(2)) && hy == scaled(Y1p, Rat(-2));
    // torus realization of the alpha-scaling
    auto tor = torus_automorphism(
        g, {Rat(3), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    bool ok2 = tor.verify().empty() && tor.apply(X3) == scaled(X3, Rat(9)) &&
               tor.apply(Y1p) == scaled(Y1p, Rat(1, 9));

    LiftClass a{"phi~_7^{L1,1}", "L1", "u -> X'''",
                "one class: phi~_7^{L1,alpha} ~ phi~_7^{L1,1} for all alpha"};
    a.verified = ok1 && ok2;
    a.certificates.push_back(
        std::string("[H,X'''] = 2X''' but [H,Y'] = -2Y', so the two 14-dim "
                    "lifts are inequivalent") +
        (ok1 ? "" : " [FAILED]"));
    a.certificates.push_back(
        std::string("torus automorphism with beta = 3 at node 1 sends X''' "
                    "to 9X''' (beta^2 = alpha) and Y' to Y'/9") +
        (ok2 ? "" : " [FAILED]"));
    out.push_back(a);

    LiftClass b{"phi~_7^{L1',1}", "L1'", "u -> Y'",
                "one class: phi~_7^{L1',alpha} ~ phi~_7^{L1',1} for all alpha"};
    b.verified = ok1 && ok2;
    b.certificates = a.certificates;
    out.push_back(b);

    LiftClass c{"phi~_7^{0,alpha}", "0", "u -> alpha*H",
                "continuum: alpha ~ beta iff alpha = beta"};
    eigen_cert(c);
    out.push_back(c);
    return out;
  }

  if (t.rank == 7) {
    // phi_6 !~ rho_6 via the Eq. 11 restriction multisets
    WeightModule m56 = WeightModule::construct_irrep(
        g, Weight{0, 0, 0, 0, 0, 0, 1});
    EmbeddingMap phi = EmbeddingMap::natural(g);
    EmbeddingMap rho = EmbeddingMap::twisted(g);
    bool distinct = !linear_equivalence_witness(m56, phi, rho);

    // Lemma 7.5 formulas + Theorem 7.6 substitution on rational samples
    Elem H = ne.H_special, X3 = *ne.Xppp, Yp = *ne.Yp;
    Elem X1 = g.gen_x(0), Y1 = g.gen_y(0), H1 = g.gen_h(0);
    Poly al = Poly::var(0), be = Poly::var(1), ga = Poly::var(2);
    bool lemma75 = true, invariant = true, composed = true;
    auto samples = sl2_samples();
    for (const auto& [a, b, c, d] : samples) {
      AlgebraAut A = sl2_automorphism_e7(g, a, b, c, d);
      if (!A.verify().empty()) lemma75 = false;
      Elem eY = scaled(Yp, c * c);
      axpy(eY, -c * d, H);
      axpy(eY, -d * d, X3);
      Elem eX = scaled(X3, a * a);
      axpy(eX, a * b, H);
      axpy(eX, -b * b, Yp);
      Elem eH = scaled(H, a * c + b * d);
      axpy(eH, 2 * a * d, X3);
      axpy(eH, -2 * b * c, Yp);
      Elem e1 = scaled(X1, a);
      axpy(e1, b, *ne.Ypp);
      Elem e2 = scaled(Y1, c);
      axpy(e2, d, ne.Xpp);
      Elem e3 = H1;
      axpy(e3, b * d, H);
      axpy(e3, a * d, X3);
      axpy(e3, -b * c, Yp);
      if (A.apply(Yp) != eY || A.apply(X3) != eX || A.apply(H) != eH ||
          A.apply(X1) != e1 || A.apply(Y1) != e2 || A.apply(H1) != e3)
        lemma75 = false;
      // consistency: automorphism action on alpha Y' + beta X''' + gamma H
      // equals the Theorem 7.6 substitution, and gamma^2 + alpha*beta is
      // preserved
      auto s = theorem76_substitution({al, be, ga}, a, b, c, d);
      PolyElem mix(g.dim());
      for (std::size_t k = 0; k < g.dim(); ++k)
        mix[k] = al * Poly(Yp[k]) + be * Poly(X3[k]) + ga * Poly(H[k]);
      PolyElem img(g.dim());
      for (std::size_t r = 0; r < g.dim(); ++r)
        for (std::size_t kk = 0; kk < g.dim(); ++kk)
          if (A.m(r, kk) != 0) img[r] += A.m(r, kk) * mix[kk];
      PolyElem expect(g.dim());
      for (std::size_t k = 0; k < g.dim(); ++k)
        expect[k] = s[0] * Poly(Yp[k]) + s[1] * Poly(X3[k]) + s[2] * Poly(H[k]);
      if (img != expect) lemma75 = false;
      if (s[2] * s[2] + s[0] * s[1] != ga * ga + al * be) invariant = false;
    }
    // composition: subst(M1) then subst(M2) = subst(M2 * M1) on (a,d;b,c)
    {
      std::array<Rat, 4> m1 = {Rat(2), Rat(1), Rat(1), Rat(1)};
      std::array<Rat, 4> m2 = {Rat(1), Rat(-1), Rat(3), Rat(2)};
      // 2x2 product [[a2,d2],[b2,c2]] * [[a1,d1],[b1,c1]]
      Rat a3 = m2[0] * m1[0] + m2[3] * m1[1];
      Rat d3 = m2[0] * m1[3] + m2[3] * m1[2];
      Rat b3 = m2[1] * m1[0] + m2[2] * m1[1];
      Rat c3 = m2[1] * m1[3] + m2[2] * m1[2];
      auto s1 = theorem76_substitution({al, be, ga}, m1[0], m1[1], m1[2], m1[3]);
      auto s2 = theorem76_substitution(s1, m2[0], m2[1], m2[2], m2[3]);
      auto s3 = theorem76_substitution({al, be, ga}, a3, b3, c3, d3);
      composed = s2[0] == s3[0] && s2[1] == s3[1] && s2[2] == s3[2];
    }
    // a concrete rational orbit instance: (1,0,0) -> (1,-1,-1)
    auto orb = theorem76_substitution({Poly(1), Poly(0), Poly(0)}, Rat(0),
                                      Rat(1), Rat(-1), Rat(-1));
    bool orbit_ok = orb[0] == 1 && orb[1] == -1 && orb[2] == -1;

    for (bool tw : {false, true}) {
      LiftClass lc{tw ? "rho~_6^{0,(a,b,g)}" : "phi~_6^{0,(a,b,g)}", "0",
                   "u -> alpha*Y' + beta*X''' + gamma*H",
                   "orbits of (alpha,beta,gamma) under (alpha c^2 - beta b^2 "
                   "- 2 gamma bc, -alpha d^2 + beta a^2 + 2 gamma ad, -alpha "
                   "cd + beta ab + gamma(ac+bd)), ac - bd = 1"};
      lc.verified = distinct && lemma75 && invariant && composed && orbit_ok;
      lc.certificates.push_back(
          std::string("phi_6 !~ rho_6: V_{E7}(L7) restriction multisets "
                      "differ") +
          (distinct ? "" : " [FAILED]"));
      std::ostringstream os;
      os << "Lemma 7.5 / Eq. 33 images and the substitution formulas hold "
            "for "
         << samples.size() << " rational (a,b,c,d) with ac-bd=1"
         << (lemma75 ? "" : " [FAILED]");
      lc.certificates.push_back(os.str());
      lc.certificates.push_back(
          std::string("gamma^2 + alpha*beta is preserved by every sampled "
                      "substitution") +
          (invariant ? "" : " [FAILED]"));
      lc.certificates.push_back(
          std::string("substitutions compose as 2x2 matrix products") +
          (composed ? "" : " [FAILED]"));
      lc.certificates.push_back(
          std::string("rational orbit instance: (1,0,0) ~ (1,-1,-1) via "
                      "(a,b,c,d) = (0,1,-1,-1)") +
          (orbit_ok ? "" : " [FAILED]"));
      out.push_back(lc);
    }
    return out;
  }

  // E6
  WeightModule m27 =
      WeightModule::construct_irrep(g, Weight{0, 0, 0, 0, 0, 1});
  EmbeddingMap phi = EmbeddingMap::natural(g);
  EmbeddingMap rho = EmbeddingMap::twisted(g);
  bool distinct = !linear_equivalence_witness(m27, phi, rho);
  auto tor = torus_automorphism(
      g, {Rat(5), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  bool torus_ok = tor.verify().empty() &&
                  tor.apply(ne.Xpp) == scaled(ne.Xpp, Rat(5)) &&
                  tor.apply(g.gen_y(0)) == scaled(g.gen_y(0), Rat(1, 5));
  auto mk = [&](std::string fam, std::string rad, std::string img,
                std::string orbit) {
    LiftClass lc{std::move(fam), std::move(rad), std::move(img),
                 std::move(orbit)};
    lc.verified = distinct && torus_ok;
    lc.certificates.push_back(
        std::string("phi_5 !~ rho_5: V_{E6}(L6) restriction multisets "
                    "differ") +
        (distinct ? "" : " [FAILED]"));
    lc.certificates.push_back(
        std::string("torus automorphism with alpha = 5 at node 1 sends X'' "
                    "to 5X'' and Y_1 to Y_1/5") +
        (torus_ok ? "" : " [FAILED]"));
    return lc;
  };
  out.push_back(mk("phi~_5^{L5,1}", "L5", "u -> X''",
                   "one class per alpha-scaling"));
  out.push_back(mk("rho~_5^{L5,1}", "L5", "u -> Y_1",
                   "one class per alpha-scaling"));
  out.push_back(mk("phi~_5^{L4,1}", "L4", "u -> Y_1",
                   "one class per alpha-scaling"));
  out.push_back(mk("rho~_5^{L4,1}", "L4", "u -> X''",
                   "one class per alpha-scaling"));
  LiftClass cont{"phi~_5^{0,alpha}", "0", "u -> alpha*H",
                 "continuum: alpha ~ beta iff alpha = beta"};
  eigen_cert(cont);
  out.push_back(cont);
  LiftClass cont2{"rho~_5^{0,alpha}", "0", "u -> alpha*H",
                  "continuum: alpha ~ beta iff alpha = beta"};
  eigen_cert(cont2);
  cont2.verified = cont2.verified && distinct;
  out.push_back(cont2);
  return out;
}

std::array<Poly, 3> theorem76_substitution(const std::array<Poly, 3>& abg,
                                           const Rat& a, const Rat& b,
                                           const Rat& c, const Rat& d) {
  const Poly& al = abg[0];
  const Poly& be = abg[1];
  const Poly& ga = abg[2];
  return {c * c * al - b * b * be - 2 * b * c * ga,
          -(d * d) * al + a * a * be + 2 * a * d * ga,
          -(c * d) * al + a * b * be + (a * c + b * d) * ga};
}

}  // namespace lieext
