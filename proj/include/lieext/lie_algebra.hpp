#ifndef LIEEXT_LIE_ALGEBRA_HPP
#define LIEEXT_LIE_ALGEBRA_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lieext/matrix.hpp"
#include "lieext/polynomial.hpp"
#include "lieext/rational.hpp"
#include "lieext/root_system.hpp"

namespace lieext {

/// Element of a Lie algebra: coefficient vector over the Chevalley basis.
using Elem = Vec;
/// Element with polynomial coefficients (parameterized families).
using PolyElem = std::vector<Poly>;

/// The named elements of the E_{n+1} computations: X', X'', X''' and Y'
/// built from nested commutators, plus the distinguished Cartan element H.
/// Y'' only exists for E7.
struct NamedElements {
  Elem Xp, Xpp, H_special;
  std::optional<Elem> Xppp, Yp, Ypp;
};

/// Semisimple Lie algebra in a Chevalley basis with integer structure
/// constants. Basis order: X_alpha for each positive root (height-lex),
/// then Y_alpha, then H_1..H_rank. Signs come from a bimultiplicative
/// 2-cocycle on the root lattice (extraspecial-pair-equivalent convention
/// for the simply-laced case); every constant is asserted integral.
class LieAlgebra {
 public:
  explicit LieAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  SimpleType type() const { return rs_.type(); }
  std::size_t dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  std::size_t num_positive() const { return npos_; }

  // Basis index helpers (0-based i for generators).
  std::size_t x_index(std::size_t root_idx) const { return root_idx; }
  std::size_t y_index(std::size_t root_idx) const { return npos_ + root_idx; }
  std::size_t h_index(int i) const { return 2 * npos_ + i; }
  bool is_x(std::size_t k) const { return k < npos_; }
  bool is_y(std::size_t k) const { return k >= npos_ && k < 2 * npos_; }
  bool is_h(std::size_t k) const { return k >= 2 * npos_; }
  std::string label(std::size_t k) const;

  Elem basis_elem(std::size_t k) const {
    Elem e = zero_vec(dim_);
    e[k] = 1;
    return e;
  }
  Elem gen_x(int i) const { return basis_elem(x_index(i)); }  // simple i, 0-based
  Elem gen_y(int i) const { return basis_elem(y_index(i)); }
  Elem gen_h(int i) const { return basis_elem(h_index(i)); }

  /// Sparse bracket of two basis elements.
  const std::vector<std::pair<std::size_t, long>>& bracket_basis(
      std::size_t k, std::size_t l, bool& negate) const;

  Elem bracket(const Elem& a, const Elem& b) const;
  PolyElem bracket(const PolyElem& a, const PolyElem& b) const;

  /// Left-nested commutator of simple generators, 1-based indices.
  Elem nested_commutator(char kind, const std::vector<int>& indices) const;

  /// Named elements for E6/E7/E8; throws for D types.
  NamedElements named_elements() const;

  /// Checks every Chevalley-Serre relation family on all generator pairs.
  /// Returns descriptions of failures (empty for a correct build).
  std::vector<std::string> verify_serre() const;

  /// ad matrix of a basis element.
  Mat ad_basis(std::size_t k) const;
  Mat ad(const Elem& a) const;

  /// Decomposition gamma = parent + alpha_simple with constant N such that
  /// X_gamma = [X_parent, X_simple] / N; defined for non-simple positive
  /// roots. Used to extend generator actions to the whole basis.
  struct RootDecomp {
    std::size_t parent;
    int simple;  // 0-based
    long n_x;    // [X_parent, X_simple] = n_x X_gamma
    long n_y;    // [Y_parent, Y_simple] = n_y Y_gamma
  };
  const RootDecomp& root_decomp(std::size_t root_idx) const;

  /// Canonical sorted text serialization of the structure table, one line
  /// per nonzero constant.
  void serialize(std::ostream& os) const;

  /// Test fixture: flip the sign of the structure constants for one ordered
  /// basis pair. Intentionally breaks the algebra; used by mutation tests.
  void flip_constant_sign(std::size_t k, std::size_t l);

 private:
  RootSystem rs_;
  std::size_t npos_, dim_;
  std::vector<std::vector<int>> eps_;  // cocycle on simple roots
  // Table stored for k < l only; bracket_basis handles orientation.
  std::vector<std::vector<std::pair<std::size_t, long>>> table_;
  std::vector<RootDecomp> decomp_;

  int eps(const RootVec& a, const RootVec& b) const;
  std::vector<std::pair<std::size_t, long>> compute_bracket(std::size_t k,
                                                            std::size_t l) const;
};

}  // namespace lieext

#endif
