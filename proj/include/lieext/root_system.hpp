#ifndef LIEEXT_ROOT_SYSTEM_HPP
#define LIEEXT_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "lieext/rational.hpp"

namespace lieext {

/// Integer vector in simple-root coordinates.
using RootVec = std::vector<int>;
/// Integer vector in fundamental-weight coordinates.
using Weight = std::vector<long>;

/// D_n (n >= 4) or E_6/E_7/E_8. Node numbering follows the usual Dynkin
/// diagram conventions: D_n is the chain 1-2-...-(n-2) with n-1 and n both
/// attached to n-2; E_k is the chain 1-3-4-...-k with 2 attached to 4.
struct SimpleType {
  char family;  // 'D' or 'E'
  int rank;

  static SimpleType parse(const std::string& s);  // e.g. "D5", "E8"
  std::string name() const { return family + std::to_string(rank); }
  long dimension() const;  // dim of the algebra
  bool operator==(const SimpleType& o) const {
    return family == o.family && rank == o.rank;
  }
};

class RootSystem {
 public:
  explicit RootSystem(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return type_.rank; }
  /// Cartan matrix M, with alpha_i(H_j) = M[j][i] (symmetric here).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Positive roots in simple-root coordinates, height-then-lex order;
  /// the first `rank` entries are the simple roots.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  bool is_positive_root(const RootVec& r) const {
    return index_.count(r) != 0;
  }
  /// Index of a positive root; throws if absent.
  std::size_t index_of(const RootVec& r) const;

  int height(std::size_t idx) const;
  /// The highest root.
  const RootVec& highest_root() const { return positive_.back(); }

  /// Fundamental-weight coordinates of a root-lattice vector: M * c.
  Weight to_weight(const RootVec& c) const;
  /// Pairing beta(H_i) for a root-lattice vector beta, 0-based i.
  long pair_with_coroot(const RootVec& beta, int i) const;

 private:
  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> positive_;
  std::map<RootVec, std::size_t> index_;
};

/// Dynkin-diagram edges of a type, 0-based node pairs.
std::vector<std::pair<int, int>> dynkin_edges(SimpleType t);

/// Weyl dimension formula. hw in fundamental-weight coordinates, must be
/// dominant (all coords >= 0).
Int weyl_dim(const RootSystem& rs, const Weight& hw);

/// lambda - sum of alpha_{i_j}, indices 1-based, result in fundamental
/// coordinates.
Weight weight_of_lowering_word(const RootSystem& rs, const Weight& hw,
                               const std::vector<int>& word);

/// Simple reflection s_i(mu) in fundamental coordinates, 0-based i.
Weight simple_reflection(const RootSystem& rs, const Weight& mu, int i);

std::string weight_str(const Weight& w);

}  // namespace lieext

#endif
