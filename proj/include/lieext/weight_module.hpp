#ifndef LIEEXT_WEIGHT_MODULE_HPP
#define LIEEXT_WEIGHT_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lieext/lie_algebra.hpp"
#include "lieext/matrix.hpp"
#include "lieext/root_system.hpp"

namespace lieext {

/// Finite-dimensional module in a weight basis: per-generator action
/// matrices over exact rationals, with H_i diagonal.
class WeightModule {
 public:
  const LieAlgebra& algebra() const { return *alg_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<int>>& basis_words() const { return words_; }
  const std::vector<Weight>& weights() const { return weights_; }

  const Mat& action_x(int i) const { return act_x_[i]; }  // 0-based simple i
  const Mat& action_y(int i) const { return act_y_[i]; }
  const Mat& action_h(int i) const { return act_h_[i]; }

  /// Matrix of an arbitrary algebra element; linear in the element and
  /// compatible with brackets.
  Mat action_of(const Elem& a) const;

  /// Weight multiplicity table: weight -> dimension of its weight space.
  std::map<Weight, std::size_t> multiplicities() const;

  bool is_adjoint() const { return adjoint_; }

  /// Builds the irreducible module of highest weight hw by lowering-operator
  /// closure from the cyclic vector, with exact per-weight-space dependence
  /// detection. Throws if weyl_dim(hw) exceeds the cap.
  static WeightModule construct_irrep(const LieAlgebra& g, const Weight& hw,
                                      long cap = 1000);

  /// The algebra acting on its own coefficient space by ad.
  static WeightModule adjoint_module(const LieAlgebra& g);

 private:
  const LieAlgebra* alg_ = nullptr;
  std::size_t dim_ = 0;
  bool adjoint_ = false;
  std::vector<std::vector<int>> words_;  // lowering word per basis vector
  std::vector<Weight> weights_;
  std::vector<Mat> act_x_, act_y_, act_h_;

  // lazily extended actions of non-simple root vectors
  mutable std::vector<std::optional<Mat>> act_x_root_, act_y_root_;
  const Mat& root_action(bool positive, std::size_t root_idx) const;
};

}  // namespace lieext

#endif
