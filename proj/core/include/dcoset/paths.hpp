#ifndef DCOSET_PATHS_HPP
#define DCOSET_PATHS_HPP

#include <vector>

#include "dcoset/coset.hpp"
#include "dcoset/expression.hpp"

namespace dcoset {

// A path subordinate to an expression [I_0,...,I_d]: a sequence of
// (I_0,I_k)-cosets starting at the identity coset, following the
// unique containing coset at up-steps and choosing one contained coset
// at down-steps.
class SubordinatePath {
 public:
  SubordinatePath(SinglestepExpr expr, std::vector<DoubleCoset> cosets);

  const SinglestepExpr& expr() const { return expr_; }
  const std::vector<DoubleCoset>& cosets() const { return cosets_; }
  const DoubleCoset& terminus() const { return cosets_.back(); }

  friend bool operator==(const SubordinatePath& a, const SubordinatePath& b) {
    return a.expr_ == b.expr_ && a.cosets_ == b.cosets_;
  }

 private:
  SinglestepExpr expr_;
  std::vector<DoubleCoset> cosets_;
};

// All paths subordinate to e, depth first, with down-step branches
// taken in ascending order of the sub-coset minima.
std::vector<SubordinatePath> enumerate_paths(const SinglestepExpr& e);

// The unique path keeping the maximal element fixed at down-steps; its
// terminus is the expressed coset of e.
SubordinatePath forward_path(const SinglestepExpr& e);

// Distinct termini over all subordinate paths, in family order.
std::vector<DoubleCoset> term_set(const SinglestepExpr& e);

// Concatenation [p_0,...,p_c = p, p*q_1, ..., p*q_d]; subordinate to
// concat(P,Q). Throws JunctionMismatch when the expressions do not
// compose.
SubordinatePath concat_paths(const SubordinatePath& pp, const SubordinatePath& qq);

// Full re-validation of the subordinate-path conditions, including the
// element-set containments at down-steps.
bool is_subordinate(const SubordinatePath& path);

// Whether every down-step keeps the maximal element.
bool is_forward(const SubordinatePath& path);

}  // namespace dcoset

#endif
