#ifndef DCOSET_EXPRESSION_HPP
#define DCOSET_EXPRESSION_HPP

#include <vector>

#include "dcoset/coset.hpp"
#include "dcoset/coxeter.hpp"
#include "dcoset/gens.hpp"

namespace dcoset {

// A singular singlestep expression [I_0, ..., I_d]: adjacent subsets
// differ by exactly one generator. Width d may be zero.
class SinglestepExpr {
 public:
  SinglestepExpr(const CoxeterGroup& g, std::vector<GenSet> subsets);

  const CoxeterGroup& group() const { return *group_; }
  const std::vector<GenSet>& subsets() const { return subsets_; }
  std::size_t width() const { return subsets_.size() - 1; }
  GenSet front() const { return subsets_.front(); }
  GenSet back() const { return subsets_.back(); }

  friend bool operator==(const SinglestepExpr& a, const SinglestepExpr& b) {
    return a.group_ == b.group_ && a.subsets_ == b.subsets_;
  }

 private:
  const CoxeterGroup* group_;
  std::vector<GenSet> subsets_;
};

// The alternating chain of local extrema
// [[ I_0 c K_1 ) I_1 c K_2 ) ... c K_m ) I_m ]]: mins holds
// I_0..I_m, maxes holds K_1..K_m. Boundary terms may coincide with
// their neighbor (I_0 = K_1 when the expression starts descending,
// I_m = K_m when it ends ascending); interior minima are strict.
class MultistepExpr {
 public:
  MultistepExpr(const CoxeterGroup& g, std::vector<GenSet> mins, std::vector<GenSet> maxes);

  const CoxeterGroup& group() const { return *group_; }
  const std::vector<GenSet>& mins() const { return mins_; }
  const std::vector<GenSet>& maxes() const { return maxes_; }
  std::size_t step_count() const { return maxes_.size(); }  // m

  friend bool operator==(const MultistepExpr& a, const MultistepExpr& b) {
    return a.group_ == b.group_ && a.mins_ == b.mins_ && a.maxes_ == b.maxes_;
  }

 private:
  const CoxeterGroup* group_;
  std::vector<GenSet> mins_;
  std::vector<GenSet> maxes_;
};

// The coset the expression expresses: the unique (I_0, I_d)-coset
// whose maximum is the star product of the longest elements along the
// expression.
DoubleCoset expressed_coset(const SinglestepExpr& e);

// Its maximum alone, without touching the coset family (cheap).
Element expressed_max(const SinglestepExpr& e);

int expr_length(const SinglestepExpr& e);
int expr_length(const MultistepExpr& e);

// Whether the multistep chain product
//   w_{K_1} w_{I_1} . w_{K_2} w_{I_2} . ... . w_{K_m} w_{I_m} . w_{I_m}
// is length-additive and lands on the expressed maximum; equivalently,
// the expression's length equals the length of its coset.
bool is_reduced(const SinglestepExpr& e);

MultistepExpr to_multistep(const SinglestepExpr& e);
SinglestepExpr to_singlestep(const MultistepExpr& e);

// Concatenation, dropping the duplicated junction subset. Throws
// JunctionMismatch when e1 ends at a different subset than e2 starts.
SinglestepExpr concat(const SinglestepExpr& e1, const SinglestepExpr& e2);

// One reduced expression for p, found by shortest-path search over
// (element, subset) states. Deterministic: among shortest paths it
// prefers adding over removing and smaller generator indices first.
SinglestepExpr find_reduced_expression(const DoubleCoset& p);

}  // namespace dcoset

#endif
