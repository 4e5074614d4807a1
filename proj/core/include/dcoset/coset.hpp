#ifndef DCOSET_COSET_HPP
#define DCOSET_COSET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dcoset/coxeter.hpp"
#include "dcoset/detail/caches.hpp"
#include "dcoset/gens.hpp"

namespace dcoset {

// An (I,J)-coset W_I w W_J, together with its cached minimum, maximum,
// size, redundancies and length. Two cosets are equal when they have
// the same group, the same (I,J) pair and the same minimum: equal
// element sets with different types are distinct values on purpose.
class DoubleCoset {
 public:
  DoubleCoset() = default;

  const CoxeterGroup& group() const { return *data_->group; }
  GenSet left_type() const { return data_->left_type; }
  GenSet right_type() const { return data_->right_type; }
  Element min_elem() const { return Element{data_->min_idx}; }
  Element max_elem() const { return Element{data_->max_idx}; }
  int length() const { return data_->length; }
  std::size_t size() const { return data_->elements.size(); }
  GenSet left_redundancy() const { return data_->leftred; }
  GenSet right_redundancy() const { return data_->rightred; }

  // Element indices in ascending (ShortLex) order.
  std::span<const std::uint32_t> element_indices() const { return data_->elements; }
  bool contains(Element w) const;

  // Index of this coset in its family's (length, min) order.
  std::size_t position() const { return data_->position; }

  bool valid() const { return data_ != nullptr; }

  friend bool operator==(const DoubleCoset& a, const DoubleCoset& b) {
    return a.data_->group == b.data_->group && a.data_->left_type == b.data_->left_type &&
           a.data_->right_type == b.data_->right_type && a.data_->min_idx == b.data_->min_idx;
  }

 private:
  friend class CosetFamily;
  explicit DoubleCoset(std::shared_ptr<const detail::CosetData> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const detail::CosetData> data_;
};

// The partition of W into (I,J)-cosets, built once per (group, I, J)
// and cached on the group. Cosets are ordered by (length, ShortLex of
// min); lookup by element is O(1).
class CosetFamily {
 public:
  CosetFamily(const CoxeterGroup& g, GenSet i, GenSet j);

  GenSet left_type() const { return data_->left_type; }
  GenSet right_type() const { return data_->right_type; }
  std::size_t count() const { return data_->cosets.size(); }
  DoubleCoset at(std::size_t pos) const { return DoubleCoset(data_->cosets[pos]); }
  DoubleCoset containing(Element w) const {
    return DoubleCoset(data_->cosets[data_->position_of[w.idx]]);
  }
  std::size_t position_containing(Element w) const { return data_->position_of[w.idx]; }
  std::vector<DoubleCoset> all() const;

 private:
  std::shared_ptr<const detail::FamilyData> data_;
};

// The (I,J)-coset containing w.
DoubleCoset coset_of(const CoxeterGroup& g, Element w, GenSet i, GenSet j);

// All (I,J)-cosets, sorted by (length, ShortLex of min).
std::vector<DoubleCoset> enumerate_cosets(const CoxeterGroup& g, GenSet i, GenSet j);

// Bruhat order on cosets of the same type: p <= q iff min(p) <= min(q).
// Throws MismatchedTypes when the (I,J) pairs differ.
bool coset_leq(const DoubleCoset& p, const DoubleCoset& q);

// Star (Demazure) product of an (I,J)-coset with a (J,K)-coset: the
// (I,K)-coset whose maximum is max(p) * max(q).
DoubleCoset coset_star(const DoubleCoset& p, const DoubleCoset& q);

// Reduced composition: coset_star(p, q) when the lengths are additive
// relative to the shared middle parabolic, absent otherwise.
std::optional<DoubleCoset> reduced_compose(const DoubleCoset& p, const DoubleCoset& q);

// Quotient map into a coarser double quotient (I subset of K, J subset
// of L). Throws NotASuperset otherwise.
DoubleCoset project(const DoubleCoset& p, GenSet k, GenSet l);

// The (I,J')-cosets contained in p, for J' a subset of p's right type,
// in ascending order of their minima.
std::vector<DoubleCoset> sub_cosets(const DoubleCoset& p, GenSet j_prime);

}  // namespace dcoset

#endif
