#ifndef DCOSET_COXETER_HPP
#define DCOSET_COXETER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcoset/errors.hpp"
#include "dcoset/gens.hpp"

namespace dcoset {

// Symmetric table of bond orders m(s,t): 1 on the diagonal, >= 2 off
// it. Only finite entries are accepted; groups that fail to close
// under the enumeration cap are rejected at build time instead.
class CoxeterMatrix {
 public:
  CoxeterMatrix(int rank, std::vector<int> entries);

  // Unlisted pairs default to m = 2 (commuting generators). Bonds are
  // 0-indexed here; the file format and CLI are 1-indexed.
  static CoxeterMatrix from_bonds(
      int rank, const std::vector<std::tuple<int, int, int>>& bonds);

  int rank() const { return rank_; }
  int m(int s, int t) const { return entries_[static_cast<std::size_t>(s) * rank_ + t]; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_;
  std::vector<int> entries_;
};

// A group element, identified by its index in the ShortLex-sorted list
// of canonical reduced words. Index 0 is the identity. Operations on
// elements live on CoxeterGroup; an Element is only meaningful together
// with the group that minted it.
struct Element {
  std::uint32_t idx = 0;

  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element a, Element b) { return a.idx <=> b.idx; }
};

// Words are strings over the byte alphabet 0..rank-1.
using Word = std::string;

// Reduces `w` and returns the ShortLex-least word in its rewrite
// orbit: nil moves (delete an adjacent equal pair) shrink the word,
// braid moves explore its equivalence class. Exact and
// representation-free, at the cost of exploring the braid orbit.
Word canonical_word(const CoxeterMatrix& m, Word w);

namespace detail {
struct GroupCaches;
}

// A fully enumerated finite Coxeter group: canonical words, lengths,
// and complete left/right Cayley tables, built breadth-first from the
// identity. Immutable after construction; all queries are const and
// safe to share across threads. Internal memo tables (Bruhat matrix,
// product tables, coset families) are built lazily under locks and are
// deterministic regardless of thread interleaving.
class CoxeterGroup {
 public:
  // Throws CapExceeded once more than `cap` elements are discovered,
  // which is how unbounded input is rejected.
  CoxeterGroup(const CoxeterMatrix& matrix, std::size_t cap,
               std::string name = "custom");
  ~CoxeterGroup();

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t size() const { return words_.size(); }
  std::size_t cap() const { return cap_; }
  const std::string& name() const { return name_; }

  Element identity() const { return Element{0}; }
  Element generator(int s) const;
  Element element(std::uint32_t idx) const { return Element{idx}; }

  int length(Element w) const { return static_cast<int>(words_[w.idx].size()); }
  const Word& word(Element w) const { return words_[w.idx]; }
  // Folds an arbitrary word (not necessarily reduced) into an element.
  Element element_from_word(const Word& w) const;

  Element right_mult(Element w, int s) const {
    return Element{right_[w.idx * static_cast<std::size_t>(rank()) + s]};
  }
  Element left_mult(int s, Element w) const {
    return Element{left_[w.idx * static_cast<std::size_t>(rank()) + s]};
  }
  Element multiply(Element x, Element y) const;
  Element inverse(Element w) const { return Element{inv_[w.idx]}; }

  GenSet right_descents(Element w) const { return GenSet::from_mask(rdesc_[w.idx]); }
  GenSet left_descents(Element w) const { return GenSet::from_mask(ldesc_[w.idx]); }

  // Demazure (star) product: folds y's canonical word into x, keeping
  // only the length-increasing steps.
  Element demazure(Element x, Element y) const;

  // Bruhat order, by the memoized descent recursion. The full |W|^2
  // table is materialized on first use.
  bool bruhat_leq(Element x, Element y) const;

  // Longest element w_I of the standard parabolic subgroup W_I, its
  // length l(I), and |W_I|. Precomputed for every subset at build time.
  Element longest_element(GenSet i) const { return Element{longest_by_mask_[i.mask()]}; }
  int parabolic_length(GenSet i) const { return length(longest_element(i)); }
  std::uint64_t parabolic_order(GenSet i) const { return para_order_by_mask_[i.mask()]; }

  // All elements whose canonical word uses only letters of I, in index
  // (ShortLex) order.
  std::vector<Element> parabolic_elements(GenSet i) const;

  // Internal cache shared with the coset layer.
  detail::GroupCaches& caches() const { return *caches_; }

 private:
  void build(std::size_t cap);

  CoxeterMatrix matrix_;
  std::size_t cap_;
  std::string name_;

  std::vector<Word> words_;
  std::unordered_map<Word, std::uint32_t> word_index_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> rdesc_;
  std::vector<std::uint32_t> ldesc_;
  std::vector<std::uint32_t> longest_by_mask_;
  std::vector<std::uint64_t> para_order_by_mask_;

  mutable std::once_flag leq_once_;
  mutable std::vector<std::uint64_t> leq_bits_;  // row-major |W| x |W| bit matrix
  mutable std::once_flag dem_once_;
  mutable std::vector<std::uint32_t> dem_table_;
  mutable std::once_flag mult_once_;
  mutable std::vector<std::uint32_t> mult_table_;

  std::unique_ptr<detail::GroupCaches> caches_;
};

}  // namespace dcoset

#endif
