#ifndef DCOSET_TESTS_ORACLE_REFLECTION_HPP
#define DCOSET_TESTS_ORACLE_REFLECTION_HPP

// Test-only oracle: the group realized through its reflection
// representation with exact arithmetic in Z[c]/(f(c)), where c is
// 2cos(pi/m) for the one bond order m > 3 (if any). Elements are
// matrices; lengths are BFS depths in the Cayley graph. Nothing here
// touches the library's word canonicalization, so agreement between
// the two is a real cross-check.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dcoset/coxeter.hpp"

namespace oracle {

class RefGroup {
 public:
  explicit RefGroup(const dcoset::CoxeterMatrix& m, std::size_t cap = 100000);

  int rank() const { return rank_; }
  std::size_t size() const { return mats_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t generator(int s) const;
  int length(std::size_t e) const { return len_[e]; }
  const std::vector<int>& word(std::size_t e) const { return words_[e]; }

  std::size_t right(std::size_t e, int s) const { return right_[e * rank_ + s]; }
  std::size_t left(int s, std::size_t e) const { return left_[e * rank_ + s]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t from_word(const std::vector<int>& w) const;

  // All subsequence products of the stored reduced word of y, as a
  // membership vector: the naive subword-property Bruhat order.
  std::vector<char> subseq_down(std::size_t y) const;
  bool subseq_leq(std::size_t x, std::size_t y) const { return subseq_down(y)[x]; }

  std::size_t demazure(std::size_t a, std::size_t b) const;
  std::size_t longest_in(std::uint32_t mask) const;
  std::vector<std::size_t> parabolic(std::uint32_t mask) const;

  // Orbit of w under left W_I and right W_J, ascending by index.
  std::vector<std::size_t> orbit(std::size_t w, std::uint32_t i, std::uint32_t j) const;

 private:
  using Poly = std::array<long long, 3>;  // coefficients 1, c, c^2
  using Mat = std::array<Poly, 9>;        // row-major, rank x rank used

  Poly mul(const Poly& a, const Poly& b) const;
  Mat mul(const Mat& a, const Mat& b) const;
  std::size_t lookup(const Mat& m) const;

  int rank_;
  int deg_ = 1;          // active ring degree
  Poly red2_{}, red3_{};  // reductions of c^2 and c^3 when deg < 3
  std::vector<Mat> gens_;
  std::vector<Mat> mats_;
  std::map<Mat, std::size_t> index_;
  std::vector<int> len_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
};

}  // namespace oracle

#endif
