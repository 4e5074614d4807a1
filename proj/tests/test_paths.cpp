#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dcoset/io.hpp"
#include "dcoset/paths.hpp"

using namespace dcoset;

namespace {

CoxeterGroup make(const std::string& preset) {
  return CoxeterGroup(preset_matrix(preset), 100000, preset);
}

SinglestepExpr expr(const CoxeterGroup& g, std::initializer_list<std::uint32_t> masks) {
  std::vector<GenSet> subsets;
  for (std::uint32_t m : masks) subsets.push_back(GenSet::from_mask(m));
  return SinglestepExpr(g, std::move(subsets));
}

Element el(const CoxeterGroup& g, std::initializer_list<int> letters) {
  Element acc = g.identity();
  for (int s : letters) acc = g.right_mult(acc, s);
  return acc;
}

void for_each_expr(const CoxeterGroup& g, int cap,
                   const std::function<void(const SinglestepExpr&)>& fn) {
  std::vector<GenSet> subsets;
  auto rec = [&](auto&& self) -> void {
    fn(SinglestepExpr(g, subsets));
    if (static_cast<int>(subsets.size()) - 1 >= cap) return;
    for (int t = 0; t < g.rank(); ++t) {
      const GenSet last = subsets.back();
      subsets.push_back(last.contains(t) ? last.without(t) : last.with(t));
      self(self);
      subsets.pop_back();
    }
  };
  for (std::uint32_t mask = 0; mask < (1u << g.rank()); ++mask) {
    subsets.assign(1, GenSet::from_mask(mask));
    rec(rec);
  }
}

// Independent recursive path counter: the number of subordinate paths
// is the product-sum over branch choices, computed without building
// any path objects.
std::uint64_t count_paths(const CoxeterGroup& g, const std::vector<GenSet>& s,
                          std::size_t k, const DoubleCoset& cur) {
  if (k + 1 == s.size()) return 1;
  if (s[k].subset_of(s[k + 1]))
    return count_paths(g, s, k + 1, project(cur, s.front(), s[k + 1]));
  std::uint64_t total = 0;
  for (const DoubleCoset& branch : sub_cosets(cur, s[k + 1]))
    total += count_paths(g, s, k + 1, branch);
  return total;
}

}  // namespace

TEST_CASE("path counts for the one-step and two-step shapes") {
  const CoxeterGroup g = make("A2");
  CHECK(enumerate_paths(expr(g, {0, 1})).size() == 1);
  CHECK(enumerate_paths(expr(g, {1, 0})).size() == 1);
  CHECK(enumerate_paths(expr(g, {0, 1, 0})).size() == 2);
  CHECK(enumerate_paths(expr(g, {1})).size() == 1);

  const auto two = enumerate_paths(expr(g, {1, 3, 1}));
  REQUIRE(two.size() == 2);
  std::vector<Element> termini{two[0].terminus().min_elem(), two[1].terminus().min_elem()};
  std::sort(termini.begin(), termini.end());
  CHECK(termini[0] == g.identity());          // the identity (a,a)-coset
  CHECK(termini[1] == g.generator(1));        // the (a,a)-coset of aba
}

TEST_CASE("every enumerated path is subordinate; the list is duplicate-free and complete") {
  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    const CoxeterGroup g = make(name);
    const int cap = g.rank() == 2 ? 5 : 4;
    for_each_expr(g, cap, [&](const SinglestepExpr& e) {
      const auto paths = enumerate_paths(e);
      for (std::size_t a = 0; a < paths.size(); ++a) {
        CHECK(is_subordinate(paths[a]));
        for (std::size_t b = a + 1; b < paths.size(); ++b) CHECK(!(paths[a] == paths[b]));
      }
      const DoubleCoset start = coset_of(g, g.identity(), e.front(), e.front());
      CHECK(paths.size() == count_paths(g, e.subsets(), 0, start));
    });
  }
}

TEST_CASE("forward path: rule application and terminus") {
  const CoxeterGroup g = make("A2");

  // forward path of [0,{s},0] ends at the singleton {s}
  const SubordinatePath fwd = forward_path(expr(g, {0, 1, 0}));
  CHECK(fwd.terminus().min_elem() == g.generator(0));
  CHECK(fwd.terminus().size() == 1);

  CHECK(forward_path(expr(g, {1})).cosets().size() == 1);

  const SubordinatePath big = forward_path(expr(g, {1, 3, 1}));
  CHECK(big.terminus().max_elem() == el(g, {0, 1, 0}));

  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    const CoxeterGroup h = make(name);
    const int cap = h.rank() == 2 ? 5 : 4;
    for_each_expr(h, cap, [&](const SinglestepExpr& e) {
      const SubordinatePath p = forward_path(e);
      CHECK(is_subordinate(p));
      CHECK(is_forward(p));
      CHECK(p.terminus() == expressed_coset(e));
      // the forward path is among the enumerated ones, exactly once
      std::size_t hits = 0;
      for (const SubordinatePath& q : enumerate_paths(e))
        if (q == p) ++hits;
      CHECK(hits == 1);
    });
  }
}

TEST_CASE("terminus sets: the double quotient example") {
  const CoxeterGroup g = make("A2");
  const GenSet a = GenSet::single(0);

  // Term([I, Is, I]) is the whole double quotient
  const auto everything = term_set(expr(g, {1, 3, 1}));
  CHECK(everything.size() == enumerate_cosets(g, a, a).size());

  // Term([I,Is]) * Term([Is,I]) is only the top coset
  const auto left = term_set(expr(g, {1, 3}));
  const auto right = term_set(expr(g, {3, 1}));
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  const DoubleCoset prod = coset_star(left[0], right[0]);
  CHECK(prod.max_elem() == el(g, {0, 1, 0}));
  CHECK(everything.size() > 1);  // the product set is a proper subset

  CHECK(term_set(expr(g, {1})).size() == 1);
}

TEST_CASE("concatenation of paths") {
  const CoxeterGroup g = make("A2");

  // pp composed with a width-0 path is pp
  const SubordinatePath pp = forward_path(expr(g, {1, 3}));
  const SubordinatePath unit = forward_path(expr(g, {3}));
  CHECK(concat_paths(pp, unit) == pp);

  // only the forward path of [0,s,0] is a concatenation of the unique
  // paths of [0,s] and [s,0]
  const auto lefts = enumerate_paths(expr(g, {0, 1}));
  const auto rights = enumerate_paths(expr(g, {1, 0}));
  REQUIRE(lefts.size() == 1);
  REQUIRE(rights.size() == 1);
  const SubordinatePath joined = concat_paths(lefts[0], rights[0]);
  const auto both = enumerate_paths(expr(g, {0, 1, 0}));
  REQUIRE(both.size() == 2);
  const SubordinatePath fwd = forward_path(expr(g, {0, 1, 0}));
  CHECK(joined == fwd);
  const SubordinatePath& other = both[0] == fwd ? both[1] : both[0];
  CHECK(!(joined == other));

  // forward o forward = forward on the peak expression
  CHECK(concat_paths(forward_path(expr(g, {1, 3})), forward_path(expr(g, {3, 1}))) ==
        forward_path(expr(g, {1, 3, 1})));

  CHECK_THROWS_AS(concat_paths(pp, pp), JunctionMismatch);
}

TEST_CASE("concatenated paths are subordinate with star terminus") {
  const CoxeterGroup g = make("B2");
  std::vector<SinglestepExpr> exprs;
  for_each_expr(g, 3, [&](const SinglestepExpr& e) { exprs.push_back(e); });
  for (const SinglestepExpr& e1 : exprs)
    for (const SinglestepExpr& e2 : exprs) {
      if (!(e1.back() == e2.front())) continue;
      for (const SubordinatePath& pp : enumerate_paths(e1))
        for (const SubordinatePath& qq : enumerate_paths(e2)) {
          const SubordinatePath joined = concat_paths(pp, qq);
          CHECK(is_subordinate(joined));
          CHECK(joined.terminus() == coset_star(pp.terminus(), qq.terminus()));
        }
    }
}

TEST_CASE("path rendering format") {
  const CoxeterGroup g = make("A2");
  const SubordinatePath fwd = forward_path(expr(g, {0, 1, 0}));
  CHECK(render_path(fwd) ==
        "0: - | min=- max=-\n"
        "1: 1 | min=- max=1\n"
        "2: - | min=1 max=1\n");
}
