#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "dcoset/expression.hpp"
#include "dcoset/io.hpp"

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

// Every singlestep expression of the group with width <= cap.
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

}  // namespace

TEST_CASE("singlestep validation") {
  const CoxeterGroup g = make("A2");
  CHECK_NOTHROW(expr(g, {1, 3, 1}));
  CHECK_THROWS_AS(expr(g, {}), InvalidChain);
  CHECK_THROWS_AS(expr(g, {0, 3}), InvalidChain);  // two generators at once
  CHECK_THROWS_AS(expr(g, {1, 1}), InvalidChain);  // no change
  CHECK_THROWS_AS(expr(g, {1, 2}), InvalidChain);  // swap, not a single step
  CHECK_THROWS_AS(expr(g, {4}), InvalidChain);     // out of rank
}

TEST_CASE("expressed coset: worked A2 examples") {
  const CoxeterGroup g = make("A2");

  const DoubleCoset pid = expressed_coset(expr(g, {1}));
  CHECK(pid.length() == 0);
  CHECK(pid.min_elem() == g.identity());

  // [{a},{a,b},{a}] expresses the (a,a)-coset of aba: max aba, min b
  const DoubleCoset big = expressed_coset(expr(g, {1, 3, 1}));
  CHECK(big.max_elem() == el(g, {0, 1, 0}));
  CHECK(big.min_elem() == g.generator(1));

  // [0,{a},0] expresses the singleton {a}
  const DoubleCoset sa = expressed_coset(expr(g, {0, 1, 0}));
  CHECK(sa.size() == 1);
  CHECK(sa.min_elem() == g.generator(0));

  // the expressed maximum really is the maximum of its coset
  for_each_expr(g, 4, [&](const SinglestepExpr& e) {
    CHECK(expressed_coset(e).max_elem() == expressed_max(e));
  });
}

TEST_CASE("expression length: quoted formula on both forms") {
  const CoxeterGroup g = make("A2");
  CHECK(expr_length(expr(g, {1})) == 0);
  CHECK(expr_length(expr(g, {1, 3, 1})) == 4);  // -1 + 2*3 - 1
  CHECK(expr_length(expr(g, {0, 1})) == 1);
  CHECK(expr_length(expr(g, {1, 0})) == 1);

  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    const CoxeterGroup h = make(name);
    for_each_expr(h, 4, [&](const SinglestepExpr& e) {
      CHECK(expr_length(e) == expr_length(to_multistep(e)));
    });
  }
}

TEST_CASE("is_reduced: examples including asymmetric endpoints") {
  const CoxeterGroup g = make("A2");
  CHECK(is_reduced(expr(g, {1})));
  CHECK(is_reduced(expr(g, {1, 3, 1})));         // l(aba) = 3 additive
  CHECK_FALSE(is_reduced(expr(g, {0, 1, 0, 1, 0})));  // expresses {a} at cost 4

  // ascending and descending runs are reduced even when the endpoint
  // parabolic lengths differ
  CHECK(is_reduced(expr(g, {1, 3})));
  CHECK(is_reduced(expr(g, {3, 1})));
  CHECK(is_reduced(expr(g, {0, 1, 3})));

  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    const CoxeterGroup h = make(name);
    for_each_expr(h, 4, [&](const SinglestepExpr& e) {
      CHECK(is_reduced(e) == (expr_length(e) == expressed_coset(e).length()));
    });
  }
}

TEST_CASE("multistep conversion and round trip") {
  const CoxeterGroup a2 = make("A2");

  const MultistepExpr peak = to_multistep(expr(a2, {1, 3, 1}));
  CHECK(peak.mins() == std::vector<GenSet>{GenSet::single(0), GenSet::single(0)});
  CHECK(peak.maxes() == std::vector<GenSet>{GenSet::all(2)});

  CHECK(to_singlestep(MultistepExpr(a2, {GenSet{}, GenSet{}}, {GenSet::single(0)})) ==
        expr(a2, {0, 1, 0}));

  // trailing/leading conventions: [{a},{a,b}] has I_1 = K_1
  const MultistepExpr up = to_multistep(expr(a2, {1, 3}));
  CHECK(up.mins() == std::vector<GenSet>{GenSet::single(0), GenSet::all(2)});
  CHECK(up.maxes() == std::vector<GenSet>{GenSet::all(2)});
  const MultistepExpr downward = to_multistep(expr(a2, {3, 1}));
  CHECK(downward.mins() == std::vector<GenSet>{GenSet::all(2), GenSet::single(0)});
  CHECK(downward.maxes() == std::vector<GenSet>{GenSet::all(2)});

  // A3 ascending tie-break example
  const CoxeterGroup a3 = make("A3");
  const MultistepExpr chain =
      MultistepExpr(a3, {GenSet::single(0), GenSet{}, GenSet::single(2)},
                    {GenSet::from_mask(3), GenSet::single(2)});
  CHECK(to_singlestep(chain) == expr(a3, {1, 3, 2, 0, 4}));

  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    const CoxeterGroup h = make(name);
    for_each_expr(h, 5, [&](const SinglestepExpr& e) {
      const MultistepExpr ms = to_multistep(e);
      CHECK(to_multistep(to_singlestep(ms)) == ms);
    });
  }

  CHECK_THROWS_AS(MultistepExpr(a2, {GenSet::all(2), GenSet{}}, {GenSet::single(0)}),
                  InvalidChain);
  CHECK_THROWS_AS(MultistepExpr(a2, {GenSet::single(0), GenSet::single(0)},
                                {GenSet::single(0)}),
                  InvalidChain);
}

TEST_CASE("concat") {
  const CoxeterGroup g = make("A2");
  const SinglestepExpr left = expr(g, {1, 3});
  const SinglestepExpr right = expr(g, {3, 1});
  const SinglestepExpr joined = concat(left, right);
  CHECK(joined == expr(g, {1, 3, 1}));
  CHECK(concat(joined, expr(g, {1})) == joined);
  CHECK(concat(expr(g, {1}), joined) == joined);
  CHECK_THROWS_AS(concat(left, left), JunctionMismatch);

  // expressed_coset(concat) = star of the expressed cosets
  CHECK(expressed_coset(joined) ==
        coset_star(expressed_coset(left), expressed_coset(right)));
  for (const char* name : {"A2", "B2"}) {
    CAPTURE(name);
    const CoxeterGroup h = make(name);
    std::vector<SinglestepExpr> all;
    for_each_expr(h, 3, [&](const SinglestepExpr& e) { all.push_back(e); });
    for (const SinglestepExpr& e1 : all)
      for (const SinglestepExpr& e2 : all) {
        if (!(e1.back() == e2.front())) continue;
        CHECK(expressed_coset(concat(e1, e2)) ==
              coset_star(expressed_coset(e1), expressed_coset(e2)));
      }
  }
}

TEST_CASE("find_reduced_expression: deterministic witnesses") {
  const CoxeterGroup g = make("A2");
  const GenSet a = GenSet::single(0);

  const DoubleCoset pid = coset_of(g, g.identity(), a, a);
  CHECK(find_reduced_expression(pid) == expr(g, {1}));

  const DoubleCoset big = coset_of(g, g.generator(1), a, a);
  CHECK(find_reduced_expression(big) == expr(g, {1, 3, 1}));

  const DoubleCoset ab = coset_of(g, el(g, {0, 1}), GenSet{}, GenSet{});
  const SinglestepExpr witness = find_reduced_expression(ab);
  CHECK(witness == expr(g, {0, 1, 0, 2, 0}));  // [0,{a},0,{b},0]
  CHECK(expr_length(witness) == 4);
}

TEST_CASE("find_reduced_expression: contract on every coset") {
  for (const char* name : {"A2", "B2", "I2(5)", "A3", "B3"}) {
    CAPTURE(name);
    const CoxeterGroup g = make(name);
    for (std::uint32_t im = 0; im < (1u << g.rank()); ++im)
      for (std::uint32_t jm = 0; jm < (1u << g.rank()); ++jm)
        for (const DoubleCoset& p :
             enumerate_cosets(g, GenSet::from_mask(im), GenSet::from_mask(jm))) {
          const SinglestepExpr e = find_reduced_expression(p);
          CHECK(e.front() == p.left_type());
          CHECK(e.back() == p.right_type());
          CHECK(is_reduced(e));
          CHECK(expressed_coset(e) == p);
          CHECK(expr_length(e) == p.length());
        }
  }
}

TEST_CASE("contiguous subexpressions of reduced expressions are reduced") {
  for (const char* name : {"A2", "B2"}) {
    CAPTURE(name);
    const CoxeterGroup g = make(name);
    for_each_expr(g, 5, [&](const SinglestepExpr& e) {
      if (!is_reduced(e)) return;
      const auto& s = e.subsets();
      for (std::size_t a = 0; a + 1 < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          const SinglestepExpr part(g, std::vector<GenSet>(s.begin() + a,
                                                           s.begin() + b + 1));
          CHECK(is_reduced(part));
        }
    });
  }
}

TEST_CASE("concatenation of reduced expressions is reduced iff the cosets compose") {
  const CoxeterGroup g = make("B2");
  std::vector<SinglestepExpr> reduced;
  for_each_expr(g, 3, [&](const SinglestepExpr& e) {
    if (is_reduced(e)) reduced.push_back(e);
  });
  for (const SinglestepExpr& e1 : reduced)
    for (const SinglestepExpr& e2 : reduced) {
      if (!(e1.back() == e2.front())) continue;
      const bool lhs = is_reduced(concat(e1, e2));
      const bool rhs =
          reduced_compose(expressed_coset(e1), expressed_coset(e2)).has_value();
      CHECK(lhs == rhs);
    }
}
