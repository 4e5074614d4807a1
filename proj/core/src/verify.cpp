#include "dcoset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>

#include "dcoset/coset.hpp"
#include "dcoset/expression.hpp"
#include "dcoset/io.hpp"
#include "dcoset/paths.hpp"

namespace dcoset {

namespace {

/* ------------------------------------------------------------------ */
/* Infrastructure                                                      */
/* ------------------------------------------------------------------ */

// Collects rendered counterexamples; keeps the smallest ones under
// (total length, text) and caps memory while scanning large universes.
class FailureLog {
 public:
  explicit FailureLog(std::size_t keep) : keep_(keep) {}

  void add(long long key, std::string text) {
    items_.emplace_back(key, std::move(text));
    if (items_.size() > 4096) shrink(std::max<std::size_t>(keep_, 64));
  }

  std::vector<std::string> take() {
    shrink(keep_);
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (auto& [key, text] : items_) out.push_back(std::move(text));
    return out;
  }

  bool empty() const { return items_.empty(); }

 private:
  void shrink(std::size_t to) {
    std::sort(items_.begin(), items_.end());
    if (items_.size() > to) items_.resize(to);
  }

  std::size_t keep_;
  std::vector<std::pair<long long, std::string>> items_;
};

// Bruhat order and downsets of one coset family under the context's
// element comparison.
struct FamilyOrder {
  CosetFamily fam;
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;                 // [a*n + b] : a <= b
  std::vector<std::vector<std::uint32_t>> down;  // positions, ascending

  bool less_eq(std::size_t a, std::size_t b) const { return leq[a * n + b] != 0; }
};

// One expression of the capped universe together with everything the
// checks ask about repeatedly.
struct ExprInfo {
  SinglestepExpr expr;
  std::uint32_t coset_pos = 0;
  int length = 0;
  bool reduced = false;
  std::vector<std::uint32_t> term_pos;  // sorted termini positions
};

std::string subsets_key(const std::vector<GenSet>& subsets) {
  std::string key;
  key.reserve(subsets.size() * 4);
  for (GenSet s : subsets) {
    const std::uint32_t m = s.mask();
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
  }
  return key;
}

class Ctx {
 public:
  Ctx(const CoxeterGroup& group, const SuiteOptions& opts) : g(group), opts_(opts) {}

  const CoxeterGroup& g;

  int cap() const { return opts_.width_cap; }
  std::size_t keep() const { return opts_.max_failures; }

  bool leq(Element x, Element y) const {
    return opts_.leq_override ? opts_.leq_override(g, x, y) : g.bruhat_leq(x, y);
  }

  // {x : x <= y} for every y, ascending.
  const std::vector<std::vector<std::uint32_t>>& elem_down() {
    if (elem_down_.empty()) {
      const std::size_t n = g.size();
      elem_down_.resize(n);
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t x = 0; x < n; ++x)
          if (leq(Element{x}, Element{y})) elem_down_[y].push_back(x);
    }
    return elem_down_;
  }

  // Demazure product as a full table.
  Element dem(Element x, Element y) {
    if (dem_table_.empty()) {
      const std::size_t n = g.size();
      dem_table_.resize(n * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          dem_table_[a * n + b] = g.demazure(Element{a}, Element{b}).idx;
    }
    return Element{dem_table_[static_cast<std::size_t>(x.idx) * g.size() + y.idx]};
  }

  FamilyOrder& family(GenSet i, GenSet j) {
    const std::uint64_t key = (static_cast<std::uint64_t>(i.mask()) << 32) | j.mask();
    auto it = families_.find(key);
    if (it != families_.end()) return it->second;
    FamilyOrder fo{CosetFamily(g, i, j)};
    fo.n = fo.fam.count();
    fo.leq.assign(fo.n * fo.n, 0);
    fo.down.resize(fo.n);
    for (std::size_t a = 0; a < fo.n; ++a) {
      const Element amin = fo.fam.at(a).min_elem();
      for (std::size_t b = 0; b < fo.n; ++b)
        if (leq(amin, fo.fam.at(b).min_elem())) fo.leq[a * fo.n + b] = 1;
    }
    for (std::size_t b = 0; b < fo.n; ++b)
      for (std::size_t a = 0; a < fo.n; ++a)
        if (fo.leq[a * fo.n + b]) fo.down[b].push_back(static_cast<std::uint32_t>(a));
    return families_.emplace(key, std::move(fo)).first->second;
  }

  // Every singlestep expression of width <= cap, all start subsets, in
  // DFS order with generators toggled smallest first.
  const std::vector<ExprInfo>& universe() {
    build_universe();
    return universe_;
  }

  const ExprInfo* find_expr(const std::vector<GenSet>& subsets) {
    build_universe();
    auto it = universe_index_.find(subsets_key(subsets));
    return it == universe_index_.end() ? nullptr : &universe_[it->second];
  }

  // Universe indices grouped by first subset.
  const std::vector<std::uint32_t>& by_front(GenSet i) {
    build_universe();
    return by_front_[i.mask()];
  }

 private:
  void build_universe() {
    if (universe_built_) return;
    universe_built_ = true;
    const std::uint32_t nmasks = std::uint32_t{1} << g.rank();
    by_front_.resize(nmasks);
    std::vector<GenSet> subsets;
    auto visit = [&](auto&& self) -> void {
      SinglestepExpr expr(g, subsets);
      ExprInfo info{expr};
      const DoubleCoset coset = expressed_coset(expr);
      info.coset_pos = static_cast<std::uint32_t>(coset.position());
      info.length = expr_length(expr);
      info.reduced = is_reduced(expr);
      for (const DoubleCoset& t : term_set(expr))
        info.term_pos.push_back(static_cast<std::uint32_t>(t.position()));
      universe_index_.emplace(subsets_key(subsets),
                              static_cast<std::uint32_t>(universe_.size()));
      by_front_[subsets.front().mask()].push_back(
          static_cast<std::uint32_t>(universe_.size()));
      universe_.push_back(std::move(info));
      if (static_cast<int>(subsets.size()) - 1 >= cap()) return;
      for (int t = 0; t < g.rank(); ++t) {
        const GenSet next = subsets.back().contains(t) ? subsets.back().without(t)
                                                       : subsets.back().with(t);
        subsets.push_back(next);
        self(self);
        subsets.pop_back();
      }
    };
    for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
      subsets.assign(1, GenSet::from_mask(mask));
      visit(visit);
    }
  }

  const SuiteOptions& opts_;
  std::vector<std::vector<std::uint32_t>> elem_down_;
  std::vector<std::uint32_t> dem_table_;
  std::map<std::uint64_t, FamilyOrder> families_;
  bool universe_built_ = false;
  std::vector<ExprInfo> universe_;
  std::map<std::string, std::uint32_t> universe_index_;
  std::vector<std::vector<std::uint32_t>> by_front_;
};

std::string W(const CoxeterGroup& g, Element x) { return render_word(g, x); }
std::string S(GenSet s) { return render_gen_set(s); }

std::vector<std::uint32_t> term_positions(const SinglestepExpr& e) {
  std::vector<std::uint32_t> out;
  for (const DoubleCoset& t : term_set(e))
    out.push_back(static_cast<std::uint32_t>(t.position()));
  return out;
}

// All subsets of the generators, ascending by mask.
std::vector<GenSet> all_subsets(const CoxeterGroup& g) {
  std::vector<GenSet> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << g.rank()); ++m)
    out.push_back(GenSet::from_mask(m));
  return out;
}

/* ------------------------------------------------------------------ */
/* Element-level checks                                                */
/* ------------------------------------------------------------------ */

std::uint64_t check_star_monotone(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  const std::size_t n = g.size();
  std::uint64_t universe = 0;
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t a : ctx.elem_down()[b])
      for (std::uint32_t c = 0; c < n; ++c) {
        ++universe;
        const Element ea{a}, eb{b}, ec{c};
        if (!ctx.leq(ctx.dem(ea, ec), ctx.dem(eb, ec)))
          log.add(g.length(ea) + g.length(eb) + g.length(ec),
                  "a=" + W(g, ea) + " b=" + W(g, eb) + " c=" + W(g, ec) +
                      ": a*c is not <= b*c");
        if (!ctx.leq(ctx.dem(ec, ea), ctx.dem(ec, eb)))
          log.add(g.length(ea) + g.length(eb) + g.length(ec),
                  "a=" + W(g, ea) + " b=" + W(g, eb) + " c=" + W(g, ec) +
                      ": c*a is not <= c*b");
      }
  return universe;
}

std::uint64_t check_lifting(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  const std::size_t n = g.size();
  std::uint64_t universe = 0;
  for (std::uint32_t w = 0; w < n; ++w)
    for (std::uint32_t v : ctx.elem_down()[w])
      for (std::uint32_t x = 0; x < n; ++x) {
        universe += 2;
        const Element ev{v}, ew{w}, ex{x};
        const Element vx = g.multiply(ev, ex);
        bool found = false;
        for (std::uint32_t xp : ctx.elem_down()[x]) {
          const Element wxp = g.multiply(ew, Element{xp});
          if (g.length(wxp) == g.length(ew) + g.length(Element{xp}) &&
              ctx.leq(vx, wxp)) {
            found = true;
            break;
          }
        }
        if (!found)
          log.add(g.length(ev) + g.length(ew) + g.length(ex),
                  "v=" + W(g, ev) + " w=" + W(g, ew) + " x=" + W(g, ex) +
                      ": no x' <= x with vx <= w.x'");
        const Element xv = g.multiply(ex, ev);
        found = false;
        for (std::uint32_t xp : ctx.elem_down()[x]) {
          const Element xpw = g.multiply(Element{xp}, ew);
          if (g.length(xpw) == g.length(Element{xp}) + g.length(ew) &&
              ctx.leq(xv, xpw)) {
            found = true;
            break;
          }
        }
        if (!found)
          log.add(g.length(ev) + g.length(ew) + g.length(ex),
                  "v=" + W(g, ev) + " w=" + W(g, ew) + " x=" + W(g, ex) +
                      ": no x' <= x with xv <= x'.w");
      }
  return universe;
}

std::uint64_t check_lifting_factor(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  const std::size_t n = g.size();
  std::uint64_t universe = 0;
  for (std::uint32_t w = 0; w < n; ++w) {
    const Element ew{w};
    for (std::uint32_t z : ctx.elem_down()[w]) {
      const Element ez{z};
      // w = z.x  (x determined by z when the product is reduced)
      const Element x_right = g.multiply(g.inverse(ez), ew);
      if (g.length(ez) + g.length(x_right) == g.length(ew)) {
        const auto& wits = ctx.elem_down()[g.inverse(x_right).idx];
        for (std::uint32_t v : ctx.elem_down()[w]) {
          ++universe;
          const Element ev{v};
          bool found = false;
          for (std::uint32_t xp : wits)
            if (ctx.leq(g.multiply(ev, Element{xp}), ez)) {
              found = true;
              break;
            }
          if (!found)
            log.add(g.length(ev) + g.length(ew) + g.length(ez),
                    "v=" + W(g, ev) + " w=" + W(g, ew) + " z=" + W(g, ez) + " x=" +
                        W(g, x_right) + ": no x' <= x^-1 with vx' <= z");
        }
      }
      // w = x.z
      const Element x_left = g.multiply(ew, g.inverse(ez));
      if (g.length(x_left) + g.length(ez) == g.length(ew)) {
        const auto& wits = ctx.elem_down()[g.inverse(x_left).idx];
        for (std::uint32_t v : ctx.elem_down()[w]) {
          ++universe;
          const Element ev{v};
          bool found = false;
          for (std::uint32_t xp : wits)
            if (ctx.leq(g.multiply(Element{xp}, ev), ez)) {
              found = true;
              break;
            }
          if (!found)
            log.add(g.length(ev) + g.length(ew) + g.length(ez),
                    "v=" + W(g, ev) + " w=" + W(g, ew) + " z=" + W(g, ez) + " x=" +
                        W(g, x_left) + ": no x' <= x^-1 with x'v <= z");
        }
      }
    }
  }
  return universe;
}

std::uint64_t check_bruhat_oracle(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  const std::size_t n = g.size();
  std::uint64_t universe = 0;
  std::vector<std::uint8_t> reach(n), next(n);
  for (std::uint32_t y = 0; y < n; ++y) {
    const Element ey{y};
    // Products of all subsequences of y's canonical word, by a sweep
    // that either applies or skips each letter.
    std::fill(reach.begin(), reach.end(), 0);
    reach[0] = 1;
    for (char s : g.word(ey)) {
      next = reach;
      for (std::uint32_t x = 0; x < n; ++x)
        if (reach[x]) next[g.right_mult(Element{x}, s).idx] = 1;
      reach.swap(next);
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      ++universe;
      if (static_cast<bool>(reach[x]) != ctx.leq(Element{x}, ey))
        log.add(g.length(Element{x}) + g.length(ey),
                "x=" + W(g, Element{x}) + " y=" + W(g, ey) +
                    ": descent recursion disagrees with the subsequence oracle");
    }
  }
  return universe;
}

std::uint64_t check_demazure_assoc(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  const std::size_t n = g.size();
  std::uint64_t universe = 0;
  auto test = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    ++universe;
    const Element ex{x}, ey{y}, ez{z};
    if (ctx.dem(ctx.dem(ex, ey), ez) != ctx.dem(ex, ctx.dem(ey, ez)))
      log.add(g.length(ex) + g.length(ey) + g.length(ez),
              "x=" + W(g, ex) + " y=" + W(g, ey) + " z=" + W(g, ez) +
                  ": (x*y)*z != x*(y*z)");
  };
  if (n <= 48) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) test(x, y, z);
  } else {
    std::mt19937 rng(982451653u);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (int k = 0; k < 100000; ++k) test(pick(rng), pick(rng), pick(rng));
  }
  return universe;
}

/* ------------------------------------------------------------------ */
/* Coset-level checks                                                  */
/* ------------------------------------------------------------------ */

std::uint64_t check_projection(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  for (GenSet i : subsets)
    for (GenSet k : subsets) {
      if (!i.subset_of(k)) continue;
      for (GenSet j : subsets)
        for (GenSet l : subsets) {
          if (!j.subset_of(l)) continue;
          FamilyOrder& fine = ctx.family(i, j);
          FamilyOrder& coarse = ctx.family(k, l);
          auto pi = [&](std::size_t pos) {
            return coarse.fam.containing(fine.fam.at(pos).min_elem()).position();
          };
          std::vector<std::uint32_t> image(fine.n);
          for (std::size_t pos = 0; pos < fine.n; ++pos)
            image[pos] = static_cast<std::uint32_t>(pi(pos));
          // (1) monotone
          for (std::size_t b = 0; b < fine.n; ++b)
            for (std::uint32_t a : fine.down[b]) {
              ++universe;
              if (!coarse.less_eq(image[a], image[b]))
                log.add(fine.fam.at(a).length() + fine.fam.at(b).length(),
                        "I=" + S(i) + " J=" + S(j) + " K=" + S(k) + " L=" + S(l) +
                            " p=" + W(g, fine.fam.at(a).min_elem()) + " p'=" +
                            W(g, fine.fam.at(b).min_elem()) +
                            ": projection is not monotone");
            }
          // (2) preimage of a downset is the downset of the fiber max
          for (std::size_t q = 0; q < coarse.n; ++q) {
            std::vector<std::uint32_t> fiber;
            for (std::size_t pos = 0; pos < fine.n; ++pos)
              if (image[pos] == q) fiber.push_back(static_cast<std::uint32_t>(pos));
            std::uint32_t top = fiber.front();
            bool unique_max = false;
            for (std::uint32_t cand : fiber) {
              bool all_below = true;
              for (std::uint32_t other : fiber)
                if (!fine.less_eq(other, cand)) {
                  all_below = false;
                  break;
                }
              if (all_below) {
                top = cand;
                unique_max = true;
                break;
              }
            }
            if (!unique_max) {
              log.add(coarse.fam.at(q).length(),
                      "I=" + S(i) + " J=" + S(j) + " K=" + S(k) + " L=" + S(l) + " q=" +
                          W(g, coarse.fam.at(q).min_elem()) +
                          ": fiber has no unique maximum");
              continue;
            }
            for (std::size_t p = 0; p < fine.n; ++p) {
              ++universe;
              const bool in_preimage = coarse.less_eq(image[p], q);
              const bool below_top = fine.less_eq(p, top);
              if (in_preimage != below_top)
                log.add(fine.fam.at(p).length() + coarse.fam.at(q).length(),
                        "I=" + S(i) + " J=" + S(j) + " K=" + S(k) + " L=" + S(l) +
                            " p=" + W(g, fine.fam.at(p).min_elem()) + " q=" +
                            W(g, coarse.fam.at(q).min_elem()) +
                            ": preimage of {<=q} is not {<= fiber max}");
            }
          }
        }
    }
  return universe;
}

std::uint64_t check_coset_structure(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  for (GenSet i : subsets)
    for (GenSet j : subsets) {
      FamilyOrder& fo = ctx.family(i, j);
      const std::string here = "I=" + S(i) + " J=" + S(j);
      std::uint64_t total = 0;
      int zero_length = 0;
      for (std::size_t pos = 0; pos < fo.n; ++pos) {
        ++universe;
        const DoubleCoset p = fo.fam.at(pos);
        total += p.size();
        if (p.length() == 0) ++zero_length;
        const std::string at = here + " p.min=" + W(g, p.min_elem());
        if (pos + 1 < fo.n) {
          const DoubleCoset nxt = fo.fam.at(pos + 1);
          if (std::make_pair(p.length(), p.min_elem().idx) >=
              std::make_pair(nxt.length(), nxt.min_elem().idx))
            log.add(p.length(), at + ": family order is not (length, min)");
        }
        if (g.demazure(g.demazure(g.longest_element(i), p.min_elem()),
                       g.longest_element(j)) != p.max_elem())
          log.add(p.length(), at + ": max != w_I * min * w_J");
        if (p.length() != 2 * g.length(p.max_elem()) - g.parabolic_length(i) -
                              g.parabolic_length(j))
          log.add(p.length(), at + ": length formula violated");
        if (p.size() * g.parabolic_order(p.right_redundancy()) !=
            g.parabolic_order(i) * g.parabolic_order(j))
          log.add(p.length(), at + ": size formula violated");
        if (g.parabolic_order(p.left_redundancy()) !=
            g.parabolic_order(p.right_redundancy()))
          log.add(p.length(), at + ": redundancy subgroups differ in size");
        const auto elems = p.element_indices();
        if (elems.size() > 1) {
          if (g.length(Element{elems[1]}) <= g.length(p.min_elem()))
            log.add(p.length(), at + ": min is not the unique shortest element");
          if (g.length(Element{elems[elems.size() - 2]}) >= g.length(p.max_elem()))
            log.add(p.length(), at + ": max is not the unique longest element");
        }
        const SinglestepExpr rex = find_reduced_expression(p);
        if (!is_reduced(rex) || !(expressed_coset(rex) == p) ||
            expr_length(rex) != p.length())
          log.add(p.length(), at + ": found reduced expression fails its contract");
      }
      if (total != g.size())
        log.add(0, here + ": coset sizes sum to " + std::to_string(total) +
                        ", not |W|");
      const int expected_zero = i == j ? 1 : 0;
      if (zero_length != expected_zero)
        log.add(0, here + ": " + std::to_string(zero_length) +
                        " cosets of length zero, expected " +
                        std::to_string(expected_zero));
      if (i == j && !(fo.fam.at(0).min_elem() == g.identity()))
        log.add(0, here + ": the length-zero coset does not contain the identity");
    }
  return universe;
}

std::uint64_t check_length_order(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  for (GenSet i : all_subsets(g))
    for (GenSet j : all_subsets(g)) {
      FamilyOrder& fo = ctx.family(i, j);
      for (std::size_t p = 0; p < fo.n; ++p)
        for (std::size_t q = 0; q < fo.n; ++q) {
          ++universe;
          if (!fo.less_eq(q, p)) continue;
          const DoubleCoset cp = fo.fam.at(p), cq = fo.fam.at(q);
          if (cq.length() > cp.length() || (cq.length() == cp.length() && p != q))
            log.add(cp.length() + cq.length(),
                    "I=" + S(i) + " J=" + S(j) + " q.min=" + W(g, cq.min_elem()) +
                        " p.min=" + W(g, cp.min_elem()) +
                        ": order does not respect length");
        }
    }
  return universe;
}

/* ------------------------------------------------------------------ */
/* Expression and path checks                                          */
/* ------------------------------------------------------------------ */

std::uint64_t check_expr_structure(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  for (const ExprInfo& info : ctx.universe()) {
    ++universe;
    const SinglestepExpr& e = info.expr;
    const std::string at = "E=" + render_expr(e);
    const MultistepExpr ms = to_multistep(e);
    if (info.length != expr_length(ms))
      log.add(info.length, at + ": singlestep and multistep lengths differ");
    if (!(to_multistep(to_singlestep(ms)) == ms))
      log.add(info.length, at + ": multistep round-trip is not the identity");
    FamilyOrder& fo = ctx.family(e.front(), e.back());
    const int coset_len = fo.fam.at(info.coset_pos).length();
    if (info.reduced != (info.length == coset_len))
      log.add(info.length,
              at + ": reducedness disagrees with expression length vs coset length");
    if (info.reduced && e.width() > 0) {
      for (std::size_t a = 0; a < e.width(); ++a)
        for (std::size_t b = a + 1; b <= e.width(); ++b) {
          std::vector<GenSet> part(e.subsets().begin() + a, e.subsets().begin() + b + 1);
          if (!is_reduced(SinglestepExpr(g, part)))
            log.add(info.length,
                    at + ": contiguous subexpression is not reduced");
        }
    }
  }
  // Concatenation of reduced expressions is reduced iff the cosets
  // compose reducedly.
  for (const ExprInfo& a : ctx.universe()) {
    if (!a.reduced) continue;
    for (std::uint32_t bid : ctx.by_front(a.expr.back())) {
      const ExprInfo& b = ctx.universe()[bid];
      if (!b.reduced) continue;
      if (a.expr.width() + b.expr.width() > static_cast<std::size_t>(ctx.cap())) continue;
      ++universe;
      FamilyOrder& fa = ctx.family(a.expr.front(), a.expr.back());
      FamilyOrder& fb = ctx.family(b.expr.front(), b.expr.back());
      const DoubleCoset pa = fa.fam.at(a.coset_pos);
      const DoubleCoset pb = fb.fam.at(b.coset_pos);
      const bool concat_reduced = is_reduced(concat(a.expr, b.expr));
      const bool composes = reduced_compose(pa, pb).has_value();
      if (concat_reduced != composes)
        log.add(a.length + b.length,
                "E=" + render_expr(a.expr) + " F=" + render_expr(b.expr) +
                    ": concat reduced iff composition reduced fails");
    }
  }
  // Reduced composition against its product criterion.
  for (GenSet i : all_subsets(g))
    for (GenSet j : all_subsets(g))
      for (GenSet k : all_subsets(g)) {
        FamilyOrder& fpq = ctx.family(i, j);
        FamilyOrder& fqr = ctx.family(j, k);
        const Element wj = g.longest_element(j);
        for (std::size_t a = 0; a < fpq.n; ++a)
          for (std::size_t b = 0; b < fqr.n; ++b) {
            ++universe;
            const DoubleCoset p = fpq.fam.at(a), q = fqr.fam.at(b);
            const Element u = g.multiply(wj, q.max_elem());  // w_J^-1 max(q)
            const Element top = g.multiply(p.max_elem(), u);
            const bool criterion =
                g.length(u) == g.length(q.max_elem()) - g.parabolic_length(j) &&
                g.length(top) == g.length(p.max_elem()) + g.length(u);
            const auto composed = reduced_compose(p, q);
            if (criterion != composed.has_value() ||
                (composed && !(composed->max_elem() == top)))
              log.add(p.length() + q.length(),
                      "I=" + S(i) + " J=" + S(j) + " K=" + S(k) + " p.min=" +
                          W(g, p.min_elem()) + " q.min=" + W(g, q.min_elem()) +
                          ": reduced composition disagrees with its criterion");
          }
      }
  return universe;
}

std::uint64_t check_term_downset(Ctx& ctx, FailureLog& log) {
  std::uint64_t universe = 0;
  for (const ExprInfo& info : ctx.universe()) {
    ++universe;
    FamilyOrder& fo = ctx.family(info.expr.front(), info.expr.back());
    if (info.term_pos != fo.down[info.coset_pos])
      log.add(info.length, "E=" + render_expr(info.expr) +
                               ": Term(E) differs from the lower set of its coset");
  }
  return universe;
}

std::uint64_t check_bruhat_equiv(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  for (GenSet i : all_subsets(g))
    for (GenSet j : all_subsets(g)) {
      FamilyOrder& fo = ctx.family(i, j);
      const std::string here = "I=" + S(i) + " J=" + S(j);
      for (std::size_t a = 0; a < fo.n; ++a) {
        const DoubleCoset pa = fo.fam.at(a);
        for (std::size_t b = 0; b < fo.n; ++b) {
          ++universe;
          const DoubleCoset pb = fo.fam.at(b);
          const bool by_min = fo.less_eq(a, b);
          const bool by_max = ctx.leq(pa.max_elem(), pb.max_elem());
          if (by_min != by_max)
            log.add(pa.length() + pb.length(),
                    here + " p.min=" + W(g, pa.min_elem()) + " q.min=" +
                        W(g, pb.min_elem()) + ": min and max comparisons disagree");
        }
      }
      // Termini of one reduced expression per coset.
      for (std::size_t b = 0; b < fo.n; ++b) {
        ++universe;
        const DoubleCoset q = fo.fam.at(b);
        const auto terms = term_positions(find_reduced_expression(q));
        if (terms != fo.down[b])
          log.add(q.length(),
                  here + " q.min=" + W(g, q.min_elem()) +
                      ": termini of its reduced expression are not {<= q}");
      }
    }
  // Termini of every capped expression.
  for (const ExprInfo& info : ctx.universe()) {
    ++universe;
    FamilyOrder& fo = ctx.family(info.expr.front(), info.expr.back());
    if (info.term_pos != fo.down[info.coset_pos])
      log.add(info.length,
              "E=" + render_expr(info.expr) +
                  ": termini of an expression differ from the lower set of its coset");
  }
  return universe;
}

std::uint64_t check_term_star(Ctx& ctx, FailureLog& log) {
  std::uint64_t universe = 0;
  for (const ExprInfo& a : ctx.universe()) {
    FamilyOrder& fa = ctx.family(a.expr.front(), a.expr.back());
    for (std::uint32_t bid : ctx.by_front(a.expr.back())) {
      const ExprInfo& b = ctx.universe()[bid];
      if (a.expr.width() + b.expr.width() > static_cast<std::size_t>(ctx.cap())) continue;
      std::vector<GenSet> joined = a.expr.subsets();
      joined.insert(joined.end(), b.expr.subsets().begin() + 1, b.expr.subsets().end());
      const ExprInfo* ab = ctx.find_expr(joined);
      if (!ab) throw Error("internal error: capped universe is missing a concatenation");
      FamilyOrder& fb = ctx.family(b.expr.front(), b.expr.back());
      for (std::uint32_t ta : a.term_pos)
        for (std::uint32_t tb : b.term_pos) {
          ++universe;
          const DoubleCoset prod = coset_star(fa.fam.at(ta), fb.fam.at(tb));
          if (!std::binary_search(ab->term_pos.begin(), ab->term_pos.end(),
                                  static_cast<std::uint32_t>(prod.position())))
            log.add(a.length + b.length,
                    "E=" + render_expr(a.expr) + " F=" + render_expr(b.expr) +
                        ": Term(E)*Term(F) escapes Term(E o F)");
        }
    }
  }
  return universe;
}

std::uint64_t check_term_up(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  for (const ExprInfo& info : ctx.universe()) {
    if (static_cast<int>(info.expr.width()) >= ctx.cap()) continue;
    const GenSet j = info.expr.back();
    FamilyOrder& fo = ctx.family(info.expr.front(), j);
    for (int s = 0; s < g.rank(); ++s) {
      if (j.contains(s)) continue;
      ++universe;
      const GenSet js = j.with(s);
      std::vector<GenSet> joined = info.expr.subsets();
      joined.push_back(js);
      const ExprInfo* up = ctx.find_expr(joined);
      if (!up) throw Error("internal error: capped universe is missing a step extension");
      const DoubleCoset step = coset_of(g, g.identity(), j, js);
      std::vector<std::uint32_t> expect;
      for (std::uint32_t t : info.term_pos)
        expect.push_back(
            static_cast<std::uint32_t>(coset_star(fo.fam.at(t), step).position()));
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      if (expect != up->term_pos)
        log.add(info.length, "E=" + render_expr(info.expr) + " s=" +
                                 std::to_string(s + 1) +
                                 ": Term(E o [J,Js]) != Term(E)*(W_J W_Js)");
    }
  }
  return universe;
}

std::uint64_t check_term_down(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  for (const ExprInfo& info : ctx.universe()) {
    if (static_cast<int>(info.expr.width()) >= ctx.cap()) continue;
    const GenSet j = info.expr.back();
    FamilyOrder& fo = ctx.family(info.expr.front(), j);
    for (int t : j) {
      ++universe;
      const GenSet jt = j.without(t);
      std::vector<GenSet> joined = info.expr.subsets();
      joined.push_back(jt);
      const ExprInfo* down = ctx.find_expr(joined);
      if (!down) throw Error("internal error: capped universe is missing a step extension");
      std::vector<std::uint32_t> contained;
      std::vector<std::uint32_t> starred;
      const DoubleCoset step = coset_of(g, g.identity(), j, jt);
      for (std::uint32_t tp : info.term_pos) {
        const DoubleCoset p = fo.fam.at(tp);
        for (const DoubleCoset& sub : sub_cosets(p, jt))
          contained.push_back(static_cast<std::uint32_t>(sub.position()));
        starred.push_back(
            static_cast<std::uint32_t>(coset_star(p, step).position()));
      }
      std::sort(contained.begin(), contained.end());
      contained.erase(std::unique(contained.begin(), contained.end()),
                      contained.end());
      std::sort(starred.begin(), starred.end());
      starred.erase(std::unique(starred.begin(), starred.end()), starred.end());
      if (contained != down->term_pos)
        log.add(info.length,
                "E=" + render_expr(info.expr) + " t=" + std::to_string(t + 1) +
                    ": Term(E o [J,J\\t]) != contained cosets of Term(E)");
      if (!std::includes(down->term_pos.begin(), down->term_pos.end(),
                         starred.begin(), starred.end()))
        log.add(info.length,
                "E=" + render_expr(info.expr) + " t=" + std::to_string(t + 1) +
                    ": Term(E)*(W_J W_J\\t) escapes Term(E o [J,J\\t])");
    }
  }
  return universe;
}

std::uint64_t check_unique_forward(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  auto examine = [&](const SinglestepExpr& e, const DoubleCoset& p,
                     const std::string& what) {
    const SubordinatePath fwd = forward_path(e);
    std::size_t hits = 0;
    bool fwd_seen = false;
    for (const SubordinatePath& path : enumerate_paths(e))
      if (path.terminus() == p) {
        ++hits;
        if (path == fwd) fwd_seen = true;
      }
    if (hits != 1 || !fwd_seen)
      log.add(p.length(), what + ": expected exactly the forward path to reach the "
                                 "coset, found " +
                              std::to_string(hits));
  };
  for (GenSet i : all_subsets(g))
    for (GenSet j : all_subsets(g)) {
      FamilyOrder& fo = ctx.family(i, j);
      for (std::size_t pos = 0; pos < fo.n; ++pos) {
        ++universe;
        const DoubleCoset p = fo.fam.at(pos);
        examine(find_reduced_expression(p), p,
                "I=" + S(i) + " J=" + S(j) + " p.min=" + W(g, p.min_elem()));
      }
    }
  for (const ExprInfo& info : ctx.universe()) {
    if (!info.reduced) continue;
    ++universe;
    FamilyOrder& fo = ctx.family(info.expr.front(), info.expr.back());
    examine(info.expr, fo.fam.at(info.coset_pos), "E=" + render_expr(info.expr));
  }
  return universe;
}

std::uint64_t check_concat_leq(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  for (GenSet i : subsets)
    for (GenSet j : subsets) {
      FamilyOrder& fq = ctx.family(i, j);
      for (std::size_t qi = 0; qi < fq.n; ++qi) {
        const DoubleCoset q = fq.fam.at(qi);
        for (std::uint32_t qpi : fq.down[qi]) {
          const DoubleCoset qp = fq.fam.at(qpi);
          for (GenSet k : subsets) {
            FamilyOrder& fp = ctx.family(k, i);
            for (std::size_t pi = 0; pi < fp.n; ++pi) {
              const DoubleCoset p = fp.fam.at(pi);
              const DoubleCoset pq = coset_star(p, q);
              const DoubleCoset pqp = coset_star(p, qp);
              for (GenSet l : subsets) {
                FamilyOrder& fr = ctx.family(j, l);
                FamilyOrder& fout = ctx.family(k, l);
                for (std::size_t ri = 0; ri < fr.n; ++ri) {
                  ++universe;
                  const DoubleCoset r = fr.fam.at(ri);
                  const std::size_t lo = coset_star(pqp, r).position();
                  const std::size_t hi = coset_star(pq, r).position();
                  if (!fout.less_eq(lo, hi))
                    log.add(p.length() + q.length() + qp.length() + r.length(),
                            "K=" + S(k) + " I=" + S(i) + " J=" + S(j) + " L=" + S(l) +
                                " p.min=" + W(g, p.min_elem()) + " q'.min=" +
                                W(g, qp.min_elem()) + " q.min=" + W(g, q.min_elem()) +
                                " r.min=" + W(g, r.min_elem()) +
                                ": p*q'*r is not <= p*q*r");
                }
              }
            }
          }
        }
      }
    }
  return universe;
}

std::uint64_t check_concat_strict(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  for (GenSet i : subsets)
    for (GenSet j : subsets) {
      FamilyOrder& fq = ctx.family(i, j);
      for (std::size_t qi = 0; qi < fq.n; ++qi) {
        const DoubleCoset q = fq.fam.at(qi);
        for (std::uint32_t qpi : fq.down[qi]) {
          if (qpi == qi) continue;  // need q' < q
          const DoubleCoset qp = fq.fam.at(qpi);
          for (GenSet k : subsets) {
            FamilyOrder& fp = ctx.family(k, i);
            for (std::size_t pi = 0; pi < fp.n; ++pi) {
              const DoubleCoset p = fp.fam.at(pi);
              const auto pq = reduced_compose(p, q);
              if (!pq) continue;
              const DoubleCoset pqp = coset_star(p, qp);
              for (GenSet l : subsets) {
                FamilyOrder& fr = ctx.family(j, l);
                FamilyOrder& fout = ctx.family(k, l);
                for (std::size_t ri = 0; ri < fr.n; ++ri) {
                  const DoubleCoset r = fr.fam.at(ri);
                  const auto pqr = reduced_compose(*pq, r);
                  if (!pqr) continue;
                  ++universe;
                  const std::size_t lo = coset_star(pqp, r).position();
                  const std::size_t hi = pqr->position();
                  if (!fout.less_eq(lo, hi) || lo == hi)
                    log.add(p.length() + q.length() + qp.length() + r.length(),
                            "K=" + S(k) + " I=" + S(i) + " J=" + S(j) + " L=" + S(l) +
                                " p.min=" + W(g, p.min_elem()) + " q'.min=" +
                                W(g, qp.min_elem()) + " q.min=" + W(g, q.min_elem()) +
                                " r.min=" + W(g, r.min_elem()) +
                                ": p*q'*r is not < p.q.r");
                }
              }
            }
          }
        }
      }
    }
  return universe;
}

std::uint64_t check_star_absorb(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  const GenSet full = GenSet::all(g.rank());
  for (GenSet i : subsets)
    for (GenSet j : subsets) {
      FamilyOrder& fq = ctx.family(i, j);
      const DoubleCoset r = coset_of(g, g.identity(), j, full);
      for (std::size_t qi = 0; qi < fq.n; ++qi) {
        const DoubleCoset q = fq.fam.at(qi);
        for (std::uint32_t qpi : fq.down[qi]) {
          if (qpi == qi) continue;
          const DoubleCoset qp = fq.fam.at(qpi);
          for (GenSet k : subsets) {
            FamilyOrder& fp = ctx.family(k, i);
            for (std::size_t pi = 0; pi < fp.n; ++pi) {
              ++universe;
              const DoubleCoset p = fp.fam.at(pi);
              if (!(coset_star(coset_star(p, qp), r) == coset_star(coset_star(p, q), r)))
                log.add(p.length() + q.length() + qp.length(),
                        "K=" + S(k) + " I=" + S(i) + " J=" + S(j) + " p.min=" +
                            W(g, p.min_elem()) + " q'.min=" + W(g, qp.min_elem()) +
                            " q.min=" + W(g, q.min_elem()) +
                            ": star with the full quotient failed to absorb");
            }
          }
        }
      }
    }
  return universe;
}

std::uint64_t check_star_inclusion(Ctx& ctx, FailureLog& log) {
  const CoxeterGroup& g = ctx.g;
  std::uint64_t universe = 0;
  const auto subsets = all_subsets(g);
  for (GenSet j : subsets)
    for (GenSet k : subsets) {
      FamilyOrder& fq = ctx.family(j, k);
      for (GenSet kp : subsets) {
        if (!kp.subset_of(k) || kp == k) continue;
        for (std::size_t qi = 0; qi < fq.n; ++qi) {
          const DoubleCoset q = fq.fam.at(qi);
          for (const DoubleCoset& qp : sub_cosets(q, kp))
            for (GenSet i : subsets) {
              FamilyOrder& fp = ctx.family(i, j);
              for (std::size_t pi = 0; pi < fp.n; ++pi) {
                ++universe;
                const DoubleCoset p = fp.fam.at(pi);
                const auto big = coset_star(p, q).element_indices();
                const auto small = coset_star(p, qp).element_indices();
                if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                  log.add(p.length() + q.length(),
                          "I=" + S(i) + " J=" + S(j) + " K=" + S(k) + " K'=" + S(kp) +
                              " p.min=" + W(g, p.min_elem()) + " q.min=" +
                              W(g, q.min_elem()) + " q'.min=" + W(g, qp.min_elem()) +
                              ": p*q' is not contained in p*q");
              }
            }
        }
      }
    }
  return universe;
}

std::uint64_t check_concat_subordinate(Ctx& ctx, FailureLog& log) {
  std::uint64_t universe = 0;
  std::map<std::uint32_t, std::vector<SubordinatePath>> path_cache;
  auto paths_of = [&](std::uint32_t id) -> const std::vector<SubordinatePath>& {
    auto it = path_cache.find(id);
    if (it == path_cache.end())
      it = path_cache.emplace(id, enumerate_paths(ctx.universe()[id].expr)).first;
    return it->second;
  };
  const auto& universe_exprs = ctx.universe();
  for (std::uint32_t aid = 0; aid < universe_exprs.size(); ++aid) {
    const ExprInfo& a = universe_exprs[aid];
    for (std::uint32_t bid : ctx.by_front(a.expr.back())) {
      const ExprInfo& b = universe_exprs[bid];
      if (a.expr.width() + b.expr.width() > static_cast<std::size_t>(ctx.cap())) continue;
      for (const SubordinatePath& pp : paths_of(aid))
        for (const SubordinatePath& qq : paths_of(bid)) {
          ++universe;
          const SubordinatePath joined = concat_paths(pp, qq);
          const DoubleCoset expect =
              coset_star(pp.terminus(), qq.terminus());
          if (!is_subordinate(joined) || !(joined.terminus() == expect))
            log.add(a.length + b.length,
                    "E=" + render_expr(a.expr) + " F=" + render_expr(b.expr) +
                        " p.min=" + W(ctx.g, pp.terminus().min_elem()) + " q.min=" +
                        W(ctx.g, qq.terminus().min_elem()) +
                        ": concatenated path is not subordinate with star terminus");
        }
    }
  }
  return universe;
}

std::uint64_t check_forward_concat(Ctx& ctx, FailureLog& log) {
  std::uint64_t universe = 0;
  const auto& universe_exprs = ctx.universe();
  std::map<std::uint32_t, SubordinatePath> fwd_cache;
  auto fwd_of = [&](std::uint32_t id) -> const SubordinatePath& {
    auto it = fwd_cache.find(id);
    if (it == fwd_cache.end())
      it = fwd_cache.emplace(id, forward_path(universe_exprs[id].expr)).first;
    return it->second;
  };
  for (std::uint32_t aid = 0; aid < universe_exprs.size(); ++aid) {
    const ExprInfo& a = universe_exprs[aid];
    for (std::uint32_t bid : ctx.by_front(a.expr.back())) {
      const ExprInfo& b = universe_exprs[bid];
      if (a.expr.width() + b.expr.width() > static_cast<std::size_t>(ctx.cap())) continue;
      ++universe;
      const SubordinatePath joined = concat_paths(fwd_of(aid), fwd_of(bid));
      std::vector<GenSet> subsets = a.expr.subsets();
      subsets.insert(subsets.end(), b.expr.subsets().begin() + 1,
                     b.expr.subsets().end());
      const SubordinatePath direct = forward_path(SinglestepExpr(ctx.g, subsets));
      if (!(joined == direct) || !is_forward(joined))
        log.add(a.length + b.length,
                "E=" + render_expr(a.expr) + " F=" + render_expr(b.expr) +
                    ": concatenation of forward paths is not the forward path");
    }
  }
  return universe;
}

/* ------------------------------------------------------------------ */
/* Registry                                                            */
/* ------------------------------------------------------------------ */

struct CheckDef {
  const char* name;
  const char* statement;
  std::uint64_t (*run)(Ctx&, FailureLog&);
};

const CheckDef kChecks[] = {
    {"star-monotone", "a <= b implies a*c <= b*c and c*a <= c*b", check_star_monotone},
    {"lifting",
     "for v <= w and any x some x' <= x has vx <= w.x' with l(w.x') = l(w)+l(x'), and "
     "mirrored",
     check_lifting},
    {"lifting-factor",
     "for v <= w = z.x some x' <= x^-1 has vx' <= z, and mirrored for w = x.z",
     check_lifting_factor},
    {"projection",
     "the quotient map to coarser types is monotone and pulls lower sets back to the "
     "lower set of the unique fiber maximum",
     check_projection},
    {"bruhat-oracle",
     "the descent recursion for <= agrees with the subsequence-product oracle",
     check_bruhat_oracle},
    {"demazure-assoc",
     "the star product is associative (exhaustive up to |W| = 48, sampled beyond)",
     check_demazure_assoc},
    {"coset-structure",
     "max = w_I * min * w_J, length matches a found reduced expression, the size "
     "formula holds, extremes are unique, families partition W in (length, min) order",
     check_coset_structure},
    {"expr-structure",
     "singlestep and multistep lengths agree, reduced iff length equals the coset "
     "length, contiguous subexpressions of reduced expressions are reduced, "
     "concatenation is reduced iff the composition is, and the composition criterion "
     "holds",
     check_expr_structure},
    {"bruhat-equiv",
     "p <= q iff max(p) <= max(q) iff p is a terminus of a reduced expression for q "
     "iff p is a terminus of every capped expression for q",
     check_bruhat_equiv},
    {"term-downset", "Term(E) equals the lower set of the expressed coset",
     check_term_downset},
    {"term-star", "Term(E)*Term(F) lies inside Term(E o F)", check_term_star},
    {"term-up", "Term(E o [J,Js]) = Term(E)*(W_J W_Js)", check_term_up},
    {"term-down",
     "Term(E o [J,J\\t]) is the set of cosets contained in members of Term(E) and "
     "contains Term(E)*(W_J W_J\\t)",
     check_term_down},
    {"length-order", "q <= p implies l(q) <= l(p), with equality only at q = p",
     check_length_order},
    {"unique-forward",
     "a reduced expression has exactly one subordinate path reaching its own coset, "
     "the forward path",
     check_unique_forward},
    {"concat-leq", "q' <= q implies p*q'*r <= p*q*r", check_concat_leq},
    {"concat-strict", "q' < q with p.q.r reduced implies p*q'*r < p.q.r",
     check_concat_strict},
    {"star-absorb",
     "with r the one-coset quotient by the whole group, p*q'*r = p*q*r even for "
     "q' < q",
     check_star_absorb},
    {"star-inclusion", "q' contained in q with finer right type implies p*q' lies in p*q",
     check_star_inclusion},
    {"concat-subordinate",
     "a concatenation of subordinate paths is subordinate, with terminus the star of "
     "the termini",
     check_concat_subordinate},
    {"forward-concat", "a concatenation of forward paths is the forward path",
     check_forward_concat},
};

}  // namespace

const std::vector<std::pair<std::string, std::string>>& check_manifest() {
  static const std::vector<std::pair<std::string, std::string>> manifest = [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CheckDef& def : kChecks) out.emplace_back(def.name, def.statement);
    return out;
  }();
  return manifest;
}

std::vector<CheckResult> run_suite(const CoxeterGroup& g, const SuiteOptions& opts) {
  if (opts.width_cap < 0) throw Error("width cap must be >= 0");
  std::vector<const CheckDef*> selected;
  if (opts.checks.empty()) {
    for (const CheckDef& def : kChecks) selected.push_back(&def);
  } else {
    for (const std::string& name : opts.checks) {
      const CheckDef* found = nullptr;
      for (const CheckDef& def : kChecks)
        if (name == def.name) {
          found = &def;
          break;
        }
      if (!found) throw UnknownCheckName("unknown check '" + name + "'");
      selected.push_back(found);
    }
    // Report order follows the registry regardless of request order.
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }

  Ctx ctx(g, opts);
  std::vector<CheckResult> results;
  for (const CheckDef* def : selected) {
    FailureLog log(opts.max_failures);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t universe = def->run(ctx, log);
    const auto stop = std::chrono::steady_clock::now();
    CheckResult res;
    res.check = def->name;
    res.group = g.name();
    res.universe = universe;
    res.failures = log.take();
    res.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    results.push_back(std::move(res));
  }
  return results;
}

void write_report_tsv(std::ostream& out, std::span<const CheckResult> results) {
  out << "check\tgroup\tuniverse\tfailures\tstatus\n";
  for (const CheckResult& r : results)
    out << r.check << '\t' << r.group << '\t' << r.universe << '\t' << r.failures.size()
        << '\t' << (r.passed() ? "pass" : "FAIL") << '\n';
}

void write_report_summary(std::ostream& out, std::span<const CheckResult> results) {
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    if (r.passed()) {
      ++passed;
      out << "[PASS] " << r.check << " (" << r.universe << " tuples)\n";
    } else {
      out << "[FAIL] " << r.check << " (" << r.universe << " tuples, "
          << r.failures.size() << " counterexamples)\n";
      for (const std::string& f : r.failures) out << "       " << f << '\n';
    }
  }
  out << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace dcoset
