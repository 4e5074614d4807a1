#include "dcoset/expression.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "dcoset/detail/caches.hpp"

namespace dcoset {

namespace {

std::string chain_str(const std::vector<GenSet>& subsets) {
  std::string out;
  for (GenSet s : subsets) {
    if (!out.empty()) out += ',';
    out += '[';
    bool first = true;
    for (int g : s) {
      if (!first) out += ' ';
      out += std::to_string(g + 1);
      first = false;
    }
    out += ']';
  }
  return out;
}

}  // namespace

SinglestepExpr::SinglestepExpr(const CoxeterGroup& g, std::vector<GenSet> subsets)
    : group_(&g), subsets_(std::move(subsets)) {
  if (subsets_.empty()) throw InvalidChain("an expression needs at least one subset");
  const GenSet everything = GenSet::all(g.rank());
  for (GenSet s : subsets_)
    if (!s.subset_of(everything))
      throw InvalidChain("subset out of rank range in " + chain_str(subsets_));
  for (std::size_t k = 1; k < subsets_.size(); ++k) {
    const GenSet a = subsets_[k - 1];
    const GenSet b = subsets_[k];
    const int delta = ((a - b) | (b - a)).count();
    if (delta != 1 || !(a.subset_of(b) || b.subset_of(a)))
      throw InvalidChain("adjacent subsets must differ by exactly one generator in " +
                         chain_str(subsets_));
  }
}

MultistepExpr::MultistepExpr(const CoxeterGroup& g, std::vector<GenSet> mins,
                             std::vector<GenSet> maxes)
    : group_(&g), mins_(std::move(mins)), maxes_(std::move(maxes)) {
  if (mins_.empty() || mins_.size() != maxes_.size() + 1)
    throw InvalidChain("a multistep expression alternates m+1 minima with m maxima");
  const std::size_t m = maxes_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!mins_[i].subset_of(maxes_[i]) || !mins_[i + 1].subset_of(maxes_[i]))
      throw InvalidChain("multistep chain containments violated");
    if (mins_[i] == maxes_[i] && mins_[i + 1] == maxes_[i])
      throw InvalidChain("multistep step neither adds nor removes generators");
  }
  for (std::size_t i = 1; i < m; ++i)
    if (mins_[i] == maxes_[i - 1] || mins_[i] == maxes_[i])
      throw InvalidChain("interior minima of a multistep expression must be strict");
}

Element expressed_max(const SinglestepExpr& e) {
  const CoxeterGroup& g = e.group();
  Element acc = g.longest_element(e.front());
  for (std::size_t k = 1; k < e.subsets().size(); ++k)
    acc = g.demazure(acc, g.longest_element(e.subsets()[k]));
  return acc;
}

DoubleCoset expressed_coset(const SinglestepExpr& e) {
  return coset_of(e.group(), expressed_max(e), e.front(), e.back());
}

int expr_length(const SinglestepExpr& e) {
  const CoxeterGroup& g = e.group();
  int total = 0;
  for (std::size_t k = 1; k < e.subsets().size(); ++k)
    total += std::abs(g.parabolic_length(e.subsets()[k]) -
                      g.parabolic_length(e.subsets()[k - 1]));
  return total;
}

int expr_length(const MultistepExpr& e) {
  const std::size_t m = e.step_count();
  if (m == 0) return 0;
  const CoxeterGroup& g = e.group();
  int total = -g.parabolic_length(e.mins().front()) - g.parabolic_length(e.mins().back());
  for (std::size_t i = 0; i < m; ++i) total += 2 * g.parabolic_length(e.maxes()[i]);
  for (std::size_t i = 1; i + 1 < e.mins().size(); ++i)
    total -= 2 * g.parabolic_length(e.mins()[i]);
  return total;
}

bool is_reduced(const SinglestepExpr& e) {
  const MultistepExpr ms = to_multistep(e);
  const std::size_t m = ms.step_count();
  if (m == 0) return true;
  const CoxeterGroup& g = e.group();
  // Fold the chain factors, insisting on length additivity at every
  // dot. Longest elements are involutions, so w_I^-1 = w_I.
  Element acc = g.identity();
  for (std::size_t i = 0; i < m; ++i) {
    const Element factor =
        g.multiply(g.longest_element(ms.maxes()[i]), g.longest_element(ms.mins()[i + 1]));
    const Element next = g.multiply(acc, factor);
    if (g.length(next) != g.length(acc) + g.length(factor)) return false;
    acc = next;
  }
  const Element tail = g.longest_element(ms.mins().back());
  const Element full = g.multiply(acc, tail);
  if (g.length(full) != g.length(acc) + g.length(tail)) return false;
  return full == expressed_max(e);
}

MultistepExpr to_multistep(const SinglestepExpr& e) {
  const std::vector<GenSet>& s = e.subsets();
  const std::size_t d = e.width();
  std::vector<GenSet> mins{s.front()};
  std::vector<GenSet> maxes;
  std::size_t k = 0;
  while (k < d) {
    std::size_t j = k;
    while (j < d && s[j].subset_of(s[j + 1])) ++j;
    maxes.push_back(s[j]);
    std::size_t i = j;
    while (i < d && s[i + 1].subset_of(s[i])) ++i;
    mins.push_back(s[i]);
    k = i;
  }
  return MultistepExpr(e.group(), std::move(mins), std::move(maxes));
}

SinglestepExpr to_singlestep(const MultistepExpr& e) {
  std::vector<GenSet> out{e.mins().front()};
  for (std::size_t i = 0; i < e.step_count(); ++i) {
    GenSet cur = out.back();
    for (int s : e.maxes()[i] - cur) out.push_back(cur = cur.with(s));
    for (int s : cur - e.mins()[i + 1]) out.push_back(cur = cur.without(s));
  }
  return SinglestepExpr(e.group(), std::move(out));
}

SinglestepExpr concat(const SinglestepExpr& e1, const SinglestepExpr& e2) {
  if (&e1.group() != &e2.group() || e1.back() != e2.front())
    throw JunctionMismatch("cannot concatenate " + chain_str(e1.subsets()) + " with " +
                           chain_str(e2.subsets()));
  std::vector<GenSet> out = e1.subsets();
  out.insert(out.end(), e2.subsets().begin() + 1, e2.subsets().end());
  return SinglestepExpr(e1.group(), std::move(out));
}

/* ------------------------------------------------------------------ */
/* Reduced expression search                                           */
/* ------------------------------------------------------------------ */

namespace {

std::shared_ptr<const detail::RexGraphData> rex_graph(const CoxeterGroup& g) {
  auto& caches = g.caches();
  std::lock_guard<std::mutex> lock(caches.rex_mu);
  if (caches.rex) return caches.rex;

  auto graph = std::make_shared<detail::RexGraphData>();
  const int rank = g.rank();
  const std::uint32_t nmasks = std::uint32_t{1} << rank;
  graph->rank = rank;
  graph->nodes = g.size() * nmasks;
  graph->fwd_to.resize(graph->nodes * rank);
  graph->fwd_w.resize(graph->nodes * rank);

  std::vector<std::uint32_t> indegree(graph->nodes, 0);
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
      const std::size_t node = static_cast<std::size_t>(x) * nmasks + mask;
      for (int t = 0; t < rank; ++t) {
        const GenSet next_set = GenSet::from_mask(mask ^ (std::uint32_t{1} << t));
        const Element y = g.demazure(Element{x}, g.longest_element(next_set));
        const int w = std::abs(g.parabolic_length(next_set) -
                               g.parabolic_length(GenSet::from_mask(mask)));
        const std::size_t to = static_cast<std::size_t>(y.idx) * nmasks + next_set.mask();
        graph->fwd_to[node * rank + t] = static_cast<std::uint32_t>(to);
        graph->fwd_w[node * rank + t] = static_cast<std::uint8_t>(w);
        ++indegree[to];
      }
    }
  graph->rev_off.assign(graph->nodes + 1, 0);
  for (std::size_t v = 0; v < graph->nodes; ++v)
    graph->rev_off[v + 1] = graph->rev_off[v] + indegree[v];
  graph->rev_to.resize(graph->rev_off.back());
  graph->rev_w.resize(graph->rev_off.back());
  std::vector<std::uint32_t> fill(graph->nodes, 0);
  for (std::size_t node = 0; node < graph->nodes; ++node)
    for (int t = 0; t < rank; ++t) {
      const std::uint32_t to = graph->fwd_to[node * rank + t];
      const std::uint32_t slot = graph->rev_off[to] + fill[to]++;
      graph->rev_to[slot] = static_cast<std::uint32_t>(node);
      graph->rev_w[slot] = graph->fwd_w[node * rank + t];
    }
  caches.rex = graph;
  return graph;
}

}  // namespace

SinglestepExpr find_reduced_expression(const DoubleCoset& p) {
  const CoxeterGroup& g = p.group();
  const auto graph = rex_graph(g);
  const std::uint32_t nmasks = std::uint32_t{1} << graph->rank;

  const std::size_t start =
      static_cast<std::size_t>(g.longest_element(p.left_type()).idx) * nmasks +
      p.left_type().mask();
  const std::size_t goal =
      static_cast<std::size_t>(p.max_elem().idx) * nmasks + p.right_type().mask();

  // Exact distance-to-goal on the reversed graph, then a greedy walk
  // from the start taking, among distance-tight moves, additions
  // before removals and small generators first.
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(graph->nodes, kInf);
  using Item = std::pair<int, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[goal] = 0;
  heap.emplace(0, static_cast<std::uint32_t>(goal));
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (std::uint32_t k = graph->rev_off[v]; k < graph->rev_off[v + 1]; ++k) {
      const std::uint32_t u = graph->rev_to[k];
      const int nd = d + graph->rev_w[k];
      if (nd < dist[u]) {
        dist[u] = nd;
        heap.emplace(nd, u);
      }
    }
  }
  if (dist[start] == kInf || dist[start] != p.length())
    throw Error("internal error: reduced expression search failed");

  std::vector<GenSet> subsets{p.left_type()};
  std::size_t cur = start;
  while (cur != goal) {
    const std::uint32_t mask = static_cast<std::uint32_t>(cur % nmasks);
    bool advanced = false;
    for (int pass = 0; pass < 2 && !advanced; ++pass)
      for (int t = 0; t < graph->rank; ++t) {
        const bool adds = !((mask >> t) & 1);
        if (adds != (pass == 0)) continue;
        const std::size_t to = graph->fwd_to[cur * graph->rank + t];
        const int w = graph->fwd_w[cur * graph->rank + t];
        if (dist[to] != kInf && dist[cur] == w + dist[to]) {
          subsets.push_back(GenSet::from_mask(mask ^ (std::uint32_t{1} << t)));
          cur = to;
          advanced = true;
          break;
        }
      }
    if (!advanced) throw Error("internal error: reduced expression walk got stuck");
  }
  return SinglestepExpr(g, std::move(subsets));
}

}  // namespace dcoset
