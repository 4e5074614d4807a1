#include "dcoset/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dcoset/detail/caches.hpp"

namespace dcoset {

namespace {
constexpr std::uint32_t kUnset = ~std::uint32_t{0};
}

/* ------------------------------------------------------------------ */
/* CoxeterMatrix                                                       */
/* ------------------------------------------------------------------ */

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 1) throw Error("Coxeter matrix rank must be positive");
  if (entries_.size() != static_cast<std::size_t>(rank) * rank)
    throw Error("Coxeter matrix entry table has wrong size");
  for (int s = 0; s < rank; ++s) {
    if (m(s, s) != 1) throw Error("Coxeter matrix diagonal must be 1");
    for (int t = 0; t < rank; ++t) {
      if (m(s, t) != m(t, s)) throw Error("Coxeter matrix must be symmetric");
      if (s != t && m(s, t) < 2)
        throw Error("Coxeter matrix off-diagonal entries must be >= 2");
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_bonds(
    int rank, const std::vector<std::tuple<int, int, int>>& bonds) {
  if (rank < 1) throw Error("Coxeter matrix rank must be positive");
  std::vector<int> entries(static_cast<std::size_t>(rank) * rank, 2);
  for (int s = 0; s < rank; ++s) entries[static_cast<std::size_t>(s) * rank + s] = 1;
  for (auto [i, j, v] : bonds) {
    if (i < 0 || j < 0 || i >= rank || j >= rank || i == j)
      throw Error("Coxeter matrix bond indices out of range");
    entries[static_cast<std::size_t>(i) * rank + j] = v;
    entries[static_cast<std::size_t>(j) * rank + i] = v;
  }
  return CoxeterMatrix(rank, std::move(entries));
}

/* ------------------------------------------------------------------ */
/* Word canonicalization                                               */
/* ------------------------------------------------------------------ */

namespace {

// Returns the position of an adjacent equal pair, or npos.
std::size_t find_nil_pair(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return i;
  return Word::npos;
}

// Appends every word obtained from `u` by one braid move.
void braid_neighbors(const CoxeterMatrix& m, const Word& u, std::vector<Word>& out) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const char s = u[i];
    const char t = u[i + 1];
    if (s == t) continue;
    const std::size_t len = static_cast<std::size_t>(m.m(s, t));
    if (i + len > u.size()) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < len; ++k) {
      if (u[i + k] != (k % 2 ? t : s)) {
        alternating = false;
        break;
      }
    }
    if (!alternating) continue;
    Word v = u;
    for (std::size_t k = 0; k < len; ++k) v[i + k] = (k % 2 ? s : t);
    out.push_back(std::move(v));
  }
}

}  // namespace

Word canonical_word(const CoxeterMatrix& m, Word w) {
  // Explore the braid orbit; whenever a word with an adjacent equal
  // pair shows up, delete the pair and start over on the shorter word.
  // The length drops at every restart, so this terminates with the
  // lexicographically least reduced word of the orbit (ShortLex least,
  // since the orbit of a reduced word has constant length).
  for (;;) {
    std::unordered_set<Word> seen{w};
    std::deque<Word> queue{w};
    Word best = w;
    bool restarted = false;
    std::vector<Word> next;
    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      if (std::size_t i = find_nil_pair(u); i != Word::npos) {
        u.erase(i, 2);
        w = std::move(u);
        restarted = true;
        break;
      }
      if (u < best) best = u;
      next.clear();
      braid_neighbors(m, u, next);
      for (Word& v : next)
        if (seen.insert(v).second) queue.push_back(std::move(v));
    }
    if (!restarted) return best;
  }
}

/* ------------------------------------------------------------------ */
/* CoxeterGroup                                                        */
/* ------------------------------------------------------------------ */

CoxeterGroup::CoxeterGroup(const CoxeterMatrix& matrix, std::size_t cap,
                           std::string name)
    : matrix_(matrix),
      cap_(cap),
      name_(std::move(name)),
      caches_(std::make_unique<detail::GroupCaches>()) {
  if (cap < 1) throw Error("enumeration cap must be >= 1");
  build(cap);
}

CoxeterGroup::~CoxeterGroup() = default;

void CoxeterGroup::build(std::size_t cap) {
  const int rank = matrix_.rank();
  words_.push_back(Word{});
  word_index_.emplace(Word{}, 0);
  right_.assign(static_cast<std::size_t>(rank), kUnset);

  // Level-by-level BFS over right multiplication. Descent edges of a
  // new element are filled from below before its level is processed,
  // so the canonicalizer only ever runs on ascents here.
  std::vector<std::uint32_t> level{0};
  while (!level.empty()) {
    struct EdgeRequest {
      std::uint32_t from;
      int gen;
      Word target;
    };
    std::vector<EdgeRequest> requests;
    std::vector<Word> fresh;
    for (std::uint32_t w : level) {
      for (int s = 0; s < rank; ++s) {
        if (right_[w * static_cast<std::size_t>(rank) + s] != kUnset) continue;
        Word cand = words_[w];
        cand.push_back(static_cast<char>(s));
        Word canon = canonical_word(matrix_, std::move(cand));
        if (!word_index_.contains(canon)) {
          fresh.push_back(canon);
          word_index_.emplace(canon, kUnset);  // placeholder, dedups fresh
        }
        requests.push_back({w, s, std::move(canon)});
      }
    }
    std::sort(fresh.begin(), fresh.end());
    std::vector<std::uint32_t> next_level;
    for (Word& nw : fresh) {
      if (words_.size() >= cap)
        throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap) +
                          " elements");
      const auto idx = static_cast<std::uint32_t>(words_.size());
      word_index_[nw] = idx;
      words_.push_back(std::move(nw));
      right_.resize(words_.size() * rank, kUnset);
      next_level.push_back(idx);
    }
    for (const EdgeRequest& r : requests) {
      const std::uint32_t to = word_index_.at(r.target);
      right_[r.from * static_cast<std::size_t>(rank) + r.gen] = to;
      right_[to * static_cast<std::size_t>(rank) + r.gen] = r.from;
    }
    level = std::move(next_level);
  }

  const std::size_t n = words_.size();

  rdesc_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < rank; ++s)
      if (words_[right_[w * rank + s]].size() < words_[w].size())
        rdesc_[w] |= std::uint32_t{1} << s;

  inv_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    std::uint32_t acc = 0;
    const Word& word = words_[w];
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = right_[acc * static_cast<std::size_t>(rank) + *it];
    inv_[w] = acc;
  }

  left_.assign(n * rank, 0);
  ldesc_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < rank; ++s) {
      const std::uint32_t sw = inv_[right_[inv_[w] * static_cast<std::size_t>(rank) + s]];
      left_[w * rank + s] = sw;
      if (words_[sw].size() < words_[w].size()) ldesc_[w] |= std::uint32_t{1} << s;
    }

  // Parabolic tables for every subset of generators. |W| >= 2^rank for
  // any finite W, so these stay proportional to the group itself.
  const std::uint32_t nmasks = std::uint32_t{1} << rank;
  longest_by_mask_.assign(nmasks, 0);
  para_order_by_mask_.assign(nmasks, 0);
  std::vector<std::uint32_t> stamp(n, kUnset);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
    std::uint32_t w = 0;
    for (bool rose = true; rose;) {
      rose = false;
      for (int s : GenSet::from_mask(mask)) {
        const std::uint32_t ws = right_[w * static_cast<std::size_t>(rank) + s];
        if (words_[ws].size() > words_[w].size()) {
          w = ws;
          rose = true;
          break;
        }
      }
    }
    longest_by_mask_[mask] = w;

    std::uint64_t count = 0;
    stack.assign(1, 0);
    stamp[0] = mask;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      ++count;
      for (int s : GenSet::from_mask(mask)) {
        const std::uint32_t vs = right_[v * static_cast<std::size_t>(rank) + s];
        if (stamp[vs] != mask) {
          stamp[vs] = mask;
          stack.push_back(vs);
        }
      }
    }
    para_order_by_mask_[mask] = count;
  }
}

Element CoxeterGroup::generator(int s) const {
  return Element{word_index_.at(Word(1, static_cast<char>(s)))};
}

Element CoxeterGroup::element_from_word(const Word& w) const {
  Element acc = identity();
  for (char s : w) acc = right_mult(acc, s);
  return acc;
}

Element CoxeterGroup::multiply(Element x, Element y) const {
  Element acc = x;
  for (char s : words_[y.idx]) acc = right_mult(acc, s);
  return acc;
}

Element CoxeterGroup::demazure(Element x, Element y) const {
  Element acc = x;
  for (char s : words_[y.idx]) {
    const Element next = right_mult(acc, s);
    if (length(next) > length(acc)) acc = next;
  }
  return acc;
}

bool CoxeterGroup::bruhat_leq(Element x, Element y) const {
  std::call_once(leq_once_, [this] {
    // Bottom-up evaluation of the descent recursion, one row per y in
    // index order (so |ys| rows are already done): with s the smallest
    // right descent of y, x <= y iff (xs < x ? xs <= ys : x <= ys).
    const std::size_t n = size();
    const std::size_t stride = (n + 63) / 64;
    leq_bits_.assign(n * stride, 0);
    leq_bits_[0] |= 1;  // e <= e
    for (std::size_t y = 1; y < n; ++y) {
      const int s = *GenSet::from_mask(rdesc_[y]).begin();
      const std::size_t ys = right_[y * static_cast<std::size_t>(rank()) + s];
      const std::uint64_t* ys_row = &leq_bits_[ys * stride];
      std::uint64_t* y_row = &leq_bits_[y * stride];
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xs = right_[x * static_cast<std::size_t>(rank()) + s];
        const std::size_t xp = words_[xs].size() < words_[x].size() ? xs : x;
        if ((ys_row[xp / 64] >> (xp % 64)) & 1) y_row[x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
  });
  const std::size_t stride = (size() + 63) / 64;
  return (leq_bits_[y.idx * stride + x.idx / 64] >> (x.idx % 64)) & 1;
}

std::vector<Element> CoxeterGroup::parabolic_elements(GenSet i) const {
  std::vector<bool> seen(size(), false);
  std::vector<std::uint32_t> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int s : i) {
      const std::uint32_t next = right_[out[k] * static_cast<std::size_t>(rank()) + s];
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  std::vector<Element> elems;
  elems.reserve(out.size());
  for (std::uint32_t idx : out) elems.push_back(Element{idx});
  return elems;
}

}  // namespace dcoset
