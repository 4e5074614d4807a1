#include "dcoset/paths.hpp"

#include <algorithm>

namespace dcoset {

SubordinatePath::SubordinatePath(SinglestepExpr expr, std::vector<DoubleCoset> cosets)
    : expr_(std::move(expr)), cosets_(std::move(cosets)) {
  if (cosets_.size() != expr_.subsets().size())
    throw InvalidChain("a subordinate path holds one coset per expression subset");
}

std::vector<SubordinatePath> enumerate_paths(const SinglestepExpr& e) {
  const CoxeterGroup& g = e.group();
  const std::vector<GenSet>& s = e.subsets();
  std::vector<SubordinatePath> out;
  std::vector<DoubleCoset> prefix{coset_of(g, g.identity(), s.front(), s.front())};

  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == e.width()) {
      out.emplace_back(e, prefix);
      return;
    }
    if (s[k].subset_of(s[k + 1])) {
      prefix.push_back(project(prefix.back(), s.front(), s[k + 1]));
      self(self, k + 1);
      prefix.pop_back();
    } else {
      for (const DoubleCoset& branch : sub_cosets(prefix.back(), s[k + 1])) {
        prefix.push_back(branch);
        self(self, k + 1);
        prefix.pop_back();
      }
    }
  };
  walk(walk, 0);
  return out;
}

SubordinatePath forward_path(const SinglestepExpr& e) {
  const CoxeterGroup& g = e.group();
  const std::vector<GenSet>& s = e.subsets();
  std::vector<DoubleCoset> cosets{coset_of(g, g.identity(), s.front(), s.front())};
  for (std::size_t k = 0; k < e.width(); ++k) {
    if (s[k].subset_of(s[k + 1]))
      cosets.push_back(project(cosets.back(), s.front(), s[k + 1]));
    else
      cosets.push_back(coset_of(g, cosets.back().max_elem(), s.front(), s[k + 1]));
  }
  return SubordinatePath(e, std::move(cosets));
}

std::vector<DoubleCoset> term_set(const SinglestepExpr& e) {
  const CoxeterGroup& g = e.group();
  const std::vector<GenSet>& s = e.subsets();
  // Same traversal as enumerate_paths, but only the last coset is
  // tracked; termini are deduplicated by family position.
  std::vector<std::uint32_t> positions;
  auto walk = [&](auto&& self, std::size_t k, const DoubleCoset& cur) -> void {
    if (k == e.width()) {
      positions.push_back(static_cast<std::uint32_t>(cur.position()));
      return;
    }
    if (s[k].subset_of(s[k + 1])) {
      self(self, k + 1, project(cur, s.front(), s[k + 1]));
    } else {
      for (const DoubleCoset& branch : sub_cosets(cur, s[k + 1]))
        self(self, k + 1, branch);
    }
  };
  walk(walk, 0, coset_of(g, g.identity(), s.front(), s.front()));
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  CosetFamily fam(g, s.front(), s.back());
  std::vector<DoubleCoset> out;
  out.reserve(positions.size());
  for (std::uint32_t pos : positions) out.push_back(fam.at(pos));
  return out;
}

SubordinatePath concat_paths(const SubordinatePath& pp, const SubordinatePath& qq) {
  const SinglestepExpr joined = concat(pp.expr(), qq.expr());  // checks the junction
  const DoubleCoset& p = pp.terminus();
  std::vector<DoubleCoset> cosets = pp.cosets();
  for (std::size_t k = 1; k < qq.cosets().size(); ++k)
    cosets.push_back(coset_star(p, qq.cosets()[k]));
  return SubordinatePath(joined, std::move(cosets));
}

bool is_subordinate(const SubordinatePath& path) {
  const SinglestepExpr& e = path.expr();
  const CoxeterGroup& g = e.group();
  const std::vector<GenSet>& s = e.subsets();
  const std::vector<DoubleCoset>& p = path.cosets();
  if (p[0].left_type() != s.front() || p[0].right_type() != s.front() ||
      p[0].min_elem() != g.identity())
    return false;
  for (std::size_t k = 0; k < e.width(); ++k) {
    if (p[k + 1].left_type() != s.front() || p[k + 1].right_type() != s[k + 1])
      return false;
    if (s[k].subset_of(s[k + 1])) {
      if (!(p[k + 1] == project(p[k], s.front(), s[k + 1]))) return false;
    } else {
      const auto& small = p[k + 1].element_indices();
      const auto& big = p[k].element_indices();
      if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
        return false;
    }
  }
  return true;
}

bool is_forward(const SubordinatePath& path) {
  const std::vector<GenSet>& s = path.expr().subsets();
  const std::vector<DoubleCoset>& p = path.cosets();
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    if (s[k + 1].subset_of(s[k]) && p[k + 1].max_elem() != p[k].max_elem()) return false;
  return true;
}

}  // namespace dcoset
