#include "dcoset/coset.hpp"

#include <algorithm>

namespace dcoset {

namespace {

std::string set_str(GenSet s) {
  std::string out;
  for (int g : s) {
    if (!out.empty()) out += '-';
    out += std::to_string(g + 1);
  }
  return out.empty() ? "-" : out;
}

std::shared_ptr<const detail::FamilyData> build_family(const CoxeterGroup& g, GenSet i,
                                                       GenSet j) {
  auto fam = std::make_shared<detail::FamilyData>();
  fam->left_type = i;
  fam->right_type = j;
  const std::size_t n = g.size();
  fam->position_of.assign(n, ~std::uint32_t{0});

  const int len_i = g.parabolic_length(i);
  const int len_j = g.parabolic_length(j);

  std::vector<std::shared_ptr<detail::CosetData>> built;
  std::vector<std::uint32_t> orbit;
  for (std::uint32_t seed = 0; seed < n; ++seed) {
    if (fam->position_of[seed] != ~std::uint32_t{0}) continue;
    const auto tag = static_cast<std::uint32_t>(built.size());
    orbit.assign(1, seed);
    fam->position_of[seed] = tag;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Element w{orbit[k]};
      for (int s : i) {
        const std::uint32_t sw = g.left_mult(s, w).idx;
        if (fam->position_of[sw] == ~std::uint32_t{0}) {
          fam->position_of[sw] = tag;
          orbit.push_back(sw);
        }
      }
      for (int s : j) {
        const std::uint32_t ws = g.right_mult(w, s).idx;
        if (fam->position_of[ws] == ~std::uint32_t{0}) {
          fam->position_of[ws] = tag;
          orbit.push_back(ws);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());

    auto data = std::make_shared<detail::CosetData>();
    data->group = &g;
    data->left_type = i;
    data->right_type = j;
    data->min_idx = orbit.front();
    data->max_idx = orbit.back();
    data->length = 2 * g.length(Element{data->max_idx}) - len_i - len_j;
    const Element min{data->min_idx};
    const Element min_inv = g.inverse(min);
    for (int s : i) {
      // s is redundant on the left when min^-1 s min lands in J.
      const Element c = g.multiply(min_inv, g.left_mult(s, min));
      if (g.length(c) == 1 && j.contains(g.word(c)[0]))
        data->leftred = data->leftred.with(s);
    }
    for (int s : j) {
      const Element c = g.multiply(g.right_mult(min, s), min_inv);
      if (g.length(c) == 1 && i.contains(g.word(c)[0]))
        data->rightred = data->rightred.with(s);
    }
    data->elements = orbit;
    built.push_back(std::move(data));
  }

  // Scanning seeds in ascending index order discovers cosets in
  // ascending min order; resort by (length, min) for the family order.
  std::vector<std::uint32_t> order(built.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (built[a]->length != built[b]->length) return built[a]->length < built[b]->length;
    return built[a]->min_idx < built[b]->min_idx;
  });
  std::vector<std::uint32_t> pos_of_tag(built.size());
  fam->cosets.resize(built.size());
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
    built[order[pos]]->position = pos;
    pos_of_tag[order[pos]] = pos;
    fam->cosets[pos] = std::move(built[order[pos]]);
  }
  for (std::uint32_t e = 0; e < n; ++e)
    fam->position_of[e] = pos_of_tag[fam->position_of[e]];
  return fam;
}

std::shared_ptr<const detail::FamilyData> family_data(const CoxeterGroup& g, GenSet i,
                                                      GenSet j) {
  auto& caches = g.caches();
  const std::uint64_t key = detail::family_key(i, j);
  std::lock_guard<std::mutex> lock(caches.mu);
  auto it = caches.families.find(key);
  if (it != caches.families.end()) return it->second;
  auto fam = build_family(g, i, j);
  caches.families.emplace(key, fam);
  return fam;
}

}  // namespace

CosetFamily::CosetFamily(const CoxeterGroup& g, GenSet i, GenSet j)
    : data_(family_data(g, i, j)) {}

std::vector<DoubleCoset> CosetFamily::all() const {
  std::vector<DoubleCoset> out;
  out.reserve(count());
  for (std::size_t pos = 0; pos < count(); ++pos) out.push_back(at(pos));
  return out;
}

bool DoubleCoset::contains(Element w) const {
  return std::binary_search(data_->elements.begin(), data_->elements.end(), w.idx);
}

DoubleCoset coset_of(const CoxeterGroup& g, Element w, GenSet i, GenSet j) {
  return CosetFamily(g, i, j).containing(w);
}

std::vector<DoubleCoset> enumerate_cosets(const CoxeterGroup& g, GenSet i, GenSet j) {
  return CosetFamily(g, i, j).all();
}

bool coset_leq(const DoubleCoset& p, const DoubleCoset& q) {
  if (&p.group() != &q.group() || p.left_type() != q.left_type() ||
      p.right_type() != q.right_type())
    throw MismatchedTypes("coset_leq requires two cosets of the same (I,J) type, got (" +
                          set_str(p.left_type()) + "," + set_str(p.right_type()) +
                          ") and (" + set_str(q.left_type()) + "," +
                          set_str(q.right_type()) + ")");
  return p.group().bruhat_leq(p.min_elem(), q.min_elem());
}

DoubleCoset coset_star(const DoubleCoset& p, const DoubleCoset& q) {
  if (&p.group() != &q.group() || p.right_type() != q.left_type())
    throw MismatchedTypes("coset_star requires matching middle types, got " +
                          set_str(p.right_type()) + " vs " + set_str(q.left_type()));
  const Element top = p.group().demazure(p.max_elem(), q.max_elem());
  return coset_of(p.group(), top, p.left_type(), q.right_type());
}

std::optional<DoubleCoset> reduced_compose(const DoubleCoset& p, const DoubleCoset& q) {
  if (&p.group() != &q.group() || p.right_type() != q.left_type())
    throw MismatchedTypes("reduced_compose requires matching middle types, got " +
                          set_str(p.right_type()) + " vs " + set_str(q.left_type()));
  const CoxeterGroup& g = p.group();
  const Element top = g.demazure(p.max_elem(), q.max_elem());
  const int addl = g.length(p.max_elem()) + g.length(q.max_elem()) -
                   g.parabolic_length(p.right_type());
  if (g.length(top) != addl) return std::nullopt;
  return coset_of(g, top, p.left_type(), q.right_type());
}

DoubleCoset project(const DoubleCoset& p, GenSet k, GenSet l) {
  if (!p.left_type().subset_of(k) || !p.right_type().subset_of(l))
    throw NotASuperset("project requires I within K and J within L, got I=" +
                       set_str(p.left_type()) + " K=" + set_str(k) + " J=" +
                       set_str(p.right_type()) + " L=" + set_str(l));
  return coset_of(p.group(), p.min_elem(), k, l);
}

std::vector<DoubleCoset> sub_cosets(const DoubleCoset& p, GenSet j_prime) {
  if (!j_prime.subset_of(p.right_type()))
    throw NotASuperset("sub_cosets requires J' within J, got J'=" + set_str(j_prime) +
                       " J=" + set_str(p.right_type()));
  CosetFamily fam(p.group(), p.left_type(), j_prime);
  std::vector<DoubleCoset> out;
  std::vector<std::uint32_t> seen;
  for (std::uint32_t e : p.element_indices()) {
    const DoubleCoset sub = fam.containing(Element{e});
    const auto pos = static_cast<std::uint32_t>(sub.position());
    if (std::find(seen.begin(), seen.end(), pos) == seen.end()) {
      seen.push_back(pos);
      out.push_back(sub);
    }
  }
  return out;
}

}  // namespace dcoset
