#ifndef DCOSET_DETAIL_CACHES_HPP
#define DCOSET_DETAIL_CACHES_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "dcoset/gens.hpp"

namespace dcoset {
class CoxeterGroup;
}

namespace dcoset::detail {

// Payload of one (I,J)-coset. Shared, immutable once published by the
// family builder. The coset's identity is (I, J, min); the element set
// is carried along because the constructing orbit walk produces it
// anyway.
struct CosetData {
  const CoxeterGroup* group = nullptr;
  GenSet left_type;   // I
  GenSet right_type;  // J
  std::uint32_t min_idx = 0;
  std::uint32_t max_idx = 0;
  int length = 0;
  GenSet leftred;
  GenSet rightred;
  std::vector<std::uint32_t> elements;  // ascending element indices
  std::size_t position = 0;             // index in the family order
};

// The full partition of W into (I,J)-cosets, sorted by
// (length, ShortLex of min), with an element -> coset position map.
struct FamilyData {
  GenSet left_type;
  GenSet right_type;
  std::vector<std::shared_ptr<const CosetData>> cosets;
  std::vector<std::uint32_t> position_of;  // element index -> coset position
};

// Search graph for reduced-expression search: nodes are pairs
// (element, generator subset), edges toggle one generator and fold the
// new parabolic longest element in by the star product. Stored in CSR
// form, forward and reversed.
struct RexGraphData {
  int rank = 0;
  std::size_t nodes = 0;  // |W| * 2^rank
  std::vector<std::uint32_t> fwd_to;
  std::vector<std::uint8_t> fwd_w;
  std::vector<std::uint32_t> rev_off;
  std::vector<std::uint32_t> rev_to;
  std::vector<std::uint8_t> rev_w;
};

struct GroupCaches {
  std::mutex mu;
  std::unordered_map<std::uint64_t, std::shared_ptr<const FamilyData>> families;
  std::mutex rex_mu;
  std::shared_ptr<const RexGraphData> rex;
};

inline std::uint64_t family_key(GenSet i, GenSet j) {
  return (static_cast<std::uint64_t>(i.mask()) << 32) | j.mask();
}

}  // namespace dcoset::detail

#endif
