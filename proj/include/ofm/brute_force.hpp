// Brute-force ground truth: exhaustive search over fixed-point-free
// involutions (= rooted one-face maps in face-normalized form).
//
// The search pairs the smallest unpaired dart first and tracks the partial
// vertex permutation incrementally: pairing dart a with b fixes
// sigma((a-1) mod 2n) = b and sigma((b-1) mod 2n) = a, so open sigma-paths
// can be merged/closed as pairs are chosen and branches die as soon as a
// path outgrows every permitted vertex degree or a closed cycle has a
// forbidden length. Counts are independent of the closed forms by
// construction; they are the oracle the formulas are checked against.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ofm/numeric.hpp"
#include "ofm/rooted_map.hpp"

namespace ofm {

struct SearchSpec {
  std::size_t dart_count = 0;
  // Permitted vertex degrees, ascending; empty means unrestricted.
  std::vector<std::size_t> allowed_degrees;
  // If set, the exact degree profile required at the leaves (degrees absent
  // from the map must be absent from the profile).
  std::optional<DegreeProfile> exact_profile;
  unsigned threads = 1;

  // Leaf filter corresponding to the constraints above.
  bool accepts(const DegreeProfile& p) const;

  // 4-regular maps of the given genus (dart count 8g-4).
  static SearchSpec four_regular(std::size_t genus, unsigned threads = 1);
  // {1,4}-valent maps of genus g with k degree-4 vertices.
  static SearchSpec one_four(std::size_t g, std::size_t k, unsigned threads = 1);
  // Every one-face map on the given darts.
  static SearchSpec unrestricted(std::size_t dart_count, unsigned threads = 1);
};

// Number of involutions passing the filter.
BigInt count_rooted(const SearchSpec& spec);

// Convenience wrapper: {1,4}-valent (g, k) family; 0 for empty families.
BigInt count_rooted_14(std::size_t g, std::size_t k, unsigned threads = 1);

// Orbit count under re-rooting: (1/2n) * sum over rotations j of the number
// of filtered involutions fixed by conjugation with gamma^j.
BigInt count_unrooted_burnside(const SearchSpec& spec);

// Visits every map passing the filter in lexicographic alpha order
// (single-threaded regardless of spec.threads).
void enumerate_rooted(const SearchSpec& spec,
                      const std::function<void(const RootedMap&)>& visit);

}  // namespace ofm
