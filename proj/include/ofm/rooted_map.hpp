// One-face (unicellular) rooted maps in face-normalized form.
//
// A rooted map with one face is stored as a fixed-point-free involution
// `alpha` on the darts 0..2n-1 (alpha pairs each dart with the other half of
// its edge). The face permutation is normalized to the standard cycle
// gamma = (0 1 ... 2n-1) with the root at dart 0, so alpha alone determines
// the map. The vertex permutation is derived: sigma = alpha . gamma,
// i.e. sigma(i) = alpha((i+1) mod 2n) (compositions apply the right factor
// first). Genus comes from Euler's relation with one face:
// #edges - #vertices = 2g - 1.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace ofm {

using Dart = std::uint32_t;

// degree -> number of vertices of that degree
using DegreeProfile = std::map<std::size_t, std::size_t>;

class RootedMap {
 public:
  // Validates that `alpha` is a fixed-point-free involution on an even,
  // positive number of darts; throws std::invalid_argument naming the
  // violated invariant otherwise.
  static RootedMap from_alpha(std::vector<Dart> alpha);

  std::size_t dart_count() const { return alpha_.size(); }
  std::size_t edge_count() const { return alpha_.size() / 2; }
  const std::vector<Dart>& alpha() const { return alpha_; }

  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart gamma(Dart d) const { return d + 1 == alpha_.size() ? 0 : d + 1; }
  Dart sigma(Dart d) const { return alpha_[gamma(d)]; }

  // Vertex cycles of sigma; each cycle starts at its minimum dart and the
  // cycles are ordered by that minimum.
  std::vector<std::vector<Dart>> vertices() const;
  std::size_t vertex_count() const;

  std::size_t genus() const;
  DegreeProfile degree_profile() const;
  bool is_four_regular() const;
  // True iff every vertex degree is 1 or 4 and exactly k vertices have
  // degree 4.
  bool is_one_four_valent(std::size_t k) const;

  // Re-roots the map j steps along the face: conjugates alpha by gamma^j,
  // alpha'(d) = (alpha((d - j) mod 2n) + j) mod 2n.
  RootedMap conjugate_by_rotation(long j) const;

  bool operator==(const RootedMap&) const = default;

 private:
  explicit RootedMap(std::vector<Dart> alpha) : alpha_(std::move(alpha)) {}
  std::vector<Dart> alpha_;
};

}  // namespace ofm
