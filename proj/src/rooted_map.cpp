#include "ofm/rooted_map.hpp"

#include <stdexcept>
#include <string>

namespace ofm {

RootedMap RootedMap::from_alpha(std::vector<Dart> alpha) {
  const std::size_t n2 = alpha.size();
  if (n2 == 0 || n2 % 2 != 0)
    throw std::invalid_argument("alpha: dart count must be even and positive");
  for (std::size_t d = 0; d < n2; ++d) {
    if (alpha[d] >= n2)
      throw std::invalid_argument("alpha: entry out of range at dart " + std::to_string(d));
    if (alpha[d] == d)
      throw std::invalid_argument("alpha: fixed point at dart " + std::to_string(d));
  }
  for (std::size_t d = 0; d < n2; ++d)
    if (alpha[alpha[d]] != d)
      throw std::invalid_argument("alpha: not an involution at dart " + std::to_string(d));
  return RootedMap(std::move(alpha));
}

std::vector<std::vector<Dart>> RootedMap::vertices() const {
  const std::size_t n2 = alpha_.size();
  std::vector<bool> seen(n2, false);
  std::vector<std::vector<Dart>> cycles;
  for (std::size_t d = 0; d < n2; ++d) {
    if (seen[d]) continue;
    std::vector<Dart> cycle;
    Dart x = static_cast<Dart>(d);
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = sigma(x);
    } while (x != d);
    cycles.push_back(std::move(cycle));  // starts at its minimum: d is first unseen
  }
  return cycles;
}

std::size_t RootedMap::vertex_count() const {
  const std::size_t n2 = alpha_.size();
  std::vector<bool> seen(n2, false);
  std::size_t k = 0;
  for (std::size_t d = 0; d < n2; ++d) {
    if (seen[d]) continue;
    ++k;
    Dart x = static_cast<Dart>(d);
    do {
      seen[x] = true;
      x = sigma(x);
    } while (x != d);
  }
  return k;
}

std::size_t RootedMap::genus() const {
  const std::size_t n = edge_count();
  const std::size_t k = vertex_count();
  // One face: n - k = 2g - 1, and n - k is always odd for an involution
  // against the standard face cycle.
  if (n + 1 < k || (n + 1 - k) % 2 != 0)
    throw std::logic_error("genus: inconsistent edge/vertex counts");
  return (n + 1 - k) / 2;
}

DegreeProfile RootedMap::degree_profile() const {
  DegreeProfile p;
  for (const auto& cycle : vertices()) ++p[cycle.size()];
  return p;
}

bool RootedMap::is_four_regular() const {
  const DegreeProfile p = degree_profile();
  return p.size() == 1 && p.begin()->first == 4;
}

bool RootedMap::is_one_four_valent(std::size_t k) const {
  std::size_t fours = 0;
  for (const auto& [deg, count] : degree_profile()) {
    if (deg == 4)
      fours = count;
    else if (deg != 1)
      return false;
  }
  return fours == k;
}

RootedMap RootedMap::conjugate_by_rotation(long j) const {
  const long n2 = static_cast<long>(alpha_.size());
  const long shift = ((j % n2) + n2) % n2;
  std::vector<Dart> out(alpha_.size());
  for (long d = 0; d < n2; ++d) {
    const long src = (d - shift + n2) % n2;
    out[d] = static_cast<Dart>((alpha_[src] + shift) % n2);
  }
  return RootedMap(std::move(out));
}

}  // namespace ofm
