#include "ofm/surgery.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ofm {

Triple::Triple(Dart a1, Dart a2, Dart a3) : a1(a1), a2(a2), a3(a3) {
  if (!(a1 < a2 && a2 < a3))
    throw std::invalid_argument("triple darts must be strictly increasing");
}

Triple reflected(const Triple& t) { return Triple(t.a1, t.a1 + t.a3 - t.a2, t.a3); }

std::vector<Dart> trisections(const RootedMap& m) {
  std::vector<Dart> out;
  for (const auto& cycle : m.vertices()) {
    const Dart min = cycle[0];
    for (Dart h : cycle) {
      const Dart down = m.sigma(h);
      if (down < h && down != min) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_in_range(const RootedMap& m, const Triple& t, const char* op) {
  if (t.a3 >= m.dart_count())
    throw std::invalid_argument(std::string(op) + ": triple dart out of range");
}

// -1 if the three darts are not co-vertex; otherwise 1 when the common cycle
// visits (a1, a3, a2), 0 when it visits (a1, a2, a3).
int intertwined_state(const RootedMap& m, const Triple& t) {
  bool hit2 = false, hit3 = false;
  Dart first = t.a1;
  for (Dart x = m.sigma(t.a1); x != t.a1; x = m.sigma(x)) {
    if ((x == t.a2 || x == t.a3) && !hit2 && !hit3) first = x;
    if (x == t.a2) hit2 = true;
    if (x == t.a3) hit3 = true;
  }
  if (!hit2 || !hit3) return -1;
  return first == t.a3 ? 1 : 0;
}

// Applies the ascending 3-cycle of `s` to the vertex permutation and
// renumbers along the resulting face (the B/C block swap described in the
// header). Edges are preserved, so the new involution is the old one
// conjugated by the block swap.
RootedMap face_surgery(const RootedMap& m, const Triple& s) {
  const std::size_t n2 = m.dart_count();
  std::vector<Dart> phi(n2);
  for (std::size_t d = 0; d < n2; ++d) {
    if (d > s.a1 && d <= s.a2)
      phi[d] = static_cast<Dart>(d + (s.a3 - s.a2));
    else if (d > s.a2 && d <= s.a3)
      phi[d] = static_cast<Dart>(d - (s.a2 - s.a1));
    else
      phi[d] = static_cast<Dart>(d);
  }
  std::vector<Dart> alpha(n2);
  for (std::size_t d = 0; d < n2; ++d) alpha[phi[d]] = phi[m.alpha(static_cast<Dart>(d))];
  return RootedMap::from_alpha(std::move(alpha));
}

}  // namespace

bool is_intertwined(const RootedMap& m, const Triple& t) {
  check_in_range(m, t, "is_intertwined");
  const int state = intertwined_state(m, t);
  if (state < 0)
    throw std::invalid_argument("is_intertwined: darts are not at a single vertex");
  return state == 1;
}

RootedMap glue(const RootedMap& m, const Triple& t) {
  check_in_range(m, t, "glue");
  std::vector<Dart> vertex_of(m.dart_count());
  Dart id = 0;
  for (const auto& cycle : m.vertices()) {
    for (Dart d : cycle) vertex_of[d] = id;
    ++id;
  }
  if (vertex_of[t.a1] == vertex_of[t.a2] || vertex_of[t.a1] == vertex_of[t.a3] ||
      vertex_of[t.a2] == vertex_of[t.a3])
    throw std::invalid_argument("glue: darts must lie in three distinct vertex cycles");
  RootedMap out = face_surgery(m, t);
  if (out.genus() != m.genus() + 1)
    throw std::logic_error("glue: genus did not increase by 1");
  return out;
}

RootedMap cut(const RootedMap& m, const Triple& t) {
  check_in_range(m, t, "cut");
  const Triple site = reflected(t);
  const int state = intertwined_state(m, site);
  if (state < 0)
    throw std::invalid_argument("cut: glue site is not at a single vertex");
  if (state == 0)
    throw std::invalid_argument("cut: triple is not intertwined");
  RootedMap out = face_surgery(m, site);
  if (m.genus() == 0 || out.genus() != m.genus() - 1)
    throw std::logic_error("cut: genus did not decrease by 1");
  return out;
}

}  // namespace ofm
