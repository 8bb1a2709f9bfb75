#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ofm/brute_force.hpp"
#include "ofm/rooted_map.hpp"
#include "ofm/surgery.hpp"

using namespace ofm;

namespace {

const std::vector<Dart> kExampleAlpha{9, 11, 4, 6, 2, 7, 3, 5, 10, 0, 8, 1};

RootedMap example_map() { return RootedMap::from_alpha(kExampleAlpha); }

// Every strictly ascending dart triple of m.
std::vector<Triple> all_triples(const RootedMap& m) {
  std::vector<Triple> out;
  for (Dart a3 = 2; a3 < m.dart_count(); ++a3)
    for (Dart a1 = 0; a1 + 1 < a3; ++a1)
      for (Dart a2 = a1 + 1; a2 < a3; ++a2) out.push_back(Triple{a1, a2, a3});
  return out;
}

}  // namespace

TEST_CASE("triples must be strictly ascending") {
  CHECK_THROWS_AS(Triple(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triple(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Triple(0, 2, 2), std::invalid_argument);
  CHECK(Triple(0, 1, 2) == Triple(0, 1, 2));
}

TEST_CASE("reflection mirrors the middle dart and is an involution") {
  CHECK(reflected(Triple{1, 2, 5}) == Triple{1, 4, 5});
  CHECK(reflected(Triple{1, 3, 5}) == Triple{1, 3, 5});
  CHECK(reflected(Triple{0, 1, 9}) == Triple{0, 8, 9});
  for (const Triple& t : all_triples(example_map()))
    CHECK(reflected(reflected(t)) == t);
}

TEST_CASE("trisections of the example map") {
  const std::vector<Dart> want{5, 6, 9, 11};
  CHECK(trisections(example_map()) == want);
}

TEST_CASE("a genus-g map has exactly 2g trisections") {
  std::size_t maps = 0;
  for (std::size_t darts = 2; darts <= 8; darts += 2)
    enumerate_rooted(SearchSpec::unrestricted(darts), [&](const RootedMap& m) {
      ++maps;
      CHECK(trisections(m).size() == 2 * m.genus());
    });
  enumerate_rooted(SearchSpec::four_regular(2), [&](const RootedMap& m) {
    ++maps;
    CHECK(trisections(m).size() == 4);
  });
  CHECK(maps == 1 + 3 + 15 + 105 + 45);
}

TEST_CASE("a vertex holds a trisection iff it holds an intertwined triple") {
  for (std::size_t darts = 2; darts <= 8; darts += 2)
    enumerate_rooted(SearchSpec::unrestricted(darts), [&](const RootedMap& m) {
      const auto tris = trisections(m);
      for (const auto& cycle : m.vertices()) {
        const bool has_trisection =
            std::any_of(tris.begin(), tris.end(), [&](Dart h) {
              return std::find(cycle.begin(), cycle.end(), h) != cycle.end();
            });
        bool has_intertwined = false;
        std::vector<Dart> darts_sorted = cycle;
        std::sort(darts_sorted.begin(), darts_sorted.end());
        for (std::size_t i = 0; i < darts_sorted.size() && !has_intertwined; ++i)
          for (std::size_t j = i + 1; j < darts_sorted.size() && !has_intertwined; ++j)
            for (std::size_t k = j + 1; k < darts_sorted.size(); ++k)
              if (is_intertwined(m, Triple{darts_sorted[i], darts_sorted[j],
                                           darts_sorted[k]})) {
                has_intertwined = true;
                break;
              }
        CHECK(has_trisection == has_intertwined);
      }
    });
}

TEST_CASE("intertwined means the vertex visits the triple in order a1 a3 a2") {
  const RootedMap m = example_map();
  // vertex (0 11 9 8)
  CHECK(is_intertwined(m, Triple{0, 8, 9}));
  CHECK(is_intertwined(m, Triple{8, 9, 11}));
  // vertex (1 4 7 10) is ascending, so nothing is intertwined there
  CHECK_FALSE(is_intertwined(m, Triple{1, 4, 7}));
  CHECK_FALSE(is_intertwined(m, Triple{4, 7, 10}));
  // darts from different vertices
  CHECK_THROWS_AS(is_intertwined(m, Triple{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("glue requires three distinct vertices, cut an intertwined reflection") {
  const RootedMap m = example_map();
  // all darts of {0,8,9} share a vertex: no glue
  CHECK_THROWS_AS(glue(m, Triple{0, 8, 9}), std::invalid_argument);
  // reflected({1,4,7}) = {1,4,7} lies in one ascending vertex: no cut
  CHECK_THROWS_AS(cut(m, Triple{1, 4, 7}), std::invalid_argument);
  // reflected({0,1,9}) = {0,8,9} is intertwined at vertex (0 11 9 8): cut ok
  const RootedMap down = cut(m, Triple{0, 1, 9});
  CHECK(down.genus() == 1);
  CHECK(down.dart_count() == m.dart_count());
}

TEST_CASE("cut splits one vertex into three and glue merges them back") {
  const RootedMap m = example_map();
  const Triple t{0, 1, 9};
  const RootedMap down = cut(m, t);
  CHECK(down.vertex_count() == m.vertex_count() + 2);
  // after the cut the three darts lie in three distinct vertices
  const auto vertex_of = [](const RootedMap& map, Dart d) {
    std::size_t i = 0;
    for (const auto& cycle : map.vertices()) {
      for (Dart x : cycle)
        if (x == d) return i;
      ++i;
    }
    return i;
  };
  CHECK(vertex_of(down, t.a1) != vertex_of(down, t.a2));
  CHECK(vertex_of(down, t.a1) != vertex_of(down, t.a3));
  CHECK(vertex_of(down, t.a2) != vertex_of(down, t.a3));
  CHECK(glue(down, t) == m);
}

TEST_CASE("glue marks its site: the reflected triple is intertwined afterwards") {
  std::size_t checked = 0;
  enumerate_rooted(SearchSpec::unrestricted(8), [&](const RootedMap& m) {
    for (const Triple& t : all_triples(m)) {
      RootedMap up = [&]() -> RootedMap {
        try {
          return glue(m, t);
        } catch (const std::invalid_argument&) {
          return m;
        }
      }();
      if (up == m) continue;
      CHECK(is_intertwined(up, reflected(t)));
      ++checked;
    }
  });
  CHECK(checked > 100);
}

TEST_CASE("surgery round trips restore the exact map") {
  std::size_t down_trips = 0, up_trips = 0;
  for (std::size_t darts = 6; darts <= 8; darts += 2)
    enumerate_rooted(SearchSpec::unrestricted(darts), [&](const RootedMap& m) {
      for (const Triple& t : all_triples(m)) {
        if (m.genus() >= 1) {
          try {
            const RootedMap down = cut(m, t);
            REQUIRE(down.genus() + 1 == m.genus());
            CHECK(glue(down, t) == m);
            ++down_trips;
          } catch (const std::invalid_argument&) {
          }
        }
        try {
          const RootedMap up = glue(m, t);
          REQUIRE(up.genus() == m.genus() + 1);
          CHECK(cut(up, t) == m);
          ++up_trips;
        } catch (const std::invalid_argument&) {
        }
      }
    });
  CHECK(down_trips == up_trips);  // the two directions are inverse bijections
  CHECK(down_trips >= 1000);
}

TEST_CASE("surgery preserves the dart count and the one-face form") {
  const RootedMap m = example_map();
  const RootedMap down = cut(m, Triple{0, 1, 9});
  // from_alpha re-validation inside the surgery guarantees a fixed-point-free
  // involution; genus and degrees are the only things allowed to move.
  std::size_t degree_sum_before = 0, degree_sum_after = 0;
  for (const auto& [deg, count] : m.degree_profile()) degree_sum_before += deg * count;
  for (const auto& [deg, count] : down.degree_profile()) degree_sum_after += deg * count;
  CHECK(degree_sum_before == degree_sum_after);
}
