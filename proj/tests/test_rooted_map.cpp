#include <doctest.h>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofm/map_io.hpp"
#include "ofm/rooted_map.hpp"

using namespace ofm;

namespace {

// The genus-2 4-regular example map used throughout the tests.
const std::vector<Dart> kExampleAlpha{9, 11, 4, 6, 2, 7, 3, 5, 10, 0, 8, 1};

RootedMap example_map() { return RootedMap::from_alpha(kExampleAlpha); }

}  // namespace

TEST_CASE("alpha validation names the violated invariant") {
  CHECK_THROWS_AS(RootedMap::from_alpha({}), std::invalid_argument);
  CHECK_THROWS_AS(RootedMap::from_alpha({1, 0, 2}), std::invalid_argument);  // odd
  CHECK_THROWS_AS(RootedMap::from_alpha({1, 0, 7, 2}), std::invalid_argument);  // range
  CHECK_THROWS_AS(RootedMap::from_alpha({0, 1, 3, 2}), std::invalid_argument);  // fixed point
  CHECK_THROWS_AS(RootedMap::from_alpha({1, 2, 3, 0}), std::invalid_argument);  // not involution

  CHECK_THROWS_WITH_AS(RootedMap::from_alpha({0, 1}),
                       doctest::Contains("fixed point"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RootedMap::from_alpha({1, 2, 3, 0}),
                       doctest::Contains("involution"), std::invalid_argument);
}

TEST_CASE("derived permutations on the example map") {
  const RootedMap m = example_map();
  CHECK(m.dart_count() == 12);
  CHECK(m.edge_count() == 6);
  CHECK(m.alpha(0) == 9);
  CHECK(m.alpha(9) == 0);
  CHECK(m.gamma(3) == 4);
  CHECK(m.gamma(11) == 0);
  // sigma(d) = alpha(gamma(d))
  CHECK(m.sigma(0) == 11);
  CHECK(m.sigma(11) == 9);
  CHECK(m.sigma(9) == 8);
  CHECK(m.sigma(8) == 0);

  const std::vector<std::vector<Dart>> want{
      {0, 11, 9, 8}, {1, 4, 7, 10}, {2, 6, 5, 3}};
  CHECK(m.vertices() == want);
  CHECK(m.vertex_count() == 3);
}

TEST_CASE("alpha composed with sigma is the face cycle") {
  // alpha and sigma are inverse up to gamma: alpha(sigma(d)) = gamma(d).
  for (const RootedMap& m : {example_map(), RootedMap::from_alpha({1, 0}),
                             RootedMap::from_alpha({2, 3, 0, 1}),
                             RootedMap::from_alpha({3, 2, 1, 0})}) {
    for (Dart d = 0; d < m.dart_count(); ++d) CHECK(m.alpha(m.sigma(d)) == m.gamma(d));
  }
}

TEST_CASE("genus from edges minus vertices") {
  CHECK(example_map().genus() == 2);
  CHECK(RootedMap::from_alpha({1, 0}).genus() == 0);
  CHECK(RootedMap::from_alpha({2, 3, 0, 1}).genus() == 1);
}

TEST_CASE("degree profile and regularity predicates") {
  const RootedMap m = example_map();
  CHECK(m.degree_profile() == DegreeProfile{{4, 3}});
  CHECK(m.is_four_regular());
  CHECK(m.is_one_four_valent(3));
  CHECK_FALSE(m.is_one_four_valent(2));

  const RootedMap tree = RootedMap::from_alpha({1, 0});
  CHECK(tree.degree_profile() == DegreeProfile{{1, 2}});
  CHECK_FALSE(tree.is_four_regular());
  CHECK(tree.is_one_four_valent(0));
}

TEST_CASE("re-rooting is a group action of the face cycle") {
  const RootedMap m = example_map();
  CHECK(m.conjugate_by_rotation(0) == m);
  CHECK(m.conjugate_by_rotation(12) == m);
  CHECK(m.conjugate_by_rotation(-12) == m);
  for (long j : {1L, 5L, 7L, -3L}) {
    const RootedMap r = m.conjugate_by_rotation(j);
    CHECK(r.genus() == m.genus());
    CHECK(r.degree_profile() == m.degree_profile());
    CHECK(r.conjugate_by_rotation(-j) == m);
  }
  // composing rotations
  CHECK(m.conjugate_by_rotation(3).conjugate_by_rotation(4) == m.conjugate_by_rotation(7));
}

TEST_CASE("serialization uses the fixed key order") {
  const RootedMap tree = RootedMap::from_alpha({1, 0});
  CHECK(serialize_map(tree) == R"({"darts":2,"alpha":[1,0]})");
  const RootedMap m = example_map();
  CHECK(serialize_map(m) == R"({"darts":12,"alpha":[9,11,4,6,2,7,3,5,10,0,8,1]})");
}

TEST_CASE("parse accepts exactly the documented shape") {
  const RootedMap m = parse_map(R"({"darts": 12, "alpha": [9,11,4,6,2,7,3,5,10,0,8,1]})");
  CHECK(m == example_map());
  CHECK(parse_map(serialize_map(m)) == m);

  CHECK_THROWS_AS(parse_map("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"([1,0])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"alpha":[1,0]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"darts":2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"darts":4,"alpha":[1,0]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"darts":2,"alpha":[1.0,0.0]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"darts":2,"alpha":[-1,0]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map(R"({"darts":2,"alpha":[0,1]})"), std::invalid_argument);
}

TEST_CASE("map files load and match the inline data") {
  const std::string dir = OFM_TEST_DATA_DIR;
  CHECK(load_map_file(dir + "/genus2_example.json") == example_map());
  CHECK(load_map_file(dir + "/one_edge_tree.json") == RootedMap::from_alpha({1, 0}));
  CHECK_THROWS_AS(load_map_file(dir + "/not_involution.json"), std::invalid_argument);
  CHECK_THROWS_AS(load_map_file(dir + "/does_not_exist.json"), std::invalid_argument);
}
