#include "ccfrieze/polygon.hpp"

#include "golden.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ccfrieze;

namespace {

const DiagonalSet kR{{2, 5}, {2, 7}};
const DiagonalSet kT{{1, 7}, {2, 4}, {2, 5}, {2, 7}, {5, 7}};

std::vector<Diagonal> sorted(std::vector<Diagonal> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("objects of the octagon") {
  Polygon p(8);
  CHECK(p.objects().size() == 20);
  for (int m = 4; m <= 14; ++m) CHECK(Polygon(m).objects().size() == static_cast<std::size_t>(m * (m - 3) / 2));
  CHECK_THROWS(Polygon(3));
  CHECK_THROWS_WITH(p.make(2, 3), "degenerate diagonal {2,3}");
  CHECK(p.make(7, 1) == Diagonal{1, 7});
  CHECK(p.make(9, 15) == Diagonal{1, 7});
}

TEST_CASE("crossing") {
  Polygon p(8);
  CHECK(p.crossing({4, 6}, {2, 5}));
  CHECK_FALSE(p.crossing({4, 6}, {2, 7}));
  CHECK_FALSE(p.crossing({4, 6}, {4, 6}));
  CHECK_FALSE(p.crossing({2, 5}, {2, 7}));
}

TEST_CASE("suspension") {
  Polygon p(8);
  CHECK(p.suspend({5, 7}) == Diagonal{4, 6});
  CHECK(p.suspend({1, 7}) == Diagonal{6, 8});
  CHECK(p.suspend({1, 3}) == Diagonal{2, 8});
  for (const auto& x : p.objects()) {
    CHECK(p.suspend_inverse(p.suspend(x)) == x);
    CHECK(p.suspend(p.suspend_inverse(x)) == x);
    CHECK(p.suspend(x, 8) == x);
    for (int k = 1; k < 8; ++k)
      if (k != 4) CHECK(p.suspend(x, k) != x);  // diameters have period m/2
  }
}

TEST_CASE("crossing symmetry, irreflexivity and rotation invariance") {
  for (int m = 4; m <= 12; ++m) {
    Polygon p(m);
    for (const auto& x : p.objects()) {
      CHECK_FALSE(p.crossing(x, x));
      for (const auto& y : p.objects()) {
        CHECK(p.crossing(x, y) == p.crossing(y, x));
        CHECK(p.crossing(x, y) == p.crossing(p.suspend(x), p.suspend(y)));
        // 2-Calabi-Yau symmetry
        CHECK(p.hom_dim(x, p.suspend(y)) == p.hom_dim(y, p.suspend(x)));
      }
    }
  }
}

TEST_CASE("hom by the crossing rule") {
  Polygon p(8);
  CHECK(p.hom_dim({1, 7}, {2, 7}) == 1);
  CHECK(p.hom_dim({2, 6}, {2, 5}) == 0);
  for (const auto& x : p.objects()) CHECK(p.hom_dim(x, x) == 1);
}

TEST_CASE("meshes of the octagon") {
  Polygon p(8);
  auto m1 = p.ar_mesh({2, 7});
  CHECK(m1.start == Diagonal{1, 6});
  CHECK(sorted(m1.middles) == std::vector<Diagonal>{{1, 7}, {2, 6}});
  auto m2 = p.ar_mesh({1, 7});
  CHECK(m2.start == Diagonal{6, 8});
  CHECK(m2.middles == std::vector<Diagonal>{{1, 6}});
  auto m3 = p.ar_mesh({2, 4});
  CHECK(m3.start == Diagonal{1, 3});
  CHECK(m3.middles == std::vector<Diagonal>{{1, 4}});
}

TEST_CASE("arrows agree with the drawn AR quiver") {
  // arrows of the drawing go from (row, col) to (row +- 1, col + 1)
  Polygon p(8);
  std::set<std::pair<Diagonal, Diagonal>> drawn;
  auto at = [](int r, int c) -> std::string { return golden::kObjects[r][c]; };
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c + 1 < 9; ++c) {
      if (at(r, c).empty()) continue;
      for (int r2 : {r - 1, r + 1}) {
        if (r2 < 0 || r2 > 4 || at(r2, c + 1).empty()) continue;
        Diagonal a, b;
        std::sscanf(at(r, c).c_str(), "{%d,%d}", &a.i, &a.j);
        std::sscanf(at(r2, c + 1).c_str(), "{%d,%d}", &b.i, &b.j);
        drawn.insert({a, b});
      }
    }
  auto arrows = p.arrows();
  std::set<std::pair<Diagonal, Diagonal>> computed(arrows.begin(), arrows.end());
  CHECK(computed == drawn);
  CHECK(arrows.size() == 32);  // m (n - 1)
}

TEST_CASE("mesh self-consistency") {
  for (int m = 4; m <= 13; ++m) {
    Polygon p(m);
    auto arrows = p.arrows();
    std::map<Diagonal, int> middle_uses;
    for (const auto& c : p.objects()) {
      auto mesh = p.ar_mesh(c);
      CHECK(mesh.start == p.suspend(c));
      CHECK(mesh.middles.size() <= 2);
      if (m > 4) CHECK(!mesh.middles.empty());  // A_1 has empty meshes
      std::vector<Diagonal> preds, succs;
      for (const auto& [x, y] : arrows) {
        if (y == c) preds.push_back(x);
        if (x == mesh.start) succs.push_back(y);
      }
      CHECK(sorted(mesh.middles) == sorted(preds));
      CHECK(sorted(mesh.middles) == sorted(succs));
      for (const auto& b : mesh.middles) middle_uses[b]++;
    }
    // each object is a middle term once per arrow out of it
    for (const auto& b : p.objects()) {
      int out = 0;
      for (const auto& [x, y] : arrows) out += x == b;
      CHECK(middle_uses[b] == out);
    }
  }
}

TEST_CASE("exchange pairs") {
  Polygon p(8);
  auto e1 = p.exchange_pair({1, 7}, kT);
  CHECK(e1.t_star == Diagonal{2, 8});
  CHECK(e1.a.empty());
  CHECK(e1.a_prime == std::vector<Diagonal>{{2, 7}});
  auto e2 = p.exchange_pair({5, 7}, kT);
  CHECK(e2.t_star == Diagonal{2, 6});
  CHECK(e2.a == std::vector<Diagonal>{{2, 7}});
  CHECK(e2.a_prime == std::vector<Diagonal>{{2, 5}});
  auto e3 = p.exchange_pair({2, 7}, kT);
  CHECK(e3.t_star == Diagonal{1, 5});
  CHECK(sorted(e3.a) == std::vector<Diagonal>{{1, 7}, {2, 5}});
  CHECK(e3.a_prime == std::vector<Diagonal>{{5, 7}});
  CHECK_THROWS(p.exchange_pair({1, 3}, kT));
}

TEST_CASE("flip closure on random triangulations") {
  std::mt19937_64 rng(7);
  for (int m = 4; m <= 12; ++m) {
    Polygon p(m);
    for (int iter = 0; iter < 20; ++iter) {
      auto t = oracle::random_triangulation(p, rng);
      REQUIRE_FALSE(p.validate_cluster_tilting(t, {}).has_value());
      for (const auto& d : t) {
        auto e = p.exchange_pair(d, t);
        CHECK(p.crossing(d, e.t_star));
        std::vector<Diagonal> flipped;
        for (const auto& x : t)
          if (x != d) flipped.push_back(x);
        flipped.push_back(e.t_star);
        CHECK_FALSE(p.validate_cluster_tilting(make_set(flipped), {}).has_value());
        for (const auto& x : e.a) CHECK(contains(t, x));
        for (const auto& x : e.a_prime) CHECK(contains(t, x));
      }
    }
  }
}

TEST_CASE("validation") {
  Polygon p(8);
  CHECK_FALSE(p.validate_rigid(kR).has_value());
  CHECK_FALSE(p.validate_rigid({}).has_value());
  auto v = p.validate_rigid({{2, 5}, {4, 7}});
  REQUIRE(v.has_value());
  CHECK(v->kind == Violation::Kind::Crossing);
  REQUIRE(v->pair.has_value());
  CHECK(v->pair->first == Diagonal{2, 5});
  CHECK(v->pair->second == Diagonal{4, 7});

  CHECK_FALSE(p.validate_cluster_tilting(kT, kR).has_value());
  auto small = p.validate_cluster_tilting({{1, 7}, {2, 4}, {2, 5}, {2, 7}}, kR);
  REQUIRE(small.has_value());
  CHECK(small->kind == Violation::Kind::NotMaximal);
  auto outside = p.validate_cluster_tilting(kT, {{3, 8}});
  REQUIRE(outside.has_value());
  CHECK(outside->kind == Violation::Kind::NotContained);
}
