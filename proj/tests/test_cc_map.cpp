#include "ccfrieze/cc_map.hpp"

#include "golden.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ccfrieze;

namespace {

const DiagonalSet kR{{2, 5}, {2, 7}};
const DiagonalSet kT{{1, 7}, {2, 4}, {2, 5}, {2, 7}, {5, 7}};

CCContext figure3() {
  return CCContext::modified(mesh_engine_for(8), kR, kT,
                             {{{1, 7}, "u"}, {{2, 4}, "v"}, {{5, 7}, "z"}, {{2, 5}, "1"}, {{2, 7}, "1"}}, {"u", "v", "z"});
}

CCContext figure2() {
  return CCContext::original(mesh_engine_for(8), kT,
                             {{{1, 7}, "u"}, {{2, 4}, "v"}, {{2, 5}, "x"}, {{2, 7}, "y"}, {{5, 7}, "z"}});
}

Diagonal parse_obj(const std::string& s) {
  Diagonal d;
  std::sscanf(s.c_str(), "{%d,%d}", &d.i, &d.j);
  return d;
}

// object -> expected value, read off the two aligned grids
std::map<Diagonal, LaurentPoly> golden_table(const golden::Grid& values, const VarTablePtr& vars) {
  std::map<Diagonal, LaurentPoly> out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 9; ++c) {
      std::string obj = golden::kObjects[r][c];
      if (obj.empty()) continue;
      auto v = LaurentPoly::parse(values[r][c], vars);
      auto [it, fresh] = out.emplace(parse_obj(obj), v);
      if (!fresh) REQUIRE(it->second == v);  // seam cells repeat
    }
  return out;
}

}  // namespace

TEST_CASE("generalised frieze of the worked example") {
  auto ctx = figure3();
  auto expected = golden_table(golden::kModified, ctx.vars());
  REQUIRE(expected.size() == 20);
  for (const auto& [c, v] : expected) {
    INFO(c);
    CHECK(ctx.rho_indec(c) == v);
  }
  auto L = [&](const char* s) { return LaurentPoly::parse(s, ctx.vars()); };
  CHECK(ctx.alpha(Diagonal{4, 6}) == L("1/z"));
  CHECK(ctx.alpha(Diagonal{2, 5}).equals_constant(1));
  CHECK(ctx.alpha(std::vector<Diagonal>{}).equals_constant(1));
  CHECK(ctx.beta({1, 0}) == L("v*z"));
  CHECK(ctx.beta({0, 1}) == L("u/z"));
  CHECK(ctx.beta({0, 0}).equals_constant(1));
  CHECK(ctx.G({4, 6}).support_list() == std::vector<Diagonal>{{2, 5}});
  CHECK(ctx.rho_indec({4, 6}).to_string() == "(1+v*z)/z");
  CHECK(ctx.rho({{1, 7}, {2, 6}}) == L("u/z"));
  CHECK(ctx.rho({}).equals_constant(1));
  for (const auto& c : ctx.polygon().objects()) CHECK(ctx.rho({c, c}) == ctx.rho_indec(c).pow(2));
}

TEST_CASE("defect-1 meshes are the grey diamonds") {
  auto ctx = figure3();
  // defects computed by hand from the golden values
  auto expected = golden_table(golden::kModified, ctx.vars());
  const Polygon& p = ctx.polygon();
  std::set<Diagonal> arithmetic;
  for (const auto& c : p.objects()) {
    auto mesh = p.ar_mesh(c);
    LaurentPoly middle = LaurentPoly::constant(ctx.vars(), 1);
    for (const auto& b : mesh.middles) middle *= expected.at(b);
    LaurentPoly d = expected.at(mesh.start) * expected.at(c) - middle;
    CHECK((d.is_zero() || d.equals_constant(1)));
    if (d.equals_constant(1)) arithmetic.insert(c);
  }
  // the diamonds drawn in the figure, read as the end of their mesh
  std::set<Diagonal> drawn;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 9; ++c) {
      if (std::string(golden::kModified[r][c]) != "#") continue;
      int er = r, ec = c + 1;
      if (ec == 9) er = 4 - r, ec = 1;  // across the seam
      drawn.insert(parse_obj(golden::kObjects[er][ec]));
    }
  std::set<Diagonal> five{{2, 5}, {2, 7}, {3, 6}, {3, 8}, {5, 8}};
  CHECK(arithmetic == five);
  CHECK(drawn == five);

  auto report = ctx.frieze_check();
  CHECK(report.pass);
  auto ends = report.defect_one_ends();
  CHECK(std::set<Diagonal>(ends.begin(), ends.end()) == five);
  for (const auto& m : report.meshes) {
    if (m.mesh.end == Diagonal{2, 7} || m.mesh.end == Diagonal{2, 5}) CHECK(m.classification == MeshImageClass::InjCase);
    if (m.mesh.end == Diagonal{3, 6} || m.mesh.end == Diagonal{3, 8}) CHECK(m.classification == MeshImageClass::ProjCase);
    if (m.mesh.end == Diagonal{5, 8}) CHECK(m.classification == MeshImageClass::NonSplitSES);
    if (!five.count(m.mesh.end)) CHECK(m.classification == MeshImageClass::SplitSES);
  }
}

TEST_CASE("original frieze of the worked example") {
  auto ctx = figure2();
  auto expected = golden_table(golden::kOriginal, ctx.vars());
  REQUIRE(expected.size() == 20);
  for (const auto& [c, v] : expected) {
    INFO(c);
    CHECK(ctx.rho_indec(c) == v);
    for (const auto& [mono, coef] : ctx.rho_indec(c).terms()) CHECK(coef > 0);
  }
  CHECK(ctx.n_generators().empty());
  CHECK(ctx.frieze_check().pass);
  // denominators only involve the members of T crossing c
  const Polygon& p = ctx.polygon();
  for (const auto& c : p.objects()) {
    auto den = ctx.rho_indec(c).denominator();
    for (std::size_t i = 0; i < kT.size(); ++i)
      if (den[i] != 0) CHECK(p.crossing(kT[i], c));
  }
}

TEST_CASE("integer frieze") {
  auto ctx = CCContext::integer(mesh_engine_for(8), kR, kT);
  CHECK(ctx.rho_indec({4, 6}).equals_constant(2));
  CHECK(ctx.rho_indec({2, 5}).equals_constant(1));
  CHECK(ctx.rho_indec({3, 8}).equals_constant(3));
  auto mod = figure3();
  for (const auto& c : ctx.polygon().objects())
    CHECK(Rational(ctx.rho_indec(c).evaluate_all(1)) == mod.rho_indec(c).evaluate_all(1));
  CHECK(ctx.frieze_check().pass);
}

TEST_CASE("automatic epsilon") {
  auto ctx = CCContext::modified_auto(mesh_engine_for(8), kR, kT, {"u", "v", "z"});
  auto ref = figure3();
  for (const auto& c : ctx.polygon().objects()) CHECK(ctx.rho_indec(c).to_string() == ref.rho_indec(c).to_string());
  auto gen = CCContext::modified_auto(mesh_engine_for(8), kR, kT);
  CHECK(gen.vars()->names() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("invalid contexts") {
  auto engine = mesh_engine_for(8);
  CHECK_THROWS_AS(CCContext::modified(engine, {{2, 5}, {4, 7}}, kT, {}), std::invalid_argument);
  CHECK_THROWS_AS(CCContext::integer(engine, kR, {{1, 7}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(CCContext::modified(engine, kR, kT,
                                      {{{1, 7}, "u"}, {{2, 4}, "v"}, {{5, 7}, "z"}, {{2, 5}, "u"}, {{2, 7}, "1"}}),
                  EpsilonError);
  CHECK_THROWS_AS(parse_mode("fancy"), std::invalid_argument);
  CHECK(parse_mode("integer") == Mode::Integer);
}

TEST_CASE("frieze properties on random configurations") {
  std::mt19937_64 rng(4242);
  for (int m = 5; m <= 10; ++m) {
    auto engine = mesh_engine_for(m);
    const Polygon& p = engine->polygon();
    for (int iter = 0; iter < 6; ++iter) {
      auto [r, t] = oracle::random_config(p, rng);
      auto ctx = CCContext::modified_auto(engine, r, t);
      auto integer = CCContext::integer(engine, r, t);
      auto report = ctx.frieze_check();
      CHECK(report.pass);
      for (const auto& mr : report.meshes) {
        CHECK((mr.defect.is_zero() || mr.defect.equals_constant(1)));
        CHECK(mr.defect.is_zero() == (mr.classification == MeshImageClass::SplitSES));
      }
      for (const auto& c : p.objects()) {
        // alpha(c + Sigma c) beta([G c]) = 1
        auto unit = ctx.alpha(std::vector<Diagonal>{c, p.suspend(c)}) * ctx.beta(module_class(ctx.G(c)));
        CHECK(unit.equals_constant(1));
        CHECK(integer.rho_indec(c).evaluate_all(1) == ctx.rho_indec(c).evaluate_all(1));
      }
      std::uniform_int_distribution<std::size_t> pick(0, p.objects().size() - 1);
      for (int k = 0; k < 20; ++k) {
        auto a = p.objects()[pick(rng)], c = p.objects()[pick(rng)];
        CHECK(ctx.rho({a, c}) == ctx.rho_indec(a) * ctx.rho_indec(c));
      }
    }
  }
}
