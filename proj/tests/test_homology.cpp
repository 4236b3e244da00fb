#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "prodquot/classify.hpp"
#include "prodquot/errors.hpp"
#include "prodquot/fixtures.hpp"
#include "prodquot/homology.hpp"

using namespace prodquot;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Elem el(const FiniteGroup& g, const char* label) {
  auto x = g.find(label);
  REQUIRE(x.has_value());
  return *x;
}

FiniteAbelianStructure structure(std::vector<int> d) {
  FiniteAbelianStructure s;
  for (int x : d) s.invariant_factors.emplace_back(x);
  return s;
}

void check_invariants(const UnmixedStructure& st, const FiniteAbelianStructure& h1) {
  const BigInt n = static_cast<std::uint64_t>(st.group->order());
  const auto g1 = orbifold_abelianization(st.first).structure();
  const auto g2 = orbifold_abelianization(st.second).structure();
  CHECK(h1.order() * n == g1.order() * g2.order());
  CHECK(h1.order() % n == 0);
  std::int64_t l = 1;
  for (const auto* s : {&st.curve_first.signature, &st.curve_second.signature})
    for (int m : s->indices()) l = std::lcm(l, static_cast<std::int64_t>(m));
  CHECK(BigInt(l) % h1.exponent() == 0);
}

}  // namespace

TEST_CASE("orbifold abelianizations") {
  const auto z = share(make_abelian({{2, 2, 2}}));
  const auto g = classify_group(z);
  REQUIRE(g.classes.size() == 1);
  const auto& st = g.classes[0].representative;
  CHECK(orbifold_abelianization(st.first).structure() == structure({2, 2, 2, 2}));
  CHECK(orbifold_abelianization(st.second).structure() == structure({2, 2, 2, 2, 2}));

  const auto z33 = share(make_abelian({{3, 3}}));
  const auto g3 = classify_group(z33);
  REQUIRE(g3.classes.size() == 1);
  CHECK(orbifold_abelianization(g3.classes[0].representative.first).structure() == structure({3, 3, 3}));
}

TEST_CASE("H1 of the four abelian families") {
  const std::vector<std::pair<const char*, FiniteAbelianStructure>> expected = {
      {"ab:2,2,2", structure({2, 2, 2, 2, 2, 2})},
      {"ab:2,2,2,2", structure({2, 2, 2, 2})},
      {"ab:3,3", structure({3, 3, 3, 3})},
      {"ab:5,5", structure({5, 5})},
  };
  for (const auto& [spec, h1] : expected) {
    CAPTURE(spec);
    const auto gc = classify_group(share(parse_group_spec(spec)));
    REQUIRE_FALSE(gc.classes.empty());
    for (const auto& cls : gc.classes)
      for (const auto& m : cls.members) {
        const auto got = h1_of_surface(m);
        CHECK(got == h1);
        check_invariants(m, got);
      }
  }
}

TEST_CASE("H1 is constant on every full class of (Z/5)^2 and (Z/3)^2") {
  for (const auto* spec : {"ab:5,5", "ab:3,3"}) {
    const auto g = share(parse_group_spec(spec));
    for (const auto& cls : classify_group(g).classes) {
      const auto h1 = h1_of_surface(cls.representative);
      const auto auts = automorphisms(*g, 100);
      // Every raw structure of the class is an automorphism image of some
      // rearrangement of a member.
      for (const auto& m : cls.members) {
        std::vector<Elem> t1(m.first.tuple().begin(), m.first.tuple().end());
        std::vector<Elem> t2(m.second.tuple().begin(), m.second.tuple().end());
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        do {
          auto u2 = t2;
          do {
            REQUIRE(h1_of_surface(build_structure(SphericalSystem(g, t1), SphericalSystem(g, u2))) == h1);
          } while (std::next_permutation(u2.begin(), u2.end()));
        } while (std::next_permutation(t1.begin(), t1.end()));
      }
      for (std::size_t k = 0; k < auts.size(); k += 7) {
        const auto& phi = auts[k];
        std::vector<Elem> a, b;
        for (auto x : cls.representative.first.tuple()) a.push_back(phi[x]);
        for (auto x : cls.representative.second.tuple()) b.push_back(phi[x]);
        REQUIRE(h1_of_surface(build_structure(SphericalSystem(g, a), SphericalSystem(g, b))) == h1);
      }
    }
  }
}

TEST_CASE("abelian coordinates on the permutation backend") {
  // (Z/2)^3 as permutations agrees with the abelian backend.
  const auto perm = share(parse_group_spec("perm:6:(1 2),(3 4),(5 6)"));
  const auto coords = abelian_coordinates(*perm);
  CHECK(coords.moduli == std::vector<BigInt>{2, 2, 2});
  const auto gc = classify_group(perm);
  REQUIRE(gc.classes.size() == 1);
  CHECK(h1_of_surface(gc.classes[0].representative) == structure({2, 2, 2, 2, 2, 2}));

  const auto c6 = parse_group_spec("perm:5:(1 2 3),(4 5)");
  CHECK(abelian_coordinates(c6).moduli == std::vector<BigInt>{6});
}

TEST_CASE("non-abelian groups are rejected") {
  const auto fx = example_fixture(5);
  const auto g = share(parse_group_spec(fx.group_spec));
  std::vector<Elem> a, b;
  for (const auto& e : fx.tuple_first) a.push_back(resolve_entry(*g, fx.named_generators, e));
  for (const auto& e : fx.tuple_second) b.push_back(resolve_entry(*g, fx.named_generators, e));
  const auto st = build_structure(SphericalSystem(g, a), SphericalSystem(g, b));
  CHECK_THROWS_AS(h1_of_surface(st), UnsupportedHypothesis);
  const auto inv = surface_invariants(st);
  CHECK(inv.chi == 1);
  CHECK(inv.K2 == 8);
  CHECK(inv.e == 4);
  CHECK(inv.pg == 0);
  CHECK(inv.q == 0);
}

TEST_CASE("Beauville H1 by hand") {
  const auto z55 = share(make_abelian({{5, 5}}));
  const auto& g = *z55;
  SphericalSystem a(z55, {el(g, "(1,0)"), el(g, "(0,1)"), el(g, "(4,4)")});
  SphericalSystem b(z55, {el(g, "(1,2)"), el(g, "(3,4)"), el(g, "(1,4)")});
  const auto st = build_structure(a, b);
  CHECK(h1_of_surface(st) == structure({5, 5}));
  CHECK(surface_invariants(st).K2 == 8);
}
