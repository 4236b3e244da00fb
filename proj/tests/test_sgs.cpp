#include <doctest.h>

#include "prodquot/classify.hpp"
#include "prodquot/errors.hpp"
#include "prodquot/sgs.hpp"
#include "oracles.hpp"

using namespace prodquot;
using namespace prodquot::oracle;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Elem el(const FiniteGroup& g, const char* label) {
  auto x = g.find(label);
  REQUIRE(x.has_value());
  return *x;
}

}  // namespace

TEST_CASE("enumerate_sgs agrees with the oracle on abelian groups of order <= 16") {
  std::size_t compared = 0, brute = 0;
  for (std::int64_t n = 2; n <= 16; ++n)
    for (const auto& type : abelian_types_of_order(n)) {
      const auto g = make_abelian(type);
      for (const auto& s : admissible_signatures(g)) {
        CAPTURE(g.spec());
        CAPTURE(s.to_string());
        bool used = false;
        REQUIRE(sgs_matches_oracle(g, s, &used));
        brute += used;
        ++compared;
      }
    }
  CHECK(compared > 0);
  CHECK(brute > 0);
  MESSAGE("signatures compared: " << compared << ", with full brute force: " << brute);
}

TEST_CASE("enumerate_sgs agrees with the oracle on small non-abelian groups") {
  const auto s3 = parse_group_spec("perm:3:(1 2),(1 2 3)");
  CHECK(sgs_matches_oracle(s3, Signature({2, 2, 3})));
  CHECK(sgs_matches_oracle(s3, Signature({2, 2, 2, 2})));
  const auto d4 = parse_group_spec("perm:4:(1 2 3 4),(1 3)");
  CHECK(sgs_matches_oracle(d4, Signature({2, 2, 2, 2})));
  CHECK(sgs_matches_oracle(d4, Signature({2, 4, 4})));
}

TEST_CASE("small enumeration examples") {
  const auto v4 = share(make_abelian({{2, 2}}));
  const auto triples = enumerate_sgs(v4, Signature({2, 2, 2}));
  CHECK(triples.size() == brute_force_sgs(*v4, Signature({2, 2, 2})).size());
  CHECK(triples.size() == 6);

  const auto z55 = share(make_abelian({{5, 5}}));
  CHECK(enumerate_sgs(z55, Signature({5, 5, 5})).size() == 480);
  CHECK_FALSE(enumerate_sgs(share(make_abelian({{6}})), Signature({2, 2, 3, 3})).empty());
  CHECK(enumerate_sgs(share(make_abelian({{2, 2, 2}})), Signature({2, 2, 2})).empty());
}

TEST_CASE("stabilizer sets") {
  const auto z55 = share(make_abelian({{5, 5}}));
  const auto& g = *z55;
  SphericalSystem a(z55, {el(g, "(1,0)"), el(g, "(0,1)"), el(g, "(4,4)")});
  CHECK(stabilizer_set(a).size() == 13);

  const auto a5 = share(parse_group_spec("perm:5:(1 2 3),(3 4 5)"));
  SphericalSystem three(a5, {el(*a5, "(123)"), el(*a5, "(345)"), el(*a5, "(432)"), el(*a5, "(215)")});
  CHECK(stabilizer_set(three).size() == 21);

  const auto z6 = share(make_abelian({{6}}));
  SphericalSystem no_generator(z6, {el(*z6, "(3)"), el(*z6, "(3)"), el(*z6, "(2)"), el(*z6, "(4)")});
  CHECK(stabilizer_set(no_generator).size() == 4);
  SphericalSystem with_generator(z6, {el(*z6, "(3)"), el(*z6, "(1)"), el(*z6, "(2)")});
  CHECK(stabilizer_set(with_generator).size() == 6);
}

TEST_CASE("freeness and structures") {
  const auto z55 = share(make_abelian({{5, 5}}));
  const auto& g = *z55;
  SphericalSystem a(z55, {el(g, "(1,0)"), el(g, "(0,1)"), el(g, "(4,4)")});
  SphericalSystem b(z55, {el(g, "(1,2)"), el(g, "(3,4)"), el(g, "(1,4)")});
  REQUIRE(is_spherical_system(b, Signature({5, 5, 5})));
  CHECK(acts_freely(a, b));
  CHECK_FALSE(acts_freely(a, a));
  const auto st = build_structure(a, b);
  CHECK(st.curve_first.genus == 6);
  CHECK(st.curve_second.genus == 6);
  CHECK_THROWS_AS(build_structure(a, a), ActionNotFree);

  const auto other = share(make_abelian({{5, 5}}));
  CHECK(acts_freely(a, SphericalSystem(other, std::vector<Elem>(b.tuple().begin(), b.tuple().end()))));
  const auto z25 = share(make_abelian({{25}}));
  CHECK_THROWS_AS(acts_freely(a, SphericalSystem(z25, {1, 2, 22})), GroupMismatch);
}

TEST_CASE("cyclic groups never act freely") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto g = make_abelian({{n}});
    for (const auto& p : admissible_signature_pairs(g)) {
      std::vector<ElementSet> first, second;
      for_each_sgs(g, p.first.signature, [&](std::span<const Elem> t) { first.push_back(stabilizer_set(g, t)); });
      for_each_sgs(g, p.second.signature, [&](std::span<const Elem> t) { second.push_back(stabilizer_set(g, t)); });
      for (const auto& x : first)
        for (const auto& y : second) {
          auto common = x & y;
          REQUIRE(common.size() > 1);
        }
    }
  }
}
