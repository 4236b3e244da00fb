#include "prodquot/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

const std::string kA5 = "perm:5:(1 2 3),(3 4 5)";

std::vector<ExampleFixture> build_fixtures() {
  std::vector<ExampleFixture> f;
  f.push_back({1,
               "A5, 3^4 and (2,5,5)",
               kA5,
               {},
               Signature({3, 3, 3, 3}),
               Signature({2, 5, 5}),
               {"(123)", "(345)", "(432)", "(215)"},
               {"(24)(35)", "(21345)", "(12345)"},
               false,
               {4, 21},
               "The genus labels given with this example attach g=4 to 3^4 and g=21 to (2,5,5); Riemann-Hurwitz gives the "
               "reverse, so only the unordered pair {4,21} is compared."});
  f.push_back({2,
               "A5, 5^3 and (2,2,2,3)",
               kA5,
               {},
               Signature({5, 5, 5}),
               Signature({2, 2, 2, 3}),
               {"(12534)", "(12453)", "(12345)"},
               {"(12)(34)", "(24)(35)", "(14)(35)", "(234)"},
               true,
               {6, 13},
               "The b-tuple as listed multiplies to 1 only when composed left to right; it is read in "
               "reverse order (b4, b3, b2, b1), which is the same tuple under the opposite convention. "
               "Genus labels per signature are swapped relative to Riemann-Hurwitz."});
  f.push_back({3,
               "A5, 2^5 and (3,3,5)",
               kA5,
               {},
               Signature({2, 2, 2, 2, 2}),
               Signature({3, 3, 5}),
               {"(12)(34)", "(13)(24)", "(14)(23)", "(14)(25)", "(14)(25)"},
               {"(123)", "(345)", "(54321)"},
               false,
               {5, 16},
               "The a-tuple is listed with the label a3 used twice; the five elements are taken in order "
               "of appearance. Genus labels per signature are swapped relative to Riemann-Hurwitz."});
  f.push_back({4,
               "D4 x Z/2, 2^6 and (2,2,2,4)",
               "perm:6:(1 2 3 4),(1 3),(5 6)",
               {{"x", "(1 2 3 4)"}, {"y", "(1 3)"}, {"z", "(5 6)"}},
               Signature({2, 2, 2, 2, 2, 2}),
               Signature({2, 2, 2, 4}),
               {"y", "y*x*z", "y*x^2", "y*x*z", "x^2*z", "x^2*z"},
               {"z", "y*z", "x*y", "x"},
               false,
               {9, 3},
               "D4 = <x, y | x^4 = y^2 = e, yxy = x^-1> realized as x = (1 2 3 4), y = (1 3); the Z/2 "
               "factor is z = (5 6), so (w, 1) is written w*z."});
  f.push_back({5,
               "S4, 2^6 and (3,4,4)",
               "perm:4:(1 2 3 4),(1 2)",
               {},
               Signature({2, 2, 2, 2, 2, 2}),
               Signature({3, 4, 4}),
               {"(12)", "(12)", "(23)", "(23)", "(34)", "(34)"},
               {"(123)", "(1234)", "(1243)"},
               false,
               {13, 3},
               ""});
  return f;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

const std::vector<ExampleFixture>& example_fixtures() {
  static const std::vector<ExampleFixture> fixtures = build_fixtures();
  return fixtures;
}

const ExampleFixture& example_fixture(int id) {
  for (const auto& f : example_fixtures())
    if (f.id == id) return f;
  throw MalformedInput("no example fixture with id " + std::to_string(id));
}

Elem resolve_entry(const FiniteGroup& g, const std::map<std::string, std::string>& named, const std::string& entry) {
  const auto text = trim(entry);
  if (!text.empty() && text.front() == '(') {
    auto x = g.find(text);
    if (!x) throw ParseError("entry '" + entry + "' is not an element of " + g.spec());
    return *x;
  }
  Elem acc = FiniteGroup::identity();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('*', start);
    if (stop == std::string::npos) stop = text.size();
    auto token = trim(std::string_view(text).substr(start, stop - start));
    std::int64_t power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      auto exp = trim(std::string_view(token).substr(caret + 1));
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc{} || ptr != exp.data() + exp.size()) throw ParseError("bad exponent in '" + entry + "'");
      token = trim(std::string_view(token).substr(0, caret));
    }
    Elem base = FiniteGroup::identity();
    if (token != "e") {
      auto it = named.find(token);
      if (it == named.end()) throw ParseError("unknown generator '" + token + "' in '" + entry + "'");
      auto x = g.find(it->second);
      if (!x) throw ParseError("generator '" + token + "' is not in " + g.spec());
      base = *x;
    }
    acc = g.mul(acc, g.pow(base, power));
    start = stop + 1;
  }
  return acc;
}

bool VerificationResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationResult::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return {};
}

VerificationResult verify_example(const ExampleFixture& fx) {
  VerificationResult out;
  out.id = fx.id;
  auto g = std::make_shared<const FiniteGroup>(parse_group_spec(fx.group_spec));
  auto resolve = [&](const std::vector<std::string>& entries, bool reversed) {
    std::vector<Elem> t;
    for (const auto& e : entries) t.push_back(resolve_entry(*g, fx.named_generators, e));
    if (reversed) std::reverse(t.begin(), t.end());
    return SphericalSystem(g, std::move(t));
  };
  const auto a = resolve(fx.tuple_first, false);
  const auto b = resolve(fx.tuple_second, fx.second_reversed);
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("orders (first)", a.signature() == fx.signature_first,
      "orders " + a.signature().to_string() + ", expected " + fx.signature_first.to_string());
  add("orders (second)", b.signature() == fx.signature_second,
      "orders " + b.signature().to_string() + ", expected " + fx.signature_second.to_string());
  add("product (first)", product_is_identity(a), "product " + g->label(tuple_product(*g, a.tuple())));
  add("product (second)", product_is_identity(b), "product " + g->label(tuple_product(*g, b.tuple())));
  add("generation (first)", generates(a),
      "generated subgroup has order " + std::to_string(subgroup_closure(*g, [&] {
        ElementSet s(g->order());
        for (auto x : a.tuple()) s.insert(x);
        return s;
      }()).size()));
  add("generation (second)", generates(b),
      "generated subgroup has order " + std::to_string(subgroup_closure(*g, [&] {
        ElementSet s(g->order());
        for (auto x : b.tuple()) s.insert(x);
        return s;
      }()).size()));
  const bool free = acts_freely(a, b);
  add("freeness", free, free ? "stabilizer sets meet only in the identity" : "stabilizer sets share an element");

  try {
    const auto n = static_cast<std::int64_t>(g->order());
    const int g1 = genus_from(a.signature(), n);
    const int g2 = genus_from(b.signature(), n);
    out.genera = std::pair(g1, g2);
    const auto got = std::minmax(g1, g2);
    const auto want = std::minmax(fx.expected_genera.first, fx.expected_genera.second);
    add("genus pair", got == want,
        "{" + std::to_string(g1) + "," + std::to_string(g2) + "}, expected {" +
            std::to_string(fx.expected_genera.first) + "," + std::to_string(fx.expected_genera.second) + "}");
    if (out.passed()) {
      const auto st = build_structure(a, b);
      const auto inv = surface_invariants(st);
      out.invariants = inv;
      add("invariants", inv.K2 == 8 && inv.chi == 1,
          "K^2 = " + std::to_string(inv.K2) + ", chi = " + std::to_string(inv.chi));
    }
  } catch (const Error& e) {
    add("genus pair", false, e.what());
  }
  return out;
}

VerificationResult verify_example(int id) { return verify_example(example_fixture(id)); }

}  // namespace prodquot
