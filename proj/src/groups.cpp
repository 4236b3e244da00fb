#include "prodquot/groups.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "prodquot/errors.hpp"

namespace prodquot {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

void ElementSet::insert(Elem x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }

void ElementSet::erase(Elem x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

bool ElementSet::contains(Elem x) const {
  return x < universe_ && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// --------------------------------------------------------------- AbelianType

std::int64_t AbelianType::order() const {
  std::int64_t n = 1;
  for (auto d : invariant_factors) n *= d;
  return n;
}

void AbelianType::validate() const {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2)
      throw MalformedInput("abelian type: invariant factor " +
                           std::to_string(invariant_factors[i]) + " is < 2");
    if (i + 1 < invariant_factors.size() && invariant_factors[i + 1] % invariant_factors[i] != 0)
      throw MalformedInput("abelian type: " + std::to_string(invariant_factors[i]) +
                           " does not divide " + std::to_string(invariant_factors[i + 1]));
  }
  if (order() > 65535) throw SizeCapExceeded("abelian type: order exceeds 65535");
}

// --------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw MalformedInput("permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (auto p : c) {
      if (p >= degree) throw MalformedInput("permutation: point " + std::to_string(p + 1) + " out of range");
      if (used[p]) throw MalformedInput("permutation: cycles are not disjoint");
      used[p] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) im[c[i]] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(im));
}

namespace {

std::vector<std::uint32_t> parse_cycle_points(std::string_view body, std::size_t degree) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : body) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    } else {
      throw ParseError(std::string("cycle notation: unexpected character '") + ch + "'");
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  // Compact "(12534)" on at most 9 points: one digit per point.
  if (tokens.size() == 1 && tokens[0].size() > 1 && degree <= 9) {
    std::string digits = tokens[0];
    tokens.clear();
    for (char d : digits) tokens.emplace_back(1, d);
  }
  std::vector<std::uint32_t> pts;
  for (const auto& t : tokens) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || v < 1 || v > degree)
      throw ParseError("cycle notation: point '" + t + "' out of range 1.." + std::to_string(degree));
    pts.push_back(v - 1);
  }
  return pts;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("cycle notation: empty permutation (use \"()\")");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("cycle notation: missing ')'");
    auto pts = parse_cycle_points(text.substr(i + 1, close - i - 1), degree);
    if (!pts.empty()) cycles.push_back(std::move(pts));
    i = close + 1;
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const MalformedInput& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out.push_back('(');
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out.push_back(' ');
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw MalformedInput("permutation: degree mismatch");
  std::vector<std::uint32_t> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p.images_[q.images_[i]];
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

// --------------------------------------------------------------- FiniteGroup

Elem FiniteGroup::pow(Elem a, std::int64_t n) const {
  const auto ord = static_cast<std::int64_t>(orders_[a]);
  n %= ord;
  if (n < 0) n += ord;
  Elem r = identity();
  for (std::int64_t i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

const AbelianType& FiniteGroup::abelian_type() const {
  if (backend_ != Backend::abelian) throw UnsupportedHypothesis("group is not on the abelian backend");
  return type_;
}

std::span<const std::int64_t> FiniteGroup::coordinates(Elem a) const {
  if (backend_ != Backend::abelian) throw UnsupportedHypothesis("group is not on the abelian backend");
  const auto k = type_.invariant_factors.size();
  return std::span<const std::int64_t>(coords_).subspan(static_cast<std::size_t>(a) * k, k);
}

const Permutation& FiniteGroup::permutation(Elem a) const {
  if (backend_ != Backend::permutation) throw UnsupportedHypothesis("group is not on the permutation backend");
  return perms_[a];
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

std::optional<Elem> FiniteGroup::find(std::string_view label) const {
  if (backend_ == Backend::permutation) {
    try {
      auto p = Permutation::parse(label, perms_.front().degree());
      auto it = std::find(perms_.begin(), perms_.end(), p);
      if (it == perms_.end()) return std::nullopt;
      return static_cast<Elem>(it - perms_.begin());
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  const auto want = strip_spaces(label);
  for (std::size_t i = 0; i < order_; ++i)
    if (labels_[i] == want) return static_cast<Elem>(i);
  return std::nullopt;
}

void FiniteGroup::finish() {
  const auto n = order_;
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  orders_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    orders_[a] = k;
  }
  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table_[a * n + b] != table_[b * n + a]) {
        abelian_ = false;
        break;
      }
}

FiniteGroup make_abelian(const AbelianType& type) {
  type.validate();
  FiniteGroup g;
  g.backend_ = Backend::abelian;
  g.type_ = type;
  const auto& d = type.invariant_factors;
  const auto k = d.size();
  const auto n = static_cast<std::size_t>(type.order());
  g.order_ = n;
  g.coords_.resize(n * k);
  // Lexicographic order, last coordinate fastest.
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto rest = idx;
    for (std::size_t j = k; j-- > 0;) {
      g.coords_[idx * k + j] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(d[j]));
      rest /= static_cast<std::size_t>(d[j]);
    }
  }
  auto index_of = [&](const std::vector<std::int64_t>& x) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) idx = idx * static_cast<std::size_t>(d[j]) + static_cast<std::size_t>(x[j]);
    return idx;
  };
  g.table_.resize(n * n);
  std::vector<std::int64_t> tmp(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t j = 0; j < k; ++j) tmp[j] = (g.coords_[a * k + j] + g.coords_[b * k + j]) % d[j];
      g.table_[a * n + b] = static_cast<std::uint16_t>(index_of(tmp));
    }
  g.labels_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += ",";
      s += std::to_string(g.coords_[a * k + j]);
    }
    g.labels_[a] = s + ")";
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::int64_t> e(k, 0);
    e[j] = 1;
    g.generators_.push_back(static_cast<Elem>(index_of(e)));
  }
  g.spec_ = "ab:";
  for (std::size_t j = 0; j < k; ++j) g.spec_ += (j ? "," : "") + std::to_string(d[j]);
  g.finish();
  return g;
}

FiniteGroup make_permutation_group(std::span<const Permutation> gens, std::size_t degree, std::size_t cap) {
  if (degree == 0) throw MalformedInput("permutation group: degree must be positive");
  if (cap > 65535) throw SizeCapExceeded("permutation group: closure cap above 65535 is unsupported");
  for (const auto& p : gens)
    if (p.degree() != degree) throw MalformedInput("permutation group: generators have different degrees");

  // Breadth-first layers by word length, each layer sorted by image sequence.
  std::map<Permutation, Elem> index;
  std::vector<Permutation> elems{Permutation::identity(degree)};
  index.emplace(elems[0], 0);
  std::vector<Permutation> layer{elems[0]};
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : layer)
      for (const auto& s : gens) {
        auto y = x * s;
        if (!index.contains(y)) {
          index.emplace(y, 0);
          next.push_back(std::move(y));
        }
      }
    std::sort(next.begin(), next.end());
    for (auto& y : next) {
      index[y] = static_cast<Elem>(elems.size());
      elems.push_back(y);
      if (elems.size() > cap)
        throw SizeCapExceeded("permutation group: closure exceeds cap of " + std::to_string(cap));
    }
    layer = std::move(next);
  }

  FiniteGroup g;
  g.backend_ = Backend::permutation;
  const auto n = elems.size();
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<std::uint16_t>(index.at(elems[a] * elems[b]));
  g.labels_.reserve(n);
  for (const auto& p : elems) g.labels_.push_back(p.to_string());
  std::string gen_text;
  for (const auto& s : gens) {
    g.generators_.push_back(index.at(s));
    if (!gen_text.empty()) gen_text += ",";
    gen_text += s.to_string();
  }
  g.spec_ = "perm:" + std::to_string(degree) + ":" + gen_text;
  g.perms_ = std::move(elems);
  g.finish();
  return g;
}

FiniteGroup parse_group_spec(std::string_view spec, std::size_t cap) {
  if (spec.starts_with("ab:")) {
    AbelianType t;
    auto body = strip_spaces(spec.substr(3));
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("group spec: bad invariant factor '" + tok + "'");
      t.invariant_factors.push_back(v);
    }
    try {
      return make_abelian(t);
    } catch (const MalformedInput& e) {
      throw ParseError(std::string("group spec: ") + e.what());
    }
  }
  if (spec.starts_with("perm:")) {
    auto rest = spec.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("group spec: expected perm:n:generators");
    auto deg_text = strip_spaces(rest.substr(0, colon));
    std::size_t degree = 0;
    auto [ptr, ec] = std::from_chars(deg_text.data(), deg_text.data() + deg_text.size(), degree);
    if (ec != std::errc{} || ptr != deg_text.data() + deg_text.size() || degree == 0)
      throw ParseError("group spec: bad degree '" + deg_text + "'");
    std::vector<Permutation> gens;
    auto body = rest.substr(colon + 1);
    // Generators are separated by commas outside parentheses.
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        auto piece = strip_spaces(body.substr(start, i - start));
        if (!piece.empty()) gens.push_back(Permutation::parse(body.substr(start, i - start), degree));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        if (depth == 0) throw ParseError("group spec: unbalanced ')'");
        --depth;
      }
    }
    return make_permutation_group(gens, degree, cap);
  }
  throw ParseError("group spec: expected 'ab:' or 'perm:' prefix in \"" + std::string(spec) + "\"");
}

// ---------------------------------------------------------------- operations

std::uint32_t element_order(const FiniteGroup& g, Elem x) { return g.element_order(x); }

ElementSet cyclic_subgroup(const FiniteGroup& g, Elem x) {
  ElementSet s(g.order());
  Elem y = FiniteGroup::identity();
  do {
    s.insert(y);
    y = g.mul(y, x);
  } while (y != FiniteGroup::identity());
  return s;
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& s) {
  const auto gens = s.elements();
  ElementSet h(g.order());
  h.insert(FiniteGroup::identity());
  std::vector<Elem> queue{FiniteGroup::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto t : gens) {
      auto y = g.mul(queue[head], t);
      if (!h.contains(y)) {
        h.insert(y);
        queue.push_back(y);
      }
    }
  }
  return h;
}

ElementSet conjugacy_closure(const FiniteGroup& g, const ElementSet& s) {
  if (g.is_abelian()) return s;
  ElementSet out(g.order());
  for (auto x : s.elements())
    for (std::size_t c = 0; c < g.order(); ++c) out.insert(g.conj(static_cast<Elem>(c), x));
  return out;
}

bool is_generating(const FiniteGroup& g, const ElementSet& s) {
  return subgroup_closure(g, s).size() == g.order();
}

bool is_generating(const FiniteGroup& g, std::span<const Elem> elems) {
  ElementSet s(g.order());
  for (auto x : elems) s.insert(x);
  return is_generating(g, s);
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  ElementSet gen_set(g.order());
  ElementSet closure(g.order());
  closure.insert(FiniteGroup::identity());
  for (auto x : by_order) {
    if (closure.size() == g.order()) break;
    if (closure.contains(x)) continue;
    gens.push_back(x);
    gen_set.insert(x);
    closure = subgroup_closure(g, gen_set);
  }
  return gens;
}

namespace {

struct AutSearch {
  const FiniteGroup& g;
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> candidates;
  std::vector<Automorphism> out;

  static constexpr Elem kUnset = ~Elem{0};

  // Extends the partial map from <gens[0..k)> to <gens[0..k]>; false on conflict.
  bool extend(std::vector<Elem>& img, std::vector<bool>& used, std::size_t k) const {
    std::vector<Elem> queue;
    for (std::size_t x = 0; x < img.size(); ++x)
      if (img[x] != kUnset) queue.push_back(static_cast<Elem>(x));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem h = queue[head];
      for (std::size_t j = 0; j <= k; ++j) {
        const Elem x = g.mul(h, gens[j]);
        const Elem y = g.mul(img[h], img[gens[j]]);
        if (img[x] == kUnset) {
          if (used[y]) return false;
          img[x] = y;
          used[y] = true;
          queue.push_back(x);
        } else if (img[x] != y) {
          return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t k, const std::vector<Elem>& img, const std::vector<bool>& used) {
    if (k == gens.size()) {
      out.push_back(img);
      return;
    }
    for (auto y : candidates[k]) {
      auto img2 = img;
      auto used2 = used;
      const Elem x = gens[k];
      if (img2[x] != kUnset) {
        if (img2[x] != y) continue;
      } else {
        if (used2[y]) continue;
        img2[x] = y;
        used2[y] = true;
      }
      if (extend(img2, used2, k)) run(k + 1, img2, used2);
    }
  }
};

}  // namespace

std::vector<Automorphism> automorphisms(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw SizeCapExceeded("automorphisms: group order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
  AutSearch search{g, small_generating_set(g), {}, {}};
  for (auto x : search.gens) {
    std::vector<Elem> c;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (g.element_order(static_cast<Elem>(y)) == g.element_order(x)) c.push_back(static_cast<Elem>(y));
    search.candidates.push_back(std::move(c));
  }
  std::vector<Elem> img(g.order(), AutSearch::kUnset);
  std::vector<bool> used(g.order(), false);
  img[0] = 0;
  used[0] = true;
  search.run(0, img, used);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

ElementSet image(const Automorphism& phi, const ElementSet& s) {
  ElementSet out(s.universe());
  for (auto x : s.elements()) out.insert(phi[x]);
  return out;
}

}  // namespace prodquot
