#include "prodquot/sgs.hpp"

#include "prodquot/errors.hpp"

namespace prodquot {

SphericalSystem::SphericalSystem(GroupPtr group, std::vector<Elem> tuple)
    : group_(std::move(group)), tuple_(std::move(tuple)) {
  if (!group_) throw MalformedInput("spherical system: null group");
  for (auto x : tuple_)
    if (x >= group_->order()) throw MalformedInput("spherical system: element index out of range");
}

Signature SphericalSystem::signature() const {
  std::vector<int> m;
  for (auto x : tuple_) m.push_back(static_cast<int>(group_->element_order(x)));
  return Signature(std::move(m));
}

std::vector<std::string> SphericalSystem::labels() const {
  std::vector<std::string> out;
  for (auto x : tuple_) out.push_back(group_->label(x));
  return out;
}

Elem tuple_product(const FiniteGroup& g, std::span<const Elem> tuple) {
  Elem p = FiniteGroup::identity();
  for (auto x : tuple) p = g.mul(p, x);
  return p;
}

bool product_is_identity(const SphericalSystem& sys) {
  return tuple_product(sys.group(), sys.tuple()) == FiniteGroup::identity();
}

bool generates(const SphericalSystem& sys) { return is_generating(sys.group(), sys.tuple()); }

bool has_orders(const SphericalSystem& sys, const Signature& s) {
  if (sys.size() != s.size()) return false;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (static_cast<int>(sys.group().element_order(sys[j])) != s[j]) return false;
  return true;
}

bool is_spherical_system(const SphericalSystem& sys, const Signature& s) {
  return has_orders(sys, s) && product_is_identity(sys) && generates(sys);
}

namespace {

class SgsSearch {
 public:
  SgsSearch(const FiniteGroup& g, const Signature& s, const std::function<void(std::span<const Elem>)>& visit)
      : g_(g), s_(s), visit_(visit), r_(s.size()), tuple_(s.size()), prefix_(s.size() + 1) {
    for (std::size_t j = 0; j < r_; ++j) {
      std::vector<Elem> c;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (static_cast<int>(g.element_order(static_cast<Elem>(x))) == s[j]) c.push_back(static_cast<Elem>(x));
      candidates_.push_back(std::move(c));
    }
    // For each depth k, a generating set of the subgroup spanned by every
    // element usable at positions k..r-1. If that subgroup is all of G the
    // reachability check at depth k is skipped.
    tail_gens_.resize(r_ + 1);
    tail_generates_.assign(r_ + 1, false);
    for (std::size_t k = 0; k <= r_; ++k) {
      ElementSet tail(g.order());
      for (std::size_t j = k; j < r_; ++j)
        for (auto x : candidates_[j]) tail.insert(x);
      auto h = subgroup_closure(g, tail);
      tail_generates_[k] = h.size() == g.order();
      ElementSet gen_set(g.order());
      ElementSet closure(g.order());
      closure.insert(FiniteGroup::identity());
      for (auto x : tail.elements()) {
        if (closure.contains(x)) continue;
        tail_gens_[k].push_back(x);
        gen_set.insert(x);
        closure = subgroup_closure(g, gen_set);
      }
    }
    prefix_[0] = FiniteGroup::identity();
    span_.assign(r_ + 1, ElementSet(g.order()));
    span_[0].insert(FiniteGroup::identity());
    cur_.assign(r_ + 1, &span_[0]);
  }

  void run() {
    if (r_ == 0) return;
    descend(0);
  }

 private:
  bool reachable(std::size_t depth) const {
    if (tail_generates_[depth]) return true;
    ElementSet s = *cur_[depth];
    for (auto x : tail_gens_[depth]) s.insert(x);
    return is_generating(g_, s);
  }

  void descend(std::size_t depth) {
    if (depth + 1 == r_) {
      // The last entry is a product of earlier ones, so it adds nothing to the span.
      const Elem last = g_.inv(prefix_[depth]);
      if (static_cast<int>(g_.element_order(last)) != s_[depth]) return;
      tuple_[depth] = last;
      if (cur_[depth]->size() == g_.order()) visit_(tuple_);
      return;
    }
    if (!reachable(depth)) return;
    for (auto x : candidates_[depth]) {
      tuple_[depth] = x;
      prefix_[depth + 1] = g_.mul(prefix_[depth], x);
      if (cur_[depth]->contains(x)) {
        cur_[depth + 1] = cur_[depth];
      } else {
        span_[depth + 1] = *cur_[depth];
        span_[depth + 1].insert(x);
        span_[depth + 1] = subgroup_closure(g_, span_[depth + 1]);
        cur_[depth + 1] = &span_[depth + 1];
      }
      descend(depth + 1);
    }
  }

  const FiniteGroup& g_;
  const Signature& s_;
  const std::function<void(std::span<const Elem>)>& visit_;
  std::size_t r_;
  std::vector<Elem> tuple_;
  std::vector<Elem> prefix_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::vector<Elem>> tail_gens_;
  std::vector<bool> tail_generates_;
  // cur_[k] points at the subgroup generated by the first k entries; it is
  // stored in span_[j] for the last j <= k where the subgroup grew.
  std::vector<ElementSet> span_;
  std::vector<const ElementSet*> cur_;
};

}  // namespace

void for_each_sgs(const FiniteGroup& g, const Signature& s, const std::function<void(std::span<const Elem>)>& visit) {
  SgsSearch(g, s, visit).run();
}

std::vector<SphericalSystem> enumerate_sgs(const GroupPtr& g, const Signature& s) {
  std::vector<SphericalSystem> out;
  for_each_sgs(*g, s, [&](std::span<const Elem> t) { out.emplace_back(g, std::vector<Elem>(t.begin(), t.end())); });
  return out;
}

ElementSet stabilizer_set(const FiniteGroup& g, std::span<const Elem> tuple) {
  ElementSet cyclic(g.order());
  cyclic.insert(FiniteGroup::identity());
  for (auto x : tuple) cyclic |= cyclic_subgroup(g, x);
  return conjugacy_closure(g, cyclic);
}

ElementSet stabilizer_set(const SphericalSystem& sys) { return stabilizer_set(sys.group(), sys.tuple()); }

bool acts_freely(const SphericalSystem& first, const SphericalSystem& second) {
  if (first.group_ptr() != second.group_ptr() && first.group().spec() != second.group().spec())
    throw GroupMismatch("acts_freely: systems live on different groups");
  auto common = stabilizer_set(first) & stabilizer_set(second);
  common.erase(FiniteGroup::identity());
  return common.empty();
}

UnmixedStructure build_structure(const SphericalSystem& first, const SphericalSystem& second) {
  if (!acts_freely(first, second)) throw ActionNotFree("build_structure: stabilizer sets share a non-identity element");
  const auto n = static_cast<std::int64_t>(first.group().order());
  const auto s1 = first.signature();
  const auto s2 = second.signature();
  CurveDatum c1{s1, genus_from(s1, n), n};
  CurveDatum c2{s2, genus_from(s2, n), n};
  if (static_cast<std::int64_t>(c1.genus - 1) * (c2.genus - 1) != n)
    throw Inconsistency("build_structure: (g1-1)(g2-1) = " +
                        std::to_string(static_cast<std::int64_t>(c1.genus - 1) * (c2.genus - 1)) +
                        " differs from |G| = " + std::to_string(n));
  return {first.group_ptr(), first, second, std::move(c1), std::move(c2)};
}

}  // namespace prodquot
