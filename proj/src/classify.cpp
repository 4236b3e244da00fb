#include "prodquot/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

using Tuple = std::vector<Elem>;
using TupleHash = boost::hash<Tuple>;

void braid_in_place(const FiniteGroup& g, Tuple& t, std::size_t i, int direction) {
  const Elem a = t[i];
  const Elem b = t[i + 1];
  if (direction > 0) {
    t[i] = g.conj(a, b);
    t[i + 1] = a;
  } else {
    t[i] = b;
    t[i + 1] = g.conj(g.inv(b), a);
  }
}

bool orders_sorted(const FiniteGroup& g, std::span<const Elem> t) {
  for (std::size_t j = 1; j < t.size(); ++j)
    if (g.element_order(t[j - 1]) > g.element_order(t[j])) return false;
  return true;
}

std::vector<Tuple> orbit_tuples(const FiniteGroup& g, std::span<const Elem> start, std::size_t cap) {
  std::unordered_set<Tuple, TupleHash> seen;
  std::vector<Tuple> queue{Tuple(start.begin(), start.end())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i + 1 < start.size(); ++i)
      for (int dir : {+1, -1}) {
        Tuple t = queue[head];
        braid_in_place(g, t, i, dir);
        if (seen.insert(t).second) {
          if (seen.size() > cap)
            throw SizeCapExceeded("hurwitz_orbit: orbit exceeds cap of " + std::to_string(cap));
          queue.push_back(std::move(t));
        }
      }
  }
  return queue;
}

Tuple block_sorted(const FiniteGroup& g, std::span<const Elem> t) {
  Tuple out(t.begin(), t.end());
  std::stable_sort(out.begin(), out.end(), [&](Elem a, Elem b) {
    return std::pair(g.element_order(a), a) < std::pair(g.element_order(b), b);
  });
  return out;
}

Tuple apply_aut(const Automorphism& phi, std::span<const Elem> t) {
  Tuple out;
  out.reserve(t.size());
  for (auto x : t) out.push_back(phi[x]);
  return out;
}

// Number of distinct permutations of t that keep each element order in place.
std::uint64_t block_permutation_count(const FiniteGroup& g, std::span<const Elem> t) {
  std::map<std::uint32_t, std::map<Elem, std::uint64_t>> blocks;
  for (auto x : t) ++blocks[g.element_order(x)][x];
  std::uint64_t count = 1;
  for (const auto& [order, mult] : blocks) {
    std::uint64_t placed = 0;
    for (const auto& [x, k] : mult) {
      // multiply by C(placed + k, k)
      for (std::uint64_t i = 1; i <= k; ++i) count = count * (placed + i) / i;
      placed += k;
    }
  }
  return count;
}

// The multiset-permutation property of Hurwitz orbits in abelian groups,
// checked once on a sample tuple before the shortcut is relied on.
void assert_permutation_orbit(const FiniteGroup& g, std::span<const Elem> t, std::size_t cap) {
  auto orbit = orbit_tuples(g, t, cap);
  Tuple sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t expected = 1;
  {
    std::map<Elem, std::uint64_t> mult;
    for (auto x : t) ++mult[x];
    std::uint64_t placed = 0;
    for (const auto& [x, k] : mult)
      for (std::uint64_t i = 1; i <= k; ++i) expected = expected * (++placed) / i;
  }
  bool ok = orbit.size() == expected;
  for (const auto& u : orbit) {
    Tuple su = u;
    std::sort(su.begin(), su.end());
    ok = ok && su == sorted;
  }
  if (!ok) throw Inconsistency("Hurwitz orbit of an abelian tuple is not its permutation set");
}

// Hurwitz classes of the SGS of one signature.
struct HurwitzClasses {
  const FiniteGroup* group = nullptr;
  bool abelian = true;
  std::vector<Tuple> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<ElementSet> stabilizers;
  std::unordered_map<Tuple, std::size_t, TupleHash> index;  // abelian: rep -> class, else tuple -> class
  std::uint64_t total = 0;

  std::size_t class_of(std::span<const Elem> t) const {
    if (abelian) return index.at(block_sorted(*group, t));
    return index.at(Tuple(t.begin(), t.end()));
  }
};

HurwitzClasses hurwitz_classes(const FiniteGroup& g, const Signature& s, std::size_t orbit_cap) {
  HurwitzClasses hc;
  hc.group = &g;
  hc.abelian = g.is_abelian();
  if (hc.abelian) {
    bool checked = false;
    for_each_sgs(g, s, [&](std::span<const Elem> t) {
      if (!checked) {
        assert_permutation_orbit(g, t, orbit_cap);
        checked = true;
      }
      ++hc.total;
      auto rep = block_sorted(g, t);
      if (hc.index.contains(rep)) return;
      hc.index.emplace(rep, hc.reps.size());
      hc.reps.push_back(std::move(rep));
    });
    for (const auto& rep : hc.reps) hc.sizes.push_back(block_permutation_count(g, rep));
  } else {
    std::vector<Tuple> all;
    for_each_sgs(g, s, [&](std::span<const Elem> t) { all.emplace_back(t.begin(), t.end()); });
    hc.total = all.size();
    for (const auto& t : all) {
      if (hc.index.contains(t)) continue;
      const auto id = hc.reps.size();
      Tuple best;
      std::uint64_t size = 0;
      for (auto& u : orbit_tuples(g, t, orbit_cap)) {
        if (!orders_sorted(g, u)) continue;
        ++size;
        if (best.empty() || u < best) best = u;
        hc.index.emplace(std::move(u), id);
      }
      hc.reps.push_back(std::move(best));
      hc.sizes.push_back(size);
    }
  }
  // Classes sorted by representative for a stable numbering.
  std::vector<std::size_t> perm(hc.reps.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return hc.reps[a] < hc.reps[b]; });
  std::vector<std::size_t> renumber(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) renumber[perm[i]] = i;
  std::vector<Tuple> reps;
  std::vector<std::uint64_t> sizes;
  for (auto p : perm) {
    reps.push_back(std::move(hc.reps[p]));
    sizes.push_back(hc.sizes[p]);
  }
  hc.reps = std::move(reps);
  hc.sizes = std::move(sizes);
  for (auto& [t, id] : hc.index) id = renumber[id];
  for (const auto& rep : hc.reps) hc.stabilizers.push_back(stabilizer_set(g, rep));

  std::uint64_t sum = 0;
  for (auto n : hc.sizes) sum += n;
  if (sum != hc.total) throw Inconsistency("Hurwitz class sizes do not add up to the number of systems");
  return hc;
}

bool free_pair(const ElementSet& a, const ElementSet& b) {
  auto common = a & b;
  common.erase(FiniteGroup::identity());
  return common.empty();
}

}  // namespace

SphericalSystem braid_move(const SphericalSystem& sys, std::size_t i, int direction) {
  if (i + 1 >= sys.size()) throw MalformedInput("braid_move: position out of range");
  if (direction != 1 && direction != -1) throw MalformedInput("braid_move: direction must be +1 or -1");
  Tuple t(sys.tuple().begin(), sys.tuple().end());
  braid_in_place(sys.group(), t, i, direction);
  return SphericalSystem(sys.group_ptr(), std::move(t));
}

std::vector<SphericalSystem> hurwitz_orbit(const SphericalSystem& sys, std::size_t cap) {
  auto tuples = orbit_tuples(sys.group(), sys.tuple(), cap);
  std::sort(tuples.begin(), tuples.end());
  std::vector<SphericalSystem> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.emplace_back(sys.group_ptr(), std::move(t));
  return out;
}

std::vector<Elem> hurwitz_canonical(const FiniteGroup& g, std::span<const Elem> tuple, std::size_t cap) {
  if (g.is_abelian()) return block_sorted(g, tuple);
  Tuple best;
  for (auto& u : orbit_tuples(g, tuple, cap))
    if (orders_sorted(g, u) && (best.empty() || u < best)) best = std::move(u);
  return best;
}

UnmixedStructure canonical_pair(const UnmixedStructure& st, std::span<const Automorphism> auts,
                                std::size_t orbit_cap, bool swap_factors) {
  const auto& g = *st.group;
  const bool swap_allowed = swap_factors && st.curve_first.signature == st.curve_second.signature;
  const bool flip = st.curve_second.signature < st.curve_first.signature;
  const auto& a = flip ? st.second : st.first;
  const auto& b = flip ? st.first : st.second;
  std::optional<std::pair<Tuple, Tuple>> best;
  for (const auto& phi : auts) {
    auto t1 = hurwitz_canonical(g, apply_aut(phi, a.tuple()), orbit_cap);
    auto t2 = hurwitz_canonical(g, apply_aut(phi, b.tuple()), orbit_cap);
    std::pair cand(t1, t2);
    if (swap_allowed && std::pair(t2, t1) < cand) cand = std::pair(t2, t1);
    if (!best || cand < *best) best = std::move(cand);
  }
  if (!best) throw MalformedInput("canonical_pair: empty automorphism list");
  return build_structure(SphericalSystem(st.group, best->first), SphericalSystem(st.group, best->second));
}

UnmixedStructure canonical_pair(const UnmixedStructure& st, bool swap_factors) {
  const auto auts = automorphisms(*st.group, std::max(kDefaultAutomorphismCap, st.group->order()));
  return canonical_pair(st, auts, kDefaultOrbitCap, swap_factors);
}

int moduli_dimension(const UnmixedStructure& st) {
  return static_cast<int>(st.first.size()) - 3 + static_cast<int>(st.second.size()) - 3;
}

GroupClassification classify_group(const GroupPtr& gp, const ClassifyOptions& options) {
  const auto& g = *gp;
  GroupClassification out;
  out.group = gp;
  std::optional<std::vector<Automorphism>> auts;
  std::map<Signature, HurwitzClasses> cache;
  auto classes_for = [&](const Signature& s) -> const HurwitzClasses& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, hurwitz_classes(g, s, options.orbit_cap)).first;
    return it->second;
  };

  for (const auto& pair : admissible_signature_pairs(g)) {
    const auto& s1 = pair.first.signature;
    const auto& s2 = pair.second.signature;
    const auto& h1 = classes_for(s1);
    const auto& h2 = classes_for(s2);
    const bool same = options.swap_factors && s1 == s2;
    PairSummary summary{pair, h1.total, h2.total, 0, 0};

    // Freeness depends only on the stabilizer sets, so bucket by them.
    std::map<ElementSet, std::vector<std::size_t>> buckets1, buckets2;
    for (std::size_t i = 0; i < h1.reps.size(); ++i) buckets1[h1.stabilizers[i]].push_back(i);
    for (std::size_t i = 0; i < h2.reps.size(); ++i) buckets2[h2.stabilizers[i]].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (const auto& [st1, ids1] : buckets1)
      for (const auto& [st2, ids2] : buckets2) {
        if (!free_pair(st1, st2)) continue;
        for (auto i : ids1)
          for (auto j : ids2) free.emplace_back(i, j);
      }
    std::sort(free.begin(), free.end());
    for (auto [i, j] : free) summary.raw_free += h1.sizes[i] * h2.sizes[j];

    if (!free.empty() && !auts) {
      auts = automorphisms(g, options.automorphism_cap);
    }
    std::vector<bool> visited(free.size(), false);
    auto position = [&](std::pair<std::size_t, std::size_t> p) {
      auto it = std::lower_bound(free.begin(), free.end(), p);
      if (it == free.end() || *it != p) throw Inconsistency("automorphism image of a free pair is not free");
      return static_cast<std::size_t>(it - free.begin());
    };
    std::vector<EquivClass> found;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (visited[k]) continue;
      std::vector<std::size_t> orbit;
      auto mark = [&](std::pair<std::size_t, std::size_t> p) {
        auto pos = position(p);
        if (!visited[pos]) {
          visited[pos] = true;
          orbit.push_back(pos);
        }
      };
      for (const auto& phi : *auts) {
        const auto c1 = h1.class_of(apply_aut(phi, h1.reps[free[k].first]));
        const auto c2 = h2.class_of(apply_aut(phi, h2.reps[free[k].second]));
        mark({c1, c2});
        if (same) mark({c2, c1});
      }
      std::sort(orbit.begin(), orbit.end());
      std::uint64_t orbit_size = 0;
      std::vector<UnmixedStructure> members;
      std::optional<std::pair<Tuple, Tuple>> best;
      for (auto pos : orbit) {
        const auto [i, j] = free[pos];
        orbit_size += h1.sizes[i] * h2.sizes[j];
        std::pair cand(h1.reps[i], h2.reps[j]);
        if (!best || cand < *best) best = cand;
        members.push_back(build_structure(SphericalSystem(gp, h1.reps[i]), SphericalSystem(gp, h2.reps[j])));
      }
      auto rep = build_structure(SphericalSystem(gp, best->first), SphericalSystem(gp, best->second));
      const int dim = moduli_dimension(rep);
      EquivClass cls{g.spec(), s1, s2, std::move(rep), orbit_size, dim, std::move(members)};
      found.push_back(std::move(cls));
    }
    std::sort(found.begin(), found.end(), [](const EquivClass& a, const EquivClass& b) {
      return std::pair(a.representative.first, a.representative.second) <
             std::pair(b.representative.first, b.representative.second);
    });
    summary.classes = found.size();
    std::uint64_t covered = 0;
    for (const auto& c : found) covered += c.orbit_size;
    if (covered != summary.raw_free) throw Inconsistency("class orbit sizes do not add up to the raw structure count");
    for (auto& c : found) out.classes.push_back(std::move(c));
    out.pairs.push_back(std::move(summary));
  }
  return out;
}

std::vector<AbelianType> abelian_types_of_order(std::int64_t n) {
  std::vector<AbelianType> out;
  std::vector<std::int64_t> chain;
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t prev) -> void {
    if (rest == 1) {
      out.push_back({chain});
      return;
    }
    for (std::int64_t d = 2; d <= rest; ++d) {
      if (rest % d != 0 || (prev != 0 && d % prev != 0)) continue;
      chain.push_back(d);
      self(self, rest / d, d);
      chain.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, 0);
  std::sort(out.begin(), out.end(), [](const AbelianType& a, const AbelianType& b) {
    return a.invariant_factors < b.invariant_factors;
  });
  return out;
}

ClassificationTable classify_abelian_up_to(std::size_t max_order, std::size_t jobs, std::size_t cap,
                                           bool swap_factors) {
  if (max_order > cap)
    throw SizeCapExceeded("classify: max order " + std::to_string(max_order) + " exceeds cap " + std::to_string(cap));
  std::vector<AbelianType> types;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (auto& t : abelian_types_of_order(static_cast<std::int64_t>(n))) types.push_back(std::move(t));

  std::vector<std::optional<GroupClassification>> results(types.size());
  std::vector<std::exception_ptr> errors(types.size());
  std::atomic<std::size_t> next{0};
  ClassifyOptions options;
  options.automorphism_cap = std::max(kDefaultAutomorphismCap, max_order);
  options.swap_factors = swap_factors;
  auto worker = [&] {
    for (std::size_t k = next++; k < types.size(); k = next++) {
      try {
        auto g = std::make_shared<const FiniteGroup>(make_abelian(types[k]));
        results[k] = classify_group(g, options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, types.size()));
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  ClassificationTable table;
  table.max_order = max_order;
  table.groups_examined = types.size();
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (!results[k]->classes.empty()) table.groups.push_back(std::move(*results[k]));
  }
  return table;
}

}  // namespace prodquot
