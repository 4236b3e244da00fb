#include "prodquot/homology.hpp"

#include "prodquot/errors.hpp"

namespace prodquot {

FiniteAbelianStructure OrbifoldAbelianization::structure() const {
  return quotient_structure(IntMatrix::identity(rank), relations);
}

OrbifoldAbelianization orbifold_abelianization(const SphericalSystem& sys) {
  const auto r = sys.size();
  OrbifoldAbelianization out;
  out.rank = r;
  out.relations = IntMatrix(r, r + 1);
  for (std::size_t j = 0; j < r; ++j) {
    out.relations(j, j) = sys.group().element_order(sys[j]);
    out.relations(j, r) = 1;
    out.images.push_back(sys[j]);
  }
  return out;
}

AbelianCoordinates abelian_coordinates(const FiniteGroup& g) {
  if (!g.is_abelian()) throw UnsupportedHypothesis("group " + g.spec() + " is not abelian");
  AbelianCoordinates out;
  if (g.backend() == Backend::abelian) {
    for (auto d : g.abelian_type().invariant_factors) out.moduli.emplace_back(d);
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<BigInt> c;
      for (auto v : g.coordinates(static_cast<Elem>(x))) c.emplace_back(v);
      out.coords.push_back(std::move(c));
    }
    return out;
  }

  // Z^s -> G via a small generating set; the kernel is spanned by
  // ord(g_i) e_i together with every relation vector in the box prod [0, ord(g_i)).
  const auto gens = small_generating_set(g);
  const auto s = gens.size();
  std::vector<std::vector<std::int64_t>> first_word(g.order());
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<std::int64_t>> relation_cols;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::int64_t> col(s, 0);
    col[i] = g.element_order(gens[i]);
    relation_cols.push_back(std::move(col));
  }
  std::vector<std::int64_t> c(s, 0);
  for (;;) {
    Elem x = FiniteGroup::identity();
    for (std::size_t i = 0; i < s; ++i) x = g.mul(x, g.pow(gens[i], c[i]));
    if (!seen[x]) {
      seen[x] = true;
      first_word[x] = c;
    } else if (x == FiniteGroup::identity()) {
      relation_cols.push_back(c);
    }
    std::size_t i = 0;
    while (i < s && ++c[i] == static_cast<std::int64_t>(g.element_order(gens[i]))) c[i++] = 0;
    if (i == s) break;
  }
  IntMatrix rel(s, relation_cols.size());
  for (std::size_t k = 0; k < relation_cols.size(); ++k)
    for (std::size_t i = 0; i < s; ++i) rel(i, k) = relation_cols[k][i];
  const auto snf = smith_normal_form(rel);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s; ++i) {
    const auto& d = snf.D(i, i);
    if (d == 0) throw Inconsistency("abelian_coordinates: relation lattice is not of full rank");
    if (d != 1) {
      kept.push_back(i);
      out.moduli.push_back(d);
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<BigInt> coord;
    for (auto i : kept) {
      BigInt v = 0;
      for (std::size_t j = 0; j < s; ++j) v += snf.U_inv(i, j) * first_word[x][j];
      BigInt d = snf.D(i, i);
      v %= d;
      if (v < 0) v += d;
      coord.push_back(v);
    }
    out.coords.push_back(std::move(coord));
  }
  return out;
}

FiniteAbelianStructure h1_of_surface(const UnmixedStructure& st) {
  const auto& g = *st.group;
  if (!g.is_abelian())
    throw UnsupportedHypothesis("h1_of_surface: the kernel formula needs G abelian, got " + g.spec());
  const auto coords = abelian_coordinates(g);
  const auto k = coords.moduli.size();
  const auto a1 = orbifold_abelianization(st.first);
  const auto a2 = orbifold_abelianization(st.second);
  const auto r1 = a1.rank;
  const auto r2 = a2.rank;

  IntMatrix phi(k, r1 + r2);
  for (std::size_t j = 0; j < r1; ++j)
    for (std::size_t i = 0; i < k; ++i) phi(i, j) = coords.coords[a1.images[j]][i];
  for (std::size_t j = 0; j < r2; ++j)
    for (std::size_t i = 0; i < k; ++i) phi(i, r1 + j) = -coords.coords[a2.images[j]][i];

  IntMatrix lattice = k == 0 ? IntMatrix::identity(r1 + r2) : kernel_lattice_mod(phi, coords.moduli);
  IntMatrix relations(r1 + r2, (r1 + 1) + (r2 + 1));
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t c = 0; c <= r1; ++c) relations(i, c) = a1.relations(i, c);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t c = 0; c <= r2; ++c) relations(r1 + i, r1 + 1 + c) = a2.relations(i, c);

  auto h1 = quotient_structure(lattice, relations);

  const BigInt n = static_cast<std::uint64_t>(g.order());
  if (h1.order() * n != a1.structure().order() * a2.structure().order())
    throw Inconsistency("h1_of_surface: |H1| |G| != |G1| |G2|");
  if (h1.order() % n != 0) throw Inconsistency("h1_of_surface: |G| does not divide |H1|");
  return h1;
}

SurfaceInvariants surface_invariants(const UnmixedStructure& st) {
  const auto n = static_cast<std::int64_t>(st.group->order());
  const auto prod = static_cast<std::int64_t>(st.curve_first.genus - 1) * (st.curve_second.genus - 1);
  if (prod % n != 0) throw Inconsistency("surface_invariants: chi = " + std::to_string(prod) + "/" + std::to_string(n) + " is not an integer");
  SurfaceInvariants inv;
  inv.chi = prod / n;
  inv.K2 = 8 * inv.chi;
  inv.q = 0;
  inv.pg = inv.chi - 1 + inv.q;
  inv.e = 12 * inv.chi - inv.K2;
  return inv;
}

}  // namespace prodquot
