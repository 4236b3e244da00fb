#include "prodquot/signatures.hpp"

#include <algorithm>
#include <set>

#include "prodquot/errors.hpp"

namespace prodquot {

Signature::Signature(std::vector<int> indices) : indices_(std::move(indices)) {
  for (int m : indices_)
    if (m < 2) throw MalformedInput("signature: branching index " + std::to_string(m) + " is < 2");
  std::sort(indices_.begin(), indices_.end());
}

std::string Signature::to_string() const {
  std::string out = "(";
  std::size_t i = 0;
  bool first = true;
  while (i < indices_.size()) {
    std::size_t j = i;
    while (j < indices_.size() && indices_[j] == indices_[i]) ++j;
    if (!first) out += ",";
    out += std::to_string(indices_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    first = false;
    i = j;
  }
  return out + ")";
}

Rational beta(const Signature& s) {
  Rational b(-2);
  for (int m : s.indices()) b += Rational(m - 1, m);
  return b;
}

int genus_from(const Signature& s, std::int64_t group_order) {
  const auto b = beta(s);
  if (b <= 0) throw InadmissibleSignature("signature " + s.to_string() + " has beta <= 0");
  const Rational g_minus_1 = Rational(group_order) * b / 2;
  if (g_minus_1.denominator() != 1)
    throw InadmissibleSignature("signature " + s.to_string() + " gives non-integral genus for |G| = " +
                                std::to_string(group_order));
  const auto g = g_minus_1.numerator() + 1;
  if (g < 2) throw InadmissibleSignature("signature " + s.to_string() + " gives genus < 2");
  return static_cast<int>(g);
}

namespace {

bool admissible(const Signature& s, std::int64_t n) {
  const auto b = beta(s);
  if (b <= 0) return false;
  if ((Rational(2) / b).denominator() != 1) return false;
  const Rational g_minus_1 = Rational(n) * b / 2;
  return g_minus_1.denominator() == 1 && g_minus_1.numerator() >= 1;
}

void multisets(const std::vector<int>& orders, std::size_t r, std::size_t from, std::vector<int>& cur,
               std::int64_t n, std::vector<Signature>& out) {
  if (cur.size() == r) {
    Signature s(cur);
    if (admissible(s, n)) out.push_back(std::move(s));
    return;
  }
  for (std::size_t i = from; i < orders.size(); ++i) {
    cur.push_back(orders[i]);
    multisets(orders, r, i, cur, n, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Signature> admissible_signatures(const FiniteGroup& g) {
  std::set<int> order_set;
  for (auto o : g.element_orders())
    if (o >= 2) order_set.insert(static_cast<int>(o));
  const std::vector<int> orders(order_set.begin(), order_set.end());
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<Signature> out;
  std::vector<int> cur;
  for (std::size_t r = 3; r <= kMaxBranchPoints; ++r) multisets(orders, r, 0, cur, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignaturePair> admissible_signature_pairs(const FiniteGroup& g) {
  const auto sigs = admissible_signatures(g);
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<CurveDatum> data;
  for (const auto& s : sigs) data.push_back({s, genus_from(s, n), n});
  std::vector<SignaturePair> out;
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i; j < data.size(); ++j)
      if (static_cast<std::int64_t>(data[i].genus - 1) * (data[j].genus - 1) == n) out.push_back({data[i], data[j]});
  return out;
}

bool order_bound_check(const Signature& s, std::int64_t group_order, int genus) {
  if (s.size() < 3 || s.size() > kMaxBranchPoints)
    throw MalformedInput("order_bound_check: signature " + s.to_string() + " must have 3..8 branch points");
  if (s == Signature({2, 2, 3, 3}) && group_order == 6) return true;
  return group_order <= 4 * static_cast<std::int64_t>(genus - 1);
}

}  // namespace prodquot
