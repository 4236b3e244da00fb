#include "prodquot/report.hpp"

#include <chrono>
#include <sstream>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

std::string group_name(const FiniteGroup& g) {
  if (g.backend() == Backend::abelian) {
    FiniteAbelianStructure s;
    for (auto d : g.abelian_type().invariant_factors) s.invariant_factors.emplace_back(d);
    return s.is_trivial() ? "1" : s.to_string();
  }
  return g.spec();
}

std::string h1_text(const std::optional<FiniteAbelianStructure>& h1) {
  return h1 ? h1->to_string() : "n/a (G non-abelian)";
}

Json int_array(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = "prodquot";
  j["version"] = PRODQUOT_VERSION;
  j["command"] = command;
  j["input"] = input;
  j["result"] = result;
  if (seconds) j["timing_seconds"] = *seconds;
  return j;
}

Json to_json(const Signature& s) {
  Json a = Json::array();
  for (int m : s.indices()) a.push_back(m);
  return a;
}

Json to_json(const SphericalSystem& sys) {
  Json j;
  j["group"] = sys.group().spec();
  j["tuple"] = sys.labels();
  return j;
}

Json to_json(const UnmixedStructure& st) {
  Json j;
  j["schema"] = kReportSchema;
  j["group"] = st.group->spec();
  j["systems"] = Json::array({to_json(st.first), to_json(st.second)});
  return j;
}

Json to_json(const FiniteAbelianStructure& a) { return int_array(a.as_int64()); }

Json to_json(const SurfaceInvariants& inv) {
  return Json{{"chi", inv.chi}, {"K2", inv.K2}, {"pg", inv.pg}, {"q", inv.q}, {"e", inv.e}};
}

SphericalSystem system_from_json(const Json& j, const GroupPtr& g) {
  if (!j.is_object() || !j.contains("tuple") || !j["tuple"].is_array())
    throw MalformedInput("system: expected an object with a \"tuple\" array");
  if (j.contains("group")) {
    if (!j["group"].is_string()) throw MalformedInput("system: \"group\" must be a string");
    const auto other = parse_group_spec(j["group"].get<std::string>());
    if (other.spec() != g->spec()) throw GroupMismatch("system: group " + other.spec() + " differs from " + g->spec());
  }
  std::vector<Elem> t;
  for (const auto& e : j["tuple"]) {
    if (!e.is_string()) throw MalformedInput("system: tuple entries must be element labels");
    auto x = g->find(e.get<std::string>());
    if (!x) throw MalformedInput("system: '" + e.get<std::string>() + "' is not an element of " + g->spec());
    t.push_back(*x);
  }
  return SphericalSystem(g, std::move(t));
}

UnmixedStructure structure_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("structure: expected a JSON object");
  if (j.contains("schema") && j["schema"] != kReportSchema)
    throw MalformedInput("structure: unsupported schema " + j["schema"].dump());
  if (!j.contains("group") || !j["group"].is_string()) throw MalformedInput("structure: missing \"group\" string");
  if (!j.contains("systems") || !j["systems"].is_array() || j["systems"].size() != 2)
    throw MalformedInput("structure: \"systems\" must be an array of two systems");
  auto g = std::make_shared<const FiniteGroup>(parse_group_spec(j["group"].get<std::string>()));
  auto a = system_from_json(j["systems"][0], g);
  auto b = system_from_json(j["systems"][1], g);
  for (const auto* sys : {&a, &b})
    if (!product_is_identity(*sys) || !generates(*sys))
      throw MalformedInput("structure: a tuple is not a spherical system of generators");
  return build_structure(a, b);
}

std::optional<FiniteAbelianStructure> class_homology(const EquivClass& cls) {
  if (!cls.representative.group->is_abelian()) return std::nullopt;
  auto h1 = h1_of_surface(cls.representative);
  for (const auto& m : cls.members)
    if (h1_of_surface(m) != h1) throw Inconsistency("H1 is not constant on the class of " + cls.group_spec);
  return h1;
}

// ------------------------------------------------------------------ classify

namespace {

Json classification_json(const GroupClassification& gc, std::ostringstream& rows) {
  const auto& g = *gc.group;
  Json j;
  j["group"] = g.spec();
  j["name"] = group_name(g);
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  Json pairs = Json::array();
  for (const auto& p : gc.pairs) {
    pairs.push_back({{"signatures", Json::array({to_json(p.pair.first.signature), to_json(p.pair.second.signature)})},
                     {"genera", Json::array({p.pair.first.genus, p.pair.second.genus})},
                     {"systems", Json::array({p.systems_first, p.systems_second})},
                     {"raw_free", p.raw_free},
                     {"classes", p.classes}});
  }
  j["signature_pairs"] = pairs;
  j["class_count"] = gc.classes.size();
  Json classes = Json::array();
  for (const auto& c : gc.classes) {
    const auto h1 = class_homology(c);
    const auto inv = surface_invariants(c.representative);
    Json cj;
    cj["signatures"] = Json::array({to_json(c.signature_first), to_json(c.signature_second)});
    cj["genera"] = Json::array({c.representative.curve_first.genus, c.representative.curve_second.genus});
    cj["dimension"] = c.dimension;
    cj["orbit_size"] = c.orbit_size;
    cj["hurwitz_pairs"] = c.members.size();
    cj["h1"] = h1 ? to_json(*h1) : Json(nullptr);
    cj["invariants"] = to_json(inv);
    cj["canonical"] = to_json(c.representative);
    classes.push_back(std::move(cj));
    rows << "| " << group_name(g) << " | " << c.signature_first.to_string() << " " << c.signature_second.to_string()
         << " | " << c.representative.curve_first.genus << ", " << c.representative.curve_second.genus << " | "
         << c.dimension << " | " << h1_text(h1) << " | " << c.orbit_size << " |\n";
  }
  j["classes"] = classes;
  return j;
}

}  // namespace

Report cmd_classify(const ClassifyRequest& req) {
  Report rep;
  rep.command = "classify";
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<GroupClassification> groups;
  std::size_t examined = 0;
  std::ostringstream md;
  if (req.group_spec) {
    rep.input = {{"group", *req.group_spec}, {"swap_factors", req.swap_factors}};
    auto g = std::make_shared<const FiniteGroup>(parse_group_spec(*req.group_spec));
    if (g->order() > req.cap)
      throw SizeCapExceeded("classify: group order " + std::to_string(g->order()) + " exceeds cap " +
                            std::to_string(req.cap));
    ClassifyOptions opts;
    opts.automorphism_cap = std::max(kDefaultAutomorphismCap, req.cap);
    opts.swap_factors = req.swap_factors;
    groups.push_back(classify_group(g, opts));
    examined = 1;
    md << "# Classification of " << group_name(*g) << "\n\n";
  } else {
    rep.input = {{"max_order", req.max_order}, {"abelian_only", true}, {"swap_factors", req.swap_factors}};
    auto table = classify_abelian_up_to(req.max_order, req.jobs, req.cap, req.swap_factors);
    groups = std::move(table.groups);
    examined = table.groups_examined;
    md << "# Abelian groups of order <= " << req.max_order << "\n\n";
  }

  std::ostringstream rows;
  Json list = Json::array();
  for (const auto& gc : groups) list.push_back(classification_json(gc, rows));
  rep.result = {{"groups_examined", examined}, {"groups", list}};

  md << examined << " group(s) examined, " << groups.size() << " with at least one class.\n\n";
  if (!groups.empty()) {
    md << "| G | classes | dimensions | H1 |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& jg = list[i];
      std::string dims, h1s;
      for (const auto& c : jg["classes"]) {
        if (!dims.empty()) dims += ", ";
        dims += std::to_string(c["dimension"].get<int>());
        std::string h = "n/a";
        if (!c["h1"].is_null()) {
          FiniteAbelianStructure s;
          for (const auto& d : c["h1"]) s.invariant_factors.emplace_back(d.get<std::int64_t>());
          h = s.to_string();
        }
        if (h1s.find(h) == std::string::npos) h1s += (h1s.empty() ? "" : ", ") + h;
      }
      md << "| " << jg["name"].get<std::string>() << " | " << jg["class_count"].get<std::size_t>() << " | " << dims
         << " | " << h1s << " |\n";
    }
    md << "\n## Classes\n\n| G | signatures | genera | dimension | H1 | raw structures |\n|---|---|---|---|---|---|\n"
       << rows.str();
  }
  rep.markdown = md.str();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ------------------------------------------------------------------ verify

Report cmd_verify_examples(std::optional<int> id) {
  Report rep;
  rep.command = "verify-examples";
  const auto t0 = std::chrono::steady_clock::now();
  rep.input = id ? Json{{"id", *id}} : Json{{"id", "all"}};
  std::vector<const ExampleFixture*> todo;
  if (id)
    todo.push_back(&example_fixture(*id));
  else
    for (const auto& f : example_fixtures()) todo.push_back(&f);

  std::ostringstream md;
  md << "# Example verification\n\n";
  Json list = Json::array();
  bool all_ok = true;
  for (const auto* fx : todo) {
    const auto res = verify_example(*fx);
    all_ok = all_ok && res.passed();
    Json checks = Json::array();
    md << "## Example " << fx->id << ": " << fx->title << " : " << (res.passed() ? "PASS" : "FAIL") << "\n\n";
    for (const auto& c : res.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      md << "- [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    }
    if (!fx->note.empty()) md << "\nNote: " << fx->note << "\n";
    md << "\n";
    Json e;
    e["id"] = fx->id;
    e["group"] = fx->group_spec;
    e["signatures"] = Json::array({to_json(fx->signature_first), to_json(fx->signature_second)});
    e["tuples"] = Json::array({fx->tuple_first, fx->tuple_second});
    e["second_reversed"] = fx->second_reversed;
    e["passed"] = res.passed();
    e["first_failure"] = res.passed() ? Json(nullptr) : Json(res.first_failure());
    e["genera"] = res.genera ? Json::array({res.genera->first, res.genera->second}) : Json(nullptr);
    e["invariants"] = res.invariants ? to_json(*res.invariants) : Json(nullptr);
    e["checks"] = checks;
    e["note"] = fx->note;
    list.push_back(std::move(e));
  }
  rep.result = {{"passed", all_ok}, {"examples", list}};
  rep.markdown = md.str();
  rep.exit_code = all_ok ? ExitCode::ok : ExitCode::verification_failed;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ------------------------------------------------------------------ homology

Report cmd_homology(const Json& structure) {
  Report rep;
  rep.command = "homology";
  const auto t0 = std::chrono::steady_clock::now();
  rep.input = structure;
  const auto st = structure_from_json(structure);
  const auto h1 = h1_of_surface(st);
  const auto inv = surface_invariants(st);
  const auto g1 = orbifold_abelianization(st.first).structure();
  const auto g2 = orbifold_abelianization(st.second).structure();
  rep.result = {{"group", st.group->spec()},
                {"genera", Json::array({st.curve_first.genus, st.curve_second.genus})},
                {"orbifold_abelianizations", Json::array({to_json(g1), to_json(g2)})},
                {"h1", to_json(h1)},
                {"invariants", to_json(inv)}};
  std::ostringstream md;
  md << "# H1(S, Z) for G = " << group_name(*st.group) << "\n\n"
     << "- signatures: " << st.curve_first.signature.to_string() << " " << st.curve_second.signature.to_string()
     << "\n- genera: " << st.curve_first.genus << ", " << st.curve_second.genus << "\n- G1 = " << g1.to_string()
     << ", G2 = " << g2.to_string() << "\n- H1 = " << h1.to_string() << "\n- chi = " << inv.chi
     << ", K^2 = " << inv.K2 << ", pg = " << inv.pg << ", q = " << inv.q << ", e = " << inv.e << "\n";
  rep.markdown = md.str();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------- signatures

Report cmd_signatures(const std::string& group_spec) {
  Report rep;
  rep.command = "signatures";
  const auto t0 = std::chrono::steady_clock::now();
  rep.input = {{"group", group_spec}};
  const auto g = parse_group_spec(group_spec);
  const auto n = static_cast<std::int64_t>(g.order());
  Json sigs = Json::array();
  std::ostringstream md;
  md << "# Admissible signatures for " << group_name(g) << " (order " << n << ")\n\n";
  for (const auto& s : admissible_signatures(g)) {
    sigs.push_back({{"signature", to_json(s)}, {"genus", genus_from(s, n)}});
    md << "- " << s.to_string() << ": g = " << genus_from(s, n) << "\n";
  }
  Json pairs = Json::array();
  md << "\n## Pairs with (g1-1)(g2-1) = |G|\n\n";
  const auto ps = admissible_signature_pairs(g);
  for (const auto& p : ps) {
    pairs.push_back({{"signatures", Json::array({to_json(p.first.signature), to_json(p.second.signature)})},
                     {"genera", Json::array({p.first.genus, p.second.genus})}});
    md << "- " << p.first.signature.to_string() << " " << p.second.signature.to_string() << ": genera "
       << p.first.genus << ", " << p.second.genus << "\n";
  }
  if (ps.empty()) md << "none\n";
  rep.result = {{"group", g.spec()}, {"order", n}, {"signatures", sigs}, {"pairs", pairs}};
  rep.markdown = md.str();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace prodquot
