#include "monoidlab/commands.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monoidlab/actions.hpp"
#include "monoidlab/dictionary.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/fraisse.hpp"
#include "monoidlab/monogenic.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/topology.hpp"

namespace monoidlab {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_file(const std::string& path, Report& r) {
  std::string text = slurp(path);
  r.inputs.push_back({path, fnv1a_hex(text)});
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int require_int(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + " must be an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> require_table(const json& v, size_t rows,
                                            size_t cols,
                                            const std::string& where) {
  if (!v.is_array() || v.size() != rows)
    throw ParseError(where + " must be an array of " + std::to_string(rows) +
                     " rows");
  std::vector<std::vector<int>> out(rows);
  for (size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ", row " + std::to_string(i) + " must have " +
                       std::to_string(cols) + " entries");
    for (size_t j = 0; j < cols; ++j)
      out[i].push_back(require_int(row[j], where + ", row " +
                                              std::to_string(i) + ", column " +
                                              std::to_string(j)));
  }
  return out;
}

struct LoadedMonoid {
  FiniteMonoid monoid;
  std::vector<int> relabeling;
};

LoadedMonoid load_monoid(const std::string& path, Report& r) {
  json doc = parse_file(path, r);
  if (!doc.is_object())
    throw ParseError(path + ": top level must be an object");
  if (!doc.contains("size"))
    throw ParseError(path + ": missing required key \"size\"");
  if (!doc.contains("table"))
    throw ParseError(path + ": missing required key \"table\"");
  int n = require_int(doc["size"], path + ": size");
  if (n < 1) throw ParseError(path + ": size must be at least 1");
  auto table =
      require_table(doc["table"], n, n, path + ": table");
  std::optional<int> id;
  if (doc.contains("identity"))
    id = require_int(doc["identity"], path + ": identity");
  ValidatedMonoid vm = validate_monoid(table, id);
  if (!vm.relabeling.empty())
    r.warnings.push_back("identity of " + path +
                         " relabeled to index 0; the permutation is in the "
                         "relabeling field");
  return {vm.monoid, vm.relabeling};
}

std::vector<int> set_elems(ElementSet s) { return s.elements(); }

json sets_json(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (ElementSet s : sets) out.push_back(set_elems(s));
  return out;
}

json monoid_json(const FiniteMonoid& m) {
  return {{"size", m.size}, {"table", m.table}};
}

ElementSet set_from_json(const json& v, int n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  ElementSet s;
  for (const json& e : v) {
    int x = require_int(e, where);
    if (x < 0 || x >= n)
      throw ParseError(where + ": element " + std::to_string(x) +
                       " is out of range for a monoid of order " +
                       std::to_string(n));
    s.add(x);
  }
  return s;
}

MonoidTopology load_topology(const std::string& path, const FiniteMonoid& m,
                             Report& r) {
  json doc = parse_file(path, r);
  if (!doc.is_object())
    throw ParseError(path + ": top level must be an object");
  bool has_base = doc.contains("base");
  bool has_opens = doc.contains("opens");
  if (has_base == has_opens)
    throw ParseError(path +
                     ": exactly one of \"base\" or \"opens\" is required");
  const json& arr = has_base ? doc["base"] : doc["opens"];
  if (!arr.is_array())
    throw ParseError(path + ": " + (has_base ? "base" : "opens") +
                     " must be an array of element lists");
  std::vector<ElementSet> sets;
  for (size_t i = 0; i < arr.size(); ++i)
    sets.push_back(set_from_json(
        arr[i], m.size,
        path + ": set " + std::to_string(i)));
  MonoidTopology t = topology_from_base(m, sets);
  if (has_opens) {
    std::vector<ElementSet> given = sets;
    given.push_back(ElementSet::empty());
    given.push_back(ElementSet::full(m.size));
    std::sort(given.begin(), given.end(), canonical_less);
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != t.opens)
      throw ParseError(path +
                       ": opens are not closed under union and intersection");
  }
  return t;
}

json verdict_json(const Verdict& v) {
  return {{"agrees", v.agrees()},
          {"detail", v.detail},
          {"monoid_side", v.monoid_side},
          {"topos_side", v.topos_side}};
}

json congruence_classes(const RightCongruence& c) {
  std::vector<std::vector<int>> classes(c.class_count);
  for (int x = 0; x < c.monoid.size; ++x) classes[c.class_of[x]].push_back(x);
  return json(classes);
}

bool left_compatible(const RightCongruence& c) {
  const FiniteMonoid& m = c.monoid;
  for (int a = 0; a < m.size; ++a)
    for (int p = 0; p < m.size; ++p)
      for (int q = 0; q < m.size; ++q)
        if (c.related(p, q) && !c.related(m.mul(a, p), m.mul(a, q)))
          return false;
  return true;
}

bool strictly_refines(const RightCongruence& a, const RightCongruence& b) {
  return refines(a, b) && a.class_count != b.class_count;
}

json morph_json(const Morph& f, const ExtensionSystem& s) {
  return {{"from", s.object_name(f.dom)},
          {"map", f.map},
          {"to", s.object_name(f.cod)}};
}

struct LoadedCategory {
  FiniteCategory cat;
  std::vector<int> t, m;
};

LoadedCategory load_category(const std::string& path, Report& r) {
  json doc = parse_file(path, r);
  if (!doc.is_object())
    throw ParseError(path + ": top level must be an object");
  for (const char* key : {"objects", "morphisms", "compose", "T", "M"})
    if (!doc.contains(key))
      throw ParseError(path + ": missing required key \"" + key + "\"");

  FiniteCategory c;
  if (!doc["objects"].is_array())
    throw ParseError(path + ": objects must be an array of names");
  for (const json& o : doc["objects"]) {
    if (!o.is_string())
      throw ParseError(path + ": objects must be an array of names");
    c.objects.push_back(o.get<std::string>());
  }
  auto object_index = [&](const std::string& name,
                          const std::string& where) {
    auto it = std::find(c.objects.begin(), c.objects.end(), name);
    if (it == c.objects.end())
      throw ParseError(where + ": unknown object \"" + name + "\"");
    return int(it - c.objects.begin());
  };

  if (!doc["morphisms"].is_array())
    throw ParseError(path + ": morphisms must be an array");
  for (size_t i = 0; i < doc["morphisms"].size(); ++i) {
    const json& mo = doc["morphisms"][i];
    std::string where = path + ": morphism " + std::to_string(i);
    if (!mo.is_object() || !mo.contains("id") || !mo.contains("dom") ||
        !mo.contains("cod") || !mo["id"].is_string() ||
        !mo["dom"].is_string() || !mo["cod"].is_string())
      throw ParseError(where + " needs string fields id, dom, cod");
    c.morphisms.push_back(mo["id"].get<std::string>());
    c.dom.push_back(object_index(mo["dom"].get<std::string>(), where));
    c.cod.push_back(object_index(mo["cod"].get<std::string>(), where));
  }
  auto morphism_index = [&](const json& v, const std::string& where) {
    if (!v.is_string())
      throw ParseError(where + " must be a morphism id");
    std::string name = v.get<std::string>();
    auto it = std::find(c.morphisms.begin(), c.morphisms.end(), name);
    if (it == c.morphisms.end())
      throw ParseError(where + ": unknown morphism \"" + name + "\"");
    return int(it - c.morphisms.begin());
  };

  size_t nm = c.morphisms.size();
  if (!doc["compose"].is_array() || doc["compose"].size() != nm)
    throw ParseError(path + ": compose must be a " + std::to_string(nm) +
                     " by " + std::to_string(nm) + " table");
  for (size_t f = 0; f < nm; ++f) {
    const json& row = doc["compose"][f];
    if (!row.is_array() || row.size() != nm)
      throw ParseError(path + ": compose row " + std::to_string(f) +
                       " must have " + std::to_string(nm) + " entries");
    std::vector<int> out;
    for (size_t g = 0; g < nm; ++g)
      out.push_back(row[g].is_null()
                        ? -1
                        : morphism_index(row[g], path + ": compose[" +
                                                     std::to_string(f) + "][" +
                                                     std::to_string(g) + "]"));
    c.compose.push_back(std::move(out));
  }

  // Identities are not part of the file format; they are recovered as the
  // unique endomorphism per object that the table treats neutrally.
  for (size_t o = 0; o < c.objects.size(); ++o) {
    int found = -1;
    for (size_t f = 0; f < nm; ++f) {
      if (c.dom[f] != int(o) || c.cod[f] != int(o)) continue;
      bool neutral = true;
      for (size_t g = 0; g < nm && neutral; ++g) {
        if (c.dom[g] == int(o) && c.compose[f][g] != int(g)) neutral = false;
        if (c.cod[g] == int(o) && c.compose[g][f] != int(g)) neutral = false;
      }
      if (neutral) {
        found = int(f);
        break;
      }
    }
    if (found < 0)
      throw MalformedCategory("no identity morphism found for object \"" +
                              c.objects[o] + "\" in " + path);
    c.identity.push_back(found);
  }
  c = validate_category(std::move(c));

  LoadedCategory out;
  for (const json& v : doc["T"])
    out.t.push_back(morphism_index(v, path + ": T"));
  for (const json& v : doc["M"])
    out.m.push_back(morphism_index(v, path + ": M"));
  out.cat = std::move(c);
  return out;
}

json name_or_null(int i, const std::vector<std::string>& names) {
  if (i < 0) return nullptr;
  return names[i];
}

}  // namespace

Report cmd_analyze(const std::string& monoid_file, const CommandCaps& caps) {
  Report r;
  r.command = "analyze " + monoid_file;
  LoadedMonoid lm = load_monoid(monoid_file, r);
  const FiniteMonoid& m = lm.monoid;

  MonoidProfile prof = algebraic_profile(m);
  ToposProfile topos = topos_profile(m);
  int cap = caps.mset_cap > 0 ? caps.mset_cap : 5;
  GammaCrosscheck gamma = crosscheck_gamma(m, cap);
  CCrosscheck c = crosscheck_c(m, cap);

  r.payload["monoid"] = monoid_json(m);
  r.payload["relabeling"] = lm.relabeling;
  r.payload["profile"] = {
      {"is_group", prof.is_group},
      {"has_right_absorbing", prof.has_right_absorbing},
      {"has_left_absorbing", prof.has_left_absorbing},
      {"has_zero", prof.has_zero},
      {"is_right_ore", prof.is_right_ore},
      {"is_right_collapsible", prof.is_right_collapsible},
      {"is_left_cancellative", prof.is_left_cancellative},
      {"is_right_cancellative", prof.is_right_cancellative},
      {"right_ideal_count", prof.right_ideal_count}};
  json entries = json::object();
  for (const ProfileEntry& e : profile_entries(topos))
    entries[e.name] = {{"criterion", e.note}, {"holds", e.value}};
  r.payload["topos"] = entries;
  r.payload["crosschecks"] = {
      {"corpus_cap", cap},
      {"gamma",
       {{"quotient_fixed_points", verdict_json(gamma.quotient_fixed_points)},
        {"surjective_on_epis",
         verdict_json(gamma.gamma_surjective_on_epis)}}},
      {"c",
       {{"omega_two_components", verdict_json(c.omega_two_components)},
        {"equalizer_preservation", verdict_json(c.equalizer_preservation)},
        {"principal_products_connected",
         verdict_json(c.principal_products_connected)}}},
      {"all_agree", gamma.all_agree() && c.all_agree()}};
  return r;
}

Report cmd_congruences(const std::string& monoid_file,
                       const CommandCaps& caps) {
  Report r;
  r.command = "congruences " + monoid_file;
  LoadedMonoid lm = load_monoid(monoid_file, r);
  const FiniteMonoid& m = lm.monoid;

  int cap = caps.mset_cap > 0 ? caps.mset_cap : 9;
  std::vector<RightCongruence> congs = right_congruences(m, cap);
  CongCategory cat = congruence_category(m, congs);

  json nodes = json::array();
  for (const RightCongruence& c : congs)
    nodes.push_back({{"class_count", c.class_count},
                     {"classes", congruence_classes(c)},
                     {"two_sided", left_compatible(c)}});

  json covers = json::array();
  int n = int(congs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!strictly_refines(congs[i], congs[j])) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && strictly_refines(congs[i], congs[k]) &&
            strictly_refines(congs[k], congs[j]))
          direct = false;
      if (direct) covers.push_back({i, j});
    }

  json hom_counts = json::array();
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j) row.push_back(int(cat.hom[i][j].size()));
    hom_counts.push_back(row);
  }
  int checked = 0;
  bool closed = true;
  for (int i = 0; i < n && checked < 200; ++i)
    for (int j = 0; j < n && checked < 200; ++j)
      for (int k = 0; k < n && checked < 200; ++k)
        for (const CongMorphism& f : cat.hom[i][j]) {
          for (const CongMorphism& g : cat.hom[j][k]) {
            CongMorphism h = compose_cong(cat, f, g);
            if (std::find(cat.hom[i][k].begin(), cat.hom[i][k].end(), h) ==
                cat.hom[i][k].end())
              closed = false;
            if (++checked >= 200) break;
          }
          if (checked >= 200) break;
        }

  r.payload["monoid"] = monoid_json(m);
  r.payload["relabeling"] = lm.relabeling;
  r.payload["congruences"] = nodes;
  r.payload["lattice"] = {{"cover_edges", covers}, {"nodes", n}};
  r.payload["category"] = {{"composition_checks", checked},
                           {"composition_closed", closed},
                           {"hom_counts", hom_counts},
                           {"objects", n}};
  return r;
}

Report cmd_complete(const std::string& monoid_file,
                    const std::string& topology_file,
                    const CommandCaps& caps) {
  Report r;
  r.command = "complete " + monoid_file + " " + topology_file;
  LoadedMonoid lm = load_monoid(monoid_file, r);
  const FiniteMonoid& m = lm.monoid;
  MonoidTopology t = load_topology(topology_file, m, r);

  int cap = caps.mset_cap > 0 ? caps.mset_cap : 12;
  ActionTopology at = action_topology(m, t, cap);

  bool coarsens = true;
  for (ElementSet o : at.topology.opens)
    if (!t.contains(o)) coarsens = false;
  bool idempotent =
      action_topology(m, at.topology, cap).topology == at.topology;
  if (!coarsens)
    throw OracleViolation("action topology is not coarser than its input");
  if (!idempotent)
    throw OracleViolation("action topology is not a fixed point of itself");

  RectangleReport rect = is_topological_monoid(m, at.topology);
  PowderQuotient pq = powder_quotient(m, t);
  bool t0 = true;
  for (int x = 0; x < pq.monoid.size && t0; ++x)
    for (int y = x + 1; y < pq.monoid.size && t0; ++y) {
      bool separated = false;
      for (ElementSet o : pq.topology.opens)
        if (o.contains(x) != o.contains(y)) separated = true;
      if (!separated) t0 = false;
    }

  CongruenceFilter f = open_congruences(m, at.topology);
  BaseReduction br = base_reduce(f);
  CompletionMonoid comp = completion(m, f);

  std::vector<bool> hit(comp.monoid.size, false);
  bool unit_injective = true;
  for (int x = 0; x < m.size; ++x) {
    if (hit[comp.unit[x]]) unit_injective = false;
    hit[comp.unit[x]] = true;
  }
  bool powder_iso =
      monoid_isomorphism(pq.monoid, comp.monoid).has_value();
  if (!powder_iso)
    throw OracleViolation(
        "powder quotient and completion are not isomorphic");

  r.payload["monoid"] = monoid_json(m);
  r.payload["relabeling"] = lm.relabeling;
  r.payload["input_topology"] = {{"opens", sets_json(t.opens)}};
  r.payload["action_topology"] = {{"base", sets_json(at.base)},
                                  {"coarsens_input", coarsens},
                                  {"idempotent", idempotent},
                                  {"opens", sets_json(at.topology.opens)}};
  json mult = {{"continuous", rect.continuous}};
  if (!rect.continuous) {
    mult["failing_open"] = set_elems(rect.open);
    mult["pair"] = {rect.left, rect.right};
  }
  r.payload["multiplication"] = mult;
  r.payload["powder"] = {{"projection", pq.projection},
                         {"size", pq.monoid.size},
                         {"t0", t0},
                         {"table", pq.monoid.table}};
  json members = json::array();
  for (const RightCongruence& c : f.members)
    members.push_back(congruence_classes(c));
  r.payload["filter"] = {{"member_count", int(f.members.size())},
                         {"members", members}};
  json base = json::array();
  for (const RightCongruence& c : br.base)
    base.push_back(congruence_classes(c));
  r.payload["base_reduction"] = {
      {"base", base},
      {"discrete", br.discrete},
      {"least_classes", br.discrete ? json(br.least.class_count) : json()},
      {"prodiscrete_two_sided", br.prodiscrete_two_sided}};
  r.payload["completion"] = {{"coordinates", comp.tuples},
                             {"opens", sets_json(comp.topology.opens)},
                             {"size", comp.monoid.size},
                             {"table", comp.monoid.table},
                             {"unit", comp.unit},
                             {"unit_injective", unit_injective}};
  r.payload["agreement"] = {{"powder_isomorphic_to_completion", powder_iso}};
  return r;
}

Report cmd_morita(const std::string& monoid_file_a,
                  const std::string& monoid_file_b) {
  Report r;
  r.command = "morita " + monoid_file_a + " " + monoid_file_b;
  LoadedMonoid la = load_monoid(monoid_file_a, r);
  LoadedMonoid lb = load_monoid(monoid_file_b, r);

  auto side = [](const LoadedMonoid& lm) {
    const FiniteMonoid& m = lm.monoid;
    json audit = json::array();
    for (int e : idempotents(m).elements()) {
      LocalSubmonoid loc = local_submonoid(m, e);
      audit.push_back(
          {{"element", e},
           {"local_isomorphic_to_ambient",
            monoid_isomorphism(loc.monoid, m).has_value()},
           {"local_size", loc.monoid.size}});
    }
    json wits = json::array();
    for (const MoritaWitness& w : morita_witnesses(m)) {
      LocalSubmonoid loc = local_submonoid(m, w.e);
      wits.push_back({{"beta", w.beta},
                      {"beta_prime", w.beta_prime},
                      {"e", w.e},
                      {"local_isomorphic_to_ambient",
                       monoid_isomorphism(loc.monoid, m).has_value()}});
    }
    return json{{"idempotent_audit", audit},
                {"monoid", monoid_json(m)},
                {"relabeling", lm.relabeling},
                {"witness_count", wits.size()},
                {"witnesses", wits}};
  };

  std::optional<std::vector<int>> iso =
      monoid_isomorphism(la.monoid, lb.monoid);
  r.payload["left"] = side(la);
  r.payload["right"] = side(lb);
  r.payload["isomorphism"] = iso ? json(*iso) : json();
  r.payload["equivalent"] = iso.has_value();
  r.payload["verdict"] =
      iso ? "Morita equivalent: the monoids are isomorphic"
          : "not Morita equivalent: no isomorphism exists, and for finite "
            "monoids Morita equivalence forces one";
  return r;
}

Report cmd_monogenic_classify(const std::string& step_file) {
  Report r;
  r.command = "monogenic classify " + step_file;
  json doc = parse_file(step_file, r);
  if (!doc.is_object())
    throw ParseError(step_file + ": top level must be an object");
  if (!doc.contains("size") || !doc.contains("step"))
    throw ParseError(step_file + ": keys \"size\" and \"step\" are required");
  int n = require_int(doc["size"], step_file + ": size");
  if (!doc["step"].is_array() || int(doc["step"].size()) != n)
    throw ParseError(step_file + ": step must be an array of " +
                     std::to_string(n) + " entries");
  std::vector<int> step;
  for (size_t i = 0; i < doc["step"].size(); ++i)
    step.push_back(require_int(doc["step"][i],
                               step_file + ": step[" + std::to_string(i) +
                                   "]"));
  MonogenicAction x = make_monogenic(step);
  ShapeClassification cls = classify(x);

  json elements = json::array();
  for (int p = 0; p < x.size; ++p)
    elements.push_back({{"cycle", cls.element_shapes[p].b},
                        {"point", p},
                        {"tail", cls.element_shapes[p].a}});
  json components = json::array();
  for (int c = 0; c < cls.component_count; ++c) {
    std::vector<int> members;
    bool single_orbit = false;
    for (int p = 0; p < x.size; ++p)
      if (cls.component_of[p] == c) {
        members.push_back(p);
        if (cls.element_shapes[p] == cls.component_shapes[c])
          single_orbit = true;
      }
    components.push_back({{"cycle", cls.component_shapes[c].b},
                          {"members", members},
                          {"single_orbit", single_orbit},
                          {"tail", cls.component_shapes[c].a}});
  }
  r.payload["action"] = {{"size", x.size}, {"step", x.step}};
  r.payload["component_count"] = cls.component_count;
  r.payload["components"] = components;
  r.payload["elements"] = elements;
  return r;
}

Report cmd_fraisse_run(const std::string& system, int steps, int seed) {
  Report r;
  r.command = "fraisse run " + system + " --steps " + std::to_string(steps) +
              " --seed " + std::to_string(seed);
  auto sys = std::make_shared<ExtensionSystem>(builtin_system(system));
  Chain ch = build_chain(sys, steps, seed);

  json stages = json::array();
  for (size_t i = 0; i < ch.stages.size(); ++i)
    stages.push_back({{"index", int(i)},
                      {"name", sys->object_name(ch.stages[i])},
                      {"object", ch.stages[i]},
                      {"size", sys->object_size(ch.stages[i])}});
  json prov = json::array();
  for (size_t i = 0; i < ch.provenance.size(); ++i) {
    const ChainStep& st = ch.provenance[i];
    prov.push_back({{"applied", st.applied},
                    {"embedded", st.embedded},
                    {"extension", st.extension},
                    {"span", st.span},
                    {"stage", st.stage},
                    {"step", int(i)}});
  }

  int stage_bound = std::min(5, steps);
  int problem_bound = 3;
  json open = json::array();
  for (const ExtensionProblem& p :
       injectivity_deficit(ch, stage_bound, problem_bound))
    open.push_back({{"anchor", morph_json(p.anchor, *sys)},
                    {"extension", morph_json(p.extension, *sys)},
                    {"stage", p.stage}});

  json universality = json::array();
  for (int obj = 0; obj < 5; ++obj) {
    if (sys->object_count >= 0 && obj >= sys->object_count) break;
    std::optional<int> st = universality_stage(ch, obj);
    universality.push_back({{"name", sys->object_name(obj)},
                            {"object", obj},
                            {"stage", st ? json(*st) : json()}});
  }

  r.payload["deficit"] = {{"open", open},
                          {"open_count", open.size()},
                          {"problem_bound", problem_bound},
                          {"stage_bound", stage_bound}};
  r.payload["provenance"] = prov;
  r.payload["stages"] = stages;
  r.payload["system"] = {{"name", sys->name},
                         {"seed", seed},
                         {"steps", steps}};
  r.payload["universality"] = universality;
  return r;
}

Report cmd_fraisse_ofs(const std::string& category_file) {
  Report r;
  r.command = "fraisse ofs-validate " + category_file;
  LoadedCategory lc = load_category(category_file, r);
  OfsReport rep = ofs_validate(lc.cat, lc.t, lc.m);

  auto morph_names = [&](const std::vector<int>& ids) {
    json out = json::array();
    for (int i : ids) out.push_back(lc.cat.morphisms[i]);
    return out;
  };

  r.payload["category"] = {{"morphism_count", int(lc.cat.morphisms.size())},
                           {"objects", lc.cat.objects},
                           {"t", morph_names(lc.t)},
                           {"m", morph_names(lc.m)}};
  r.payload["factorization"] = {
      {"ok", rep.factorization_ok},
      {"unfactored", name_or_null(rep.unfactored, lc.cat.morphisms)}};
  json ambiguous = json::array();
  if (!rep.uniqueness_ok)
    for (int i : rep.ambiguous)
      ambiguous.push_back(name_or_null(i, lc.cat.morphisms));
  r.payload["uniqueness"] = {{"ambiguous", ambiguous},
                             {"ok", rep.uniqueness_ok}};
  json unliftable = json::array();
  if (!rep.lifting_ok)
    for (int i : rep.unliftable)
      unliftable.push_back(name_or_null(i, lc.cat.morphisms));
  r.payload["lifting"] = {{"ok", rep.lifting_ok},
                          {"unliftable", unliftable}};
  json unstable = json::array();
  if (!rep.stability_ok)
    for (int i : rep.unstable)
      unstable.push_back(name_or_null(i, lc.cat.morphisms));
  r.payload["stability"] = {{"axiom", rep.stability_axiom},
                            {"ok", rep.stability_ok},
                            {"unstable", unstable}};
  json uncovered = json::array();
  if (!rep.joint_covering_ok)
    for (int i : rep.uncovered)
      uncovered.push_back(name_or_null(i, lc.cat.objects));
  r.payload["joint_covering"] = {{"ok", rep.joint_covering_ok},
                                 {"uncovered", uncovered}};
  r.payload["all_ok"] = rep.all_ok();
  return r;
}

}  // namespace monoidlab
