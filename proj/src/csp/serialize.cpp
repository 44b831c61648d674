#include "pcpforge/csp/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pcpforge {

using nlohmann::json;

nlohmann::json label_value_to_json(const LabelValue& v) {
  if (v.is_plain()) return v.plain();
  json op = json::object();
  for (auto& [vid, lab] : v.ball().opinions) op[std::to_string(vid)] = lab;
  return json{{"op", op}};
}

LabelValue label_value_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return LabelValue((Label)j.get<int64_t>());
  require(j.is_object() && j.contains("op"), Errc::ParseError, "bad label value");
  BallLabel b;
  for (auto it = j["op"].begin(); it != j["op"].end(); ++it) {
    VarId v;
    try {
      v = (VarId)std::stol(it.key());
    } catch (...) {
      fail(Errc::ParseError, "bad ball-label key '" + it.key() + "'");
    }
    b.set(v, (Label)it.value().get<int64_t>());
  }
  return LabelValue(std::move(b));
}

nlohmann::json relation_to_json(const Relation& r) {
  switch (r.kind()) {
    case Relation::Kind::Parity2:
      return json{{"kind", "parity2"}, {"b", r.parity_target()}};
    case Relation::Kind::Equality:
      return json{{"kind", "eq"}};
    case Relation::Kind::Trivial:
      if (r.arity() == 2) return json{{"kind", "trivial"}};
      return json{{"kind", "trivial"}, {"arity", r.arity()}};
    case Relation::Kind::Projection:
      return json{{"kind", "projection"}, {"map", r.projection_map()}};
    case Relation::Kind::Tuples: {
      json acc = json::array();
      for (auto& t : r.accept_tuples()) acc.push_back(t);
      return json{{"kind", "tuples"}, {"arity", r.arity()}, {"accept", acc}};
    }
    case Relation::Kind::Conjunction: {
      json parts = json::array();
      for (auto& p : r.parts())
        parts.push_back(json{{"rel", relation_to_json(*p.rel)}, {"pos", p.positions}});
      return json{{"kind", "conj"}, {"arity", r.arity()}, {"parts", parts}};
    }
    case Relation::Kind::Walk: {
      json checks = json::array();
      for (auto& c : r.checks())
        checks.push_back(json{{"a", c.a}, {"b", c.b}, {"rel", relation_to_json(*c.rel)}});
      return json{{"kind", "walk"}, {"checks", checks}};
    }
  }
  fail(Errc::ParseError, "unserializable relation");
}

RelationPtr relation_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("kind"), Errc::ParseError, "relation without kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "parity2") return Relation::parity2(j.at("b").get<int>());
  if (kind == "eq") return Relation::equality();
  if (kind == "trivial") return Relation::trivial(j.value("arity", 2));
  if (kind == "projection") return Relation::projection(j.at("map").get<std::vector<Label>>());
  if (kind == "tuples") {
    auto acc = j.at("accept").get<std::vector<std::vector<Label>>>();
    int arity = j.contains("arity") ? j["arity"].get<int>()
                                    : (acc.empty() ? 1 : (int)acc.front().size());
    return Relation::tuples(arity, std::move(acc));
  }
  if (kind == "conj") {
    std::vector<Relation::ConjunctPart> parts;
    for (auto& p : j.at("parts"))
      parts.push_back({relation_from_json(p.at("rel")), p.at("pos").get<std::vector<int>>()});
    return Relation::conjunction(j.at("arity").get<int>(), std::move(parts));
  }
  if (kind == "walk") {
    std::vector<Relation::WalkCheck> checks;
    for (auto& c : j.at("checks"))
      checks.push_back({(VarId)c.at("a").get<int64_t>(), (VarId)c.at("b").get<int64_t>(),
                        relation_from_json(c.at("rel"))});
    return Relation::walk(std::move(checks));
  }
  fail(Errc::ParseError, "unknown relation kind '" + kind + "'");
}

static json alphabet_to_json(const Alphabet& a,
                             const std::map<const Alphabet*, std::string>& names) {
  switch (a.kind()) {
    case Alphabet::Kind::Boolean:
      return json{{"kind", "boolean"}};
    case Alphabet::Kind::Explicit:
      return json{{"kind", "explicit"}, {"labels", a.labels()}};
    case Alphabet::Kind::Product:
      return json{{"kind", "product"},
                  {"base", names.at(a.base().get())},
                  {"arity", a.product_arity()}};
    case Alphabet::Kind::Ball:
      return json{{"kind", "ball"},
                  {"base", names.at(a.base().get())},
                  {"domain", a.ball_domain()}};
  }
  fail(Errc::ParseError, "unserializable alphabet");
}

std::string serialize(const Instance& inst) {
  json out;
  out["format"] = "pcp-forge/instance";
  out["version"] = 1;

  // Structured alphabets reference their base by name; bases must themselves
  // be in the instance's alphabet table.
  std::map<const Alphabet*, std::string> names;
  for (auto& [name, alph] : inst.alphabets()) names[alph.get()] = name;
  json alphs = json::object();
  for (auto& [name, alph] : inst.alphabets()) {
    if ((alph->kind() == Alphabet::Kind::Product || alph->kind() == Alphabet::Kind::Ball))
      require(names.count(alph->base().get()), Errc::ParseError,
              "structured alphabet base not in table");
    alphs[name] = alphabet_to_json(*alph, names);
  }
  out["alphabets"] = alphs;

  json vars = json::array();
  for (int v = 0; v < inst.num_variables(); ++v)
    vars.push_back(json{{"id", v},
                        {"alphabet", inst.alphabets()[(size_t)inst.alphabet_index_of(v)].first}});
  out["variables"] = vars;

  struct Row {
    json j;
    std::string key;
  };
  std::vector<Row> rows;
  rows.reserve(inst.num_edges());
  for (const auto& e : inst.edges()) {
    json ej{{"vars", e.vars},
            {"relation", relation_to_json(*e.rel)},
            {"weight", rat_str(e.weight)},
            {"mult", e.mult}};
    std::string key;
    for (VarId v : e.vars) key += std::to_string(v) + ",";
    key += "|" + e.rel->fingerprint() + "|" + rat_str(e.weight) + "|" + std::to_string(e.mult);
    rows.push_back({std::move(ej), std::move(key)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.key < b.key; });
  json edges = json::array();
  for (auto& r : rows) edges.push_back(std::move(r.j));
  out["edges"] = edges;

  if (inst.has_marked()) out["marked"] = inst.marked();
  return out.dump();
}

Instance deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("json: ") + e.what());
  }
  try {
    require(j.value("format", "") == "pcp-forge/instance", Errc::ParseError,
            "not a pcp-forge instance file");

    // Alphabets, resolving base references (objects come back name-sorted; a
    // base may appear after its user, so resolve in dependency order).
    std::map<std::string, json> raw;
    for (auto it = j.at("alphabets").begin(); it != j.at("alphabets").end(); ++it)
      raw[it.key()] = it.value();
    std::map<std::string, AlphabetPtr> resolved;
    std::function<AlphabetPtr(const std::string&)> resolve =
        [&](const std::string& name) -> AlphabetPtr {
      auto done = resolved.find(name);
      if (done != resolved.end()) return done->second;
      auto rit = raw.find(name);
      require(rit != raw.end(), Errc::ParseError, "unknown alphabet '" + name + "'");
      const json& a = rit->second;
      std::string kind = a.at("kind").get<std::string>();
      AlphabetPtr out;
      if (kind == "boolean")
        out = Alphabet::boolean();
      else if (kind == "explicit")
        out = Alphabet::explicit_labels(a.at("labels").get<std::vector<Label>>());
      else if (kind == "product")
        out = Alphabet::product(resolve(a.at("base").get<std::string>()),
                                a.at("arity").get<int>());
      else if (kind == "ball")
        out = Alphabet::ball(a.at("domain").get<std::vector<VarId>>(),
                             resolve(a.at("base").get<std::string>()));
      else
        fail(Errc::ParseError, "unknown alphabet kind '" + kind + "'");
      resolved[name] = out;
      return out;
    };

    std::vector<std::pair<std::string, AlphabetPtr>> alphabets;
    for (auto& [name, _] : raw) alphabets.push_back({name, resolve(name)});
    std::map<std::string, int> alphabet_index;
    for (size_t i = 0; i < alphabets.size(); ++i) alphabet_index[alphabets[i].first] = (int)i;

    struct VarRow {
      int64_t id;
      int alphabet;
    };
    std::vector<VarRow> vrows;
    for (auto& v : j.at("variables")) {
      std::string aname = v.at("alphabet").get<std::string>();
      require(alphabet_index.count(aname), Errc::ParseError,
              "variable uses unknown alphabet '" + aname + "'");
      vrows.push_back({v.at("id").get<int64_t>(), alphabet_index[aname]});
    }
    std::sort(vrows.begin(), vrows.end(), [](const VarRow& a, const VarRow& b) {
      return a.id < b.id;
    });
    std::map<int64_t, VarId> remap;
    std::vector<int> var_alphabet;
    for (auto& v : vrows) {
      require(!remap.count(v.id), Errc::ParseError, "duplicate variable id");
      remap[v.id] = (VarId)var_alphabet.size();
      var_alphabet.push_back(v.alphabet);
    }

    std::vector<Edge> edges;
    for (auto& ej : j.at("edges")) {
      Edge e;
      for (int64_t raw_id : ej.at("vars").get<std::vector<int64_t>>()) {
        auto it = remap.find(raw_id);
        require(it != remap.end(), Errc::ParseError,
                "edge references unknown variable id " + std::to_string(raw_id));
        e.vars.push_back(it->second);
      }
      e.rel = relation_from_json(ej.at("relation"));
      e.weight = rat_parse(ej.value("weight", "1"));
      e.mult = ej.value("mult", (uint64_t)1);
      edges.push_back(std::move(e));
    }

    std::optional<std::vector<VarId>> marked;
    if (j.contains("marked")) {
      std::vector<VarId> m;
      for (int64_t raw_id : j["marked"].get<std::vector<int64_t>>()) {
        auto it = remap.find(raw_id);
        require(it != remap.end(), Errc::ParseError, "marked references unknown variable");
        m.push_back(it->second);
      }
      std::sort(m.begin(), m.end());
      marked = std::move(m);
    }

    Instance inst(std::move(alphabets), std::move(var_alphabet), std::move(edges),
                  std::move(marked));
    // typing of explicit tuples against declared alphabets
    for (const auto& e : inst.edges()) {
      if (e.rel->kind() != Relation::Kind::Tuples) continue;
      for (auto& t : e.rel->accept_tuples())
        for (size_t i = 0; i < t.size(); ++i)
          require(inst.alphabet_of(e.vars[i])->contains(LabelValue(t[i])), Errc::ParseError,
                  "accepting tuple entry outside declared alphabet");
    }
    return inst;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("instance json: ") + e.what());
  }
}

std::string serialize_assignment(const Assignment& a) {
  json out;
  out["format"] = "pcp-forge/assignment";
  json labels = json::array();
  for (auto& v : a.values) labels.push_back(label_value_to_json(v));
  out["labels"] = labels;
  return out.dump();
}

Assignment deserialize_assignment(const std::string& text) {
  try {
    json j = json::parse(text);
    require(j.value("format", "") == "pcp-forge/assignment", Errc::ParseError,
            "not an assignment file");
    Assignment a;
    for (auto& v : j.at("labels")) a.values.push_back(label_value_from_json(v));
    return a;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("assignment json: ") + e.what());
  }
}

bool instances_equal(const Instance& a, const Instance& b) {
  return serialize(a) == serialize(b);
}

std::string content_hash(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string("fnv1a64:") + buf;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), Errc::InvalidArgument, "cannot open " + path + " for writing");
  f.write(bytes.data(), (std::streamsize)bytes.size());
  require(f.good(), Errc::InvalidArgument, "write failed on " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace pcpforge
