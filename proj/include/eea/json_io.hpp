#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eea/expansion.hpp"
#include "eea/markov.hpp"
#include "eea/structure.hpp"

namespace eea {

using json = nlohmann::json;

inline json field_to_json(const FieldDescriptor& f) {
  json j;
  switch (f.kind) {
    case FieldKind::Rational: j["kind"] = "rational"; break;
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = f.p;
      break;
    case FieldKind::Real: j["kind"] = "real"; break;
  }
  return j;
}

inline FieldDescriptor field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("field: expected {\"kind\": ...}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldDescriptor::rational();
  if (kind == "real") return FieldDescriptor::real();
  if (kind == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      throw ParseError("prime field needs a positive integer \"p\"");
    return FieldDescriptor::prime(j["p"].get<std::uint64_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

// {"field": {...}, "n": int, "entries": [[i, j, "value"], ...]}; 0-based
// indices, exact value strings, zero entries omitted, row-major order.
inline json algebra_to_json(const EvolutionAlgebra& a) {
  json j;
  j["field"] = field_to_json(a.field());
  j["n"] = a.dim();
  json entries = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k)
      if (!a.entry_is_zero(i, k))
        entries.push_back(json::array({i, k, a.entry(i, k).str()}));
  j["entries"] = std::move(entries);
  return j;
}

inline EvolutionAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected a JSON object");
  if (!j.contains("field") || !j.contains("n")) throw ParseError("algebra: missing field/n");
  FieldDescriptor f = field_from_json(j["field"]);
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
    throw ParseError("algebra: n must be a positive integer");
  const int n = j["n"].get<int>();
  EvolutionAlgebra a(n, f);
  if (j.contains("entries")) {
    if (!j["entries"].is_array()) throw ParseError("algebra: entries must be an array");
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3) throw ParseError("algebra: entry must be [i,j,value]");
      const int i = e[0].get<int>(), k = e[1].get<int>();
      if (i < 0 || i >= n || k < 0 || k >= n) throw ParseError("algebra: entry index out of range");
      std::string v = e[2].is_string() ? e[2].get<std::string>() : e[2].dump();
      a.set_entry(i, k, Scalar::parse(v, f));
    }
  }
  return a;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << j.dump(2) << "\n";
}

inline json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "' for reading");
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline EvolutionAlgebra read_algebra_file(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

// {"h": "p/q"|"inf", "witness": [ints], "method": string}; bounds-only
// certificates carry "lower"/"upper" instead of "h".
inline json certificate_to_json(const CheegerCertificate& c) {
  json j;
  j["method"] = c.method_name();
  if (c.method == CheegerCertificate::Method::ExactEnumeration) {
    j["h"] = c.value_str();
    j["witness"] = c.witness;
  } else {
    j["lower"] = c.lower;
    j["upper"] = c.upper;
    j["witness"] = json::array();
  }
  return j;
}

inline json spectrum_to_json(const Spectrum& s) {
  json j;
  j["eigenvalues"] = s.eigenvalues;
  j["residual"] = s.residual_bound;
  j["partial"] = s.partial;
  return j;
}

inline json support_trace_to_json(const SupportTrace& t) {
  json j;
  j["i"] = t.generator;
  j["mode"] = trace_mode_name(t.mode);
  j["supports"] = t.supports;
  j["cover"] = t.cover_step ? json(*t.cover_step) : json(nullptr);
  return j;
}

inline json persistency_to_json(const PersistencyRecord& r) {
  json j;
  j["i"] = r.generator;
  j["mode"] = trace_mode_name(r.mode);
  j["occurrence"] = r.occurrence;
  j["first_absence"] = r.first_absence ? json(*r.first_absence) : json(nullptr);
  j["persistent_in_window"] = r.persistent_in_window;
  j["eventually_persistent"] = r.eventually_persistent_up_to_kmax;
  return j;
}

inline json mixing_to_json(const MixingTrace& t, const std::vector<double>& paper_bound,
                           const std::vector<double>& corrected_bound) {
  json j;
  j["i"] = t.start;
  j["distances"] = t.distances;
  j["paper_bound"] = paper_bound;
  j["corrected_bound"] = corrected_bound;
  return j;
}

inline json family_report_to_json(const FamilyReport& r) {
  json j;
  json members = json::array();
  for (const auto& m : r.members) {
    json mj;
    mj["n"] = m.n;
    mj["max_degree"] = m.max_degree;
    if (m.h_exact) mj["h"] = m.h.get_str();
    else {
      mj["h_lower"] = m.h_lower;
      mj["h_upper"] = m.h_upper;
    }
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  j["sizes_strictly_increasing"] = r.sizes_strictly_increasing;
  j["degree_bound"] = r.degree_bound;
  j["degree_growing"] = r.degree_growing;
  j["inf_h"] = r.inf_h.get_str();
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace eea
