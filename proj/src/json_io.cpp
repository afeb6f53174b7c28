#include "tangles/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tangles {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("expected a rational as a string or integer, got " + j.dump());
}

std::int64_t integer_of(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw FormatError("vertex coordinate " + to_string(q) + " is not integral");
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

}  // namespace

Json to_json(const QSqrt3& x) { return Json::array({to_string(x.a()), to_string(x.b())}); }

Json to_json(const VertexId& v) {
  return Json::array({Json::array({std::to_string(v.xa), std::to_string(v.xb)}),
                      Json::array({std::to_string(v.ya), std::to_string(v.yb)})});
}

Json to_json(Tiling t, const CellId& c) {
  if (t == Tiling::Triangular) return Json::array({c.i, c.j, c.orient == Orient::Up ? "U" : "D"});
  return Json::array({c.i, c.j});
}

Json to_json(const AreaValue& a) { return Json{{"alg", to_json(a.alg)}, {"pi", to_json(a.pi)}}; }

Json to_json(const DualPolyform& p) {
  Json j;
  j["tiling"] = std::string(name(p.tiling));
  Json cells = Json::array();
  for (const auto& c : p.cells) cells.push_back(to_json(p.tiling, c));
  j["cells"] = std::move(cells);
  Json coloring = Json::array();
  for (const auto& [v, color] : p.coloring) coloring.push_back(Json::array({to_json(v), color == Color::Black ? "B" : "W"}));
  j["coloring"] = std::move(coloring);
  if (auto v = p.circle_vertex()) j["circle_vertex"] = to_json(*v);
  return j;
}

Json to_json(const Tangle& t) {
  Json links = Json::array();
  for (const auto& link : t.links) {
    links.push_back(Json{{"center", to_json(link.center)},
                         {"curv", link.curvature == Curvature::Convex ? "X" : "V"},
                         {"start_dir", link.start.index()}});
  }
  return Json{{"tiling", std::string(name(t.tiling))}, {"links", std::move(links)}};
}

Json to_json(const TangleOp& op, Tiling t) {
  Json cells = Json::array();
  for (const auto& c : op.cells) cells.push_back(to_json(t, c));
  Json anchor = Json::array();
  for (const auto& v : op.anchor) anchor.push_back(to_json(v));
  return Json{{"kind", std::string(name(op.kind))}, {"cells", std::move(cells)}, {"anchor", std::move(anchor)}};
}

Json to_json(const OpSequence& seq) {
  Json steps = Json::array();
  for (const auto& op : seq.steps) steps.push_back(to_json(op, seq.tiling));
  return Json{{"tiling", std::string(name(seq.tiling))}, {"start", to_json(seq.start)}, {"steps", std::move(steps)}};
}

Json to_json(const ValidityReport& r) {
  const auto check = [](const CheckResult& c) {
    Json j{{"passed", c.passed}};
    if (!c.passed) j["detail"] = c.detail;
    return j;
  };
  std::string simplicity = "not evaluated";
  if (r.simplicity == Simplicity::Simple) simplicity = "simple";
  if (r.simplicity == Simplicity::NotSimple) simplicity = "not simple";
  return Json{{"valid", r.valid()},
              {"checks",
               {{"V0", check(r.nonempty)},
                {"V1", check(r.connected)},
                {"V2", check(r.simply_connected)},
                {"V3", check(r.no_white_cut)},
                {"V4", check(r.alternating)},
                {"V5", check(r.no_white_pair)},
                {"domain", check(r.domain)}}},
              {"simplicity", simplicity}};
}

Json to_json(const TangleMetrics& m) {
  Json j{{"size", m.size}, {"length", m.length}, {"j", m.convex}, {"k", m.concave}};
  if (m.tangle_class) j["class"] = *m.tangle_class;
  return j;
}

QSqrt3 qsqrt3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected [a, b] for a + b√3, got " + j.dump());
  return QSqrt3(rational_from_json(j[0]), rational_from_json(j[1]));
}

VertexId vertex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected a point [x, y], got " + j.dump());
  const QSqrt3 x = qsqrt3_from_json(j[0]);
  const QSqrt3 y = qsqrt3_from_json(j[1]);
  return {integer_of(x.a()), integer_of(x.b()), integer_of(y.a()), integer_of(y.b())};
}

CellId cell_from_json(Tiling t, const Json& j) {
  if (!j.is_array() || j.size() < 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw FormatError("malformed cell " + j.dump());
  }
  CellId c{j[0].get<std::int32_t>(), j[1].get<std::int32_t>(), Orient::Up};
  if (t == Tiling::Triangular) {
    if (j.size() != 3 || !j[2].is_string()) throw FormatError("triangular cells are [i, j, \"U\"|\"D\"]: " + j.dump());
    const auto o = j[2].get<std::string>();
    if (o != "U" && o != "D") throw FormatError("orientation must be U or D: " + j.dump());
    c.orient = o == "U" ? Orient::Up : Orient::Down;
  } else if (j.size() != 2) {
    throw FormatError("cells are [i, j]: " + j.dump());
  }
  return c;
}

AreaValue area_from_json(const Json& j) { return {qsqrt3_from_json(field(j, "alg")), qsqrt3_from_json(field(j, "pi"))}; }

namespace {

Tiling tiling_from_json(const Json& j) {
  const Json& t = field(j, "tiling");
  if (!t.is_string()) throw FormatError("tiling must be a string");
  try {
    return parse_tiling(t.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

DualPolyform polyform_from_json(const Json& j) {
  const Tiling t = tiling_from_json(j);
  std::vector<CellId> cells;
  const Json& jc = field(j, "cells");
  if (!jc.is_array()) throw FormatError("cells must be an array");
  for (const auto& c : jc) cells.push_back(cell_from_json(t, c));
  Coloring coloring;
  if (j.contains("coloring")) {
    const Json& col = j.at("coloring");
    if (!col.is_array()) throw FormatError("coloring must be an array");
    for (const auto& entry : col) {
      if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string()) throw FormatError("malformed coloring entry " + entry.dump());
      const auto c = entry[1].get<std::string>();
      if (c != "B" && c != "W") throw FormatError("color must be B or W: " + entry.dump());
      coloring.emplace_back(vertex_from_json(entry[0]), c == "B" ? Color::Black : Color::White);
    }
  }
  if (j.contains("circle_vertex")) {
    if (!cells.empty()) throw FormatError("circle_vertex is only allowed without cells");
    const VertexId v = vertex_from_json(j.at("circle_vertex"));
    if (!coloring.empty() && !(coloring.size() == 1 && coloring[0].first == v)) {
      throw FormatError("circle_vertex disagrees with the coloring");
    }
    return DualPolyform::circle(t, v);
  }
  return DualPolyform::make(t, std::move(cells), std::move(coloring));
}

Tangle tangle_from_json(const Json& j) {
  Tangle t;
  t.tiling = tiling_from_json(j);
  const Json& links = field(j, "links");
  if (!links.is_array()) throw FormatError("links must be an array");
  for (const auto& l : links) {
    Link link;
    link.center = vertex_from_json(field(l, "center"));
    const Json& curv = field(l, "curv");
    if (!curv.is_string() || (curv != "X" && curv != "V")) throw FormatError("curv must be \"X\" or \"V\"");
    link.curvature = curv == "X" ? Curvature::Convex : Curvature::Concave;
    const Json& d = field(l, "start_dir");
    if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() > 11) throw FormatError("start_dir must be 0..11");
    link.start = Direction(d.get<int>());
    t.links.push_back(link);
  }
  return t;
}

OpSequence ops_from_json(const Json& j) {
  OpSequence seq;
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw FormatError("steps must be an array");
  std::optional<Tiling> tiling;
  if (j.contains("tiling")) tiling = tiling_from_json(j);
  std::vector<OpKind> kinds;
  for (const auto& s : steps) {
    const Json& k = field(s, "kind");
    if (!k.is_string()) throw FormatError("kind must be a string");
    try {
      kinds.push_back(parse_op_kind(k.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (!tiling) tiling = tiling_of(kinds.back());
    if (tiling_of(kinds.back()) != *tiling) throw FormatError("operation kinds mix tilings");
  }
  if (!tiling) throw FormatError("an empty sequence needs a \"tiling\" key");
  seq.tiling = *tiling;
  seq.start = vertex_from_json(field(j, "start"));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    TangleOp op;
    op.kind = kinds[i];
    const Json& cells = field(steps[i], "cells");
    if (!cells.is_array()) throw FormatError("step cells must be an array");
    for (const auto& c : cells) op.cells.push_back(cell_from_json(seq.tiling, c));
    std::sort(op.cells.begin(), op.cells.end());
    if (steps[i].contains("anchor")) {
      for (const auto& v : steps[i].at("anchor")) op.anchor.push_back(vertex_from_json(v));
      std::sort(op.anchor.begin(), op.anchor.end());
    }
    seq.steps.push_back(std::move(op));
  }
  return seq;
}

FileKind sniff(const Json& j) {
  if (!j.is_object()) throw FormatError("top-level JSON must be an object");
  if (j.contains("cells")) return FileKind::Polyform;
  if (j.contains("links")) return FileKind::Tangle;
  if (j.contains("steps")) return FileKind::Ops;
  throw FormatError("cannot tell the file type: expected a \"cells\", \"links\" or \"steps\" key");
}

Json enumeration_record(const CanonicalForm& form) {
  const DualPolyform& p = form.polyform;
  const Tangle t = trace_tangle(p);
  const TangleMetrics m = metrics(t, p);
  Json j{{"tiling", std::string(name(p.tiling))}, {"size", m.size}, {"length", m.length}};
  if (m.tangle_class) j["class"] = *m.tangle_class;
  j["j"] = m.convex;
  j["k"] = m.concave;
  j["area"] = to_json(enclosed_area(t));
  j["polyform"] = to_json(p);
  return j;
}

Json enumeration_summary(const EnumerationTable& table) {
  Json counts = Json::array();
  for (auto c : table.counts()) counts.push_back(c);
  Json j{{"tiling", std::string(name(table.tiling))},
         {"max_size", table.max_size},
         {"provenance", std::string(name(table.provenance))},
         {"complete", table.complete},
         {"counts", std::move(counts)},
         {"total", table.total()}};
  if (table.provenance == Provenance::OpClosure) {
    Json ops = Json::object();
    for (int k = 0; k < kOpKindCount; ++k) {
      const auto applied = table.op_stats.applied[static_cast<std::size_t>(k)];
      if (applied == 0 || tiling_of(static_cast<OpKind>(k)) != table.tiling) continue;
      ops[std::string(name(static_cast<OpKind>(k)))] = {
          {"applied", applied},
          {"expected_delta", expected_length_delta(static_cast<OpKind>(k))},
          {"delta_mismatches", table.op_stats.delta_mismatches[static_cast<std::size_t>(k)]}};
    }
    j["ops"] = std::move(ops);
  }
  return j;
}

Json verification_summary(const VerificationReport& report, const EnumerationTable& table) {
  static constexpr std::array<const char*, 7> kChecks = {"valid", "gauss_bonnet", "length_congruence", "area_formula",
                                                         "simple", "dual_round_trip", "construct_round_trip"};
  Json failures = Json::object();
  for (std::size_t k = 0; k < kChecks.size(); ++k) failures[kChecks[k]] = report.failures_by_check[k];

  // Realized lengths and areas per size.
  std::map<std::size_t, std::set<std::size_t>> lengths;
  std::map<std::size_t, std::vector<std::string>> areas;
  for (const auto& r : report.instances) {
    lengths[r.size].insert(r.length);
    const std::string a = to_string(r.area);
    auto& list = areas[r.size];
    if (std::find(list.begin(), list.end(), a) == list.end()) list.push_back(a);
  }
  Json sizes = Json::array();
  const auto counts = table.counts();
  for (std::size_t m = 0; m < counts.size(); ++m) {
    Json s{{"size", m}, {"count", counts[m]}};
    Json ls = Json::array();
    for (auto l : lengths[m]) ls.push_back(l);
    s["lengths"] = std::move(ls);
    s["areas"] = areas[m];
    s["expected_area"] = to_string(area_formula(table.tiling, m));
    sizes.push_back(std::move(s));
  }
  std::size_t mismatches = 0;
  for (auto x : table.op_stats.delta_mismatches) mismatches += x;
  Json first_failures = Json::array();
  for (std::size_t i = 0; i < report.instances.size() && first_failures.size() < 10; ++i) {
    if (!report.instances[i].passed()) {
      first_failures.push_back({{"index", i}, {"size", report.instances[i].size}, {"note", report.instances[i].note}});
    }
  }
  const Json enumeration = enumeration_summary(table);
  return Json{{"tiling", std::string(name(report.tiling))},
              {"max_size", report.max_size},
              {"instances", report.instances.size()},
              {"failures", report.failures},
              {"failures_by_check", std::move(failures)},
              {"op_delta_mismatches", mismatches},
              {"complete", table.complete},
              {"all_pass", report.all_pass() && mismatches == 0 && table.complete},
              {"sizes", std::move(sizes)},
              {"ops", enumeration.contains("ops") ? enumeration.at("ops") : Json::object()},
              {"first_failures", std::move(first_failures)}};
}

}  // namespace tangles
