#include "heapkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "heapkit/error.hpp"

namespace heapkit::io {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& why) {
  throw Error(ErrorKind::InputError, (at.empty() ? std::string("/") : at) + ": " + why);
}

std::string child(const std::string& at, std::string_view key) { return at + "/" + std::string(key); }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& at, const char* key) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(child(at, key), "missing");
  return *it;
}

const Json& array(const Json& j, const std::string& at) {
  if (!j.is_array()) fail(at, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) fail(at, "expected an integer");
  return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& at) {
  const auto v = integer(j, at);
  if (v < -(1 << 30) || v > (1 << 30)) fail(at, "integer out of range");
  return static_cast<int>(v);
}

std::string text(const Json& j, const std::string& at) {
  if (!j.is_string()) fail(at, "expected a string");
  return j.get<std::string>();
}

Color color_of(const DynkinDiagram& d, const Json& j, const std::string& at) {
  const auto label = text(j, at);
  auto c = d.find(label);
  if (!c) fail(at, "unknown color '" + label + "'");
  return *c;
}

std::vector<int> pair_of_ints(const Json& j, const std::string& at, std::size_t n) {
  array(j, at);
  if (j.size() != n) fail(at, "expected " + std::to_string(n) + " integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(small_int(j[i], child(at, i)));
  return out;
}

Json labels_of(const DynkinDiagram& d, const std::vector<Color>& colors) {
  Json out = Json::array();
  for (Color c : colors) out.push_back(d.label(c));
  return out;
}

Json witness_json(const Witness& w, const DynkinDiagram& d) {
  Json out;
  out["elements"] = w.elements;
  out["colors"] = labels_of(d, w.colors);
  if (w.sum) out["sum"] = *w.sum;
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

std::string kind_name(Inconsistency::Kind k) {
  switch (k) {
    case Inconsistency::Kind::EdgeConflict: return "EdgeConflict";
    case Inconsistency::Kind::AnchorConflict: return "AnchorConflict";
    case Inconsistency::Kind::IffViolation: return "IffViolation";
    case Inconsistency::Kind::EigenvalueOutOfRange: return "EigenvalueOutOfRange";
  }
  return "";
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InputError, path + ": not valid JSON (" + e.what() + ")");
  }
}

DynkinDiagram read_diagram(const Json& j, const std::string& at) {
  const auto cat = child(at, "colors");
  const Json& cs = array(member(j, at, "colors"), cat);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cs.size(); ++i) labels.push_back(text(cs[i], child(cat, i)));
  if (labels.empty()) fail(cat, "a diagram needs at least one color");

  const auto tat = child(at, "theta");
  const Json& rows = array(member(j, at, "theta"), tat);
  if (rows.size() != labels.size()) fail(tat, "expected " + std::to_string(labels.size()) + " rows");
  std::vector<std::vector<int>> theta;
  for (std::size_t i = 0; i < rows.size(); ++i) theta.push_back(pair_of_ints(rows[i], child(tat, i), labels.size()));
  try {
    return DynkinDiagram(std::move(labels), theta);
  } catch (const Error& e) {
    fail(e.kind() == ErrorKind::BadParameter ? cat : tat, e.what());
  }
}

ColoredPoset read_poset(const Json& j, const std::string& at) {
  const DynkinDiagram d = read_diagram(member(j, at, "diagram"), child(at, "diagram"));
  const auto eat = child(at, "elements");
  const Json& es = array(member(j, at, "elements"), eat);
  std::vector<std::optional<Color>> slots(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto at_i = child(eat, i);
    const auto id = integer(member(es[i], at_i, "id"), child(at_i, "id"));
    if (id < 0 || id >= static_cast<std::int64_t>(es.size()))
      fail(child(at_i, "id"), "ids must be 0.." + std::to_string(es.size() - 1));
    auto& slot = slots[static_cast<std::size_t>(id)];
    if (slot) fail(child(at_i, "id"), "duplicate id " + std::to_string(id));
    slot = color_of(d, member(es[i], at_i, "color"), child(at_i, "color"));
  }
  std::vector<Color> colors;
  for (auto& s : slots) colors.push_back(*s);

  const auto cat = child(at, "covers");
  const Json& cs = array(member(j, at, "covers"), cat);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto xy = pair_of_ints(cs[i], child(cat, i), 2);
    for (std::size_t k = 0; k < 2; ++k)
      if (xy[k] < 0 || xy[k] >= static_cast<int>(colors.size()))
        fail(child(child(cat, i), k), "no element " + std::to_string(xy[k]));
    covers.emplace_back(xy[0], xy[1]);
  }
  try {
    return ColoredPoset(d, std::move(colors), std::move(covers));
  } catch (const Error& e) {
    fail(e.kind() == ErrorKind::ColorUnused ? eat : cat, e.what());
  }
}

PeriodicHeap read_heap(const Json& j, const std::string& at) {
  const DynkinDiagram d = read_diagram(member(j, at, "diagram"), child(at, "diagram"));
  const auto cat = child(at, "cells");
  const Json& cs = array(member(j, at, "cells"), cat);
  std::vector<std::optional<Color>> colors(cs.size());
  std::vector<std::string> names(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto at_i = child(cat, i);
    const auto id = integer(member(cs[i], at_i, "id"), child(at_i, "id"));
    if (id < 0 || id >= static_cast<std::int64_t>(cs.size()))
      fail(child(at_i, "id"), "ids must be 0.." + std::to_string(cs.size() - 1));
    const auto k = static_cast<std::size_t>(id);
    if (colors[k]) fail(child(at_i, "id"), "duplicate id " + std::to_string(id));
    colors[k] = color_of(d, member(cs[i], at_i, "color"), child(at_i, "color"));
    if (cs[i].contains("name")) names[k] = text(cs[i]["name"], child(at_i, "name"));
  }
  std::vector<Color> cell_colors;
  for (auto& c : colors) cell_colors.push_back(*c);

  const auto tat = child(at, "templates");
  const Json& ts = array(member(j, at, "templates"), tat);
  std::vector<Template> templates;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto v = pair_of_ints(ts[i], child(tat, i), 3);
    for (std::size_t k = 0; k < 2; ++k)
      if (v[k] < 0 || v[k] >= static_cast<int>(cs.size()))
        fail(child(child(tat, i), k), "no cell " + std::to_string(v[k]));
    if (v[2] != 0 && v[2] != 1) fail(child(child(tat, i), 2), "shift must be 0 or 1");
    templates.push_back({v[0], v[1], v[2]});
  }
  try {
    return PeriodicHeap(d, std::move(cell_colors), std::move(templates), std::move(names));
  } catch (const Error& e) {
    fail(tat, e.what());
  }
}

SemiInfiniteFilter read_filter(const Json& j, const PeriodicHeap& heap, const std::string& at) {
  if (!j.is_object()) fail(at, "expected an object");
  if (j.contains("whole")) {
    if (!j["whole"].is_boolean() || !j["whole"].get<bool>()) fail(child(at, "whole"), "expected true");
    return SemiInfiniteFilter::whole(heap);
  }
  const auto gat = child(at, "generators");
  const Json& gs = array(member(j, at, "generators"), gat);
  if (gs.empty()) fail(gat, "at least one generator is required");
  std::vector<HeapElement> gens;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto at_i = child(gat, i);
    array(gs[i], at_i);
    if (gs[i].size() != 2) fail(at_i, "expected [cell, level]");
    const int cell = small_int(gs[i][0], child(at_i, 0));
    const auto level = integer(gs[i][1], child(at_i, 1));
    const HeapElement e{cell, level};
    if (!heap.contains(e)) fail(at_i, "no heap element at cell " + std::to_string(cell) + ", level " + std::to_string(level));
    gens.push_back(e);
  }
  return SemiInfiniteFilter(heap, std::move(gens));
}

Json to_json(const DynkinDiagram& d) {
  Json out;
  out["colors"] = d.labels();
  out["theta"] = d.matrix();
  return out;
}

Json to_json(const ColoredPoset& p) {
  Json out;
  out["diagram"] = to_json(p.diagram());
  Json es = Json::array();
  for (Element x = 0; x < p.size(); ++x) es.push_back({{"id", x}, {"color", p.diagram().label(p.color(x))}});
  out["elements"] = std::move(es);
  Json cs = Json::array();
  for (const auto& [x, y] : p.covers()) cs.push_back({x, y});
  out["covers"] = std::move(cs);
  return out;
}

Json to_json(const PeriodicHeap& h) {
  Json out;
  out["diagram"] = to_json(h.diagram());
  Json cs = Json::array();
  for (int c = 0; c < h.cell_count(); ++c) {
    Json cell{{"id", c}, {"color", h.diagram().label(h.cell_color(c))}};
    if (!h.cell_name(c).empty()) cell["name"] = h.cell_name(c);
    cs.push_back(std::move(cell));
  }
  out["cells"] = std::move(cs);
  Json ts = Json::array();
  for (const auto& t : h.templates()) ts.push_back({t.lower, t.upper, t.shift});
  out["templates"] = std::move(ts);
  return out;
}

Json to_json(const SemiInfiniteFilter& f) {
  Json out = to_json(f.heap());
  if (f.is_whole()) {
    out["whole"] = true;
  } else {
    Json gs = Json::array();
    for (const auto& g : f.generators()) gs.push_back({g.cell, g.height});
    out["generators"] = std::move(gs);
  }
  return out;
}

Json to_json(const CheckReport& r, const DynkinDiagram& d) {
  Json out;
  out["property"] = r.property;
  out["holds"] = r.holds;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w, d));
  out["witnesses"] = std::move(ws);
  return out;
}

Json to_json(const Classification& c, const DynkinDiagram& d) {
  Json out;
  out["is_d_complete"] = c.is_d_complete;
  out["is_minuscule"] = c.is_minuscule;
  out["is_dominant_minuscule_heap"] = c.is_dominant_minuscule_heap;
  out["is_minuscule_heap"] = c.is_minuscule_heap;
  out["routes_agree"] = c.routes_agree;
  out["component_count"] = c.components.size();
  Json comps = Json::array();
  for (const auto& v : c.components) {
    Json cj;
    cj["elements"] = v.elements;
    cj["colors"] = labels_of(d, v.colors);
    cj["is_d_complete"] = v.is_d_complete;
    cj["is_minuscule"] = v.is_minuscule;
    cj["is_dominant_minuscule_heap"] = v.is_dominant_minuscule_heap;
    comps.push_back(std::move(cj));
  }
  out["components"] = std::move(comps);
  Json rs = Json::array();
  for (const auto& r : c.reports) rs.push_back(to_json(r, d));
  out["reports"] = std::move(rs);
  return out;
}

Json to_json(const InfiniteReport& r, const DynkinDiagram& d) {
  Json out;
  out["is_d_complete"] = r.d_complete;
  out["is_full_heap"] = r.full_heap;
  out["colors_unbounded_above"] = r.cua;
  out["colors_unbounded_below"] = r.cub;
  out["colors_bounded_below"] = r.cbb;
  out["ucb1_vacuous"] = r.ucb1_vacuous;
  out["lcb1"] = r.lcb1;
  out["lcb2"] = r.lcb2;
  out["window"] = {r.window_lo, r.window_hi};
  Json rs = Json::array();
  for (const auto& rep : r.reports) rs.push_back(to_json(rep, d));
  out["reports"] = std::move(rs);
  return out;
}

Json to_json(const RepCertificate& c, const DynkinDiagram& d) {
  Json out;
  out["verdict"] = c.verdict;
  out["agrees_with_axioms"] = c.agrees_with_axioms;
  out["split_count"] = c.split_count;
  Json table = Json::array();
  if (!c.diagonals.eigenvalues.empty())
    for (std::size_t j = 0; j < c.split_count; ++j) {
      Json row;
      row["split"] = j;
      Json hs = Json::object();
      for (Color b = 0; b < d.size(); ++b)
        hs[d.label(b)] = c.diagonals.eigenvalues[static_cast<std::size_t>(b)][j];
      row["eigenvalues"] = std::move(hs);
      table.push_back(std::move(row));
    }
  out["eigenvalues"] = std::move(table);
  Json problems = Json::array();
  for (const auto& p : c.diagonals.problems)
    problems.push_back({{"kind", kind_name(p.kind)},
                        {"split", p.split},
                        {"color", d.label(p.color)},
                        {"expected", p.expected},
                        {"found", p.found},
                        {"message", p.describe(d)}});
  out["problems"] = std::move(problems);
  Json rel = Json::array();
  for (const auto& r : c.relations.checks) {
    Json rj{{"relation", r.relation}, {"a", d.label(r.a)}, {"b", d.label(r.b)}, {"holds", r.holds}};
    if (r.witness) rj["witness_split"] = *r.witness;
    rel.push_back(std::move(rj));
  }
  out["relations"] = std::move(rel);
  return out;
}

Json word_json(const WeylWord& w, const DynkinDiagram& d) { return labels_of(d, w); }

Json weight_json(const Weight& w, const DynkinDiagram& d) {
  Json out = Json::object();
  for (Color b = 0; b < d.size(); ++b) out[d.label(b)] = w[static_cast<std::size_t>(b)];
  return out;
}

std::string to_dot(const ColoredPoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x)
    out << "  " << x << " [label=\"" << x << ':' << p.diagram().label(p.color(x)) << "\"];\n";
  for (const auto& [x, y] : p.covers()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace heapkit::io
