#include "heapkit/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "heapkit/axioms.hpp"
#include "heapkit/error.hpp"
#include "heapkit/heap_periodic.hpp"
#include "heapkit/json_io.hpp"
#include "heapkit/rep.hpp"
#include "heapkit/weyl.hpp"

namespace heapkit::cli {

namespace {

using io::Json;

// Input problems are reported with the file name in front.
struct InputFailure {
  std::string message;
};

template <class F>
auto reading(const std::string& path, F&& f) {
  try {
    return f(io::load_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InputError && std::string_view(e.what()).find(path) != std::string_view::npos)
      throw InputFailure{e.what()};
    throw InputFailure{path + ": " + e.what()};
  }
}

ColoredPoset load_poset(const std::string& path) {
  return reading(path, [](const Json& j) { return io::read_poset(j); });
}

struct Mixed {
  ColoredPoset finite;
  std::vector<SemiInfiniteFilter> filters;
};

// A poset document may carry "filters": semi-infinite components given as
// heap documents with generators.
Mixed read_mixed(const Json& j) {
  Mixed m{io::read_poset(j), {}};
  if (j.contains("filters")) {
    const Json& fs = j["filters"];
    if (!fs.is_array()) throw Error(ErrorKind::InputError, "/filters: expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string at = "/filters/" + std::to_string(i);
      m.filters.push_back(io::read_filter(fs[i], io::read_heap(fs[i], at), at));
    }
  }
  return m;
}

Mixed load_mixed(const std::string& path) { return reading(path, read_mixed); }

PeriodicHeap load_heap(const std::string& path) {
  return reading(path, [](const Json& j) { return io::read_heap(j); });
}

SemiInfiniteFilter load_filter(const std::string& path, const PeriodicHeap& fallback) {
  return reading(path, [&](const Json& j) {
    if (j.is_object() && j.contains("cells")) return io::read_filter(j, io::read_heap(j));
    return io::read_filter(j, fallback);
  });
}

DynkinDiagram load_diagram(const std::string& path) {
  return reading(path, [](const Json& j) {
    if (j.is_object() && j.contains("diagram")) return io::read_diagram(j["diagram"], "/diagram");
    return io::read_diagram(j);
  });
}

Json elements_json(const std::vector<HeapElement>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back({e.cell, e.height});
  return out;
}

int emit(std::ostream& out, const Json& j, bool positive) {
  out << j.dump(2) << '\n';
  return positive ? kOk : kNegative;
}

int do_validate(const std::string& path, std::ostream& out) {
  return reading(path, [&](const Json& j) {
    Json r;
    r["valid"] = true;
    if (j.is_object() && j.contains("cells")) {
      const PeriodicHeap h = io::read_heap(j);
      r["kind"] = "heap";
      r["cells"] = h.cell_count();
      r["period"] = h.period();
      if (j.contains("generators") || j.contains("whole")) {
        const auto f = io::read_filter(j, h);
        r["kind"] = "filter";
        r["generators"] = elements_json(f.generators());
      }
    } else if (j.is_object() && j.contains("elements")) {
      const Mixed m = read_mixed(j);
      r["kind"] = "poset";
      r["elements"] = m.finite.size();
      r["covers"] = m.finite.covers().size();
      if (!m.filters.empty()) r["filters"] = m.filters.size();
    } else {
      const DynkinDiagram d = io::read_diagram(j);
      r["kind"] = "diagram";
      r["colors"] = d.size();
    }
    return emit(out, r, true);
  });
}

int do_classify(const std::string& path, std::ostream& out) {
  const Mixed m = load_mixed(path);
  if (m.filters.empty()) {
    const Classification c = classify(m.finite);
    return emit(out, io::to_json(c, m.finite.diagram()), c.is_d_complete);
  }
  const MixedClassification c = classify_mixed(m.finite, m.filters);
  Json j;
  j["is_d_complete"] = c.is_d_complete;
  j["component_count"] = c.component_count;
  j["finite"] = io::to_json(c.finite, m.finite.diagram());
  Json inf = Json::array();
  for (std::size_t i = 0; i < c.infinite.size(); ++i)
    inf.push_back(io::to_json(c.infinite[i], m.filters[i].heap().diagram()));
  j["infinite"] = std::move(inf);
  return emit(out, j, c.is_d_complete);
}

int do_decompose(const std::string& path, std::ostream& out) {
  const ColoredPoset p = load_poset(path);
  const auto& d = p.diagram();
  bool all_heaps = true;
  Json comps = Json::array();
  for (const SubPoset& c : components(p)) {
    Json cj;
    cj["elements"] = c.elements;
    Json labels = Json::array();
    for (Color a : c.colors) labels.push_back(d.label(a));
    cj["colors"] = std::move(labels);
    const bool heap = is_dominant_minuscule_heap(c.poset);
    cj["is_dominant_minuscule_heap"] = heap;
    if (!heap) {
      all_heaps = false;
      Json failing = Json::array();
      for (const auto& r : classify(c.poset).reports)
        if (!r.holds) failing.push_back(io::to_json(r, c.poset.diagram()));
      cj["failing"] = std::move(failing);
      comps.push_back(std::move(cj));
      continue;
    }
    Json edges = Json::array();
    for (const auto& [x, y] : slant_edges(c.poset))
      edges.push_back({c.elements[static_cast<std::size_t>(x)], c.elements[static_cast<std::size_t>(y)]});
    cj["slant_edges"] = std::move(edges);
    const SlantDecomposition dec = slant_decompose(c.poset);
    Json parts = Json::array();
    for (const SubPoset& part : dec.parts) {
      std::vector<Element> ids;
      for (Element x : part.elements) ids.push_back(c.elements[static_cast<std::size_t>(x)]);
      Json pj;
      pj["elements"] = ids;
      pj["key"] = canonical_key(part.poset);
      parts.push_back(std::move(pj));
    }
    cj["parts"] = std::move(parts);
    Json joins = Json::array();
    for (const auto& jn : dec.joins)
      joins.push_back({{"lower_part", jn.lower_part},
                       {"lower", jn.lower},
                       {"upper_part", jn.upper_part},
                       {"upper", jn.upper},
                       {"reverse_theta", jn.reverse_theta}});
    cj["joins"] = std::move(joins);
    comps.push_back(std::move(cj));
  }
  Json j;
  j["component_count"] = comps.size();
  j["components"] = std::move(comps);
  return emit(out, j, all_heaps);
}

int do_enumerate(const std::string& path, int max_size, std::size_t cap, std::ostream& out) {
  const DynkinDiagram d = load_diagram(path);
  EnumerateOptions opts;
  opts.cap = cap;
  const auto heaps = enumerate_heaps(d, max_size, opts);
  Json list = Json::array();
  for (const auto& h : heaps) list.push_back(io::to_json(h));
  Json j;
  j["count"] = heaps.size();
  j["heaps"] = std::move(list);
  return emit(out, j, true);
}

int do_heap_window(const std::string& path, std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
                   std::ostream& out) {
  const PeriodicHeap h = load_heap(path);
  const auto [vlo, vhi] = h.validation_window();
  const HeapWindow w = window(h, lo.value_or(vlo), hi.value_or(vhi));
  Json j = io::to_json(w.poset);
  j["heap_elements"] = elements_json(w.elements);
  return emit(out, j, true);
}

// Filter from --filter, else generators embedded in the heap document, else
// the whole heap when allowed.
std::optional<SemiInfiniteFilter> filter_arg(const std::string& path, const PeriodicHeap& h,
                                             const std::string& filter_path) {
  if (!filter_path.empty()) return load_filter(filter_path, h);
  return reading(path, [&](const Json& j) -> std::optional<SemiInfiniteFilter> {
    if (j.contains("generators") || j.contains("whole")) return io::read_filter(j, h);
    return std::nullopt;
  });
}

int do_filter_check(const std::string& path, const std::string& filter_path, std::ostream& out) {
  const PeriodicHeap h = load_heap(path);
  const SemiInfiniteFilter f = filter_arg(path, h, filter_path).value_or(SemiInfiniteFilter::whole(h));
  const InfiniteReport r = check_infinite_axioms(f);
  return emit(out, io::to_json(r, f.heap().diagram()), r.d_complete);
}

int do_saturate(const std::string& path, const std::string& filter_path, std::optional<std::size_t> steps,
                std::ostream& out) {
  const PeriodicHeap h = load_heap(path);
  const auto given = filter_arg(path, h, filter_path);
  if (!given) throw InputFailure{"saturate needs --filter or generators in " + path};
  const SemiInfiniteFilter& f = *given;
  const auto& d = f.heap().diagram();
  const std::size_t budget = steps.value_or(4 * static_cast<std::size_t>(f.heap().cell_count()));
  Json j;
  try {
    const Saturation s = saturate(f, budget);
    j["converged"] = true;
    Json st = Json::array();
    for (const auto& step : s.steps)
      st.push_back({{"added", {step.added.cell, step.added.height}},
                    {"color", d.label(step.color)},
                    {"is_d_complete", step.d_complete}});
    j["steps"] = std::move(st);
    j["band_start"] = s.band_start;
    j["band_key"] = s.band_key;
    j["final_generators"] = elements_json(s.final_filter.generators());
    return emit(out, j, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoConvergenceWithinBudget && e.kind() != ErrorKind::AxiomFailure &&
        e.kind() != ErrorKind::NoEligibleColor)
      throw;
    j["converged"] = false;
    j["reason"] = e.what();
    return emit(out, j, false);
  }
}

Json not_a_heap(const ColoredPoset& p) {
  Json j;
  j["is_dominant_minuscule_heap"] = false;
  j["classification"] = io::to_json(classify(p), p.diagram());
  return j;
}

int do_weyl_words(const std::string& path, std::size_t cap, std::ostream& out) {
  const ColoredPoset p = load_poset(path);
  if (!is_dominant_minuscule_heap(p)) return emit(out, not_a_heap(p), false);
  const auto& d = p.diagram();
  const auto words = heap_to_words(p, cap);
  Json j;
  j["lambda"] = io::weight_json(solve_lambda(p), d);
  j["count"] = words.size();
  j["length"] = words.empty() ? 0 : weyl_length(d, words.front());
  Json ws = Json::array();
  for (const auto& w : words) ws.push_back(io::word_json(w, d));
  j["words"] = std::move(ws);
  return emit(out, j, true);
}

int do_weyl_lambda(const std::string& path, std::ostream& out) {
  const ColoredPoset p = load_poset(path);
  Json j;
  try {
    j["lambda"] = io::weight_json(solve_lambda(p), p.diagram());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    j["feasible"] = false;
    j["reason"] = e.what();
    return emit(out, j, false);
  }
  j["feasible"] = true;
  return emit(out, j, true);
}

int do_rep_verify(const std::string& path, std::size_t cap, std::ostream& out) {
  const ColoredPoset p = load_poset(path);
  const RepCertificate c = carries_upper_minuscule(p, cap);
  return emit(out, io::to_json(c, p.diagram()), c.verdict);
}

int do_render(const std::string& path, const std::string& out_path, std::ostream& out) {
  const ColoredPoset p = load_poset(path);
  const std::string dot = io::to_dot(p);
  if (out_path.empty()) {
    out << dot;
    return kOk;
  }
  std::ofstream f(out_path);
  if (!f) throw InputFailure{out_path + ": cannot write file"};
  f << dot;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored posets, minuscule heaps and their representations", "heapkit"};
  app.require_subcommand(1);
  std::size_t cap = kDefaultCap;
  app.add_option("--cap", cap, "bound on splits, linear extensions and enumerated heaps")->check(CLI::PositiveNumber);

  std::string file, filter_path, out_path;
  int max_size = 0;
  std::optional<std::int64_t> lo, hi;
  std::optional<std::size_t> steps;
  std::function<int()> action;

  auto verb = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> f) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("file", file, "input document")->required();
    sub->callback([&action, f] { action = f; });
    return sub;
  };

  verb(&app, "validate", "check that a document parses and satisfies its invariants",
       [&] { return do_validate(file, out); });
  verb(&app, "classify", "decide every poset class and print the witnesses",
       [&] { return do_classify(file, out); });
  verb(&app, "decompose", "connected components and slant parts",
       [&] { return do_decompose(file, out); });
  verb(&app, "enumerate", "dominant minuscule heaps over a diagram", [&] {
    return do_enumerate(file, max_size, cap, out);
  })->add_option("--max-size", max_size, "largest heap size")->required()->check(CLI::NonNegativeNumber);

  auto* heap = app.add_subcommand("heap", "periodic full heaps")->require_subcommand(1);
  auto* win = verb(heap, "window", "finite window of the heap", [&] { return do_heap_window(file, lo, hi, out); });
  win->add_option("--lo", lo, "lowest height");
  win->add_option("--hi", hi, "highest height");
  verb(heap, "filter-check", "infinite axioms of a filter (whole heap by default)", [&] {
    return do_filter_check(file, filter_path, out);
  })->add_option("--filter", filter_path, "filter document");
  auto* sat = verb(heap, "saturate", "extend a filter downward until periodic", [&] {
    return do_saturate(file, filter_path, steps, out);
  });
  sat->add_option("--filter", filter_path, "filter document");
  sat->add_option("--steps", steps, "step budget (default 4 x cell count)");

  auto* weyl = app.add_subcommand("weyl", "Weyl group words of a heap")->require_subcommand(1);
  verb(weyl, "words", "lambda-minuscule words of every linear extension", [&] { return do_weyl_words(file, cap, out); });
  verb(weyl, "lambda", "dominant weight of a heap", [&] { return do_weyl_lambda(file, out); });

  auto* rep = app.add_subcommand("rep", "split representations")->require_subcommand(1);
  verb(rep, "verify", "build and verify the operators on splits", [&] { return do_rep_verify(file, cap, out); });

  verb(&app, "render", "Graphviz rendering", [&] { return do_render(file, out_path, out); })
      ->add_option("-o", out_path, "output file (stdout when omitted)");

  std::vector<const char*> argv{"heapkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const InputFailure& e) {
    err << "error: " << e.message << '\n';
  } catch (const Error& e) {
    err << "error: " << file << ": " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace heapkit::cli
