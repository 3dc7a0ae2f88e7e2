#pragma once

#include <string>

#include "json.hpp"

#include "heapkit/axioms.hpp"
#include "heapkit/dynkin.hpp"
#include "heapkit/heap_periodic.hpp"
#include "heapkit/poset.hpp"
#include "heapkit/rep.hpp"
#include "heapkit/weyl.hpp"

namespace heapkit::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; failures throw InputError naming the file.
Json load_file(const std::string& path);

// Readers throw InputError with a JSON pointer to the offending value;
// `at` is the pointer of `j` itself.
DynkinDiagram read_diagram(const Json& j, const std::string& at = "");
ColoredPoset read_poset(const Json& j, const std::string& at = "");
PeriodicHeap read_heap(const Json& j, const std::string& at = "");
/// `{"generators": [[cell, height], ...]}` or `{"whole": true}`.
SemiInfiniteFilter read_filter(const Json& j, const PeriodicHeap& heap, const std::string& at = "");

Json to_json(const DynkinDiagram& d);
Json to_json(const ColoredPoset& p);
Json to_json(const PeriodicHeap& h);
Json to_json(const SemiInfiniteFilter& f);
Json to_json(const CheckReport& r, const DynkinDiagram& d);
Json to_json(const Classification& c, const DynkinDiagram& d);
Json to_json(const InfiniteReport& r, const DynkinDiagram& d);
Json to_json(const RepCertificate& c, const DynkinDiagram& d);
Json word_json(const WeylWord& w, const DynkinDiagram& d);
Json weight_json(const Weight& w, const DynkinDiagram& d);

/// Graphviz DOT: node label "id:color", edges from covered to covering element.
std::string to_dot(const ColoredPoset& p);

}  // namespace heapkit::io
