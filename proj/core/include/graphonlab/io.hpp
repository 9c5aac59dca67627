#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphonlab/clustering.hpp"
#include "graphonlab/colored.hpp"
#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// JSON graphon: {"masses":[...], "values":[[...]], "graphon": true|false},
// optional "colors":[...] for the colored variant.
std::string graphon_to_json(const StepGraphon& w);
std::string colored_graphon_to_json(const ColoredStepGraphon& w);
StepGraphon graphon_from_json(const std::string& text);
ColoredStepGraphon colored_graphon_from_json(const std::string& text);

// Edge list: first line "n", then one "u v" pair per line (1-indexed);
// colored files add one "c v color" line per vertex.
std::string graph_to_edge_list(const FiniteGraph& g);
std::string colored_graph_to_edge_list(const ColoredGraph& g);
FiniteGraph graph_from_edge_list(const std::string& text);
ColoredGraph colored_graph_from_edge_list(const std::string& text);

// Region JSON: either a bare list of {"lo":[...],"hi":[...]} boxes (null for
// unbounded sides) or an object {"regions":[...], "d_min":..,
// "coverage_tolerance":..}.
std::string regions_to_json(const RegionSet& regions);
RegionSet regions_from_json(const std::string& text);

// Named built-in graphon families:
//   const:p
//   planted:k,pin,pout[,m1,...,mk]   (equal masses unless given)
//   rank1:a,b[,k]                    (g linear from a to b on k blocks, default 64)
//   blockdiag:m                      (identity-like union of m diagonal cells)
//   file:PATH                        (JSON graphon)
StepGraphon graphon_from_spec(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Locale-independent shortest round-trip formatting, shared by every writer
// so identical runs emit identical bytes.
std::string format_double(double v);

struct CsvWriter {
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

}  // namespace graphonlab
