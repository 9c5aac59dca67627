#include "graphonlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "graphonlab/errors.hpp"

namespace graphonlab {

using nlohmann::json;

namespace {

json graphon_json(const StepGraphon& w) {
  json j;
  j["masses"] = w.masses();
  json values = json::array();
  for (int i = 0; i < w.block_count(); ++i) {
    json row = json::array();
    for (int jcol = 0; jcol < w.block_count(); ++jcol) row.push_back(w.value(i, jcol));
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  j["graphon"] = w.is_graphon();
  return j;
}

StepGraphon graphon_from(const json& j) {
  if (!j.contains("masses") || !j.contains("values"))
    throw invalid_input("graphon json: requires masses and values");
  std::vector<double> masses = j.at("masses").get<std::vector<double>>();
  const auto& rows = j.at("values");
  const std::size_t k = masses.size();
  if (rows.size() != k) throw invalid_input("graphon json: values must be k x k");
  std::vector<double> values;
  values.reserve(k * k);
  for (const auto& row : rows) {
    if (row.size() != k) throw invalid_input("graphon json: values must be k x k");
    for (const auto& v : row) values.push_back(v.get<double>());
  }
  const bool graphon = j.value("graphon", true);
  return StepGraphon(std::move(masses), std::move(values), graphon);
}

}  // namespace

std::string graphon_to_json(const StepGraphon& w) { return graphon_json(w).dump(); }

std::string colored_graphon_to_json(const ColoredStepGraphon& w) {
  json j = graphon_json(w.base);
  j["colors"] = w.colors;
  return j.dump();
}

StepGraphon graphon_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("graphon json: ") + e.what());
  }
  return graphon_from(j);
}

ColoredStepGraphon colored_graphon_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("graphon json: ") + e.what());
  }
  if (!j.contains("colors")) throw invalid_input("colored graphon json: missing colors");
  return ColoredStepGraphon(graphon_from(j), j.at("colors").get<std::vector<int>>());
}

std::string graph_to_edge_list(const FiniteGraph& g) {
  std::string out = std::to_string(g.vertex_count());
  out.push_back('\n');
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u + 1);
    out.push_back(' ');
    out += std::to_string(v + 1);
    out.push_back('\n');
  }
  return out;
}

std::string colored_graph_to_edge_list(const ColoredGraph& g) {
  std::string out = graph_to_edge_list(g.base);
  for (int v = 0; v < g.base.vertex_count(); ++v) {
    out += "c ";
    out += std::to_string(v + 1);
    out.push_back(' ');
    out += std::to_string(g.colors[v]);
    out.push_back('\n');
  }
  return out;
}

namespace {

struct EdgeListData {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;  // empty when uncolored
};

EdgeListData parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  EdgeListData data;
  bool have_n = false;
  std::vector<std::pair<int, int>> color_lines;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (!have_n) {
      try {
        data.n = std::stoi(first);
      } catch (...) {
        throw invalid_input("edge list: first line must be the vertex count");
      }
      if (data.n < 0) throw invalid_input("edge list: negative vertex count");
      have_n = true;
      continue;
    }
    if (first == "c") {
      int v = 0, color = 0;
      if (!(ls >> v >> color)) throw invalid_input("edge list: malformed color line");
      color_lines.emplace_back(v, color);
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (...) {
      throw invalid_input("edge list: malformed edge line");
    }
    if (!(ls >> v)) throw invalid_input("edge list: malformed edge line");
    if (u < 1 || v < 1 || u > data.n || v > data.n)
      throw invalid_input("edge list: vertex index out of range (1-indexed)");
    data.edges.emplace_back(u - 1, v - 1);
  }
  if (!have_n) throw invalid_input("edge list: empty input");
  if (!color_lines.empty()) {
    data.colors.assign(data.n, 0);
    for (auto [v, color] : color_lines) {
      if (v < 1 || v > data.n) throw invalid_input("edge list: color line vertex out of range");
      data.colors[v - 1] = color;
    }
    for (int c : data.colors)
      if (c < 1) throw invalid_input("edge list: every vertex needs a color line");
  }
  return data;
}

}  // namespace

FiniteGraph graph_from_edge_list(const std::string& text) {
  EdgeListData data = parse_edge_list(text);
  return FiniteGraph(data.n, std::move(data.edges));
}

ColoredGraph colored_graph_from_edge_list(const std::string& text) {
  EdgeListData data = parse_edge_list(text);
  if (data.colors.empty()) throw invalid_input("edge list: no color lines present");
  return ColoredGraph(FiniteGraph(data.n, std::move(data.edges)), std::move(data.colors));
}

std::string regions_to_json(const RegionSet& regions) {
  json j;
  json boxes = json::array();
  for (const auto& r : regions.regions) {
    json box;
    json lo = json::array(), hi = json::array();
    for (double v : r.lo) {
      if (std::isinf(v)) lo.push_back(nullptr);
      else lo.push_back(v);
    }
    for (double v : r.hi) {
      if (std::isinf(v)) hi.push_back(nullptr);
      else hi.push_back(v);
    }
    box["lo"] = std::move(lo);
    box["hi"] = std::move(hi);
    boxes.push_back(std::move(box));
  }
  j["regions"] = std::move(boxes);
  if (regions.d_min) j["d_min"] = *regions.d_min;
  j["coverage_tolerance"] = regions.coverage_tolerance;
  return j.dump();
}

RegionSet regions_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("region json: ") + e.what());
  }
  const json& boxes = j.is_array() ? j : j.at("regions");
  std::vector<RegionBox> out;
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& box : boxes) {
    RegionBox r;
    for (const auto& v : box.at("lo")) r.lo.push_back(v.is_null() ? -inf : v.get<double>());
    for (const auto& v : box.at("hi")) r.hi.push_back(v.is_null() ? inf : v.get<double>());
    out.push_back(std::move(r));
  }
  std::optional<double> d_min;
  double cover = kDefaultCoverTol;
  if (j.is_object()) {
    if (j.contains("d_min")) d_min = j.at("d_min").get<double>();
    if (j.contains("coverage_tolerance")) cover = j.at("coverage_tolerance").get<double>();
  }
  return RegionSet(std::move(out), d_min, cover);
}

namespace {

std::vector<double> parse_numbers(const std::string& args, const std::string& what) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(args);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (...) {
      throw invalid_input(what + ": bad numeric parameter '" + token + "'");
    }
  }
  return out;
}

StepGraphon planted_partition(int k, double pin, double pout, std::vector<double> masses) {
  if (k < 1) throw invalid_input("planted: k must be >= 1");
  if (masses.empty()) masses.assign(k, 1.0 / k);
  if (static_cast<int>(masses.size()) != k)
    throw invalid_input("planted: mass list must have k entries");
  std::vector<double> values(static_cast<std::size_t>(k) * k, pout);
  for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i) * k + i] = pin;
  return StepGraphon(std::move(masses), std::move(values), true);
}

StepGraphon rank_one(double a, double b, int k) {
  if (k < 1) throw invalid_input("rank1: k must be >= 1");
  std::vector<double> g(k);
  for (int i = 0; i < k; ++i) g[i] = a + (b - a) * (i + 0.5) / k;
  std::vector<double> masses(k, 1.0 / k);
  std::vector<double> values(static_cast<std::size_t>(k) * k);
  bool unit = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      values[static_cast<std::size_t>(i) * k + j] = g[i] * g[j];
      if (!(values[static_cast<std::size_t>(i) * k + j] >= 0.0 &&
            values[static_cast<std::size_t>(i) * k + j] <= 1.0))
        unit = false;
    }
  return StepGraphon(std::move(masses), std::move(values), unit);
}

StepGraphon block_diagonal(int m) {
  if (m < 1) throw invalid_input("blockdiag: m must be >= 1");
  std::vector<double> masses(m, 1.0 / m);
  std::vector<double> values(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i) * m + i] = 1.0;
  return StepGraphon(std::move(masses), std::move(values), true);
}

}  // namespace

StepGraphon graphon_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw invalid_input("graphon spec: expected NAME:ARGS, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);

  if (name == "const") {
    const auto nums = parse_numbers(args, "const");
    if (nums.size() != 1) throw invalid_input("const: expected const:p");
    return StepGraphon::constant(nums[0]);
  }
  if (name == "planted") {
    const auto nums = parse_numbers(args, "planted");
    if (nums.size() < 3) throw invalid_input("planted: expected planted:k,pin,pout[,masses]");
    const int k = static_cast<int>(nums[0]);
    std::vector<double> masses(nums.begin() + 3, nums.end());
    return planted_partition(k, nums[1], nums[2], std::move(masses));
  }
  if (name == "rank1") {
    const auto nums = parse_numbers(args, "rank1");
    if (nums.size() != 2 && nums.size() != 3)
      throw invalid_input("rank1: expected rank1:a,b[,k]");
    const int k = nums.size() == 3 ? static_cast<int>(nums[2]) : 64;
    return rank_one(nums[0], nums[1], k);
  }
  if (name == "blockdiag") {
    const auto nums = parse_numbers(args, "blockdiag");
    if (nums.size() != 1) throw invalid_input("blockdiag: expected blockdiag:m");
    return block_diagonal(static_cast<int>(nums[0]));
  }
  if (name == "file") {
    return graphon_from_json(read_file(args));
  }
  throw invalid_input("graphon spec: unknown family '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write file: " + path);
  out << contents;
}

std::string format_double(double v) {
  char buf[64];
  // shortest representation that round-trips
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += header[i];
  }
  out_.push_back('\n');
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw invalid_input("csv: wrong cell count");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += cells[i];
  }
  out_.push_back('\n');
}

}  // namespace graphonlab
