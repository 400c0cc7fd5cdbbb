#include "jp/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace jp {

namespace {

// Significant lines: comments ('#') and blank lines skipped, original line
// numbers preserved for errors.
struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      const auto first = raw.find_first_not_of(" \t");
      if (first == std::string::npos || raw[first] == '#') continue;
      out = raw;
      return true;
    }
    return false;
  }
};

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> ts;
  std::string t;
  while (ss >> t) ts.push_back(t);
  return ts;
}

long long parse_ll(const std::string& t, int line, const std::string& what) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected " + what + ", got '" + t + "'");
  }
}

int parse_vertex(const std::string& t, int line, long long n) {
  const long long v = parse_ll(t, line, "a vertex id");
  if (v < 1 || v > n) throw ParseError(line, "vertex id out of range: " + t);
  return static_cast<int>(v - 1);
}

}  // namespace

Hypergraph3 read_hypergraph(std::istream& in) {
  LineReader lr{in};
  std::string s;
  if (!lr.next(s)) throw ParseError(lr.line_no, "missing header");
  auto ts = tokens(s);
  if (ts.size() != 4 || ts[0] != "p" || ts[1] != "h3")
    throw ParseError(lr.line_no, "expected header 'p h3 <n> <m>'");
  const long long n = parse_ll(ts[2], lr.line_no, "a vertex count");
  const long long m = parse_ll(ts[3], lr.line_no, "an edge count");
  if (n < 0 || m < 0) throw ParseError(lr.line_no, "negative count in header");

  std::vector<std::array<int, 3>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!lr.next(s)) throw ParseError(lr.line_no, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    ts = tokens(s);
    if (ts.size() != 3) throw ParseError(lr.line_no, "expected 'u v w'");
    std::array<int, 3> e;
    for (int j = 0; j < 3; ++j) e[static_cast<size_t>(j)] = parse_vertex(ts[static_cast<size_t>(j)], lr.line_no, n);
    edges.push_back(e);
  }
  if (lr.next(s)) throw ParseError(lr.line_no, "trailing content after the last edge");
  try {
    return Hypergraph3(static_cast<int>(n), std::move(edges));
  } catch (const std::exception& ex) {
    throw ParseError(lr.line_no, ex.what());
  }
}

void write_hypergraph(std::ostream& out, const Hypergraph3& g) {
  out << "p h3 " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e[0] + 1 << ' ' << e[1] + 1 << ' ' << e[2] + 1 << '\n';
}

SpecialMultigraph read_special_multigraph(std::istream& in) {
  LineReader lr{in};
  std::string s;
  if (!lr.next(s)) throw ParseError(lr.line_no, "missing header");
  auto ts = tokens(s);
  if (ts.size() != 5 || ts[0] != "p" || ts[1] != "smg")
    throw ParseError(lr.line_no, "expected header 'p smg <n> <m> <k>'");
  const long long n = parse_ll(ts[2], lr.line_no, "a vertex count");
  const long long m = parse_ll(ts[3], lr.line_no, "an edge multiplicity total");
  const long long k = parse_ll(ts[4], lr.line_no, "a special count");
  if (n < 0 || m < 0 || k < 0) throw ParseError(lr.line_no, "negative count in header");

  std::vector<PairEdge> pairs;
  std::vector<int> specials;
  long long mult_total = 0;
  while (lr.next(s)) {
    ts = tokens(s);
    if (ts[0] == "s") {
      if (ts.size() != 2) throw ParseError(lr.line_no, "expected 's <v>'");
      specials.push_back(parse_vertex(ts[1], lr.line_no, n));
    } else if (ts[0] == "e") {
      if (ts.size() != 4) throw ParseError(lr.line_no, "expected 'e <u> <v> <mult>'");
      PairEdge p;
      p.u = parse_vertex(ts[1], lr.line_no, n);
      p.v = parse_vertex(ts[2], lr.line_no, n);
      p.multiplicity = parse_ll(ts[3], lr.line_no, "a multiplicity");
      if (p.multiplicity < 1) throw ParseError(lr.line_no, "multiplicity must be positive");
      pairs.push_back(p);
      mult_total += p.multiplicity;
    } else {
      throw ParseError(lr.line_no, "expected an 's' or 'e' line");
    }
  }
  if (mult_total != m)
    throw ParseError(lr.line_no, "edge multiplicities sum to " + std::to_string(mult_total) +
                                     ", header says " + std::to_string(m));
  if (static_cast<long long>(specials.size()) != k)
    throw ParseError(lr.line_no, "found " + std::to_string(specials.size()) +
                                     " special vertices, header says " + std::to_string(k));
  try {
    return SpecialMultigraph(static_cast<int>(n), std::move(pairs), std::move(specials));
  } catch (const std::exception& ex) {
    throw ParseError(lr.line_no, ex.what());
  }
}

void write_special_multigraph(std::ostream& out, const SpecialMultigraph& sm) {
  out << "p smg " << sm.num_vertices() << ' ' << sm.num_edges() << ' ' << sm.num_specials()
      << '\n';
  for (int v : sm.specials()) out << "s " << v + 1 << '\n';
  for (const auto& p : sm.pairs())
    out << "e " << p.u + 1 << ' ' << p.v + 1 << ' ' << p.multiplicity << '\n';
}

InstanceKind detect_instance_kind(std::istream& in) {
  const auto pos = in.tellg();
  LineReader lr{in};
  std::string s;
  if (!lr.next(s)) throw ParseError(lr.line_no, "missing header");
  const auto ts = tokens(s);
  in.clear();
  in.seekg(pos);
  if (ts.size() >= 2 && ts[0] == "p" && ts[1] == "h3") return InstanceKind::hypergraph;
  if (ts.size() >= 2 && ts[0] == "p" && ts[1] == "smg") return InstanceKind::special_multigraph;
  throw ParseError(lr.line_no, "unrecognized header '" + s + "'");
}

std::string partition_json(const PartitionDoc& doc) {
  nlohmann::ordered_json j;
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& part : doc.parts) {
    std::vector<long long> ids;
    for (int v : part) ids.push_back(v + 1);
    std::sort(ids.begin(), ids.end());
    j["parts"].push_back(ids);
  }
  j["degrees"] = doc.degrees;
  j["m"] = doc.m;
  j["threshold"] = {{"num", doc.threshold_num}, {"den", doc.threshold_den}};
  j["meets_bound"] = doc.meets_bound;
  j["method"] = doc.method;
  return j.dump(2) + "\n";
}

PartitionDoc parse_partition_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("invalid JSON: ") + ex.what());
  }
  PartitionDoc doc;
  if (!j.contains("parts") || !j["parts"].is_array())
    throw ParseError(0, "missing 'parts' array");
  for (const auto& part : j["parts"]) {
    if (!part.is_array()) throw ParseError(0, "each part must be an array of vertex ids");
    std::vector<int> ids;
    for (const auto& v : part) {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ParseError(0, "vertex ids must be positive integers");
      ids.push_back(static_cast<int>(v.get<long long>() - 1));
    }
    doc.parts.push_back(std::move(ids));
  }
  try {
    if (j.contains("degrees")) doc.degrees = j["degrees"].get<std::vector<long long>>();
    if (j.contains("m")) doc.m = j["m"].get<long long>();
    if (j.contains("threshold")) {
      doc.threshold_num = j["threshold"].value("num", 0LL);
      doc.threshold_den = j["threshold"].value("den", 1LL);
    }
    if (j.contains("meets_bound")) doc.meets_bound = j["meets_bound"].get<bool>();
    if (j.contains("method")) doc.method = j["method"].get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("malformed field: ") + ex.what());
  }
  return doc;
}

}  // namespace jp
