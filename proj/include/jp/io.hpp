#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "jp/hypergraph.hpp"

namespace jp {

struct ParseError : std::runtime_error {
  int line;  // 0 when the error is not tied to an input line
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// Hypergraph file: header "p h3 <n> <m>", then m lines "u v w" with 1-based
// vertex ids; '#' starts a comment line, blank lines are skipped.
Hypergraph3 read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph3& g);

// Special multigraph file: header "p smg <n> <m> <k>", k lines "s <v>", then
// "e <u> <v> <mult>" lines whose multiplicities sum to m.
SpecialMultigraph read_special_multigraph(std::istream& in);
void write_special_multigraph(std::ostream& out, const SpecialMultigraph& sm);

enum class InstanceKind { hypergraph, special_multigraph };
// Peek at the header line to decide which reader applies.
InstanceKind detect_instance_kind(std::istream& in);

// Partition report exchanged by the command-line tools. Vertex ids are
// 1-based in the JSON, 0-based here.
struct PartitionDoc {
  std::vector<std::vector<int>> parts;
  std::vector<long long> degrees;
  long long m = 0;
  long long threshold_num = 0;
  long long threshold_den = 1;
  bool meets_bound = false;
  std::string method;
};

std::string partition_json(const PartitionDoc& doc);
// Only "parts" is required on input; everything else is recomputed anyway.
PartitionDoc parse_partition_json(const std::string& text);

}  // namespace jp
