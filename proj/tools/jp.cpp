#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jp/generators.hpp"
#include "jp/io.hpp"
#include "jp/oracle.hpp"
#include "jp/pipeline.hpp"
#include "jp/rng.hpp"
#include "jp/special_bipartition.hpp"

namespace {

constexpr int kExitBoundNotMet = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::uint64_t seed = 0;
  int restarts = 24;
  long long exact_cap = 10'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (64-bit)")->capture_default_str();
  cmd->add_option("--restarts", o.restarts, "maximum local-search restarts")
      ->envname("JP_RESTARTS")
      ->capture_default_str();
  cmd->add_option("--exact-cap", o.exact_cap, "assignment budget for exact searches")
      ->envname("JP_EXACT_CAP")
      ->capture_default_str();
  cmd->set_config("--config", "", "read options from a key=value file");
}

jp::SearchConfig to_config(const CommonOpts& o) {
  jp::SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.max_restarts = o.restarts;
  cfg.exact_cap = o.exact_cap;
  return cfg;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw jp::ParseError(0, "cannot open '" + path + "'");
  return in;
}

jp::Hypergraph3 load_hypergraph(const std::string& path) {
  auto in = open_input(path);
  if (jp::detect_instance_kind(in) != jp::InstanceKind::hypergraph)
    throw jp::ParseError(1, "'" + path + "' is not a hypergraph instance");
  return jp::read_hypergraph(in);
}

std::pair<long long, long long> parse_epsilon(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw jp::ParseError(0, "epsilon must be written as p/q");
  try {
    const long long p = std::stoll(s.substr(0, slash));
    const long long q = std::stoll(s.substr(slash + 1));
    if (p < 1 || q < 1) throw std::invalid_argument("");
    return {p, q};
  } catch (const std::exception&) {
    throw jp::ParseError(0, "epsilon must be written as p/q with positive integers");
  }
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw jp::ParseError(0, "cannot write '" + out_path + "'");
  out << text;
}

int cmd_partition(const std::string& file, const CommonOpts& opts, const std::string& eps,
                  const std::string& out_path) {
  const auto g = load_hypergraph(file);
  const auto [p, q] = parse_epsilon(eps);
  const auto outcome = jp::solve(g, to_config(opts), p, q);

  jp::PartitionDoc doc;
  for (jp::Part part : jp::all_parts) doc.parts.push_back(outcome.partition.part_vertices(part));
  doc.degrees.assign(outcome.certificate.part_degrees.begin(),
                     outcome.certificate.part_degrees.end());
  doc.m = outcome.certificate.m;
  doc.threshold_num = outcome.certificate.threshold_num;
  doc.threshold_den = outcome.certificate.threshold_den;
  doc.meets_bound = outcome.certificate.meets_bound;
  doc.method = outcome.method;
  write_text(out_path, jp::partition_json(doc));
  if (!outcome.warning.empty()) std::cerr << "warning: " << outcome.warning << "\n";
  return outcome.certificate.meets_bound ? 0 : kExitBoundNotMet;
}

int cmd_verify(const std::string& file, const std::string& partition_path) {
  const auto g = load_hypergraph(file);
  std::string text;
  {
    auto in = open_input(partition_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const jp::PartitionDoc doc = jp::parse_partition_json(text);
  if (doc.parts.size() < 2 || doc.parts.size() > 3)
    throw jp::ParseError(0, "expected two or three parts, got " + std::to_string(doc.parts.size()));

  const int n = g.num_vertices();
  jp::Tripartition p;
  p.label.assign(static_cast<size_t>(n), jp::Part::A);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < doc.parts.size(); ++i) {
    for (int v : doc.parts[i]) {
      if (v < 0 || v >= n) throw jp::ParseError(0, "vertex id out of range: " + std::to_string(v + 1));
      if (seen[static_cast<size_t>(v)])
        throw jp::ParseError(0, "parts overlap at vertex " + std::to_string(v + 1));
      seen[static_cast<size_t>(v)] = 1;
      p.label[static_cast<size_t>(v)] = static_cast<jp::Part>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw jp::ParseError(0, "parts do not cover vertex " + std::to_string(v + 1));

  const jp::Certificate cert = jp::verify_good(g, p);
  jp::PartitionDoc out;
  out.parts = doc.parts;
  out.degrees.assign(cert.part_degrees.begin(), cert.part_degrees.end());
  out.m = cert.m;
  out.threshold_num = cert.threshold_num;
  out.threshold_den = cert.threshold_den;
  out.meets_bound = cert.meets_bound;
  out.method = "verify";
  std::cout << jp::partition_json(out);
  return cert.meets_bound ? 0 : kExitBoundNotMet;
}

int cmd_oracle(const std::string& file, std::string mode, const CommonOpts& opts,
               const std::string& out_path) {
  auto in = open_input(file);
  const auto kind = jp::detect_instance_kind(in);
  if (mode.empty()) mode = kind == jp::InstanceKind::hypergraph ? "tri" : "bi";

  nlohmann::ordered_json j;
  if (mode == "tri") {
    if (kind != jp::InstanceKind::hypergraph)
      throw jp::ParseError(1, "mode 'tri' needs a hypergraph instance");
    const auto g = jp::read_hypergraph(in);
    const auto [p, best] = jp::best_tripartition(g, opts.exact_cap);
    j["instance"] = file;
    j["mode"] = "tri";
    j["objective"] = best;
    j["m"] = g.num_edges();
    auto parts = nlohmann::ordered_json::array();
    for (jp::Part part : jp::all_parts) {
      std::vector<long long> ids;
      for (int v : p.part_vertices(part)) ids.push_back(v + 1);
      parts.push_back(ids);
    }
    j["witness_parts"] = parts;
  } else if (mode == "bi") {
    if (kind != jp::InstanceKind::special_multigraph)
      throw jp::ParseError(1, "mode 'bi' needs a special multigraph instance");
    const auto sm = jp::read_special_multigraph(in);
    const auto [b, best] = jp::best_bipartition_special(sm, opts.exact_cap);
    j["instance"] = file;
    j["mode"] = "bi";
    j["objective"] = best;
    j["m"] = sm.num_edges();
    j["k"] = sm.num_specials();
    auto sides = nlohmann::ordered_json::array();
    for (int s = 0; s < 2; ++s) {
      std::vector<long long> ids;
      for (int v : b.side_vertices(s)) ids.push_back(v + 1);
      sides.push_back(ids);
    }
    j["witness_parts"] = sides;
  } else {
    throw jp::ParseError(0, "mode must be 'tri' or 'bi'");
  }
  write_text(out_path, j.dump(2) + "\n");
  return 0;
}

int cmd_experiment(const std::string& kind, int n, int m, int count, std::uint64_t seed,
                   const CommonOpts& opts, const std::string& out_path) {
  std::ostringstream csv;
  csv << "n,m,seed,min_degree,threshold_num,threshold_den,ratio_millis,method,restarts_used\n";
  for (int i = 0; i < count; ++i) {
    const std::uint64_t row_seed = jp::mix_seed(seed, static_cast<std::uint64_t>(i));
    jp::Hypergraph3 g;
    if (kind == "random") {
      g = jp::random_hypergraph(n, m, row_seed);
    } else if (kind == "complete") {
      g = jp::complete_hypergraph(n);
    } else {
      throw jp::ParseError(0, "kind must be 'random' or 'complete'");
    }
    auto cfg = to_config(opts);
    cfg.seed = row_seed;
    const auto outcome = jp::solve(g, cfg);
    const auto& d = outcome.certificate.part_degrees;
    const long long mn = std::min({d[0], d[1], d[2]});
    const long long mm = outcome.certificate.m;
    csv << g.num_vertices() << ',' << mm << ',' << row_seed << ',' << mn << ','
        << outcome.certificate.threshold_num << ',' << outcome.certificate.threshold_den << ','
        << (mm > 0 ? mn * 1000 / mm : 0) << ',' << outcome.method << ',' << outcome.restarts_used
        << '\n';
  }
  write_text(out_path, csv.str());
  return 0;
}

int cmd_gen(const std::string& kind, int n, int m, int k, long long maxmult, std::uint64_t seed,
            const std::string& out_path) {
  std::ostringstream body;
  if (kind == "grid3") {
    jp::write_hypergraph(body, jp::grid3());
  } else if (kind == "tight15") {
    jp::write_hypergraph(body, jp::tight15());
  } else if (kind == "complete") {
    jp::write_hypergraph(body, jp::complete_hypergraph(n));
  } else if (kind == "random") {
    jp::write_hypergraph(body, jp::random_hypergraph(n, m, seed));
  } else if (kind == "random-special") {
    jp::write_special_multigraph(body, jp::random_special_multigraph(n, m, k, maxmult, seed));
  } else {
    throw jp::ParseError(0, "unknown generator kind '" + kind + "'");
  }
  write_text(out_path, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"judicious tripartitions of 3-uniform hypergraphs"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file, partition_path, out_path, eps = "1/15", mode, kind = "random";
  int n = 10, m = 20, k = 0, count = 1;
  std::uint64_t gen_seed = 0;
  long long maxmult = 3;

  auto* sc_partition = app.add_subcommand("partition", "tripartition a hypergraph file");
  sc_partition->add_option("file", file, "instance file")->required();
  sc_partition->add_option("--epsilon", eps, "engine threshold offset as p/q")
      ->capture_default_str();
  sc_partition->add_option("--out", out_path, "write the JSON here instead of stdout");
  add_common(sc_partition, opts);

  auto* sc_verify = app.add_subcommand("verify", "recompute a partition certificate");
  sc_verify->add_option("file", file, "instance file")->required();
  sc_verify->add_option("partition", partition_path, "partition JSON file")->required();

  auto* sc_oracle = app.add_subcommand("oracle", "exact brute-force optimum");
  sc_oracle->add_option("file", file, "instance file")->required();
  sc_oracle->add_option("--mode", mode, "tri or bi (default: from the file kind)");
  sc_oracle->add_option("--out", out_path, "write the JSON here instead of stdout");
  add_common(sc_oracle, opts);

  auto* sc_experiment = app.add_subcommand("experiment", "batch solve, CSV per instance");
  sc_experiment->add_option("--kind", kind, "random or complete")->capture_default_str();
  sc_experiment->add_option("--n", n, "vertex count")->capture_default_str();
  sc_experiment->add_option("--m", m, "edge count (random kind)")->capture_default_str();
  sc_experiment->add_option("--count", count, "number of instances")->capture_default_str();
  sc_experiment->add_option("--out", out_path, "write the CSV here instead of stdout");
  add_common(sc_experiment, opts);

  auto* sc_gen = app.add_subcommand("gen", "emit an instance file");
  sc_gen->add_option("kind", kind, "grid3|tight15|complete|random|random-special")->required();
  sc_gen->add_option("--n", n, "vertex count")->capture_default_str();
  sc_gen->add_option("--m", m, "edge count / multiplicity total")->capture_default_str();
  sc_gen->add_option("--k", k, "special vertex count")->capture_default_str();
  sc_gen->add_option("--maxmult", maxmult, "per-pair multiplicity cap")->capture_default_str();
  sc_gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  sc_gen->add_option("--out", out_path, "write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (sc_partition->parsed()) return cmd_partition(file, opts, eps, out_path);
    if (sc_verify->parsed()) return cmd_verify(file, partition_path);
    if (sc_oracle->parsed()) return cmd_oracle(file, mode, opts, out_path);
    if (sc_experiment->parsed())
      return cmd_experiment(kind, n, m, count, opts.seed, opts, out_path);
    if (sc_gen->parsed()) return cmd_gen(kind, n, m, k, maxmult, gen_seed, out_path);
  } catch (const jp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const jp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
