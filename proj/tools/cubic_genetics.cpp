// Command-line front end: classification, cracker listing, breeding,
// decomposition, conjecture verification, enumeration and stats.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <unistd.h>

#include "cubic/batch.hpp"
#include "cubic/corpus.hpp"
#include "cubic/genealogy.hpp"
#include "cubic/serialize.hpp"

namespace {

std::atomic<bool> g_interrupt{false};

void on_sigint(int) { g_interrupt.store(true); }

// Temp-then-rename so a failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) cubic::fail(cubic::Err::IoError, "cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) cubic::fail(cubic::Err::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files may hold graph6 lines or the "n\nu v\n..." edge-list text; the first
// non-comment line disambiguates.
std::vector<cubic::CubicGraph> load_graph_file(const std::string& path) {
  std::string content = read_file(path);
  std::istringstream probe(content);
  std::string line;
  while (std::getline(probe, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    std::string rest;
    bool single = !(fields >> rest);
    bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    if (single && numeric) return {cubic::parse_edge_list_text(content)};
    break;
  }
  std::istringstream in(content);
  auto ingest = cubic::ingest_graph6(in, /*fail_fast=*/true);
  std::vector<cubic::CubicGraph> out;
  for (auto& item : ingest.graphs) out.push_back(std::move(item.graph));
  return out;
}

std::vector<cubic::CubicGraph> load_inputs(const std::string& g6,
                                           const std::string& file) {
  if (!g6.empty() && !file.empty())
    throw CLI::ValidationError("input", "give either --g6 or --file, not both");
  if (!g6.empty()) return {cubic::parse_graph6(g6)};
  if (!file.empty()) return load_graph_file(file);
  throw CLI::ValidationError("input", "one of --g6 or --file is required");
}

bool stdout_is_tty() { return isatty(STDOUT_FILENO) == 1; }

cubic::Edge parse_edge_token(const std::string& tok) {
  auto comma = tok.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--site", "expected \"u,v\" but got \"" + tok + "\"");
  return cubic::Edge(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

void print_row_human(const cubic::Json& row) {
  for (const auto& [key, value] : row.items())
    std::cout << key << ": " << value.dump() << "\n";
}

int run_classify(const std::string& g6, const std::string& file, bool force_json) {
  auto graphs = load_inputs(g6, file);
  bool json = force_json || !stdout_is_tty() || graphs.size() > 1;
  for (const auto& g : graphs) {
    cubic::Json row = cubic::result_row(g, {});
    if (json)
      std::cout << row.dump() << "\n";
    else
      print_row_human(row);
  }
  return 0;
}

int run_crackers(const std::string& g6, const std::string& file, bool all_k) {
  auto graphs = load_inputs(g6, file);
  for (const auto& g : graphs) {
    cubic::Json arr = cubic::Json::array();
    auto emit = [&](const cubic::Cracker& c) { arr.push_back(cubic::to_json(c)); };
    for (const auto& c : cubic::enumerate_cubic_crackers(g)) emit(c);
    if (all_k)
      for (int k = 4; k <= g.n() / 2; ++k)
        for (const auto& c : cubic::enumerate_crackers_of_size(g, k)) emit(c);
    std::cout << cubic::Json{{"g6", cubic::to_graph6(g)}, {"crackers", arr}}.dump()
              << "\n";
  }
  return 0;
}

int run_breed(const std::string& op, const std::string& left,
              const std::string& right, const std::string& site,
              const std::string& pairing_arg) {
  using namespace cubic;
  CubicGraph g1 = parse_graph6(left);
  std::optional<CubicGraph> g2;
  if (!right.empty()) g2 = parse_graph6(right);
  auto need_right = [&]() -> const CubicGraph& {
    if (!g2) throw CLI::ValidationError("--right", "this operation breeds two graphs");
    return *g2;
  };
  auto parts = split(site, ';');
  auto need_parts = [&](size_t k, const char* what) {
    if (parts.size() != k)
      throw CLI::ValidationError("--site", std::string("expected ") + what);
  };

  Json out;
  if (op == "b1" || op == "b2") {
    need_parts(2, "\"a,b;c,d\" (one edge per parent)");
    Edge e1 = parse_edge_token(parts[0]), e2 = parse_edge_token(parts[1]);
    BreedResult r = op == "b1" ? breed1(g1, need_right(), e1, e2)
                               : breed2(g1, need_right(), e1, e2);
    out = {{"child", to_graph6(r.child)}, {"record", to_json(r.rec)}};
  } else if (op == "b3") {
    need_parts(2, "\"v1;v2\"");
    int v1 = std::stoi(parts[0]), v2 = std::stoi(parts[1]);
    std::array<std::array<int, 2>, 3> pairing;
    if (pairing_arg.empty()) {
      auto a = g1.neighbors(v1), b = need_right().neighbors(v2);
      for (int i = 0; i < 3; ++i) pairing[i] = {a[i], b[i]};
    } else {
      auto pairs = split(pairing_arg, ',');
      if (pairs.size() != 3)
        throw CLI::ValidationError("--pairing", "expected \"a:d,b:e,c:f\"");
      for (int i = 0; i < 3; ++i) {
        auto colon = pairs[i].find(':');
        if (colon == std::string::npos)
          throw CLI::ValidationError("--pairing", "expected \"a:d,b:e,c:f\"");
        pairing[i] = {std::stoi(pairs[i].substr(0, colon)),
                      std::stoi(pairs[i].substr(colon + 1))};
      }
    }
    auto r = breed3(g1, need_right(), v1, v2, pairing);
    out = {{"child", to_graph6(r.child)}, {"record", to_json(r.rec)}};
  } else if (op == "p1") {
    need_parts(1, "\"a,b\" (the bridge)");
    auto r = parth1(g1, parse_edge_token(parts[0]));
    out = {{"child", to_graph6(r.child)}, {"record", to_json(r.rec)}};
  } else if (op == "p2") {
    need_parts(2, "\"a,b;c,d\" (the 2-cracker)");
    auto r = parth2(g1, parse_edge_token(parts[0]), parse_edge_token(parts[1]));
    out = {{"child", to_graph6(r.child)}, {"record", to_json(r.rec)}};
  } else if (op == "p3") {
    need_parts(1, "\"a\" (the apex vertex)");
    auto r = parth3(g1, std::stoi(parts[0]));
    out = {{"child", to_graph6(r.child)}, {"record", to_json(r.rec)}};
  } else {
    throw CLI::ValidationError("--op", "unknown operation \"" + op + "\"");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_decompose(const std::string& g6, const std::string& file,
                  const std::string& dot_path, const std::string& json_path) {
  auto graphs = load_inputs(g6, file);
  for (const auto& g : graphs) {
    cubic::FamilyTree tree = cubic::decompose(g);
    if (!dot_path.empty()) write_file_atomic(dot_path, cubic::render_tree_dot(tree));
    if (!json_path.empty())
      write_file_atomic(json_path, cubic::to_json(tree).dump(2) + "\n");
    cubic::GeneMultiset genes = cubic::ancestor_genes(g);
    cubic::Json summary{{"root", cubic::to_graph6(g)},
                        {"nodes", tree.nodes.size()},
                        {"genes", cubic::to_json(genes)}};
    std::cout << summary.dump() << "\n";
  }
  return 0;
}

int run_verify(const std::string& g6, const std::string& file, int sweep_n,
               uint64_t budget, int max_n, const std::string& jsonl) {
  using namespace cubic;
  std::vector<CubicGraph> graphs;
  if (sweep_n > 0) {
    if (!g6.empty() || !file.empty())
      throw CLI::ValidationError("input", "--n excludes --g6/--file");
    for (int n = 4; n <= sweep_n; n += 2) {
      auto batch = enumerate_cubic(n, max_n);
      graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
  } else {
    graphs = load_inputs(g6, file);
  }

  if (!jsonl.empty()) {
    BatchTasks tasks{true, true, true};
    BatchOptions opt;
    opt.budget = budget;
    opt.interrupt = &g_interrupt;
    BatchSummary s = batch_run(graphs, tasks, jsonl, opt);
    Json out{{"total", s.total},      {"computed", s.computed},
             {"reused", s.reused},    {"genes", s.genes},
             {"descendants", s.descendants}, {"mutants", s.mutants},
             {"violations", s.violations},   {"inconclusive", s.inconclusive},
             {"interrupted", s.interrupted}, {"wall_seconds", s.wall_seconds}};
    std::cout << out.dump() << "\n";
    return s.violations.empty() ? 0 : 1;
  }

  auto results = parallel_map<Json>(graphs.size(), [&](size_t i) {
    ConjectureEvidence ev = verify_conjecture(graphs[i], budget);
    return Json{{"g6", canonical_form(graphs[i]).code},
                {"unique", ev.unique},
                {"exhaustive", ev.exhaustive},
                {"pathways", ev.pathways},
                {"states", ev.states_expanded},
                {"multisets", [&] {
                   Json arr = Json::array();
                   for (const auto& m : ev.multisets) arr.push_back(to_json(m));
                   return arr;
                 }()}};
  });
  size_t violations = 0, inconclusive = 0;
  for (const auto& r : results) {
    if (!r.at("exhaustive").get<bool>())
      ++inconclusive;
    else if (!r.at("unique").get<bool>())
      ++violations;
  }
  if (graphs.size() == 1) {
    std::cout << results[0].dump() << "\n";
  } else {
    Json out{{"graphs", graphs.size()},
             {"violations", violations},
             {"inconclusive", inconclusive}};
    std::cout << out.dump() << "\n";
  }
  return violations == 0 ? 0 : 1;
}

int run_stats(int n, const std::string& csv_path, int max_n) {
  cubic::StatsRecord s = cubic::table1_stats(n, max_n);
  std::string text = cubic::stats_csv_header() + "\n" + cubic::to_csv_row(s) + "\n";
  if (!csv_path.empty())
    write_file_atomic(csv_path, text);
  else
    std::cout << text;
  return 0;
}

int run_enumerate(int n, int girth_min, const std::string& out_path, int max_n) {
  auto graphs = cubic::enumerate_cubic(n, max_n, girth_min);
  std::string text;
  for (const auto& g : graphs) text += cubic::to_graph6(g) + "\n";
  if (!out_path.empty())
    write_file_atomic(out_path, text);
  else
    std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);

  CLI::App app{"breeding, decomposition and census tools for connected cubic graphs"};
  app.require_subcommand(1);
  int max_n = cubic::kDefaultEnumerationCeiling;
  app.add_option("--max-n", max_n,
                 "enumeration ceiling guard (default 16; raise explicitly for "
                 "long runs)");

  std::string g6, file;
  bool force_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify one or more graphs");
  classify_cmd->add_option("--g6", g6, "graph6 string");
  classify_cmd->add_option("--file", file, "graph6 lines or edge-list text");
  classify_cmd->add_flag("--json", force_json, "force JSON output");

  bool all_k = false;
  auto* crackers_cmd = app.add_subcommand("crackers", "list crackers");
  crackers_cmd->add_option("--g6", g6, "graph6 string");
  crackers_cmd->add_option("--file", file, "graph6 lines or edge-list text");
  crackers_cmd->add_flag("--all-k", all_k, "include crackers larger than cubic");

  std::string op, left, right, site, pairing;
  auto* breed_cmd = app.add_subcommand("breed", "apply a breeding operation");
  breed_cmd->add_option("--op", op, "b1|b2|b3|p1|p2|p3")->required();
  breed_cmd->add_option("--left", left, "graph6 of the (first) parent")->required();
  breed_cmd->add_option("--right", right, "graph6 of the second parent");
  breed_cmd->add_option("--site", site, "operation site, e.g. \"a,b;c,d\"")->required();
  breed_cmd->add_option("--pairing", pairing, "b3 neighbor pairing \"a:d,b:e,c:f\"");

  std::string dot_path, json_path;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "decompose into ancestor genes");
  decompose_cmd->add_option("--g6", g6, "graph6 string");
  decompose_cmd->add_option("--file", file, "graph6 lines or edge-list text");
  decompose_cmd->add_option("--dot", dot_path, "write the family tree as DOT");
  decompose_cmd->add_option("--json", json_path, "write the family tree as JSON");

  int sweep_n = 0;
  uint64_t budget = 1'000'000;
  std::string jsonl;
  auto* verify_cmd =
      app.add_subcommand("verify", "check the unique-ancestors property");
  verify_cmd->add_option("--g6", g6, "graph6 string");
  verify_cmd->add_option("--file", file, "graph6 lines or edge-list text");
  verify_cmd->add_option("--n", sweep_n, "sweep all graphs with 4..K vertices");
  verify_cmd->add_option("--budget", budget, "state budget per graph");
  verify_cmd->add_option("--jsonl", jsonl, "persist rows to a resumable JSONL file");

  int stats_n = 0;
  std::string csv_path;
  auto* stats_cmd = app.add_subcommand("stats", "non-Hamiltonian distribution row");
  stats_cmd->add_option("--n", stats_n, "vertex count")->required();
  stats_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

  int enum_n = 0, girth_min = 3;
  std::string out_path;
  auto* enum_cmd = app.add_subcommand("enumerate", "list all connected cubic graphs");
  enum_cmd->add_option("--n", enum_n, "vertex count")->required();
  enum_cmd->add_option("--girth-min", girth_min, "keep graphs with girth >= G");
  enum_cmd->add_option("--out", out_path, "write graph6 lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help
  }

  try {
    if (app.got_subcommand(classify_cmd)) return run_classify(g6, file, force_json);
    if (app.got_subcommand(crackers_cmd)) return run_crackers(g6, file, all_k);
    if (app.got_subcommand(breed_cmd)) return run_breed(op, left, right, site, pairing);
    if (app.got_subcommand(decompose_cmd))
      return run_decompose(g6, file, dot_path, json_path);
    if (app.got_subcommand(verify_cmd))
      return run_verify(g6, file, sweep_n, budget, max_n, jsonl);
    if (app.got_subcommand(stats_cmd)) return run_stats(stats_n, csv_path, max_n);
    if (app.got_subcommand(enum_cmd))
      return run_enumerate(enum_n, girth_min, out_path, max_n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cubic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
