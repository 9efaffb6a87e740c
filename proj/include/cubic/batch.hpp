#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "cubic/serialize.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// JSONL batch pipeline: one result row per graph, resumable by canonical
// code, rows always written in input order so reruns are byte-identical.

struct BatchTasks {
  bool classify = true;
  bool decompose = false;
  bool verify = false;
};

struct BatchOptions {
  uint64_t budget = 1'000'000;
  int threads = 0;                        // 0: worker_count()
  std::atomic<bool>* interrupt = nullptr;  // checked between chunks
  size_t chunk = 64;
};

struct BatchSummary {
  size_t total = 0;
  size_t computed = 0;
  size_t reused = 0;
  size_t genes = 0;
  size_t descendants = 0;
  std::vector<std::string> mutants;       // canonical codes
  std::vector<std::string> violations;    // conjecture counterexamples
  std::vector<std::string> inconclusive;  // budget ran out
  bool interrupted = false;
  double wall_seconds = 0;
};

inline Json result_row(const CubicGraph& g, const BatchTasks& tasks,
                       uint64_t budget = 1'000'000) {
  CubicGraph canon = canonical_relabel(g);
  Json j;
  j["g6"] = to_graph6(canon);
  j["n"] = canon.n();
  Classification c = classify(canon);
  j["kind"] = c.kind == Kind::Gene ? "gene" : "descendant";
  j["cyc"] = c.cyclic_connectivity ? Json(*c.cyclic_connectivity) : Json(nullptr);
  j["girth"] = c.girth;
  j["ham"] = c.hamiltonian;
  j["mutant"] = c.mutant;
  j["snark"] = c.snark_mutant ? Json(*c.snark_mutant) : Json(nullptr);
  j["genes"] = tasks.decompose ? to_json(ancestor_genes(canon)) : Json(nullptr);
  if (tasks.verify) {
    ConjectureEvidence ev = verify_conjecture(canon, budget);
    j["conjecture"] =
        !ev.exhaustive ? "inconclusive" : (ev.unique ? "unique" : "violated");
  } else {
    j["conjecture"] = nullptr;
  }
  return j;
}

namespace detail {

inline void batch_tally(const std::string& line, BatchSummary& s) {
  Json j = Json::parse(line);
  if (j.at("kind").get<std::string>() == "gene")
    ++s.genes;
  else
    ++s.descendants;
  if (j.at("mutant").get<bool>()) s.mutants.push_back(j.at("g6"));
  const Json& conj = j.at("conjecture");
  if (conj.is_string()) {
    if (conj == "violated") s.violations.push_back(j.at("g6"));
    if (conj == "inconclusive") s.inconclusive.push_back(j.at("g6"));
  }
}

}  // namespace detail

inline BatchSummary batch_run(const std::vector<CubicGraph>& source,
                              const BatchTasks& tasks, const std::string& out_path,
                              const BatchOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  BatchSummary summary;
  summary.total = source.size();

  // Existing rows, keyed by canonical code.  A torn trailing line (crashed
  // writer) is dropped.
  std::map<std::string, std::string> existing;
  std::vector<std::string> existing_order;
  if (std::ifstream in(out_path); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        Json j = Json::parse(line);
        existing.emplace(j.at("g6").get<std::string>(), line);
        existing_order.push_back(line);
      } catch (...) {
        break;
      }
    }
  }

  auto codes = parallel_map<std::string>(
      source.size(),
      [&](size_t i) { return canonical_form(source[i]).code; }, opt.threads);

  std::vector<std::string> lines(source.size());
  std::vector<char> ready(source.size(), 0);
  for (size_t i = 0; i < source.size(); ++i) {
    auto it = existing.find(codes[i]);
    if (it != existing.end()) {
      lines[i] = it->second;
      ready[i] = 1;
      ++summary.reused;
    }
  }

  // Appending preserves byte-identity only if what is on disk is exactly the
  // desired prefix; otherwise the file is rebuilt atomically.
  bool append_ok = existing_order.size() <= source.size();
  for (size_t i = 0; append_ok && i < existing_order.size(); ++i)
    append_ok = ready[i] && lines[i] == existing_order[i];

  size_t done = 0;  // rows finalized in order
  std::ofstream out;
  std::filesystem::path tmp_path = out_path + ".tmp";
  if (append_ok) {
    out.open(out_path, std::ios::app);
    done = existing_order.size();
  } else {
    out.open(tmp_path, std::ios::trunc);
  }
  if (!out) fail(Err::IoError, "cannot open output " + out_path);

  auto flush_through = [&](size_t end) {
    for (; done < end; ++done) {
      out << lines[done] << '\n';
      out.flush();
    }
  };
  if (!append_ok) flush_through(0);

  size_t pos = 0;
  while (pos < source.size()) {
    if (opt.interrupt && opt.interrupt->load()) {
      summary.interrupted = true;
      break;
    }
    size_t end = std::min(source.size(), pos + opt.chunk);
    std::vector<size_t> todo;
    for (size_t i = pos; i < end; ++i)
      if (!ready[i]) todo.push_back(i);
    auto rows = parallel_map<std::string>(
        todo.size(),
        [&](size_t k) {
          size_t i = todo[k];
          // Reuse an identical graph computed earlier in this run.
          for (size_t p = 0; p < i; ++p)
            if (ready[p] && codes[p] == codes[i]) return lines[p];
          return result_row(source[i], tasks, opt.budget).dump();
        },
        opt.threads);
    for (size_t k = 0; k < todo.size(); ++k) {
      lines[todo[k]] = rows[k];
      ready[todo[k]] = 1;
      ++summary.computed;
    }
    flush_through(end);
    pos = end;
  }
  out.close();
  if (!append_ok) {
    std::filesystem::rename(tmp_path, out_path);
  }

  for (size_t i = 0; i < done; ++i) detail::batch_tally(lines[i], summary);
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

}  // namespace cubic
