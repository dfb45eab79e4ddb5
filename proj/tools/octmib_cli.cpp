// Command-line surface: enumerate maximal induced bicliques, generate random
// near-bipartite instances, and run the benchmark harness.

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mib/bipartite.hpp"
#include "mib/generator.hpp"
#include "mib/io.hpp"
#include "mib/lexmib.hpp"
#include "mib/mcb.hpp"
#include "mib/octmib.hpp"
#include "mib/oracle.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct EnumerateArgs {
  std::string graph_path;
  std::string algorithm;
  std::string oct_path;
  bool oct_heuristic = false;
  std::string indep_path;
  std::string out_path;
  bool count_only = false;
  bool stats = false;
};

std::vector<mib::Biclique> run_algorithm(const mib::Graph& g,
                                         const EnumerateArgs& args,
                                         int* n_o_out) {
  using namespace mib;
  *n_o_out = 0;
  if (args.algorithm == "octmib") {
    OctDecomposition d = args.oct_path.empty()
                             ? greedy_oct(g)
                             : decomposition_from_oct(
                                   g, read_vertex_set_file(args.oct_path,
                                                           g.num_vertices()));
    *n_o_out = static_cast<int>(d.o.size());
    return octmib_all(g, d);
  }
  if (args.algorithm == "lexmib") return lexmib_all(g);
  if (args.algorithm == "dias-uncorrected") return dias_uncorrected_all(g);
  if (args.algorithm == "mcb") {
    if (args.indep_path.empty())
      throw CLI::ValidationError("mcb requires --independent-set FILE");
    VertexSet x = read_vertex_set_file(args.indep_path, g.num_vertices());
    return mcb_all(g, x);
  }
  if (args.algorithm == "bipartite") {
    auto lr = two_color(g, {});
    if (!lr) throw std::invalid_argument("graph is not bipartite");
    return all_bipartite_mibs(g, lr->first, lr->second);
  }
  if (args.algorithm == "oracle") return all_mibs(g);
  throw CLI::ValidationError("unknown algorithm: " + args.algorithm);
}

int cmd_enumerate(const EnumerateArgs& args) {
  mib::Graph g;
  try {
    g = mib::read_graph_file(args.graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  auto start = Clock::now();
  std::vector<mib::Biclique> result;
  int n_o = 0;
  try {
    result = run_algorithm(g, args, &n_o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.find("too large") != std::string::npos ? kExitGuard
                                                       : kExitInput;
  }
  double wall = elapsed_ms(start);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << args.out_path << "\n";
      return kExitInput;
    }
    out = &file;
  }
  if (args.stats) {
    nlohmann::json j{{"algorithm", args.algorithm},
                     {"n", g.num_vertices()},
                     {"m", g.num_edges()},
                     {"n_o", n_o},
                     {"mib_count", result.size()},
                     {"wall_ms", wall},
                     {"per_mib_us",
                      result.empty() ? 0.0 : wall * 1000.0 / result.size()}};
    *out << j.dump() << "\n";
  } else if (args.count_only) {
    *out << result.size() << "\n";
  } else {
    for (const auto& c : result) *out << mib::format_biclique(c) << "\n";
  }
  return 0;
}

mib::OctMode parse_oct_mode(const std::string& s) {
  if (s == "random") return mib::OctMode::kRandom;
  if (s == "independent") return mib::OctMode::kIndependent;
  if (s == "perfect-matching") return mib::OctMode::kPerfectMatching;
  throw CLI::ValidationError("unknown oct-mode: " + s);
}

// Runs one algorithm in a forked worker so timeouts can be enforced.
// Returns (mib_count, wall_ms, timed_out).
struct BenchResult {
  long long count = -1;
  double wall_ms = 0.0;
  bool timed_out = false;
};

BenchResult bench_row(const mib::Graph& g, const mib::OctDecomposition& d,
                      const std::string& algorithm, double timeout_s) {
  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    close(fds[0]);
    auto start = Clock::now();
    long long count = -1;
    try {
      if (algorithm == "octmib")
        count = mib::count_mibs(g, d);
      else if (algorithm == "lexmib")
        count = static_cast<long long>(mib::lexmib_all(g).size());
      else if (algorithm == "dias-uncorrected")
        count = static_cast<long long>(mib::dias_uncorrected_all(g).size());
      else if (algorithm == "oracle")
        count = static_cast<long long>(mib::all_mibs(g).size());
      else if (algorithm == "bipartite")
        count = static_cast<long long>(
            mib::all_bipartite_mibs(g, d.l, d.r).size());
    } catch (const std::exception&) {
      count = -1;
    }
    double wall = elapsed_ms(start);
    FILE* out = fdopen(fds[1], "w");
    fprintf(out, "%lld %f\n", count, wall);
    fclose(out);
    _exit(0);
  }
  close(fds[1]);
  BenchResult res;
  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(timeout_s));
  int status = 0;
  bool done = false;
  while (!done) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      done = true;
    } else if (Clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      res.timed_out = true;
      res.wall_ms = timeout_s * 1000.0;
      break;
    } else {
      usleep(2000);
    }
  }
  if (!res.timed_out) {
    FILE* in = fdopen(fds[0], "r");
    long long count;
    double wall;
    if (fscanf(in, "%lld %lf", &count, &wall) == 2) {
      res.count = count;
      res.wall_ms = wall;
    }
    fclose(in);
  } else {
    close(fds[0]);
  }
  return res;
}

int cmd_bench(const std::string& spec_path, const std::string& out_path) {
  nlohmann::json spec;
  try {
    std::ifstream in(spec_path);
    if (!in) throw std::invalid_argument("cannot open " + spec_path);
    in >> spec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  mib::GenParams base;
  auto d = spec.value("defaults", nlohmann::json::object());
  base.n_l = d.value("n_l", 10);
  base.n_r = d.value("n_r", 10);
  base.n_o = d.value("n_o", 0);
  base.d_lr = d.value("d_lr", 0.1);
  base.d_ob = d.value("d_ob", base.d_lr);
  base.d_oo = d.value("d_oo", base.d_lr);
  base.cv_lr = d.value("cv_lr", 0.5);
  base.cv_ob = d.value("cv_ob", 0.5);
  base.oct_mode = parse_oct_mode(d.value("oct_mode", "random"));
  std::vector<std::uint64_t> seeds =
      spec.value("seeds", std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  std::vector<std::string> algorithms =
      spec.value("algorithms", std::vector<std::string>{"octmib", "lexmib"});
  double timeout_s = spec.value("timeout_s", 60.0);

  // sweep axes: cartesian product over the listed parameter values
  auto sweep = spec.value("sweep", nlohmann::json::object());
  std::vector<mib::GenParams> combos{base};
  auto expand = [&](const std::string& key) {
    if (!sweep.contains(key)) return;
    std::vector<mib::GenParams> next;
    for (const auto& val : sweep[key]) {
      for (mib::GenParams p : combos) {
        if (key == "n_o")
          p.n_o = val.get<int>();
        else if (key == "d_lr")
          p.d_lr = val.get<double>();
        else if (key == "d_ob")
          p.d_ob = val.get<double>();
        else if (key == "d_oo")
          p.d_oo = val.get<double>();
        else if (key == "cv_lr")
          p.cv_lr = val.get<double>();
        else if (key == "cv_ob")
          p.cv_ob = val.get<double>();
        else if (key == "oct_mode")
          p.oct_mode = parse_oct_mode(val.get<std::string>());
        next.push_back(p);
      }
    }
    combos = std::move(next);
  };
  for (const char* key :
       {"n_o", "d_lr", "d_ob", "d_oo", "cv_lr", "cv_ob", "oct_mode"})
    expand(key);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitInput;
    }
    out = &file;
  }
  auto mode_name = [](mib::OctMode m) {
    switch (m) {
      case mib::OctMode::kRandom: return "random";
      case mib::OctMode::kIndependent: return "independent";
      default: return "perfect-matching";
    }
  };
  *out << "n_l,n_r,n_o,d_lr,d_ob,d_oo,cv_lr,cv_ob,oct_mode,seed,algorithm,"
          "mib_count,wall_ms,timed_out\n";
  for (const mib::GenParams& combo : combos) {
    for (std::uint64_t seed : seeds) {
      mib::GenParams p = combo;
      p.seed = seed;
      auto [g, dec] = mib::generate(p);
      for (const std::string& alg : algorithms) {
        BenchResult r = bench_row(g, dec, alg, timeout_s);
        *out << p.n_l << ',' << p.n_r << ',' << p.n_o << ',' << p.d_lr << ','
             << p.d_ob << ',' << p.d_oo << ',' << p.cv_lr << ',' << p.cv_ob
             << ',' << mode_name(p.oct_mode) << ',' << seed << ',' << alg
             << ',' << (r.timed_out ? -1 : r.count) << ',' << r.wall_ms << ','
             << (r.timed_out ? 1 : 0) << "\n";
        out->flush();
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal induced biclique enumeration toolkit"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Enumerate maximal induced bicliques of a graph file");
  enumerate->add_option("graph", en.graph_path, "edge-list graph file")
      ->required();
  enumerate
      ->add_option("-a,--algorithm", en.algorithm,
                   "octmib|lexmib|dias-uncorrected|mcb|bipartite|oracle")
      ->required();
  enumerate->add_option("--oct", en.oct_path, "OCT vertex-set file (octmib)");
  enumerate->add_flag("--oct-heuristic", en.oct_heuristic,
                      "use the greedy OCT heuristic (octmib default)");
  enumerate->add_option("--independent-set", en.indep_path,
                        "designated independent-set file (mcb)");
  enumerate->add_option("-o,--output", en.out_path, "output file");
  enumerate->add_flag("--count", en.count_only, "print only the MIB count");
  enumerate->add_flag("--stats", en.stats, "print a JSON stats object");

  mib::GenParams gp;
  std::string mode_str = "random";
  std::string graph_out, oct_out;
  auto* generate = app.add_subcommand(
      "generate", "Generate a random near-bipartite graph with known OCT");
  generate->add_option("--nl", gp.n_l, "size of L")->required();
  generate->add_option("--nr", gp.n_r, "size of R")->required();
  generate->add_option("--no", gp.n_o, "size of O");
  generate->add_option("--dlr", gp.d_lr, "expected L-R density");
  generate->add_option("--dob", gp.d_ob, "expected O-(L u R) density");
  generate->add_option("--doo", gp.d_oo, "expected O-O density");
  generate->add_option("--cv", gp.cv_lr, "cv of L-R degrees");
  generate->add_option("--cv-ob", gp.cv_ob, "cv of O-(L u R) degrees");
  generate->add_option("--oct-mode", mode_str,
                       "random|independent|perfect-matching");
  generate->add_option("--seed", gp.seed, "RNG seed");
  generate->add_flag("--prune-isolates", gp.prune_isolates,
                     "drop isolated vertices");
  generate->add_option("--out", graph_out, "graph output file")->required();
  generate->add_option("--oct-out", oct_out, "OCT vertex-set output file");

  std::string bench_spec, bench_out;
  auto* bench =
      app.add_subcommand("bench", "Run a benchmark corpus, reporting CSV");
  bench->add_option("--spec", bench_spec, "JSON corpus spec")->required();
  bench->add_option("--out", bench_out, "CSV output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(en);
    if (generate->parsed()) {
      gp.oct_mode = parse_oct_mode(mode_str);
      auto [g, d] = mib::generate(gp);
      mib::write_graph_file(graph_out, g);
      if (!oct_out.empty()) mib::write_vertex_set_file(oct_out, d.o);
      return 0;
    }
    if (bench->parsed()) return cmd_bench(bench_spec, bench_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
