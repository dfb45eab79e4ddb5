// Acceptance gate: one pass/fail line per criterion. Exit 0 iff every
// requested criterion passes. Usage: acceptance [criterion ...]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mib/bipartite.hpp"
#include "mib/generator.hpp"
#include "mib/io.hpp"
#include "mib/lexmib.hpp"
#include "mib/mcb.hpp"
#include "mib/octmib.hpp"
#include "mib/oracle.hpp"

using namespace mib;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Shared corpus for criteria 2, 4 and 8: 210 random graphs, n in [6,14],
// densities 0.1 .. 0.6, plus the named tiny graphs.
std::vector<Graph> correctness_corpus() {
  std::vector<Graph> out;
  for (std::uint64_t s = 0; s < 210; ++s) {
    int n = 6 + static_cast<int>(s % 9);
    double d = 0.1 + 0.1 * static_cast<double>(s % 6);
    out.push_back(test::er_graph(n, d, 40000 + s));
  }
  out.push_back(test::complete(3));
  out.push_back(test::cycle(4));
  out.push_back(test::cycle(5));
  out.push_back(test::path(3));
  out.push_back(test::figure_graph());
  return out;
}

std::string dump(const std::vector<Biclique>& v) {
  std::ostringstream out;
  for (const Biclique& c : v) out << format_biclique(c) << "\n";
  return out.str();
}

Check criterion1() {
  Check c;
  int done = 0;
  for (std::uint64_t s = 0; done < 100; ++s) {
    int n = 4 + static_cast<int>(s % 7);
    double d = 0.2 * (1 + s % 3);
    Graph g = test::er_graph(n, d, 1000 + s);
    if (all_mibs(g) != all_mibs_naive(g)) {
      c.fail("oracles disagree on seed " + std::to_string(1000 + s));
      break;
    }
    ++done;
  }
  return c;
}

Check criterion2() {
  Check c;
  int i = 0;
  for (const Graph& g : correctness_corpus()) {
    if (test::sorted(octmib_all(g, greedy_oct(g))) != all_mibs(g)) {
      c.fail("octmib != oracle on corpus graph " + std::to_string(i));
      break;
    }
    ++i;
  }
  return c;
}

Check criterion3() {
  Check c;
  for (std::uint64_t s = 0; s < 200; ++s) {
    int n = 6 + static_cast<int>(s % 9);
    Graph g = test::er_graph(n, 0.15 + 0.05 * (s % 8), 2000 + s);
    VertexSet x = test::random_mis(g, s);
    if (test::sorted(mcb_all(g, x)) != crossing_oracle(g, x)) {
      c.fail("mcb != crossing oracle on seed " + std::to_string(2000 + s));
      break;
    }
  }
  return c;
}

Check criterion4() {
  Check c;
  int i = 0;
  for (const Graph& g : correctness_corpus()) {
    auto seq = lexmib_all(g);
    if (test::sorted(seq) != all_mibs(g)) {
      c.fail("lexmib != oracle on corpus graph " + std::to_string(i));
      break;
    }
    for (std::size_t k = 1; k < seq.size(); ++k)
      if (!lex_less(seq[k - 1], seq[k])) {
        c.fail("lexmib order violation on corpus graph " + std::to_string(i));
        return c;
      }
    ++i;
  }
  return c;
}

Check criterion5() {
  Check c;
  Graph fig = test::figure_graph();
  auto full = lexmib_all(fig);
  auto partial = dias_uncorrected_all(fig);
  Biclique missing = Biclique::unchecked({1, 3}, {5});
  std::vector<Biclique> diff;
  for (const Biclique& b : full)
    if (std::count(partial.begin(), partial.end(), b) == 0) diff.push_back(b);
  if (diff != std::vector<Biclique>{missing} ||
      partial.size() + 1 != full.size())
    c.fail("uncorrected baseline does not omit exactly {1,3}x{5}");
  if (full.empty() || full.front() != Biclique::unchecked({0, 1, 4}, {2}))
    c.fail("lexmib's first output is not {0,1,4}x{2}");
  return c;
}

Check criterion6() {
  Check c;
  for (std::uint64_t s = 0; s < 50; ++s) {
    int half = 4 + static_cast<int>(s % 27);  // n_B up to 60
    GenParams p{.n_l = half, .n_r = half,
                .d_lr = 0.1 + 0.05 * static_cast<double>(s % 5),
                .cv_lr = 0.5, .seed = 3000 + s};
    auto [g, d] = generate(p);
    auto via_octmib = test::sorted(octmib_all(g, d));
    auto via_bip = test::sorted(all_bipartite_mibs(g, d.l, d.r));
    if (via_octmib != via_bip) {
      c.fail("octmib != bipartite enumeration, seed " +
             std::to_string(3000 + s));
      break;
    }
    if (g.num_vertices() <= 14 && via_octmib != all_mibs(g)) {
      c.fail("bipartite algorithms != oracle, seed " +
             std::to_string(3000 + s));
      break;
    }
  }
  return c;
}

Check criterion7() {
  Check c;
  auto mean_count = [](int n_o) {
    double total = 0;
    for (std::uint64_t s = 1; s <= 5; ++s) {
      GenParams p{.n_l = 30, .n_r = 30, .n_o = n_o, .d_lr = 0.1,
                  .d_ob = 0.1, .d_oo = 0.1, .cv_lr = 0.5, .cv_ob = 0.5,
                  .seed = 5000 + s};
      auto [g, d] = generate(p);
      total += static_cast<double>(count_mibs(g, d));
    }
    return total / 5.0;
  };
  double at0 = mean_count(0);
  double at4 = mean_count(4);
  std::ostringstream why;
  why << "mean MIB count " << at0 << " (n_O=0) vs " << at4 << " (n_O=4)";
  c.detail = why.str();
  if (!(at4 >= 1.2 * at0)) c.fail("no >=1.2x growth: " + why.str());
  return c;
}

Check criterion8() {
  Check c;
  OctMibOptions off{.next_pruning = false, .dedup_tables = false};
  int i = 0;
  for (const Graph& g : correctness_corpus()) {
    auto d = greedy_oct(g);
    if (test::sorted(octmib_all(g, d, off)) !=
        test::sorted(octmib_all(g, d))) {
      c.fail("pruning changes output on corpus graph " + std::to_string(i));
      break;
    }
    ++i;
  }
  return c;
}

Check criterion9() {
  Check c;
  Graph fig = test::figure_graph();
  auto twice = [&c](const std::string& name, auto&& run) {
    if (run() != run()) c.fail(name + " output differs between runs");
  };
  twice("octmib", [&] { return dump(octmib_all(fig, greedy_oct(fig))); });
  twice("lexmib", [&] { return dump(lexmib_all(fig)); });
  twice("dias-uncorrected", [&] { return dump(dias_uncorrected_all(fig)); });
  twice("oracle", [&] { return dump(all_mibs(fig)); });
  twice("mcb", [&] { return dump(mcb_all(fig, {1, 3})); });
  Graph c4 = test::cycle(4);
  twice("bipartite", [&] { return dump(all_bipartite_mibs(c4, {0, 2}, {1, 3})); });
  GenParams p{.n_l = 20, .n_r = 20, .n_o = 4, .d_lr = 0.2, .d_ob = 0.2,
              .d_oo = 0.3, .cv_lr = 0.5, .cv_ob = 0.5, .seed = 77};
  twice("generator", [&] {
    auto [g, d] = generate(p);
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
  });
  twice("generated octmib", [&] {
    auto [g, d] = generate(p);
    return dump(octmib_all(g, d));
  });
  return c;
}

Check criterion10() {
  Check c;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    GenParams p{.n_l = 100, .n_r = 1000, .d_lr = 0.05, .cv_lr = 0.5,
                .seed = 6000 + s};
    auto [g, d] = generate(p);
    double got = stats(g, d).d_lr;
    if (got < 0.04 || got > 0.06) {
      std::ostringstream why;
      why << "empirical d_lr " << got << " outside [0.04, 0.06], seed "
          << 6000 + s;
      c.fail(why.str());
    }
  }
  GenParams pm{.n_l = 4, .n_r = 4, .n_o = 10,
               .oct_mode = OctMode::kPerfectMatching, .seed = 1};
  auto [g, d] = generate(pm);
  auto [osub, omap] = g.induced_subgraph(d.o);
  bool matching = osub.num_edges() == 5;
  for (int v = 0; v < osub.num_vertices(); ++v)
    if (osub.degree(v) != 1) matching = false;
  if (!matching) c.fail("perfect-matching mode is not a perfect matching");
  return c;
}

Check criterion11() {
  Check c;
  double total_oct = 0, total_lex = 0;
  int oct_wins = 0;
  std::ostringstream log;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    GenParams p{.n_l = 18, .n_r = 182, .n_o = 5, .d_lr = 0.05, .d_ob = 0.05,
                .d_oo = 0.05, .cv_lr = 0.5, .cv_ob = 0.5, .seed = 7000 + s};
    auto [g, d] = generate(p);
    auto t0 = Clock::now();
    auto via_oct = octmib_all(g, d);
    auto t1 = Clock::now();
    auto via_lex = lexmib_all(g);
    auto t2 = Clock::now();
    if (test::sorted(via_oct) != test::sorted(via_lex)) {
      c.fail("octmib and lexmib disagree, seed " + std::to_string(7000 + s));
      return c;
    }
    double ms_oct = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_lex = std::chrono::duration<double, std::milli>(t2 - t1).count();
    total_oct += ms_oct;
    total_lex += ms_lex;
    if (ms_oct <= ms_lex) ++oct_wins;
    log << " [seed " << s << ": " << via_oct.size() << " MIBs, octmib "
        << ms_oct << "ms, lexmib " << ms_lex << "ms]";
  }
  std::ostringstream summary;
  summary << "octmib faster on " << oct_wins << "/5 instances; totals octmib "
          << total_oct << "ms vs lexmib " << total_lex << "ms;" << log.str();
  c.detail = summary.str();
  if (total_oct > 10.0 * total_lex)
    c.fail("octmib exceeded 10x lexmib wall time: " + summary.str());
  return c;
}

const char* kNames[] = {
    "oracle cross-validation",
    "octmib equals oracle",
    "mcb equals crossing oracle",
    "lexmib equals oracle in strict lex order",
    "figure-graph counterexample reproduction",
    "bipartite phase consistency",
    "MIB count grows with OCT size",
    "pruning soundness",
    "determinism",
    "generator calibration",
    "octmib vs lexmib timing sanity",
};

Check run(int i) {
  switch (i) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    default: return criterion11();
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 11; ++i) which.push_back(i);

  bool all_ok = true;
  for (int i : which) {
    if (i < 1 || i > 11) {
      std::fprintf(stderr, "unknown criterion %d\n", i);
      return 2;
    }
    Check c = run(i);
    std::printf("criterion %2d (%s): %s%s%s\n", i, kNames[i - 1],
                c.ok ? "PASS" : "FAIL", c.detail.empty() ? "" : " — ",
                c.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
