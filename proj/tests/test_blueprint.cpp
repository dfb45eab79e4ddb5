#include <doctest.h>

#include "helpers.hpp"
#include "mib/blueprint.hpp"
#include "mib/mcb.hpp"

using namespace mib;

TEST_CASE("is_invalid") {
  Blueprint b;
  CHECK(is_invalid(b));
  b.cc_i = {3};
  CHECK_FALSE(is_invalid(b));
}

TEST_CASE("not_future_max on the figure graph") {
  Graph g = test::figure_graph();

  Blueprint empty;
  empty.s_i = {5};
  empty.cc_i = {1, 3};
  CHECK_FALSE(not_future_max(g, empty));  // all three pools empty

  // Condition (iii): does 0 fit the CC side of {5}x{1,3}? N(0)={2}, no.
  Blueprint b3;
  b3.s_i = {5};
  b3.cc_i = {1, 3};
  b3.if_o = {0};
  CHECK_FALSE(not_future_max(g, b3));

  // Condition (ii): 3 is independent of cc_i={1} and adjacent to s_i={5},
  // so moving it into CC would only grow the biclique.
  Blueprint b2;
  b2.s_i = {5};
  b2.cc_i = {1};
  b2.cc_o = {2, 3, 4};
  CHECK(not_future_max(g, b2));

  // Condition (i): an s_p vertex that fits the IF side.
  Blueprint b1;
  b1.s_i = {5};
  b1.cc_i = {2};
  b1.s_p = {0};  // N(0)={2}: complete to cc_i, independent of if_i=empty
  CHECK(not_future_max(g, b1));
}

TEST_CASE("is_maximal") {
  Graph g = test::figure_graph();
  Blueprint b;
  b.s_i = {5};
  b.cc_i = {1, 3};
  CHECK(is_maximal(g, b));  // s_w and o_if empty; this is {1,3}x{5}

  // A qualifying s_w witness blocks maximality.
  Blueprint blocked;
  blocked.s_i = {5};
  blocked.cc_i = {2};  // {5}x{2}: 0 extends the IF side (N(0)={2})
  blocked.s_w = {0};
  CHECK_FALSE(is_maximal(g, blocked));

  // An o_if witness blocks it too.
  blocked.s_w = {};
  blocked.o_if = {0};
  CHECK_FALSE(is_maximal(g, blocked));
}

TEST_CASE("compute_next") {
  Graph g = test::figure_graph();
  Blueprint b;
  b.s_i = {5};
  b.cc_i = {2};
  CHECK(compute_next(g, b) == kNextInfinity);  // s_w empty
  b.s_w = {0};
  CHECK(compute_next(g, b) == 0);
  b.if_i = {0};
  b.s_w = {1};  // 1 is adjacent to 2 but not independent of... N(1)={2,5}
  CHECK(compute_next(g, b) == 1);

  // Two qualifying candidates: phi-least wins.
  Graph star(10, {{0, 7}, {0, 9}});
  Blueprint t;
  t.cc_i = {0};
  t.s_w = {7, 9};
  CHECK(compute_next(star, t) == 7);

  // o_if vertices never produce a finite next.
  Blueprint u;
  u.cc_i = {0};
  u.o_if = {9};
  CHECK(compute_next(star, u) == kNextInfinity);
}

TEST_CASE("predicates probe O(n + m) edges") {
  Graph g = test::er_graph(40, 0.3, 7);
  const std::uint64_t budget =
      2 * static_cast<std::uint64_t>(g.num_edges()) + g.num_vertices();
  Blueprint b;
  b.s_i = {39};
  b.cc_i = g.neighbors(39);
  for (int v = 0; v < 30; ++v)
    (v % 2 ? b.s_w : b.s_p).push_back(v);
  b.if_o = {30, 31};
  b.cc_o = {32, 33};
  b.o_if = {34, 35};

  g.start_probe_count();
  not_future_max(g, b);
  CHECK(g.stop_probe_count() <= budget);
  g.start_probe_count();
  is_maximal(g, b);
  CHECK(g.stop_probe_count() <= budget);
  g.start_probe_count();
  compute_next(g, b);
  CHECK(g.stop_probe_count() <= budget);
}

TEST_CASE("mcb small cases") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(mcb_all(star, {1, 2, 3}) ==
        std::vector<Biclique>{Biclique::unchecked({1, 2, 3}, {0})});

  Graph p3 = test::path(3);
  CHECK(mcb_all(p3, {0, 2}) ==
        std::vector<Biclique>{Biclique::unchecked({0, 2}, {1})});

  Graph fig = test::figure_graph();
  CHECK(test::sorted(mcb_all(fig, {0})) ==
        std::vector<Biclique>{Biclique::unchecked({0}, {2})});

  CHECK_THROWS_AS(mcb_all(test::path(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("crossing oracle edge cases") {
  Graph empty(4, {});
  CHECK(crossing_oracle(empty, {0, 1}).empty());
  CHECK(mcb_all(empty, {0, 1}).empty());
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(crossing_oracle(star, {1, 2, 3}) ==
        std::vector<Biclique>{Biclique::unchecked({1, 2, 3}, {0})});
}

TEST_CASE("mcb equals crossing oracle on random instances") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = test::er_graph(8, 0.4, 100 + s);
    VertexSet x = test::random_mis(g, s);
    CAPTURE(s);
    CHECK(test::sorted(mcb_all(g, x)) == crossing_oracle(g, x));
  }
}

TEST_CASE("mcb stats and option flags") {
  Graph g = test::er_graph(10, 0.4, 3);
  VertexSet x = test::random_mis(g, 3);
  McbStats st;
  auto base = test::sorted(mcb_all(g, x, {}, &st));
  CHECK(st.emitted == base.size());
  CHECK(st.blueprints >= st.emitted);

  McbOptions no_prune{.next_pruning = false, .dedup_tables = false};
  McbStats st2;
  CHECK(test::sorted(mcb_all(g, x, no_prune, &st2)) == base);
  CHECK(st2.expansions >= st.expansions);
}
