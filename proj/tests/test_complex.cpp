#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "perim/perim.hpp"

using namespace perim;

namespace {
  std::shared_ptr<Complex2 const> complex_of(std::string const& text) {
    return std::make_shared<Complex2 const>(
        standard_complex(parse_presentation(text)));
  }
}  // namespace

TEST_CASE("standard complex has one vertex, an edge per generator, a cell per relator") {
  auto x = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  CHECK(x->vertex_count() == 1);
  CHECK(x->edge_count() == 2);
  CHECK(x->cell_count() == 1);
  CHECK(x->boundary_length(0) == 4);

  x = complex_of("gens a\n");
  CHECK(x->vertex_count() == 1);
  CHECK(x->edge_count() == 1);
  CHECK(x->cell_count() == 0);

  x = complex_of("gens a b\nrel (a a b)^3\n");
  CHECK(x->boundary_length(0) == 9);
}

TEST_CASE("sides of (aab)^3: six at a, three at b") {
  auto const x = complex_of("gens a b\nrel (a a b)^3\n");
  CHECK(sides_at(*x, 0).size() == 6);
  CHECK(sides_at(*x, 1).size() == 3);
  CHECK(sides_at(*complex_of("gens a\n"), 0).empty());
  CHECK_THROWS(sides_at(*x, 2));
}

TEST_CASE("side counts total the boundary lengths") {
  for (auto const* name : {"z3_unit.txt", "uv_unit.txt", "modify.txt",
                           "perfect.txt", "magnus.txt", "surface_o2.txt"}) {
    auto const f = oracle::load(name);
    Complex2 const x = standard_complex(f.presentation);
    std::size_t sides = 0, boundary = 0;
    for (int e = 0; e < x.edge_count(); ++e) {
      sides += sides_at(x, e).size();
    }
    for (int c = 0; c < x.cell_count(); ++c) {
      boundary += x.boundary(c).size();
    }
    CHECK(sides == boundary);
  }
}

TEST_CASE("cell periods") {
  auto x = complex_of("gens a b\nrel (a a b)^3\nrel a b a^-1 b^-1\nrel a^6\n");
  CHECK(cell_period(*x, 0).period_length == 3);
  CHECK(cell_period(*x, 0).exponent == 3);
  CHECK(cell_period(*x, 1).period_length == 4);
  CHECK(cell_period(*x, 1).exponent == 1);
  CHECK(cell_period(*x, 2).period_length == 1);
  CHECK(cell_period(*x, 2).exponent == 6);
}

TEST_CASE("packets: a circle of n|W| edges carrying n cells") {
  auto const x = complex_of("gens a b\nrel (a a b)^3\nrel a b a^-1 b^-1\nrel a^2\n");
  auto const pk = build_packet(x, 0);
  CHECK(pk.complex().edge_count() == 9);
  CHECK(pk.complex().cell_count() == 3);
  CHECK(pk.cell_offsets == std::vector<int>{0, 3, 6});
  for (int e = 0; e < 9; ++e) {
    CHECK(sides_at(pk.complex(), e).size() == 3);
  }
  auto const single = build_packet(x, 1);
  CHECK(single.complex().cell_count() == 1);
  CHECK(single.complex().edge_count() == 4);
  auto const squares = build_packet(x, 2);
  CHECK(squares.complex().edge_count() == 2);
  CHECK(squares.complex().cell_count() == 2);
  CHECK(is_near_immersion(pk.projection));
}

TEST_CASE("link girth") {
  CHECK(link_girth(*complex_of("gens a b\nrel a b a^-1 b^-1\n"), 0).simple == 4);
  auto const modify = oracle::load("modify.txt");
  CHECK(link_girth(standard_complex(modify.presentation), 0).simple == 4);
  auto const free = link_girth(*complex_of("gens a\n"), 0);
  CHECK(free.simple == infinity);
  CHECK(free.multigraph == infinity);
  // a^4 b^4 ... repeats the corner (a, a^-1): a 2-cycle in the multigraph.
  auto const uv = oracle::load("uv_unit.txt");
  auto const g  = link_girth(standard_complex(uv.presentation), 0);
  CHECK(g.multigraph == 2);
  CHECK(g.simple == 4);
}

TEST_CASE("link graph has a node per edge end and an edge per corner") {
  auto const x = complex_of("gens a b\nrel a b a^-1 b^-1\nrel a a b\n");
  auto const l = link_graph(*x, 0);
  CHECK(l.nodes.size() == 4);
  CHECK(l.edges.size() == 7);
}

TEST_CASE("complex construction rejects broken boundaries") {
  Complex2 x;
  x.add_vertex();
  x.add_vertex();
  int const e = x.add_edge(0, 1);
  CHECK_THROWS_AS(x.add_cell({forward(e)}), PreconditionError);
  CHECK_THROWS_AS(x.add_cell({forward(e), reverse(forward(e))}),
                  PreconditionError);
  CHECK_THROWS_AS(x.add_edge(0, 5), PreconditionError);
  int const f = x.add_edge(1, 0);
  CHECK_NOTHROW(x.add_cell({forward(e), forward(f)}));
  CHECK_FALSE(has_nonsimple_attaching_cycle(x));
  CHECK(has_nonsimple_attaching_cycle(*complex_of("gens a\nrel a a\n")) == true);
}
