#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "oracles.hpp"
#include "perim/perim.hpp"
#include "worked.hpp"

using namespace perim;

namespace {
  std::shared_ptr<Complex2 const> complex_of(std::string const& text) {
    return std::make_shared<Complex2 const>(
        standard_complex(parse_presentation(text)));
  }

  Word word(std::shared_ptr<Complex2 const> const&, std::string const& s) {
    return parse_word(Presentation{{"a", "b"}, {}}, s);
  }

  // Canonical form of a based 1-immersion into a one-vertex complex:
  // vertices numbered in breadth-first order from the basepoint, exploring
  // directed images in increasing order, then the sorted edge list.
  std::vector<std::array<int, 3>> canonical(CombMap const& m) {
    LiftIndex const  out(m);
    int const        images = 2 * m.target().edge_count();
    std::map<int, int> number{{m.basepoint, 0}};
    std::queue<int>    todo;
    todo.push(m.basepoint);
    std::vector<std::array<int, 3>> edges;
    while (!todo.empty()) {
      int const v = todo.front();
      todo.pop();
      for (int d = 0; d < images; ++d) {
        DirectedEdge const e = out.out(v, d);
        if (e < 0) {
          continue;
        }
        int const w = m.domain.target(e);
        if (number.emplace(w, static_cast<int>(number.size())).second) {
          todo.push(w);
        }
        if (d % 2 == 0) {
          edges.push_back({number.at(v), d, number.at(w)});
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  }

  std::vector<FoldSite> all_fold_sites(CombMap const& m) {
    std::vector<FoldSite> sites;
    Complex2 const&       y = m.domain;
    for (int v = 0; v < y.vertex_count(); ++v) {
      std::vector<DirectedEdge> ends;
      for (int e = 0; e < y.edge_count(); ++e) {
        for (DirectedEdge d : {forward(e), reverse(forward(e))}) {
          if (y.source(d) == v) {
            ends.push_back(d);
          }
        }
      }
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          if (m.image(ends[i]) == m.image(ends[j])) {
            sites.push_back({v, ends[i], ends[j]});
          }
        }
      }
    }
    return sites;
  }
}  // namespace

TEST_CASE("bouquets") {
  auto const x = complex_of("gens a b\n");
  auto       m = bouquet_map(x, {word(x, "ab")});
  CHECK(m.domain.edge_count() == 2);
  CHECK(m.edge_image == std::vector<DirectedEdge>{0, 2});
  CHECK(m.endpoint == -1);

  m = bouquet_map(x, {}, word(x, "a"));
  CHECK(m.domain.edge_count() == 1);
  CHECK(m.domain.vertex_count() == 2);
  CHECK(m.endpoint != m.basepoint);

  m = bouquet_map(x, {word(x, "a"), word(x, "b")}, word(x, "ab"));
  CHECK(m.domain.edge_count() == 4);

  m = bouquet_map(x, {}, Word{});
  CHECK(m.endpoint == m.basepoint);
  CHECK_THROWS_AS(bouquet_map(x, {Word{8}}), PreconditionError);
  CHECK_THROWS_AS(bouquet_map(worked::two_squares().x, {Word{0}}),
                  PreconditionError);
}

TEST_CASE("1-immersions and single folds") {
  auto const x = complex_of("gens a b\n");
  FoldSite   site{};
  CHECK_FALSE(is_1_immersion(bouquet_map(x, {word(x, "a"), word(x, "a")}), &site));
  CHECK(site.vertex == 0);
  CHECK(is_1_immersion(bouquet_map(x, {word(x, "ab")})));
  CHECK(is_1_immersion(identity_map(worked::z3_complex())));

  auto const folded = apply_fold(bouquet_map(x, {word(x, "a"), word(x, "ab")}));
  CHECK(folded.domain.vertex_count() == 1);
  CHECK(folded.domain.edge_count() == 2);
  CHECK(is_1_immersion(folded));
  CHECK_THROWS_AS(apply_fold(bouquet_map(x, {word(x, "ab")})), PreconditionError);

  auto const collapse = fold_to_immersion(bouquet_map(x, {Word{0, 1}}));
  CHECK(collapse.domain.vertex_count() == 2);
  CHECK(collapse.domain.edge_count() == 1);
}

TEST_CASE("folding matches the Stallings oracle and is confluent") {
  auto const      x = complex_of("gens a b\n");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto const gens  = oracle::random_generators(2, 2 + trial % 11, 4, rng);
    CombMap    start = bouquet_map(x, gens);
    int        folds = 0;
    auto const batch = fold_to_immersion(start, &folds);
    REQUIRE(is_1_immersion(batch));
    oracle::Stallings const g(2, gens);
    CHECK(batch.domain.vertex_count() == g.vertex_count());
    CHECK(batch.domain.edge_count() == g.edge_count());

    // Random single-fold order.
    CombMap m = start;
    for (auto sites = all_fold_sites(m); !sites.empty(); sites = all_fold_sites(m)) {
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      m = apply_fold(m, sites[pick(rng)]);
    }
    CHECK(canonical(m) == canonical(batch));

    for (int len = 0; len <= 6; ++len) {
      for (int q = 0; q < 5; ++q) {
        Word const u    = oracle::random_reduced_word(2, len, rng);
        auto const lift = lift_path(batch, u, batch.basepoint);
        bool const closes =
            lift && path_end(batch.domain, batch.basepoint, *lift) == batch.basepoint;
        CHECK(closes == g.accepts(u));
      }
    }
  }
}

TEST_CASE("path lifting in the graph of <a^2, ab>") {
  auto const x = complex_of("gens a b\n");
  auto const m = fold_to_immersion(bouquet_map(x, {word(x, "aa"), word(x, "ab")}));
  CHECK_FALSE(lift_path(m, word(x, "aab"), m.basepoint).has_value());
  auto const ab = lift_path(m, word(x, "ab"), m.basepoint);
  REQUIRE(ab.has_value());
  CHECK(path_end(m.domain, m.basepoint, *ab) == m.basepoint);
  auto const empty = lift_path(m, Word{}, m.basepoint);
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
  auto const squares = worked::two_squares();
  CHECK_THROWS_AS(lift_path(squares.identity, {forward(1)}, 0), PreconditionError);
}

TEST_CASE("packing: a lone cell of (aab)^3 gets its two packet mates") {
  auto const x      = complex_of("gens a b\nrel (a a b)^3\n");
  CombMap    circle = worked::boundary_circle(x, 0);
  CHECK(is_packed(circle));
  std::vector<DirectedEdge> aligned;
  for (int i = 0; i < 9; ++i) {
    aligned.push_back(forward(i));
  }
  add_aligned_cell(circle, 0, aligned);
  CHECK_FALSE(is_packed(circle));
  int        added    = 0;
  auto const repaired = repair_packing(circle, &added);
  CHECK(added == 2);
  CHECK(repaired.domain.cell_count() == 3);
  CHECK(is_packed(repaired));
  CHECK(is_packed(build_packet(x, 0).projection));
  auto const w = unit_weighting(x);
  CHECK(map_perimeter(w, repaired) <= map_perimeter(w, circle));
  CHECK(map_perimeter(w, repaired) == 18);
}

TEST_CASE("redundant cells") {
  auto const x  = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  CombMap    m  = identity_map(x);
  CHECK(remove_redundant(m).domain.cell_count() == 1);
  m.domain.add_cell(x->boundary(0));
  m.cell_image.push_back({0, 0, false});
  CHECK(remove_redundant(m).domain.cell_count() == 1);

  // Two of the three packet cells of (aab)^3 differ by a rotation, so
  // neither is redundant.
  auto const y  = complex_of("gens a b\nrel (a a b)^3\n");
  CombMap    pk = build_packet(y, 0).projection;
  CombMap    two = worked::boundary_circle(y, 0);
  for (int k = 0; k < 2; ++k) {
    std::vector<DirectedEdge> aligned;
    for (int i = 0; i < 9; ++i) {
      aligned.push_back(forward((3 * k + i) % 9));
    }
    add_aligned_cell(two, 0, aligned);
  }
  CHECK(remove_redundant(two).domain.cell_count() == 2);
  CHECK(remove_redundant(pk).domain.cell_count() == 3);
}

TEST_CASE("fiber products of circles") {
  auto const x = complex_of("gens a b\n");
  auto const a2 = fold_to_immersion(bouquet_map(x, {word(x, "aa")}));
  auto const a3 = fold_to_immersion(bouquet_map(x, {word(x, "aaa")}));
  auto const fp = fiber_product(a2, a3);
  CHECK(fp.based.domain.vertex_count() == 6);
  CHECK(fp.based.domain.edge_count() == 6);

  auto const diag = fiber_product(a3, a3);
  CHECK(canonical(diag.based) == canonical(a3));

  auto const ca = bouquet_map(x, {word(x, "a")});
  auto const cb = bouquet_map(x, {word(x, "b")});
  auto const none = fiber_product(ca, cb);
  CHECK(none.based.domain.vertex_count() == 1);
  CHECK(none.based.domain.edge_count() == 0);

  auto const other = complex_of("gens a b c\n");
  CHECK_THROWS_AS(fiber_product(ca, bouquet_map(other, {word(other, "a")})),
                  PreconditionError);
}

TEST_CASE("fiber product projections commute with the maps to the codomain") {
  std::mt19937_64 rng(17);
  auto const f = oracle::load("aab3.txt");
  auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
  auto const w = unit_weighting(x);
  for (int trial = 0; trial < 30; ++trial) {
    auto const a = reduce(bouquet_map(x, oracle::random_generators(2, 8, 3, rng)), w).map;
    auto const b = reduce(bouquet_map(x, oracle::random_generators(2, 8, 3, rng)), w).map;
    auto const fp = fiber_product(a, b);
    CombMap const& p = fp.to_codomain;
    validate(p);
    for (int v = 0; v < p.domain.vertex_count(); ++v) {
      CHECK(a.vertex_image[fp.to_a.vertex_image[v]] == p.vertex_image[v]);
      CHECK(b.vertex_image[fp.to_b.vertex_image[v]] == p.vertex_image[v]);
    }
    for (int e = 0; e < p.domain.edge_count(); ++e) {
      CHECK(a.image(fp.to_a.edge_image[e]) == p.edge_image[e]);
      CHECK(b.image(fp.to_b.edge_image[e]) == p.edge_image[e]);
    }
    for (int s = 0; s < p.domain.cell_count(); ++s) {
      CHECK(a.cell_image[fp.to_a.cell_image[s].cell].cell == p.cell_image[s].cell);
      CHECK(b.cell_image[fp.to_b.cell_image[s].cell].cell == p.cell_image[s].cell);
    }
    CHECK(is_1_immersion(fp.based));
  }
}

TEST_CASE("quotient validates its tables") {
  auto const x = complex_of("gens a b\n");
  auto const m = bouquet_map(x, {word(x, "ab")});
  CHECK_THROWS_AS(quotient(m, {1}, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(quotient(m, {0}, {0}), PreconditionError);
  auto const same = quotient(m, {0, 1}, {0, 2});
  CHECK(same.domain.edge_count() == 2);
}

TEST_CASE("components") {
  auto const x = complex_of("gens a b\n");
  CombMap    m = bouquet_map(x, {word(x, "ab")});
  m.domain.add_vertex();
  m.vertex_image.push_back(0);
  auto const c = component_of(m, 0);
  CHECK(c.domain.vertex_count() == 2);
  CHECK(c.basepoint == 0);
}
