#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "perim/perim.hpp"
#include "worked.hpp"

using namespace perim;

namespace {
  std::shared_ptr<Complex2 const> complex_of(std::string const& text) {
    return std::make_shared<Complex2 const>(
        standard_complex(parse_presentation(text)));
  }

  Word ab_word(std::string const& s) {
    return parse_word(Presentation{{"a", "b"}, {}}, s);
  }

  int find_count(std::vector<Candidate> const& cs, int cell, int start, int len) {
    int n = 0;
    for (auto const& c : cs) {
      n += c.cell == cell && c.start == start && c.length == len;
    }
    return n;
  }
}  // namespace

TEST_CASE("candidates match the perimeter of the complement") {
  for (auto const* name : {"aab3.txt", "z2.txt", "z3_weighted.txt", "modify.txt"}) {
    INFO(name);
    auto const f = oracle::load(name);
    auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
    auto const w = make_weighting(f, x);
    auto const strict = enumerate_candidates(w, Mode::strict);
    auto const weak   = enumerate_candidates(w, Mode::weak);
    for (int c = 0; c < x->cell_count(); ++c) {
      int const    n     = x->boundary_length(c);
      Weight const bound = cell_period(*x, c).exponent * w.cell_weight(c);
      for (int s = 0; s < n; ++s) {
        for (int len = 1; len <= n; ++len) {
          Weight ps = 0;
          for (int i = len; i < n; ++i) {
            ps += w.edge_perimeter(edge_of(x->boundary(c)[(s + i) % n]));
          }
          CHECK(find_count(strict, c, s, len) == (ps < bound ? 1 : 0));
          CHECK(find_count(weak, c, s, len) == (ps <= bound ? 1 : 0));
        }
      }
    }
  }
  auto const z2 = enumerate_candidates(unit_weighting(complex_of("gens a b\nrel a b a^-1 b^-1\n")),
                                       Mode::weak);
  // |Q| = 2 leaves P(S) = 4 = Wt: a weak-only candidate.
  bool weak_only = false;
  for (auto const& c : z2) {
    if (c.length == 2) {
      CHECK_FALSE(c.strict);
      weak_only = true;
    }
    if (c.length >= 3) {
      CHECK(c.strict);
    }
  }
  CHECK(weak_only);
  CHECK(enumerate_candidates(unit_weighting(complex_of("gens a b\n")), Mode::weak).empty());
}

TEST_CASE("attachment sites on a boundary circle and on a full packet") {
  auto const x = complex_of("gens a b\nrel (a a b)^3\n");
  auto const w = unit_weighting(x);
  auto const site = find_attachment(worked::boundary_circle(x, 0), w, Mode::strict);
  REQUIRE(site.has_value());
  CHECK(site->complete);
  CHECK(site->candidate.length == 9);
  CHECK_FALSE(find_attachment(build_packet(x, 0).projection, w, Mode::weak).has_value());
}

TEST_CASE("complete attachment of the square to its boundary") {
  auto const x      = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  auto const w      = unit_weighting(x);
  auto const circle = worked::boundary_circle(x, 0);
  CHECK(map_perimeter(w, circle) == 8);
  auto const site = find_attachment(circle, w, Mode::strict);
  REQUIRE(site.has_value());
  auto const res = attach_packet(circle, w, *site);
  CHECK(res.perimeter_change == -4);
  CHECK(map_perimeter(w, res.map) == 4);
  CHECK_THROWS_AS(attach_packet(res.map, w, *site), PreconditionError);
}

TEST_CASE("reduce: free groups are Stallings folding") {
  auto const x   = complex_of("gens a b\n");
  auto const w   = unit_weighting(x);
  auto const res = reduce(bouquet_map(x, {ab_word("aa"), ab_word("ab")}), w);
  CHECK(res.map.domain.vertex_count() == 2);
  CHECK(res.map.domain.edge_count() == 3);
  CHECK_FALSE(res.exhausted);
  auto const none = reduce(bouquet_map(x, {}), w);
  CHECK(none.trace.steps.empty());
  CHECK(none.map.domain.vertex_count() == 1);
}

TEST_CASE("reduce: the commutator of Z^2 bounds a disc") {
  auto const x   = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  auto const w   = unit_weighting(x);
  auto const res = reduce(bouquet_map(x, {ab_word("a b a^-1 b^-1")}), w,
                          {Mode::strict, std::nullopt, true});
  auto const ex = extract_presentation(res.map);
  CHECK(ex.presentation.generator_count() == 1);
  REQUIRE(ex.presentation.relators.size() == 1);
  CHECK(ex.presentation.relators[0].size() == 1);  // <x | x>, trivial
}

TEST_CASE("weak mode on the cylinder start keeps P at 8 until the limit") {
  auto const f = oracle::load("z2.txt");
  auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
  auto const w = unit_weighting(x);
  auto const start = bouquet_map(x, *f.find_words("cylinder"));
  CHECK(map_perimeter(w, start) == 8);
  auto const weak = reduce(start, w, {Mode::weak, 50, true});
  CHECK(weak.exhausted);
  CHECK(weak.trace.steps.size() == 50);
  for (auto const& s : weak.trace.steps) {
    CHECK(s.perimeter == 8);
  }
  CHECK_THROWS_AS(reduce(start, w, {Mode::weak, std::nullopt, false}),
                  PreconditionError);
  auto const strict = reduce(start, w, {Mode::strict, std::nullopt, true});
  CHECK_FALSE(strict.exhausted);
  REQUIRE_FALSE(strict.trace.steps.empty());
  CHECK(strict.trace.steps.front().kind == StepKind::attach_complete);
  CHECK(strict.trace.steps.back().perimeter == 4);
}

TEST_CASE("trace text has one line per step") {
  auto const x   = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  auto const res = reduce(bouquet_map(x, {ab_word("a b a^-1 b^-1"), ab_word("a")}),
                          unit_weighting(x));
  auto const text = res.trace.to_text();
  CHECK(text.rfind("step=1 kind=", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n')
        == static_cast<long>(res.trace.steps.size()));
}

TEST_CASE("extracting presentations") {
  auto const x = complex_of("gens a b\n");
  auto e = extract_presentation(bouquet_map(x, {ab_word("aba")}));
  CHECK(e.presentation.generator_count() == 1);
  CHECK(e.presentation.relators.empty());
  CHECK(e.generator_images.at(0) == ab_word("aba"));

  auto const sq  = complex_of("gens a b\nrel a b a^-1 b^-1\n");
  CombMap    disc = worked::boundary_circle(sq, 0);
  disc.domain.add_cell({0, 2, 4, 6});
  disc.cell_image.push_back({0, 0, false});
  e = extract_presentation(disc);
  CHECK(e.presentation.generator_count() == 1);
  CHECK(e.presentation.relators.size() == 1);

  // theta graph: two vertices joined by three edges
  CombMap theta = bouquet_map(x, {ab_word("ab"), ab_word("aa")});
  theta = fold_to_immersion(theta);
  e = extract_presentation(theta);
  CHECK(e.presentation.generator_count() == 2);

  CombMap split = bouquet_map(x, {ab_word("a")});
  split.domain.add_vertex();
  split.vertex_image.push_back(0);
  CHECK_THROWS_AS(extract_presentation(split), PreconditionError);
}

TEST_CASE("relator bound and Euler perimeter") {
  auto const o2 = oracle::load("surface_o2.txt");
  auto const x  = std::make_shared<Complex2 const>(standard_complex(o2.presentation));
  auto const w  = unit_weighting(x);
  CHECK(relator_bound(w, {parse_word(o2.presentation, "a b a^-1 b^-1")}) == 8);
  CHECK(relator_bound(w, {}) == 0);
  CHECK(euler_perimeter(bouquet_map(x, {}), w) == 1);
}

TEST_CASE("strict traces: the complexity pair drops and reduce is idempotent") {
  std::mt19937_64 rng(31);
  for (auto const* name : {"aab3.txt", "z3_weighted.txt", "modify.txt",
                           "surface_o2.txt", "uv_weighted.txt"}) {
    INFO(name);
    auto const f = oracle::load(name);
    auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
    auto const w = make_weighting(f, x);
    int longest = 0;
    for (int c = 0; c < x->cell_count(); ++c) {
      longest = std::max(longest, x->boundary_length(c));
    }
    for (int trial = 0; trial < 10; ++trial) {
      auto const gens = oracle::random_generators(x->edge_count(), 12, 3, rng);
      auto const m    = bouquet_map(x, gens);
      auto const res  = reduce(m, w, {Mode::strict, std::nullopt, true});
      Weight p = res.trace.initial_perimeter;
      int    e = res.trace.initial_edges;
      for (auto const& s : res.trace.steps) {
        if (s.kind != StepKind::repair) {
          CHECK((s.perimeter < p || (s.perimeter == p && s.edges < e)));
        }
        if (s.kind == StepKind::repair) {
          CHECK(s.perimeter <= p);
        }
        p = s.perimeter;
        e = s.edges;
      }
      CHECK(static_cast<long>(res.trace.steps.size())
            <= longest * res.trace.initial_perimeter + res.trace.initial_edges);
      CHECK(p == map_perimeter(w, res.map));
      auto const again = reduce(res.map, w);
      CHECK(again.trace.steps.empty());
    }
  }
}

TEST_CASE("attachment bookkeeping against the side count") {
  std::mt19937_64 rng(77);
  for (auto const* name : {"aab3.txt", "z3_weighted.txt", "modify.txt", "z2.txt"}) {
    INFO(name);
    auto const f = oracle::load(name);
    auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
    auto const w = make_weighting(f, x);
    CandidateTable const table(w, Mode::strict);
    for (int trial = 0; trial < 10; ++trial) {
      CombMap m = bouquet_map(x, oracle::random_generators(x->edge_count(), 10, 3, rng));
      Weight  tracked = oracle::perimeter_by_sides(w, m);
      for (int step = 0; step < 500; ++step) {
        if (auto fold = find_fold(m)) {
          m = apply_fold(m, *fold);
          tracked = oracle::perimeter_by_sides(w, m);
          continue;
        }
        if (!is_packed(m)) {
          m = repair_packing(m);
          tracked = oracle::perimeter_by_sides(w, m);
          continue;
        }
        auto const site = find_attachment(m, table);
        if (!site) {
          break;
        }
        auto const res = attach_packet(m, w, *site);
        tracked += res.perimeter_change;
        m = res.map;
        CHECK(tracked == oracle::perimeter_by_sides(w, m));
        if (site->complete) {
          CHECK(res.perimeter_change <= -w.cell_weight(site->candidate.cell));
        }
      }
    }
  }
}
