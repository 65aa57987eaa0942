#include <catch_amalgamated.hpp>

#include <filesystem>

#include "oracles.hpp"
#include "perim/perim.hpp"

using namespace perim;

TEST_CASE("weights rel gives one weight per boundary position") {
  auto const f = oracle::load("z3_weighted.txt");
  REQUIRE(f.weights.per_relator.size() == 3);
  CHECK(f.weights.per_relator.at(0) == std::vector<Weight>{1, 2, 3, 4});
  CHECK(f.weights.per_relator.at(2) == std::vector<Weight>{1, 3, 5, 0});
  auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
  auto const w = make_weighting(f, x);
  CHECK(w.cell_weight(0) == 10);
  CHECK(w.cell_weight(1) == 3);
  CHECK(w.cell_weight(2) == 9);
}

TEST_CASE("weights gen sets every side over that generator") {
  auto const f = oracle::load("modify.txt");
  CHECK(f.weights.per_generator.at(5) == 0);
  auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
  auto const w = make_weighting(f, x);
  CHECK(w.cell_weight(0) == 5);
  CHECK(w.cell_weight(1) == 5);
  CHECK(w.edge_perimeter(0) == 2);
  CHECK(w.edge_perimeter(5) == 0);
}

TEST_CASE("weighting directives that cannot be honoured are rejected") {
  CHECK_THROWS_AS(parse_input("gens a b\nrel a b\nweights rel 1: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_input("gens a b\nrel a b\nrel a b b\nweights rel 1: 1 1\n"),
      ParseError);
  CHECK_THROWS_AS(parse_input("gens a b\nrel a b\nweights rel 1: 1 1\n"
                              "weights gen a 2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_input("gens a b\nrel a b\nweights gen c 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_input("gens a b\nrel a b\nweights gen a -1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_input("rel a b\n"), ParseError);
  CHECK_THROWS_AS(parse_input("gens a\ngens b\n"), ParseError);
  CHECK_THROWS_AS(parse_input("gens a\nfrob a\n"), ParseError);
  // A cell of weight zero is not a weighting.
  auto const f = parse_input("gens a b\nrel a b\nweights gen a 0\nweights gen b 0\n");
  auto const x = std::make_shared<Complex2 const>(standard_complex(f.presentation));
  CHECK_THROWS_AS(make_weighting(f, x), PreconditionError);
}

TEST_CASE("word lists are kept in file order") {
  auto const f = oracle::load("aab9.txt");
  auto const* h = f.find_words("H");
  REQUIRE(h != nullptr);
  CHECK(h->size() == 2);
  CHECK(h->at(1) == Word{2, 0, 2});
  CHECK(f.find_words("K") == nullptr);
}

TEST_CASE("serialize then parse is the identity on every fixture") {
  for (auto const& entry :
       std::filesystem::directory_iterator(PERIM_FIXTURE_DIR)) {
    auto const name = entry.path().filename().string();
    INFO(name);
    auto const f     = oracle::load(name);
    auto const again = parse_input(serialize(f));
    CHECK(again == f);
    CHECK(serialize(again) == serialize(f));
  }
}

TEST_CASE("serialize round-trips normalized relators and mixed weights") {
  auto const f = parse_input(
      "# comment\n"
      "gens a b\n"
      "rel b (a b)^2 b^-1   # conjugated\n"
      "weights gen b 3\n"
      "words S: , a^-2, 1\n");
  CHECK_FALSE(f.notes.empty());
  CHECK(parse_input(serialize(f)) == f);
}
