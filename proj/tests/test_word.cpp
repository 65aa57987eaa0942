#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "perim/word.hpp"

using namespace perim;

namespace {
  // a = 0, A = 1, b = 2, B = 3, c = 4, C = 5
  Word w(std::string const& s) {
    Word out;
    for (char ch : s) {
      int const g = std::tolower(ch) - 'a';
      out.push_back(make_letter(g, std::isupper(ch) != 0));
    }
    return out;
  }
}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(free_reduce(w("aAb")) == w("b"));
  CHECK(free_reduce(w("")).empty());
  CHECK(free_reduce(w("abBA")).empty());
  CHECK(free_reduce(w("abAB")) == w("abAB"));
}

TEST_CASE("cyclic reduction strips conjugating letters") {
  CHECK(cyclic_reduce(w("baB")) == w("a"));
  CHECK(cyclic_reduce(w("ab")) == w("ab"));
  CHECK(cyclic_reduce(w("Aba")) == w("b"));
  CHECK(cyclic_reduce(w("aA")).empty());
}

TEST_CASE("period and exponent are maximal") {
  auto pe = period_exponent(w("aabaab"));
  CHECK(pe.period == w("aab"));
  CHECK(pe.exponent == 2);
  CHECK(period_exponent(w("ab")).exponent == 1);
  pe = period_exponent(w("aaa"));
  CHECK(pe.period == w("a"));
  CHECK(pe.exponent == 3);
  CHECK_THROWS_AS(period_exponent(Word{}), PreconditionError);
  CHECK(cyclic_period(w("abab")) == 2);
  CHECK(cyclic_period(Word{}) == 0);
}

TEST_CASE("cyclic conjugacy includes inversion") {
  CHECK(cyclically_conjugate(w("ab"), w("ba")));
  CHECK(cyclically_conjugate(w("ab"), w("BA")));
  CHECK_FALSE(cyclically_conjugate(w("ab"), w("aB")));
  CHECK_FALSE(cyclically_conjugate(w("ab"), w("abab")));
}

TEST_CASE("rotation, inverse and power") {
  CHECK(rotate(w("abc"), 1) == w("bca"));
  CHECK(rotate(w("abc"), 4) == w("bca"));
  CHECK(inverse(w("abC")) == w("cBA"));
  CHECK(power(w("ab"), 3) == w("ababab"));
  CHECK(power(w("ab"), -2) == w("BABA"));
  CHECK(power(w("ab"), 0).empty());
}

TEST_CASE("free reduction agrees with a stack reduction on random words") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 5), len(0, 16);
  for (int trial = 0; trial < 2000; ++trial) {
    Word u;
    for (int i = len(rng); i > 0; --i) {
      u.push_back(letter(rng));
    }
    Word const r = free_reduce(u);
    CHECK(oracle::to_signed(r) == oracle::reduce(oracle::to_signed(u)));
    CHECK(is_freely_reduced(r));
    Word const c = cyclic_reduce(u);
    CHECK(is_cyclically_reduced(c));
    // Conjugate words have freely equal cyclic reductions up to rotation.
    if (!c.empty()) {
      CHECK(cyclically_conjugate(c, cyclic_reduce(rotate(r, 1))));
    }
  }
}
