#ifndef PERIM_WORD_HPP_
#define PERIM_WORD_HPP_

#include <cstddef>
#include <vector>

namespace perim {

  // A signed generator reference: 2 * generator + (1 if inverse).  The same
  // encoding names directed 1-cells of a complex, so the letters of a word
  // over a presentation are the directed edges of its standard complex.
  using Letter = int;

  constexpr Letter make_letter(int generator, bool inverse = false) noexcept {
    return 2 * generator + (inverse ? 1 : 0);
  }
  constexpr int generator_of(Letter x) noexcept {
    return x >> 1;
  }
  constexpr bool is_inverse(Letter x) noexcept {
    return (x & 1) != 0;
  }
  constexpr Letter inverse(Letter x) noexcept {
    return x ^ 1;
  }

  using Word = std::vector<Letter>;

  // The formal inverse: reversed with every letter inverted.
  Word inverse(Word const& w);

  // Removes adjacent x x^-1 pairs until none remain.
  Word free_reduce(Word const& w);

  // Freely reduces, then strips matching first/last inverse pairs.  The
  // result is conjugate to w.
  Word cyclic_reduce(Word const& w);

  bool is_freely_reduced(Word const& w);
  bool is_cyclically_reduced(Word const& w);

  // Rotation by k: letters k, k+1, ..., wrapping.  k is taken mod |w|.
  Word rotate(Word const& w, std::size_t k);

  struct PeriodExponent {
    Word period;
    int  exponent;
  };

  // w == period^exponent literally, with exponent maximal.  Throws
  // PreconditionError on the empty word.
  PeriodExponent period_exponent(Word const& w);

  // Length of the shortest p > 0 with w[i] == w[(i + p) mod |w|] for all i.
  // Divides |w|.  Returns 0 for the empty word.
  std::size_t cyclic_period(Word const& w);

  // True iff u is a cyclic rotation of v or of inverse(v).
  bool cyclically_conjugate(Word const& u, Word const& v);

  // Word with every letter of w repeated as given by the exponent; negative
  // exponents use the inverse.
  Word power(Word const& w, int exponent);

}  // namespace perim

#endif  // PERIM_WORD_HPP_
