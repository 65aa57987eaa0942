#ifndef PERIM_PRESENTATION_HPP_
#define PERIM_PRESENTATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "perim/word.hpp"

namespace perim {

  // Generators plus relators.  Relators are stored expanded and cyclically
  // reduced; generator names are distinct and nonempty.
  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;

    int generator_count() const noexcept {
      return static_cast<int>(generators.size());
    }
    // Index of a generator name, or -1.
    int find_generator(std::string_view name) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;
  };

  // Throws PreconditionError when a name repeats, is empty, or a relator
  // is out of range or not cyclically reduced.
  void validate(Presentation const& p);

  // Parses a word over the generators of p.  Accepted tokens are name,
  // name^k, name^-k and ( word )^k.  Names may be separated by spaces or
  // written together, in which case the longest declared name is taken
  // first.  Throws ParseError; line is used only for the message.
  Word parse_word(Presentation const& p, std::string_view text, int line = 0);

  namespace detail {
    // parse_word with columns reported relative to column0.
    Word parse_word(Presentation const& p,
                    std::string_view    text,
                    int                 line,
                    int                 column0);
  }  // namespace detail

  // Comma-separated list of words; the empty string is the empty list.
  std::vector<Word> parse_word_list(Presentation const& p,
                                    std::string_view    text);

  // Letters separated by spaces, runs of one letter written as x^k.  The
  // empty word prints as "1".
  std::string to_string(Presentation const& p, Word const& w);

  // Letters written out one by one, inverses as name^-1.  Names are run
  // together when all are one character long, else separated by spaces.
  std::string spell(Presentation const& p, Word const& w);

  // Parses the file grammar (see input.hpp) and returns only its
  // presentation.  Notes about normalization are appended to notes.
  Presentation parse_presentation(std::string_view          text,
                                  std::vector<std::string>* notes = nullptr);

  // Occurrences of each generator, in either orientation, over all relators.
  std::vector<int> generator_occurrences(Presentation const& p);

}  // namespace perim

#endif  // PERIM_PRESENTATION_HPP_
