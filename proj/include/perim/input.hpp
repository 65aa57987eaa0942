#ifndef PERIM_INPUT_HPP_
#define PERIM_INPUT_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perim/complex.hpp"
#include "perim/perimeter.hpp"
#include "perim/presentation.hpp"

namespace perim {

  // The weighting directives of an input file after normalization.  Either
  // per_relator is empty (a unit base, optionally overridden per generator)
  // or it covers every relator and per_generator is empty.
  struct WeightSpec {
    std::map<int, Weight>              per_generator;
    std::map<int, std::vector<Weight>> per_relator;  // 0-based relator

    bool is_unit() const noexcept {
      return per_generator.empty() && per_relator.empty();
    }
    friend bool operator==(WeightSpec const&, WeightSpec const&) = default;
  };

  struct InputFile {
    Presentation presentation;
    WeightSpec   weights;
    // Named word lists from `words <name>: w1, w2` lines, in file order.
    std::vector<std::pair<std::string, std::vector<Word>>> word_lists;
    // Normalization remarks (cyclic reduction of a relator and so on).
    std::vector<std::string> notes;

    std::vector<Word> const* find_words(std::string_view name) const;

    // Notes are commentary and do not take part in equality.
    friend bool operator==(InputFile const& a, InputFile const& b) {
      return a.presentation == b.presentation && a.weights == b.weights
             && a.word_lists == b.word_lists;
    }
  };

  // Line-oriented grammar, '#' starts a comment:
  //   gens <name>+                      exactly once, before anything else
  //   rel <word>                        any number of times
  //   weights unit
  //   weights gen <name> <int>          every side over that generator
  //   weights rel <k>: <int>+           one weight per boundary position
  //   words <name>: <word>, <word>, ...
  // Throws ParseError with the offending line and column.
  InputFile parse_input(std::string_view text);

  // Canonical text that parse_input maps back to an equal InputFile.
  std::string serialize(InputFile const& f);

  // The weighting the directives describe on x, which must be the standard
  // complex of f.presentation.
  Weighting make_weighting(InputFile const&                f,
                           std::shared_ptr<Complex2 const> x);

  // Reads a whole file; throws Error when it cannot be opened.
  std::string read_file(std::string const& path);

}  // namespace perim

#endif  // PERIM_INPUT_HPP_
