#include "perim/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "perim/error.hpp"
#include "perim/input.hpp"

namespace perim {

  int Presentation::find_generator(std::string_view name) const {
    for (int g = 0; g < generator_count(); ++g) {
      if (generators[g] == name) {
        return g;
      }
    }
    return -1;
  }

  void validate(Presentation const& p) {
    std::set<std::string> seen;
    for (auto const& name : p.generators) {
      if (name.empty()) {
        throw PreconditionError("empty generator name");
      }
      if (!seen.insert(name).second) {
        throw PreconditionError("generator " + name + " declared twice");
      }
    }
    for (auto const& r : p.relators) {
      if (r.empty()) {
        throw PreconditionError("empty relator");
      }
      for (Letter x : r) {
        if (x < 0 || generator_of(x) >= p.generator_count()) {
          throw PreconditionError("relator letter out of range");
        }
      }
      if (!is_cyclically_reduced(r)) {
        throw PreconditionError("relator is not cyclically reduced");
      }
    }
  }

  namespace {
    bool is_name_char(char c) {
      return !std::isspace(static_cast<unsigned char>(c)) && c != '('
             && c != ')' && c != '^' && c != ',';
    }

    class WordParser {
     public:
      WordParser(Presentation const& p,
                 std::string_view    text,
                 int                 line,
                 int                 column0)
          : _p(p), _text(text), _line(line), _column0(column0) {}

      Word parse() {
        Word w = sequence();
        skip_space();
        if (_pos < _text.size()) {
          fail(_text[_pos] == ')' ? "unmatched ')'" : "unexpected character");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& msg, std::size_t at) const {
        throw ParseError(msg, _line, _column0 + static_cast<int>(at));
      }
      [[noreturn]] void fail(std::string const& msg) const {
        fail(msg, _pos);
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      Word sequence() {
        Word w;
        for (;;) {
          skip_space();
          if (_pos >= _text.size() || _text[_pos] == ')') {
            return w;
          }
          Word item;
          if (_text[_pos] == '(') {
            std::size_t const open = _pos++;
            item                   = sequence();
            if (_pos >= _text.size()) {
              fail("unmatched '('", open);
            }
            ++_pos;
            item = power(item, exponent());
          } else if (is_name_char(_text[_pos])) {
            item = run();
          } else {
            fail("unexpected character");
          }
          w.insert(w.end(), item.begin(), item.end());
        }
      }

      // An optional ^k after a name or a group.
      int exponent() {
        if (_pos >= _text.size() || _text[_pos] != '^') {
          return 1;
        }
        ++_pos;
        std::size_t const at  = _pos;
        bool const        neg = _pos < _text.size() && _text[_pos] == '-';
        if (neg) {
          ++_pos;
        }
        std::size_t const digits = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (_pos == digits) {
          fail("exponent expected", at);
        }
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(_text.data() + digits, _text.data() + _pos, value);
        if (ec != std::errc{} || value > 1'000'000) {
          fail("exponent too large", at);
        }
        return neg ? -value : value;
      }

      // A run of name characters, split greedily into declared names.  The
      // exponent that may follow applies to the last name only.
      Word run() {
        std::size_t const begin = _pos;
        while (_pos < _text.size() && is_name_char(_text[_pos])) {
          ++_pos;
        }
        std::string_view const chars = _text.substr(begin, _pos - begin);
        std::vector<int>       names;
        std::size_t            i = 0;
        while (i < chars.size()) {
          int         best     = -1;
          std::size_t best_len = 0;
          for (int g = 0; g < _p.generator_count(); ++g) {
            auto const& name = _p.generators[g];
            if (name.size() > best_len && chars.substr(i).starts_with(name)) {
              best     = g;
              best_len = name.size();
            }
          }
          if (best < 0) {
            if (chars == "1") {
              break;  // the identity, when no generator is called 1
            }
            std::size_t end = i + 1;
            while (end < chars.size()
                   && std::isalnum(static_cast<unsigned char>(chars[end]))) {
              ++end;
            }
            fail("unknown generator '" + std::string(chars.substr(i, end - i))
                     + "'",
                 begin + i);
          }
          names.push_back(best);
          i += best_len;
        }
        int const k = exponent();
        Word      w;
        for (std::size_t j = 0; j < names.size(); ++j) {
          Word const x{make_letter(names[j])};
          Word const y = j + 1 == names.size() ? power(x, k) : x;
          w.insert(w.end(), y.begin(), y.end());
        }
        if (names.empty() && k != 1) {
          fail("exponent on the identity", begin);
        }
        return w;
      }

      Presentation const& _p;
      std::string_view    _text;
      int                 _line;
      int                 _column0;
      std::size_t         _pos = 0;
    };
  }  // namespace

  Word detail::parse_word(Presentation const& p,
                          std::string_view    text,
                          int                 line,
                          int                 column0) {
    return WordParser(p, text, line, column0).parse();
  }

  Word parse_word(Presentation const& p, std::string_view text, int line) {
    return detail::parse_word(p, text, line, 1);
  }

  std::vector<Word> parse_word_list(Presentation const& p,
                                    std::string_view    text) {
    std::vector<Word> result;
    if (text.find_first_not_of(" \t") == std::string_view::npos) {
      return result;
    }
    std::size_t begin = 0;
    for (;;) {
      std::size_t const comma = text.find(',', begin);
      std::size_t const end = comma == std::string_view::npos ? text.size()
                                                              : comma;
      result.push_back(detail::parse_word(
          p, text.substr(begin, end - begin), 0, static_cast<int>(begin) + 1));
      if (comma == std::string_view::npos) {
        return result;
      }
      begin = comma + 1;
    }
  }

  std::string to_string(Presentation const& p, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      int const k = static_cast<int>(j - i);
      if (!out.empty()) {
        out += ' ';
      }
      out += p.generators.at(generator_of(w[i]));
      if (is_inverse(w[i])) {
        out += "^-" + std::to_string(k);
      } else if (k > 1) {
        out += "^" + std::to_string(k);
      }
      i = j;
    }
    return out;
  }

  std::string spell(Presentation const& p, Word const& w) {
    bool const short_names =
        std::all_of(p.generators.begin(),
                    p.generators.end(),
                    [](std::string const& g) { return g.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0
          && (!short_names || is_inverse(w[i]) || is_inverse(w[i - 1]))) {
        out += ' ';
      }
      out += p.generators.at(generator_of(w[i]));
      if (is_inverse(w[i])) {
        out += "^-1";
      }
    }
    return out;
  }

  Presentation parse_presentation(std::string_view          text,
                                  std::vector<std::string>* notes) {
    InputFile f = parse_input(text);
    if (notes != nullptr) {
      notes->insert(notes->end(), f.notes.begin(), f.notes.end());
    }
    return std::move(f.presentation);
  }

  std::vector<int> generator_occurrences(Presentation const& p) {
    std::vector<int> count(p.generator_count(), 0);
    for (auto const& r : p.relators) {
      for (Letter x : r) {
        ++count.at(generator_of(x));
      }
    }
    return count;
  }

}  // namespace perim
