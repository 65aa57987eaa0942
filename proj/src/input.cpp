#include "perim/input.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "perim/error.hpp"

namespace perim {

  std::vector<Word> const* InputFile::find_words(std::string_view name) const {
    for (auto const& [n, words] : word_lists) {
      if (n == name) {
        return &words;
      }
    }
    return nullptr;
  }

  namespace {
    struct Token {
      std::string_view text;
      int              column;  // 1-based
    };

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    std::vector<Token> split(std::string_view line, std::size_t from = 0) {
      std::vector<Token> out;
      std::size_t        i = from;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
          ++i;
        }
        std::size_t const b = i;
        while (i < line.size() && !is_space(line[i])) {
          ++i;
        }
        if (i > b) {
          out.push_back({line.substr(b, i - b), static_cast<int>(b) + 1});
        }
      }
      return out;
    }

    Weight parse_int(Token const& t, int line) {
      Weight value = 0;
      auto [ptr, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        throw ParseError("integer expected, got '" + std::string(t.text) + "'",
                         line,
                         t.column);
      }
      return value;
    }

    class FileParser {
     public:
      explicit FileParser(std::string_view text) : _text(text) {}

      InputFile parse() {
        std::size_t begin = 0;
        while (begin <= _text.size()) {
          std::size_t end = _text.find('\n', begin);
          if (end == std::string_view::npos) {
            end = _text.size();
          }
          ++_line;
          std::string_view line = _text.substr(begin, end - begin);
          if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
          }
          if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
          }
          directive(line);
          begin = end + 1;
        }
        if (!_have_gens) {
          throw ParseError("missing 'gens' line", 0, 0);
        }
        finish_weights();
        return std::move(_f);
      }

     private:
      void directive(std::string_view line) {
        auto const tokens = split(line);
        if (tokens.empty()) {
          return;
        }
        auto const& head = tokens[0];
        if (head.text == "gens") {
          gens(tokens);
          return;
        }
        if (!_have_gens) {
          throw ParseError("'gens' must come first", _line, head.column);
        }
        if (head.text == "rel") {
          rel(line, tokens);
        } else if (head.text == "weights") {
          weights(line, tokens);
        } else if (head.text == "words") {
          words(line, tokens);
        } else {
          throw ParseError("unknown directive '" + std::string(head.text)
                               + "'",
                           _line,
                           head.column);
        }
      }

      void gens(std::vector<Token> const& tokens) {
        if (_have_gens) {
          throw ParseError("second 'gens' line", _line, tokens[0].column);
        }
        _have_gens = true;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string const name(tokens[i].text);
          for (char c : name) {
            if (c == '(' || c == ')' || c == '^' || c == ',' || c == ':') {
              throw ParseError("invalid generator name '" + name + "'",
                               _line,
                               tokens[i].column);
            }
          }
          if (_f.presentation.find_generator(name) >= 0) {
            throw ParseError(
                "generator " + name + " declared twice", _line, tokens[i].column);
          }
          _f.presentation.generators.push_back(name);
        }
      }

      void rel(std::string_view line, std::vector<Token> const& tokens) {
        auto const column = tokens[0].column + 3;
        Word const raw    = detail::parse_word(
            _f.presentation, line.substr(column - 1), _line, column);
        Word const r = cyclic_reduce(raw);
        if (r.empty()) {
          throw ParseError("relator is trivial after reduction",
                           _line,
                           tokens[0].column);
        }
        if (r != raw) {
          _f.notes.push_back("line " + std::to_string(_line) + ": relator "
                             + to_string(_f.presentation, raw)
                             + " reduced to "
                             + to_string(_f.presentation, r));
        }
        _f.presentation.relators.push_back(r);
      }

      void weights(std::string_view line, std::vector<Token> const& tokens) {
        if (tokens.size() < 2) {
          throw ParseError("weights kind expected", _line, tokens[0].column);
        }
        auto const& kind = tokens[1];
        if (kind.text == "unit") {
          if (tokens.size() != 2) {
            throw ParseError("unexpected text", _line, tokens[2].column);
          }
          _saw_unit = true;
        } else if (kind.text == "gen") {
          if (tokens.size() != 4) {
            throw ParseError("usage: weights gen <name> <int>",
                             _line,
                             kind.column);
          }
          int const g = _f.presentation.find_generator(tokens[2].text);
          if (g < 0) {
            throw ParseError("unknown generator '"
                                 + std::string(tokens[2].text) + "'",
                             _line,
                             tokens[2].column);
          }
          Weight const value = parse_int(tokens[3], _line);
          if (value < 0) {
            throw ParseError("negative weight", _line, tokens[3].column);
          }
          if (!_f.weights.per_generator.emplace(g, value).second) {
            throw ParseError("generator weighted twice", _line, kind.column);
          }
        } else if (kind.text == "rel") {
          rel_weights(line, tokens);
        } else {
          throw ParseError("weights kind must be unit, gen or rel",
                           _line,
                           kind.column);
        }
        if (!_f.weights.per_relator.empty()
            && (_saw_unit || !_f.weights.per_generator.empty())) {
          throw ParseError("'weights rel' cannot be mixed with other weights",
                           _line,
                           tokens[0].column);
        }
      }

      void rel_weights(std::string_view line, std::vector<Token> const& tokens) {
        auto const colon = line.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError("usage: weights rel <k>: <int>+",
                           _line,
                           tokens[1].column);
        }
        auto const head = split(line.substr(0, colon));
        if (head.size() != 3) {
          throw ParseError("relator number expected", _line, tokens[1].column);
        }
        Weight const k = parse_int(head[2], _line);
        auto const   n = static_cast<Weight>(_f.presentation.relators.size());
        if (k < 1 || k > n) {
          throw ParseError("no relator " + std::to_string(k), _line,
                           head[2].column);
        }
        std::vector<Weight> ws;
        for (auto const& t : split(line, colon + 1)) {
          Weight const value = parse_int(t, _line);
          if (value < 0) {
            throw ParseError("negative weight", _line, t.column);
          }
          ws.push_back(value);
        }
        auto const& r = _f.presentation.relators[k - 1];
        if (ws.size() != r.size()) {
          throw ParseError("relator " + std::to_string(k) + " has "
                               + std::to_string(r.size()) + " positions, got "
                               + std::to_string(ws.size()) + " weights",
                           _line,
                           head[2].column);
        }
        if (!_f.weights.per_relator.emplace(static_cast<int>(k - 1), ws)
                 .second) {
          throw ParseError("relator weighted twice", _line, head[2].column);
        }
        _rel_line = _line;
      }

      void words(std::string_view line, std::vector<Token> const& tokens) {
        auto const colon = line.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError("usage: words <name>: <word>, ...",
                           _line,
                           tokens[0].column);
        }
        auto const head = split(line.substr(0, colon));
        if (head.size() != 2) {
          throw ParseError("list name expected", _line, tokens[0].column);
        }
        std::string const name(head[1].text);
        if (_f.find_words(name) != nullptr) {
          throw ParseError("word list " + name + " defined twice",
                           _line,
                           head[1].column);
        }
        std::vector<Word> list;
        std::string_view  rest = line.substr(colon + 1);
        auto              base = static_cast<int>(colon) + 2;
        if (rest.find_first_not_of(" \t") != std::string_view::npos) {
          for (;;) {
            auto const comma = rest.find(',');
            auto const piece = rest.substr(0, comma);
            list.push_back(
                detail::parse_word(_f.presentation, piece, _line, base));
            if (comma == std::string_view::npos) {
              break;
            }
            rest = rest.substr(comma + 1);
            base += static_cast<int>(comma) + 1;
          }
        }
        _f.word_lists.emplace_back(name, std::move(list));
      }

      void finish_weights() {
        auto const& per_relator = _f.weights.per_relator;
        if (!per_relator.empty()
            && per_relator.size() != _f.presentation.relators.size()) {
          throw ParseError("'weights rel' must cover every relator",
                           _rel_line,
                           1);
        }
      }

      std::string_view _text;
      InputFile        _f;
      int              _line      = 0;
      int              _rel_line  = 0;
      bool             _have_gens = false;
      bool             _saw_unit  = false;
    };
  }  // namespace

  InputFile parse_input(std::string_view text) {
    return FileParser(text).parse();
  }

  std::string serialize(InputFile const& f) {
    auto const& p = f.presentation;
    std::string out = "gens";
    for (auto const& g : p.generators) {
      out += ' ' + g;
    }
    out += '\n';
    for (auto const& r : p.relators) {
      out += "rel " + to_string(p, r) + '\n';
    }
    if (f.weights.is_unit()) {
      out += "weights unit\n";
    }
    for (auto const& [g, value] : f.weights.per_generator) {
      out += "weights gen " + p.generators[g] + ' ' + std::to_string(value)
             + '\n';
    }
    for (auto const& [k, ws] : f.weights.per_relator) {
      out += "weights rel " + std::to_string(k + 1) + ':';
      for (Weight value : ws) {
        out += ' ' + std::to_string(value);
      }
      out += '\n';
    }
    for (auto const& [name, words] : f.word_lists) {
      out += "words " + name + ':';
      for (std::size_t i = 0; i < words.size(); ++i) {
        out += (i == 0 ? " " : ", ") + to_string(p, words[i]);
      }
      out += '\n';
    }
    return out;
  }

  Weighting make_weighting(InputFile const&                f,
                           std::shared_ptr<Complex2 const> x) {
    if (x->cell_count() != static_cast<int>(f.presentation.relators.size())
        || x->edge_count() != f.presentation.generator_count()) {
      throw PreconditionError("complex does not match the presentation");
    }
    if (!f.weights.per_relator.empty()) {
      std::vector<std::vector<Weight>> sides;
      for (auto const& [k, ws] : f.weights.per_relator) {
        sides.push_back(ws);
      }
      return Weighting(std::move(x), std::move(sides));
    }
    std::vector<Weight> per_edge(x->edge_count(), 1);
    for (auto const& [g, value] : f.weights.per_generator) {
      per_edge[g] = value;
    }
    return edge_weighting(std::move(x), per_edge);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace perim
