// Command-line front end.  Exit codes: 0 success, holds or member; 1 fails
// or not a member; 2 error; 3 inapplicable or uncertified.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "perim/perim.hpp"
#include "perim/report.hpp"

namespace {

  using namespace perim;

  constexpr int exit_ok           = 0;
  constexpr int exit_false        = 1;
  constexpr int exit_error        = 2;
  constexpr int exit_inapplicable = 3;

  // Strings print without JSON quotes.
  std::string plain(perim::Json const& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
  }

  std::vector<std::string> const criterion_ids = {
      "one-relator-torsion", "equalweights",     "min-generator",
      "sc-c6t3",             "sc-c6t3-strict",   "sc-c4t4",
      "sc-c4t4-strict",      "few-occurrences",  "power",
      "small-cancellation",  "all"};

  struct Loaded {
    InputFile                       file;
    std::shared_ptr<Complex2 const> x;
    std::optional<Weighting>        w;
  };

  Loaded load(std::string const& path) {
    Loaded l;
    l.file = parse_input(read_file(path));
    l.x    = std::make_shared<Complex2 const>(
        standard_complex(l.file.presentation));
    l.w.emplace(make_weighting(l.file, l.x));
    return l;
  }

  // A literal comma-separated list, or @name for a list from the file.
  std::vector<Word> word_list(Loaded const& l, std::string const& spec) {
    if (!spec.empty() && spec[0] == '@') {
      auto const* words = l.file.find_words(spec.substr(1));
      if (words == nullptr) {
        throw Error("no word list named " + spec.substr(1));
      }
      return *words;
    }
    return parse_word_list(l.file.presentation, spec);
  }

  std::optional<PeriodExponent> single_relator(Loaded const& l) {
    if (l.file.presentation.relators.size() != 1) {
      return std::nullopt;
    }
    return period_exponent(l.file.presentation.relators[0]);
  }

  Verdict run_criterion(Loaded const& l, std::string const& id) {
    Presentation const& p = l.file.presentation;
    Weighting const&    w = *l.w;
    if (id == "one-relator-torsion") {
      return check_one_relator_torsion(w, &p);
    }
    if (id == "equalweights" || id == "min-generator") {
      auto const pe = single_relator(l);
      if (!pe) {
        return inapplicable(id, "needs exactly one relator");
      }
      return id == "equalweights"
                 ? check_equalweights(pe->period, pe->exponent)
                 : check_min_generator(pe->period, pe->exponent);
    }
    if (id.rfind("sc-", 0) == 0) {
      auto const variant =
          id.find("c6t3") != std::string::npos ? ScVariant::c6t3
                                               : ScVariant::c4t4;
      return check_sc_weight(
          w, variant, id.find("strict") != std::string::npos, &p);
    }
    if (id == "few-occurrences") {
      return check_few_occurrences(p);
    }
    if (id == "power") {
      if (p.relators.empty()) {
        return inapplicable(id, "no relators");
      }
      std::vector<Word> words;
      std::vector<int>  exponents;
      for (Word const& r : p.relators) {
        auto pe = period_exponent(r);
        words.push_back(std::move(pe.period));
        exponents.push_back(pe.exponent);
      }
      try {
        return power_theorem(words, exponents).verdict;
      } catch (PreconditionError const& e) {
        return inapplicable(id, e.what());
      }
    }
    if (id == "small-cancellation") {
      return small_cancellation_verdict(*l.x);
    }
    throw Error("unknown criterion " + id);
  }

  int verdict_code(Verdict const& v) {
    if (!v.applicable()) {
      return exit_inapplicable;
    }
    return v.holds ? exit_ok : exit_false;
  }

  void print_verdict(Verdict const& v) {
    std::cout << v.criterion << ": "
              << (!v.applicable() ? "inapplicable"
                  : v.holds       ? "holds"
                                  : "fails");
    if (v.holds) {
      std::cout << " (" << to_string(v.conclusion) << ")";
    }
    std::cout << '\n';
    for (auto const& n : v.notes) {
      std::cout << "  note: " << n << '\n';
    }
    for (auto const& wit : v.witnesses) {
      std::cout << "  witness:";
      if (wit.cell >= 0) {
        std::cout << " cell " << wit.cell;
      }
      if (wit.start >= 0) {
        std::cout << " start " << wit.start << " length " << wit.length;
      }
      if (!wit.path.empty()) {
        std::cout << " path " << wit.path;
      }
      if (wit.lhs != 0 || wit.rhs != 0) {
        std::cout << " (" << wit.lhs << " vs " << wit.rhs << ")";
      }
      if (!wit.detail.empty()) {
        std::cout << " " << wit.detail;
      }
      std::cout << '\n';
    }
  }

  void write_trace(std::string const& path, std::vector<ReductionTrace> const& ts) {
    if (path.empty()) {
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    for (auto const& t : ts) {
      out << t.to_text();
    }
  }

  void print_presentation(Presentation const& p) {
    std::cout << "< ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      std::cout << (i ? ", " : "") << p.generators[i];
    }
    std::cout << " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      std::cout << (i ? ", " : "") << to_string(p, p.relators[i]);
    }
    std::cout << " >\n";
  }

  void print_certificate(std::optional<Verdict> const& c, bool heuristic) {
    if (c) {
      std::cout << "certificate: " << c->criterion << '\n';
    } else if (heuristic) {
      std::cout << "certificate: none (heuristic answer)\n";
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted perimeter reduction for 2-complexes"};
  app.require_subcommand(1);

  std::string file;
  bool        json = false;
  bool        force = false;
  int         step_limit = 0;
  std::string trace_path;
  std::string criterion = "all";
  std::string gens, gens_h, gens_k, magnus;
  std::string word;
  std::string mode = "strict";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input file")->required();
    cmd->add_flag("--json", json, "print a JSON report");
  };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_flag("--force", force, "answer without a certificate");
    cmd->add_option("--step-limit", step_limit, "stop after this many steps");
    cmd->add_option("--trace", trace_path, "write the reduction trace here");
  };

  auto* info = app.add_subcommand("info", "perimeters, weights and pieces");
  add_common(info);

  auto* check = app.add_subcommand("check", "run a coherence criterion");
  add_common(check);
  check->add_option("--criterion", criterion, "criterion id or all")
      ->check(CLI::IsMember(criterion_ids));

  auto* subgroup = app.add_subcommand("subgroup", "present a subgroup");
  add_common(subgroup);
  add_engine(subgroup);
  subgroup->add_option("--gens", gens, "generators: words or @list")
      ->required();
  subgroup->add_option("--mode", mode, "strict or weak")
      ->check(CLI::IsMember({"strict", "weak"}));

  auto* member_cmd = app.add_subcommand("member", "generalized word problem");
  add_common(member_cmd);
  add_engine(member_cmd);
  member_cmd->add_option("--gens", gens, "generators: words or @list")
      ->required();
  member_cmd->add_option("--word", word, "the word to test")->required();

  auto* intersect_cmd =
      app.add_subcommand("intersect", "intersection of two subgroups");
  add_common(intersect_cmd);
  add_engine(intersect_cmd);
  intersect_cmd->add_option("--gens-h", gens_h, "first subgroup")->required();
  intersect_cmd->add_option("--gens-k", gens_k, "second subgroup");
  intersect_cmd->add_option(
      "--magnus", magnus, "comma-separated generators spanning the second");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    Loaded const          l = load(file);
    Presentation const&   p = l.file.presentation;
    SubgroupOptions       options;
    options.force = force;
    if (step_limit > 0) {
      options.step_limit = step_limit;
    }

    if (info->parsed()) {
      Json const r = info_report(l.file);
      if (json) {
        std::cout << r.dump(2) << '\n';
        return exit_ok;
      }
      for (auto const& n : l.file.notes) {
        std::cout << "note: " << n << '\n';
      }
      for (auto const& e : r["edges"]) {
        std::cout << "P(" << e["generator"].get<std::string>()
                  << ") = " << e["perimeter"] << "  sides " << e["sides"]
                  << '\n';
      }
      for (std::size_t c = 0; c < r["cells"].size(); ++c) {
        auto const& cell = r["cells"][c];
        std::cout << "cell " << c << ": " << cell["relator"].get<std::string>()
                  << "  Wt " << cell["weight"] << "  period "
                  << cell["period"] << "  exponent " << cell["exponent"]
                  << "  longest piece " << cell["longest_piece"]
                  << "  piece cover " << plain(cell["piece_cover"]) << '\n';
      }
      auto const& sc = r["small_cancellation"];
      std::cout << "C(6) " << sc["C(6)"] << "  C(4) " << sc["C(4)"]
                << "  T(3) " << sc["T(3)"] << "  T(4) " << sc["T(4)"]
                << "  largest n with C'(1/n) " << plain(sc["largest_C'(1/n)"])
                << "  (T(q) via link girth)\n";
      return exit_ok;
    }

    if (check->parsed()) {
      if (criterion != "all") {
        Verdict const v = run_criterion(l, criterion);
        if (json) {
          std::cout << to_json(v).dump(2) << '\n';
        } else {
          print_verdict(v);
        }
        return verdict_code(v);
      }
      Json all  = Json::array();
      int  code = exit_inapplicable;
      for (auto const& id : criterion_ids) {
        if (id == "all") {
          continue;
        }
        Verdict const v = run_criterion(l, id);
        if (v.holds && v.conclusion != Conclusion::none) {
          code = exit_ok;
        } else if (v.applicable() && code == exit_inapplicable) {
          code = exit_false;
        }
        if (json) {
          all.push_back(to_json(v));
        } else {
          print_verdict(v);
        }
      }
      if (json) {
        std::cout << all.dump(2) << '\n';
      }
      return code;
    }

    if (subgroup->parsed()) {
      auto const words = word_list(l, gens);
      SubgroupResult r;
      if (mode == "weak") {
        if (!options.step_limit) {
          throw Error("weak mode needs --step-limit");
        }
        auto red = reduce(bouquet_map(l.x, words),
                          *l.w,
                          {Mode::weak, options.step_limit, false});
        r.heuristic    = true;
        r.exhausted    = red.exhausted;
        r.complex      = red.map;
        r.presentation = extract_presentation(red.map);
        r.traces.push_back(std::move(red.trace));
      } else {
        r = subgroup_presentation(p, *l.w, words, options);
      }
      write_trace(trace_path, r.traces);
      if (json) {
        std::cout << to_json(r, p).dump(2) << '\n';
      } else {
        print_certificate(r.certificate, r.heuristic);
        print_presentation(r.presentation.presentation);
        for (std::size_t i = 0; i < r.presentation.generator_images.size();
             ++i) {
          std::cout << "  x" << i + 1 << " = "
                    << to_string(p, r.presentation.generator_images[i])
                    << '\n';
        }
        if (r.exhausted) {
          std::cout << "step limit reached\n";
        }
      }
      return r.exhausted ? exit_inapplicable : exit_ok;
    }

    if (member_cmd->parsed()) {
      auto const words = word_list(l, gens);
      Word const u     = parse_word(p, word);
      auto const r     = member(p, *l.w, words, u, options);
      write_trace(trace_path, {r.trace});
      if (json) {
        std::cout << to_json(r).dump(2) << '\n';
      } else {
        print_certificate(r.certificate, r.heuristic);
        std::cout << (r.member ? "true" : "false") << '\n';
      }
      if (r.exhausted) {
        return exit_inapplicable;
      }
      return r.member ? exit_ok : exit_false;
    }

    if (intersect_cmd->parsed()) {
      auto const     h = word_list(l, gens_h);
      SubgroupResult r;
      if (!magnus.empty()) {
        std::set<int> m;
        for (Word const& g : parse_word_list(p, magnus)) {
          if (g.size() != 1 || is_inverse(g[0])) {
            throw Error("--magnus takes generator names");
          }
          m.insert(generator_of(g[0]));
        }
        r = magnus_intersect(p, m, h, options);
      } else {
        r = intersect(p, *l.w, h, word_list(l, gens_k), options);
      }
      write_trace(trace_path, r.traces);
      if (json) {
        std::cout << to_json(r, p).dump(2) << '\n';
      } else {
        print_certificate(r.certificate, r.heuristic);
        print_presentation(r.presentation.presentation);
        for (std::size_t i = 0; i < r.presentation.generator_images.size();
             ++i) {
          std::cout << "  x" << i + 1 << " = "
                    << to_string(p, r.presentation.generator_images[i])
                    << '\n';
        }
      }
      return r.exhausted ? exit_inapplicable : exit_ok;
    }
  } catch (NoCertificate const& e) {
    std::cerr << "uncertified: " << e.what() << '\n';
    return exit_inapplicable;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
