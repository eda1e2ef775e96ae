// weylbn: command-line front end for the verification suites.
//
// Exit status: 0 all cases pass, 1 some case failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylbn/cosets.hpp"
#include "weylbn/errors.hpp"
#include "weylbn/rootsys.hpp"
#include "weylbn/suites.hpp"
#include "weylbn/titssys.hpp"
#include "weylbn/weyl.hpp"

using namespace weylbn;

namespace {

constexpr int kUsage = 2;

enum class Format { Text, Json, Csv };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string short_value(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// The part of `actual` worth a glance on one text line.
std::string summarize(const Json& actual, const Json& expected) {
  if (!actual.is_object()) return short_value(actual);
  if (expected.is_object()) {
    Json picked = Json::object();
    for (const auto& [k, v] : expected.items())
      if (actual.contains(k)) picked[k] = actual[k];
    if (!picked.empty()) return picked.dump();
  }
  for (const char* key : {"count", "cells", "orbit"})
    if (actual.contains(key)) return actual[key].dump();
  return actual.contains("pass") ? "pass=" + actual["pass"].dump() : actual.dump();
}

void print_suites(const std::vector<SuiteResult>& suites, Format format, bool timing, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << report_document(suites, timing).dump(2) << '\n';
      return;
    case Format::Csv:
      out << "suite,id,pass,expected,actual\n";
      for (const auto& s : suites)
        for (const auto& c : s.cases)
          out << csv_field(s.suite_id) << ',' << csv_field(c.id) << ',' << (c.pass ? "true" : "false") << ','
              << csv_field(c.expected.dump()) << ',' << csv_field(c.actual.dump()) << '\n';
      return;
    case Format::Text:
      for (const auto& s : suites) {
        out << s.suite_id << ": " << s.passed() << "/" << s.total() << " passed";
        if (timing) out << " (" << s.wall_time_ms << " ms)";
        out << '\n';
        for (const auto& c : s.cases)
          out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  expected " << short_value(c.expected)
              << "  actual " << summarize(c.actual, c.expected) << '\n';
      }
      return;
  }
}

int status(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites)
    if (!s.pass()) return 1;
  return 0;
}

RootSystemSpec parse_spec(const std::string& family, int rank) {
  RootSystemSpec spec{parse_family(family), rank};
  spec.validate();
  return spec;
}

Json root_table(const RootSystem& rs) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < rs.size(); ++i)
    rows.push_back({{"index", i}, {"coords", rs.root(i)}, {"simple_coefficients", rs.simple_coefficients(i)},
                    {"positive", rs.is_positive(i)}});
  return rows;
}

std::string join_ints(const IntVector& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group double cosets and Tits system checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int jobs = 1;
  bool timing = false;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--timing", timing, "Include wall times in the output");

  auto* lemma2 = app.add_subcommand("lemma2", "Double-coset sweep with witness, w0 and bound checks");
  int max_rank = 8;
  std::vector<std::string> family_names;
  lemma2->add_option("--max-rank", max_rank, "Largest rank (2..12)");
  lemma2->add_option("--family", family_names, "Restrict to these families (repeatable)");

  auto* bn = app.add_subcommand("bn", "Check a Tits system");
  std::vector<int> sl, sl_rank1, projective;
  int affine = 0;
  std::string example;
  bn->add_option("--sl", sl, "Standard system of SL_n(F_p): N P")->expected(2);
  bn->add_option("--sl-rank1", sl_rank1, "Rank-1 column system in SL_n(F_p): N P")->expected(2);
  bn->add_option("--projective", projective, "SL_n(F_p) on P^(n-1)(F_p): N P")->expected(2);
  bn->add_option("--affine", affine, "F_p semidirect F_p^x on the line: P");
  bn->add_option("--example", example, "Named example")->check(CLI::IsMember({"psl3f2-nonstandard"}));

  auto* roots = app.add_subcommand("roots", "List a root system");
  std::string type;
  int rank = 0;
  roots->add_option("type", type, "Family (A..G, BC)")->required();
  roots->add_option("rank", rank, "Rank")->required();

  auto* words = app.add_subcommand("reduced-words", "All reduced words of a Weyl group element");
  std::string word_text;
  std::size_t cap = 1'000'000;
  words->add_option("type", type, "Family (A..G, BC)")->required();
  words->add_option("rank", rank, "Rank")->required();
  words->add_option("word", word_text, "Word in simple reflections, 1-based, e.g. \"2 1 3 2\"")->required();
  words->add_option("--cap", cap, "Stop after this many words")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "Run every suite and emit one JSON document");
  bool all = false;
  std::string output;
  report->add_flag("--all", all, "Run all suites")->required();
  report->add_option("--output", output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  try {
    if (*lemma2) {
      if (max_rank < 2 || max_rank > 12) throw InvalidSpec("--max-rank must lie in 2..12");
      std::vector<Family> families;
      for (const auto& f : family_names) families.push_back(parse_family(f));
      std::vector<SuiteResult> suites{suite_lemma2(max_rank, families, jobs), suite_witness(max_rank, families),
                                      suite_case1(max_rank, families), suite_w0(max_rank, families)};
      print_suites(suites, format, timing, std::cout);
      return status(suites);
    }

    if (*bn) {
      const int chosen = !sl.empty() + !sl_rank1.empty() + !projective.empty() + (affine != 0) + !example.empty();
      if (chosen != 1) throw InvalidSpec("bn needs exactly one of --sl, --sl-rank1, --projective, --affine, --example");
      std::vector<SuiteResult> suites;
      if (!sl.empty()) {
        suites.push_back(suite_bn(standard_sl_system(sl[0], sl[1]), std::pair{sl[0], sl[1]}));
      } else if (!sl_rank1.empty()) {
        suites.push_back(suite_bn(sl_rank1_column_system(sl_rank1[0], sl_rank1[1])));
      } else if (!projective.empty()) {
        suites.push_back(suite_bn(sl_projective_system(projective[0], projective[1])));
      } else if (affine != 0) {
        suites.push_back(suite_bn(affine_system(affine)));
      } else {
        suites.push_back(suite_nonstandard());
        suites.push_back(suite_bn(psl3f2_nonstandard().candidate));
      }
      print_suites(suites, format, timing, std::cout);
      return status(suites);
    }

    if (*roots) {
      const RootSystem rs = build_root_system(parse_spec(type, rank));
      const Json table = root_table(rs);
      if (format == Format::Json) {
        std::cout << Json{{"schema", 1}, {"type", rs.spec().label()}, {"scale", rs.scale()}, {"roots", table}}.dump(2)
                  << '\n';
      } else if (format == Format::Csv) {
        std::cout << "index,coords,simple_coefficients,positive\n";
        for (std::size_t i = 0; i < rs.size(); ++i)
          std::cout << i << ',' << join_ints(rs.root(i), " ") << ',' << join_ints(rs.simple_coefficients(i), " ") << ','
                    << (rs.is_positive(i) ? "true" : "false") << '\n';
      } else {
        std::cout << "# " << rs.spec().label() << ", " << rs.size() << " roots, scale " << rs.scale() << '\n';
        for (std::size_t i = 0; i < rs.size(); ++i)
          std::cout << i << "  (" << join_ints(rs.root(i), ",") << ")  [" << join_ints(rs.simple_coefficients(i), ",")
                    << "]  " << (rs.is_positive(i) ? "+" : "-") << '\n';
      }
      return 0;
    }

    if (*words) {
      const RootSystemSpec spec = parse_spec(type, rank);
      const WeylGroup W(build_root_system(spec));
      const Word w = parse_word(word_text, spec.rank);
      const WeylElement x = W.element_of(w);
      const ReducedWordSet set = W.reduced_words(x, cap);
      if (format == Format::Json) {
        Json list = Json::array();
        for (const auto& r : set.words) list.push_back(format_word(r));
        std::cout << Json{{"schema", 1},
                          {"type", spec.label()},
                          {"word", format_word(w)},
                          {"length", x.length()},
                          {"reduced_words", list},
                          {"count", set.words.size()},
                          {"braid_connected", set.braid_connected}}
                         .dump(2)
                  << '\n';
      } else if (format == Format::Csv) {
        std::cout << "index,word\n";
        for (std::size_t i = 0; i < set.words.size(); ++i) std::cout << i << ',' << format_word(set.words[i]) << '\n';
      } else {
        std::cout << "# " << spec.label() << " length " << x.length() << ", " << set.words.size()
                  << " reduced word(s), braid graph " << (set.braid_connected ? "connected" : "DISCONNECTED") << '\n';
        for (const auto& r : set.words) std::cout << '[' << format_word(r) << "]\n";
      }
      return set.braid_connected ? 0 : 1;
    }

    if (*report) {
      const auto suites = run_all(jobs);
      const std::string doc = report_document(suites, timing).dump(2) + "\n";
      if (output.empty()) {
        std::cout << doc;
      } else {
        std::ofstream file(output);
        if (!file) throw InvalidSpec("cannot write " + output);
        file << doc;
      }
      return status(suites);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
