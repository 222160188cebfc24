#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "wreath/bijection.hpp"
#include "wreath/closed_forms.hpp"
#include "wreath/core.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/registry.hpp"
#include "wreath/series.hpp"
#include "wreath/verify.hpp"

// Exit codes: 0 success, 1 a verification or oracle comparison failed,
// 2 bad arguments or malformed input, 3 enumeration refused by the budget.

using nlohmann::ordered_json;
using namespace wreath;

namespace {

Mode parse_mode(const std::string& text) {
  if (text == "reduced") return Mode::reduced;
  if (text == "exact") return Mode::exact;
  throw std::runtime_error("mode must be 'reduced' or 'exact'");
}

ordered_json base_json(const char* command) {
  ordered_json j;
  j["schema"] = "wreath/1";
  j["command"] = command;
  return j;
}

ordered_json pattern_list(const PatternSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : s.patterns()) arr.push_back(to_text(p));
  return arr;
}

void print_rows(const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  const char sep = format == "csv" ? ',' : ' ';
  std::vector<std::size_t> width(header.size());
  if (format == "table") {
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) std::cout << sep;
      if (format == "table")
        std::cout << row[c] << std::string(width[c] - row[c].size() + (c + 1 < row.size()), ' ');
      else
        std::cout << row[c];
    }
    std::cout << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

std::string mode_name(Mode m) { return m == Mode::reduced ? "reduced" : "exact"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern occurrence and avoidance in colored permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --budget and --jobs may follow the subcommand

  std::string format = "table";
  long long budget = kDefaultBudget;
  int jobs = 0;
  app.add_option("--budget", budget, "largest k^n * n! an enumeration may touch")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for enumeration (0 = library default)");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };

  int n = 0, k = 0, n_max = 0, order = kDefaultOrder, variant = 0;
  std::string patterns_text, pattern_text, mode_text = "reduced", id, family, element_text;
  bool list = false, oracle = false, as_json = false, certify = false, art = false;

  CLI::App* count_cmd = app.add_subcommand("count", "count avoiders of a pattern set");
  count_cmd->add_option("--n", n, "size of the permutations")->required();
  count_cmd->add_option("--k", k, "number of colors")->required();
  count_cmd->add_option("--patterns", patterns_text, "pattern set, e.g. '1-2/0,0;1-2/0,1'")
      ->required();
  count_cmd->add_option("--mode", mode_text, "color matching: reduced or exact");
  add_format(count_cmd);

  CLI::App* seq_cmd = app.add_subcommand("sequence", "avoider counts for n = 1..n-max");
  seq_cmd->add_option("--k", k, "number of colors")->required();
  seq_cmd->add_option("--n-max", n_max, "largest n to attempt")->required();
  seq_cmd->add_option("--patterns", patterns_text, "pattern set")->required();
  seq_cmd->add_option("--mode", mode_text, "color matching: reduced or exact");
  add_format(seq_cmd);

  CLI::App* dist_cmd =
      app.add_subcommand("distribution", "elements by number of occurrences of one pattern");
  dist_cmd->add_option("--n", n, "size of the permutations")->required();
  dist_cmd->add_option("--k", k, "number of colors")->required();
  dist_cmd->add_option("--pattern", pattern_text, "single pattern, e.g. '1-2/0,0'")->required();
  dist_cmd->add_option("--mode", mode_text, "color matching: reduced or exact");
  add_format(dist_cmd);

  CLI::App* formula_cmd = app.add_subcommand("formula", "evaluate a registered closed form");
  formula_cmd->add_option("--id", id, "formula identifier (see --list)");
  formula_cmd->add_option("--n", n, "size of the permutations");
  formula_cmd->add_option("--k", k, "number of colors (fixed by some formulas)");
  formula_cmd->add_flag("--list", list, "list the registry instead of evaluating");
  formula_cmd->add_flag("--oracle", oracle, "also enumerate and compare");
  add_format(formula_cmd);

  CLI::App* series_cmd = app.add_subcommand("series", "coefficient families from the series module");
  series_cmd
      ->add_option("--family", family, "partial (A002720 recursion), ogf or ogf-expansion")
      ->required()
      ->check(CLI::IsMember({"partial", "ogf", "ogf-expansion"}));
  series_cmd->add_option("--k", k, "number of colors (ogf families)");
  series_cmd->add_option("--order", order, "largest coefficient index")->capture_default_str();
  add_format(series_cmd);

  CLI::App* bij_cmd = app.add_subcommand("bijection", "lattice and Dyck images of bi-avoiders");
  bij_cmd->add_option("--element", element_text,
                      "colored permutation, e.g. 'sigma=2,1 colors=0,1 k=2'");
  bij_cmd->add_flag("--certify", certify, "enumerate all avoiders for --n and certify the map");
  bij_cmd->add_option("--n", n, "size used with --certify");
  bij_cmd->add_flag("--art", art, "draw the dot matrix with block outlines");
  bij_cmd->add_flag("--json", as_json, "emit json instead of text");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the formula and property checks");
  std::vector<std::string> selected;
  int max_k = 8;
  verify_cmd->add_option("--check", selected, "run only the named checks");
  verify_cmd->add_option("--max-k", max_k, "alphabet sweep bound for formula checks")
      ->capture_default_str();
  verify_cmd->add_flag("--json", as_json, "emit json instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (count_cmd->parsed()) {
      PatternSet s = parse_pattern_set(patterns_text, parse_mode(mode_text));
      const BigInt value = count_avoiders({n, k, budget}, s);
      if (format == "json") {
        ordered_json j = base_json("count");
        j["n"] = n, j["k"] = k;
        j["mode"] = mode_name(s.mode());
        j["patterns"] = pattern_list(s);
        j["count"] = value.str();
        std::cout << j.dump(2) << '\n';
      } else {
        print_rows(format, {"n", "k", "avoiders"},
                   {{std::to_string(n), std::to_string(k), value.str()}});
      }
    } else if (seq_cmd->parsed()) {
      PatternSet s = parse_pattern_set(patterns_text, parse_mode(mode_text));
      SequenceResult seq = sequence(k, s, n_max, budget);
      if (format == "json") {
        ordered_json j = base_json("sequence");
        j["k"] = k;
        j["mode"] = mode_name(s.mode());
        j["patterns"] = pattern_list(s);
        ordered_json vals = ordered_json::array();
        for (const auto& v : seq.values) vals.push_back(v.str());
        j["values"] = vals;
        j["truncated_at"] = seq.truncated_at ? ordered_json(*seq.truncated_at) : ordered_json();
        std::cout << j.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < seq.values.size(); ++i)
          rows.push_back({std::to_string(i + 1), seq.values[i].str()});
        print_rows(format, {"n", "avoiders"}, rows);
        if (seq.truncated_at)
          std::cerr << "stopped before n=" << *seq.truncated_at << ": budget exceeded\n";
      }
    } else if (dist_cmd->parsed()) {
      ColoredPattern p = parse_pattern(pattern_text, parse_mode(mode_text));
      CountTable table = distribution({n, k, budget}, p);
      if (format == "json") {
        ordered_json j = base_json("distribution");
        j["n"] = n, j["k"] = k;
        j["mode"] = mode_name(p.mode());
        j["pattern"] = to_text(p);
        ordered_json counts = ordered_json::array();
        for (const auto& [occ, cnt] : table.counts) {
          ordered_json row;
          row["occurrences"] = occ;
          row["count"] = cnt.str();
          counts.push_back(row);
        }
        j["counts"] = counts;
        j["total"] = table.total().str();
        std::cout << j.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [occ, cnt] : table.counts)
          rows.push_back({std::to_string(occ), cnt.str()});
        print_rows(format, {"occurrences", "count"}, rows);
      }
    } else if (formula_cmd->parsed()) {
      if (list) {
        if (format == "json") {
          ordered_json j = base_json("formula");
          ordered_json arr = ordered_json::array();
          for (const auto& e : formula_registry()) {
            ordered_json row;
            row["id"] = e.id;
            row["mode"] = mode_name(e.mode);
            row["patterns"] = pattern_list(e.patterns);
            row["fixed_k"] = e.fixed_k;
            row["min_n"] = e.min_n;
            row["description"] = e.description;
            arr.push_back(row);
          }
          j["formulas"] = arr;
          std::cout << j.dump(2) << '\n';
        } else {
          std::vector<std::vector<std::string>> rows;
          for (const auto& e : formula_registry())
            rows.push_back({e.id, mode_name(e.mode), to_text(e.patterns),
                            e.fixed_k ? std::to_string(e.fixed_k) : std::string("any"),
                            std::to_string(e.min_n), e.description});
          print_rows(format, {"id", "mode", "patterns", "k", "min_n", "description"}, rows);
        }
        return 0;
      }
      const FormulaEntry* entry = find_formula(id);
      if (!entry) throw std::runtime_error("unknown formula id '" + id + "'");
      if (entry->fixed_k != 0) {
        if (k != 0 && k != entry->fixed_k)
          throw std::runtime_error("formula '" + id + "' is specific to k=" +
                                   std::to_string(entry->fixed_k));
        k = entry->fixed_k;
      } else if (k <= 0) {
        throw std::runtime_error("formula '" + id + "' needs --k");
      }
      if (n < entry->min_n)
        throw std::runtime_error("formula '" + id + "' needs n >= " +
                                 std::to_string(entry->min_n));
      const BigInt value = entry->value(n, k);
      std::optional<BigInt> counted;
      if (oracle) counted = count_avoiders({n, k, budget}, entry->patterns);
      if (format == "json") {
        ordered_json j = base_json("formula");
        j["id"] = entry->id;
        j["n"] = n, j["k"] = k;
        j["mode"] = mode_name(entry->mode);
        j["patterns"] = pattern_list(entry->patterns);
        j["value"] = value.str();
        if (counted) {
          j["oracle"] = counted->str();
          j["match"] = *counted == value;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::vector<std::string> header = {"id", "n", "k", "value"};
        std::vector<std::string> row = {entry->id, std::to_string(n), std::to_string(k),
                                        value.str()};
        if (counted) {
          header.insert(header.end(), {"oracle", "match"});
          row.insert(row.end(), {counted->str(), *counted == value ? "yes" : "NO"});
        }
        print_rows(format, header, {row});
      }
      if (counted && *counted != value) return 1;
    } else if (series_cmd->parsed()) {
      AvSequence values;
      if (family == "partial") {
        values = partial_permutation_counts(order);
      } else {
        if (k <= 0) throw std::runtime_error("family '" + family + "' needs --k");
        values = family == "ogf" ? rational_ogf_counts(k, order)
                                 : rational_ogf_counts_by_expansion(k, order);
      }
      if (format == "json") {
        ordered_json j = base_json("series");
        j["family"] = family;
        if (family != "partial") j["k"] = k;
        ordered_json vals = ordered_json::array();
        for (const auto& v : values) vals.push_back(v.str());
        j["values"] = vals;
        std::cout << j.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < values.size(); ++i)
          rows.push_back({std::to_string(i), values[i].str()});
        print_rows(format, {"n", "count"}, rows);
      }
    } else if (bij_cmd->parsed()) {
      if (certify) {
        CertifyReport report = certify_bijection(n, budget);
        if (as_json) {
          ordered_json j = base_json("bijection");
          j["n"] = report.n;
          j["avoiders"] = report.avoider_count.str();
          j["expected"] = report.expected.str();
          j["images_valid"] = report.images_valid;
          j["images_distinct"] = report.images_distinct;
          j["passed"] = report.passed();
          if (!report.failure.empty()) j["failure"] = report.failure;
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "n=" << report.n << "  avoiders=" << report.avoider_count.str()
                    << "  expected=" << report.expected.str()
                    << "  valid=" << (report.images_valid ? "yes" : "no")
                    << "  distinct=" << (report.images_distinct ? "yes" : "no") << '\n';
          if (!report.failure.empty()) std::cout << "failure: " << report.failure << '\n';
          std::cout << (report.passed() ? "certified" : "FAILED") << '\n';
        }
        return report.passed() ? 0 : 1;
      }
      if (element_text.empty())
        throw std::runtime_error("bijection needs --element or --certify with --n");
      ColoredPermutation g = parse_colored_permutation(element_text);
      LatticePath path = to_lattice_path(g);
      DyckPath dyck = to_dyck(path);
      BlockDecomposition blocks = reverse_irreducible_blocks(g.perm);
      auto forced = g.size() > 0 ? forced_colors(g.perm) : std::vector<std::optional<int>>{};
      if (as_json) {
        ordered_json j = base_json("bijection");
        j["element"] = to_text(g);
        ordered_json blist = ordered_json::array();
        for (const auto& b : blocks.blocks) blist.push_back({b.lo, b.hi});
        j["blocks"] = blist;
        ordered_json flist = ordered_json::array();
        for (const auto& f : forced) flist.push_back(f ? ordered_json(*f) : ordered_json());
        j["forced_colors"] = flist;
        j["lattice"] = to_string(path);
        j["dyck"] = to_string(dyck);
        j["touches_boundary"] = touches_boundary(path);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "element: " << to_text(g) << '\n';
        std::cout << "blocks:";
        for (const auto& b : blocks.blocks) std::cout << " [" << b.lo << "," << b.hi << "]";
        std::cout << '\n' << "forced colors:";
        for (const auto& f : forced) std::cout << ' ' << (f ? std::to_string(*f) : "*");
        std::cout << '\n';
        std::cout << "lattice: " << to_string(path) << '\n';
        std::cout << "dyck:    " << to_string(dyck) << '\n';
        if (art) std::cout << matrix_art(g);
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.budget = budget == kDefaultBudget ? BigInt(1'000'000) : BigInt(budget);
      options.max_k = max_k;
      struct NamedCheck {
        const char* id;
        std::function<CheckResult(const VerifyOptions&)> run;
      };
      const std::vector<NamedCheck> checks = {
          {"reduce-properties", [](const VerifyOptions&) { return check_reduction_properties(); }},
          {"match-window", [](const VerifyOptions& o) { return check_match_occurrence(o.budget); }},
          {"phi-transport", [](const VerifyOptions& o) { return check_phi_transport(o.budget); }},
          {"phi-classes", [](const VerifyOptions& o) { return check_phi_classes(o.budget); }},
          {"classical-k1",
           [](const VerifyOptions& o) { return check_classical_degeneration(o.budget); }},
          {"formula-oracle",
           [](const VerifyOptions& o) { return check_formulas(o.budget, o.max_k); }},
          {"exact-single-all",
           [](const VerifyOptions& o) { return check_exact_single_all_patterns(o.budget); }},
          {"mahonian-table", [](const VerifyOptions&) { return check_mahonian_table(); }},
          {"distribution-mahonian",
           [](const VerifyOptions& o) { return check_distribution_mahonian(o.budget); }},
          {"partial-permutations",
           [](const VerifyOptions&) { return check_partial_permutation_identities(); }},
          {"ogf-three-routes", [](const VerifyOptions& o) { return check_ogf_routes(o.budget); }},
          {"egf-power", [](const VerifyOptions&) { return check_egf_product(); }},
          {"reference-sequences",
           [](const VerifyOptions& o) { return check_reference_sequences(o.budget); }},
          {"rise-01-sequence", [](const VerifyOptions& o) { return check_a002720(o.budget); }},
          {"catalan-bijection",
           [](const VerifyOptions& o) { return check_catalan_certification(o.budget); }},
          {"forced-colors", [](const VerifyOptions& o) { return check_forced_colors(o.budget); }},
          {"boundary-touch", [](const VerifyOptions& o) { return check_boundary_touch(o.budget); }},
          {"serial-parallel", [](const VerifyOptions& o) { return check_serial_parallel(o.budget); }},
      };
      for (const std::string& want : selected) {
        bool known = false;
        for (const auto& c : checks) known = known || want == c.id;
        if (!known) throw std::runtime_error("unknown check id '" + want + "'");
      }
      std::vector<CheckResult> results;
      for (const auto& c : checks) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
          continue;
        results.push_back(c.run(options));
      }
      bool all = true;
      for (const auto& r : results) all = all && r.pass;
      if (as_json) {
        ordered_json j = base_json("verify");
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
          ordered_json row;
          row["id"] = r.id;
          row["pass"] = r.pass;
          row["detail"] = r.detail;
          arr.push_back(row);
        }
        j["results"] = arr;
        j["passed"] = all;
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& r : results)
          std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.detail << '\n';
        std::cout << results.size() << " checks, "
                  << (all ? "all passed" : "at least one FAILED") << '\n';
      }
      return all ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
