// Command-line front end: group construction, coset tables, reduced
// expressions, subordinate paths, termini, Hasse diagrams, and the
// verification suite. All primary output goes to stdout and is
// byte-deterministic for a fixed invocation; timings go to stderr.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "dcoset/coset.hpp"
#include "dcoset/coxeter.hpp"
#include "dcoset/expression.hpp"
#include "dcoset/io.hpp"
#include "dcoset/paths.hpp"
#include "dcoset/verify.hpp"

namespace {

struct GroupSource {
  std::string preset;
  std::string file;
  std::size_t cap = 100000;

  std::unique_ptr<dcoset::CoxeterGroup> load() const {
    if (preset.empty() == file.empty())
      throw dcoset::ParseError("choose exactly one of --preset and --file");
    if (!preset.empty())
      return std::make_unique<dcoset::CoxeterGroup>(dcoset::preset_matrix(preset), cap,
                                                    preset);
    std::ifstream in(file);
    if (!in) throw dcoset::ParseError("cannot open group file '" + file + "'");
    return std::make_unique<dcoset::CoxeterGroup>(dcoset::parse_group_file(in), cap,
                                                  file);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "group preset (A1xA1, A2, A3, B2, B3, H3, I2(k))");
    cmd->add_option("--file", file, "group file: 'rank N' then 'm i j v' lines");
    cmd->add_option("--cap", cap, "enumeration guard (max elements)")
        ->default_val(std::size_t{100000});
  }
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order on double cosets of finite Coxeter groups"};
  app.require_subcommand(1);

  GroupSource src;
  std::string opt_i, opt_j, opt_min, opt_expr, opt_dot, opt_checks;
  int opt_width_cap = -1;

  CLI::App* cmd_group = app.add_subcommand("group", "print the group description");
  src.attach(cmd_group);

  CLI::App* cmd_cosets = app.add_subcommand("cosets", "tabulate the (I,J)-cosets");
  src.attach(cmd_cosets);
  cmd_cosets->add_option("-I", opt_i, "left subset, 1-indexed, e.g. \"1 2\"");
  cmd_cosets->add_option("-J", opt_j, "right subset");

  CLI::App* cmd_rex =
      app.add_subcommand("rex", "a reduced expression for the coset of --min");
  src.attach(cmd_rex);
  cmd_rex->add_option("-I", opt_i, "left subset");
  cmd_rex->add_option("-J", opt_j, "right subset");
  cmd_rex->add_option("--min", opt_min, "coset representative word, hyphen-joined");

  CLI::App* cmd_paths = app.add_subcommand("paths", "paths subordinate to --expr");
  src.attach(cmd_paths);
  cmd_paths->add_option("--expr", opt_expr, "expression, e.g. \"[1],[1 2],[1]\"")
      ->required();

  CLI::App* cmd_term = app.add_subcommand("term", "termini of --expr as a coset table");
  src.attach(cmd_term);
  cmd_term->add_option("--expr", opt_expr, "expression")->required();

  CLI::App* cmd_hasse =
      app.add_subcommand("hasse", "Bruhat order of the (I,J)-cosets as DOT");
  src.attach(cmd_hasse);
  cmd_hasse->add_option("-I", opt_i, "left subset");
  cmd_hasse->add_option("-J", opt_j, "right subset");
  cmd_hasse->add_option("--dot", opt_dot, "output path (stdout when omitted)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  src.attach(cmd_verify);
  cmd_verify->add_option("--width-cap", opt_width_cap,
                         "expression width bound (default: 6 for rank <= 2, else 5)");
  cmd_verify->add_option("--checks", opt_checks, "comma-separated check names");
  bool opt_list = false;
  cmd_verify->add_flag("--list-checks", opt_list, "list check names and statements");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_verify->parsed() && opt_list) {
      for (const auto& [name, statement] : dcoset::check_manifest())
        std::cout << name << '\t' << statement << '\n';
      return 0;
    }

    const auto group = src.load();
    const dcoset::CoxeterGroup& g = *group;

    if (cmd_group->parsed()) {
      std::cout << "# " << g.name() << ": order " << g.size() << ", longest element "
                << dcoset::render_word(g, g.longest_element(dcoset::GenSet::all(g.rank())))
                << " (length "
                << g.parabolic_length(dcoset::GenSet::all(g.rank())) << ")\n";
      std::cout << "rank " << g.rank() << "\n";
      for (int s = 0; s < g.rank(); ++s)
        for (int t = s + 1; t < g.rank(); ++t)
          std::cout << "m " << (s + 1) << " " << (t + 1) << " " << g.matrix().m(s, t)
                    << "\n";
      return 0;
    }

    if (cmd_cosets->parsed()) {
      const auto i = dcoset::parse_gen_set(opt_i, g.rank());
      const auto j = dcoset::parse_gen_set(opt_j, g.rank());
      dcoset::write_cosets_tsv(std::cout, dcoset::enumerate_cosets(g, i, j));
      return 0;
    }

    if (cmd_rex->parsed()) {
      const auto i = dcoset::parse_gen_set(opt_i, g.rank());
      const auto j = dcoset::parse_gen_set(opt_j, g.rank());
      const auto w = dcoset::parse_word(g, opt_min);
      const auto p = dcoset::coset_of(g, w, i, j);
      std::cout << dcoset::render_expr(dcoset::find_reduced_expression(p)) << "\n";
      return 0;
    }

    if (cmd_paths->parsed()) {
      const auto e = dcoset::parse_expr(g, opt_expr);
      const auto paths = dcoset::enumerate_paths(e);
      for (std::size_t k = 0; k < paths.size(); ++k) {
        const dcoset::DoubleCoset& t = paths[k].terminus();
        std::cout << "path " << (k + 1) << " of " << paths.size()
                  << ": terminus min=" << dcoset::render_word(g, t.min_elem())
                  << " max=" << dcoset::render_word(g, t.max_elem()) << " length="
                  << t.length() << "\n"
                  << dcoset::render_path(paths[k]) << "\n";
      }
      return 0;
    }

    if (cmd_term->parsed()) {
      const auto e = dcoset::parse_expr(g, opt_expr);
      dcoset::write_cosets_tsv(std::cout, dcoset::term_set(e));
      return 0;
    }

    if (cmd_hasse->parsed()) {
      const auto i = dcoset::parse_gen_set(opt_i, g.rank());
      const auto j = dcoset::parse_gen_set(opt_j, g.rank());
      const auto cosets = dcoset::enumerate_cosets(g, i, j);
      if (opt_dot.empty()) {
        dcoset::write_hasse_dot(std::cout, cosets);
      } else {
        std::ofstream out(opt_dot);
        if (!out) throw dcoset::Error("cannot open '" + opt_dot + "' for writing");
        dcoset::write_hasse_dot(out, cosets);
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      dcoset::SuiteOptions opts;
      opts.width_cap = opt_width_cap >= 0 ? opt_width_cap : (g.rank() <= 2 ? 6 : 5);
      opts.checks = split_csv(opt_checks);
      const auto results = dcoset::run_suite(g, opts);
      dcoset::write_report_tsv(std::cout, results);
      dcoset::write_report_summary(std::cout, results);
      bool ok = true;
      for (const auto& r : results) {
        std::cerr << r.check << ": " << r.elapsed_ms << " ms\n";
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const dcoset::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
