#include "puiseux/cli/run.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"
#include "puiseux/cli/parse.hpp"
#include "puiseux/cli/report.hpp"
#include "puiseux/cli/svg.hpp"

namespace puiseux::cli {

namespace {

constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string a, b, form_file;
  bool json = false;
  std::string svg, mu;
  long max_exp = 40;
  long max_ram = 16;
  std::size_t max_branches = 64;
  std::string samples = "1";
  std::uint64_t seed = 0;
  std::string signature;
};

std::vector<Rat> rat_list(const std::string& text, const char* what) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, end - start);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) {
      try {
        out.push_back(Rat::parse(item));
      } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + " entry '" + item + "'");
      }
    }
    start = end + 1;
  }
  return out;
}

OneForm read_form(const Options& o) {
  if (o.form_file.empty()) {
    if (o.a.empty() && o.b.empty()) throw Error("give --a/--b or --form");
    return parse_form(o.a, o.b);
  }
  if (!o.a.empty() || !o.b.empty()) throw Error("--form excludes --a and --b");
  std::ifstream f(o.form_file);
  if (!f) throw Error("cannot read " + o.form_file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 2) throw Error(o.form_file + ": expected two lines, a then b");
  return parse_form(lines[0], lines[1]);
}

Limits read_limits(const Options& o) {
  Limits l;
  l.max_exp = o.max_exp;
  l.max_ram = o.max_ram;
  l.max_branches = o.max_branches;
  l.dicritical_samples = rat_list(o.samples, "--dicritical-samples");
  for (const auto& c : l.dicritical_samples)
    if (c.is_zero()) throw Error("--dicritical-samples must be nonzero");
  if (l.max_exp < 1 || l.max_ram < 1) throw Error("--max-exp and --max-ram must be positive");
  return l;
}

void add_form_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--a", o.a, "coefficient of dx");
  cmd->add_option("--b", o.b, "coefficient of dy");
  cmd->add_option("--form", o.form_file, "file with a and b on two lines");
  cmd->add_flag("--json", o.json, "JSON output");
}

void add_limit_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-exp", o.max_exp, "bound on mu * q per term")->capture_default_str();
  cmd->add_option("--max-ram", o.max_ram, "bound on the ramification index")->capture_default_str();
  cmd->add_option("--max-branches", o.max_branches, "bound on the number of branches")->capture_default_str();
  cmd->add_option("--dicritical-samples", o.samples, "c values taken in dicritical families")
      ->capture_default_str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton-Puiseux polygons and invariant branches of plane 1-forms a dx + b dy", "puiseux"};
  app.require_subcommand(1);
  Options o;

  auto* polygon = app.add_subcommand("polygon", "cloud, polygon, y-order and multiplicity");
  add_form_options(polygon, o);
  polygon->add_option("--svg", o.svg, "write the polygon as SVG");
  polygon->add_option("--mu", o.mu, "draw the support line of this co-slope in the SVG");

  auto* expand = app.add_subcommand("expand", "invariant branches term by term");
  add_form_options(expand, o);
  add_limit_options(expand, o);

  auto* verify = app.add_subcommand("verify", "check max r <= y-order <= multiplicity");
  add_form_options(verify, o);
  add_limit_options(verify, o);

  auto* lemmas = app.add_subcommand("check-lemmas", "replay each branch with per-step checks");
  add_form_options(lemmas, o);
  add_limit_options(lemmas, o);

  auto* gen = app.add_subcommand("gen", "generate a form with a planted branch");
  gen->add_option("--signature", o.signature, "characteristic exponents, e.g. 3/2,7/4");
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      const auto c = oracle::gen_case(rat_list(o.signature, "--signature"), o.seed);
      if (o.json) emit(out, case_report(c)); else print_case(out, c);
      return 0;
    }

    const OneForm w = read_form(o);
    if (polygon->parsed()) {
      if (o.json) emit(out, polygon_report(w)); else print_polygon(out, w);
      if (!o.svg.empty()) {
        SvgAnnotations ann;
        if (!o.mu.empty()) ann.mu = Rat::parse(o.mu);
        if (ann.mu && ann.mu->sign() <= 0) throw Error("--mu must be positive");
        emit_svg(newton_polygon(w), ann, o.svg);
      }
      return 0;
    }

    const Limits limits = read_limits(o);
    const Expansion ex = expand_branches(w, limits);
    if (expand->parsed()) {
      if (o.json) emit(out, expansion_report(w, ex)); else print_expansion(out, w, ex);
      return 0;
    }
    if (verify->parsed()) {
      const BoundReport b = verify_bound(w, ex.branches);
      if (o.json) emit(out, bound_report(b)); else print_bound(out, b);
      return b.ok ? 0 : kFail;
    }
    bool ok = true;
    if (o.json) {
      const Json j = lemma_report(w, ex);
      ok = j["ok"].get<bool>();
      emit(out, j);
    } else {
      ok = print_lemmas(out, w, ex);
    }
    return ok ? 0 : kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace puiseux::cli
