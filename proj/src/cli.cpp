#include "bergman/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/balancing.hpp"
#include "bergman/error.hpp"
#include "bergman/fan.hpp"
#include "bergman/io.hpp"
#include "bergman/matroid.hpp"
#include "bergman/weighted.hpp"

namespace bergman {
namespace {

std::size_t flat_limit() {
  const char* env = std::getenv("BERGMAN_MAX_FLATS");
  if (env == nullptr) return std::size_t{1} << 16;
  std::string text(env);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::input_error,
         "BERGMAN_MAX_FLATS must be a positive integer, got \"" + text + "\"");
  unsigned long long value = 0;
  try {
    value = std::stoull(text);
  } catch (const std::out_of_range&) {
    fail(errc::input_error, "BERGMAN_MAX_FLATS is out of range");
  }
  if (value == 0) fail(errc::input_error, "BERGMAN_MAX_FLATS must be positive");
  return static_cast<std::size_t>(value);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::input_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(errc::input_error, "bad JSON in " + path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

// --flag lists the proper flats only; {} and the ground set are implicit.
FlagOfFlats parse_flag_text(const Matroid& m, const std::string& text) {
  std::vector<ElementSet> sets;
  sets.push_back(ElementSet());
  for (const std::string& piece : split(text, ';')) {
    ElementSet s;
    for (const std::string& label : split(piece, ','))
      s = s.with(m.ground().index_of(label));
    sets.push_back(s);
  }
  sets.push_back(m.ground_mask());
  return flag_of_flats(m, sets);
}

std::string render_vector(const RationalVector& v) {
  std::ostringstream s;
  s << "(";
  for (int j = 0; j < v.dim(); ++j) {
    if (j) s << ", ";
    s << to_string(v[j]);
  }
  s << ")";
  return s.str();
}

int cmd_validate(const std::string& path, std::ostream& out) {
  Json j = load_json(path);
  try {
    MatroidInput in = parse_matroid(j);
    const Matroid& m = in.matroid;
    out << "matroid: rank " << m.rank() << " on " << m.n() << " elements, "
        << m.bases().size() << " bases\n";
    out << "exchange check: "
        << (m.exchange_check_sampled() ? "sampled (20000 pairs)" : "exhaustive")
        << "\n";
    std::vector<Flat> flats = m.flats(flat_limit());
    out << "flats: " << flats.size() << "\n";
    out << render_lattice(m);
    out << "valid: yes\n";
    return 0;
  } catch (const error& e) {
    switch (e.code()) {
      case errc::empty_bases:
      case errc::unequal_cardinality:
      case errc::exchange_axiom_violated:
      case errc::invalid_rank:
        out << e.what() << "\n";
        out << "valid: no\n";
        return 1;
      default:
        throw;
    }
  }
}

int cmd_fan(const std::string& path, bool json, std::ostream& out) {
  MatroidInput in = parse_matroid(load_json(path));
  BergmanFan fan = build_fan(in.matroid, flat_limit());
  if (json) {
    out << fan_to_json(fan, in.echo).dump(2) << "\n";
    return 0;
  }
  out << "fan of a rank " << fan.matroid().rank() << " matroid on "
      << fan.matroid().n() << " elements\n";
  out << "cones: " << fan.cones().size() << "\n";
  for (const auto& [type, count] : fan.counts_by_type())
    out << "  " << type_to_string(type) << ": " << count << "\n";
  return 0;
}

int cmd_balance_all(const MatroidInput& in, bool json, std::ostream& out) {
  BergmanFan fan = build_fan(in.matroid, flat_limit());
  BalancingReport report = verify_all(fan);
  if (json) {
    out << balance_report_to_json(fan, report, in.echo).dump(2) << "\n";
  } else {
    out << "cones: " << fan.cones().size() << "\n";
    out << "relations by type:\n";
    for (const auto& [type, by_ik] : report.by_type) {
      out << "  " << type_to_string(type) << ":";
      for (const auto& [ik, count] : by_ik)
        out << " (i=" << ik.first << ",k=" << ik.second << ") " << count;
      out << "\n";
    }
    out << "nontrivial at types:";
    if (report.nontrivial_types.empty()) out << " none";
    for (const ConeType& t : report.nontrivial_types)
      out << " " << type_to_string(t);
    out << "\n";
    const GroundSet& ground = fan.matroid().ground();
    for (const BalancingRelation& v : report.violations)
      out << "violation at " << render_flag(ground, v.flag) << " i=" << v.i
          << " k=" << v.k << ": lhs = " << render_vector(v.lhs) << "\n";
    out << "relations checked: " << report.relations_checked
        << ", violations: " << report.violations.size() << "\n";
  }
  return report.violations.empty() ? 0 : 1;
}

int cmd_balance_one(const MatroidInput& in, const std::string& flag_text, int i,
                    int k, bool json, std::ostream& out) {
  const Matroid& m = in.matroid;
  FlagOfFlats flag = parse_flag_text(m, flag_text);
  BalancingRelation rel = balancing_lhs(m, flag, i, k);
  if (json) {
    out << relation_to_json(m, rel).dump(2) << "\n";
  } else {
    out << "flag: " << render_flag(m.ground(), flag) << "\n";
    out << "type: " << type_to_string(flag.type()) << "\n";
    out << "i=" << i << " k=" << k << ", terms: " << rel.terms.size() << "\n";
    out << "lhs: " << render_vector(rel.lhs) << "\n";
    out << "zero: " << (rel.lhs.is_zero() ? "yes" : "no") << "\n";
  }
  return rel.lhs.is_zero() ? 0 : 1;
}

int cmd_weights_solve(const std::string& path, int dim_k, bool json,
                      std::ostream& out) {
  MatroidInput in = parse_matroid(load_json(path));
  BergmanFan fan = build_fan(in.matroid, flat_limit());
  Skeleton s = skeleton(fan, dim_k);
  WeightBasis basis = solve_weights(s);
  if (json) {
    out << weight_basis_to_json(s, basis).dump(2) << "\n";
    return 0;
  }
  const GroundSet& ground = s.matroid().ground();
  out << "skeleton k=" << dim_k << ": " << s.cells().size() << " cells, "
      << s.boundary().size() << " boundary cones\n";
  out << "solution dimension: " << basis.dim << "\n";
  for (std::size_t b = 0; b < basis.basis.size(); ++b) {
    out << "basis[" << b << "]:\n";
    for (int cell = 0; cell < basis.basis[b].size(); ++cell)
      out << "  " << render_flag(ground, s.cells()[cell]) << " : "
          << to_string(basis.basis[b][cell]) << "\n";
  }
  return 0;
}

int cmd_weights_check(const std::string& matroid_path,
                      const std::string& weight_path, std::ostream& out) {
  MatroidInput in = parse_matroid(load_json(matroid_path));
  BergmanFan fan = build_fan(in.matroid, flat_limit());
  Json wj = load_json(weight_path);
  if (!wj.is_object() || !wj.contains("k") || !wj.at("k").is_number_integer())
    fail(errc::input_error, "weight file needs an integer \"k\"");
  Skeleton s = skeleton(fan, wj.at("k").get<int>());
  WeightFunction w = parse_weights(wj, s);
  WeightedReport report = check_weighted(s, w);
  const GroundSet& ground = s.matroid().ground();
  out << "skeleton k=" << s.k() << ": " << s.cells().size() << " cells, "
      << s.boundary().size() << " boundary cones\n";
  for (const BoundaryCheck& c : report.checks) {
    out << "  " << render_flag(ground, c.flag) << " : ";
    if (c.pass)
      out << "balanced\n";
    else
      out << "unbalanced, sum = " << render_vector(c.sum) << "\n";
  }
  out << "weights balanced: " << (report.all_pass ? "yes" : "no") << "\n";
  return report.all_pass ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& point_text,
                 std::ostream& out) {
  MatroidInput in = parse_matroid(load_json(path));
  BergmanFan fan = build_fan(in.matroid, flat_limit());
  RationalVector x = parse_point(point_text, in.matroid.n());
  std::optional<FlagOfFlats> flag = classify_point(fan, x);
  if (!flag) {
    out << "not in fan\n";
    return 1;
  }
  out << "flag: " << render_flag(in.matroid.ground(), *flag) << "\n";
  out << "type: " << type_to_string(flag->type()) << "\n";
  out << "dim: " << flag->dim() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"bergman fans of matroids: construction, balancing, weights"};
  app.name("bergman");
  app.require_subcommand(1);

  std::string matroid_path;
  std::string weight_path;
  std::string flag_text;
  std::string point_text;
  bool want_json = false;
  bool balance_all = false;
  int arg_i = 0;
  int arg_k = 0;
  int solve_dim = 0;

  CLI::App* validate =
      app.add_subcommand("validate", "check the matroid axioms on an input file");
  validate->add_option("matroid", matroid_path, "matroid JSON file")->required();

  CLI::App* fan = app.add_subcommand("fan", "build the bergman fan");
  fan->add_option("matroid", matroid_path, "matroid JSON file")->required();
  fan->add_flag("--json", want_json, "machine-readable output");

  CLI::App* balance =
      app.add_subcommand("balance", "verify balancing relations on the fan");
  balance->add_option("matroid", matroid_path, "matroid JSON file")->required();
  CLI::Option* opt_all =
      balance->add_flag("--all", balance_all, "every relation at every cone");
  CLI::Option* opt_flag = balance->add_option(
      "--flag", flag_text,
      "proper flats of one flag, ';'-separated label lists ({} and E implicit)");
  CLI::Option* opt_i =
      balance->add_option("--i", arg_i, "index of the interval's lower flat");
  CLI::Option* opt_k = balance->add_option("--k", arg_k, "relation depth");
  balance->add_flag("--json", want_json, "machine-readable output");
  opt_all->excludes(opt_flag);
  opt_flag->needs(opt_i);
  opt_flag->needs(opt_k);
  opt_i->needs(opt_flag);
  opt_k->needs(opt_flag);

  CLI::App* solve = app.add_subcommand(
      "weights-solve", "solve for balanced weights on a skeleton");
  solve->add_option("matroid", matroid_path, "matroid JSON file")->required();
  solve->add_option("--dim", solve_dim, "skeleton dimension")->required();
  solve->add_flag("--json", want_json, "machine-readable output");

  CLI::App* check = app.add_subcommand(
      "weights-check", "check a weight file for balancing");
  check->add_option("matroid", matroid_path, "matroid JSON file")->required();
  check->add_option("weights", weight_path, "weight JSON file")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "locate a point in the fan");
  classify->add_option("matroid", matroid_path, "matroid JSON file")->required();
  classify->add_option("--point", point_text, "comma-separated rationals")
      ->required();

  std::vector<std::string> full;
  full.push_back("bergman");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(matroid_path, out);
    if (fan->parsed()) return cmd_fan(matroid_path, want_json, out);
    if (balance->parsed()) {
      if (!balance_all && opt_flag->count() == 0) {
        err << "balance: exactly one of --all or --flag is required\n";
        return 2;
      }
      MatroidInput in = parse_matroid(load_json(matroid_path));
      if (balance_all) return cmd_balance_all(in, want_json, out);
      return cmd_balance_one(in, flag_text, arg_i, arg_k, want_json, out);
    }
    if (solve->parsed())
      return cmd_weights_solve(matroid_path, solve_dim, want_json, out);
    if (check->parsed()) return cmd_weights_check(matroid_path, weight_path, out);
    if (classify->parsed()) return cmd_classify(matroid_path, point_text, out);
    err << "no subcommand\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bergman
