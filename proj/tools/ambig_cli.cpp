// Command-line front end: tableau counts, ambiguity enumeration, numeric
// verification of angle sets, and symmetric-array analysis, with JSON or CSV
// output. Exit codes: 0 success, 2 invalid input, 3 budget exhausted before
// completion, 4 verification tripwire (an emitted result failed its numeric
// check, e.g. under a corrupted catalog).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ambig/array_core.hpp"
#include "ambig/enumeration.hpp"
#include "ambig/rational.hpp"
#include "ambig/symmetric.hpp"
#include "ambig/tableaux.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ambig;

constexpr double kPi = std::numbers::pi;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<long> parse_positions(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stol(item, &used));
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("bad position '" + item + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty position list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stod(item, &used));
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty angle list");
  return out;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw std::invalid_argument("empty angle list");
  return out;
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + output_path);
  f << text;
}

// Shared per-command state filled by CLI11.
struct Args {
  std::string array_text;
  std::string baseline_text = "1";
  std::string format = "json";
  std::string output;

  std::string degrees, radians, turns;

  std::string partition;
  bool no_prune = false;
  bool orbit_prune = false;
  bool stats = false;
  int jobs = 1;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;

  int order = 1;
  int resolution = 10000;
  double tol = 1e-3;
};

core::LinearArray array_of(const Args& a) {
  return core::make_array(parse_positions(a.array_text), parse_rat(a.baseline_text));
}

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--array", a.array_text, "comma-separated sensor positions")->required();
  cmd->add_option("--baseline", a.baseline_text, "sensor spacing unit, rational in (0,1]");
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", a.output, "write the report to this file instead of stdout");
}

// ---------------------------------------------------------------- ssyt ----

int run_ssyt(const Args& a) {
  const auto array = array_of(a);
  const int M = static_cast<int>(array.positions.size());
  const auto shape = tableaux::shape_of(array.positions);
  const auto tabs = tableaux::enumerate_ssyt(shape, M);

  if (a.format == "json") {
    json j;
    j["array"] = array.positions;
    j["baseline"] = rat_str(array.baseline);
    j["shape"] = shape;
    j["count"] = tabs.size();
    json list = json::array();
    for (const auto& t : tabs) {
      json one;
      one["rows"] = t.rows;
      one["weight"] = tableaux::weight_of(t, M);
      list.push_back(std::move(one));
    }
    j["tableaux"] = std::move(list);
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::string s = "key,value\n";
    s += "array," + join_longs(array.positions) + "\n";
    s += "baseline," + rat_str(array.baseline) + "\n";
    s += "shape," + join_longs(shape) + "\n";
    s += "count," + std::to_string(tabs.size()) + "\n";
    for (size_t i = 0; i < tabs.size(); ++i) {
      s += "tableau," + std::to_string(i) + ",";
      for (size_t r = 0; r < tabs[i].rows.size(); ++r) {
        if (r) s += '|';
        for (size_t c = 0; c < tabs[i].rows[r].size(); ++c) {
          if (c) s += ' ';
          s += std::to_string(tabs[i].rows[r][c]);
        }
      }
      s += ",";
      s += join_longs(tableaux::weight_of(tabs[i], M));
      s += "\n";
    }
    emit(s, a.output);
  }
  return 0;
}

// -------------------------------------------------------------- verify ----

// Electrical angles in radians from whichever unit option was given.
// Degrees and radians are directions of arrival; turns are electrical
// angles directly (the library's exact representation).
std::vector<double> electrical_from_args(const Args& a, const Rat& baseline,
                                         std::string& unit, json& given) {
  std::vector<double> phis;
  if (!a.degrees.empty()) {
    unit = "degrees";
    for (double deg : parse_doubles(a.degrees)) {
      given.push_back(deg);
      phis.push_back(core::electrical_angle(deg * kPi / 180.0, baseline));
    }
  } else if (!a.radians.empty()) {
    unit = "radians";
    for (double rad : parse_doubles(a.radians)) {
      given.push_back(rad);
      phis.push_back(core::electrical_angle(rad, baseline));
    }
  } else {
    unit = "turns";
    for (const Rat& t : parse_rats(a.turns)) {
      given.push_back(rat_str(t));
      phis.push_back(2.0 * kPi * rat_to_double(t));
    }
  }
  return phis;
}

int run_verify(const Args& a) {
  const auto array = array_of(a);
  std::string unit;
  json given = json::array();
  const auto phis = electrical_from_args(a, array.baseline, unit, given);
  const auto verdict = core::is_ambiguous(array, phis, a.tol);
  const bool trivial = verdict.status == core::CheckStatus::kTrivialRepeat;

  if (a.format == "json") {
    json j;
    j["array"] = array.positions;
    j["baseline"] = rat_str(array.baseline);
    j["unit"] = unit;
    j["angles"] = given;
    json pr = json::array();
    for (double p : phis) pr.push_back(p);
    j["phis_radians"] = std::move(pr);
    j["status"] = trivial ? "trivial-repeat" : "ok";
    j["ambiguous"] = verdict.ambiguous;
    j["rank"] = verdict.rank;
    j["smallest_sv"] = verdict.smallest_sv;
    j["largest_sv"] = verdict.largest_sv;
    j["tol"] = a.tol;
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::string s = "key,value\n";
    s += "array," + join_longs(array.positions) + "\n";
    s += "baseline," + rat_str(array.baseline) + "\n";
    s += "unit," + unit + "\n";
    std::string ang;
    for (const auto& g : given) {
      if (!ang.empty()) ang += ' ';
      ang += g.is_string() ? g.get<std::string>() : fmt12(g.get<double>());
    }
    s += "angles," + ang + "\n";
    std::string ph;
    for (double p : phis) {
      if (!ph.empty()) ph += ' ';
      ph += fmt12(p);
    }
    s += "phis_radians," + ph + "\n";
    s += std::string("status,") + (trivial ? "trivial-repeat" : "ok") + "\n";
    s += std::string("ambiguous,") + (verdict.ambiguous ? "true" : "false") + "\n";
    s += "rank," + std::to_string(verdict.rank) + "\n";
    s += "smallest_sv," + fmt12(verdict.smallest_sv) + "\n";
    s += "largest_sv," + fmt12(verdict.largest_sv) + "\n";
    s += "tol," + fmt12(a.tol) + "\n";
    emit(s, a.output);
  }
  return trivial ? 2 : 0;
}

// ----------------------------------------------------------- enumerate ----

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    size_t used = 0;
    parts.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::string interval_csv(const enumeration::ParamInterval& iv) {
  std::string s = iv.lo_open ? "(" : "[";
  s += rat_str(iv.lo) + ";" + rat_str(iv.hi);
  s += iv.hi_open ? ")" : "]";
  return s;
}

std::string report_csv(const enumeration::EnumerationReport& rep) {
  std::string s = "key,value\n";
  s += "array," + join_longs(rep.array.positions) + "\n";
  s += "baseline," + rat_str(rep.array.baseline) + "\n";
  s += "N," + std::to_string(rep.N) + "\n";

  const auto class_row = [](const enumeration::AmbiguityClass& cls) {
    std::string row = cls.discrete() ? "discrete," : "parametric,";
    std::string phi;
    for (size_t m = 0; m < cls.phi_const.size(); ++m) {
      if (m) phi += '|';
      phi += rat_str(cls.phi_const[m]);
      for (const auto& dir : cls.phi_dir) phi += ';' + rat_str(dir[m]);
    }
    row += phi + ",";
    std::string doms;
    for (size_t k = 0; k < cls.parameter_domains.size(); ++k) {
      if (k) doms += '|';
      for (size_t i = 0; i < cls.parameter_domains[k].size(); ++i) {
        if (i) doms += 'u';
        doms += interval_csv(cls.parameter_domains[k][i]);
      }
    }
    row += doms + ",";
    row += cls.verified ? "verified" : "unverified";
    return row;
  };

  for (const auto& pr : rep.partitions) {
    std::string parts;
    for (size_t i = 0; i < pr.parts.size(); ++i) {
      if (i) parts += '+';
      parts += std::to_string(pr.parts[i]);
    }
    s += "partition," + parts + ",config_count," + std::to_string(pr.config_count) +
         ",complete," + (pr.complete ? "true" : "false") + "\n";
    for (size_t c = 0; c < pr.classes.size(); ++c)
      s += "partition_class," + parts + "," + std::to_string(c) + "," +
           class_row(pr.classes[c]) + "\n";
  }
  for (size_t c = 0; c < rep.merged_classes.size(); ++c)
    s += "merged_class," + std::to_string(c) + "," + class_row(rep.merged_classes[c]) + "\n";
  return s;
}

int run_enumerate(const Args& a) {
  const auto array = array_of(a);
  enumeration::Budget budget{a.max_nodes, a.max_seconds};
  enumeration::Options options;
  options.prune = !a.no_prune;
  options.root_orbit_prune = a.orbit_prune;
  options.jobs = a.jobs;

  enumeration::EnumerationReport rep;
  if (a.partition.empty()) {
    rep = enumeration::enumerate_all(array, budget, options);
  } else {
    rep.array = array;
    rep.N = static_cast<int>(tableaux::ssyt_count(
        tableaux::shape_of(array.positions),
        static_cast<int>(array.positions.size())));
    rep.partitions.push_back(
        enumeration::enumerate_partition(array, parse_partition(a.partition), budget, options));
    rep.merged_classes = rep.partitions.front().classes;
    enumeration::verify_classes(array, rep);
  }

  emit(a.format == "json" ? enumeration::report_json(rep) : report_csv(rep), a.output);

  bool incomplete = false;
  for (const auto& pr : rep.partitions) {
    if (!pr.complete) incomplete = true;
    if (a.stats)
      std::cerr << "partition " << (pr.parts.empty() ? std::string("-") : [&] {
        std::string t;
        for (size_t i = 0; i < pr.parts.size(); ++i) {
          if (i) t += '+';
          t += std::to_string(pr.parts[i]);
        }
        return t;
      }()) << ": configs " << pr.config_count << " (ordered "
           << pr.config_count_ordered << "), nodes " << pr.nodes << ", "
           << fmt12(pr.wall_seconds) << " s"
           << (pr.complete ? "" : " [incomplete]") << "\n";
  }
  return incomplete ? 3 : 0;
}

// ----------------------------------------------------------- symmetric ----

json sym_json(const core::LinearArray& array,
              const std::optional<symmetric::SymmetricArray>& s) {
  json j;
  j["array"] = array.positions;
  j["baseline"] = rat_str(array.baseline);
  j["symmetric"] = s.has_value();
  if (s) {
    j["shift"] = rat_str(s->shift);
    json cp = json::array();
    for (const Rat& p : s->positions) cp.push_back(rat_str(p));
    j["centred_positions"] = std::move(cp);
    j["norm"] = s->norm;
    j["manifold_length"] = s->manifold_length;
    const auto red = symmetric::reduced_array(*s);
    json r;
    r["positions"] = red.positions;
    r["baseline"] = rat_str(red.baseline);
    j["reduced"] = std::move(r);
  }
  return j;
}

int run_sym_detect(const Args& a) {
  const auto array = array_of(a);
  const auto s = symmetric::detect_symmetry(array);
  if (a.format == "json") {
    emit(sym_json(array, s).dump(2) + "\n", a.output);
  } else {
    std::string t = "key,value\n";
    t += "array," + join_longs(array.positions) + "\n";
    t += "baseline," + rat_str(array.baseline) + "\n";
    t += std::string("symmetric,") + (s ? "true" : "false") + "\n";
    if (s) {
      t += "shift," + rat_str(s->shift) + "\n";
      std::string cp;
      for (size_t i = 0; i < s->positions.size(); ++i) {
        if (i) cp += ' ';
        cp += rat_str(s->positions[i]);
      }
      t += "centred_positions," + cp + "\n";
      t += "norm," + fmt12(s->norm) + "\n";
      t += "manifold_length," + fmt12(s->manifold_length) + "\n";
      const auto red = symmetric::reduced_array(*s);
      t += "reduced_positions," + join_longs(red.positions) + "\n";
      t += "reduced_baseline," + rat_str(red.baseline) + "\n";
    }
    emit(t, a.output);
  }
  return 0;
}

symmetric::SymmetricArray require_symmetric(const core::LinearArray& array) {
  auto s = symmetric::detect_symmetry(array);
  if (!s) throw std::invalid_argument("array is not symmetric about any shift");
  return *s;
}

int run_sym_charpoints(const Args& a) {
  const auto array = array_of(a);
  const auto s = require_symmetric(array);
  const auto pts = symmetric::characteristic_points(s, a.order, a.resolution);

  if (a.format == "json") {
    json j = sym_json(array, s);
    j["order"] = a.order;
    j["resolution"] = a.resolution;
    json list = json::array();
    for (const auto& p : pts) {
      json one;
      one["s"] = p.s;
      one["theta_radians"] = p.theta;
      one["theta_degrees"] = p.theta * 180.0 / kPi;
      one["residual"] = symmetric::characteristic_condition(s, a.order, p.s);
      list.push_back(std::move(one));
    }
    j["points"] = std::move(list);
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::string t = "s,theta_radians,theta_degrees,order,residual\n";
    for (const auto& p : pts)
      t += fmt12(p.s) + "," + fmt12(p.theta) + "," + fmt12(p.theta * 180.0 / kPi) +
           "," + std::to_string(p.order) + "," +
           fmt12(symmetric::characteristic_condition(s, a.order, p.s)) + "\n";
    emit(t, a.output);
  }
  return 0;
}

int run_sym_reduce_check(const Args& a) {
  const auto array = array_of(a);
  const auto s = require_symmetric(array);

  std::vector<double> thetas;
  std::string unit;
  if (!a.degrees.empty()) {
    unit = "degrees";
    for (double d : parse_doubles(a.degrees)) thetas.push_back(d * kPi / 180.0);
  } else {
    unit = "radians";
    thetas = parse_doubles(a.radians);
  }
  const auto [lhs, rhs] = symmetric::real_part_ambiguity_equivalence(s, thetas, a.tol);

  const bool even = s.positions.size() % 2 == 0;
  if (a.format == "json") {
    json j;
    j["array"] = array.positions;
    j["baseline"] = rat_str(array.baseline);
    j["unit"] = unit;
    json ang = json::array();
    for (double th : thetas)
      ang.push_back(unit == "degrees" ? th * 180.0 / kPi : th);
    j["thetas"] = std::move(ang);
    j["lhs_reduced_rank_deficient"] = lhs;
    j["rhs_full_rank_deficient"] = rhs;
    j["agree"] = lhs == rhs;
    j["mode"] = even ? "even-exact" : "odd-empirical";
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::string t = "key,value\n";
    t += "array," + join_longs(array.positions) + "\n";
    t += "baseline," + rat_str(array.baseline) + "\n";
    t += "unit," + unit + "\n";
    std::string ang;
    for (double th : thetas) {
      if (!ang.empty()) ang += ' ';
      ang += fmt12(unit == "degrees" ? th * 180.0 / kPi : th);
    }
    t += "thetas," + ang + "\n";
    t += std::string("lhs_reduced_rank_deficient,") + (lhs ? "true" : "false") + "\n";
    t += std::string("rhs_full_rank_deficient,") + (rhs ? "true" : "false") + "\n";
    t += std::string("agree,") + (lhs == rhs ? "true" : "false") + "\n";
    t += std::string("mode,") + (even ? "even-exact" : "odd-empirical") + "\n";
    emit(t, a.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer linear array ambiguity toolkit"};
  app.require_subcommand(1);

  Args ssyt_args, enum_args, verify_args, det_args, chp_args, red_args;

  auto* ssyt = app.add_subcommand("ssyt", "count and list the array's tableaux");
  add_common(ssyt, ssyt_args);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate ambiguity classes");
  add_common(enumerate, enum_args);
  enumerate->add_option("--partition", enum_args.partition,
                        "restrict to one partition, e.g. 6+6");
  enumerate->add_flag("--no-prune", enum_args.no_prune,
                      "enumerate interchangeable blocks in every order");
  enumerate->add_flag("--orbit-prune", enum_args.orbit_prune,
                      "also quotient rotation stabilizers of the chosen sums");
  enumerate->add_option("--jobs", enum_args.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  enumerate->add_option("--max-nodes", enum_args.max_nodes,
                        "abort after this many search nodes (0 = unlimited)");
  enumerate->add_option("--max-seconds", enum_args.max_seconds,
                        "abort after this wall time (0 = unlimited)");
  enumerate->add_flag("--stats", enum_args.stats, "print search statistics to stderr");

  auto* verify = app.add_subcommand("verify", "rank-test one angle set");
  add_common(verify, verify_args);
  auto* vd = verify->add_option("--degrees", verify_args.degrees,
                                "directions of arrival, degrees");
  auto* vr = verify->add_option("--radians", verify_args.radians,
                                "directions of arrival, radians");
  auto* vt = verify->add_option("--turns", verify_args.turns,
                                "electrical angles as exact fractions of a turn");
  vd->excludes(vr)->excludes(vt);
  vr->excludes(vt);
  verify->add_option("--tol", verify_args.tol,
                     "relative singular value cut; the default 1e-3 matches "
                     "table display rounding");

  auto* sym = app.add_subcommand("symmetric", "symmetric-array analysis");
  sym->require_subcommand(1);
  auto* det = sym->add_subcommand("detect", "find the centring shift if any");
  add_common(det, det_args);
  auto* chp = sym->add_subcommand("charpoints", "characteristic points of one order");
  add_common(chp, chp_args);
  chp->add_option("--order", chp_args.order, "derivative order n >= 1")->required();
  chp->add_option("--resolution", chp_args.resolution, "scan intervals for root bracketing")
      ->check(CLI::Range(2, 100000000));
  auto* red = sym->add_subcommand("reduce-check",
                                  "compare reduced real-part rank with the full matrix");
  add_common(red, red_args);
  auto* rd = red->add_option("--degrees", red_args.degrees,
                             "directions of arrival, degrees");
  auto* rr = red->add_option("--radians", red_args.radians,
                             "directions of arrival, radians");
  rd->excludes(rr);
  red->add_option("--tol", red_args.tol,
                  "relative singular value cut; the default 1e-3 matches "
                  "table display rounding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ssyt) return run_ssyt(ssyt_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*verify) {
      if (verify_args.degrees.empty() && verify_args.radians.empty() &&
          verify_args.turns.empty())
        throw std::invalid_argument("one of --degrees/--radians/--turns is required");
      return run_verify(verify_args);
    }
    if (*det) return run_sym_detect(det_args);
    if (*chp) return run_sym_charpoints(chp_args);
    if (*red) {
      if (red_args.degrees.empty() && red_args.radians.empty())
        throw std::invalid_argument("one of --degrees/--radians is required");
      return run_sym_reduce_check(red_args);
    }
  } catch (const enumeration::VerificationError& e) {
    std::cerr << "verification tripwire: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
