#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "abacus/beaufourier.hpp"
#include "abacus/lifting.hpp"
#include "abacus/numerology.hpp"
#include "abacus/random.hpp"
#include "abacus/serialize.hpp"
#include "abacus/suites.hpp"

namespace abacus::cli {

namespace {

const std::vector<std::string> kFormats{"json", "table"};
const std::vector<std::string> kFormulas{"kuenneth", "scholl", "suh", "suh2"};
const std::vector<long> kDmN{-4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 8, 9};

struct Raw {
  std::vector<long> w, bound_m, bound_n;
};

void build(CLI::App& app, RunConfig& c, Raw& raw) {
  app.require_subcommand(1);
  auto common = [&](CLI::App* s) {
    s->add_option("--output,-o", c.output, "Output path, - for standard output");
    s->add_option("--format", c.format, "Report format")->check(CLI::IsMember(kFormats));
  };
  auto sized = [&](CLI::App* s) {
    s->add_option("--g", c.g, "Dimension g of the abelian variety");
  };
  auto seeded = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "Random seed");
    s->add_option("--trials", c.trials, "Number of random trials");
  };

  auto* num = app.add_subcommand("numerology", "Certified w_{i,j}");
  num->add_option("--w", raw.w, "Indices I J")->expected(2)->required();
  common(num);
  num->callback([&] { c.command = Command::numerology; });

  auto* proj = app.add_subcommand("projectors", "Projector tables");
  sized(proj);
  proj->add_option("--formula", c.formula, "Projector formula")->check(CLI::IsMember(kFormulas));
  common(proj);
  proj->callback([&] { c.command = Command::projectors; });

  auto* lift = app.add_subcommand("lift", "Random lifting trials: squaring and correction");
  sized(lift);
  seeded(lift);
  lift->add_option("--denominators", c.denominators, "Denominators of the perturbation tails");
  common(lift);
  lift->callback([&] { c.command = Command::lift; });

  auto* ver = app.add_subcommand("verify", "Run identity suites");
  sized(ver);
  seeded(ver);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", c.suite, "Suite to run")->check(CLI::IsMember(suites));
  common(ver);
  ver->callback([&] { c.command = Command::verify; });

  auto* bound = app.add_subcommand("bound", "Prime bound M and exponent bound N_i");
  auto* bm = bound->add_option("--bound-m", raw.bound_m, "G CD")->expected(2);
  auto* bn = bound->add_option("--bound-n", raw.bound_n, "I G CD")->expected(3);
  bm->excludes(bn);
  common(bound);
  bound->callback([&] { c.command = Command::bound; });
}

void finish(RunConfig& c, const Raw& raw) {
  if (raw.w.size() == 2) c.w = std::make_pair(raw.w[0], raw.w[1]);
  if (raw.bound_m.size() == 2) c.bound_m = std::array<long, 2>{raw.bound_m[0], raw.bound_m[1]};
  if (raw.bound_n.size() == 3) c.bound_n = std::array<long, 3>{raw.bound_n[0], raw.bound_n[1], raw.bound_n[2]};
}

int max_g(const RunConfig& c) {
  switch (c.command) {
    case Command::projectors: return 4;
    case Command::lift: return 3;
    case Command::verify: return c.suite == "divided-powers" ? 4 : 3;
    default: return 1 << 20;
  }
}

std::string suite_table(const Report& r) {
  std::ostringstream os;
  for (const auto& ch : r.checks) os << (ch.pass ? "PASS " : "FAIL ") << ch.identity << " g=" << ch.g << "\n";
  return os.str();
}

int emit(const Json& j, const std::string& table, const RunConfig& c, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (c.output != "-") {
    file.open(c.output);
    if (!file) throw ConfigError("cannot open output file " + c.output);
    os = &file;
  }
  if (c.format == "json") *os << j.dump(2) << "\n";
  else *os << table;
  return j.value("pass", true) ? kExitPass : kExitFail;
}

Json header() { return Json{{"schema", "1"}}; }

int run_numerology(const RunConfig& c, std::ostream& out) {
  auto w = numerology::w_certified(c.w->first, c.w->second);
  Json j = header();
  const Json body = to_json(w);
  for (const auto& [k, v] : body.items()) j[k] = v;
  std::ostringstream t;
  t << "w_{" << w.i << "," << w.j << "} = " << w.value << (w.certified ? " (certified)" : " (upper bound, not certified)") << "\n";
  for (const auto& [l, b] : w.valuations) t << "  v_" << l << ": lower " << b.first << ", upper " << b.second << "\n";
  return emit(j, t.str(), c, out);
}

int run_bound(const RunConfig& c, std::ostream& out) {
  Json j = header();
  std::ostringstream t;
  if (c.bound_m) {
    auto [g, cd] = *c.bound_m;
    Integer m = numerology::bound_M(g, cd);
    j["kind"] = "M";
    j["g"] = g;
    j["cd"] = cd;
    j["value"] = m.get_str();
    j["certified"] = true;
    j["primes"] = numerology::bound_M_primes(g, cd);
    t << "M(g=" << g << ", cd=" << cd << ") = " << m << "\n";
  } else {
    auto [i, g, cd] = *c.bound_n;
    auto b = numerology::bound_N(i, g, cd);
    j["kind"] = "N";
    j["i"] = i;
    j["g"] = g;
    j["cd"] = cd;
    const Json body = to_json(b);
    for (const auto& [k, v] : body.items()) j[k] = v;
    t << "N_" << i << "(g=" << g << ", cd=" << cd << ") = " << b.value << (b.certified ? " (certified)" : " (not certified)") << "\n";
  }
  return emit(j, t.str(), c, out);
}

int run_projectors(const RunConfig& c, std::ostream& out) {
  std::vector<CorrClass> p;
  if (c.formula == "kuenneth") {
    p = kuenneth_projectors(c.g);
  } else {
    PolarizedModel m = PolarizedModel::principal(c.g);
    if (c.formula == "scholl") p = scholl_projectors(m);
    else if (c.formula == "suh") p = suh_projectors(m, SuhVariant::expanded);
    else p = suh_projectors(m, SuhVariant::chu_vandermonde);
  }
  Json j = header();
  j["g"] = c.g;
  Json list = Json::array();
  std::ostringstream t;
  for (int i = 0; i <= 2 * c.g; ++i) {
    list.push_back(projector_entry(c.g, i, p[i]));
    t << "pi^" << i << " = " << to_text(p[i].cls()) << "\n";
  }
  j["projectors"] = list;
  return emit(j, t.str(), c, out);
}

int run_verify(const RunConfig& c, std::ostream& out) {
  SuiteOptions o{c.g, c.trials, c.seed};
  Report r = run_suite(c.suite, o);
  Json j = header();
  j["suite"] = c.suite;
  j["g"] = c.g;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["pass"] = r.pass();
  j["checks"] = to_json(r);
  return emit(j, suite_table(r), c, out);
}

int run_lift(const RunConfig& c, std::ostream& out) {
  const int g = c.g;
  Json trials = Json::array();
  std::ostringstream t;
  bool all = true;
  for (long k = 0; k < c.trials; ++k) {
    const std::uint64_t s = trial_seed(c.seed, static_cast<std::uint64_t>(k));
    Rng rng(s);
    ProjectorSystem lifts = random_zero_sum_lifts(g, rng, {2, 3, 4, 8});
    SquaringResult sq = lift_by_squaring(lifts);
    ProjectorSystem pi0 = random_orthogonal_system(g, rng, c.denominators);
    Correction corr = correct_projectors(pi0);
    DmReport dm = check_dm(corr.projectors, kDmN);
    Json defects = Json::array();
    for (int i = 0; i <= 2 * g; ++i) defects.push_back(to_json(pushforward_defect(corr.projectors, i)));
    const bool ok_sq = sq.report.pass();
    const bool ok_corr = dm.projectors_pass() && dm.mult2_pass();
    all = all && ok_sq && ok_corr;
    Json squaring = to_json(sq.report);
    if (!ok_sq) {
      Json l = Json::array();
      for (const auto& e : lifts) l.push_back(to_json(e));
      squaring["counterexample"] = l;
    }
    trials.push_back({{"trial", k},
                      {"seed", s},
                      {"squaring", squaring},
                      {"correction",
                       {{"projectors", dm.projectors_pass()},
                        {"exact", dm.mult_pass()},
                        {"times_two", dm.mult2_pass()},
                        {"dm", to_json(dm)},
                        {"pushforward_defects", defects}}}});
    t << "trial " << k << ": squaring " << (ok_sq ? "ok" : "FAIL") << (sq.report.band_condition ? " (band)" : "")
      << ", correction " << (ok_corr ? "ok" : "FAIL") << (dm.mult_pass() ? " exact" : " up to 2-torsion") << "\n";
  }
  Json j = header();
  j["g"] = g;
  j["seed"] = c.seed;
  j["trials_requested"] = c.trials;
  j["denominators"] = c.denominators;
  j["pass"] = all;
  j["trials"] = trials;
  return emit(j, t.str(), c, out);
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.g < 1) throw ConfigError("--g must be at least 1");
  if (c.trials < 1) throw ConfigError("--trials must be at least 1");
  if (c.g > max_g(c)) throw ConfigError("--g " + std::to_string(c.g) + " is above the supported maximum " + std::to_string(max_g(c)));
  if (c.format != "json" && c.format != "table") throw ConfigError("unknown format " + c.format);
  switch (c.command) {
    case Command::numerology:
      if (!c.w) throw ConfigError("numerology needs --w I J");
      if (c.w->first <= c.w->second) throw ConfigError("--w needs I > J");
      break;
    case Command::bound:
      if (!c.bound_m == !c.bound_n) throw ConfigError("bound needs exactly one of --bound-m or --bound-n");
      if (c.bound_m && ((*c.bound_m)[0] < 1 || (*c.bound_m)[1] < 0)) throw ConfigError("--bound-m needs G >= 1, CD >= 0");
      if (c.bound_n) {
        auto [i, g, cd] = *c.bound_n;
        if (g < 1 || cd < 0 || i < 0 || i > 2 * g) throw ConfigError("--bound-n needs G >= 1, CD >= 0, 0 <= I <= 2G");
      }
      break;
    case Command::lift:
      for (long d : c.denominators)
        if (d < 2) throw ConfigError("--denominators must be at least 2");
      if (c.denominators.empty()) throw ConfigError("--denominators must not be empty");
      break;
    default:
      break;
  }
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"abacus"};
  RunConfig c;
  Raw raw;
  build(app, c, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  finish(c, raw);
  validate(c);
  return c;
}

int run(const RunConfig& c, std::ostream& out) {
  validate(c);
  switch (c.command) {
    case Command::numerology: return run_numerology(c, out);
    case Command::bound: return run_bound(c, out);
    case Command::projectors: return run_projectors(c, out);
    case Command::verify: return run_verify(c, out);
    case Command::lift: return run_lift(c, out);
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for integral motivic projectors of abelian varieties"};
  RunConfig c;
  Raw raw;
  build(app, c, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  finish(c, raw);
  try {
    return run(c, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace abacus::cli
