#include "abacus/suites.hpp"

#include <map>
#include <stdexcept>

#include "abacus/beaufourier.hpp"
#include "abacus/hochschild.hpp"
#include "abacus/lifting.hpp"
#include "abacus/parallel.hpp"
#include "abacus/random.hpp"
#include "abacus/serialize.hpp"

namespace abacus {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"divided-powers", "fourier", "scholl", "suh", "lifting", "hochschild"};
  return names;
}

namespace {

// Named boolean checks from one trial, plus a witness for the first failure.
struct Outcome {
  std::map<std::string, bool> ok;
  std::map<std::string, Json> witness;
  void set(const std::string& name, bool pass, const Json& w = nullptr) {
    auto [it, fresh] = ok.try_emplace(name, pass);
    if (!fresh) it->second = it->second && pass;
    if (!pass && !witness.count(name)) witness[name] = w;
  }
};

// Collapses per-trial outcomes into one report line per check, in the order
// `names`; the witness of a failing line is the first failing trial.
void fold(Report& rep, int g, const std::vector<std::string>& names, const std::vector<Outcome>& trials,
          std::uint64_t seed) {
  for (const auto& name : names) {
    bool pass = true;
    long failures = 0;
    Json w = nullptr;
    for (std::size_t t = 0; t < trials.size(); ++t) {
      auto it = trials[t].ok.find(name);
      if (it == trials[t].ok.end() || it->second) continue;
      ++failures;
      if (pass) {
        auto wi = trials[t].witness.find(name);
        w = {{"trial", t}, {"trial_seed", trial_seed(seed, t)}, {"detail", wi == trials[t].witness.end() ? Json(nullptr) : wi->second}};
      }
      pass = false;
    }
    if (!pass) {
      w["failed_trials"] = failures;
      w["trials"] = trials.size();
    }
    rep.add(name, g, pass, w);
  }
}

void require_g(const SuiteOptions& o, int lo, int hi, const char* suite) {
  if (o.g < lo || o.g > hi)
    throw PreconditionError(std::string(suite) + " suite supports " + std::to_string(lo) + " <= g <= " + std::to_string(hi));
}

}  // namespace

Report divided_power_suite(const SuiteOptions& o) {
  require_g(o, 1, 4, "divided-powers");
  const int g = o.g;
  const Space a = abelian_space(g);
  std::function<Outcome(std::size_t)> trial = [&](std::size_t t) {
    Outcome out;
    Rng rng(trial_seed(o.seed, t));
    const int k = 2 * static_cast<int>(rng.uniform(1, g));
    MultiVector x = random_class(a, k, rng);
    MultiVector y = random_class(a, k, rng);
    const long lambda = rng.uniform(-4, 4);
    const unsigned m = static_cast<unsigned>(rng.uniform(1, 3));
    const unsigned n = static_cast<unsigned>(rng.uniform(0, 3));
    Json w = {{"x", to_text(x)}, {"y", to_text(y)}, {"lambda", lambda}, {"m", m}, {"n", n}};
    try {
      out.set("divided-power-axiom-1", divided_power(x, 0) == MultiVector::unit(a) && divided_power(x, 1) == x, w);
      out.set("divided-power-axiom-2",
              divided_power(Rational(lambda) * x, n) == Rational(ipow(lambda, n)) * divided_power(x, n), w);
      MultiVector s(a);
      for (unsigned r = 0; r <= n; ++r) s += wedge(divided_power(x, r), divided_power(y, n - r));
      out.set("divided-power-axiom-3", divided_power(x + y, n) == s, w);
      out.set("divided-power-axiom-4",
              wedge(divided_power(x, m), divided_power(x, n)) == Rational(binomial(m + n, m)) * divided_power(x, m + n), w);
      Rational c5(factorial(m * n), ipow(factorial(m), n) * factorial(n));
      c5.canonicalize();
      out.set("divided-power-axiom-5", divided_power(divided_power(x, m), n) == c5 * divided_power(x, m * n), w);
      Homomorphism::Matrix mat(a.rank(), std::vector<Integer>(a.rank()));
      for (auto& row : mat)
        for (auto& e : row) e = rng.uniform(-2, 2);
      Homomorphism f(a, a, mat);
      out.set("divided-power-pullback", divided_power(hom_pullback(f, x), n) == hom_pullback(f, divided_power(x, n)), w);
      out.set("divided-power-exact-division", true);
    } catch (const DivisionFailure& e) {
      w["error"] = e.what();
      out.set("divided-power-exact-division", false, w);
    }
    return out;
  };
  auto trials = parallel_trials<Outcome>(static_cast<std::size_t>(o.trials), trial);
  Report rep;
  fold(rep, g, {"divided-power-axiom-1", "divided-power-axiom-2", "divided-power-axiom-3", "divided-power-axiom-4",
                "divided-power-axiom-5", "divided-power-pullback", "divided-power-exact-division"},
       trials, o.seed);
  {
    bool ok = true;
    Json w = nullptr;
    PolarizedModel pm = PolarizedModel::principal(g);
    for (int r = 0; r <= g; ++r)
      for (int s = 0; r + s <= g; ++s)
        if (!poincare_formula_check(pm, r, s) && ok) {
          ok = false;
          w = {{"r", r}, {"s", s}};
        }
    rep.add("poincare-formula", g, ok, w);
  }
  return rep;
}

Report fourier_suite(const SuiteOptions& o) {
  require_g(o, 1, 3, "fourier");
  return fourier_identity_suite(PolarizedModel::principal(o.g), o.seed);
}

namespace {

void compare_systems(Report& rep, int g, const std::string& name, const std::vector<CorrClass>& lhs,
                     const std::vector<CorrClass>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == rhs[i])) {
      rep.add(name, g, false, {{"i", i}, {"lhs", to_json(lhs[i].cls())}, {"rhs", to_json(rhs[i].cls())}});
      return;
    }
  rep.add(name, g, true);
}

void sum_is_diagonal(Report& rep, int g, const std::string& name, const std::vector<CorrClass>& p) {
  CorrClass s = CorrClass::zero(p.front().source(), p.front().target());
  for (const auto& c : p) s += c;
  CorrClass d = diagonal(g);
  rep.add(name, g, s == d, {{"sum", to_json(s.cls())}});
}

}  // namespace

Report scholl_suite(const SuiteOptions& o) {
  require_g(o, 1, 3, "scholl");
  const int g = o.g;
  PolarizedModel m = PolarizedModel::principal(g);
  auto p = scholl_projectors(m);
  Report rep;
  compare_systems(rep, g, "scholl-equals-kuenneth", p, kuenneth_projectors(g));
  sum_is_diagonal(rep, g, "scholl-sum-diagonal", p);
  ProjectorSystem sq;
  for (const auto& c : p) sq.emplace_back(compose(c, c), TorsionElt(g));
  DmReport dm = check_dm(sq, {-3, -2, -1, 1, 2, 3});
  rep.add("scholl-squares-dm", g, dm.projectors_pass() && dm.mult_pass() && dm.transpose_pass(), to_json(dm));
  return rep;
}

Report suh_suite(const SuiteOptions& o) {
  require_g(o, 1, 3, "suh");
  const int g = o.g;
  PolarizedModel m = PolarizedModel::principal(g);
  auto expanded = suh_projectors(m, SuhVariant::expanded);
  auto chu = suh_projectors(m, SuhVariant::chu_vandermonde);
  Report rep;
  compare_systems(rep, g, "suh-expanded-equals-scholl", expanded, scholl_projectors(m));
  compare_systems(rep, g, "suh-chu-vandermonde-equals-expanded", chu, expanded);
  sum_is_diagonal(rep, g, "suh-sum-diagonal", expanded);
  return rep;
}

namespace {

const std::vector<long> kSquaringDenominators{2, 3, 4, 8};
const std::vector<long> kOddDenominators{3, 5, 7, 9};
const std::vector<long> kQuarterDenominators{4};
const std::vector<long> kTestedN{-4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 8, 9};

bool is_square(long n) {
  if (n < 0) return false;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

Json system_json(const ProjectorSystem& s) {
  Json a = Json::array();
  for (const auto& e : s) a.push_back(to_json(e));
  return a;
}

}  // namespace

Report lifting_suite(const SuiteOptions& o) {
  require_g(o, 1, 3, "lifting");
  const int g = o.g;
  Report rep;
  {
    DmReport dm = check_dm(kuenneth_system(g), kTestedN);
    rep.add("kuenneth-system-dm", g, dm.projectors_pass() && dm.mult_pass() && dm.transpose_pass(), to_json(dm));
  }
  std::function<Outcome(std::size_t)> trial = [&](std::size_t t) {
    Outcome out;
    Rng rng(trial_seed(o.seed, t));

    ProjectorSystem lifts = random_zero_sum_lifts(g, rng, kSquaringDenominators);
    SquaringResult sq = lift_by_squaring(lifts);
    out.set("squaring-complete-orthogonal", sq.report.pass(),
            {{"lifts", system_json(lifts)}, {"report", to_json(sq.report)}});
    bool idem = true;
    for (bool b : sq.report.idempotent) idem = idem && b;
    out.set("squaring-idempotent", idem, to_json(sq.report));
    out.set("squaring-band-characterization", sq.report.pass() == sq.report.band_condition, to_json(sq.report));

    {  // a single pair of opposite tails on adjacent indices
      const int i = static_cast<int>(rng.uniform(0, 2 * g - 1));
      TorsionElt t = random_tail(g, rng, kSquaringDenominators);
      ProjectorSystem pair = kuenneth_system(g);
      pair[i].tail = t;
      pair[i + 1].tail = -t;
      SquaringResult r = lift_by_squaring(pair);
      bool ok = true;
      for (bool b : r.report.idempotent) ok = ok && b;
      out.set("squaring-pair-idempotent", ok, to_json(r.report));
    }

    {  // odd torsion is corrected completely
      ProjectorSystem pi0 = random_orthogonal_system(g, rng, kOddDenominators);
      Correction c = correct_projectors(pi0);
      DmReport dm = check_dm(c.projectors, kTestedN);
      out.set("correction-odd-projectors", dm.projectors_pass(), to_json(dm));
      out.set("correction-odd-exact", dm.mult_pass(), {{"pi0", system_json(pi0)}, {"dm", to_json(dm)}});
    }

    {  // denominator 4: only 2-torsion defects, vanishing for squares and 4 | n
      ProjectorSystem pi0 = random_orthogonal_system(g, rng, kQuarterDenominators);
      Correction c = correct_projectors(pi0);
      DmReport dm = check_dm(c.projectors, kTestedN);
      out.set("correction-quarter-projectors", dm.projectors_pass(), to_json(dm));
      out.set("correction-quarter-times-two", dm.mult2_pass(), to_json(dm));
      bool square_four = true, doubling = true;
      Json w = nullptr;
      for (int i = 0; i <= 2 * g; ++i)
        for (long n : kTestedN) {
          TorsionElt r = dm_residual(c.projectors, i, n);
          if ((is_square(n) || n % 4 == 0) && !r.is_zero()) {
            square_four = false;
            w = {{"i", i}, {"n", n}, {"residual", to_json(r)}};
          }
          if (n % 2 != 0 && !(dm_residual(c.projectors, i, 2 * n) == dm_residual(c.projectors, i, 2))) doubling = false;
        }
      out.set("correction-quarter-square-or-four", square_four, w);
      out.set("correction-quarter-doubling", doubling, {{"pi0", system_json(pi0)}});

      // a nonzero tail never commutes with every corrected projector
      TorsionElt x = random_tail(g, rng, kSquaringDenominators);
      if (!x.is_zero()) out.set("correction-uniqueness", non_commuting_index(c.projectors, x).has_value(), to_json(x));
      else out.set("correction-uniqueness", true);
    }
    return out;
  };
  auto trials = parallel_trials<Outcome>(static_cast<std::size_t>(o.trials), trial);
  fold(rep, g,
       {"squaring-complete-orthogonal", "squaring-idempotent", "squaring-band-characterization",
        "squaring-pair-idempotent", "correction-odd-projectors", "correction-odd-exact",
        "correction-quarter-projectors", "correction-quarter-times-two", "correction-quarter-square-or-four",
        "correction-quarter-doubling", "correction-uniqueness"},
       trials, o.seed);
  return rep;
}

Report hochschild_suite(const SuiteOptions& o) {
  Report rep;
  const std::vector<std::pair<long, long>> levels{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {3, 0}};
  for (auto [i, j] : levels)
    for (long N : {2L, 3L, 4L, 8L, 9L}) {
      HochschildReport h = hochschild_verify(i, j, N, 13, o.trials, trial_seed(o.seed, static_cast<std::uint64_t>(i * 100 + j * 10 + N)));
      std::string name = "hochschild-" + std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(N);
      rep.add(name, o.g, h.pass(), to_json(h));
    }
  return rep;
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "divided-powers") return divided_power_suite(o);
  if (name == "fourier") return fourier_suite(o);
  if (name == "scholl") return scholl_suite(o);
  if (name == "suh") return suh_suite(o);
  if (name == "lifting") return lifting_suite(o);
  if (name == "hochschild") return hochschild_suite(o);
  if (name == "all") {
    Report rep;
    for (const auto& n : suite_names()) rep.append(run_suite(n, o));
    return rep;
  }
  throw PreconditionError("unknown suite: " + name);
}

}  // namespace abacus
