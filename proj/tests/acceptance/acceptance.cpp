// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
//   acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "abacus/beaufourier.hpp"
#include "abacus/hochschild.hpp"
#include "abacus/lifting.hpp"
#include "abacus/numerology.hpp"
#include "abacus/suites.hpp"

using namespace abacus;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // printed under the criterion line
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Trial, seed and failure count of a folded witness; the full payload is available from the CLI.
std::string brief(const Json& w) {
  if (!w.is_object()) return w.dump();
  Json b = Json::object();
  for (const char* k : {"trial", "trial_seed", "failed_trials", "trials"})
    if (w.contains(k)) b[k] = w[k];
  if (b.empty()) {
    std::string d = w.dump();
    return d.size() > 300 ? d.substr(0, 300) + "..." : d;
  }
  return b.dump();
}

bool check_report(Outcome& o, const Report& r, const std::vector<std::string>& only = {}) {
  bool ok = true;
  for (const auto& c : r.checks) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.identity) == only.end()) continue;
    if (!c.pass) ok = false;
    o.require(c.pass, c.identity + " g=" + std::to_string(c.g) + (c.pass ? "" : " witness " + brief(c.witness)));
  }
  return ok;
}

Outcome criterion1() {
  using namespace numerology;
  Outcome o;
  auto expect = [&](long i, long j, long v) {
    WijResult r = w_certified(i, j);
    o.require(r.value == v && r.certified, "w_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + std::to_string(v));
  };
  expect(2, 1, 2);
  expect(3, 1, 6);
  expect(4, 2, 12);
  for (long i = 1; i <= 10; ++i) expect(i, 0, 1);
  for (long i = 2; i <= 12; ++i)
    for (long j = 1; j < i; ++j)
      if ((i - j) % 2 == 1) expect(i, j, 2);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int g = 1; g <= 3; ++g) {
    const Space a = abelian_space(g);
    auto p = kuenneth_projectors(g);
    CorrClass sum = CorrClass::zero(a, a);
    const std::string gs = " g=" + std::to_string(g);
    for (int i = 0; i <= 2 * g; ++i) {
      sum += p[i];
      for (int j = 0; j <= 2 * g; ++j) {
        CorrClass c = compose(p[i], p[j]);
        o.require(i == j ? c == p[i] : c.cls().is_zero(), "pi^" + std::to_string(i) + " o pi^" + std::to_string(j) + gs);
      }
      o.require(transpose(p[i]) == p[2 * g - i], "transpose of pi^" + std::to_string(i) + gs);
      for (long n = -3; n <= 3; ++n) {
        CorrClass pull = graph(Homomorphism::scalar(a, n));
        o.require(compose(pull, p[i]) == Rational(ipow(n, i)) * p[i], "n^* pi^i, n=" + std::to_string(n) + gs);
        o.require(compose(p[i], transpose(pull)) == Rational(ipow(n, 2 * g - i)) * p[i],
                  "pi^i n_*, n=" + std::to_string(n) + gs);
      }
    }
    o.require(sum == diagonal(g), "sum equals diagonal" + gs);
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int g = 1; g <= 3; ++g) {
    SuiteOptions opt{g, 1, 0};
    check_report(o, scholl_suite(opt), {"scholl-equals-kuenneth", "scholl-sum-diagonal"});
    check_report(o, suh_suite(opt), {"suh-expanded-equals-scholl", "suh-chu-vandermonde-equals-expanded"});
  }
  o.note("suh2 uses the binomial C(r+s, s+g-i); the literal C(r+s, s+i-g) yields the reflected index");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) check_report(o, divided_power_suite(SuiteOptions{g, 100, 0}));
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int g = 1; g <= 2; ++g) check_report(o, fourier_suite(SuiteOptions{g, 1, 0}));
  check_report(o, fourier_suite(SuiteOptions{3, 1, 0}), {"fourier-inversion", "fourier-kernel-pushforward"});
  o.note("kernel pushforward checked in the signed form (-1)^g [0]");
  return o;
}

Outcome criterion6() {
  Outcome o;
  Report lift = lifting_suite(SuiteOptions{2, 100, 0});
  Outcome a, b;
  check_report(a, lift, {"squaring-complete-orthogonal"});
  check_report(b, lift,
               {"correction-odd-projectors", "correction-odd-exact", "correction-quarter-projectors",
                "correction-quarter-times-two", "correction-quarter-square-or-four"});
  bool idem = true, band = true;
  for (const auto& c : lift.checks) {
    if (c.identity == "squaring-idempotent") idem = c.pass;
    if (c.identity == "squaring-band-characterization") band = c.pass;
  }
  Outcome h;
  for (auto [i, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}})
    for (long N : {2L, 3L, 4L, 8L, 9L}) {
      HochschildReport r = hochschild_verify(i, j, N, 13, 100, static_cast<std::uint64_t>(i * 100 + j * 10 + N));
      h.require(r.pass(), "hochschild (" + std::to_string(i) + "," + std::to_string(j) + ") N=" + std::to_string(N));
    }
  o.pass = a.pass && b.pass && h.pass;
  o.note(std::string("6(a) squaring: ") + (a.pass ? "PASS" : "FAIL"));
  for (const auto& n : a.notes) o.note("  " + n);
  if (!a.pass)
    o.note(std::string("  squares always idempotent: ") + (idem ? "yes" : "NO") +
           "; complete and orthogonal exactly when t^{k-1}_k + t^k_k = 0 for every block k: " + (band ? "yes" : "NO"));
  if (!a.pass) {
    ProjectorSystem s = kuenneth_system(1);
    TorsionElt t(1);
    t.set(2, 0, 0, Rational(1, 2));
    s[0].tail = t;
    s[1].tail = -t;
    SquaringReport r = lift_by_squaring(s).report;
    o.note(std::string("  smallest case: g=1, lifts pi^0 + t, pi^1 - t, pi^2 with t = 1/2 at entry (0,0) of block 2: ") +
           "complete=" + (r.complete ? "yes" : "no") + ", non-orthogonal pairs=" + std::to_string(r.non_orthogonal.size()));
  }
  o.note(std::string("6(b) correction: ") + (b.pass ? "PASS" : "FAIL"));
  for (const auto& n : b.notes) o.note("  " + n);
  o.note(std::string("6(c) hochschild: ") + (h.pass ? "PASS" : "FAIL"));
  for (const auto& n : h.notes) o.note("  " + n);
  return o;
}

Outcome criterion7() {
  using namespace numerology;
  Outcome o;
  o.require(bound_M(2, 2) == 42, "bound_M(2,2) = 42");
  o.require(bound_M(1, 0) == 2, "bound_M(1,0) = 2");
  BoundResult n = bound_N(2, 1, 0);
  o.require(n.value == 2 && n.certified, "bound_N(2,1,0) = 2, certified");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> all{
      {1, "numerology", 1, criterion1},
      {2, "kuenneth layer", 30, criterion2},
      {3, "scholl/suh projectors", 60, criterion3},
      {4, "divided powers", 120, criterion4},
      {5, "fourier", 120, criterion5},
      {6, "torsion lifting", 120, criterion6},
      {7, "bounds", 1, criterion7},
  };
  bool ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.require(false, "runtime budget " + std::to_string(c.budget_s) + " s exceeded");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL") << "  [" << s << " s]";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
