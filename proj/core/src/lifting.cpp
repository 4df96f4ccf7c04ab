#include "abacus/lifting.hpp"

#include <set>
#include <string>

namespace abacus {

ProjectorSystem kuenneth_system(int g) {
  ProjectorSystem out;
  for (int i = 0; i <= 2 * g; ++i) out.push_back(ExtCorr::kuenneth(g, i));
  return out;
}

namespace {

int system_dimension(const ProjectorSystem& pi) {
  if (pi.empty() || pi.size() % 2 == 0) throw PreconditionError("a projector system has 2g+1 members");
  const int g = static_cast<int>(pi.size() - 1) / 2;
  for (const auto& p : pi)
    if (p.g() != g) throw PreconditionError("projector system members disagree on g");
  return g;
}

bool is_zero(const ExtCorr& e) { return e.body.cls().is_zero() && e.tail.is_zero(); }

ExtCorr sum(const ProjectorSystem& pi) {
  ExtCorr s = ExtCorr::torsion(TorsionElt(pi.front().g()));
  for (const auto& p : pi) s += p;
  return s;
}

}  // namespace

bool SquaringReport::pass() const {
  for (bool b : idempotent)
    if (!b) return false;
  return non_orthogonal.empty() && complete;
}

bool squaring_band_condition(const ProjectorSystem& lifts) {
  const int g = system_dimension(lifts);
  for (int k = 1; k <= 2 * g; ++k) {
    TorsionElt s = lifts[k - 1].tail.block_part(k) + lifts[k].tail.block_part(k);
    if (!s.is_zero()) return false;
  }
  return true;
}

SquaringResult lift_by_squaring(const ProjectorSystem& lifts) {
  const int g = system_dimension(lifts);
  for (int i = 0; i <= 2 * g; ++i)
    if (!(lifts[i].body == kuenneth_projector(g, i)))
      throw PreconditionError("lift " + std::to_string(i) + " does not lift the Kuenneth projector of index " + std::to_string(i));
  TorsionElt tails(g);
  for (const auto& l : lifts) tails += l.tail;
  if (!tails.is_zero()) throw PreconditionError("lift tails do not sum to zero");

  SquaringResult res;
  for (const auto& l : lifts) res.squares.push_back(ext_compose(l, l));
  SquaringReport& rep = res.report;
  for (int i = 0; i <= 2 * g; ++i) {
    const ExtCorr& p = res.squares[i];
    rep.idempotent.push_back(ext_compose(p, p) == p);
    for (int j = 0; j <= 2 * g; ++j)
      if (i != j && !is_zero(ext_compose(p, res.squares[j]))) rep.non_orthogonal.emplace_back(i, j);
  }
  ExtCorr s = sum(res.squares);
  rep.sum_defect = s.tail;
  rep.complete = s == ExtCorr::identity(g);
  rep.band_condition = squaring_band_condition(lifts);
  return res;
}

TailCocycle cocycle_of_lift(const ProjectorSystem& pi, int i, const std::vector<long>& ns) {
  const int g = system_dimension(pi);
  if (i < 1 || i > 2 * g) throw PreconditionError("cocycle_of_lift needs 1 <= i <= 2g");
  std::set<long> args(ns.begin(), ns.end());
  for (long m : ns)
    for (long n : ns) args.insert(m * n);
  if (args.count(0)) throw PreconditionError("cocycle_of_lift needs nonzero n");

  TailCocycle f;
  f.i = i;
  f.j = i - 1;
  const ExtCorr& p = pi[i];
  for (long n : args) {
    ExtCorr y = n_star(p, n) - ipow(n, i) * p;
    if (!y.body.cls().is_zero()) throw CocycleViolation("body of y_i(n) is nonzero at n=" + std::to_string(n));
    if (!(right_act(y.tail, p.body) == y.tail))
      throw CocycleViolation("y_i(n) o pi_i != y_i(n) at n=" + std::to_string(n));
    f.values.emplace(n, y.tail);
  }
  if (auto bad = first_cocycle_failure(f))
    throw CocycleViolation("cocycle relation fails at m=" + std::to_string(bad->first) + " n=" + std::to_string(bad->second));
  for (const auto& [m, fm] : f.values)
    for (const auto& [n, fn] : f.values)
      if (!((ipow(m, f.i) - ipow(m, f.j)) * fn == (ipow(n, f.i) - ipow(n, f.j)) * fm))
        throw CocycleViolation("symmetry relation fails at m=" + std::to_string(m) + " n=" + std::to_string(n));
  return f;
}

ProjectorSystem conjugate(const ProjectorSystem& pi, const TorsionElt& x) {
  const int g = system_dimension(pi);
  ExtCorr plus = ExtCorr::identity(g) + ExtCorr::torsion(x);
  ExtCorr minus = ExtCorr::identity(g) - ExtCorr::torsion(x);
  ProjectorSystem out;
  for (const auto& p : pi) out.push_back(ext_compose(ext_compose(plus, p), minus));
  return out;
}

Correction correct_projectors(const ProjectorSystem& pi0, const std::vector<long>& ns) {
  const int g = system_dimension(pi0);
  Correction c;
  c.x = TorsionElt(g);
  c.b.assign(2 * g + 1, TorsionElt(g));
  for (int i = 1; i <= 2 * g; ++i) {
    TailCocycle f = cocycle_of_lift(pi0, i, ns);
    c.b[i] = split_refined_coboundary(f);
    const Integer w = numerology::w_certified(i, i - 1).value;
    c.x += c.b[i].divide(w);
  }
  c.projectors = conjugate(pi0, c.x);
  return c;
}

TorsionElt dm_residual(const ProjectorSystem& pi, int i, long n) {
  ExtCorr y = n_star(pi.at(i), n) - ipow(n, i) * pi.at(i);
  if (!y.body.cls().is_zero()) throw PreconditionError("body does not satisfy the multiplication relation");
  return y.tail;
}

TorsionElt pushforward_defect(const ProjectorSystem& pi, int i) {
  const int g = system_dimension(pi);
  const Space a = abelian_space(g);
  CorrClass push2 = transpose(graph(Homomorphism::scalar(a, 2)));
  ExtCorr d(push2 - Rational(ipow(2, 2 * g - i)) * diagonal(a), TorsionElt(g));
  return ext_compose(pi.at(i), d).tail;
}

std::optional<int> non_commuting_index(const ProjectorSystem& pi, const TorsionElt& x) {
  ExtCorr t = ExtCorr::torsion(x);
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (!(ext_compose(t, pi[i]) == ext_compose(pi[i], t))) return static_cast<int>(i);
  return std::nullopt;
}

bool DmReport::projectors_pass() const {
  for (bool b : idempotent)
    if (!b) return false;
  for (const auto& row : orthogonal)
    for (bool b : row)
      if (!b) return false;
  return sum;
}

namespace {
bool all_of(const std::vector<std::vector<bool>>& m) {
  for (const auto& row : m)
    for (bool b : row)
      if (!b) return false;
  return true;
}
}  // namespace

bool DmReport::mult_pass() const { return all_of(mult); }
bool DmReport::mult2_pass() const { return all_of(mult2); }
bool DmReport::transpose_pass() const {
  for (bool b : transpose)
    if (!b) return false;
  return true;
}

DmReport check_dm(const ProjectorSystem& pi, const std::vector<long>& ns) {
  const int g = system_dimension(pi);
  DmReport r;
  r.g = g;
  r.ns = ns;
  const int n = 2 * g + 1;
  r.orthogonal.assign(n, std::vector<bool>(n, true));
  for (int i = 0; i < n; ++i) {
    r.idempotent.push_back(ext_compose(pi[i], pi[i]) == pi[i]);
    for (int j = 0; j < n; ++j)
      if (i != j) r.orthogonal[i][j] = is_zero(ext_compose(pi[i], pi[j]));
    std::vector<bool> m, m2;
    for (long k : ns) {
      ExtCorr y = n_star(pi[i], k) - ipow(k, i) * pi[i];
      m.push_back(is_zero(y));
      m2.push_back(is_zero(Integer(2) * y));
    }
    r.mult.push_back(std::move(m));
    r.mult2.push_back(std::move(m2));
    r.transpose.push_back(ext_transpose(pi[i]) == pi[2 * g - i]);
  }
  r.sum = sum(pi) == ExtCorr::identity(g);
  return r;
}

TorsionElt random_tail(int g, Rng& rng, const std::vector<long>& denominators, int density_percent) {
  TorsionElt t(g);
  for (int i = 1; i <= 2 * g; ++i)
    for (int r = 0; r < t.rows(i); ++r)
      for (int c = 0; c < t.cols(i); ++c) {
        if (rng.uniform(1, 100) > density_percent) continue;
        long q = denominators[rng.uniform(0, static_cast<long>(denominators.size()) - 1)];
        Rational v(rng.uniform(1, q - 1), q);
        v.canonicalize();
        t.set(i, r, c, v);
      }
  return t;
}

ProjectorSystem random_zero_sum_lifts(int g, Rng& rng, const std::vector<long>& denominators) {
  ProjectorSystem out;
  TorsionElt total(g);
  for (int i = 0; i < 2 * g; ++i) {
    TorsionElt t = random_tail(g, rng, denominators);
    total += t;
    out.emplace_back(kuenneth_projector(g, i), t);
  }
  out.emplace_back(kuenneth_projector(g, 2 * g), -total);
  return out;
}

ProjectorSystem random_orthogonal_system(int g, Rng& rng, const std::vector<long>& denominators) {
  return conjugate(kuenneth_system(g), random_tail(g, rng, denominators));
}

}  // namespace abacus
