#pragma once

#include <optional>
#include <utility>
#include <vector>


#include "abacus/cocycle.hpp"
#include "abacus/random.hpp"
#include "abacus/torsion.hpp"

namespace abacus {

using ProjectorSystem = std::vector<ExtCorr>;

ProjectorSystem kuenneth_system(int g);

struct SquaringReport {
  std::vector<bool> idempotent;
  std::vector<std::pair<int, int>> non_orthogonal;
  bool complete = false;          // squares sum to the identity
  TorsionElt sum_defect;          // tail of (sum of squares) - 1
  bool band_condition = false;    // t^{k-1}_k + t^k_k = 0 for every block k
  bool pass() const;
};

struct SquaringResult {
  ProjectorSystem squares;
  SquaringReport report;
};

// Squares each lift. Throws PreconditionError naming the failing index when
// a body is not the Kuenneth projector or the tails do not sum to zero.
SquaringResult lift_by_squaring(const ProjectorSystem& lifts);

// Do the squares of these lifts form a complete orthogonal system? This is
// the case exactly when the band condition holds.
bool squaring_band_condition(const ProjectorSystem& lifts);

using TailCocycle = Cocycle<TorsionElt>;

// y_i(n) = tail of (n^* o pi_i - n^i pi_i) at level (i, i-1), for every n in
// ns and every product of two of them.
TailCocycle cocycle_of_lift(const ProjectorSystem& pi, int i, const std::vector<long>& ns);

struct Correction {
  ProjectorSystem projectors;
  TorsionElt x;                   // conjugating tail: pi = (1+x) pi0 (1-x)
  std::vector<TorsionElt> b;      // split elements per index (index 0 unused)
};

Correction correct_projectors(const ProjectorSystem& pi0, const std::vector<long>& ns = {-1, 2, 3});

struct DmReport {
  int g = 0;
  std::vector<long> ns;
  std::vector<bool> idempotent;
  std::vector<std::vector<bool>> orthogonal;
  bool sum = false;
  std::vector<std::vector<bool>> mult;    // [i][k]: n_k^* pi_i = n_k^i pi_i
  std::vector<std::vector<bool>> mult2;   // same after multiplying by 2
  std::vector<bool> transpose;            // t pi_i = pi_{2g-i}

  bool projectors_pass() const;
  bool mult_pass() const;
  bool mult2_pass() const;
  bool transpose_pass() const;
};

DmReport check_dm(const ProjectorSystem& pi, const std::vector<long>& ns);

// Tail of n^* o pi_i - n^i pi_i.
TorsionElt dm_residual(const ProjectorSystem& pi, int i, long n);
// Tail of pi_i o ((2)_* - 2^{2g-i}).
TorsionElt pushforward_defect(const ProjectorSystem& pi, int i);

// Some i with (1+x) pi_i != pi_i (1+x), or nullopt when x commutes with all.
std::optional<int> non_commuting_index(const ProjectorSystem& pi, const TorsionElt& x);

// Random tail with entries k/q, q drawn from `denominators`.
TorsionElt random_tail(int g, Rng& rng, const std::vector<long>& denominators, int density_percent = 50);
// Lifts (pi^i, t^i) of the Kuenneth projectors with the t^i summing to zero.
ProjectorSystem random_zero_sum_lifts(int g, Rng& rng, const std::vector<long>& denominators);
// (1+z) o pi^i o (1-z) for a random tail z: an orthogonal complete system.
ProjectorSystem random_orthogonal_system(int g, Rng& rng, const std::vector<long>& denominators);
ProjectorSystem conjugate(const ProjectorSystem& pi, const TorsionElt& x);

}  // namespace abacus
