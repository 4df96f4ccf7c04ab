#include "abacus/space.hpp"

#include <bit>

namespace abacus {

Space::Space(std::string label, int rank) : label_(std::move(label)), rank_(rank) {
  if (rank <= 0 || rank % 2 != 0) throw PreconditionError("space rank must be even and positive");
  if (rank > 62) throw PreconditionError("space rank above 62 is not supported");
  factor_ranks_ = {rank};
  factor_labels_ = {label_};
}

Space Space::product(const Space& a, const Space& b) { return product(std::vector<Space>{a, b}); }

Space Space::product(const std::vector<Space>& factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  Space p;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Space& f = factors[k];
    if (k) p.label_ += "x";
    p.label_ += f.label_;
    p.rank_ += f.rank_;
    p.factor_ranks_.insert(p.factor_ranks_.end(), f.factor_ranks_.begin(), f.factor_ranks_.end());
    p.factor_labels_.insert(p.factor_labels_.end(), f.factor_labels_.begin(), f.factor_labels_.end());
  }
  if (p.rank_ > 62) throw PreconditionError("space rank above 62 is not supported");
  return p;
}

Mask Space::full_mask() const { return (Mask(1) << rank_) - 1; }

int Space::factor_offset(int k) const {
  int off = 0;
  for (int q = 0; q < k; ++q) off += factor_ranks_.at(q);
  return off;
}

Space Space::factor(int k) const { return Space(factor_labels_.at(k), factor_ranks_.at(k)); }

Mask Space::factor_mask(int k) const {
  return ((Mask(1) << factor_ranks_.at(k)) - 1) << factor_offset(k);
}

void require_same(const Space& a, const Space& b, const char* where) {
  if (!(a == b))
    throw SpaceMismatch(std::string(where) + ": space mismatch (" + a.label() + " vs " + b.label() + ")");
}

int popcount(Mask m) { return std::popcount(m); }

int wedge_sign(Mask s, Mask t) {
  int inversions = 0;
  while (t) {
    int b = std::countr_zero(t);
    t &= t - 1;
    Mask above = ~((Mask(2) << b) - 1);
    inversions += std::popcount(s & above);
  }
  return (inversions & 1) ? -1 : 1;
}

int mask_rank(Mask m) {
  // colexicographic rank: sum over set bits p_j (j-th from the bottom) of C(p_j, j+1)
  long r = 0;
  int j = 0;
  while (m) {
    int p = std::countr_zero(m);
    m &= m - 1;
    ++j;
    long c = 1;
    for (int q = 0; q < j; ++q) c = c * (p - q) / (q + 1);
    if (p >= j) r += c;
  }
  return static_cast<int>(r);
}

std::vector<Mask> masks_of_degree(int rank, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > rank) return out;
  if (k == 0) return {0};
  Mask m = (Mask(1) << k) - 1;
  const Mask limit = Mask(1) << rank;
  while (m < limit) {
    out.push_back(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

}  // namespace abacus
