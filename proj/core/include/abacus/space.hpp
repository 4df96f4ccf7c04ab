#pragma once

#include <string>
#include <vector>

#include "abacus/types.hpp"

namespace abacus {

// A free module Z^rank playing the role of H^1. Products concatenate bases,
// first factor first. Ranks are limited to 62 so masks fit a machine word.
class Space {
 public:
  Space() = default;
  Space(std::string label, int rank);

  static Space product(const Space& a, const Space& b);
  static Space product(const std::vector<Space>& factors);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int dimension() const { return rank_ / 2; }
  Mask full_mask() const;

  const std::vector<int>& factor_ranks() const { return factor_ranks_; }
  int factor_count() const { return static_cast<int>(factor_ranks_.size()); }
  int factor_offset(int k) const;
  Space factor(int k) const;
  Mask factor_mask(int k) const;

  // Labels are informational; equality is structural.
  bool operator==(const Space& other) const {
    return rank_ == other.rank_ && factor_ranks_ == other.factor_ranks_;
  }

 private:
  std::string label_;
  int rank_ = 0;
  std::vector<int> factor_ranks_;
  std::vector<std::string> factor_labels_;
};

void require_same(const Space& a, const Space& b, const char* where);

// +1 or -1: the sign of e_S ^ e_T = sign * e_{S u T} for disjoint S, T.
int wedge_sign(Mask s, Mask t);

// All masks of the given popcount among `rank` bits, ascending.
std::vector<Mask> masks_of_degree(int rank, int k);

int popcount(Mask m);

// Position of `m` in masks_of_degree(rank, popcount(m)).
int mask_rank(Mask m);

}  // namespace abacus
