#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "abacus/corr.hpp"
#include "abacus/report.hpp"

namespace abacus {

// Abelian variety of dimension g with a polarization of type (d_1 | ... | d_g).
// The dual is identified with A through the polarization, which is only
// meaningful for principal models.
class PolarizedModel {
 public:
  PolarizedModel(int g, std::vector<long> elementary_divisors);
  static PolarizedModel principal(int g);

  int g() const { return g_; }
  const std::vector<long>& elementary_divisors() const { return divisors_; }
  Integer nu() const;
  bool is_principal() const;

  Space a() const { return abelian_space(g_, "A"); }
  Space ahat() const { return abelian_space(g_, "Ahat"); }
  Space a_x_a() const { return Space::product(a(), a()); }
  Space a_x_ahat() const { return Space::product(a(), ahat()); }

 private:
  int g_;
  std::vector<long> divisors_;
};

// sum_j d_j e_{2j-1} e_{2j}
MultiVector theta_class(const PolarizedModel& m);
// mu^* d - p1^* d - p2^* d on A x Ahat
MultiVector poincare_class(const PolarizedModel& m);
MultiVector fourier_kernel(const PolarizedModel& m);  // e^l
MultiVector fourier(const PolarizedModel& m, const MultiVector& x);
MultiVector fourier_inverse(const PolarizedModel& m, const MultiVector& y);

MultiVector pontryagin(const MultiVector& x, const MultiVector& y);
MultiVector pontryagin_power(const MultiVector& x, unsigned n);
MultiVector pontryagin_divided_power(const MultiVector& x, unsigned n);

// s -> component of exterior degree 2i - s
std::map<int, MultiVector> beauville_split(const MultiVector& x, int i);

std::vector<CorrClass> scholl_projectors(const PolarizedModel& m);
// chu_vandermonde uses the binomial C(r+s, s+g-i) obtained by expanding the
// divided powers of l; chu_vandermonde_as_printed uses C(r+s, s+i-g), which
// yields the projector of index 2g - i.
enum class SuhVariant { expanded, chu_vandermonde, chu_vandermonde_as_printed };
std::vector<CorrClass> suh_projectors(const PolarizedModel& m, SuhVariant variant);

bool poincare_formula_check(const PolarizedModel& m, int r, int s);

Report fourier_identity_suite(const PolarizedModel& m, std::uint64_t seed = 0);

}  // namespace abacus
