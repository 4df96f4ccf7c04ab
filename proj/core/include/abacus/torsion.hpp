#pragma once

#include <vector>

#include "abacus/corr.hpp"
#include "abacus/qz.hpp"

namespace abacus {

// Torsion correspondence: for each degree i in 1..2g a map H^i -> H^{i-1}
// with Q/Z entries (rows: degree i-1 masks, columns: degree i masks).
class TorsionElt {
 public:
  TorsionElt() = default;
  explicit TorsionElt(int g);

  int g() const { return g_; }
  int rows(int i) const;
  int cols(int i) const;
  const QmodZ& at(int i, int r, int c) const;
  void set(int i, int r, int c, const Rational& v);
  void set(int i, int r, int c, const QmodZ& v);

  bool is_zero() const;
  bool supported_in(int i) const;  // every other block vanishes
  TorsionElt block_part(int i) const;
  // Representative preimage under multiplication by w.
  TorsionElt divide(const Integer& w) const;
  // lcm of entry orders
  Integer order() const;

  TorsionElt& operator+=(const TorsionElt& o);
  TorsionElt& operator-=(const TorsionElt& o);
  TorsionElt& operator*=(const Integer& n);
  bool operator==(const TorsionElt& o) const { return g_ == o.g_ && blocks_ == o.blocks_; }

  // Class on A x A of degree 2g - 1 with the entries as rational coefficients.
  CorrClass as_class() const;
  static TorsionElt from_class(const CorrClass& c);

 private:
  struct Block {
    int rows = 0, cols = 0;
    std::vector<QmodZ> data;
    bool operator==(const Block&) const = default;
  };
  int g_ = 0;
  std::vector<Block> blocks_;  // index 0 unused
  void check(int i) const;
};

TorsionElt operator+(TorsionElt a, const TorsionElt& b);
TorsionElt operator-(TorsionElt a, const TorsionElt& b);
TorsionElt operator*(const Integer& n, TorsionElt a);
TorsionElt operator-(TorsionElt a);

// body o t and t o body; body blocks must be integral.
TorsionElt left_act(const CorrClass& body, const TorsionElt& t);
TorsionElt right_act(const TorsionElt& t, const CorrClass& body);

// Element of the square-zero extension: torsion-free body plus torsion tail.
struct ExtCorr {
  CorrClass body;
  TorsionElt tail;

  ExtCorr(CorrClass b, TorsionElt t);
  static ExtCorr identity(int g);
  static ExtCorr kuenneth(int g, int i);
  static ExtCorr torsion(const TorsionElt& t);

  int g() const { return tail.g(); }
  ExtCorr& operator+=(const ExtCorr& o);
  ExtCorr& operator-=(const ExtCorr& o);
  ExtCorr& operator*=(const Integer& n);
  bool operator==(const ExtCorr& o) const { return body == o.body && tail == o.tail; }
};

ExtCorr operator+(ExtCorr a, const ExtCorr& b);
ExtCorr operator-(ExtCorr a, const ExtCorr& b);
ExtCorr operator*(const Integer& n, ExtCorr a);

ExtCorr ext_compose(const ExtCorr& a, const ExtCorr& b);
// n^* o a
ExtCorr n_star(const ExtCorr& a, const Integer& n);
ExtCorr ext_transpose(const ExtCorr& a);

}  // namespace abacus
