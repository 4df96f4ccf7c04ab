#include "abacus/serialize.hpp"

#include <sstream>

namespace abacus {

namespace {

std::string hex(Mask m) {
  std::ostringstream os;
  os << "0x" << std::hex << m;
  return os.str();
}

Json bool_matrix(const std::vector<std::vector<bool>>& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

}  // namespace

Json to_json(const MultiVector& x) {
  Json j = Json::array();
  for (const auto& [m, c] : x.terms())
    j.push_back({{"mask", hex(m)}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
  return j;
}

MultiVector multivector_from_json(const Space& space, const Json& j) {
  MultiVector x(space);
  for (const auto& t : j) {
    Mask m = std::stoull(t.at("mask").get<std::string>(), nullptr, 16);
    Rational c(Integer(t.at("numerator").get<std::string>()), Integer(t.at("denominator").get<std::string>()));
    c.canonicalize();
    if (m & ~space.full_mask()) throw PreconditionError("mask outside the space");
    x.add_term(m, c);
  }
  return x;
}

Json projector_entry(int g, int i, const CorrClass& c) {
  return {{"g", g}, {"i", i}, {"class", to_json(c.cls())}};
}

Json to_json(const TorsionElt& t) {
  Json blocks = Json::array();
  for (int i = 1; i <= 2 * t.g(); ++i)
    for (int r = 0; r < t.rows(i); ++r)
      for (int c = 0; c < t.cols(i); ++c) {
        const QmodZ& v = t.at(i, r, c);
        if (!v.is_zero()) blocks.push_back({{"block", i}, {"row", r}, {"col", c}, {"value", v.value().get_str()}});
      }
  return {{"g", t.g()}, {"entries", blocks}};
}

Json to_json(const ExtCorr& e) { return {{"body", to_json(e.body.cls())}, {"tail", to_json(e.tail)}}; }

Json to_json(const numerology::WijResult& w) {
  Json v = Json::object();
  for (const auto& [l, b] : w.valuations) v[std::to_string(l)] = {b.first, b.second};
  return {{"i", w.i}, {"j", w.j}, {"value", w.value.get_str()}, {"certified", w.certified}, {"valuations", v}};
}

Json to_json(const numerology::BoundResult& b) {
  Json f = Json::array();
  for (const auto& w : b.factors) f.push_back(to_json(w));
  return {{"value", b.value.get_str()}, {"certified", b.certified}, {"factors", f}};
}

Json to_json(const SquaringReport& r) {
  Json pairs = Json::array();
  for (auto [i, j] : r.non_orthogonal) pairs.push_back({i, j});
  return {{"idempotent", r.idempotent},
          {"non_orthogonal", pairs},
          {"complete", r.complete},
          {"band_condition", r.band_condition},
          {"sum_defect", to_json(r.sum_defect)},
          {"pass", r.pass()}};
}

Json to_json(const DmReport& r) {
  return {{"g", r.g},
          {"ns", r.ns},
          {"idempotent", r.idempotent},
          {"orthogonal", bool_matrix(r.orthogonal)},
          {"sum", r.sum},
          {"mult", bool_matrix(r.mult)},
          {"mult2", bool_matrix(r.mult2)},
          {"transpose", r.transpose}};
}

Json to_json(const HochschildReport& r) {
  return {{"i", r.i},
          {"j", r.j},
          {"N", r.N},
          {"prime_bound", r.prime_bound},
          {"w", r.w.get_str()},
          {"w_certified", r.w_certified},
          {"hh0", r.hh0_direct},
          {"hh0_expected", r.hh0_expected},
          {"cocycles", r.cocycles},
          {"sampled", r.sampled},
          {"rejected", r.rejected},
          {"extension_consistent", r.extension_consistent},
          {"annihilated", r.annihilated},
          {"j_zero", r.j_zero},
          {"coboundaries", r.coboundaries},
          {"parity_case", r.parity_case},
          {"square_law", r.square_law},
          {"four_law", r.four_law},
          {"double_law", r.double_law},
          {"pass", r.pass()},
          {"witness", r.witness}};
}

Json to_json(const CheckResult& c) {
  return {{"identity", c.identity}, {"g", c.g}, {"pass", c.pass}, {"witness", c.witness}};
}

Json to_json(const Report& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) a.push_back(to_json(c));
  return a;
}

}  // namespace abacus
