#pragma once

#include <nlohmann/json.hpp>

#include "abacus/corr.hpp"
#include "abacus/hochschild.hpp"
#include "abacus/lifting.hpp"
#include "abacus/numerology.hpp"
#include "abacus/report.hpp"

namespace abacus {

// [{"mask": "0x3", "numerator": "1", "denominator": "1"}, ...], mask ascending
Json to_json(const MultiVector& x);
MultiVector multivector_from_json(const Space& space, const Json& j);

Json projector_entry(int g, int i, const CorrClass& c);
Json to_json(const TorsionElt& t);
Json to_json(const ExtCorr& e);
Json to_json(const numerology::WijResult& w);
Json to_json(const numerology::BoundResult& b);
Json to_json(const SquaringReport& r);
Json to_json(const DmReport& r);
Json to_json(const HochschildReport& r);

}  // namespace abacus
