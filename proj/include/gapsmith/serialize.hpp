#pragma once

#include <json.hpp>

#include "gapsmith/debreu.hpp"
#include "gapsmith/plmap.hpp"
#include "gapsmith/pointset.hpp"
#include "gapsmith/rational.hpp"
#include "gapsmith/semiorder.hpp"
#include "gapsmith/structure.hpp"
#include "gapsmith/threshold.hpp"

namespace gapsmith {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3/5") so nothing is rounded; decoders also
// accept plain JSON integers. Every decoder throws ParseError.

Json encode(const Rational& r);
Rational decode_rational(const Json& j);

Json encode(const Component& c);
Component decode_component(const Json& j);

Json encode(const PointSet& s);
PointSet decode_pointset(const Json& j);

Json encode(const Gap& g);
Json encode(const std::vector<Gap>& gs);

Json encode(const PLMap& m);
PLMap decode_plmap(const Json& j);

Json encode(const Semiorder& r);
Semiorder decode_semiorder(const Json& j);

Json encode(const SSRep& u);
SSRep decode_ssrep(const Json& j);

Json encode(const AxiomVerdict& v);

Json encode(const StepReport& s);
Json encode(const GapContext& c);
Json encode(const StructureReport& r);

Json encode(const RemovalStep& s);
Json encode(const ThresholdStep& s);
Json encode(const ScheduleTrace& t);

}  // namespace gapsmith
