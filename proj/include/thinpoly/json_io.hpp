// JSON serialization of every report object, with fixed key order so equal
// values serialize to identical bytes.
#pragma once

#include "json.hpp"
#include "thinpoly/batch.hpp"
#include "thinpoly/cd.hpp"
#include "thinpoly/collapse.hpp"
#include "thinpoly/hilbert.hpp"

namespace thinpoly {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const CellSet& p);
ordered_json to_json(const IntPolynomial& f);
ordered_json to_json(const InnerInterval& i);
ordered_json to_json(const CollapseDatum& d);
ordered_json to_json(const NeighbourhoodCase& c);
ordered_json to_json(const Decomposition& dec);
ordered_json to_json(const DecompositionReport& rep);
ordered_json to_json(const CdVerdict& v);
ordered_json to_json(const TraceNode& node);
ordered_json to_json(const HilbertProfile& prof);
ordered_json to_json(const BatchReport& rep, bool include_timings = false);

}  // namespace thinpoly
