#pragma once

#include "pcorr/classify.hpp"
#include "pcorr/density.hpp"
#include "pcorr/transform.hpp"

#include <json.hpp>

namespace pcorr {

using Json = nlohmann::json;

// Integers become JSON numbers when they fit 64 bits and decimal strings
// otherwise; valuations render infinity as "inf"; rationals as "num/den".
Json to_json(const BigInt& x);
Json to_json(const Valuation& v);
Json to_json(const BigRat& q);
Json to_json(const IntMatrix& a);  // {"n": .., "entries": [[..], ..]}
Json to_json(const SmithData& s);  // {"s": [..], "delta": [..], "P": .., "Q": ..}
Json to_json(const LocalSmithProfile& prof);
Json to_json(const CharPoly& f);  // [1, f_1, ..., f_n]
Json to_json(const NewtonPolygon& np);
Json to_json(const EigenvalueValuations& ev);
Json to_json(const ClassificationReport& rep);
Json to_json(const TransformSample& sample);
Json to_json(const StabilityReport& rep);
Json to_json(const DensityRow& row);
Json to_json(const GlCount& gl);
Json to_json(const OrbitReport& rep);

/// Parses back what to_json(BigInt) emits.
BigInt bigint_from_json(const Json& j);

/// CSV header and row: p,m,n,pct_char,pct_corr,min_pct_char,total,char_count,corr_count
std::string density_csv_header();
std::string density_csv_row(const DensityRow& row);

}  // namespace pcorr
