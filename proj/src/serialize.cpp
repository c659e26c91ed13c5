#include "pcorr/serialize.hpp"

#include <sstream>

namespace pcorr {

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) return BigInt(j.get<std::string>(), 10);
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return Json("inf");
  return Json(v.value());
}

Json to_json(const BigRat& q) { return Json(rat_to_string(q)); }

Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", a.size()}, {"entries", std::move(rows)}};
}

namespace {

template <class Range>
Json array_of(const Range& r) {
  Json out = Json::array();
  for (const auto& x : r) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const SmithData& s) {
  Json out{{"s", array_of(s.invariant_factors)}, {"delta", array_of(s.dets)}};
  if (s.transforms) {
    out["P"] = to_json(s.transforms->left);
    out["Q"] = to_json(s.transforms->right);
  }
  return out;
}

Json to_json(const LocalSmithProfile& prof) {
  return Json{{"p", prof.p.value()}, {"e", prof.e}, {"rank", prof.rank()}};
}

Json to_json(const CharPoly& f) {
  Json out = Json::array();
  out.push_back(1);
  for (const auto& c : f.coeffs) out.push_back(to_json(c));
  return out;
}

Json to_json(const NewtonPolygon& np) {
  auto pts = [](const std::vector<NewtonPoint>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(Json::array({q.x, q.y}));
    return a;
  };
  Json segs = Json::array();
  for (const auto& s : np.segments) {
    segs.push_back(Json{{"slope", rat_to_string(s.slope)}, {"length", s.length}});
  }
  return Json{{"points", pts(np.points)}, {"vertices", pts(np.vertices)}, {"segments", segs}};
}

Json to_json(const EigenvalueValuations& ev) {
  return Json{{"values", array_of(ev.values)}, {"zero_count", ev.zero_count}};
}

Json to_json(const ClassificationReport& rep) {
  Json out{{"p", rep.p.value()},
           {"rank", rep.rank},
           {"invariant_factors", array_of(rep.invariant_factors)},
           {"charpoly", to_json(rep.charpoly)},
           {"f_vals", array_of(rep.f_vals)},
           {"delta_vals", array_of(rep.delta_vals)},
           {"profile", rep.profile.e},
           {"eig_vals", to_json(rep.eig_vals)},
           {"p_characterized", rep.p_characterized},
           {"p_correspondent", rep.p_correspondent},
           {"degenerate", rep.degenerate}};
  out["newton_polygon"] = rep.polygon ? to_json(*rep.polygon) : Json(nullptr);
  return out;
}

Json to_json(const TransformSample& sample) {
  return Json{{"U", to_json(sample.left)},         {"V", to_json(sample.right)},
              {"bound", sample.bound},             {"attempts", sample.attempts},
              {"result", to_json(sample.result)},  {"report", to_json(sample.report)}};
}

Json to_json(const StabilityReport& rep) {
  return Json{{"p", rep.p.value()},
              {"m", rep.m},
              {"reduced", to_json(rep.reduced)},
              {"profile", rep.profile.e},
              {"reduced_profile", rep.reduced_profile.e},
              {"f_vals", array_of(rep.f_vals)},
              {"reduced_f_vals", array_of(rep.reduced_f_vals)},
              {"a_characterized", rep.a_characterized},
              {"reduced_characterized", rep.reduced_characterized},
              {"profiles_agree", rep.profiles_agree},
              {"coefficients_agree", rep.coefficients_agree},
              {"characterization_kept", rep.characterization_kept},
              {"passed", rep.passed()}};
}

namespace {

Json partition_list(const std::map<std::vector<std::int64_t>, PartitionStats>& parts) {
  Json out = Json::array();
  for (const auto& [key, stats] : parts) {
    BigRat f(BigInt(static_cast<unsigned long>(stats.char_count)),
             BigInt(static_cast<unsigned long>(stats.size)));
    f.canonicalize();
    out.push_back(Json{{"profile", key},
                       {"size", stats.size},
                       {"char_count", stats.char_count},
                       {"char_fraction", rat_to_string(f)},
                       {"pct_char", render_percent(f)}});
  }
  return out;
}

}  // namespace

Json to_json(const DensityRow& row) {
  Json out{{"p", row.p.value()},
           {"m", row.m},
           {"n", row.n},
           {"convention", to_string(row.convention)},
           {"enumerated", row.enumerated},
           {"det_filtered", row.det_filtered},
           {"total", row.total},
           {"char_count", row.char_count},
           {"corr_count", row.corr_count},
           {"char_fraction", rat_to_string(row.char_fraction)},
           {"corr_fraction", rat_to_string(row.corr_fraction)},
           {"pct_char", render_percent(row.char_fraction)},
           {"pct_corr", render_percent(row.corr_fraction)},
           {"partitions", partition_list(row.partitions)},
           {"profile_classes", partition_list(row.profile_classes)}};
  if (row.min_char_fraction) {
    out["min_char_fraction"] = rat_to_string(*row.min_char_fraction);
    out["min_pct_char"] = render_percent(*row.min_char_fraction);
  } else {
    out["min_char_fraction"] = nullptr;
    out["min_pct_char"] = nullptr;
  }
  return out;
}

Json to_json(const GlCount& gl) {
  Json out{{"gl_order", to_json(gl.gl_order)},
           {"matrices", to_json(gl.matrices)},
           {"ratio", rat_to_string(gl.ratio)},
           {"below_four", gl.below_four}};
  out["exhaustive"] = gl.exhaustive ? to_json(*gl.exhaustive) : Json(nullptr);
  return out;
}

Json to_json(const OrbitReport& rep) {
  return Json{{"p", rep.p.value()},
              {"m", rep.m},
              {"e", rep.e},
              {"orbit_size", rep.orbit_size},
              {"gl_order", to_json(rep.gl_order)},
              {"expected_stabilizer", to_json(rep.expected_stabilizer)},
              {"min_pairs", rep.min_pairs},
              {"max_pairs", rep.max_pairs},
              {"constant", rep.constant},
              {"matches_formula", rep.matches_formula}};
}

std::string density_csv_header() {
  return "p,m,n,pct_char,pct_corr,min_pct_char,total,char_count,corr_count";
}

std::string density_csv_row(const DensityRow& row) {
  std::ostringstream os;
  os << row.p.value() << ',' << row.m << ',' << row.n << ',' << render_percent(row.char_fraction)
     << ',' << render_percent(row.corr_fraction) << ','
     << (row.min_char_fraction ? render_percent(*row.min_char_fraction) : std::string())
     << ',' << row.total << ',' << row.char_count << ',' << row.corr_count;
  return os.str();
}

}  // namespace pcorr
