#include "toric/io_json.hpp"

#include <fstream>
#include <ostream>

namespace toric {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected integer or rational string");
}

json rat_to_json(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return json(q.get_num().get_si());
  return json(q.get_str());
}

}  // namespace

json polytope_to_json(const Polytope& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) {
    json vert = json::array();
    for (const auto& c : v) vert.push_back(rat_to_json(c));
    out.push_back(vert);
  }
  return out;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("polytope: nonempty vertex array expected");
  std::vector<VecQ> pts;
  for (const auto& v : j) {
    VecQ p;
    for (const auto& c : v) p.push_back(rat_from_json(c));
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(static_cast<int>(pts[0].size()), pts);
}

json paconcave_to_json(const PAConcave& f) {
  json out;
  if (f.is_hull_form()) {
    out["domain"] = polytope_to_json(f.domain());
    json lifted = json::array();
    for (const auto& p : f.parts()) {
      json pt = json::array();
      for (const auto& c : p.vec) pt.push_back(rat_to_json(c));
      if (!p.val.is_rational())
        throw std::invalid_argument(
            "paconcave_to_json: log-scale values have no JSON encoding");
      lifted.push_back({{"point", pt}, {"value", rat_to_json(p.val.rational_part())}});
    }
    out["lifted"] = lifted;
  } else {
    json pieces = json::array();
    for (const auto& p : f.parts()) {
      json slope = json::array();
      for (const auto& c : p.vec) slope.push_back(rat_to_json(c));
      pieces.push_back(
          {{"slope", slope}, {"intercept", rat_to_json(p.val.rational_part())}});
    }
    out["pieces"] = pieces;
  }
  return out;
}

PAConcave paconcave_from_json(const json& j, const Polytope& domain) {
  if (j.contains("lifted")) {
    std::vector<PAConcave::Part> parts;
    for (const auto& e : j.at("lifted")) {
      VecQ pt;
      for (const auto& c : e.at("point")) pt.push_back(rat_from_json(c));
      parts.push_back({std::move(pt), Exact(rat_from_json(e.at("value")))});
    }
    auto f = PAConcave::upper_envelope(domain.ambient_dim(), parts);
    if (!(f.domain() == domain))
      throw std::invalid_argument("roof domain differs from the polytope");
    return f;
  }
  if (j.contains("pieces")) {
    std::vector<PAConcave::Part> pieces;
    for (const auto& e : j.at("pieces")) {
      VecQ slope;
      for (const auto& c : e.at("slope")) slope.push_back(rat_from_json(c));
      pieces.push_back({std::move(slope), Exact(rat_from_json(e.at("intercept")))});
    }
    return PAConcave::min_of_affine_on(domain, pieces);
  }
  throw std::invalid_argument("PAConcave: expected 'lifted' or 'pieces'");
}

json laurent_to_json(const LaurentPoly& f) {
  json out;
  out["dim"] = f.ambient_dim();
  long n = f.conductor();
  out["zeta_order"] = n;
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json t;
    t["exp"] = e;
    Cyclotomic cl = c.lift_to(n);
    // terms carry num/den times a power of zeta when possible
    bool mono = false;
    long zp = 0;
    Rat val;
    for (long k = 0; k < n && !mono; ++k) {
      Cyclotomic z = Cyclotomic::zeta(n, k);
      Cyclotomic q = cl * z.inverse();
      if (q.is_rational()) {
        mono = true;
        zp = k;
        val = q.rational_value();
      }
    }
    if (!mono)
      throw std::invalid_argument(
          "laurent_to_json: coefficients must be rational multiples of roots "
          "of unity");
    t["num"] = rat_to_json(Rat(val.get_num()));
    t["den"] = rat_to_json(Rat(val.get_den()));
    if (zp) t["zeta_pow"] = zp;
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  long order = j.value("zeta_order", 1L);
  LaurentPoly f(dim);
  for (const auto& t : j.at("terms")) {
    VecZ e = t.at("exp").get<VecZ>();
    Rat num = rat_from_json(t.at("num"));
    Rat den = t.contains("den") ? rat_from_json(t.at("den")) : Rat(1);
    Cyclotomic c(num / den);
    if (t.contains("zeta_pow") && t.at("zeta_pow").get<long>() != 0)
      c = c * Cyclotomic::zeta(order, t.at("zeta_pow").get<long>());
    f.set_term(e, c);
  }
  return f;
}

json torsion_to_json(const TorsionPoint& t) {
  return {{"order", t.order}, {"exps", t.exps}};
}

TorsionPoint torsion_from_json(const json& j) {
  return TorsionPoint::make(j.at("order").get<long>(),
                            j.at("exps").get<VecZ>());
}

Problem problem_from_json(const json& j) {
  Problem out;
  for (const auto& d : j.at("divisors")) {
    MetrizedToricDivisor div;
    div.polytope = polytope_from_json(d.at("polytope"));
    div.label = d.value("label", "custom");
    if (d.contains("roofs")) {
      for (const auto& r : d.at("roofs")) {
        Place v = r.at("place").is_string() ? Place::infinity()
                                            : Place::prime(r.at("place").get<long>());
        div.set_roof(v, paconcave_from_json(r, div.polytope));
      }
    }
    out.divisors.push_back(std::move(div));
  }
  if (j.contains("laurents"))
    for (const auto& l : j.at("laurents"))
      out.laurents.push_back(laurent_from_json(l));
  return out;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  json j;
  in >> j;
  return problem_from_json(j);
}

json report_to_json(const HeightReport& r) {
  json out;
  out["total"] = r.total();
  out["error"] = r.error();
  out["exact"] = r.all_exact;
  json places = json::array();
  for (const auto& t : r.terms) {
    json p;
    p["place"] = t.place.str();
    p["value"] = t.exact ? t.exact_value.to_double() : t.value;
    p["error"] = t.error;
    p["exact"] = t.exact;
    if (t.exact && t.exact_value.is_rational())
      p["rational"] = t.exact_value.rational_part().get_str();
    places.push_back(p);
  }
  out["places"] = places;
  return out;
}

namespace {
constexpr const char* kHeader = "N,s,lhs,rhs,abs_dev,degree,status,wall_ms\n";
}

void write_rows_csv(std::ostream& os, const std::vector<ExperimentRow>& rows) {
  os << kHeader;
  for (const auto& r : rows)
    os << r.n << ',' << r.s << ',' << r.lhs << ',' << r.rhs << ','
       << r.abs_dev << ',' << r.degree << ',' << r.status << ',' << r.wall_ms
       << '\n';
}

void write_tail_csv(std::ostream& os, const std::vector<TailRow>& rows) {
  os << kHeader;
  for (const auto& r : rows)
    os << r.n << ',' << r.s << ',' << r.total << ',' << 0.0 << ','
       << std::fabs(r.total) << ',' << 0 << ','
       << (r.nonpositive && r.value_group_exact ? "ok" : "violated") << ','
       << r.wall_ms << '\n';
}

void write_equidist_csv(std::ostream& os, const std::vector<EquidistRow>& rows) {
  os << kHeader;
  for (const auto& r : rows)
    os << r.n << ',' << r.s << ',' << r.average << ',' << r.mahler << ','
       << std::fabs(r.deviation) << ',' << 0 << ','
       << (r.flagged ? "zero-hit" : "ok") << ',' << r.wall_ms << '\n';
}

}  // namespace toric
