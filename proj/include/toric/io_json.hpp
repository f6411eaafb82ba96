#ifndef TORIC_IO_JSON_HPP
#define TORIC_IO_JSON_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "toric/verifier.hpp"

namespace toric {

/// JSON encodings of the wire formats:
///   polytope: [[x, y], ...] integer vertex tuples
///   PAConcave: {"domain": [...], "pieces": [{"slope": [...],
///       "intercept": "p/q"}]} or {"domain": [...], "lifted":
///       [{"point": [...], "value": "p/q"}]}
///   LaurentPoly: {"dim": n, "zeta_order": N,
///       "terms": [{"exp": [...], "num": .., "den": .., "zeta_pow": ..}]}
///   TorsionPoint: {"order": N, "exps": [...]}
///   problem: {"dim": n, "divisors": [...], "laurents": [...]}

nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json paconcave_to_json(const PAConcave& f);
PAConcave paconcave_from_json(const nlohmann::json& j, const Polytope& domain);

nlohmann::json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json torsion_to_json(const TorsionPoint& t);
TorsionPoint torsion_from_json(const nlohmann::json& j);

struct Problem {
  std::vector<MetrizedToricDivisor> divisors;
  std::vector<LaurentPoly> laurents;
};
Problem problem_from_json(const nlohmann::json& j);
Problem load_problem(const std::string& path);

nlohmann::json report_to_json(const HeightReport& r);

void write_rows_csv(std::ostream& os, const std::vector<ExperimentRow>& rows);
void write_tail_csv(std::ostream& os, const std::vector<TailRow>& rows);
void write_equidist_csv(std::ostream& os, const std::vector<EquidistRow>& rows);

}  // namespace toric

#endif
