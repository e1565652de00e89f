#ifndef RULED_CLI_REPORT_HPP
#define RULED_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ruled/verify.hpp"

namespace ruled::cli {

/// %.17g, with nan/inf spelled out.
std::string format_number(double x);

nlohmann::json to_json(const Vec3g& x);
nlohmann::json to_json(const FrenetData& f);
nlohmann::json to_json(const FrenetResiduals& r);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const InvariantRecord& r);
nlohmann::json to_json(const Classification& c, bool include_cells = false);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const PipelineComparison& c);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const TauGAltResult& r);

inline const char* kTableHeader =
    "s,v,E,F,G,e,f,g,K,H,lambda,kappa_g,kappa_n,tau_g,point_type,pipeline,singular";

/// One table row per record; point_type is empty for singular cells.
void write_table(std::ostream& out, const std::vector<InvariantRecord>& records, double classify_tol);

/// Wavefront OBJ: one vertex per grid node in (s, v) row-major order, then
/// 1-based quad faces.
void write_obj(std::ostream& out, const RuledSurfaceSpec& spec, const SurfaceGrid& grid);

}  // namespace ruled::cli

#endif  // RULED_CLI_REPORT_HPP
