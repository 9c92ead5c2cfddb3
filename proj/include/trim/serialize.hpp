#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trim/balls.hpp"
#include "trim/inclusions.hpp"

namespace trim {

/// CSV trace format: optional '#' comment lines, then the header
/// param,px,py,residual and one row per vertex, parameters ascending.
inline void write_trace_csv(std::ostream& os, const BoundaryTrace& tr) {
  if (tr.open_rays > 0)
    os << "# partial trace: " << tr.open_rays << " open rays (no crossing below the boundary)\n";
  if (tr.lower_bound_metric) os << "# s from a sampled boundary is a lower bound\n";
  os << "param,px,py,residual\n";
  char buf[160];
  for (std::size_t i = 0; i < tr.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", tr.params[i],
                  tr.vertices[i].x(), tr.vertices[i].y(), tr.residuals[i]);
    os << buf;
  }
}

inline std::string trace_to_csv(const BoundaryTrace& tr) {
  std::ostringstream os;
  write_trace_csv(os, tr);
  return os.str();
}

inline nlohmann::json to_json(const CheckReport& rep) {
  return nlohmann::json{{"schema", 1},
                        {"name", rep.name},
                        {"pass", rep.pass},
                        {"worst_margin", rep.worst_margin},
                        {"worst_location", rep.worst_location},
                        {"grid", rep.grid},
                        {"seed", rep.seed},
                        {"notes", rep.notes}};
}

}  // namespace trim
