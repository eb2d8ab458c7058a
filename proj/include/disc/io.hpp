#pragma once

#include <string>

#include "disc/harness.hpp"

namespace disc {

// JSON wire formats (keys exactly as documented):
//   BoundaryPointSet  {"points":[angles]}
//   ArcSet            {"arcs":[[a,b],...]}      angles in [0, 2*pi)
//   DiscFunction      {"n","boundary_re","boundary_im","coeffs_re",
//                      "coeffs_im","has_potential","lambda"}
//   NormReport        field names as in the struct
//   InequalityReport  {"name","lhs","rhs_components","empirical_constant",
//                      "node_count","passed"}
//   Config            {"alpha","rho","N","M","grid_n","lambda","seed",
//                      "trials","arc_counts","constant_cap"}
std::string to_json(const BoundaryPointSet& s);
std::string to_json(const ArcSet& s);
std::string to_json(const DiscFunction& f);
std::string to_json(const NormReport& r);
std::string to_json(const InequalityReport& r);
std::string to_json(const Config& c);
std::string to_json(const ApproxRun& r);
std::string to_json(const SweepReport& r);

BoundaryPointSet point_set_from_json(const std::string& text);
ArcSet arcset_from_json(const std::string& text);
DiscFunction function_from_json(const std::string& text);
Config config_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace disc
