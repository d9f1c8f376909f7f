#pragma once

#include "f4/dual.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <vector>

namespace f4 {

/// "(1,1,0,0)_F4 = (0,0,sqrt2,1)_B4 + (sqrt2,0,0,2)_B4 + (2sqrt2,0,0,1)_B4"
std::string render(const B4Branching& b);
/// "(0,0,0,1)_F4 = {(0,0,1)_B3 ± (1/2)sqrt2} + {(0,1,0)_B3 ± 0}"
std::string render(const B3A1Branching& b);
/// "N0=144 N1=576 N2=672 N3=240" followed by one line per face and cell class.
std::string render(const PolytopeComplex& c);
std::string render(const DualPolytope& d);
std::string render(const DualCell& cell);
std::string render(const std::vector<ProjectedSlice>& slices);

nlohmann::json to_json(const FieldScalar& x);
nlohmann::json to_json(const Quat& q);
nlohmann::json to_json(const OrbitLabel& label);
nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const FiniteGroup& g);
nlohmann::json to_json(const Orbit& o);
nlohmann::json to_json(const PolytopeComplex& c);
nlohmann::json to_json(const B4Branching& b);
nlohmann::json to_json(const B3A1Branching& b);
nlohmann::json to_json(const std::vector<ProjectedSlice>& slices);
nlohmann::json to_json(const DualPolytope& d);
nlohmann::json to_json(const DualCell& cell);

struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  /// Vertex index cycles.
  std::vector<std::vector<int>> faces;
};

/// Cell vertices in true length units, faces as oriented cycles.
Mesh mesh_of(const DualCell& cell);

/// OFF text with %.17g coordinates. Throws std::invalid_argument on empty geometry.
std::string to_off(const Mesh& mesh);
/// Throws std::runtime_error when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace f4
