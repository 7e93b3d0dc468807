#pragma once

// JSON, CSV and DOT renderings. Vertices always appear as bit strings
// x^0 x^1 ... x^{n-1}.

#include <span>
#include <string>

#include <json.hpp>

#include "hypercut/analysis.hpp"
#include "hypercut/family.hpp"
#include "hypercut/oracle.hpp"

namespace hypercut {

inline constexpr const char* kFamilySchema = "hypercut.cut-family/1";
inline constexpr const char* kOracleSchema = "hypercut.oracle-result/1";

nlohmann::ordered_json element_to_json(const Element& e);

/// Family, its validation verdict and, when the complement has a single-vertex
/// component, that isolated vertex.
nlohmann::ordered_json family_to_json(const CutFamily& f);

nlohmann::ordered_json oracle_to_json(int n, const StructureKind& kind, CutMode mode,
                                      const OracleResult& r);

/// Header "element,shape,index,vertex" and one row per element vertex.
std::string family_to_csv(const CutFamily& f);

/// Largest dimension export_dot accepts.
inline constexpr int kMaxDotDimension = 8;

/// Q_n with `removed` drawn dashed and grey; each complement component gets
/// its own fill color. Throws std::out_of_range for n > kMaxDotDimension.
std::string export_dot(int n, std::span<const Vertex> removed);

}  // namespace hypercut
