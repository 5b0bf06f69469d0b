#ifndef BJORLING_EXPORT_HPP
#define BJORLING_EXPORT_HPP

#include <string>

#include "bjorling/mesh.hpp"

namespace bjorling {

/// Wavefront OBJ: `v x y z` lines then 1-based `f i j k l` quads.
/// ASCII, full round-trip precision, byte-deterministic.
void export_obj(const Mesh& mesh, const std::string& path);

/// ASCII PLY 1.0 with x/y/z vertex properties, the optional quality
/// channel, and quad face lists.
void export_ply(const Mesh& mesh, const std::string& path);

/// CSV with header `t,x,y,z`, one row per sample.
void export_csv(const CurveSamples& curve, const std::string& path);

} // namespace bjorling

#endif // BJORLING_EXPORT_HPP
