#ifndef BJORLING_MESH_HPP
#define BJORLING_MESH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bjorling/surfaces.hpp"

namespace bjorling {

/// Rectangular sampling grid over the parameter plane z = u + iv.
struct GridSpec {
    double u_min = 0.0;
    double u_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    int nu = 2;
    int nv = 2;

    double u_at(int i) const;
    double v_at(int j) const;
};

/// Masked quad mesh on a sampling grid.  Vertices hold only the valid
/// nodes; node_vertex maps grid node (i,j) -> vertex index or -1.  Quads
/// are emitted only for cells whose four corners are all valid.
struct Mesh {
    int nu = 0;
    int nv = 0;
    std::vector<Vec3> vertices;
    std::vector<std::int64_t> node_vertex; // nu*nv entries, -1 = masked
    std::vector<std::array<std::int64_t, 4>> quads;
    std::vector<double> quality; // optional per-vertex channel (|H|)

    std::int64_t node_index(int i, int j) const {
        return node_vertex[static_cast<std::size_t>(j) * nu + i];
    }
    std::size_t masked_count() const;
};

/// One sampled point of a space curve with its parameter value.
struct CurveSample {
    double t;
    Vec3 p;
};

struct CurveSamples {
    std::string name;
    std::vector<CurveSample> points;
};

enum class CurveAxis { real, imaginary };

/// Samples the surface over the grid.  Evaluation errors at a node mask
/// that node instead of aborting.  Throws EmptyMeshError when no node is
/// valid, DomainError for an invalid grid.
Mesh sample_grid(const SurfaceModel& surface, const GridSpec& grid);

/// Samples the generator (real axis) or dual (imaginary axis) curve with
/// n >= 2 points over [t_min, t_max].  Evaluation errors propagate.
CurveSamples sample_curve(const SurfaceModel& surface, CurveAxis axis,
                          double t_min, double t_max, int n);

/// Default grid over the surface's recommended domain.
GridSpec recommended_grid(const SurfaceModel& surface, int nu, int nv);

} // namespace bjorling

#endif // BJORLING_MESH_HPP
