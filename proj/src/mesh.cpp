#include "bjorling/mesh.hpp"

#include <cmath>

namespace bjorling {

double GridSpec::u_at(int i) const {
    return u_min + (u_max - u_min) * static_cast<double>(i) /
                       static_cast<double>(nu - 1);
}

double GridSpec::v_at(int j) const {
    return v_min + (v_max - v_min) * static_cast<double>(j) /
                       static_cast<double>(nv - 1);
}

std::size_t Mesh::masked_count() const {
    std::size_t n = 0;
    for (const std::int64_t v : node_vertex) {
        if (v < 0) ++n;
    }
    return n;
}

namespace {

void validate(const GridSpec& g) {
    if (!(g.u_min < g.u_max) || !(g.v_min < g.v_max) || g.nu < 2 || g.nv < 2) {
        throw DomainError("grid requires u_min < u_max, v_min < v_max and "
                          "at least 2 samples per direction");
    }
}

bool finite(const Vec3& p) {
    return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
}

} // namespace

Mesh sample_grid(const SurfaceModel& surface, const GridSpec& grid) {
    validate(grid);
    Mesh mesh;
    mesh.nu = grid.nu;
    mesh.nv = grid.nv;
    mesh.node_vertex.assign(
        static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv),
        -1);
    for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
            const Complex z(grid.u_at(i), grid.v_at(j));
            try {
                const Vec3 p = surface.evaluate(z);
                if (!finite(p)) continue;
                mesh.node_vertex[static_cast<std::size_t>(j) * grid.nu + i] =
                    static_cast<std::int64_t>(mesh.vertices.size());
                mesh.vertices.push_back(p);
            } catch (const PoleProximityError&) {
            } catch (const BranchProximityError&) {
            } catch (const QuadratureError&) {
            }
        }
    }
    if (mesh.vertices.empty()) {
        throw EmptyMeshError("no valid grid node for surface " + surface.name);
    }
    for (int j = 0; j + 1 < grid.nv; ++j) {
        for (int i = 0; i + 1 < grid.nu; ++i) {
            const std::int64_t v00 = mesh.node_index(i, j);
            const std::int64_t v10 = mesh.node_index(i + 1, j);
            const std::int64_t v11 = mesh.node_index(i + 1, j + 1);
            const std::int64_t v01 = mesh.node_index(i, j + 1);
            if (v00 >= 0 && v10 >= 0 && v11 >= 0 && v01 >= 0) {
                mesh.quads.push_back({v00, v10, v11, v01});
            }
        }
    }
    return mesh;
}

CurveSamples sample_curve(const SurfaceModel& surface, CurveAxis axis,
                          double t_min, double t_max, int n) {
    if (n < 2 || !(t_min < t_max)) {
        throw DomainError("curve sampling requires n >= 2 and t_min < t_max");
    }
    CurveSamples out;
    out.name = surface.name +
               (axis == CurveAxis::real ? "-generator" : "-dual");
    out.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = t_min + (t_max - t_min) * static_cast<double>(i) /
                                     static_cast<double>(n - 1);
        const Complex z = (axis == CurveAxis::real) ? Complex(t, 0.0)
                                                    : Complex(0.0, t);
        out.points.push_back({t, surface.evaluate(z)});
    }
    return out;
}

GridSpec recommended_grid(const SurfaceModel& surface, int nu, int nv) {
    const Rect& r = surface.recommended_domain;
    return {r.u_min, r.u_max, r.v_min, r.v_max, nu, nv};
}

} // namespace bjorling
