#pragma once

#include <array>
#include <complex>
#include <vector>

namespace g2calib {

/// Triangulated closed oriented surface with a complex line (nonzero
/// vector in C^N) attached to each vertex.  Vertex positions are carried
/// for mesh construction and refinement but do not enter the holonomy.
struct SampledLineBundle {
    std::vector<std::array<double, 3>> positions;              // may be empty
    std::vector<std::array<int, 3>> triangles;                 // oriented
    std::vector<std::vector<std::complex<double>>> lines;      // one per vertex

    std::size_t vertex_count() const { return lines.size(); }
};

struct ChernDiagnostics {
    double raw = 0;         // total plaquette phase / 2 pi, before rounding
    double residual = 0;    // distance of raw to the nearest integer
    double min_overlap = 0; // smallest |<s_u, s_v>| over edges (unit samples)
};

/// First Chern number by plaquette holonomy: the argument sum of the
/// triple-overlap products around every oriented triangle, divided by 2 pi
/// and rounded.  Rejects inadmissible edges (overlap below the threshold)
/// and residuals >= 0.1 (under-resolved input fails loudly instead of
/// rounding to a plausible integer).
int chern_number(const SampledLineBundle& b, double admissibility = 1e-6,
                 ChernDiagnostics* diagnostics = nullptr);

/// g = 1 - (V - E + F)/2 for a closed oriented triangulated surface;
/// rejects non-manifold or inconsistently oriented edges.
int genus_of_complex(const SampledLineBundle& b);

/// chern_number mod 2 over a sphere (checked through V - E + F = 2).
int maslov_mod2(const SampledLineBundle& b);

/// One 1:4 edge-midpoint refinement.  Midpoint lines interpolate the two
/// endpoint samples with their relative phase aligned, so the result
/// depends only on the lines; positions are averaged (and kept on the unit
/// sphere when both endpoints lie on it).
SampledLineBundle refine_once(const SampledLineBundle& b);

// --- mesh and sample constructions used by the example reproductions ---

/// Icosahedron subdivided `level` times, vertices on the unit sphere,
/// outward orientation.  Lines are left empty.
SampledLineBundle icosphere(int level);

/// n x n flat torus grid (diagonal split), positions as (i/n, j/n, 0).
SampledLineBundle torus_grid(int n);

/// Fills every vertex with the same line.
void attach_constant_lines(SampledLineBundle& b, std::vector<std::complex<double>> line);

/// Degree -1 over the sphere: the projective point [x + i y : 1 + z] in C^2.
void attach_tautological_lines(SampledLineBundle& b);

/// Degree +2 over the sphere: the (1,0) tangent lines X - i p x X in C^3.
void attach_tangent_lines(SampledLineBundle& b);

/// Degree n over the sphere for n in [-2, 2]: monomial lines of the
/// projective point for n < 0, their conjugates for n > 0, constant for 0.
void attach_degree_lines(SampledLineBundle& b, int n);

} // namespace g2calib
