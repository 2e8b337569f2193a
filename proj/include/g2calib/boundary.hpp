#pragma once

#include "g2calib/plane.hpp"
#include "g2calib/vec7.hpp"

#include <array>
#include <complex>
#include <optional>

namespace g2calib {

/// Pointwise boundary data: u the inward unit normal of the boundary
/// inside the 3-dimensional piece, (v, w) an oriented orthonormal tangent
/// frame of the boundary surface with w = u x v (so span(u,v,w) is
/// associative), and F the tangent 4-plane of the constraining piece,
/// containing v and w.
struct BoundaryConfig {
    Vec7 u, v, w;
    OrientedPlane F;
};

/// Validates the structural requirements of a BoundaryConfig within tol.
void validate_config(const BoundaryConfig& cfg, double tol = 1e-9);

/// Splitting of the normal 4-plane nu = span(u,v,w)-perp into the part
/// tangent to F (nu_X) and its complement (mu_X), with the complex
/// structure J = u x (.) acting on nu.
struct NormalSplit {
    BoundaryConfig cfg;
    std::array<Vec7, 4> nu_frame;  // orthonormal frame of nu
    std::array<Vec7, 2> nuX_frame; // (a, Ja) in the calibrated case
    std::array<Vec7, 2> muX_frame; // (a x v, a x w) in the calibrated case
    Vec7 section_a;                // the recorded section choice

    Vec7 J(const Vec7& x) const { return cross(cfg.u, x); }
};

/// Report attached to the projected (psi-positive) split.
struct ProjectionReport {
    std::array<double, 2> singular_values; // of the projection restricted to N_X
    double mu_component_of_Jb;             // |p_muX(J b)| for the unit b = muX_frame[0]
    std::complex<double> z;                // (0,1,s,t)-coordinates of the projected Jb
};

/// Coassociative case: F must be coassociative and contain v, w.  The
/// section a is the first Gram-Schmidt vector of F minus span(v,w); any
/// other unit choice differs by a rotation of the frames.
NormalSplit split_coassociative(const BoundaryConfig& cfg, double tol = 1e-9);

/// Psi-positive case: nu_X is the orthogonal projection to nu of
/// span(NX_frame), which must be the complement of span(v,w) inside F.
/// The projection must have rank 2 and J b must stick out of nu_X; both
/// are surfaced as violations when they fail.
std::pair<NormalSplit, ProjectionReport>
split_psi_positive(const BoundaryConfig& cfg, const std::array<Vec7, 2>& NX_frame,
                   double tol = 1e-9);

/// Checks the anti-linearity identity (Ja) x y = a x (Jy) = -J(a x y) for
/// y in span(v, w); rejects y outside that span.
bool check_antilinear(const NormalSplit& split, const Vec7& y, double tol = 1e-9);

} // namespace g2calib
