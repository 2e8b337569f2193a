#pragma once

#include "g2calib/kform.hpp"
#include "g2calib/vec7.hpp"

#include <span>
#include <vector>

namespace g2calib {

/// Oriented 3- or 4-plane in R^7, held as an ordered orthonormal frame.
/// Swapping two frame vectors flips the orientation; calibration values
/// are odd under that flip.
struct OrientedPlane {
    int dim = 0;
    std::vector<Vec7> frame;
};

/// Orthonormalizes the given spanning vectors (Gram-Schmidt, order kept).
/// Rejects rank-deficient input: smallest singular value below tol.
OrientedPlane make_plane(std::span<const Vec7> vectors, double tol = 1e-9);

inline OrientedPlane make_plane(std::initializer_list<Vec7> vectors, double tol = 1e-9) {
    return make_plane(std::span<const Vec7>(vectors.begin(), vectors.size()), tol);
}

/// Evaluates a k-form on the frame of a k-plane.  For phi0 on 3-planes the
/// result lies in [-1, 1] (comass one).
double calibration_value(const KForm<double>& form, const OrientedPlane& p);

/// |phi0| = 1 on the frame; cross-checked against the vanishing of chi0
/// (thresholds matched through phi0^2 + |chi0|^2 = 1 on orthonormal triples).
bool is_associative(const OrientedPlane& E, double tol = 1e-9);

/// phi0 vanishes on every 3-subframe, equivalently |psi0| = 1; both checked.
bool is_coassociative(const OrientedPlane& F, double tol = 1e-9);

/// psi0 does not vanish on the frame for some orientation.
bool is_psi_positive(const OrientedPlane& F, double tol = 1e-9);

struct AssociativeContent {
    double value;                     // max |phi0(E_n)| over 3-planes E_n inside F
    OrientedPlane maximizer;          // the achieving 3-plane (oriented by n . vol_F)
    std::array<double, 4> direction;  // maximizing unit normal in frame coordinates
    int grid_resolution;
};

/// Grid search over the unit normals n in F (antipodes identified, lattice
/// of grid_resolution^4 directions) for the 3-plane E_n = n-perp inside F of
/// largest |phi0|, followed by local hill-climbing refinement.  The value is
/// < 1 exactly when F contains no associative 3-plane.  May parallelize over
/// direction chunks (G2CALIB_THREADS caps the workers); the result is
/// deterministic for a fixed resolution.
AssociativeContent max_associative_content(const OrientedPlane& F, int grid_resolution = 32);

} // namespace g2calib
