#pragma once

#include "g2calib/boundary.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace g2calib {

/// Principal-symbol matrix with explicit basis bookkeeping.  The complex
/// normal bundle carries the ordered basis {alpha, beta, alphabar, betabar}
/// built from a section a through alpha = a - i Ja and beta = -v x alphabar;
/// the boundary projector target carries {beta, betabar}.
struct SymbolMatrix {
    Eigen::MatrixXcd m;
    std::vector<std::string> domain;
    std::vector<std::string> codomain;
};

inline const std::vector<std::string>& nu_basis_labels() {
    static const std::vector<std::string> labels{"alpha", "beta", "alphabar", "betabar"};
    return labels;
}
inline const std::vector<std::string>& mu_basis_labels() {
    static const std::vector<std::string> labels{"beta", "betabar"};
    return labels;
}
inline const std::vector<std::string>& nu_plus_basis_labels() {
    static const std::vector<std::string> labels{"alpha", "beta"};
    return labels;
}

/// Matrix of x-cross acting on the complexified normal plane, computed
/// numerically from a split; x must be the split's v or w.  Entries land in
/// {0, +-1, +-i} exactly.
SymbolMatrix cross_matrix(const Vec7& x, const NormalSplit& split);

/// Tangential operator symbol for a unit covector eta = eta_v + i eta_w:
/// hermitian involution with eigenvalues +-1.
SymbolMatrix symbol_R(std::complex<double> eta);

/// Spectral projector onto the +1 eigenspace of symbol_R: rank-2 orthogonal
/// projector, equals (Id + symbol_R)/2.
SymbolMatrix calderon_symbol(std::complex<double> eta);

/// Projector symbol onto the complexified mu_X in the fixed bases (2x4).
SymbolMatrix boundary_projector_symbol();

/// Projector symbol onto the positive half-space span{alpha, beta} (4x2
/// inclusion used on the right of composite symbols).
SymbolMatrix positive_spinor_inclusion();

/// Composite symbol of the boundary problem on the positive half-space:
/// equals [[0, 1], [eta, 0]]/2.
SymbolMatrix bqp_symbol(std::complex<double> eta);

struct EbcReport {
    int grid = 0;
    double min_singular_value = 0;
    bool pass = false;
};

/// Full-rank check of boundary_symbol restricted to the Calderon range over
/// a grid of unit covectors (resolution >= 90 angles).
EbcReport ebc_check_coassociative(int grid_resolution = 360);

/// Same check for an arbitrary 2x4 boundary symbol (e.g. the projector
/// onto the positive half-spinors, which is an e.b.c. as well).
EbcReport ebc_check(const Eigen::MatrixXcd& boundary_symbol, int grid_resolution);

struct EllipticityReport {
    int grid = 0;
    double min_abs_det = 0;
    double max_formula_error = 0; // against (-2 i eta - z - conj(z) eta^2)/4
    bool pass = false;
};

/// Ellipticity of the psi-positive boundary condition with parameter z:
/// builds the complexified projector symbol [[0,1,0,1],[z,-i,conj(z),i]],
/// composes with the Calderon projector and the positive inclusion, and
/// scans |det| over the covector grid.
EllipticityReport psi_positive_ellipticity(std::complex<double> z, int grid_resolution = 720);

/// One boundary surface: genus and the integral of c1 of the complex line
/// bundle nu_X over it.
struct BoundaryComponent {
    int genus = 0;
    int c1 = 0;
};

/// index = sum_j (c1_j + 1 - g_j) over the boundary components.
long index_formula(std::span<const BoundaryComponent> components);

/// Z2 class (index + 1) mod 2; defined only for a single genus-0 boundary.
int maslov_from_index(std::span<const BoundaryComponent> components);

} // namespace g2calib
