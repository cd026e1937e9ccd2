#pragma once

#include <Eigen/Core>

#include "shrinklab/profile.hpp"

namespace shrinklab {

/// Discrete spectrum of -L on a surface of revolution, separated into the
/// angular mode u = f(s) cos(k phi).
struct SpectrumResult {
    Eigen::VectorXd eigenvalues;     // ascending eigenvalues of -L
    Eigen::MatrixXd eigenfunctions;  // one column per eigenvalue, over profile nodes
    double orthonormality_residual = 0.0;  // max |V^T M V - I| under the weighted mass
    double max_eigen_residual = 0.0;       // worst scaled ||A f - lambda M f||

    Eigen::VectorXd node_s, node_r, node_z;  // nodes the eigenfunctions live on
};

/// Profile curvature dtheta/ds by centered differences (one-sided at the open
/// ends).
Eigen::VectorXd profile_curvature(const ProfileCurve& profile);

/// |A|^2 along the profile: (dtheta/ds)^2 + (sin(theta)/r)^2.
Eigen::VectorXd profile_second_fund_norm_sq(const ProfileCurve& profile);

/// Assembles the angular-mode-k operator
///   -L_k f = -(w f')'/w - (|A|^2 - k^2/r^2 + 1/2) f,   w = r exp(-(r^2+z^2)/4),
/// with quadratic-form finite elements on the profile nodes, and returns the
/// lowest `count` eigenvalues of the symmetric-definite pencil.
///
/// Open profiles are cut off at |z| <= truncation_z with Dirichlet conditions
/// at the cut; truncation_z must satisfy exp(-Z^2/4) < 1e-10 when a cut
/// happens. Ends that reach the axis (poles of a closed surface) take the
/// natural condition for k = 0 and a Dirichlet condition for k >= 1. Closed
/// profiles are assembled periodically.
///
/// Eigenfunctions come back M-orthonormal (the Gaussian-weighted measure);
/// solver residuals above 1e-10 raise SolverError.
SpectrumResult profile_spectrum(const ProfileCurve& profile, int fourier_mode, int count,
                                double truncation_z);

}  // namespace shrinklab
