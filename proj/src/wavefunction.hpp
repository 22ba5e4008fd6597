#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "context.hpp"
#include "free_packet.hpp"

namespace vlx {

/// Real radial profile shared by the transverse modes:
///   f(rho) = sqrt(n!/(pi (n+|l|)!)) rho^|l|/sigma^{|l|+1}
///            L_n^{|l|}(rho^2/sigma^2) exp(-rho^2/(2 sigma^2)),
/// normalized so that  integral f^2 d^2rho = 1.
double radial_envelope(const QuantumNumbers& qn, double sigma, double rho);

/// Transverse mode amplitude at one point.  The full phase is
///   l phi - phi_G + rho^2 sigma'/(2 lambda_C sigma),
/// with all time dependence carried by the optical state.
std::complex<double> nslg_amplitude(const QuantumNumbers& qn,
                                    const OpticalState& optics, double rho,
                                    double phi);

/// Number of local maxima of the radial probability density
/// 2 pi rho |Psi|^2; equals n + 1 for these modes.
int density_ring_count(const QuantumNumbers& qn, const OpticalState& optics,
                       int samples = 10000);

/// Overlap matrix <mode_i|mode_j> for modes sharing one optical state.
/// Azimuthal integrals are Kronecker deltas in l (evaluated analytically);
/// radial overlaps use exact Gauss-Laguerre quadrature.  Mode-constant
/// phases are irrelevant to orthonormality and are omitted.
Eigen::MatrixXcd gram_matrix(const std::vector<QuantumNumbers>& modes,
                             const OpticalState& optics);

/// Polar sampling of one mode for export: radial x azimuthal grid of
/// amplitudes.  rho rows vary fastest in the flattened arrays.
struct PolarGrid {
  std::vector<double> rho;                 ///< nm
  std::vector<double> phi;                 ///< rad
  std::vector<std::complex<double>> amp;   ///< amp[i_phi * n_rho + i_rho]
};

PolarGrid sample_polar_grid(const QuantumNumbers& qn,
                            const OpticalState& optics, int n_rho, int n_phi,
                            double rho_max);

}  // namespace vlx
