#pragma once

#include <vector>

#include "rydopt/physical_config.hpp"
#include "rydopt/rng.hpp"
#include "rydopt/types.hpp"

namespace rydopt {

// All operators live on the fixed two-atom basis of types.hpp and are given
// in angular-frequency units (H/hbar, rad/s); Lindblad operators carry
// sqrt(rate) with rates in 1/s.

// Single-atom Hamiltonian H_j/hbar on (|R>,|1>,|0>,|s>). omega couples
// |R><1|, a couples |1><0|, zeeman is mu*B/h in Hz; the |s> row/column is
// identically zero. Rejects non-finite inputs.
Eigen::Matrix<cd, 4, 4> build_local_hamiltonian(cd omega, double a,
                                                double zeeman,
                                                const PhysicalConfig& cfg);

// H/hbar = H_1 (x) I + I (x) H_2 + v_over_hbar |RR><RR|.
Mat16 build_total_hamiltonian(cd omega, double a1, double a2, double zeeman,
                              double v_over_hbar, const PhysicalConfig& cfg);

// van-der-Waals interaction V/hbar in rad/s at distance r_um (um).
// Rejects r_um <= 0.
double vdw_strength(double r_um, const PhysicalConfig& cfg);

// The four decay operators {L_1^s, L_1^1, L_2^s, L_2^1}, entries in
// sqrt(1/s). Zero matrices when cfg.gamma == 0.
std::vector<Mat16> build_lindblad_ops(const PhysicalConfig& cfg);

// Projector onto the computational subspace span{|00>,|01>,|10>,|11>}.
Mat16 computational_projector();

// CNOT embedded in the 16-dim space (identity outside the computational
// subspace) and its 4x4 logical block; atom 1 is the control.
Mat16 target_cnot();
Mat4 target_cnot_logical();

// Pure product state of two qubits drawn uniformly from the Bloch spheres of
// the {|0>,|1>} subspaces; |R> and |s> amplitudes are zero. Draw order per
// atom: cos(theta) then phase.
Vec16 random_product_ket(Rng& rng);
Mat16 random_product_state(Rng& rng);

// Swap of the two atom labels: S (a (x) b) = b (x) a.
Mat16 swap_atoms();

}  // namespace rydopt
