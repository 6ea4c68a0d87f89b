#pragma once

#include "qdc/linalg.hpp"

namespace qdc {

enum class InitialState { Excited, Ground };

/// Physical knobs of the qubit-cavity channel. delta_raw and the coupling
/// share energy units; kappa is the box/gate capacitance ratio and doubles
/// as the coupling strength in natural units, so only delta_raw/(2*kappa)
/// enters the dynamics.
struct SystemParams {
    int n = 0;                  // cavity photon number
    double delta_raw = 0.0;     // detuning, accepted range [0, 10]
    double kappa = 1.0;         // capacitance ratio, accepted range (0, 10]
    InitialState initial = InitialState::Excited;

    void validate() const;
};

/// Labels the 4-dimensional effective space for lower Fock index m.
/// Ket order is fixed everywhere: |e,m>, |g,m>, |e,m+1>, |g,m+1>.
struct BasisFrame {
    int m = 0;
};

/// The two nonzero amplitudes of the pure channel state: (c1, c4) when the
/// qubit starts excited, (c2, c3) when it starts in the ground state.
/// |first|^2 + |second|^2 = 1 by construction.
struct ChannelAmplitudes {
    complexd first;
    complexd second;
};

struct ChannelState {
    BasisFrame frame;
    Vector4c vec;             // components in frame order
    bool degenerate = false;  // Ground with n=0: stationary |g,0>

    /// Squared amplitude on the qubit-excited kets (|c1|^2 or |c2|^2).
    double atom_excited_weight() const;
    /// Squared amplitude on the qubit-ground kets (|c4|^2 or |c3|^2).
    double atom_ground_weight() const;
};

/// delta = delta_raw / (2 kappa), the dimensionless detuning.
double scaled_detuning(double delta_raw, double kappa);

/// gamma_k = sqrt(delta^2 + k), k >= 1.
double rabi_frequency(double delta, int k);

ChannelAmplitudes amplitudes_excited(double delta, int n, double tau);
ChannelAmplitudes amplitudes_ground(double delta, int n, double tau);

ChannelState channel_state(const SystemParams& params, double tau);

}  // namespace qdc
