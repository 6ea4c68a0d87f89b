#include "qdc/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace qdc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw validation_error(msg);
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

void SystemParams::validate() const {
    require(n >= 0, "photon number n must be >= 0, got " + std::to_string(n));
    require(delta_raw >= 0.0 && delta_raw <= 10.0,
            "detuning delta must lie in [0, 10], got " + num(delta_raw));
    require(kappa > 0.0 && kappa <= 10.0,
            "capacitance ratio kappa must lie in (0, 10], got " + num(kappa));
}

double ChannelState::atom_excited_weight() const {
    return std::norm(vec[0]) + std::norm(vec[2]);
}

double ChannelState::atom_ground_weight() const {
    return std::norm(vec[1]) + std::norm(vec[3]);
}

double scaled_detuning(double delta_raw, double kappa) {
    require(kappa > 0.0, "kappa must be > 0, got " + num(kappa));
    require(delta_raw >= 0.0, "detuning must be >= 0, got " + num(delta_raw));
    return delta_raw / (2.0 * kappa);
}

double rabi_frequency(double delta, int k) {
    require(k >= 1, "Rabi index k must be >= 1, got " + std::to_string(k));
    require(delta >= 0.0, "scaled detuning must be >= 0, got " + num(delta));
    return std::sqrt(delta * delta + static_cast<double>(k));
}

ChannelAmplitudes amplitudes_excited(double delta, int n, double tau) {
    require(n >= 0, "photon number n must be >= 0, got " + std::to_string(n));
    require(tau >= 0.0, "scaled time tau must be >= 0, got " + num(tau));
    const double gamma = rabi_frequency(delta, n + 1);
    const double cg = std::cos(gamma * tau);
    const double sg = std::sin(gamma * tau);
    const complexd c1{cg, -(delta / gamma) * sg};
    const complexd c4{0.0, -(std::sqrt(static_cast<double>(n + 1)) / gamma) * sg};
    return {c1, c4};
}

ChannelAmplitudes amplitudes_ground(double delta, int n, double tau) {
    require(n >= 0, "photon number n must be >= 0, got " + std::to_string(n));
    require(tau >= 0.0, "scaled time tau must be >= 0, got " + num(tau));
    if (n == 0) {
        // gamma_0 = delta: the vacuum+ground sector only picks up the phase
        // exp(i delta tau); no excitation can transfer.
        return {complexd{0.0, 0.0}, std::polar(1.0, delta * tau)};
    }
    const double gamma = rabi_frequency(delta, n);
    const double cg = std::cos(gamma * tau);
    const double sg = std::sin(gamma * tau);
    const complexd c2{0.0, -(std::sqrt(static_cast<double>(n)) / gamma) * sg};
    const complexd c3{cg, (delta / gamma) * sg};
    return {c2, c3};
}

ChannelState channel_state(const SystemParams& params, double tau) {
    params.validate();
    require(tau >= 0.0, "scaled time tau must be >= 0, got " + num(tau));
    const double delta = scaled_detuning(params.delta_raw, params.kappa);

    ChannelState state;
    if (params.initial == InitialState::Excited) {
        const auto amps = amplitudes_excited(delta, params.n, tau);
        state.frame = BasisFrame{params.n};
        state.vec = {amps.first, 0.0, 0.0, amps.second};
    } else if (params.n == 0) {
        const auto amps = amplitudes_ground(delta, 0, tau);
        state.frame = BasisFrame{0};
        state.vec = {0.0, amps.second, 0.0, 0.0};
        state.degenerate = true;
    } else {
        const auto amps = amplitudes_ground(delta, params.n, tau);
        state.frame = BasisFrame{params.n - 1};
        state.vec = {amps.first, 0.0, 0.0, amps.second};
    }
    return state;
}

}  // namespace qdc
