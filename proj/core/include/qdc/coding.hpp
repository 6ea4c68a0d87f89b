#pragma once

#include "qdc/dynamics.hpp"

#include <array>
#include <optional>
#include <utility>

namespace qdc {

/// The four dense-coding messages, realized as Pauli operations on the qubit.
enum class Message { I, X, Y, Z };

/// How Alice's local operations behave during coding.
///   Perfect             - every Pauli lands exactly.
///   BitFlipImperfect(q) - sigma_x succeeds with probability q, otherwise
///                         the channel is left untouched.
///   PhaseFlipSubstitute - sigma_z is applied whenever sigma_x was intended.
struct Protocol {
    enum class Kind { Perfect, BitFlipImperfect, PhaseFlipSubstitute };

    Kind kind = Kind::Perfect;
    double q = 1.0;  // bit-flip success probability (BitFlipImperfect only)

    static Protocol perfect() { return {Kind::Perfect, 1.0}; }
    static Protocol bit_flip(double q) { return {Kind::BitFlipImperfect, q}; }
    static Protocol phase_flip_substitute() { return {Kind::PhaseFlipSubstitute, 1.0}; }

    void validate() const;
    std::string name() const;  // "perfect", "bitflip", "phaseflip"
};

struct EnsembleEntry {
    Message message;
    double probability;
    Matrix4c actual;  // the state the message really produced
    Matrix4c ideal;   // the state a perfect operation would have produced
};

/// Equal-weight four-message ensemble for one channel state and protocol.
struct MessageEnsemble {
    std::array<EnsembleEntry, 4> entries;
    BasisFrame frame;
};

/// One row of computed information/disturbance measures.
struct InfoMeasures {
    std::optional<double> i_cod_closed;  // closed form; absent for BitFlipImperfect
    double i_bob_holevo = 0.0;
    double s_coded = 0.0;
    double d_message_avg = 0.0;
    double d_aggregate = 0.0;
};

/// Pauli on the qubit factor tensored with identity on the field factor, in
/// frame order. Conventions: sigma_z|e> = +|e>, sigma_x|e> = |g>,
/// sigma_y|e> = i|g>.
Matrix4c atom_pauli(Message which, BasisFrame frame);

MessageEnsemble build_ensemble(const ChannelState& channel, const Protocol& protocol);

/// rho_c = sum_i p_i actual_i
Matrix4c coded_state(const MessageEnsemble& ensemble);

/// Closed-form coded information in bits from the channel weights (a, c),
/// a + c = 1. Perfect: H(a, c). PhaseFlipSubstitute: the three-outcome form
/// equal to H(3a/4, 3c/4, 1/4). BitFlipImperfect has no closed form and
/// yields nullopt.
std::optional<double> coded_information_closed(const Protocol& protocol, double a, double c);

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i) over the actual states.
double holevo_quantity(const MessageEnsemble& ensemble);

/// (d_message_avg, d_aggregate): 1 minus the per-message-averaged fidelity,
/// and 1 minus the fidelity of the averaged states. Both reported since the
/// averaging level is a modeling choice.
std::pair<double, double> disturbance(const MessageEnsemble& ensemble);

InfoMeasures info_measures(const ChannelState& channel, const Protocol& protocol);

}  // namespace qdc
