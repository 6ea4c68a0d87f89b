#include "qdc/coding.hpp"

#include <cmath>
#include <sstream>

namespace qdc {

namespace {

constexpr complexd kI{0.0, 1.0};

Matrix4c conjugate_by(const Matrix4c& u, const Matrix4c& rho) { return u * rho * u.adjoint(); }

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

void Protocol::validate() const {
    if (kind == Kind::BitFlipImperfect && (q < 0.0 || q > 1.0)) {
        std::ostringstream msg;
        msg << "bit-flip success probability q must lie in [0, 1], got " << q;
        throw validation_error(msg.str());
    }
}

std::string Protocol::name() const {
    switch (kind) {
        case Kind::Perfect: return "perfect";
        case Kind::BitFlipImperfect: return "bitflip";
        case Kind::PhaseFlipSubstitute: return "phaseflip";
    }
    return "unknown";
}

Matrix4c atom_pauli(Message which, BasisFrame /*frame*/) {
    // Frame order |e,m>, |g,m>, |e,m+1>, |g,m+1>: the qubit index varies
    // fastest, so sigma (x) I_field is block-diagonal diag(sigma, sigma).
    Matrix4c p;
    auto block = [&p](int base, complexd ee, complexd eg, complexd ge, complexd gg) {
        p(base, base) = ee;
        p(base, base + 1) = eg;
        p(base + 1, base) = ge;
        p(base + 1, base + 1) = gg;
    };
    for (int base : {0, 2}) {
        switch (which) {
            case Message::I: block(base, 1, 0, 0, 1); break;
            case Message::X: block(base, 0, 1, 1, 0); break;
            case Message::Y: block(base, 0, -kI, kI, 0); break;
            case Message::Z: block(base, 1, 0, 0, -1); break;
        }
    }
    return p;
}

MessageEnsemble build_ensemble(const ChannelState& channel, const Protocol& protocol) {
    protocol.validate();
    const double norm = norm_squared(channel.vec);
    if (std::abs(norm - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "channel state is not normalized: |psi|^2 = " << norm;
        throw validation_error(msg.str());
    }

    const Matrix4c rho = projector(channel.vec);
    MessageEnsemble ensemble;
    ensemble.frame = channel.frame;

    const std::array<Message, 4> messages{Message::I, Message::X, Message::Y, Message::Z};
    for (std::size_t k = 0; k < 4; ++k) {
        const Message msg = messages[k];
        EnsembleEntry& entry = ensemble.entries[k];
        entry.message = msg;
        entry.probability = 0.25;
        entry.ideal = conjugate_by(atom_pauli(msg, channel.frame), rho);
        if (msg == Message::X && protocol.kind == Protocol::Kind::BitFlipImperfect) {
            entry.actual = protocol.q * entry.ideal + (1.0 - protocol.q) * rho;
        } else if (msg == Message::X && protocol.kind == Protocol::Kind::PhaseFlipSubstitute) {
            entry.actual = conjugate_by(atom_pauli(Message::Z, channel.frame), rho);
        } else {
            entry.actual = entry.ideal;
        }
    }
    return ensemble;
}

Matrix4c coded_state(const MessageEnsemble& ensemble) {
    Matrix4c rho_c;
    for (const auto& entry : ensemble.entries) rho_c += entry.probability * entry.actual;
    validate_density(rho_c, "coded state");
    return rho_c;
}

std::optional<double> coded_information_closed(const Protocol& protocol, double a, double c) {
    if (a < 0.0 || c < 0.0 || std::abs(a + c - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "channel weights must satisfy a, c >= 0 and a + c = 1, got a=" << a << " c=" << c;
        throw validation_error(msg.str());
    }
    switch (protocol.kind) {
        case Protocol::Kind::Perfect:
            return -xlog2(a) - xlog2(c);
        case Protocol::Kind::PhaseFlipSubstitute:
            // -(3/4) [ a log2(3a/4) + c log2(3c/4) + ((a+c)/3) log2((a+c)/4) ]
            return -0.75 * (a * (a > 0.0 ? std::log2(0.75 * a) : 0.0) +
                            c * (c > 0.0 ? std::log2(0.75 * c) : 0.0) +
                            ((a + c) / 3.0) * std::log2(0.25 * (a + c)));
        case Protocol::Kind::BitFlipImperfect:
            return std::nullopt;
    }
    return std::nullopt;
}

double holevo_quantity(const MessageEnsemble& ensemble) {
    const Matrix4c rho_c = coded_state(ensemble);
    double chi = von_neumann_entropy(rho_c);
    for (const auto& entry : ensemble.entries)
        chi -= entry.probability * von_neumann_entropy(entry.actual);
    return std::max(chi, 0.0);
}

std::pair<double, double> disturbance(const MessageEnsemble& ensemble) {
    double avg_fidelity = 0.0;
    Matrix4c mean_actual;
    Matrix4c mean_ideal;
    for (const auto& entry : ensemble.entries) {
        avg_fidelity += entry.probability * uhlmann_fidelity(entry.ideal, entry.actual);
        mean_actual += entry.probability * entry.actual;
        mean_ideal += entry.probability * entry.ideal;
    }
    const double d_message = std::clamp(1.0 - avg_fidelity, 0.0, 1.0);
    const double d_aggregate =
        std::clamp(1.0 - uhlmann_fidelity(mean_ideal, mean_actual), 0.0, 1.0);
    return {d_message, d_aggregate};
}

InfoMeasures info_measures(const ChannelState& channel, const Protocol& protocol) {
    const MessageEnsemble ensemble = build_ensemble(channel, protocol);
    InfoMeasures out;
    out.i_cod_closed = coded_information_closed(protocol, channel.atom_excited_weight(),
                                                channel.atom_ground_weight());
    out.s_coded = von_neumann_entropy(coded_state(ensemble));
    out.i_bob_holevo = holevo_quantity(ensemble);
    const auto [d_message, d_aggregate] = disturbance(ensemble);
    out.d_message_avg = d_message;
    out.d_aggregate = d_aggregate;
    return out;
}

}  // namespace qdc
