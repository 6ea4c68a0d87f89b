#include "qdc/csv.hpp"

#include "qdc/numfmt.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace qdc {

namespace {

std::string protocol_text(const Protocol& p) {
    std::string text = p.name();
    if (p.kind == Protocol::Kind::BitFlipImperfect) text += "(q=" + format_significant(p.q) + ")";
    return text;
}

std::string spec_text(const SweepSpec& spec) {
    std::ostringstream os;
    os << "protocol=" << protocol_text(spec.protocol)
       << " initial=" << (spec.base.initial == InitialState::Excited ? "excited" : "ground")
       << " n=" << spec.base.n << " delta=" << format_significant(spec.base.delta_raw)
       << " kappa=" << format_significant(spec.base.kappa)
       << " tau_max=" << format_significant(spec.tau_max) << " steps=" << spec.steps;
    for (const auto& [param, values] : spec.vary) {
        os << " vary:" << sweep_param_name(param) << "={";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? "," : "") << format_significant(values[i]);
        os << "}";
    }
    if (!spec.label_prefix.empty()) os << " label_prefix=" << spec.label_prefix;
    return os.str();
}

}  // namespace

void emit_csv(const std::vector<InfoRecord>& records, const std::vector<SweepSpec>& specs,
              std::ostream& out) {
    if (records.empty()) throw validation_error("no records to emit");

    out << "# qdc sweep output\n";
    for (std::size_t i = 0; i < specs.size(); ++i)
        out << "# spec[" << i << "]: " << spec_text(specs[i]) << "\n";
    out << "# convention: entropies and information in bits (log base 2)\n";
    out << "# convention: fidelity = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 (Uhlmann, squared)\n";
    out << "# convention: disturbance d_message_avg = 1 - sum_i p_i F(ideal_i, actual_i); "
           "d_aggregate = 1 - F(mean ideal, mean actual)\n";
    out << "# convention: channel amplitudes use the exactly unitary closed forms "
           "c1 = cos(g t) - i (d/g) sin(g t), c4 = -i (sqrt(n+1)/g) sin(g t) with "
           "g = sqrt(d^2 + n + 1), and c2 = -i (sqrt(n)/g') sin(g' t), "
           "c3 = cos(g' t) + i (d/g') sin(g' t) with g' = sqrt(d^2 + n); "
           "|first|^2 + |second|^2 = 1 holds exactly\n";
    out << "# convention: scaled detuning d = delta / (2 kappa); i_cod_closed is NA for the "
           "probabilistic bit-flip protocol (no closed form)\n";
    out << "tau,curve,i_cod_closed,i_bob_holevo,s_coded,d_message_avg,d_aggregate\n";

    for (const auto& r : records) {
        out << format_significant(r.tau) << ',' << r.curve << ','
            << (r.measures.i_cod_closed ? format_significant(*r.measures.i_cod_closed) : "NA")
            << ',' << format_significant(r.measures.i_bob_holevo) << ','
            << format_significant(r.measures.s_coded) << ','
            << format_significant(r.measures.d_message_avg) << ','
            << format_significant(r.measures.d_aggregate) << '\n';
    }
}

void emit_csv_file(const std::vector<InfoRecord>& records, const std::vector<SweepSpec>& specs,
                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_csv(records, specs, out);
    out.flush();
    if (!out) throw std::runtime_error("failed while writing output file: " + path);
}

}  // namespace qdc
