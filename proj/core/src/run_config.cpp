#include "qdc/run_config.hpp"

#include "qdc/csv.hpp"
#include "qdc/numfmt.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qdc::cli {

namespace {

Protocol make_protocol(const std::string& name, double q) {
    if (name == "perfect") return Protocol::perfect();
    if (name == "bitflip") return Protocol::bit_flip(q);
    if (name == "phaseflip") return Protocol::phase_flip_substitute();
    throw usage_error("--protocol: unknown protocol '" + name + "'");
}

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::Sweep: return "sweep";
        case Mode::Preset: return "preset";
        case Mode::Trends: return "trends";
    }
    return "unknown";
}

void print_trend_report(const TrendReport& report, std::ostream& out) {
    out << "# trend report: " << report.preset << "\n";
    for (const auto& curve : report.per_curve) {
        out << "curve " << curve.curve << ": maxima=" << curve.maxima_count
            << " max=" << format_significant(curve.max_value)
            << " argmax_tau=" << format_significant(curve.argmax_tau) << "\n";
    }
    for (const auto& claim : report.claims)
        out << "claim \"" << claim.description << "\": " << (claim.pass ? "PASS" : "FAIL") << "\n";
    out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

std::vector<SweepSpec> RunConfig::resolve_specs() const {
    if (mode == Mode::Preset || mode == Mode::Trends) {
        auto specs = figure_preset_group(preset);
        for (auto& spec : specs) {
            spec.tau_max = tau_max;
            spec.steps = steps;
            spec.validate();
        }
        return specs;
    }

    SweepSpec spec;
    spec.protocol = protocol;
    spec.base.initial = initial;
    spec.base.n = n;
    if (delta.empty()) throw validation_error("--delta: at least one value is required");
    if (kappa.empty()) throw validation_error("--kappa: at least one value is required");
    spec.base.delta_raw = delta.front();
    spec.base.kappa = kappa.front();
    spec.tau_max = tau_max;
    spec.steps = steps;
    if (delta.size() > 1 && kappa.size() > 1)
        throw validation_error(
            "at most one of --delta/--kappa may be given several values in one sweep");
    if (delta.size() > 1) spec.vary = {{SweepParam::DeltaRaw, delta}};
    if (kappa.size() > 1) spec.vary = {{SweepParam::Kappa, kappa}};
    spec.validate();
    return {spec};
}

std::string RunConfig::to_config_text() const {
    std::ostringstream os;
    os << "# qdc run configuration\n";
    os << "mode=" << mode_name(mode) << "\n";
    if (!preset.empty()) os << "preset=" << preset << "\n";
    os << "protocol=" << protocol.name() << "\n";
    os << "initial=" << (initial == InitialState::Excited ? "excited" : "ground") << "\n";
    os << "n=" << n << "\n";
    for (double d : delta) os << "delta=" << format_significant(d) << "\n";
    for (double k : kappa) os << "kappa=" << format_significant(k) << "\n";
    os << "q=" << format_significant(q) << "\n";
    os << "tau-max=" << format_significant(tau_max) << "\n";
    os << "steps=" << steps << "\n";
    if (!out.empty()) os << "out=" << out << "\n";
    return os.str();
}

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string mode_s = "preset";
    std::string protocol_s = "perfect";
    std::string initial_s = "excited";

    CLI::App app{"Dense-coding channel simulator: sweeps coded/decoded information and "
                 "disturbance over scaled time",
                 "qdc"};
    app.add_option("--mode", mode_s, "run mode")
        ->check(CLI::IsMember({"sweep", "preset", "trends"}));
    app.add_option("--preset", cfg.preset, "figure preset id (fig1..fig9, fig9a..fig9d)");
    app.add_option("--protocol", protocol_s, "coding protocol")
        ->check(CLI::IsMember({"perfect", "bitflip", "phaseflip"}));
    app.add_option("--initial", initial_s, "initial qubit state")
        ->check(CLI::IsMember({"excited", "ground"}));
    app.add_option("--n", cfg.n, "cavity photon number")->check(CLI::NonNegativeNumber);
    app.add_option("--delta", cfg.delta, "detuning (repeat to sweep curves)");
    app.add_option("--kappa", cfg.kappa, "capacitance ratio (repeat to sweep curves)");
    app.add_option("--q", cfg.q, "bit-flip success probability")->check(CLI::Range(0.0, 1.0));
    app.add_option("--tau-max", cfg.tau_max, "scaled-time range end")
        ->check(CLI::PositiveNumber);
    app.add_option("--steps", cfg.steps, "grid points from 0 to tau-max inclusive")
        ->check(CLI::Range(2, 1000000));
    app.add_option("--out", cfg.out, "output path (default: standard output)");
    app.set_config("--config", "", "key=value configuration file (# comments); "
                                   "explicit flags override file values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw help_requested(app.help());
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    if (mode_s == "sweep") cfg.mode = Mode::Sweep;
    else if (mode_s == "trends") cfg.mode = Mode::Trends;
    else cfg.mode = Mode::Preset;

    cfg.initial = initial_s == "ground" ? InitialState::Ground : InitialState::Excited;
    cfg.protocol = make_protocol(protocol_s, cfg.q);

    if (cfg.mode != Mode::Sweep) {
        if (cfg.preset.empty())
            throw usage_error("--preset is required for mode '" + mode_s + "'");
        try {
            figure_preset_group(cfg.preset);
        } catch (const validation_error& e) {
            throw usage_error(std::string("--preset: ") + e.what());
        }
    }
    return cfg;
}

int run(int argc, const char* const* argv) {
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const help_requested& h) {
        std::cout << h.what();
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.mode == Mode::Trends) {
            const TrendReport report = trend_check(cfg.preset);
            if (cfg.out.empty()) {
                print_trend_report(report, std::cout);
            } else {
                std::ofstream file(cfg.out);
                if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
                print_trend_report(report, file);
            }
            return 0;
        }

        const auto specs = cfg.resolve_specs();
        std::vector<InfoRecord> records;
        for (const auto& spec : specs) {
            auto rows = run_sweep(spec);
            records.insert(records.end(), rows.begin(), rows.end());
        }
        if (cfg.out.empty()) {
            emit_csv(records, specs, std::cout);
        } else {
            emit_csv_file(records, specs, cfg.out);
        }
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qdc::cli
