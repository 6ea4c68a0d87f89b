#pragma once

#include "qdc/coding.hpp"

#include <string>
#include <vector>

namespace qdc {

enum class SweepParam { DeltaRaw, PhotonNumber, Kappa, FlipProbability };

std::string sweep_param_name(SweepParam p);

/// One family of curves: a protocol, base parameters, a uniform tau grid,
/// and (optionally) one or more swept parameters. Each (param, values) entry
/// contributes one curve per value, holding the other parameters at base.
struct SweepSpec {
    Protocol protocol;
    SystemParams base;
    double tau_max = 10.0;
    int steps = 2000;  // grid points, tau = 0 .. tau_max inclusive
    std::vector<std::pair<SweepParam, std::vector<double>>> vary;
    std::string label_prefix;  // e.g. "panel=a:" for multi-panel figures

    void validate() const;
};

struct InfoRecord {
    double tau;
    std::string curve;
    InfoMeasures measures;
};

struct CurveTrend {
    std::string curve;
    int maxima_count = 0;
    double max_value = 0.0;
    double argmax_tau = 0.0;
};

struct TrendClaim {
    std::string description;
    bool pass = false;
};

struct TrendReport {
    std::string preset;
    std::vector<CurveTrend> per_curve;
    std::vector<TrendClaim> claims;

    bool all_pass() const;
};

/// Evaluates every curve point of the spec; rows ordered curve-major, tau
/// ascending. Deterministic: identical specs give bit-identical output.
std::vector<InfoRecord> run_sweep(const SweepSpec& spec);

/// Caption parameters for figures 1-8 plus the four panels of figure 9
/// (ids "fig9a".."fig9d"). Throws validation_error for unknown ids and for
/// plain "fig9", which spans two protocols (use figure_preset_group).
SweepSpec figure_preset(const std::string& id);

/// Like figure_preset, but "fig9" expands to its four panels.
std::vector<SweepSpec> figure_preset_group(const std::string& id);

/// Interior points strictly greater than both neighbours by more than tol.
/// The series must be sorted by tau and hold at least 3 points.
int count_local_maxima(const std::vector<std::pair<double, double>>& series, double tol = 1e-6);

/// Runs the preset's default-grid sweep(s) and evaluates the qualitative
/// claims attached to that figure. Value comparisons allow a slack of 1e-3
/// (the grid-refinement error bound); peak-count comparisons are exact.
TrendReport trend_check(const std::string& id);

}  // namespace qdc
