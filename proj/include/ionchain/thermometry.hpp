#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ionchain/normal_modes.hpp"

namespace ionchain {

// One addressed motional mode in a thermal state.
struct ThermalMode {
    double frequency = 0.0; // angular, rad/s
    double nbar = 0.0;      // mean occupation
    double eta = 0.0;       // Lamb-Dicke parameter
};

enum class RabiMethod {
    Laguerre,   // Omega0 L_n(eta^2), stable three-term recurrence
    Linearized, // Omega0 (1 - eta^2 n)
};

// Carrier Rabi-flop model: shelving probability
//   offset + contrast * 1/2 (1 - <cos(2 Omega(n) t)>_thermal).
struct RabiModel {
    double omega0 = 0.0; // ground-state carrier Rabi frequency, rad/s
    std::vector<ThermalMode> modes;
    double contrast = 1.0;
    double offset = 0.0;

    void validate() const;
};

enum class ScanKind { TimeScan, FrequencyScan };

struct ShelvingRecord {
    double abscissa = 0.0;  // probe time (s) or detuning (rad/s)
    double p_shelved = 0.0;
    double sigma = 1.0;     // standard error
};

struct ShelvingDataset {
    ScanKind kind = ScanKind::TimeScan;
    std::vector<ShelvingRecord> records;

    void validate() const;
};

struct OccupationFit {
    double omega0 = 0.0;
    double sum_eta2_nbar = 0.0; // sum_i eta_i^2 nbar_i
    double contrast = 0.0;
    double offset = 0.0;
    double sum_nbar = -1.0;       // sum_i nbar_i; set only under equal_eta
    double sigma_omega0 = 0.0;
    double sigma_sum_eta2_nbar = 0.0;
    double sigma_sum_nbar = -1.0;
    Eigen::MatrixXd covariance;   // 4x4: omega0, sum_eta2_nbar, contrast, offset
    double chi2 = 0.0;
    int dof = 0;
    bool ill_conditioned = false; // relative parameter uncertainty above 100%
};

struct OccupationFitOptions {
    bool equal_eta = false; // report sum_nbar = sum_eta2_nbar / eta^2
    RabiMethod method = RabiMethod::Linearized;
    std::uint64_t seed = 20140901; // Monte Carlo path only
};

// p_n = (1/(nbar+1)) (nbar/(nbar+1))^n.
double thermal_pn(double nbar, long n);

// N* = ceil(14 (nbar+1)); keeps the neglected thermal tail below 1e-6.
long thermal_truncation(double nbar);

// Rabi frequency of the carrier from motional level n.
double carrier_rabi(double omega0, double eta, long n,
                    RabiMethod method = RabiMethod::Laguerre);

// Thermal carrier flop signal at the given times. Multi-mode expectation is
// summed directly when the truncated product grid has at most 1e6 points,
// otherwise seeded Monte Carlo with at least 1e5 thermal samples.
std::vector<double> shelving_signal(const RabiModel& model, const std::vector<double>& times,
                                    RabiMethod method = RabiMethod::Linearized,
                                    std::uint64_t seed = 20140901);

// Weighted fit of {Omega0, sum eta^2 nbar, contrast, offset} to a time scan.
// etas fixes the per-mode Lamb-Dicke parameters; occupation is assumed equal
// across modes so the fit parameter maps to nbar_i = S / sum_j eta_j^2.
OccupationFit fit_occupation(const ShelvingDataset& data, const std::vector<double>& etas,
                             const OccupationFitOptions& options = {});

// Bose occupation <-> temperature for one mode; zero maps to zero exactly.
double nbar_temperature(double nbar, double frequency);
double temperature_nbar(double temperature, double frequency);

// T_D = hbar Gamma / (2 kB).
double doppler_limit(double linewidth);

// One direction's mode set addressed with the given beam projection.
struct ProbedSpectrum {
    ModeSpectrum spectrum;
    double projection = 0.0; // cosine between beam and this mode axis
};

struct SidebandProbe {
    double omega0 = 0.0;   // ground-state carrier Rabi frequency, rad/s
    double duration = 0.0; // pulse length, s
    int ion_index = 0;
    double wavevector = 0.0; // rad/m
};

struct SidebandScan {
    ShelvingDataset data;       // kind = FrequencyScan, abscissa = detuning rad/s
    bool lamb_dicke_ok = true;  // false when some mode has eta^2 (2 nbar + 1) >= 0.3
};

// Pulsed shelving spectrum: carrier plus every first red/blue sideband,
// thermally averaged by seeded Monte Carlo. nbar_per_mode is aligned with
// the concatenated mode list of `spectra`.
SidebandScan sideband_spectrum(const std::vector<ProbedSpectrum>& spectra,
                               const std::vector<double>& nbar_per_mode,
                               const SidebandProbe& probe,
                               const std::vector<double>& detunings,
                               std::uint64_t seed = 20140901, int samples = 3000);

} // namespace ionchain
