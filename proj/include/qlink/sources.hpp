#pragma once

namespace qlink {

enum class BellState { phi_plus, psi_minus };

/// Entangled photon source. One arm is analyzed and detected locally, the
/// twin goes up the link. Coupling efficiency covers optical surfaces, fiber
/// coupling and local detection, per arm.
struct EpsSpec {
    double pair_rate_cps = 2.0e7;
    double coupling_efficiency = 0.5;
    double visibility = 0.95;  // polarization-correlation visibility at the source
    BellState state = BellState::phi_plus;
};

/// Decoy-state faint pulse source: vacuum + weak decoy scheme.
struct FpsSpec {
    double rep_rate_cps = 1.0e8;
    double mu_signal = 0.5;
    double mu_decoy = 0.1;
    double signal_fraction = 0.5;
    double decoy_fraction = 0.25;
    double vacuum_fraction = 0.25;
    double intrinsic_error = 0.01;  // e_d, optical misalignment error
};

struct DetectorSpec {
    double efficiency = 0.5;
    double dark_rate_cps = 500.0;  // per detector
    int n_detectors = 4;
    double timing_jitter_s = 0.25e-9;  // per detection, detector + time tagger
    double fov_rad = 1e-3;

    double dark_total_cps() const { return dark_rate_cps * n_detectors; }
};

struct EpsLocalRates {
    double singles_per_arm_cps;
    double pairs_detected_cps;
};

struct EpsRemoteRates {
    double singles_cps;
    double coincidences_cps;
};

void validate(const EpsSpec& s);
void validate(const FpsSpec& s);
void validate(const DetectorSpec& s);

EpsLocalRates eps_local_rates(const EpsSpec& s);

/// Local monitor rate of the FPS: rep rate times the per-pulse click
/// probability 1 - exp(-mu_i * eff), mixed over intensity classes.
double fps_local_rate(const FpsSpec& s, const DetectorSpec& d);

/// EPS rates seen at the space terminal behind `attenuation_db` of link loss
/// (detector efficiency is folded into the attenuation by convention).
EpsRemoteRates expected_remote_rates(const EpsSpec& s, double attenuation_db);

/// FPS detection rate at the space terminal: local-equivalent detected rate
/// scaled by the link transmission. This is the quick bookkeeping estimate;
/// the event generator resolves detections per intensity class instead.
double expected_remote_rates(const FpsSpec& s, const DetectorSpec& d, double attenuation_db);

}  // namespace qlink
