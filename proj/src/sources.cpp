#include "qlink/sources.hpp"

#include <cmath>
#include <stdexcept>

namespace qlink {

void validate(const EpsSpec& s) {
    if (!(s.pair_rate_cps >= 0)) throw std::invalid_argument("pair rate must be >= 0");
    if (!(s.coupling_efficiency >= 0 && s.coupling_efficiency <= 1))
        throw std::invalid_argument("coupling efficiency must be in [0, 1]");
    if (!(s.visibility >= 0 && s.visibility <= 1))
        throw std::invalid_argument("visibility must be in [0, 1]");
}

void validate(const FpsSpec& s) {
    if (!(s.rep_rate_cps > 0)) throw std::invalid_argument("rep rate must be positive");
    if (!(s.mu_decoy > 0 && s.mu_decoy < s.mu_signal && s.mu_signal <= 1.0))
        throw std::invalid_argument("need 0 < mu_decoy < mu_signal <= 1");
    const double sum = s.signal_fraction + s.decoy_fraction + s.vacuum_fraction;
    if (s.signal_fraction < 0 || s.decoy_fraction < 0 || s.vacuum_fraction < 0 ||
        std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("intensity-class fractions must be >= 0 and sum to 1");
    if (!(s.intrinsic_error >= 0 && s.intrinsic_error <= 0.5))
        throw std::invalid_argument("intrinsic error must be in [0, 0.5]");
}

void validate(const DetectorSpec& s) {
    if (!(s.efficiency >= 0 && s.efficiency <= 1))
        throw std::invalid_argument("detector efficiency must be in [0, 1]");
    if (!(s.dark_rate_cps >= 0)) throw std::invalid_argument("dark rate must be >= 0");
    if (s.n_detectors <= 0) throw std::invalid_argument("need at least one detector");
    if (!(s.timing_jitter_s >= 0)) throw std::invalid_argument("timing jitter must be >= 0");
}

EpsLocalRates eps_local_rates(const EpsSpec& s) {
    validate(s);
    return {s.pair_rate_cps * s.coupling_efficiency,
            s.pair_rate_cps * s.coupling_efficiency * s.coupling_efficiency};
}

double fps_local_rate(const FpsSpec& s, const DetectorSpec& d) {
    validate(s);
    validate(d);
    const double p = s.signal_fraction * (1.0 - std::exp(-s.mu_signal * d.efficiency)) +
                     s.decoy_fraction * (1.0 - std::exp(-s.mu_decoy * d.efficiency));
    return s.rep_rate_cps * p;
}

EpsRemoteRates expected_remote_rates(const EpsSpec& s, double attenuation_db) {
    validate(s);
    if (!(attenuation_db >= 0)) throw std::invalid_argument("attenuation must be >= 0");
    const double transmission = std::pow(10.0, -attenuation_db / 10.0);
    const double uplink_singles = eps_local_rates(s).singles_per_arm_cps;
    EpsRemoteRates r;
    r.singles_cps = uplink_singles * transmission;
    r.coincidences_cps = r.singles_cps * s.coupling_efficiency;
    return r;
}

double expected_remote_rates(const FpsSpec& s, const DetectorSpec& d, double attenuation_db) {
    if (!(attenuation_db >= 0)) throw std::invalid_argument("attenuation must be >= 0");
    return fps_local_rate(s, d) * std::pow(10.0, -attenuation_db / 10.0);
}

}  // namespace qlink
