#include "qlink/link_budget.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qlink {

namespace {

void validate(const LinkParams& p) {
    if (!(p.wavelength_m > 0) || !(p.transmitter_aperture_m > 0) ||
        !(p.receiver_aperture_m > 0) || !(p.fried_r0_m > 0))
        throw std::invalid_argument("link params: lengths must be positive");
    if (!(p.pointing_jitter_rad >= 0)) throw std::invalid_argument("pointing jitter must be >= 0");
    if (!(p.atm_transmission_zenith > 0 && p.atm_transmission_zenith <= 1))
        throw std::invalid_argument("atmospheric transmission must be in (0, 1]");
    if (!(p.system_loss_db >= 0) || !(p.margin_db >= 0))
        throw std::invalid_argument("loss terms must be >= 0");
}

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double effective_divergence_rad(const LinkParams& p) {
    validate(p);
    const double diff = p.diffraction_coeff * p.wavelength_m / p.transmitter_aperture_m;
    const double turb = p.wavelength_m / p.fried_r0_m;
    const double jit = p.pointing_jitter_rad;
    return std::sqrt(diff * diff + turb * turb + jit * jit);
}

LinkBudget attenuation_db(double slant_range_km, double elevation_deg, const LinkParams& p) {
    validate(p);
    if (!(slant_range_km > 0)) throw std::invalid_argument("slant range must be positive");
    if (!(elevation_deg > 0 && elevation_deg <= 90))
        throw std::invalid_argument("elevation must be in (0, 90] degrees");

    LinkBudget b;
    b.effective_divergence_rad = effective_divergence_rad(p);

    const double beam_radius_m = b.effective_divergence_rad * slant_range_km * 1e3;
    const double eta_geo =
        std::min(1.0, p.receiver_aperture_m * p.receiver_aperture_m / (2.0 * beam_radius_m * beam_radius_m));
    b.geometric_db = -10.0 * std::log10(eta_geo);

    const double airmass = 1.0 / std::sin(elevation_deg * kPi / 180.0);
    b.atmospheric_db = -10.0 * airmass * std::log10(p.atm_transmission_zenith);

    b.system_db = p.system_loss_db;
    b.margin_db = p.margin_db;
    b.total_db = b.geometric_db + b.atmospheric_db + b.system_db + b.margin_db;
    return b;
}

std::vector<CurvePoint> attenuation_curve(const std::vector<double>& apertures_m,
                                          double slant_range_km, double elevation_deg,
                                          const LinkParams& p) {
    if (apertures_m.empty()) throw std::invalid_argument("aperture sweep must be non-empty");
    std::vector<CurvePoint> curve;
    curve.reserve(apertures_m.size());
    LinkParams q = p;
    for (double dt : apertures_m) {
        q.transmitter_aperture_m = dt;
        curve.push_back({dt, attenuation_db(slant_range_km, elevation_deg, q)});
    }
    return curve;
}

void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& os) {
    os << "D_T_m,total_db,geometric_db,atmospheric_db,system_db,margin_db\n";
    char line[160];
    for (const auto& pt : curve) {
        std::snprintf(line, sizeof(line), "%.4f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      pt.transmitter_aperture_m, pt.budget.total_db, pt.budget.geometric_db,
                      pt.budget.atmospheric_db, pt.budget.system_db, pt.budget.margin_db);
        os << line;
    }
}

}  // namespace qlink
