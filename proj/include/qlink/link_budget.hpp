#pragma once

#include <iosfwd>
#include <vector>

namespace qlink {

/// Uplink parameters. The defaults are calibrated once so that the zenith
/// pass with a 20 cm sending aperture comes out at 40 dB total (including
/// the 5 dB margin); see attenuation_db.
struct LinkParams {
    double wavelength_m = 810e-9;
    double transmitter_aperture_m = 0.20;   // D_T
    double receiver_aperture_m = 0.143;     // D_R, clear aperture of the onboard lens
    double fried_r0_m = 0.20;               // atmospheric coherence length at zenith
    double pointing_jitter_rad = 3e-6;      // rms
    double diffraction_coeff = 1.22;
    // Receiver optics + window transmission + detector quantum efficiency,
    // folded together so that detected rates follow directly from the total.
    double system_loss_db = 4.5;
    double margin_db = 5.0;
    double atm_transmission_zenith = 0.7;
};

struct LinkBudget {
    double total_db = 0.0;
    double geometric_db = 0.0;
    double atmospheric_db = 0.0;
    double system_db = 0.0;
    double margin_db = 0.0;
    double effective_divergence_rad = 0.0;
};

/// Half-angle beam divergence: diffraction, turbulence and pointing jitter
/// added in quadrature. Strictly decreasing in D_T with a floor set by the
/// last two terms.
double effective_divergence_rad(const LinkParams& p);

/// Total uplink attenuation, decomposed. Geometric collection follows the
/// Gaussian far-field small-receiver approximation eta = D_R^2 / (2 (theta L)^2),
/// clamped at 1; the atmospheric term scales with the 1/sin(elevation) airmass.
LinkBudget attenuation_db(double slant_range_km, double elevation_deg, const LinkParams& p);

struct CurvePoint {
    double transmitter_aperture_m;
    LinkBudget budget;
};

/// Attenuation versus D_T at fixed range/elevation (the Fig.-3-style sweep).
std::vector<CurvePoint> attenuation_curve(const std::vector<double>& apertures_m,
                                          double slant_range_km, double elevation_deg,
                                          const LinkParams& p);

void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& os);

}  // namespace qlink
