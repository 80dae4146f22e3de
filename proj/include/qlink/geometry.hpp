#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qlink {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kIssAltitudeKm = 400.0;
inline constexpr double kEarthMuKm3s2 = 398600.4418;  // GM of Earth
inline constexpr double kSpeedOfLightKmS = 299792.458;

struct GroundStation {
    std::string name = "OGS";
    double altitude_m = 0.0;
    double background_cps = 100.0;  // sky + city background seen in the receiver FOV
};

struct PassSample {
    double t_s = 0.0;
    double elevation_deg = 0.0;
    double slant_range_km = 0.0;
    double nadir_angle_deg = 0.0;
};

/// Time series of one pass over a ground station, symmetric around the
/// culmination at t = 0.
struct PassProfile {
    std::vector<PassSample> samples;
    double max_elevation_deg = 90.0;
    double orbit_altitude_km = kIssAltitudeKm;
    double earth_radius_km = kEarthRadiusKm;
    double sample_dt_s = 0.1;

    /// Linear interpolation of slant range between samples.
    double slant_range_at(double t_s) const;
    double elevation_at(double t_s) const;
    /// One-way light travel time, seconds.
    double propagation_delay_s(double t_s) const;
};

struct LinkWindowConstraints {
    double min_elevation_deg = 51.0;
    double max_nadir_angle_deg = 36.0;
    // Incidence of the beam on the nadir-facing window glass; equals the nadir
    // angle of the line of sight. Applied only when apply_window_incidence is
    // set (worst-case mode where window birefringence must stay negligible).
    double max_window_incidence_deg = 10.0;
    double max_duration_s = 70.0;
    bool apply_window_incidence = false;
};

enum class WindowConstraint { none, elevation, nadir, incidence, duration, pass_edge };

const char* to_string(WindowConstraint c);

struct LinkWindow {
    double t_start_s = 0.0;
    double t_end_s = 0.0;
    WindowConstraint start_constraint = WindowConstraint::none;
    WindowConstraint end_constraint = WindowConstraint::none;

    double duration_s() const { return t_end_s - t_start_s; }
};

/// Line-of-sight distance station -> spacecraft for a spherical Earth.
/// Strictly decreasing in elevation. Throws std::domain_error outside
/// [0, 90] degrees or for non-positive radii.
double slant_range_km(double elevation_deg, double orbit_altitude_km = kIssAltitudeKm,
                      double earth_radius_km = kEarthRadiusKm);

/// Angle at the spacecraft between nadir and the line of sight to the
/// station; zero at zenith.
double nadir_angle_deg(double elevation_deg, double orbit_altitude_km = kIssAltitudeKm,
                       double earth_radius_km = kEarthRadiusKm);

/// Inverse of nadir_angle_deg, bisected to machine precision.
double elevation_for_nadir_deg(double nadir_deg, double orbit_altitude_km = kIssAltitudeKm,
                               double earth_radius_km = kEarthRadiusKm);

/// Circular-orbit overhead pass with the requested peak elevation. The
/// ground track is a great circle passing at the central angle matching
/// max_elevation; Earth rotation is ignored.
PassProfile synth_pass(double max_elevation_deg, double orbit_altitude_km = kIssAltitudeKm,
                       double earth_radius_km = kEarthRadiusKm, double sample_dt_s = 0.1);

/// Longest contiguous interval satisfying all constraints, truncated to
/// max_duration_s (kept centered on the peak-elevation sample). Returns
/// nullopt when no sample qualifies.
std::optional<LinkWindow> usable_window(const PassProfile& pass, const LinkWindowConstraints& c);

/// Small-angle footprint of the receiver FOV projected to ground, meters.
double footprint_diameter_m(double slant_range_km, double fov_rad);

void write_pass_csv(const PassProfile& pass, std::ostream& os);
PassProfile read_pass_csv(std::istream& is);

}  // namespace qlink
