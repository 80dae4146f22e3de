#include "qlink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlink {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double deg2rad(double d) { return d * (kPi / 180.0); }
double rad2deg(double r) { return r * (180.0 / kPi); }

void check_geometry_args(double elevation_deg, double h_km, double re_km) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw std::domain_error("elevation must be in [0, 90] degrees");
    if (!(h_km >= 0.0)) throw std::domain_error("orbit altitude must be non-negative");
    if (!(re_km > 0.0)) throw std::domain_error("earth radius must be positive");
}

/// Elevation seen from the station when the spacecraft is at central angle
/// beta from the station, radians in, degrees out.
double elevation_of_central_angle(double beta, double h_km, double re_km) {
    const double rho = re_km / (re_km + h_km);
    return rad2deg(std::atan2(std::cos(beta) - rho, std::sin(beta)));
}

double central_angle_for_elevation(double elevation_deg, double h_km, double re_km) {
    const double rho = re_km / (re_km + h_km);
    double lo = 0.0, hi = std::acos(rho);  // horizon
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (elevation_of_central_angle(mid, h_km, re_km) > elevation_deg)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(WindowConstraint c) {
    switch (c) {
        case WindowConstraint::none: return "none";
        case WindowConstraint::elevation: return "elevation";
        case WindowConstraint::nadir: return "nadir";
        case WindowConstraint::incidence: return "incidence";
        case WindowConstraint::duration: return "duration";
        case WindowConstraint::pass_edge: return "pass_edge";
    }
    return "unknown";
}

double slant_range_km(double elevation_deg, double h_km, double re_km) {
    check_geometry_args(elevation_deg, h_km, re_km);
    const double s = std::sin(deg2rad(elevation_deg));
    return std::sqrt(re_km * re_km * s * s + 2.0 * re_km * h_km + h_km * h_km) - re_km * s;
}

double nadir_angle_deg(double elevation_deg, double h_km, double re_km) {
    check_geometry_args(elevation_deg, h_km, re_km);
    const double c = std::cos(deg2rad(elevation_deg));
    return rad2deg(std::asin(re_km * c / (re_km + h_km)));
}

double elevation_for_nadir_deg(double nadir_deg, double h_km, double re_km) {
    if (!(nadir_deg >= 0.0)) throw std::domain_error("nadir angle must be non-negative");
    const double horizon_nadir = nadir_angle_deg(0.0, h_km, re_km);
    if (nadir_deg >= horizon_nadir) return 0.0;
    // nadir_angle_deg is strictly decreasing in elevation
    double lo = 0.0, hi = 90.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (nadir_angle_deg(mid, h_km, re_km) > nadir_deg)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double footprint_diameter_m(double slant_range_km, double fov_rad) {
    if (!(slant_range_km >= 0.0) || !(fov_rad >= 0.0))
        throw std::domain_error("slant range and FOV must be non-negative");
    return slant_range_km * 1e3 * fov_rad;
}

double PassProfile::slant_range_at(double t_s) const {
    if (samples.empty()) throw std::runtime_error("empty pass profile");
    if (t_s <= samples.front().t_s) return samples.front().slant_range_km;
    if (t_s >= samples.back().t_s) return samples.back().slant_range_km;
    const auto it = std::lower_bound(samples.begin(), samples.end(), t_s,
                                     [](const PassSample& s, double t) { return s.t_s < t; });
    const PassSample& b = *it;
    const PassSample& a = *(it - 1);
    const double w = (t_s - a.t_s) / (b.t_s - a.t_s);
    return a.slant_range_km + w * (b.slant_range_km - a.slant_range_km);
}

double PassProfile::elevation_at(double t_s) const {
    if (samples.empty()) throw std::runtime_error("empty pass profile");
    if (t_s <= samples.front().t_s) return samples.front().elevation_deg;
    if (t_s >= samples.back().t_s) return samples.back().elevation_deg;
    const auto it = std::lower_bound(samples.begin(), samples.end(), t_s,
                                     [](const PassSample& s, double t) { return s.t_s < t; });
    const PassSample& b = *it;
    const PassSample& a = *(it - 1);
    const double w = (t_s - a.t_s) / (b.t_s - a.t_s);
    return a.elevation_deg + w * (b.elevation_deg - a.elevation_deg);
}

double PassProfile::propagation_delay_s(double t_s) const {
    return slant_range_at(t_s) / kSpeedOfLightKmS;
}

PassProfile synth_pass(double max_elevation_deg, double h_km, double re_km, double sample_dt_s) {
    if (!(max_elevation_deg > 0.0 && max_elevation_deg <= 90.0))
        throw std::domain_error("max elevation must be in (0, 90] degrees");
    if (!(h_km > 0.0)) throw std::domain_error("orbit altitude must be positive");
    if (!(sample_dt_s > 0.0)) throw std::domain_error("sample step must be positive");

    const double rho = re_km / (re_km + h_km);
    const double omega = std::sqrt(kEarthMuKm3s2 / std::pow(re_km + h_km, 3));
    const double beta_min =
        max_elevation_deg >= 90.0 ? 0.0 : central_angle_for_elevation(max_elevation_deg, h_km, re_km);
    // Cross-track geometry: cos beta(t) = cos(beta_min) * cos(omega t).
    const double beta_horizon = std::acos(rho);
    const double cos_ratio = rho / std::cos(beta_min);
    const double t_horizon = std::acos(std::min(1.0, cos_ratio)) / omega;

    PassProfile pass;
    pass.max_elevation_deg = max_elevation_deg;
    pass.orbit_altitude_km = h_km;
    pass.earth_radius_km = re_km;
    pass.sample_dt_s = sample_dt_s;

    const long k_max = static_cast<long>(std::floor(t_horizon / sample_dt_s));
    pass.samples.reserve(static_cast<std::size_t>(2 * k_max + 1));
    for (long k = -k_max; k <= k_max; ++k) {
        const double t = static_cast<double>(k) * sample_dt_s;
        double elevation;
        if (k == 0) {
            elevation = max_elevation_deg;  // exact at culmination by construction
        } else {
            const double cb = std::cos(beta_min) * std::cos(omega * t);
            const double beta = std::acos(std::clamp(cb, -1.0, 1.0));
            elevation = std::clamp(elevation_of_central_angle(beta, h_km, re_km), 0.0, 90.0);
        }
        PassSample s;
        s.t_s = t;
        s.elevation_deg = elevation;
        s.slant_range_km = slant_range_km(elevation, h_km, re_km);
        s.nadir_angle_deg = nadir_angle_deg(elevation, h_km, re_km);
        pass.samples.push_back(s);
    }
    (void)beta_horizon;
    return pass;
}

std::optional<LinkWindow> usable_window(const PassProfile& pass, const LinkWindowConstraints& c) {
    const auto& samples = pass.samples;
    if (samples.empty()) return std::nullopt;

    const double nadir_limit = c.apply_window_incidence
                                   ? std::min(c.max_nadir_angle_deg, c.max_window_incidence_deg)
                                   : c.max_nadir_angle_deg;

    auto ok = [&](const PassSample& s) {
        return s.elevation_deg >= c.min_elevation_deg && s.nadir_angle_deg <= nadir_limit;
    };
    auto blocking = [&](const PassSample& s) {
        if (s.elevation_deg < c.min_elevation_deg) return WindowConstraint::elevation;
        if (c.apply_window_incidence && s.nadir_angle_deg > c.max_window_incidence_deg &&
            c.max_window_incidence_deg < c.max_nadir_angle_deg)
            return WindowConstraint::incidence;
        return WindowConstraint::nadir;
    };

    // longest contiguous run of qualifying samples
    std::size_t best_begin = 0, best_len = 0;
    std::size_t i = 0;
    while (i < samples.size()) {
        if (!ok(samples[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < samples.size() && ok(samples[j])) ++j;
        if (j - i > best_len) {
            best_len = j - i;
            best_begin = i;
        }
        i = j;
    }
    if (best_len == 0) return std::nullopt;

    const std::size_t run_first = best_begin;
    const std::size_t run_last = best_begin + best_len - 1;

    LinkWindow w;
    w.t_start_s = samples[run_first].t_s;
    w.t_end_s = samples[run_last].t_s;
    w.start_constraint = run_first == 0 ? WindowConstraint::pass_edge : blocking(samples[run_first - 1]);
    w.end_constraint = run_last + 1 >= samples.size() ? WindowConstraint::pass_edge
                                                      : blocking(samples[run_last + 1]);

    if (w.duration_s() > c.max_duration_s) {
        // keep the max_duration_s stretch centered on the peak-elevation sample
        std::size_t peak = run_first;
        for (std::size_t k = run_first; k <= run_last; ++k)
            if (samples[k].elevation_deg > samples[peak].elevation_deg) peak = k;
        double t0 = samples[peak].t_s - 0.5 * c.max_duration_s;
        double t1 = t0 + c.max_duration_s;
        if (t0 < w.t_start_s) {
            t0 = w.t_start_s;
            t1 = t0 + c.max_duration_s;
        } else if (t1 > w.t_end_s) {
            t1 = w.t_end_s;
            t0 = t1 - c.max_duration_s;
        }
        w.t_start_s = t0;
        w.t_end_s = t1;
        w.start_constraint = WindowConstraint::duration;
        w.end_constraint = WindowConstraint::duration;
    }
    return w;
}

void write_pass_csv(const PassProfile& pass, std::ostream& os) {
    os << "t_s,elevation_deg,slant_range_km,nadir_angle_deg\n";
    char line[128];
    for (const auto& s : pass.samples) {
        std::snprintf(line, sizeof(line), "%.6f,%.9f,%.9f,%.9f\n", s.t_s, s.elevation_deg,
                      s.slant_range_km, s.nadir_angle_deg);
        os << line;
    }
}

PassProfile read_pass_csv(std::istream& is) {
    PassProfile pass;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t_s,", 0) != 0)
        throw std::runtime_error("pass csv: missing header");
    double max_el = 0.0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        PassSample s;
        std::istringstream ls(line);
        char comma;
        if (!(ls >> s.t_s >> comma >> s.elevation_deg >> comma >> s.slant_range_km >> comma >>
              s.nadir_angle_deg))
            throw std::runtime_error("pass csv: malformed row: " + line);
        max_el = std::max(max_el, s.elevation_deg);
        pass.samples.push_back(s);
    }
    if (pass.samples.size() >= 2)
        pass.sample_dt_s = pass.samples[1].t_s - pass.samples[0].t_s;
    pass.max_elevation_deg = max_el;
    return pass;
}

}  // namespace qlink
