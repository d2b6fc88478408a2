#include "rydnet/emission.hpp"

#include "rydnet/rng.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rydnet {

namespace {

using std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

double model_intensity(double theta, const CloudGeometry& g, PatternModel model) {
    const double s = std::sin(theta);
    double f = sinc(pi * g.length_over_lambda * s);
    if (model == PatternModel::sinc_with_transverse) {
        f *= transverse_disk_factor(2.0 * pi * g.radius_over_lambda * s);
    }
    return f * f;
}

// Composite Simpson over [a, b] with n nodes (rounded up to an odd count).
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (n < 3) n = 3;
    if (n % 2 == 0) ++n;
    const double h = (b - a) / (n - 1);
    double acc = f(a) + f(b);
    for (int i = 1; i < n - 1; ++i) {
        acc += f(a + h * i) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

struct Positions {
    std::vector<double> x, y, z;  // units of lambda
};

Positions sample_cylinder(const CloudGeometry& g, int n, std::uint64_t seed) {
    Positions p;
    p.x.resize(n);
    p.y.resize(n);
    p.z.resize(n);
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i) {
        // exact uniform disk via polar coordinates; fixed draw count keeps the
        // stream layout independent of geometry
        const double r = g.radius_over_lambda * std::sqrt(rng.next_double());
        const double phi = 2.0 * pi * rng.next_double();
        p.x[i] = r * std::cos(phi);
        p.y[i] = r * std::sin(phi);
        p.z[i] = g.length_over_lambda * (rng.next_double() - 0.5);
    }
    return p;
}

} // namespace

void CloudGeometry::validate() const {
    if (!(length_over_lambda > 0.0) || !(radius_over_lambda > 0.0)) {
        throw std::invalid_argument("CloudGeometry: length and radius must be > 0");
    }
}

void FiberAcceptance::validate() const {
    if (!(theta_max_rad > 0.0) || theta_max_rad > pi / 2.0 + 1e-15) {
        throw std::invalid_argument("FiberAcceptance: theta_max must be in (0, pi/2]");
    }
}

void EmissionParams::validate() const {
    if (n_atoms < 1) throw std::invalid_argument("EmissionParams: n_atoms must be >= 1");
    if (!(gamma0_hz > 0.0)) throw std::invalid_argument("EmissionParams: gamma0 must be > 0");
}

double array_factor_sinc(double theta_rad, double length_over_lambda) {
    return sinc(pi * length_over_lambda * std::sin(theta_rad));
}

double transverse_disk_factor(double q) {
    if (std::abs(q) < 1e-12) {
        return 1.0;
    }
    // area average of cos(q x) over the unit disk, (4/pi) int_0^1 sqrt(1-u^2) cos(qu) du,
    // with u = sin(t) so the endpoint square-root singularity drops out
    const double val = simpson(
        [q](double t) {
            const double c = std::cos(t);
            return c * c * std::cos(q * std::sin(t));
        },
        0.0, pi / 2.0, 513);
    return 4.0 / pi * val;
}

double array_factor_numeric(double theta_rad, const CloudGeometry& geometry,
                            int n_atoms_sampled, std::uint64_t seed,
                            MismatchConvention convention, int azimuth_samples) {
    geometry.validate();
    if (n_atoms_sampled < 100) {
        throw std::invalid_argument("array_factor_numeric: need >= 100 sampled atoms");
    }
    if (azimuth_samples < 1) {
        throw std::invalid_argument("array_factor_numeric: need >= 1 azimuth sample");
    }
    const Positions p = sample_cylinder(geometry, n_atoms_sampled, seed);
    const double k0 = 2.0 * pi;  // per lambda
    const double s = std::sin(theta_rad);
    const double axial = (convention == MismatchConvention::full_vector)
                             ? k0 * (std::cos(theta_rad) - 1.0)
                             : k0 * s;

    double intensity = 0.0;
    for (int a = 0; a < azimuth_samples; ++a) {
        const double phi = 2.0 * pi * a / azimuth_samples;
        const double kx = k0 * s * std::cos(phi);
        const double ky = k0 * s * std::sin(phi);
        std::complex<double> acc(0.0, 0.0);
        for (int i = 0; i < n_atoms_sampled; ++i) {
            const double phase = kx * p.x[i] + ky * p.y[i] + axial * p.z[i];
            acc += std::complex<double>(std::cos(phase), std::sin(phase));
        }
        acc /= static_cast<double>(n_atoms_sampled);
        intensity += std::norm(acc);
    }
    return intensity / azimuth_samples;
}

std::vector<double> array_factor_numeric_curve(
    const CloudGeometry& geometry, std::span<const double> theta_grid,
    int n_atoms_sampled, std::uint64_t seed,
    MismatchConvention convention, int azimuth_samples) {
    std::vector<double> out(theta_grid.size());
    const auto npts = static_cast<std::int64_t>(theta_grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < npts; ++i) {
        out[i] = array_factor_numeric(theta_grid[i], geometry, n_atoms_sampled,
                                      substream_seed(seed, static_cast<std::uint64_t>(i)),
                                      convention, azimuth_samples);
    }
    return out;
}

std::vector<double> array_factor_numeric_curve_serial(
    const CloudGeometry& geometry, std::span<const double> theta_grid,
    int n_atoms_sampled, std::uint64_t seed,
    MismatchConvention convention, int azimuth_samples) {
    std::vector<double> out(theta_grid.size());
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        out[i] = array_factor_numeric(theta_grid[i], geometry, n_atoms_sampled,
                                      substream_seed(seed, static_cast<std::uint64_t>(i)),
                                      convention, azimuth_samples);
    }
    return out;
}

double directional_efficiency(const CloudGeometry& geometry, const FiberAcceptance& acceptance,
                              int quadrature_points, PatternModel model) {
    geometry.validate();
    acceptance.validate();
    if (quadrature_points < 200) {
        throw std::invalid_argument("directional_efficiency: need >= 200 quadrature points");
    }
    const auto integrand = [&](double theta) {
        return model_intensity(theta, geometry, model) * std::sin(theta);
    };
    const auto ratio = [&](int n) {
        const double num = simpson(integrand, 0.0, acceptance.theta_max_rad, n);
        const double den = simpson(integrand, 0.0, pi / 2.0, n);
        return num / den;
    };
    const double coarse = ratio(quadrature_points);
    const double fine = ratio(2 * quadrature_points);
    if (std::abs(fine - coarse) > 1e-3) {
        throw std::runtime_error("directional_efficiency: quadrature did not converge");
    }
    return fine;
}

std::vector<std::pair<double, double>> emission_pattern_curve(
    const CloudGeometry& geometry, std::span<const double> theta_grid, PatternModel model) {
    geometry.validate();
    std::vector<std::pair<double, double>> out;
    out.reserve(theta_grid.size());
    const double peak = model_intensity(0.0, geometry, model);
    for (double theta : theta_grid) {
        out.emplace_back(theta, model_intensity(theta, geometry, model) / peak);
    }
    return out;
}

double collective_emission_time(const EmissionParams& params) {
    params.validate();
    return 1.0 / (params.n_atoms * params.gamma0_hz);
}

} // namespace rydnet
