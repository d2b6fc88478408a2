#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rydnet {

/// Cigar-shaped uniform-density cloud. Lengths are in units of the photon
/// wavelength; only the ratios enter the angular pattern.
struct CloudGeometry {
    double length_over_lambda = 10.0;
    double radius_over_lambda = 1.0;

    enum class Profile { uniform_cylinder };
    Profile profile = Profile::uniform_cylinder;

    void validate() const;
};

struct FiberAcceptance {
    double theta_max_rad;

    void validate() const;  ///< requires 0 < theta_max <= pi/2
};

struct EmissionParams {
    int n_atoms = 1000;
    double gamma0_hz = 6e6;  ///< single-atom decay rate, linear frequency (1/s)

    void validate() const;
};

/// Axial array factor amplitude sinc(pi * (L/lambda) * sin(theta)), the
/// elongated-cloud limit of the phase-matched position sum.
double array_factor_sinc(double theta_rad, double length_over_lambda);

/// Uniform-disk transverse factor: area average of exp(i q x) over a unit
/// disk, evaluated by quadrature. Equals 2 J1(q)/q with q = k0 R sin(theta).
double transverse_disk_factor(double q);

/// Phase-mismatch convention for the Monte Carlo position sum.
///
/// full_vector uses dk = k - k0 with |k| = k0, whose component along the
/// cloud axis is k0(cos(theta) - 1). axial_projection applies the first-order
/// mismatch magnitude k0 sin(theta) along the axis and the in-plane direction,
/// which is the convention the sinc formula embodies; the two diverge already
/// on the main lobe and the difference is part of the reported output, not
/// something the sampler hides.
enum class MismatchConvention { full_vector, axial_projection };

/// Seeded Monte Carlo position sum |N^-1 sum_i exp(i dk . r_i)|^2 over
/// uniformly sampled cylinder positions, intensity averaged over k azimuth.
/// Deterministic for fixed (seed, n_atoms_sampled). Requires n >= 100.
double array_factor_numeric(double theta_rad, const CloudGeometry& geometry,
                            int n_atoms_sampled, std::uint64_t seed,
                            MismatchConvention convention = MismatchConvention::full_vector,
                            int azimuth_samples = 8);

/// Position-sum intensity over a theta grid; OpenMP-parallel across grid
/// points with per-point sub-seeds derived from (seed, index), so the result
/// is identical for any thread count.
std::vector<double> array_factor_numeric_curve(
    const CloudGeometry& geometry, std::span<const double> theta_grid,
    int n_atoms_sampled, std::uint64_t seed,
    MismatchConvention convention = MismatchConvention::full_vector,
    int azimuth_samples = 8);

/// Serial reference for array_factor_numeric_curve; bit-identical output.
std::vector<double> array_factor_numeric_curve_serial(
    const CloudGeometry& geometry, std::span<const double> theta_grid,
    int n_atoms_sampled, std::uint64_t seed,
    MismatchConvention convention = MismatchConvention::full_vector,
    int azimuth_samples = 8);

/// Angular intensity model used for the analytic pattern and efficiency.
///
/// sinc_axial is the printed elongated-cloud formula (radius-independent).
/// sinc_with_transverse multiplies the uniform-disk factor so the transverse
/// radius matters; it narrows the large-angle weight and therefore raises
/// directional efficiencies relative to sinc_axial.
enum class PatternModel { sinc_axial, sinc_with_transverse };

/// Fraction of emitted intensity inside the acceptance cone:
/// integral_0^theta_max |F|^2 sin(theta) / integral_0^(pi/2) |F|^2 sin(theta),
/// composite-Simpson quadrature with `quadrature_points` >= 200 nodes per
/// integral. Throws if doubling the node count moves the result by > 1e-3.
double directional_efficiency(const CloudGeometry& geometry, const FiberAcceptance& acceptance,
                              int quadrature_points,
                              PatternModel model = PatternModel::sinc_axial);

/// Tabulates |F(theta)|^2 on the given grid, normalized to 1 at theta = 0.
std::vector<std::pair<double, double>> emission_pattern_curve(
    const CloudGeometry& geometry, std::span<const double> theta_grid,
    PatternModel model = PatternModel::sinc_axial);

/// 1 / (N * Gamma0): collective emission time in seconds.
double collective_emission_time(const EmissionParams& params);

} // namespace rydnet
