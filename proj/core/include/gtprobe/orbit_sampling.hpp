#pragma once

// Floating-point cross-validation of the GT map on sampled orbit matrices.
// This is the only part of gtprobe that uses doubles.

#include "gtprobe/gt_polytope.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace gtprobe {

inline constexpr double kNumericTolerance = 1e-9;
inline constexpr double kRootTolerance = 1e-8;

struct HermitianSample {
    Eigen::MatrixXcd matrix;
    std::uint64_t seed = 0;
};

/// Haar-distributed special unitary from a seeded complex Gaussian matrix:
/// QR, fix the phases of R's diagonal, then rescale so det = 1.
Eigen::MatrixXcd random_special_unitary(std::size_t n, std::uint64_t seed);

/// U diag(lambda) U^*, symmetrized.
HermitianSample orbit_point_from_unitary(const OrbitSpec& orbit, const Eigen::MatrixXcd& unitary,
                                         std::uint64_t seed = 0);

HermitianSample sample_orbit_point(const OrbitSpec& orbit, std::uint64_t seed);

/// levels[k-1] holds the eigenvalues of the leading k x k minor, descending.
struct GTValues {
    std::vector<std::vector<double>> levels;

    /// Flattened in GT coordinate order (level n-1 first).
    std::vector<double> coordinates() const;
};

GTValues gt_map_numeric(const HermitianSample& sample);

/// b3 = a11; t^2 + b1 t + b2 is the characteristic polynomial of the
/// leading 2x2 minor, computed from its entries.
struct UnnormalizedGT {
    double b1 = 0;
    double b2 = 0;
    double b3 = 0;
};

UnnormalizedGT unnormalized_gt(const HermitianSample& sample);

std::vector<double> projection_pr_numeric(const OrbitSpec& orbit, const GTValues& values);

/// Descending roots of t^2 + b1 t + b2.
std::pair<double, double> quadratic_roots(double b1, double b2);

struct SampleDiagnostics {
    std::uint64_t seed = 0;
    double hermitian_error = 0;
    double trace_error = 0;
    double spectrum_error = 0;
    double interlacing_violation = 0;
    double pr_error = 0;         ///< max |diag(A) - pr(Lambda(A))|
    double root_error = 0;       ///< b-function reconstruction (n = 3 only)
    double polytope_violation = 0;
};

SampleDiagnostics diagnose_sample(const OrbitSpec& orbit, const HPolytope& gt, const HermitianSample& sample);

struct ValidationSummary {
    std::vector<SampleDiagnostics> rows;
    SampleDiagnostics worst;
    bool passed = false;
};

/// Samples seeds seed, seed+1, ..., seed+count-1.
ValidationSummary validate_numeric(const OrbitSpec& orbit, std::size_t count, std::uint64_t seed);

} // namespace gtprobe
