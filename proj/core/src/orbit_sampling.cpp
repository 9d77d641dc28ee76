#include "gtprobe/orbit_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace gtprobe {

Eigen::MatrixXcd random_special_unitary(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const std::complex<double> d = r(j, j);
        const double m = std::abs(d);
        if (m > 0) q.col(j) *= d / m;
    }
    const std::complex<double> det = q.determinant();
    const double phase = std::arg(det) / static_cast<double>(n);
    q *= std::polar(1.0, -phase);
    return q;
}

HermitianSample orbit_point_from_unitary(const OrbitSpec& orbit, const Eigen::MatrixXcd& unitary, std::uint64_t seed)
{
    const auto dim = static_cast<Eigen::Index>(orbit.n());
    if (unitary.rows() != dim || unitary.cols() != dim) throw std::invalid_argument("unitary has the wrong size");
    Eigen::VectorXcd diag(dim);
    for (Eigen::Index i = 0; i < dim; ++i) diag(i) = orbit[static_cast<std::size_t>(i)].to_double();
    Eigen::MatrixXcd a = unitary * diag.asDiagonal() * unitary.adjoint();
    Eigen::MatrixXcd herm = (a + a.adjoint()) * 0.5;
    return {std::move(herm), seed};
}

HermitianSample sample_orbit_point(const OrbitSpec& orbit, std::uint64_t seed)
{
    return orbit_point_from_unitary(orbit, random_special_unitary(orbit.n(), seed), seed);
}

std::vector<double> GTValues::coordinates() const
{
    std::vector<double> out;
    for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
        out.insert(out.end(), level->begin(), level->end());
    }
    return out;
}

GTValues gt_map_numeric(const HermitianSample& sample)
{
    const Eigen::Index n = sample.matrix.rows();
    GTValues out;
    for (Eigen::Index k = 1; k < n; ++k) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sample.matrix.topLeftCorner(k, k),
                                                               Eigen::EigenvaluesOnly);
        std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
        std::sort(ev.begin(), ev.end(), std::greater<>());
        out.levels.push_back(std::move(ev));
    }
    return out;
}

UnnormalizedGT unnormalized_gt(const HermitianSample& sample)
{
    if (sample.matrix.rows() != 3) throw std::invalid_argument("unnormalized GT functions need n = 3");
    const auto& m = sample.matrix;
    const double a11 = m(0, 0).real();
    const double a22 = m(1, 1).real();
    return {-(a11 + a22), a11 * a22 - std::norm(m(0, 1)), a11};
}

std::vector<double> projection_pr_numeric(const OrbitSpec& orbit, const GTValues& values)
{
    const std::size_t n = orbit.n();
    std::vector<double> out(n);
    double previous = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        double sum = 0;
        if (k == n) {
            for (const auto& l : orbit.lambda()) sum += l.to_double();
        } else {
            for (double v : values.levels[k - 1]) sum += v;
        }
        out[k - 1] = sum - previous;
        previous = sum;
    }
    return out;
}

std::pair<double, double> quadratic_roots(double b1, double b2)
{
    const double disc = std::max(0.0, b1 * b1 - 4 * b2);
    const double s = std::sqrt(disc);
    // Stable form: avoid cancelling b1 against s.
    const double q = -0.5 * (b1 + (b1 >= 0 ? s : -s));
    double r1 = q;
    double r2 = q != 0 ? b2 / q : 0.0;
    if (r1 < r2) std::swap(r1, r2);
    return {r1, r2};
}

SampleDiagnostics diagnose_sample(const OrbitSpec& orbit, const HPolytope& gt, const HermitianSample& sample)
{
    const auto& m = sample.matrix;
    const std::size_t n = orbit.n();
    SampleDiagnostics d;
    d.seed = sample.seed;
    d.hermitian_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
    d.trace_error = std::abs(m.trace());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(m, Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < n; ++i) {
        const double ev = full.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i));
        d.spectrum_error = std::max(d.spectrum_error, std::abs(ev - orbit[i].to_double()));
    }

    const GTValues values = gt_map_numeric(sample);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> upper;
        if (k + 1 == n) {
            for (const auto& l : orbit.lambda()) upper.push_back(l.to_double());
        } else {
            upper = values.levels[k];
        }
        const auto& lower = values.levels[k - 1];
        for (std::size_t j = 0; j < k; ++j) {
            d.interlacing_violation = std::max({d.interlacing_violation, lower[j] - upper[j], upper[j + 1] - lower[j]});
        }
    }

    const auto pr = projection_pr_numeric(orbit, values);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        d.pr_error = std::max(d.pr_error, std::abs(m(idx, idx).real() - pr[i]));
    }

    if (n == 3) {
        const auto b = unnormalized_gt(sample);
        const auto [r1, r2] = quadratic_roots(b.b1, b.b2);
        d.root_error = std::max({std::abs(r1 - values.levels[1][0]), std::abs(r2 - values.levels[1][1]),
                                 std::abs(b.b3 - values.levels[0][0])});
    }

    const auto coords = values.coordinates();
    for (const auto& h : gt.halfspaces()) {
        double s = -h.offset.to_double();
        for (std::size_t j = 0; j < coords.size(); ++j) s += h.normal[j].get_d() * coords[j];
        d.polytope_violation = std::max(d.polytope_violation, -s);
    }
    return d;
}

ValidationSummary validate_numeric(const OrbitSpec& orbit, std::size_t count, std::uint64_t seed)
{
    if (count == 0) throw std::invalid_argument("sample count must be at least 1");
    const HPolytope gt = build_gt_polytope(orbit);
    ValidationSummary summary;
    summary.rows.reserve(count);
    auto& w = summary.worst;
    for (std::size_t i = 0; i < count; ++i) {
        const auto row = diagnose_sample(orbit, gt, sample_orbit_point(orbit, seed + i));
        w.hermitian_error = std::max(w.hermitian_error, row.hermitian_error);
        w.trace_error = std::max(w.trace_error, row.trace_error);
        w.spectrum_error = std::max(w.spectrum_error, row.spectrum_error);
        w.interlacing_violation = std::max(w.interlacing_violation, row.interlacing_violation);
        w.pr_error = std::max(w.pr_error, row.pr_error);
        w.root_error = std::max(w.root_error, row.root_error);
        w.polytope_violation = std::max(w.polytope_violation, row.polytope_violation);
        summary.rows.push_back(row);
    }
    summary.passed = w.hermitian_error <= 1e-12 && w.trace_error <= kNumericTolerance &&
                     w.spectrum_error <= kRootTolerance && w.interlacing_violation <= kNumericTolerance &&
                     w.pr_error <= kNumericTolerance && w.root_error <= kRootTolerance &&
                     w.polytope_violation <= kNumericTolerance;
    return summary;
}

} // namespace gtprobe
