#pragma once

// Named check suites for the three SU(3) sign cases.
//
// Each case runs the single-facet lemma suites on denominator-8 grids, a W
// sweep, the candidate-range and uniqueness checks, the non-smooth vertex
// check and an in-process re-validation of every emitted artifact.

#include "gtprobe/checker.hpp"
#include "gtprobe/classifier.hpp"
#include "gtprobe/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtprobe {

enum class ReproCase { BNeg, BPos, Monotone };

std::string to_string(ReproCase c);
/// Throws std::invalid_argument for anything but b-neg, b-pos, monotone.
ReproCase repro_case_from_string(const std::string& s);

/// (3,-1,-2), (3,1,-4), (2,0,-2).
OrbitSpec default_orbit(ReproCase c);

struct NamedCheck {
    std::string id;
    bool pass = false;
    std::string details;
};

/// Grid points of a lemma region with the outcome of both probe checks.
struct LemmaSuite {
    std::string lemma;
    std::size_t facet = 0;
    IntVector direction;
    std::vector<RationalVector> points;
    std::vector<ProbeWitness> search_witnesses;
    std::vector<ProbeWitness> named_witnesses;
    std::vector<std::string> failures;
};

/// Denominator-8 grid (or `denominator`) over the lemma's open region.
/// Throws std::invalid_argument for an unknown lemma or a lemma that does not
/// apply to the orbit's sign case.
LemmaSuite run_lemma_suite(const OrbitSpec& orbit, const std::string& lemma, unsigned denominator = 8);

/// Lemma names that apply to the orbit: fromf1, fromf4, plus fromf3 (b < 0)
/// or fromf2 (b > 0).
std::vector<std::string> applicable_lemmas(const OrbitSpec& orbit);

struct ReproductionOptions {
    ReproCase which = ReproCase::BNeg;
    std::optional<OrbitSpec> orbit_override;
    unsigned sweep_denominator = 32;
    unsigned lemma_denominator = 8;
};

struct ReproductionReport {
    ReproCase which = ReproCase::BNeg;
    OrbitSpec orbit;
    unsigned sweep_denominator = 32;
    unsigned lemma_denominator = 8;
    std::vector<NamedCheck> checks;
    SweepReport sweep;
    std::vector<LemmaSuite> lemmas;
    json witnesses = json::array();
    json certificates = json::array();

    bool passed() const;
    std::vector<std::string> failing_ids() const;
};

/// Throws std::invalid_argument when the override orbit is not SU(3) or its
/// middle eigenvalue has the wrong sign for the case.
ReproductionReport reproduce(const ReproductionOptions& options);

json reproduction_to_json(const ReproductionReport& r);

} // namespace gtprobe
