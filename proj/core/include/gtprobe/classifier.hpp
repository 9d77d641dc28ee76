#pragma once

// Fiber classification on SU(3) Gelfand-Tsetlin polytopes.
//
// Only the probe verdicts are computed from first principles. The other
// "displaceable" verdicts rest on geometric facts the library cannot check
// symplectically (conjugation by permutation matrices, dimension counts for
// boundary fibers); each verdict carries a plain-language basis string so
// reports stay auditable.

#include "gtprobe/gt_polytope.hpp"
#include "gtprobe/probes.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtprobe {

/// One-line notation: position i is sent to image[i] (0-based), so applying
/// the permutation to x gives y with y[image[i]] = x[i].
struct Permutation {
    std::vector<std::size_t> image;

    bool is_even() const;
    RationalVector apply(const RationalVector& x) const;
    std::string cycle_notation() const; ///< 1-based, e.g. "(1 2 3)"
};

/// First even permutation (lexicographic one-line order) that moves x.
/// Returns nullopt iff x = 0. For n = 2 the only even permutation is the
/// identity, so the transposition is returned instead: i times its matrix has
/// determinant 1 and induces the same conjugation.
/// Throws std::invalid_argument if the entries do not sum to zero.
std::optional<Permutation> displacing_permutation(const RationalVector& x);

enum class FiberStatus {
    NotInPolytope,
    DisplacedByPermutation,
    DisplacedByProbe,
    BoundaryIsotropic,
    LagrangianSphereVertex,
    NotProbeDisplaceable,
};

enum class SphereStatus { DisplacedByPermutation, Candidate };

std::string to_string(FiberStatus status);
std::string to_string(SphereStatus status);

/// Literature-sourced fact attached as data; never computed here.
struct KnownNonDisplaceable {
    std::string source;
};

struct FiberVerdict {
    RationalVector point;
    FiberStatus status = FiberStatus::NotInPolytope;
    std::optional<Permutation> permutation;
    std::optional<ProbeWitness> witness;
    std::optional<ProbeCertificate> certificate;
    std::optional<SphereStatus> sphere;
    std::optional<KnownNonDisplaceable> annotation;
    std::string basis;
};

/// The interior W point whose fiber is known to be non-displaceable from
/// Floer theory: (a/2, -a/2, 0) for b < 0, ((a+b)/2, -(a+b)/2, 0) for b > 0,
/// none for the monotone orbit b = 0.
std::optional<RationalVector> known_non_displaceable_point(const OrbitSpec& orbit);

/// Decision cascade: outside P, the vertex (b,b,b), nonzero projection,
/// boundary, then probe search / certificate. Throws for n != 3.
FiberVerdict classify_gt_fiber(const OrbitSpec& orbit, const RationalVector& p);
FiberVerdict classify_gt_fiber(const OrbitSpec& orbit, const HPolytope& su3, const RationalVector& p);

/// The part of the cascade that works for any n: NotInPolytope or
/// DisplacedByPermutation, nullopt when the point lies on W.
std::optional<FiberVerdict> classify_by_permutation(const OrbitSpec& orbit, const HPolytope& gt,
                                                    const RationalVector& p);

/// x1 candidates on W that no displacement argument removes:
/// b > 0: (b, (a+b)/2],  b = 0: [0, a/2],  b < 0: (0, a/2].
struct CandidateRange {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = true;
    /// Part of the range lies outside P (only possible for b < 0).
    bool extends_outside_polytope = false;

    bool contains(const Rational& x1) const;
};

CandidateRange candidate_range(const OrbitSpec& orbit);

/// Open x1-interval on W covered by one of the four single-facet probe
/// families (F1 along -e1, F4 along e2, F3 along -e2, F2 along e1).
struct LemmaInterval {
    std::string lemma;
    Rational lo;
    Rational hi;
};

std::vector<LemmaInterval> lemma_intervals_on_w(const OrbitSpec& orbit);

struct SweepEntry {
    Rational x1;
    FiberVerdict verdict;
};

struct SweepReport {
    OrbitSpec orbit;
    unsigned denominator = 1;
    WSegment segment;
    std::vector<SweepEntry> entries;
    std::map<std::string, std::size_t> counts;
    std::vector<Rational> not_probe_displaceable;
    /// Maximal runs of consecutive grid entries with a non-displaceability
    /// certificate (NotProbeDisplaceable or a certified sphere-vertex candidate).
    std::vector<std::pair<Rational, Rational>> certified_runs;
    CandidateRange candidates;
    std::vector<LemmaInterval> lemma_intervals;
    std::vector<std::string> notes;
};

/// Classifies (x1, -x1, 0) for x1 = k/denominator in W and P, plus both
/// endpoints and the special points a/2 and (a+b)/2 when they lie in range.
SweepReport sweep_w_segment(const OrbitSpec& orbit, unsigned denominator);

} // namespace gtprobe
