#include "gtprobe/classifier.hpp"

#include "gtprobe/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtprobe {

namespace {

constexpr const char* kBasisPermutation =
    "GT fiber lies inside a standard-torus fiber over a nonzero point; conjugation by the even "
    "permutation matrix moves that fiber off itself";
constexpr const char* kBasisBoundary =
    "fiber over a boundary point other than the non-smooth vertex is isotropic of dimension below half "
    "the orbit dimension";
constexpr const char* kBasisProbe = "probe displacement: the point lies strictly less than halfway along the witness probe";
constexpr const char* kBasisCertificate =
    "every facet's integral-direction feasibility region is lattice-free; no probe displaces this fiber";
constexpr const char* kBasisOutside = "point violates an interlacing inequality";
constexpr const char* kBasisSphereMoved =
    "Lagrangian 3-sphere over the non-smooth vertex; its standard-torus image is nonzero, so an even "
    "permutation displaces it";
constexpr const char* kBasisSphereCandidate =
    "Lagrangian 3-sphere over the non-smooth vertex at the origin (monotone orbit); no displacement argument "
    "applies, and probes cannot reach a boundary point";
constexpr const char* kKnownSource =
    "literature: non-displaceable by Floer theory (Nishinou-Nohara-Ueda potential function critical point); "
    "recorded, not computed";

bool is_zero(const RationalVector& x)
{
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.sign() == 0; });
}

void require_su3(const OrbitSpec& orbit)
{
    if (orbit.n() != 3) {
        throw std::invalid_argument("full classification is implemented for SU(3) only; "
                                    "use classify_by_permutation for general n");
    }
}

std::optional<std::pair<Rational, Rational>> intersect_open(const std::pair<Rational, Rational>& a,
                                                             const std::pair<Rational, Rational>& b)
{
    const Rational lo = std::max(a.first, b.first);
    const Rational hi = std::min(a.second, b.second);
    if (!(lo < hi)) return std::nullopt;
    return std::make_pair(lo, hi);
}

bool has_certificate(const FiberVerdict& v)
{
    return v.certificate.has_value();
}

} // namespace

bool Permutation::is_even() const
{
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] > image[j]) ++inversions;
        }
    }
    return inversions % 2 == 0;
}

RationalVector Permutation::apply(const RationalVector& x) const
{
    if (x.size() != image.size()) throw std::invalid_argument("permutation size mismatch");
    RationalVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[image[i]] = x[i];
    return y;
}

std::string Permutation::cycle_notation() const
{
    std::ostringstream os;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t start = 0; start < image.size(); ++start) {
        if (seen[start] || image[start] == start) continue;
        os << '(';
        std::size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            os << (first ? "" : " ") << i + 1;
            first = false;
            i = image[i];
        }
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

std::optional<Permutation> displacing_permutation(const RationalVector& x)
{
    Rational sum;
    for (const auto& v : x) sum += v;
    if (sum.sign() != 0) throw std::invalid_argument("standard-torus point must sum to zero");
    if (is_zero(x)) return std::nullopt;

    const std::size_t n = x.size();
    if (n == 2) return Permutation{{1, 0}};

    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    while (std::next_permutation(image.begin(), image.end())) {
        Permutation p{image};
        if (p.is_even() && !(p.apply(x) == x)) return p;
    }
    throw std::logic_error("no even permutation moves a nonzero zero-sum vector");
}

std::string to_string(FiberStatus status)
{
    switch (status) {
    case FiberStatus::NotInPolytope: return "NotInPolytope";
    case FiberStatus::DisplacedByPermutation: return "DisplacedByPermutation";
    case FiberStatus::DisplacedByProbe: return "DisplacedByProbe";
    case FiberStatus::BoundaryIsotropic: return "BoundaryIsotropic";
    case FiberStatus::LagrangianSphereVertex: return "LagrangianSphereVertex";
    case FiberStatus::NotProbeDisplaceable: return "NotProbeDisplaceable";
    }
    return "?";
}

std::string to_string(SphereStatus status)
{
    return status == SphereStatus::Candidate ? "candidate" : "displaced-by-permutation";
}

std::optional<RationalVector> known_non_displaceable_point(const OrbitSpec& orbit)
{
    require_su3(orbit);
    const Rational& a = orbit.a();
    const Rational& b = orbit.b();
    if (b.sign() < 0) return w_point(a / Rational(2));
    if (b.sign() > 0) return w_point((a + b) / Rational(2));
    return std::nullopt;
}

std::optional<FiberVerdict> classify_by_permutation(const OrbitSpec& orbit, const HPolytope& gt,
                                                    const RationalVector& p)
{
    FiberVerdict v;
    v.point = p;
    if (!contains(gt, p)) {
        v.status = FiberStatus::NotInPolytope;
        v.basis = kBasisOutside;
        return v;
    }
    const auto pr = projection_pr(orbit, p);
    if (is_zero(pr)) return std::nullopt;
    v.status = FiberStatus::DisplacedByPermutation;
    v.permutation = displacing_permutation(pr);
    v.basis = kBasisPermutation;
    return v;
}

FiberVerdict classify_gt_fiber(const OrbitSpec& orbit, const RationalVector& p)
{
    require_su3(orbit);
    return classify_gt_fiber(orbit, su3_polytope(orbit), p);
}

FiberVerdict classify_gt_fiber(const OrbitSpec& orbit, const HPolytope& su3, const RationalVector& p)
{
    require_su3(orbit);
    if (p.size() != 3) throw std::invalid_argument("SU(3) GT points have 3 coordinates");

    FiberVerdict v;
    v.point = p;
    if (!contains(su3, p)) {
        v.status = FiberStatus::NotInPolytope;
        v.basis = kBasisOutside;
        return v;
    }

    const Rational& b = orbit.b();
    const auto pr = projection_pr(orbit, p);
    if (p == RationalVector{b, b, b}) {
        v.status = FiberStatus::LagrangianSphereVertex;
        if (!is_zero(pr)) {
            v.sphere = SphereStatus::DisplacedByPermutation;
            v.permutation = displacing_permutation(pr);
            v.basis = kBasisSphereMoved;
        } else {
            v.sphere = SphereStatus::Candidate;
            v.certificate = certify_not_probe_displaceable(su3, p);
            v.basis = kBasisSphereCandidate;
        }
        return v;
    }

    if (!is_zero(pr)) {
        v.status = FiberStatus::DisplacedByPermutation;
        v.permutation = displacing_permutation(pr);
        v.basis = kBasisPermutation;
        return v;
    }

    if (!interior_contains(su3, p)) {
        v.status = FiberStatus::BoundaryIsotropic;
        v.basis = kBasisBoundary;
        return v;
    }

    if (auto witness = displacing_probe_search(su3, p)) {
        v.status = FiberStatus::DisplacedByProbe;
        v.witness = std::move(witness);
        v.basis = kBasisProbe;
    } else {
        v.status = FiberStatus::NotProbeDisplaceable;
        v.certificate = certify_not_probe_displaceable(su3, p);
        v.basis = kBasisCertificate;
    }
    if (const auto known = known_non_displaceable_point(orbit); known && *known == p) {
        v.annotation = KnownNonDisplaceable{kKnownSource};
    }
    return v;
}

bool CandidateRange::contains(const Rational& x1) const
{
    const bool above = lo_closed ? x1 >= lo : x1 > lo;
    const bool below = hi_closed ? x1 <= hi : x1 < hi;
    return above && below;
}

CandidateRange candidate_range(const OrbitSpec& orbit)
{
    require_su3(orbit);
    const Rational& a = orbit.a();
    const Rational& b = orbit.b();
    CandidateRange r;
    if (b.sign() > 0) {
        r = {b, (a + b) / Rational(2), false, true, false};
    } else if (b.sign() == 0) {
        r = {Rational(0), a / Rational(2), true, true, false};
    } else {
        r = {Rational(0), a / Rational(2), false, true, false};
    }
    if (const auto seg = w_set_segment(orbit)) {
        r.extends_outside_polytope = r.lo < seg->lo || r.hi > seg->hi;
    }
    return r;
}

std::vector<LemmaInterval> lemma_intervals_on_w(const OrbitSpec& orbit)
{
    require_su3(orbit);
    const Rational& a = orbit.a();
    const Rational& b = orbit.b();
    const Rational two(2);
    std::vector<LemmaInterval> out;
    const auto seg = w_set_segment(orbit);
    if (!seg || !seg->interior) return out;
    const auto interior = *seg->interior;

    auto push = [&](const char* name, const Rational& lo, const Rational& hi) {
        if (const auto r = intersect_open({lo, hi}, interior)) out.push_back({name, r->first, r->second});
    };
    // On W, x3 = 0 and x2 = -x1.
    if (b.sign() >= 0) push("fromf1", (a + b) / two, a);  // needs x3 <= b
    if (b.sign() <= 0) push("fromf4", a / two, a + b);    // needs x3 >= b
    if (b.sign() < 0) {
        if (const auto r = intersect_open({-b, a / two}, {Rational(0), a})) push("fromf3", r->first, r->second);
    }
    if (b.sign() > 0) push("fromf2", b, (a + b) / two);
    return out;
}

SweepReport sweep_w_segment(const OrbitSpec& orbit, unsigned denominator)
{
    require_su3(orbit);
    if (denominator == 0) throw std::invalid_argument("denominator must be positive");
    const auto seg = w_set_segment(orbit);
    if (!seg) throw std::logic_error("W does not meet the polytope");

    const Rational den{static_cast<long>(denominator)};
    std::vector<Rational> xs{seg->lo, seg->hi};
    const Integer first = (seg->lo * den).ceil();
    const Integer last = (seg->hi * den).floor();
    for (Integer k = first; k <= last; ++k) xs.push_back(Rational(k, Integer(static_cast<long>(denominator))));
    for (const Rational& special : {orbit.a() / Rational(2), (orbit.a() + orbit.b()) / Rational(2)}) {
        if (special >= seg->lo && special <= seg->hi) xs.push_back(special);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    const HPolytope su3 = su3_polytope(orbit);
    std::vector<FiberVerdict> verdicts(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { verdicts[i] = classify_gt_fiber(orbit, su3, w_point(xs[i])); });

    SweepReport report{orbit, denominator, *seg, {}, {}, {}, {}, candidate_range(orbit), lemma_intervals_on_w(orbit), {}};
    std::optional<std::pair<Rational, Rational>> run;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto& v = verdicts[i];
        ++report.counts[to_string(v.status)];
        if (v.status == FiberStatus::NotProbeDisplaceable) report.not_probe_displaceable.push_back(xs[i]);
        if (has_certificate(v)) {
            if (run) {
                run->second = xs[i];
            } else {
                run = std::make_pair(xs[i], xs[i]);
            }
        } else if (run) {
            report.certified_runs.push_back(*run);
            run.reset();
        }
        report.entries.push_back({xs[i], v});
    }
    if (run) report.certified_runs.push_back(*run);

    report.notes.push_back("grid points are exact rationals k/" + std::to_string(denominator) +
                           " plus the segment endpoints and the special points a/2, (a+b)/2; other points are "
                           "untested except where a lemma interval covers them");
    if (report.candidates.extends_outside_polytope) {
        report.notes.push_back("candidate range from the single-facet probe argument extends outside P; "
                               "intersected with W and P = [" + seg->lo.str() + ", " + seg->hi.str() + "]");
    }
    if (const auto known = known_non_displaceable_point(orbit)) {
        report.notes.push_back("annotation at x1 = " + (*known)[0].str() +
                               " is literature-sourced (Floer theory), not computed");
    }
    return report;
}

} // namespace gtprobe
