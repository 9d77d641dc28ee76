#include "gtprobe/reproduce.hpp"

#include "gtprobe/parallel.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace gtprobe {

namespace {

using Predicate = std::function<bool(const RationalVector&)>;

struct LemmaSpec {
    std::size_t facet;
    IntVector direction;
    Predicate region;
    std::function<RationalVector(const RationalVector&)> base;
    bool planar; // region lies in x3 = 0
};

LemmaSpec lemma_spec(const OrbitSpec& orbit, const HPolytope& p, const std::string& lemma)
{
    const Rational a = orbit.a();
    const Rational b = orbit.b();
    const Rational two(2);
    auto interior = [p](const RationalVector& x) { return interior_contains(p, x); };

    if (lemma == "fromf1") {
        return {0, IntVector{-1, 0, 0},
                [=](const RationalVector& x) { return interior(x) && x[2] <= b && x[0] > (a + b) / two && x[0] < a; },
                [=](const RationalVector& x) { return RationalVector{a, x[1], x[2]}; }, false};
    }
    if (lemma == "fromf4") {
        return {3, IntVector{0, 1, 0},
                [=](const RationalVector& x) { return interior(x) && x[2] >= b && x[1] > -a - b && x[1] < -a / two; },
                [=](const RationalVector& x) { return RationalVector{x[0], -a - b, x[2]}; }, false};
    }
    if (lemma == "fromf3") {
        if (b.sign() >= 0) throw std::invalid_argument("fromf3 applies only when b < 0");
        return {2, IntVector{0, -1, 0},
                [=](const RationalVector& x) {
                    return x[2].sign() == 0 && x[0].sign() > 0 && x[0] < a && x[1] > -a / two && x[1] < b;
                },
                [=](const RationalVector& x) { return RationalVector{x[0], b, Rational(0)}; }, true};
    }
    if (lemma == "fromf2") {
        if (b.sign() <= 0) throw std::invalid_argument("fromf2 applies only when b > 0");
        return {1, IntVector{1, 0, 0},
                [=](const RationalVector& x) {
                    return x[2].sign() == 0 && x[0] > b && x[0] < (a + b) / two && x[1] > -a - b && x[1].sign() < 0;
                },
                [=](const RationalVector& x) { return RationalVector{b, x[1], Rational(0)}; }, true};
    }
    throw std::invalid_argument("unknown lemma '" + lemma + "'");
}

// Points with coordinates in (1/den)Z inside the box, lexicographic.
std::vector<RationalVector> grid_in_box(const std::vector<std::pair<Rational, Rational>>& box, unsigned den)
{
    const Integer d(static_cast<long>(den));
    const Rational rd(d);
    std::vector<std::pair<Integer, Integer>> ranges;
    for (const auto& [lo, hi] : box) {
        ranges.emplace_back((lo * rd).ceil(), (hi * rd).floor());
        if (ranges.back().second < ranges.back().first) return {};
    }
    std::vector<RationalVector> out;
    std::vector<Integer> k;
    for (const auto& r : ranges) k.push_back(r.first);
    while (true) {
        std::vector<Rational> x;
        for (const auto& ki : k) x.emplace_back(ki, d);
        out.emplace_back(std::move(x));
        std::size_t i = k.size();
        while (i > 0) {
            --i;
            if (k[i] < ranges[i].second) {
                ++k[i];
                for (std::size_t j = i + 1; j < k.size(); ++j) k[j] = ranges[j].first;
                break;
            }
            if (i == 0) return out;
        }
    }
}

bool in_lemma_interval(const std::vector<LemmaInterval>& intervals, const Rational& x1)
{
    for (const auto& li : intervals) {
        if (x1 > li.lo && x1 < li.hi) return true;
    }
    return false;
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 5)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) os << (i ? "; " : "") << items[i];
    if (items.size() > limit) os << "; ... (" << items.size() << " total)";
    return os.str();
}

bool certified(const FiberVerdict& v)
{
    return v.certificate.has_value() && !v.witness.has_value();
}

bool in_f5_family(const IntVector& alpha)
{
    // (1, k, 0) or (0, k, -1)
    return (alpha[0] == 1 && alpha[2] == 0) || (alpha[0] == 0 && alpha[2] == -1);
}

} // namespace

std::string to_string(ReproCase c)
{
    switch (c) {
    case ReproCase::BNeg: return "b-neg";
    case ReproCase::BPos: return "b-pos";
    case ReproCase::Monotone: return "monotone";
    }
    return "?";
}

ReproCase repro_case_from_string(const std::string& s)
{
    if (s == "b-neg") return ReproCase::BNeg;
    if (s == "b-pos") return ReproCase::BPos;
    if (s == "monotone") return ReproCase::Monotone;
    throw std::invalid_argument("unknown case '" + s + "' (expected b-neg, b-pos or monotone)");
}

OrbitSpec default_orbit(ReproCase c)
{
    switch (c) {
    case ReproCase::BNeg: return OrbitSpec({Rational(3), Rational(-1), Rational(-2)});
    case ReproCase::BPos: return OrbitSpec({Rational(3), Rational(1), Rational(-4)});
    case ReproCase::Monotone: return OrbitSpec({Rational(2), Rational(0), Rational(-2)});
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> applicable_lemmas(const OrbitSpec& orbit)
{
    std::vector<std::string> out{"fromf1", "fromf4"};
    if (orbit.b().sign() < 0) out.push_back("fromf3");
    if (orbit.b().sign() > 0) out.push_back("fromf2");
    return out;
}

LemmaSuite run_lemma_suite(const OrbitSpec& orbit, const std::string& lemma, unsigned denominator)
{
    if (orbit.n() != 3) throw std::invalid_argument("lemma suites need an SU(3) orbit");
    if (denominator == 0) throw std::invalid_argument("denominator must be positive");
    const HPolytope p = su3_polytope(orbit);
    const LemmaSpec spec = lemma_spec(orbit, p, lemma);

    const Rational a = orbit.a();
    const Rational b = orbit.b();
    std::vector<std::pair<Rational, Rational>> box{{b, a}, {-a - b, b}, {-a - b, a}};
    if (spec.planar) box[2] = {Rational(0), Rational(0)};

    LemmaSuite suite;
    suite.lemma = lemma;
    suite.facet = spec.facet;
    suite.direction = spec.direction;
    for (auto& x : grid_in_box(box, denominator)) {
        if (spec.region(x)) suite.points.push_back(std::move(x));
    }

    const std::size_t count = suite.points.size();
    std::vector<std::optional<ProbeWitness>> found(count);
    std::vector<std::optional<ProbeWitness>> named(count);
    std::vector<std::string> errors(count);
    parallel_for(count, [&](std::size_t i) {
        const RationalVector& u = suite.points[i];
        found[i] = displacing_probe_search(p, u);
        if (!found[i]) errors[i] = "no displacing probe at " + u.str();
        try {
            const RationalVector w = spec.base(u);
            const Probe probe = probe_from(p, spec.facet, w, spec.direction);
            const auto t = ray_parameter(probe, u);
            if (t && probe_displaces(probe, u)) {
                named[i] = ProbeWitness{probe, u, *t};
            } else if (errors[i].empty()) {
                errors[i] = "named probe does not displace " + u.str();
            }
        } catch (const ProbeError& e) {
            if (errors[i].empty()) errors[i] = "named probe invalid at " + u.str() + ": " + e.what();
        }
    });
    for (std::size_t i = 0; i < count; ++i) {
        if (found[i]) suite.search_witnesses.push_back(*found[i]);
        if (named[i]) suite.named_witnesses.push_back(*named[i]);
        if (!errors[i].empty()) suite.failures.push_back(errors[i]);
    }
    if (count == 0) suite.failures.push_back("region grid is empty");
    return suite;
}

bool ReproductionReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::vector<std::string> ReproductionReport::failing_ids() const
{
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.pass) out.push_back(c.id);
    }
    return out;
}

ReproductionReport reproduce(const ReproductionOptions& options)
{
    const OrbitSpec orbit = options.orbit_override.value_or(default_orbit(options.which));
    if (orbit.n() != 3) throw std::invalid_argument("reproduction needs an SU(3) orbit (three eigenvalues)");
    const int sign = orbit.b().sign();
    const int expected = options.which == ReproCase::BNeg ? -1 : options.which == ReproCase::BPos ? 1 : 0;
    if (sign != expected) {
        throw std::invalid_argument("orbit " + orbit.str() + " has the wrong middle-eigenvalue sign for case " +
                                    to_string(options.which));
    }

    const HPolytope p = su3_polytope(orbit);
    const auto src = PolytopeSource::of_orbit(orbit);
    ReproductionReport r{options.which,
                         orbit,
                         options.sweep_denominator,
                         options.lemma_denominator,
                         {},
                         sweep_w_segment(orbit, options.sweep_denominator),
                         {},
                         json::array(),
                         json::array()};
    const Rational a = orbit.a();
    const Rational b = orbit.b();
    const Rational two(2);

    // Lemma suites.
    for (const auto& lemma : applicable_lemmas(orbit)) {
        LemmaSuite suite = run_lemma_suite(orbit, lemma, options.lemma_denominator);
        std::ostringstream details;
        details << suite.points.size() << " grid points at denominator " << options.lemma_denominator << "; probe from "
                << facet_name(suite.facet) << " along " << suite.direction.str() << "; " << suite.search_witnesses.size()
                << " searched and " << suite.named_witnesses.size() << " named witnesses";
        if (!suite.failures.empty()) details << "; failures: " << join(suite.failures);
        r.checks.push_back({"lemma-" + lemma, suite.failures.empty(), details.str()});
        for (const auto& w : suite.search_witnesses) r.witnesses.push_back(witness_to_json(w, src));
        for (const auto& w : suite.named_witnesses) r.witnesses.push_back(witness_to_json(w, src));
        r.lemmas.push_back(std::move(suite));
    }

    // Sweep artifacts.
    const auto& sweep = r.sweep;
    for (const auto& e : sweep.entries) {
        if (e.verdict.witness) r.witnesses.push_back(witness_to_json(*e.verdict.witness, src));
        if (e.verdict.certificate) r.certificates.push_back(certificate_to_json(*e.verdict.certificate, src));
    }

    // Corollary: certified points lie in the candidate range, interior points
    // outside it are displaced, lemma intervals are displaced.
    {
        std::vector<std::string> bad;
        for (const auto& e : sweep.entries) {
            const bool interior = sweep.segment.interior && e.x1 > sweep.segment.interior->first &&
                                  e.x1 < sweep.segment.interior->second;
            if (certified(e.verdict) && !sweep.candidates.contains(e.x1)) {
                bad.push_back("certified x1 = " + e.x1.str() + " outside the candidate range");
            }
            if (interior && !sweep.candidates.contains(e.x1) && e.verdict.status != FiberStatus::DisplacedByProbe) {
                bad.push_back("x1 = " + e.x1.str() + " outside the candidate range is not displaced by a probe");
            }
            if (in_lemma_interval(sweep.lemma_intervals, e.x1) && e.verdict.status != FiberStatus::DisplacedByProbe) {
                bad.push_back("x1 = " + e.x1.str() + " in a lemma interval is not displaced by a probe");
            }
        }
        const auto& c = sweep.candidates;
        std::string details = std::string("candidate range ") + (c.lo_closed ? "[" : "(") + c.lo.str() + ", " +
                              c.hi.str() + (c.hi_closed ? "]" : ")");
        if (c.extends_outside_polytope) {
            details += "; the range extends outside P and is intersected with W ∩ P = [" + sweep.segment.lo.str() +
                       ", " + sweep.segment.hi.str() + "]";
        }
        if (!bad.empty()) details += "; " + join(bad);
        r.checks.push_back({"corollary-candidates", bad.empty(), details});
    }

    if (sign != 0) {
        const Rational special = sign < 0 ? a / two : (a + b) / two;
        std::vector<std::string> bad;
        if (sweep.not_probe_displaceable != std::vector<Rational>{special}) {
            std::vector<std::string> got;
            for (const auto& x : sweep.not_probe_displaceable) got.push_back(x.str());
            bad.push_back("not-probe-displaceable set is {" + join(got, 20) + "}, expected {" + special.str() + "}");
        }
        for (const auto& e : sweep.entries) {
            const auto& v = e.verdict;
            const bool endpoint = e.x1 == sweep.segment.lo || e.x1 == sweep.segment.hi;
            if (e.x1 == special) {
                if (!v.certificate) bad.push_back("no certificate at x1 = " + special.str());
                if (!v.annotation) bad.push_back("missing literature annotation at x1 = " + special.str());
            } else if (endpoint) {
                if (v.status != FiberStatus::BoundaryIsotropic) bad.push_back("endpoint x1 = " + e.x1.str() + " is " + to_string(v.status));
            } else if (!(v.status == FiberStatus::DisplacedByProbe && v.witness) &&
                       !(v.status == FiberStatus::DisplacedByPermutation && v.permutation)) {
                bad.push_back("x1 = " + e.x1.str() + " has no witness (" + to_string(v.status) + ")");
            }
        }
        std::ostringstream details;
        details << sweep.entries.size() << " points on W ∩ P = [" << sweep.segment.lo.str() << ", "
                << sweep.segment.hi.str() << "]; unique certified point x1 = " << special.str();
        if (!bad.empty()) details << "; " << join(bad);
        r.checks.push_back({"unique-candidate-on-grid", bad.empty(), details.str()});
    } else {
        const Rational half = a / two;
        std::vector<std::string> bad;
        std::size_t in_n = 0;
        std::size_t beyond = 0;
        bool saw_zero = false;
        bool saw_half = false;
        for (const auto& e : sweep.entries) {
            const auto& v = e.verdict;
            if (e.x1 <= half) {
                ++in_n;
                saw_zero = saw_zero || e.x1.sign() == 0;
                saw_half = saw_half || e.x1 == half;
                if (!certified(v)) bad.push_back("x1 = " + e.x1.str() + " in N lacks a certificate");
                if (e.x1.sign() == 0 && !(v.status == FiberStatus::LagrangianSphereVertex &&
                                          v.sphere == SphereStatus::Candidate)) {
                    bad.push_back("x1 = 0 is not a sphere-vertex candidate");
                }
                if (e.x1.sign() > 0 && v.status != FiberStatus::NotProbeDisplaceable) {
                    bad.push_back("x1 = " + e.x1.str() + " is " + to_string(v.status));
                }
            } else if (e.x1 < sweep.segment.hi) {
                ++beyond;
                if (!(v.status == FiberStatus::DisplacedByProbe && v.witness)) {
                    bad.push_back("x1 = " + e.x1.str() + " beyond a/2 has no probe witness");
                }
            } else if (v.status != FiberStatus::BoundaryIsotropic) {
                bad.push_back("endpoint x1 = " + e.x1.str() + " is " + to_string(v.status));
            }
        }
        if (!saw_zero || !saw_half) bad.push_back("endpoints 0 and a/2 of N not both on the grid");
        std::ostringstream details;
        details << in_n << " grid points in N = [0, " << half.str() << "] certified, " << beyond
                << " points in (" << half.str() << ", " << sweep.segment.hi.str() << ") with probe witnesses";
        if (!bad.empty()) details << "; " << join(bad);
        r.checks.push_back({"monotone-segment-N", bad.empty(), details.str()});
    }

    // The vertex (b, b, b).
    {
        const RationalVector vertex{b, b, b};
        const FiberVerdict v = classify_gt_fiber(orbit, p, vertex);
        std::string bad;
        if (v.status != FiberStatus::LagrangianSphereVertex) {
            bad = "status " + to_string(v.status);
        } else if (sign == 0) {
            if (v.sphere != SphereStatus::Candidate || v.witness || !v.certificate) bad = "expected a certified candidate";
        } else {
            const auto pr = projection_pr(orbit, vertex);
            if (v.sphere != SphereStatus::DisplacedByPermutation || !v.permutation || v.permutation->apply(pr) == pr) {
                bad = "expected displacement by a permutation";
            }
        }
        std::string details = "(b,b,b) = " + vertex.str() + ": " + to_string(v.status) +
                              (v.sphere ? "/" + to_string(*v.sphere) : std::string());
        if (!bad.empty()) details += "; " + bad;
        r.checks.push_back({"sphere-vertex", bad.empty(), details});
    }

    {
        const auto singular = non_smooth_vertices(p);
        const bool ok = singular == std::vector<RationalVector>{RationalVector{b, b, b}};
        std::vector<std::string> listed;
        for (const auto& v : singular) listed.push_back(v.str());
        r.checks.push_back({"non-smooth-vertex", ok,
                            std::to_string(p.vertices().size()) + " vertices; non-smooth: {" + join(listed, 20) + "}"});
    }

    // Paper-style F5 directions are (1,k,0) and (0,k,-1); the pairing-1
    // criterion admits more. Informational.
    {
        std::size_t from_f5 = 0;
        std::size_t outside = 0;
        auto tally = [&](const ProbeWitness& w) {
            if (w.probe.facet != 4) return;
            ++from_f5;
            if (!in_f5_family(w.probe.direction)) ++outside;
        };
        for (const auto& e : sweep.entries) {
            if (e.verdict.witness) tally(*e.verdict.witness);
        }
        for (const auto& s : r.lemmas) {
            for (const auto& w : s.search_witnesses) tally(w);
        }
        r.checks.push_back({"f5-direction-family", true,
                            std::to_string(from_f5) + " witnesses from F5, " + std::to_string(outside) +
                                " outside the (1,k,0) / (0,k,-1) families; certified points stay certified under "
                                "the general pairing-1 criterion"});
    }

    {
        CheckOutcome w;
        for (const auto& j : r.witnesses) w.merge(check_witness_json(j));
        r.checks.push_back({"witnesses-revalidate", w.errors.empty(),
                            std::to_string(w.witnesses) + " witnesses" +
                                (w.errors.empty() ? std::string() : "; " + join(w.errors))});
        CheckOutcome c;
        for (const auto& j : r.certificates) c.merge(check_certificate_json(j));
        r.checks.push_back({"certificates-revalidate", c.errors.empty() && c.certificates > 0,
                            std::to_string(c.certificates) + " certificates" +
                                (c.errors.empty() ? std::string() : "; " + join(c.errors))});
    }
    return r;
}

json reproduction_to_json(const ReproductionReport& r)
{
    json j;
    j["kind"] = "reproduction-report";
    j["case"] = to_string(r.which);
    j["lambda"] = to_json(r.orbit);
    j["sweep_denominator"] = r.sweep_denominator;
    j["lemma_denominator"] = r.lemma_denominator;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"pass", c.pass}, {"details", c.details}});
    j["checks"] = checks;
    j["summary"] = {{"passed", r.passed()}, {"failing", r.failing_ids()}, {"checks", r.checks.size()}};

    json sweep = sweep_to_json(r.sweep, true);
    json compact = json::array();
    for (const auto& v : sweep.at("verdicts")) {
        json e{{"x1", v.at("x1")}, {"status", v.at("status")}};
        if (v.contains("sphere")) e["sphere"] = v.at("sphere");
        if (v.contains("witness")) e["facet"] = v.at("witness").at("facet");
        compact.push_back(std::move(e));
    }
    sweep["verdicts"] = compact;
    j["sweep"] = sweep;

    json lemmas = json::array();
    for (const auto& s : r.lemmas) {
        lemmas.push_back({{"lemma", s.lemma},
                          {"facet", facet_name(s.facet)},
                          {"direction", to_json(s.direction)},
                          {"points", s.points.size()},
                          {"failures", s.failures}});
    }
    j["lemmas"] = lemmas;
    j["artifacts"] = {{"witnesses", r.witnesses}, {"certificates", r.certificates}};
    return j;
}

} // namespace gtprobe
