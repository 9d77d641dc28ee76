// gt: command-line front end for gtprobe.
//
// Exit codes: 0 success, 1 check or tolerance failure, 2 input error.

#include "gtprobe/checker.hpp"
#include "gtprobe/classifier.hpp"
#include "gtprobe/json_io.hpp"
#include "gtprobe/orbit_sampling.hpp"
#include "gtprobe/reproduce.hpp"
#include "gtprobe/slice.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gtprobe;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OrbitSpec read_orbit(const std::string& lambda, const std::string& orbit_file)
{
    if (!lambda.empty() && !orbit_file.empty()) throw InputError("give either --lambda or --orbit, not both");
    if (!orbit_file.empty()) {
        std::ifstream in(orbit_file);
        if (!in) throw InputError("cannot read " + orbit_file);
        return orbit_from_json(json::parse(in));
    }
    if (lambda.empty()) throw InputError("an orbit is required (--lambda or --orbit)");
    return OrbitSpec(parse_rational_list(lambda).entries());
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

std::string polytope_text(const HPolytope& p, bool vertices)
{
    std::ostringstream os;
    os << "dim " << p.dim() << ", " << p.size() << " facets\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& h = p.halfspace(i);
        os << "  " << facet_name(i) << ": <" << h.normal.str() << ", x> >= " << h.offset.str() << "\n";
    }
    if (vertices) {
        os << p.vertices().size() << " vertices\n";
        for (const auto& v : p.vertices()) os << "  " << v.str() << (is_smooth_vertex(p, v) ? "" : "  non-smooth") << "\n";
    }
    return os.str();
}

std::string verdict_text(const FiberVerdict& v)
{
    std::ostringstream os;
    os << v.point.str() << ": " << to_string(v.status);
    if (v.sphere) os << " / " << to_string(*v.sphere);
    os << "\n";
    if (v.permutation) os << "  permutation " << v.permutation->cycle_notation() << "\n";
    if (v.witness) {
        const auto& p = v.witness->probe;
        os << "  probe from " << facet_name(p.facet) << " at " << p.base.str() << " along " << p.direction.str()
           << ", t_exit " << p.t_exit.str() << ", t_u " << v.witness->t_u.str() << "\n";
    }
    if (v.certificate) os << "  certificate: no displacing probe from any of " << v.certificate->facets.size() << " facets\n";
    if (v.annotation) os << "  known non-displaceable (" << v.annotation->source << ")\n";
    os << "  basis: " << v.basis << "\n";
    return os.str();
}

std::string sweep_text(const SweepReport& r)
{
    std::ostringstream os;
    os << "lambda " << r.orbit.str() << ", W ∩ P = [" << r.segment.lo.str() << ", " << r.segment.hi.str()
       << "], denominator " << r.denominator << "\n";
    for (const auto& e : r.entries) {
        os << "  " << std::setw(8) << e.x1.str() << "  " << to_string(e.verdict.status);
        if (e.verdict.sphere) os << "/" << to_string(*e.verdict.sphere);
        if (e.verdict.witness) os << "  " << facet_name(e.verdict.witness->probe.facet) << " "
                                  << e.verdict.witness->probe.direction.str();
        if (e.verdict.annotation) os << "  [known]";
        os << "\n";
    }
    for (const auto& [status, count] : r.counts) os << status << ": " << count << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string slice_json(const SliceResult& s)
{
    auto poly = [](const std::vector<Point2>& pts) {
        json a = json::array();
        for (const auto& [x, y] : pts) a.push_back({to_json(x), to_json(y)});
        return a;
    };
    json j;
    j["kind"] = "slice";
    j["lambda"] = to_json(s.orbit);
    j["x3"] = to_json(s.x3);
    j["polygon"] = poly(s.polygon);
    if (s.w_trace) {
        j["w_trace"] = poly({s.w_trace->first, s.w_trace->second});
    } else {
        j["w_trace"] = nullptr;
    }
    json overlays = json::array();
    for (const auto& o : s.overlays) overlays.push_back({{"name", o.name}, {"polygon", poly(o.polygon)}});
    j["overlays"] = overlays;
    j["warnings"] = s.warnings;
    return dump(j);
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Displaceability of Gelfand-Tsetlin fibers via probes"};
    app.require_subcommand(1);

    std::string lambda;
    std::string orbit_file;
    std::string out_path;
    std::string format = "json";

    auto add_orbit = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "eigenvalues, e.g. 3,-1,-2 or 3/2,0,-3/2");
        cmd->add_option("--orbit", orbit_file, "JSON file: [..] or {\"lambda\": [..]}");
    };

    auto* polytope = app.add_subcommand("polytope", "H-representation of the GT polytope");
    add_orbit(polytope);
    bool with_vertices = false;
    polytope->add_flag("--vertices", with_vertices, "include the vertex list");
    polytope->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    polytope->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "classify one SU(3) GT point");
    add_orbit(classify);
    std::string point_text;
    std::string artifact_path;
    classify->add_option("--point", point_text, "x1,x2,x3 as rationals")->required();
    classify->add_option("--certificate", artifact_path, "write the witness or certificate JSON here");
    classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* sweep = app.add_subcommand("sweep", "classify the W segment on a rational grid");
    add_orbit(sweep);
    unsigned denominator = 32;
    bool emit_intervals = false;
    sweep->add_option("--denominator", denominator)->check(CLI::PositiveNumber);
    sweep->add_flag("--emit-intervals", emit_intervals, "add the exact lemma intervals on W");
    sweep->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    sweep->add_option("--out", out_path);

    auto* repro = app.add_subcommand("reproduce", "run the named check suite for a sign case");
    std::string case_name;
    unsigned lemma_denominator = 8;
    repro->add_option("--case", case_name)->required()->check(CLI::IsMember({"b-neg", "b-pos", "monotone"}));
    add_orbit(repro);
    repro->add_option("--denominator", denominator, "sweep grid denominator")->check(CLI::PositiveNumber);
    repro->add_option("--lemma-denominator", lemma_denominator)->check(CLI::PositiveNumber);
    repro->add_option("--out", out_path);

    auto* numeric = app.add_subcommand("validate-numeric", "sample orbit matrices and check the GT identities");
    add_orbit(numeric);
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    numeric->add_option("--samples", samples)->check(CLI::PositiveNumber);
    numeric->add_option("--seed", seed);
    numeric->add_option("--out", out_path, "per-sample CSV");

    auto* slice = app.add_subcommand("slice", "planar slice of the SU(3) GT polytope at fixed x3");
    add_orbit(slice);
    std::string x3_text = "0";
    slice->add_option("--x3", x3_text);
    slice->add_option("--out", out_path);

    auto* check = app.add_subcommand("check-certificate", "re-validate witness, certificate or report files");
    std::vector<std::string> files;
    check->add_option("files", files)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*polytope) {
            const OrbitSpec orbit = read_orbit(lambda, orbit_file);
            const HPolytope p = resolve_polytope(orbit);
            if (format == "text") {
                write_output(out_path, polytope_text(p, with_vertices));
            } else {
                json j = to_json(p);
                j["lambda"] = to_json(orbit);
                if (orbit.n() == 3) {
                    json names = json::array();
                    for (const auto& f : su3_facet_catalog(orbit)) names.push_back(f.name);
                    j["facet_names"] = names;
                }
                if (with_vertices) {
                    json vs = json::array();
                    for (const auto& v : p.vertices()) vs.push_back(to_json(v));
                    j["vertices"] = vs;
                }
                write_output(out_path, dump(j));
            }
            return kOk;
        }

        if (*classify) {
            const OrbitSpec orbit = read_orbit(lambda, orbit_file);
            if (orbit.n() != 3) throw InputError("classify needs an SU(3) orbit");
            const RationalVector point = parse_rational_list(point_text);
            if (point.size() != 3) throw InputError("--point needs three coordinates");
            const FiberVerdict v = classify_gt_fiber(orbit, point);
            if (format == "text") {
                std::cout << verdict_text(v);
            } else {
                std::cout << dump(verdict_to_json(v, orbit));
            }
            if (!artifact_path.empty()) {
                const auto src = PolytopeSource::of_orbit(orbit);
                if (v.witness) {
                    write_output(artifact_path, dump(witness_to_json(*v.witness, src)));
                } else if (v.certificate) {
                    write_output(artifact_path, dump(certificate_to_json(*v.certificate, src)));
                } else {
                    std::cerr << "warning: verdict " << to_string(v.status) << " has no probe artifact; nothing written\n";
                }
            }
            return kOk;
        }

        if (*sweep) {
            const OrbitSpec orbit = read_orbit(lambda, orbit_file);
            if (orbit.n() != 3) throw InputError("sweep needs an SU(3) orbit");
            const SweepReport r = sweep_w_segment(orbit, denominator);
            write_output(out_path, format == "text" ? sweep_text(r) : dump(sweep_to_json(r, emit_intervals)));
            return kOk;
        }

        if (*repro) {
            ReproductionOptions opts;
            opts.which = repro_case_from_string(case_name);
            if (!lambda.empty() || !orbit_file.empty()) opts.orbit_override = read_orbit(lambda, orbit_file);
            opts.sweep_denominator = denominator;
            opts.lemma_denominator = lemma_denominator;
            const ReproductionReport r = reproduce(opts);
            for (const auto& c : r.checks) {
                std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.details << "\n";
            }
            if (!out_path.empty()) write_output(out_path, dump(reproduction_to_json(r)));
            if (!r.passed()) {
                std::cerr << "failing checks:";
                for (const auto& id : r.failing_ids()) std::cerr << " " << id;
                std::cerr << "\n";
                return kCheckFailed;
            }
            return kOk;
        }

        if (*numeric) {
            const OrbitSpec orbit = read_orbit(lambda, orbit_file);
            const ValidationSummary s = validate_numeric(orbit, samples, seed);
            if (!out_path.empty()) {
                std::ostringstream csv;
                csv << "seed,hermitian_error,trace_error,spectrum_error,interlacing_violation,pr_error,root_error,"
                       "polytope_violation\n";
                for (const auto& r : s.rows) {
                    csv << r.seed << "," << fmt17(r.hermitian_error) << "," << fmt17(r.trace_error) << ","
                        << fmt17(r.spectrum_error) << "," << fmt17(r.interlacing_violation) << ","
                        << fmt17(r.pr_error) << "," << fmt17(r.root_error) << "," << fmt17(r.polytope_violation)
                        << "\n";
                }
                write_output(out_path, csv.str());
            }
            const auto& w = s.worst;
            std::cout << "samples " << s.rows.size() << " (seeds " << seed << ".." << seed + samples - 1 << ")\n"
                      << "max hermitian error     " << fmt17(w.hermitian_error) << "\n"
                      << "max trace error         " << fmt17(w.trace_error) << "\n"
                      << "max spectrum error      " << fmt17(w.spectrum_error) << "\n"
                      << "max interlacing viol.   " << fmt17(w.interlacing_violation) << "\n"
                      << "max |mu - pr o Lambda|  " << fmt17(w.pr_error) << "\n"
                      << "max root error          " << fmt17(w.root_error) << "\n"
                      << "max polytope violation  " << fmt17(w.polytope_violation) << "\n"
                      << (s.passed ? "PASS" : "FAIL") << "\n";
            return s.passed ? kOk : kCheckFailed;
        }

        if (*slice) {
            const OrbitSpec orbit = read_orbit(lambda, orbit_file);
            if (orbit.n() != 3) throw InputError("slice needs an SU(3) orbit");
            const SliceResult s = slice_at_x3(orbit, Rational::parse(x3_text));
            for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
            write_output(out_path, slice_json(s));
            return kOk;
        }

        if (*check) {
            CheckOutcome total;
            for (const auto& f : files) {
                std::ifstream in(f);
                if (!in) throw InputError("cannot read " + f);
                json doc;
                try {
                    doc = json::parse(in);
                } catch (const json::parse_error& e) {
                    throw InputError(f + ": " + e.what());
                }
                CheckOutcome one = check_document(doc);
                for (auto& e : one.errors) e = f + ": " + e;
                total.merge(one);
            }
            for (const auto& e : total.errors) std::cerr << "error: " << e << "\n";
            std::cout << total.witnesses << " witnesses, " << total.certificates << " certificates, "
                      << total.errors.size() << " errors\n";
            return total.ok() ? kOk : kCheckFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}
