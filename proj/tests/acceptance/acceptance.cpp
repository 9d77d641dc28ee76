// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "oracle.hpp"

#include "gtprobe/checker.hpp"
#include "gtprobe/reproduce.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace gtprobe;

namespace {

const fs::path kOut = ACCEPTANCE_OUT_DIR;

struct Outcome {
    bool pass = false;
    std::string details;
};

int spawn(const std::string& args)
{
    const std::string cmd = std::string(GT_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

json read_json(const fs::path& p)
{
    std::ifstream in(p);
    return json::parse(in);
}

// x1 values of W points (x1, -x1, 0) among artifact points.
std::set<Rational> w_points(const json& artifacts)
{
    std::set<Rational> xs;
    for (const auto& a : artifacts) {
        const RationalVector x = rational_vector_from_json(a.at("point"));
        if (x[1] == -x[0] && x[2].sign() == 0) xs.insert(x[0]);
    }
    return xs;
}

bool is_displaced(const std::string& status)
{
    return status == "DisplacedByProbe" || status == "DisplacedByPermutation";
}

// Shared by criteria 1 and 2: exactly one NotProbeDisplaceable point, at the
// expected x1, carrying a certificate; every interior grid point displaced.
Outcome unique_point_case(const std::string& name, const Rational& expected)
{
    const auto start = std::chrono::steady_clock::now();
    const fs::path file = kOut / (name + ".json");
    const int rc = spawn("reproduce --case " + name + " --out " + file.string());
    const double elapsed = seconds_since(start);
    if (rc != 0) return {false, "reproduce exited " + std::to_string(rc)};
    const json r = read_json(file);

    std::vector<Rational> npd;
    std::size_t displaced = 0;
    std::vector<std::string> problems;
    const auto& verdicts = r.at("sweep").at("verdicts");
    const auto witnessed = w_points(r.at("artifacts").at("witnesses"));
    const auto certified = w_points(r.at("artifacts").at("certificates"));
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Rational x1 = rational_from_json(verdicts[i].at("x1"));
        const std::string status = verdicts[i].at("status");
        const bool endpoint = i == 0 || i + 1 == verdicts.size();
        if (status == "NotProbeDisplaceable") {
            npd.push_back(x1);
            if (!certified.contains(x1)) problems.push_back("no certificate at " + x1.str());
        } else if (is_displaced(status)) {
            ++displaced;
            if (status == "DisplacedByProbe" && !witnessed.contains(x1)) problems.push_back("no witness at " + x1.str());
        } else if (!(endpoint && status == "BoundaryIsotropic")) {
            problems.push_back(status + " at " + x1.str());
        }
    }
    if (npd.size() != 1 || npd.front() != expected) problems.push_back("unexpected NotProbeDisplaceable set");

    const CheckOutcome check = check_document(r);
    if (!check.ok()) problems.push_back("in-process re-validation: " + check.errors.front());
    if (elapsed > 60.0) problems.push_back("over 60s");

    std::ostringstream d;
    d << "unique x1 = " << (npd.empty() ? std::string("none") : npd.front().str()) << ", " << displaced
      << " displaced grid points, " << check.witnesses << " witnesses, " << check.certificates << " certificates, "
      << fmt_seconds(elapsed);
    if (!problems.empty()) d << "; " << problems.front();
    return {problems.empty(), d.str()};
}

Outcome criterion_1()
{
    return unique_point_case("b-neg", Rational(3, 2));
}

Outcome criterion_2()
{
    return unique_point_case("b-pos", Rational(2));
}

Outcome criterion_3()
{
    const auto start = std::chrono::steady_clock::now();
    const fs::path file = kOut / "monotone.json";
    const int rc = spawn("reproduce --case monotone --out " + file.string());
    const double elapsed = seconds_since(start);
    if (rc != 0) return {false, "reproduce exited " + std::to_string(rc)};
    const json r = read_json(file);

    const auto witnessed = w_points(r.at("artifacts").at("witnesses"));
    const auto certified = w_points(r.at("artifacts").at("certificates"));
    std::size_t n_cert = 0;
    std::size_t n_wit = 0;
    std::vector<std::string> problems;
    for (const auto& v : r.at("sweep").at("verdicts")) {
        const Rational x1 = rational_from_json(v.at("x1"));
        const std::string status = v.at("status");
        if (x1 <= Rational(1)) {
            const bool ok_status = status == "NotProbeDisplaceable" ||
                                   (x1.sign() == 0 && status == "LagrangianSphereVertex");
            if (!ok_status || !certified.contains(x1)) problems.push_back("not certified at " + x1.str());
            else ++n_cert;
        } else if (x1 < Rational(2)) {
            if (status != "DisplacedByProbe" || !witnessed.contains(x1)) problems.push_back("no witness at " + x1.str());
            else ++n_wit;
        }
    }
    if (!certified.contains(Rational(0)) || !certified.contains(Rational(1))) problems.push_back("endpoint not certified");

    const CheckOutcome check = check_document(r);
    if (!check.ok()) problems.push_back("in-process re-validation: " + check.errors.front());
    if (elapsed > 60.0) problems.push_back("over 60s");

    std::ostringstream d;
    d << n_cert << " certified points in [0,1], " << n_wit << " probe witnesses in (1,2), " << fmt_seconds(elapsed);
    if (!problems.empty()) d << "; " << problems.front();
    return {problems.empty(), d.str()};
}

Outcome criterion_4()
{
    const auto start = std::chrono::steady_clock::now();
    json artifacts = json::array();
    std::size_t points = 0;
    std::set<std::string> lemmas;
    std::vector<std::string> problems;
    for (const auto& o : {default_orbit(ReproCase::BNeg), default_orbit(ReproCase::BPos)}) {
        const auto src = PolytopeSource::of_orbit(o);
        for (const auto& lemma : applicable_lemmas(o)) {
            const LemmaSuite s = run_lemma_suite(o, lemma, 8);
            lemmas.insert(lemma);
            points += s.points.size();
            if (s.points.empty()) problems.push_back(lemma + ": empty grid");
            if (!s.failures.empty()) problems.push_back(lemma + ": " + s.failures.front());
            if (s.search_witnesses.size() != s.points.size() || s.named_witnesses.size() != s.points.size()) {
                problems.push_back(lemma + ": missing witnesses");
            }
            for (const auto& w : s.search_witnesses) artifacts.push_back(witness_to_json(w, src));
            for (const auto& w : s.named_witnesses) artifacts.push_back(witness_to_json(w, src));
        }
    }
    const double elapsed = seconds_since(start);
    if (lemmas.size() != 4) problems.push_back("not all four lemmas ran");
    if (elapsed > 60.0) problems.push_back("over 60s");
    std::ofstream(kOut / "lemmas.json") << artifacts.dump() << '\n';

    std::ostringstream d;
    d << lemmas.size() << " lemmas, " << points << " grid points, " << artifacts.size() << " witnesses, "
      << fmt_seconds(elapsed);
    if (!problems.empty()) d << "; " << problems.front();
    return {problems.empty(), d.str()};
}

Outcome criterion_5()
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5150);
    std::size_t verified = 0;
    std::size_t skipped = 0;
    std::size_t displaceable = 0;
    std::size_t disagreements = 0;
    while (verified < 200 && skipped < 2000) {
        const HPolytope p = oracle::random_polytope(rng, 8);
        const RationalVector u = oracle::random_interior_point(rng, p);
        if (!oracle::feasibility_regions_within(p, u, 12)) {
            ++skipped;
            continue;
        }
        ++verified;
        const bool fast = displacing_probe_search(p, u).has_value();
        const bool naive = oracle::naive_probe_search(p, u, 12).found;
        displaceable += fast;
        disagreements += fast != naive;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << verified << " instances (" << displaceable << " displaceable, " << skipped << " skipped as unfit), "
      << disagreements << " disagreements, " << fmt_seconds(elapsed);
    return {verified >= 200 && disagreements == 0 && elapsed <= 300.0, d.str()};
}

Outcome criterion_6()
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    for (auto c : {ReproCase::BNeg, ReproCase::BPos, ReproCase::Monotone}) {
        std::string lambda = default_orbit(c).str();
        lambda = lambda.substr(1, lambda.size() - 2);
        const fs::path csv = kOut / ("numeric-" + to_string(c) + ".csv");
        const int rc = spawn("validate-numeric --lambda " + lambda + " --samples 1000 --seed 1 --out " + csv.string());
        if (rc != 0) problems.push_back(to_string(c) + " exited " + std::to_string(rc));
    }
    const double elapsed = seconds_since(start);
    if (elapsed > 30.0) problems.push_back("over 30s");
    std::ostringstream d;
    d << "3 orbits x 1000 samples, " << fmt_seconds(elapsed);
    if (!problems.empty()) d << "; " << problems.front();
    return {problems.empty(), d.str()};
}

Outcome criterion_7()
{
    std::vector<std::string> problems;
    for (auto c : {ReproCase::BNeg, ReproCase::BPos, ReproCase::Monotone}) {
        const OrbitSpec o = default_orbit(c);
        const HPolytope p = su3_polytope(o);
        const RationalVector bbb{o.b(), o.b(), o.b()};
        std::vector<RationalVector> flagged;
        for (const auto& v : p.vertices()) {
            if (!is_smooth_vertex(p, v)) flagged.push_back(v);
        }
        if (flagged != std::vector<RationalVector>{bbb}) problems.push_back(to_string(c));
    }
    return {problems.empty(), problems.empty() ? "only (b,b,b) flagged for all three orbits"
                                               : "wrong non-smooth set for " + problems.front()};
}

Outcome criterion_8()
{
    std::string files;
    for (const char* name : {"b-neg.json", "b-pos.json", "monotone.json", "lemmas.json"}) {
        const fs::path f = kOut / name;
        if (!fs::exists(f)) return {false, std::string("missing ") + name};
        files += " " + f.string();
    }
    const auto start = std::chrono::steady_clock::now();
    const int rc = spawn("check-certificate" + files);
    std::ostringstream d;
    d << "check-certificate on 4 files exited " << rc << ", " << fmt_seconds(seconds_since(start));
    return {rc == 0, d.str()};
}

} // namespace

int main()
{
    fs::create_directories(kOut);
    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.details << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
