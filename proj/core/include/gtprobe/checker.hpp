#pragma once

// Re-validation of witness and certificate files.
//
// The checker never calls the probe search or the lattice enumerator.
// Witnesses are replayed through probe_from / probe_displaces. Certificates
// are checked by rebuilding each alpha region from the polytope and point,
// confirming the recorded integer box covers it, and then trying every
// integer direction in the box as an actual probe.

#include "gtprobe/json_io.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gtprobe {

struct CheckOutcome {
    std::size_t witnesses = 0;
    std::size_t certificates = 0;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty() && (witnesses + certificates) > 0; }
    void merge(const CheckOutcome& other);
};

/// Upper bound on integer directions tried per facet record.
inline constexpr std::size_t kMaxCheckerBox = 20'000'000;

CheckOutcome check_witness_json(const json& j);
CheckOutcome check_certificate_json(const json& j);

/// Dispatches on "kind": probe-witness, probe-certificate, sweep-report,
/// reproduction-report, or a bare array of such documents.
CheckOutcome check_document(const json& j);

} // namespace gtprobe
