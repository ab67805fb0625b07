#pragma once

#include "coralg/covering.hpp"
#include "coralg/fixtures.hpp"

namespace coralg {

/// Machine-readable report, schema "cover-report/1". Byte-deterministic
/// for a fixed fixture and tool version (timings are deliberately kept
/// out of the JSON form).
std::string report_to_json(const Theorem3Report& rep, const std::string& fixture_hash);

/// Human-readable rendering of the same data.
std::string report_to_text(const Theorem3Report& rep, const std::string& fixture_hash,
                           double elapsed_seconds);

} // namespace coralg
