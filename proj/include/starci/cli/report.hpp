#ifndef STARCI_CLI_REPORT_HPP
#define STARCI_CLI_REPORT_HPP

#include <string>
#include <string_view>

#include "starci/cli/arrangement_file.hpp"
#include "starci/report.hpp"

namespace starci::cli {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

Json witness_to_json(const Witness& witness);

/// Verdict, witnesses and notes. Timings go to `timings` so the result
/// block stays reproducible.
Json verification_to_json(const VerificationReport& report, Json& timings);

/// Report with every "wall_time" member removed, recursively.
Json without_wall_time(Json report);

}  // namespace starci::cli

#endif  // STARCI_CLI_REPORT_HPP
