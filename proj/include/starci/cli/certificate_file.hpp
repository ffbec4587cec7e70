#ifndef STARCI_CLI_CERTIFICATE_FILE_HPP
#define STARCI_CLI_CERTIFICATE_FILE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "starci/certificate.hpp"
#include "starci/cli/arrangement_file.hpp"

namespace starci::cli {

/// Candidate generators stored by form labels (1-based):
///   {"arrangement": {...}, "j": 1,
///    "f": [[[1, 3, 4], [1, 2, 4], [1, 2, 3]]],
///    "tail": [2, 3, 4]}
/// Entry u of "f" lists the summands of F_{u+1}; each summand is a product
/// of the listed forms.
struct CertificateFile {
  ArrangementFile arrangement;
  StciCertificate certificate;
};

CertificateFile parse_certificate(std::string_view text,
                                  std::optional<FieldSpec> field_override = std::nullopt);
Json certificate_to_json(const ArrangementFile& arrangement, const StciCertificate& cert);
std::string serialize_certificate(const ArrangementFile& arrangement, const StciCertificate& cert);

}  // namespace starci::cli

#endif  // STARCI_CLI_CERTIFICATE_FILE_HPP
