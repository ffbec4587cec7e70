#ifndef STARCI_CLI_ARRANGEMENT_FILE_HPP
#define STARCI_CLI_ARRANGEMENT_FILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "starci/arrangement.hpp"
#include "starci/errors.hpp"

namespace starci::cli {

using Json = nlohmann::ordered_json;

enum class ParseErrorKind { Malformed, ZeroForm, DuplicateForm, NonPrimeModulus };

std::string to_string(ParseErrorKind kind);

/// Rejected input document. For DuplicateForm, indices() holds the two
/// colliding 0-based positions; for ZeroForm, the offending position.
class ParseError : public UsageError {
 public:
  ParseError(ParseErrorKind kind, const std::string& message, std::vector<std::size_t> indices = {});

  ParseErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ParseErrorKind kind_;
  std::vector<std::size_t> indices_;
};

/// An arrangement together with its display names.
///
/// Document format:
///   {"field": "rational" | {"prime": p},
///    "variables": ["x", "y", ...],
///    "forms": [[1, 0, ...], ...],
///    "labels": ["a", "b", ...]}          (optional, one per form)
/// Coefficients are integers interpreted in the declared field.
struct ArrangementFile {
  Arrangement arrangement;
  std::vector<std::string> variables;
  std::vector<std::string> labels;
};

/// Parses a document. A field override replaces the declared field before
/// the integers are interpreted.
ArrangementFile parse_arrangement(std::string_view text,
                                  std::optional<FieldSpec> field_override = std::nullopt);
ArrangementFile arrangement_from_json(const Json& doc,
                                      std::optional<FieldSpec> field_override = std::nullopt);

/// Normalized forms as integer rows: primitive integer multiples over the
/// rationals, residues in [0, p) over GF(p).
Json arrangement_to_json(const ArrangementFile& file);
std::string serialize_arrangement(const ArrangementFile& file);

/// Wraps a bare arrangement with default names x1..xk.
ArrangementFile with_default_names(Arrangement arrangement);

/// Accepts "rational", "QQ", "GF(p)" or a bare prime.
FieldSpec parse_field(std::string_view text);

}  // namespace starci::cli

#endif  // STARCI_CLI_ARRANGEMENT_FILE_HPP
