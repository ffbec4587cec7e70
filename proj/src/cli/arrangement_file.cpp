#include "starci/cli/arrangement_file.hpp"

#include <charconv>
#include <limits>
#include <set>

namespace starci::cli {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Malformed: return "malformed";
    case ParseErrorKind::ZeroForm: return "zero-form";
    case ParseErrorKind::DuplicateForm: return "duplicate-form";
    case ParseErrorKind::NonPrimeModulus: return "non-prime-modulus";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& message,
                       std::vector<std::size_t> indices)
    : UsageError(to_string(kind) + ": " + message), kind_(kind), indices_(std::move(indices)) {}

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw ParseError(ParseErrorKind::Malformed, message);
}

FieldSpec prime_field(std::uint64_t p) {
  if (!is_prime_number(p)) {
    throw ParseError(ParseErrorKind::NonPrimeModulus, "modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 31)) malformed("modulus " + std::to_string(p) + " exceeds 2^31");
  return FieldSpec::prime(p);
}

FieldSpec field_from_json(const Json& node) {
  if (node.is_string() && node.get<std::string>() == "rational") return FieldSpec::rationals();
  if (node.is_object() && node.size() == 1 && node.contains("prime")) {
    const Json& p = node["prime"];
    if (!p.is_number_integer()) malformed("\"prime\" must be an integer");
    if (p.is_number_unsigned()) return prime_field(p.get<std::uint64_t>());
    const auto v = p.get<std::int64_t>();
    if (v < 0) throw ParseError(ParseErrorKind::NonPrimeModulus, "modulus " + std::to_string(v) + " is not prime");
    return prime_field(static_cast<std::uint64_t>(v));
  }
  malformed("\"field\" must be \"rational\" or {\"prime\": p}");
}

std::vector<std::string> string_list(const Json& node, const char* key) {
  if (!node.is_array()) malformed(std::string("\"") + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const Json& item : node) {
    if (!item.is_string()) malformed(std::string("\"") + key + "\" must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::int64_t integer(const Json& node) {
  if (!node.is_number_integer()) malformed("coefficients must be integers");
  if (node.is_number_unsigned() &&
      node.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    malformed("coefficient out of range");
  }
  return node.get<std::int64_t>();
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("coefficient too large to serialize");
  return z.get_si();
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  if (text == "rational" || text == "QQ") return FieldSpec::rationals();
  std::string_view digits = text;
  if (text.starts_with("GF(") && text.ends_with(")")) digits = text.substr(3, text.size() - 4);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    malformed("unknown field \"" + std::string(text) + "\"");
  }
  return prime_field(p);
}

ArrangementFile arrangement_from_json(const Json& doc, std::optional<FieldSpec> field_override) {
  if (!doc.is_object()) malformed("document must be an object");
  for (const char* key : {"field", "variables", "forms"}) {
    if (!doc.contains(key)) malformed(std::string("missing \"") + key + "\"");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "field" && key != "variables" && key != "forms" && key != "labels") {
      malformed("unknown key \"" + key + "\"");
    }
  }
  FieldSpec field = field_from_json(doc["field"]);
  if (field_override) field = *field_override;

  std::vector<std::string> variables = string_list(doc["variables"], "variables");
  const std::size_t k = variables.size();
  if (k < 2) malformed("at least two variables are required");
  if (k > kMaxVars - 2) malformed("at most " + std::to_string(kMaxVars - 2) + " variables are supported");
  if (std::set<std::string>(variables.begin(), variables.end()).size() != k) {
    malformed("variable names must be distinct");
  }

  const Json& forms = doc["forms"];
  if (!forms.is_array() || forms.empty()) malformed("\"forms\" must be a non-empty list");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Json& form = forms[i];
    if (!form.is_array() || form.size() != k) {
      malformed("form " + std::to_string(i + 1) + " must have " + std::to_string(k) + " coefficients");
    }
    std::vector<std::int64_t> row;
    bool zero = true;
    for (const Json& c : form) {
      row.push_back(integer(c));
      zero = zero && Scalar::from_int(field, row.back()).is_zero();
    }
    if (zero) {
      throw ParseError(ParseErrorKind::ZeroForm,
                       "form " + std::to_string(i + 1) + " is zero in " + field.to_string(), {i});
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = string_list(doc["labels"], "labels");
    if (labels.size() != rows.size()) malformed("\"labels\" must have one entry per form");
  }

  try {
    return ArrangementFile{Arrangement::from_integers(field, k, rows), std::move(variables),
                           std::move(labels)};
  } catch (const DuplicateFormError& e) {
    throw ParseError(ParseErrorKind::DuplicateForm, e.what(), {e.first(), e.second()});
  }
}

ArrangementFile parse_arrangement(std::string_view text, std::optional<FieldSpec> field_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  return arrangement_from_json(doc, field_override);
}

Json arrangement_to_json(const ArrangementFile& file) {
  const Arrangement& a = file.arrangement;
  Json doc;
  if (a.field().is_rational()) {
    doc["field"] = "rational";
  } else {
    doc["field"] = Json{{"prime", a.field().modulus()}};
  }
  doc["variables"] = file.variables;
  Json forms = Json::array();
  for (const LinearForm& form : a.forms()) {
    Json row = Json::array();
    if (a.field().is_prime()) {
      for (const Scalar& c : form.coefficients()) row.push_back(c.residue());
    } else {
      mpz_class lcm = 1;
      for (const Scalar& c : form.coefficients()) lcm = ::lcm(lcm, mpz_class(c.rational().get_den()));
      std::vector<mpz_class> ints;
      mpz_class g = 0;
      for (const Scalar& c : form.coefficients()) {
        mpq_class scaled = c.rational() * lcm;
        ints.push_back(scaled.get_num());
        g = ::gcd(g, ints.back());
      }
      for (const mpz_class& z : ints) row.push_back(to_int64(z / g));
    }
    forms.push_back(std::move(row));
  }
  doc["forms"] = std::move(forms);
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc;
}

std::string serialize_arrangement(const ArrangementFile& file) {
  return arrangement_to_json(file).dump(2) + "\n";
}

ArrangementFile with_default_names(Arrangement arrangement) {
  std::vector<std::string> names = default_variable_names(arrangement.num_vars());
  return ArrangementFile{std::move(arrangement), std::move(names), {}};
}

}  // namespace starci::cli
