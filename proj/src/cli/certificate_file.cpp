#include "starci/cli/certificate_file.hpp"

#include <algorithm>

namespace starci::cli {

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw ParseError(ParseErrorKind::Malformed, message);
}

ProductOfForms product_from_json(const Arrangement& a, const Json& node, const std::string& where) {
  if (!node.is_array() || node.empty()) malformed(where + " must be a non-empty list of form labels");
  std::vector<std::size_t> indices;
  for (const Json& label : node) {
    if (!label.is_number_integer() || label.get<std::int64_t>() < 1 ||
        label.get<std::int64_t>() > static_cast<std::int64_t>(a.size())) {
      malformed(where + " refers to a form label outside 1.." + std::to_string(a.size()));
    }
    indices.push_back(label.get<std::size_t>() - 1);
  }
  return subset_product(a, indices);
}

Json product_to_json(const ProductOfForms& p) {
  std::vector<std::size_t> labels;
  for (const LinearForm& f : p.factors()) labels.push_back(f.label());
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

CertificateFile parse_certificate(std::string_view text, std::optional<FieldSpec> field_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("certificate must be an object");
  for (const char* key : {"arrangement", "j", "f", "tail"}) {
    if (!doc.contains(key)) malformed(std::string("missing \"") + key + "\"");
  }
  ArrangementFile file = arrangement_from_json(doc["arrangement"], field_override);
  const Arrangement& a = file.arrangement;

  if (!doc["j"].is_number_unsigned()) malformed("\"j\" must be a non-negative integer");
  const auto j = doc["j"].get<std::size_t>();
  if (j >= a.size()) malformed("\"j\" must be below the number of forms");

  const Json& f = doc["f"];
  if (!f.is_array() || f.size() != j) malformed("\"f\" must list exactly j generators");
  std::vector<ProductSum> terms;
  for (std::size_t u = 0; u < f.size(); ++u) {
    const std::string where = "F_" + std::to_string(u + 1);
    if (!f[u].is_array()) malformed(where + " must be a list of products");
    ProductSum sum;
    for (const Json& summand : f[u]) sum.summands.push_back(product_from_json(a, summand, where));
    terms.push_back(std::move(sum));
  }
  ProductOfForms tail = product_from_json(a, doc["tail"], "tail");
  StciCertificate cert = make_certificate(a, j, std::move(terms), std::move(tail));
  return CertificateFile{std::move(file), std::move(cert)};
}

Json certificate_to_json(const ArrangementFile& arrangement, const StciCertificate& cert) {
  Json doc;
  doc["arrangement"] = arrangement_to_json(arrangement);
  doc["j"] = cert.j;
  Json f = Json::array();
  for (const ProductSum& sum : cert.f_terms) {
    Json summands = Json::array();
    for (const ProductOfForms& p : sum.summands) summands.push_back(product_to_json(p));
    f.push_back(std::move(summands));
  }
  doc["f"] = std::move(f);
  doc["tail"] = product_to_json(cert.tail);
  return doc;
}

std::string serialize_certificate(const ArrangementFile& arrangement, const StciCertificate& cert) {
  return certificate_to_json(arrangement, cert).dump(2) + "\n";
}

}  // namespace starci::cli
