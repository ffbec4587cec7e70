#include "starci/cli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace starci::cli {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json witness_to_json(const Witness& w) {
  Json out;
  out["check"] = w.check;
  out["generator"] = w.generator;
  out["target"] = w.target;
  out["result"] = w.result;
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

Json verification_to_json(const VerificationReport& report, Json& timings) {
  Json out;
  out["claim"] = report.claim;
  out["verdict"] = to_string(report.verdict);
  out["holds"] = report.holds();
  out["field"] = report.field_used.to_string();
  if (const Witness* w = report.first_failure()) out["first_failure"] = witness_to_json(*w);
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(witness_to_json(w));
  out["witnesses"] = std::move(witnesses);
  out["notes"] = report.notes;
  for (const StepTiming& t : report.timings) timings[t.step] = t.seconds;
  return out;
}

Json without_wall_time(Json report) {
  if (report.is_object()) {
    report.erase("wall_time");
    for (auto& [key, value] : report.items()) value = without_wall_time(std::move(value));
  } else if (report.is_array()) {
    for (auto& value : report) value = without_wall_time(std::move(value));
  }
  return report;
}

}  // namespace starci::cli
