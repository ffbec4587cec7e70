#ifndef STARCI_REPORT_HPP
#define STARCI_REPORT_HPP

#include <string>
#include <vector>

#include "starci/field.hpp"

namespace starci {

enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Verdict verdict);

/// One decided sub-claim, e.g. "F_1 lies in rad(I(A,3))".
struct Witness {
  std::string check;      ///< containment, radical, prime, product, sv-i, sv-ii, sv-iii, ...
  std::string generator;  ///< what was tested
  std::string target;     ///< where it was tested
  bool result = false;
  std::string detail;     ///< optional explanation (divisor found, missing element, ...)
};

struct StepTiming {
  std::string step;
  double seconds = 0.0;
};

/// Transcript of a verification. holds() is the conjunction of all witness
/// results unless the run was cut short, in which case the verdict is
/// Inconclusive and never Holds or Fails.
struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::Holds;
  std::vector<Witness> witnesses;
  std::vector<StepTiming> timings;
  FieldSpec field_used;
  std::vector<std::string> notes;

  bool holds() const { return verdict == Verdict::Holds; }
  bool inconclusive() const { return verdict == Verdict::Inconclusive; }
  const Witness* first_failure() const;

  /// Recomputes the verdict from the witnesses (keeps Inconclusive).
  void settle();
};

}  // namespace starci

#endif  // STARCI_REPORT_HPP
