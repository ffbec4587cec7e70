#ifndef STARCI_TESTS_MUTATIONS_HPP
#define STARCI_TESTS_MUTATIONS_HPP

#include "starci/certificate.hpp"

namespace starci::testing {

/// Removes summand `index` from F_{u+1}.
inline StciCertificate drop_summand(const StciCertificate& cert, std::size_t u, std::size_t index) {
  auto terms = cert.f_terms;
  terms.at(u).summands.erase(terms.at(u).summands.begin() + static_cast<std::ptrdiff_t>(index));
  return make_certificate(cert.arrangement, cert.j, terms, cert.tail);
}

/// Replaces the tail factor `from` by the arrangement form `to` (0-based).
inline StciCertificate swap_tail_form(const StciCertificate& cert, std::size_t from, std::size_t to) {
  std::vector<LinearForm> factors;
  bool swapped = false;
  for (const LinearForm& f : cert.tail.factors()) {
    if (!swapped && f == cert.arrangement.form(from)) {
      factors.push_back(cert.arrangement.form(to));
      swapped = true;
    } else {
      factors.push_back(f);
    }
  }
  return make_certificate(cert.arrangement, cert.j, cert.f_terms, ProductOfForms(factors));
}

/// Drops the tail factor l_{index+1}.
inline StciCertificate truncate_tail(const StciCertificate& cert, std::size_t index) {
  std::vector<LinearForm> factors;
  for (const LinearForm& f : cert.tail.factors()) {
    if (!(f == cert.arrangement.form(index))) factors.push_back(f);
  }
  return make_certificate(cert.arrangement, cert.j, cert.f_terms, ProductOfForms(factors));
}

/// Squares-to-first-power style mutation: replaces F_{u+1} by its first summand only.
inline StciCertificate lower_to_single_summand(const StciCertificate& cert, std::size_t u) {
  auto terms = cert.f_terms;
  terms.at(u).summands.resize(1);
  return make_certificate(cert.arrangement, cert.j, terms, cert.tail);
}

}  // namespace starci::testing

#endif  // STARCI_TESTS_MUTATIONS_HPP
