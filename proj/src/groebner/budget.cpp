#include "starci/budget.hpp"

#include "starci/errors.hpp"

namespace starci {

void Budget::check() const {
  if (expired()) throw BudgetExceeded("computation exceeded its time budget");
}

}  // namespace starci
