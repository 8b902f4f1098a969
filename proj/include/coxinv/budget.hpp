#pragma once

#include <stdexcept>

namespace coxinv {

// A computation refused because it would exceed its desk-scale limit.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxinv
