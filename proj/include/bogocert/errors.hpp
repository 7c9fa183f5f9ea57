#pragma once

#include <stdexcept>
#include <string>

namespace bogocert {

// Input documents that do not match the expected shape (CLI exit code 2).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work that would exceed the enumeration budgets (CLI exit code 3).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certificate re-verification failure (CLI exit code 4).
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prime where the working order Z[theta] cannot be certified maximal, so
// splitting data is unavailable. Callers fold such primes into the
// conservative bad set.
struct unsupported_prime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weierstrass data with vanishing discriminant.
struct singular_model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient whose denominator vanishes at the requested place; the model
// cannot be reduced there in the given presentation.
struct nonintegral_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bogocert
