#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "neumann/e3.hpp"
#include "neumann/polynomial.hpp"

namespace test_helpers {

// Deterministic random polynomial over all nine variables with total degree
// <= max_degree and small rational coefficients.
inline neumann::Polynomial random_polynomial(neumann::RationalSampler& rng, int max_degree,
                                             int max_terms = 5) {
  using neumann::Monomial;
  using neumann::Polynomial;
  using neumann::Rational;
  Polynomial p;
  const long terms = rng.next_int(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    Monomial m = Monomial::one();
    const long degree = rng.next_int(0, max_degree);
    for (long d = 0; d < degree; ++d) {
      m.e[rng.next_int(0, neumann::kNumVars - 1)] += 1;
    }
    Rational c = rng.next_rational(10, 10);
    if (c.is_zero()) c = Rational(1);
    p += Polynomial::monomial(m, c);
  }
  return p;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs a shell command, capturing stdout; stderr passes through to the test log.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace test_helpers
