#pragma once

#include <stdexcept>
#include <string>

namespace qlp {

// Parameters outside the mathematical domain of an operation (K = 1 in the
// C/D change of variables, d > n, ...).
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Malformed external input: JSON documents, rational literals, code files.
class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A computation that would exceed a configured size limit.
class limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid stabilizer generator sets.
class invalid_code_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qlp
