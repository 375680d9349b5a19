#pragma once

#include <stdexcept>
#include <string>

namespace wildmass {

/* Every failure the library reports derives from this, so front ends can
 * map whole families of errors onto exit codes. */
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Bad input: malformed specs, violated preconditions. */
class domain_error : public error {
  public:
    using error::error;
};

/* Finite resources ran out before an exact answer was reached. */
class resource_error : public error {
  public:
    using error::error;
};

class non_rational_power : public domain_error {
  public:
    using domain_error::domain_error;
};

class group_too_large : public resource_error {
  public:
    using resource_error::resource_error;
};

class not_a_homomorphism : public domain_error {
  public:
    using domain_error::domain_error;
};

class group_mismatch : public domain_error {
  public:
    using domain_error::domain_error;
};

class not_tame : public domain_error {
  public:
    using domain_error::domain_error;
};

class pseudo_reflection : public domain_error {
  public:
    using domain_error::domain_error;
};

class precision_exhausted : public resource_error {
  public:
    using resource_error::resource_error;
};

class budget_exceeded : public resource_error {
  public:
    using resource_error::resource_error;
};

class corrupt_cache : public error {
  public:
    using error::error;
};

}  // namespace wildmass
