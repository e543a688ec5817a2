#pragma once

#include <stdexcept>
#include <string>

namespace cmtheta {

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Input outside the supported domain (unknown catalog key, unsupported q, ...).
class unsupported_error : public error
{
  public:
    using error::error;
};

/// A numerical step lost too much precision (ill-conditioned inverse,
/// theta truncation radius over the cap, AGM non-convergence).
class precision_error : public error
{
  public:
    using error::error;
};

/// A high-precision value could not be rounded to an element of O_K.
class recognition_error : public error
{
  public:
    using error::error;
};

/// Violated precondition on an exact input (non-Hermitian matrix,
/// mismatched discriminants, non-unimodular form, ...).
class domain_error : public error
{
  public:
    using error::error;
};

} // namespace cmtheta
