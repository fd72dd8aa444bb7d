#pragma once

#include <stdexcept>
#include <string>

namespace esskit {

/// Base class for all esskit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No sequence satisfies the constraint profile (total count is zero).
class EmptyTrellis : public Error {
 public:
  using Error::Error;
};

/// Requested 2^k exceeds the number of admissible sequences.
class RateTooHigh : public Error {
 public:
  using Error::Error;
};

/// Even the unconstrained hypercube holds fewer than 2^k sequences.
class Unachievable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Sequence violates a profile bound; signals framing corruption on decode.
class InadmissibleSequence : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameter search exhausted its budget without hitting the target rate.
class CalibrationFailed : public Error {
 public:
  using Error::Error;
};

class WindowTooLong : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class StepPolicyError : public Error {
 public:
  using Error::Error;
};

class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

}  // namespace esskit
