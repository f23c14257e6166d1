#pragma once

#include <stdexcept>
#include <string>

namespace radialdec {

// Base of every error raised by the library. Each subclass corresponds to one
// documented failure mode so callers (the CLI in particular) can map them to
// exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

class PoleProximityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGridError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class NotRadialError : public Error {
 public:
  using Error::Error;
};

class DegenerateFrameError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class ChartValidityError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class NearSingularError : public Error {
 public:
  NearSingularError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class GoldenDataError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace radialdec
