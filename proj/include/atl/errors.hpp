#pragma once

#include <stdexcept>
#include <string>

namespace atl {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// argument outside a tabulated/valid domain
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// V_u - V_g never equals the photon energy on the grid
class NoCrossingError : public Error {
 public:
  using Error::Error;
};

class NoTurningPointError : public Error {
 public:
  using Error::Error;
};

// adaptive refinement exhausted its budget
class ToleranceNotMetError : public Error {
 public:
  using Error::Error;
};

// cutoff-doubling check failed
class NotConvergedError : public Error {
 public:
  using Error::Error;
};

class MissingHarmonicError : public Error {
 public:
  using Error::Error;
};

// electron energy at or below zero
class BelowThresholdError : public Error {
 public:
  using Error::Error;
};

class ZeroStateError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  using Error::Error;
};

class InsufficientDelaysError : public Error {
 public:
  using Error::Error;
};

class EmptyBandError : public Error {
 public:
  using Error::Error;
};

// config parse/validation problems (CLI exit code 2)
class ConfigError : public Error {
 public:
  using Error::Error;
};

// event file / data ingestion problems (CLI exit code 3)
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace atl
