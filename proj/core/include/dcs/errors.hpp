#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcs {

// Base class for everything this library throws on a violated contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// evaluate() was asked for a point where the denominator is exactly zero.
struct PoleHit : Error {
  using Error::Error;
};

// Two transfer functions from different domains (or sample periods) were combined.
struct DomainMismatch : Error {
  using Error::Error;
};

// Operation undefined for this input (e.g. roots of a constant polynomial).
struct Degenerate : Error {
  using Error::Error;
};

// ZOH discretization requires a strictly proper continuous plant.
struct ImproperPlant : Error {
  using Error::Error;
};

// ZOH partial fractions handle poles up to multiplicity two.
struct RepeatedPoleUnsupported : Error {
  using Error::Error;
};

// A w-plane corner frequency at or beyond the 2/T band edge.
struct BandViolation : Error {
  using Error::Error;
};

// A discrete-domain evaluation at or beyond the Nyquist frequency pi/T.
struct NyquistViolation : Error {
  using Error::Error;
};

// A searched-for crossing does not exist on the scanned interval.
struct NoSolution : Error {
  using Error::Error;
};

// A design pre-condition failed; `constraint` names which one.
struct ConstraintViolated : Error {
  std::string constraint;
  ConstraintViolated(std::string which, const std::string& detail)
      : Error(which + ": " + detail), constraint(std::move(which)) {}
};

// A synthesis produced a gain with the wrong sign (bad crossover choice).
struct NegativeGain : Error {
  using Error::Error;
};

// Closed loop has poles outside the unit disk; they ride along for diagnostics.
struct UnstableLoop : Error {
  std::vector<std::complex<double>> poles;
  UnstableLoop(const std::string& what, std::vector<std::complex<double>> p)
      : Error(what), poles(std::move(p)) {}
};

// A step response never (permanently) enters the 2% band within the series.
struct NotSettled : Error {
  using Error::Error;
};

// Malformed or out-of-range project configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dcs
