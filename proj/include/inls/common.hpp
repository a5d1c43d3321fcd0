#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace inls {

using Real = double;
using Complex = std::complex<double>;
using Array = Eigen::ArrayXd;
using CArray = Eigen::ArrayXcd;

// Error hierarchy. Everything user-facing derives from Error so the CLI can
// map failures to exit code 1 in one catch clause.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class SingularEvalError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NumericalOverflowError : public Error {
 public:
  using Error::Error;
};

class BoundaryContaminationError : public Error {
 public:
  BoundaryContaminationError(const std::string& what, Real breach_time)
      : Error(what), breach_time(breach_time) {}
  Real breach_time;
};

class SymmetryPreconditionError : public Error {
 public:
  using Error::Error;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace inls
