#pragma once

#include <stdexcept>

namespace apollon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// quintet or key fails the master equation or one of its constraints
class MasterEquationViolation : public Error {
 public:
  using Error::Error;
};

// Descartes discriminant is not a perfect square: the gasket is not integral
class NotIntegral : public Error {
 public:
  using Error::Error;
};

// Descartes discriminant is negative: the bends admit no tangent fourth circle
class NegativeDiscriminant : public Error {
 public:
  using Error::Error;
};

// four bends that do not satisfy the Descartes relation
class InvalidQuadruple : public Error {
 public:
  using Error::Error;
};

// circle pair without a tangency point has no triangle triple
class NotTangent : public Error {
 public:
  using Error::Error;
};

// the strip degenerates to parallel lines, which circle symbols cannot express
class StripUnsupported : public Error {
 public:
  using Error::Error;
};

class EmptyPacking : public Error {
 public:
  using Error::Error;
};

}  // namespace apollon
