#pragma once

#include <stdexcept>
#include <string>

namespace graphoid {

// Base of every error the library throws. The CLI maps all of them to exit 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTriplet : public Error {
 public:
  using Error::Error;
};

class InvalidSets : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class UniverseTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class SingularConditioning : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityEvidence : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidDag : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class InvalidCover : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphoid
