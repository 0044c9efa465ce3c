#pragma once

#include <stdexcept>
#include <string>

namespace evoder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with user-supplied input. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public InputError {
 public:
  using InputError::InputError;
};

class LoopEdge : public InputError {
 public:
  using InputError::InputError;
};

class LabelOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class ConnectivityError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidFamilyParams : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SizeTooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidClass : public Error {
 public:
  using Error::Error;
};

/// A computed result contradicts an independent check (closed form vs
/// kernel, or a constructed derivation failing the Leibniz identity).
/// The CLI maps this to exit code 2.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace evoder
