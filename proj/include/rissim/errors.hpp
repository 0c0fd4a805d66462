// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rissim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (non-positive size, bad level count, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Configuration file failed schema or invariant validation.
/// `path()` is the dotted field path of the offending entry.
class ConfigError : public Error {
public:
  ConfigError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

// Scene violations: the geometry cannot be evaluated by the scattering models.
class SceneError : public Error {
public:
  using Error::Error;
};

class FrontSideViolation : public SceneError {
public:
  using SceneError::SceneError;
};

class ZeroDistance : public SceneError {
public:
  using SceneError::SceneError;
};

class UndefinedAngle : public SceneError {
public:
  using SceneError::SceneError;
};

class DegenerateBisector : public SceneError {
public:
  using SceneError::SceneError;
};

class AmplitudeOutOfRange : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// The quadrature grid is too coarse for the phase variation over the cell.
class QuadratureUnderresolved : public Error {
public:
  using Error::Error;
};

/// A NaN or infinity appeared while evaluating a link.
class NonFiniteValue : public Error {
public:
  using Error::Error;
};

}  // namespace rissim
