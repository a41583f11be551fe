#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (graph files, degrees, embeddings).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was hit; results would be incomplete.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class FiberOverflow : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class ScanOverflow : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace toric
