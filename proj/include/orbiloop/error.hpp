#pragma once

#include <stdexcept>
#include <string>

namespace orbiloop {

// Base of everything the library throws for bad input or failed validation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (specs, files, indices).
class InputError : public Error {
 public:
  using Error::Error;
};

// A structure failed one of its defining laws; the message names a witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A circle-model product left the representable exponent window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

// An operation needs the loop coproduct but the algebra cannot supply it.
class CoproductUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace orbiloop
