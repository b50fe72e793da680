/*
   Copyright 2026 The flatflag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLATFLAG_ERROR_HPP
#define FLATFLAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flatflag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad field parameters: composite characteristic, reducible modulus, field too large.
class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The answer exists only over an extension of the working field.
class NeedsExtensionError : public Error {
 public:
  using Error::Error;
};

/// A post-condition re-check failed. Never expected on valid input.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace flatflag

#endif  // FLATFLAG_ERROR_HPP
