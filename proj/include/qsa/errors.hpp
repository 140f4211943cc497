// Copyright 2026 The QSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qsa {

/** Base class of every error thrown by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operands act on different numbers of sites. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** Malformed literal, file or specification. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/** Argument outside the mathematical domain of an operation. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** Problem exceeds the configured dense limit. */
class ResourceError : public Error {
 public:
  using Error::Error;
};

/** Target cannot be realised on the given connectivity graph. */
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/** Requested feature is deliberately not supported. */
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/** A schedule failed structural checks or symbolic replay. */
class InvalidScheduleError : public Error {
 public:
  using Error::Error;
};

/** A swapper was applied to a site whose letter is not one of its connectors. */
class ConnectorMismatchError : public Error {
 public:
  using Error::Error;
};

/** Logical operators inconsistent with the hole/boundary kinds. */
class EncodingError : public Error {
 public:
  using Error::Error;
};

/** A loop does not have the required winding around a hole. */
class TopologyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsa
