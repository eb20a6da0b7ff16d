// Copyright 2026 The gzeta Authors
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

namespace gzeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction and parsing. Each simplicity or connectivity
// violation has its own type so callers can tell them apart.
class GraphError : public Error {
 public:
  using Error::Error;
};
class MalformedGraphError : public GraphError {
 public:
  using GraphError::GraphError;
};
class LoopEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};
class DuplicateEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};
class DisconnectedGraphError : public GraphError {
 public:
  using GraphError::GraphError;
};
/// Family parameters below the minimum for a simple graph.
class FamilyParameterError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Shape mismatch, non-square input, bad rational literal.
class MatrixError : public Error {
 public:
  using Error::Error;
};

/// Coin vectors that are not unit vectors supported on D(u).
class CoinError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on the input graph does not hold
/// (not regular, a tree, pendant vertices, not vertex-transitive, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A logarithm or root argument left the real positive axis.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed its work guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace gzeta
