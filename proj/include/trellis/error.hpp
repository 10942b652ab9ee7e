// Copyright 2026 The Trellis Authors. All Rights Reserved.
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

namespace trellis {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, wrong types, unknown fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Rotation data does not describe a sphere embedding.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// The homotopy class of a graph map cannot be recovered from the data given.
class AmbiguousMapError : public Error {
 public:
  using Error::Error;
};

// Matrix shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace trellis
