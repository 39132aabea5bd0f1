// Copyright 2026 The matchlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchlift {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MATCHLIFT_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

MATCHLIFT_DEFINE_ERROR(NonUnitaryInput)
MATCHLIFT_DEFINE_ERROR(NotParityPreserving)
MATCHLIFT_DEFINE_ERROR(NotMatchgate)
MATCHLIFT_DEFINE_ERROR(UnknownGate)
MATCHLIFT_DEFINE_ERROR(BadArity)
MATCHLIFT_DEFINE_ERROR(BadTargets)
MATCHLIFT_DEFINE_ERROR(BadSampleCount)
MATCHLIFT_DEFINE_ERROR(DecompositionFailure)
MATCHLIFT_DEFINE_ERROR(DimensionMismatch)
MATCHLIFT_DEFINE_ERROR(TooLarge)
MATCHLIFT_DEFINE_ERROR(TargetIsMatchgate)
MATCHLIFT_DEFINE_ERROR(TargetNotPP)
MATCHLIFT_DEFINE_ERROR(UnsupportedLogicalGate)
MATCHLIFT_DEFINE_ERROR(SynthesisLimit)
MATCHLIFT_DEFINE_ERROR(ParseError)

#undef MATCHLIFT_DEFINE_ERROR

/// Raised by the free-fermion backend when a circuit contains an operation it
/// cannot represent. Carries the index of the first offending operation.
class BackendRefusal : public Error {
 public:
  BackendRefusal(std::size_t op_index, const std::string& why)
      : Error("op " + std::to_string(op_index) + ": " + why), op_index_(op_index) {}

  std::size_t op_index() const { return op_index_; }

 private:
  std::size_t op_index_;
};

}  // namespace matchlift
