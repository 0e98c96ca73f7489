// Copyright 2026 The qautomata Authors
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

namespace qautomata {

/** Base class of every exception thrown by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * The caller handed us something malformed: wrong shapes, a map that is not a
 * channel, a probability outside [0,1], unparsable JSON, ...
 * The CLI maps this family to exit code 1.
 */
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/**
 * The input was fine but a numerical procedure could not deliver its
 * postcondition. The CLI maps this family to exit code 2.
 */
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

#define QAUTOMATA_DEFINE_ERROR(Name, Base) \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  };

QAUTOMATA_DEFINE_ERROR(NonHermitian, InvalidInput)
QAUTOMATA_DEFINE_ERROR(EmptyInput, InvalidInput)
QAUTOMATA_DEFINE_ERROR(DimensionMismatch, InvalidInput)
QAUTOMATA_DEFINE_ERROR(InvalidChannel, InvalidInput)
QAUTOMATA_DEFINE_ERROR(InvalidState, InvalidInput)
QAUTOMATA_DEFINE_ERROR(InvalidProbability, InvalidInput)
QAUTOMATA_DEFINE_ERROR(InvalidAutomaton, InvalidInput)
QAUTOMATA_DEFINE_ERROR(NotAnEnclosure, InvalidInput)
QAUTOMATA_DEFINE_ERROR(ParseError, InvalidInput)

QAUTOMATA_DEFINE_ERROR(ConvergenceFailure, NumericalFailure)
QAUTOMATA_DEFINE_ERROR(IllConditionedProjector, NumericalFailure)
QAUTOMATA_DEFINE_ERROR(SpanDeficit, NumericalFailure)
QAUTOMATA_DEFINE_ERROR(DecompositionFailure, NumericalFailure)

#undef QAUTOMATA_DEFINE_ERROR

}  // namespace qautomata
