// Copyright 2026 The Natset Authors
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

#ifndef NATSET_ERRORS_H_
#define NATSET_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace natset {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All input points are collinear or coincident within tolerance.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A polygon, matrix or parameter violates its type invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based line number in the offending file, 0 if not line-oriented.
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

class GapError : public Error {
 public:
  GapError(std::string actor_id, std::int64_t missing_frame)
      : Error("actor " + actor_id + " is missing frame " +
              std::to_string(missing_frame)),
        actor_id_(std::move(actor_id)),
        missing_frame_(missing_frame) {}

  const std::string& actor_id() const { return actor_id_; }
  std::int64_t missing_frame() const { return missing_frame_; }

 private:
  std::string actor_id_;
  std::int64_t missing_frame_;
};

// No trajectory satisfies the task predicate.
class EmptyTask : public Error {
 public:
  using Error::Error;
};

// Fewer than n_c + 1 hull states at t = 0.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NonPositiveParameter : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InitialStateOutsideTube : public Error {
 public:
  explicit InitialStateOutsideTube(double violation)
      : Error("initial hull state lies outside W_0 by " +
              std::to_string(violation) + " m"),
        violation_(violation) {}

  // Signed violation of the initial hull state against W_0, in meters.
  double violation() const { return violation_; }

 private:
  double violation_;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace natset

#endif  // NATSET_ERRORS_H_
