// Copyright 2026 The ncopt Authors.
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

#ifndef NCOPT_ERRORS_HPP_
#define NCOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ncopt {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed topology, demand or solution document. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A well-formed document or call whose content breaks a model invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

class NoDisjointPairError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// MIN_COST instance with a demand that cannot be served.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, int demand_id = -1)
      : Error(what), demand_id_(demand_id) {}
  // -1 when the infeasibility is not attributable to a single demand.
  int demand_id() const { return demand_id_; }

 private:
  int demand_id_;
};

// A search budget ran out before any feasible design was found.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Stored data disagrees with what can be recomputed from it, or the
// failure simulation found an unrecoverable protected demand.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class SecurityViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncopt

#endif  // NCOPT_ERRORS_HPP_
