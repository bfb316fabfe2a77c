// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beliefbank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (malformed template, missing
/// statement in an assignment, broken mutex pairing).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Bad parameters or options: lambda <= 0, zero flip budget, empty grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A problem is too large for the exact solver.
class SizingError : public Error {
 public:
  SizingError(std::size_t variables, std::size_t cap)
      : Error("exact solver refuses " + std::to_string(variables) +
              " variables (cap " + std::to_string(cap) +
              "); use solve_local for problems of this size"),
        variables_(variables),
        cap_(cap) {}

  std::size_t variables() const noexcept { return variables_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t variables_;
  std::size_t cap_;
};

/// Input data does not match its file schema.
class SchemaError : public Error {
 public:
  SchemaError(std::string file, std::size_t record, std::string field,
              const std::string& message)
      : Error(file + ": record " + std::to_string(record) + ", field '" +
              field + "': " + message),
        file_(std::move(file)),
        record_(record),
        field_(std::move(field)) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t record() const noexcept { return record_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string file_;
  std::size_t record_;
  std::string field_;
};

/// Lookup of a statement the component does not know about.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace beliefbank
