#pragma once

#include <stdexcept>
#include <string>

namespace hypdom {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something invalid. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class PolyhedronError : public InputError {
 public:
  enum class Kind { empty, short_face, unknown_vertex, repeated_vertex, unused_vertex, non_manifold, orientation, euler, disconnected };
  PolyhedronError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class SchemeError : public InputError {
 public:
  enum class Kind { unknown_face, self_paired, coverage, generator, length_mismatch, not_bijective, orientation, twist };
  SchemeError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class PartitionError : public InputError {
 public:
  enum class Kind { not_partition, class_size };
  PartitionError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ClassCountError : public InputError {
 public:
  enum class Kind { parity, non_positive };
  ClassCountError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class GeometryError : public InputError {
 public:
  enum class Kind { off_sphere, degenerate, singular, unrealizable, unknown_letter, missing_vertex };
  GeometryError(Kind kind, const std::string& what, std::string vertex = {})
      : InputError(what), kind_(kind), vertex_(std::move(vertex)) {}
  Kind kind() const { return kind_; }
  // Offending vertex id for unrealizable correspondences.
  const std::string& vertex() const { return vertex_; }

 private:
  Kind kind_;
  std::string vertex_;
};

// A configured size guard tripped (circuit cap, elimination dimension cap).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed. Exit code 3 in the CLI.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypdom
