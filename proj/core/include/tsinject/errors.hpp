#pragma once

#include <stdexcept>
#include <string>

namespace tsinject {

// Common base so callers can catch the library's domain errors separately
// from std exceptions raised by programming mistakes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- series encoding / preprocessing ---
class MalformedEncoding : public Error {
 public:
  using Error::Error;
};
class InvalidTarget : public Error {
 public:
  using Error::Error;
};

// --- benchmark generation / persistence ---
class InsufficientDistractors : public Error {
 public:
  using Error::Error;
};
class IoFailure : public Error {
 public:
  using Error::Error;
};
class SchemaViolation : public Error {
 public:
  using Error::Error;
};

// --- endpoint transport ---
class TransportFailure : public Error {
 public:
  using Error::Error;
};
class EndpointRefused : public Error {
 public:
  using Error::Error;
};
class DeadlineExceeded : public Error {
 public:
  using Error::Error;
};
class NoScriptMatch : public Error {
 public:
  using Error::Error;
};

// --- trace shaping / injection ---
class MissingContext : public Error {
 public:
  using Error::Error;
};
class EmptyKnowledge : public Error {
 public:
  using Error::Error;
};
class EmptyTrace : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class Unparseable : public Error {
 public:
  using Error::Error;
};

// Raised by the single-item pipeline when a step fails: carries the stage
// name ("elicit", "draft", ...) plus the underlying error text.
class PipelineStageError : public Error {
 public:
  PipelineStageError(const std::string& stage, const std::string& inner)
      : Error(stage + ": " + inner), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// --- policy optimization ---
class DomainMismatch : public Error {
 public:
  using Error::Error;
};
class KinkProximity : public Error {
 public:
  using Error::Error;
};

// --- evaluation arithmetic ---
class ZeroBaseline : public Error {
 public:
  using Error::Error;
};
class NonPositiveGain : public Error {
 public:
  using Error::Error;
};
class InsufficientDemos : public Error {
 public:
  using Error::Error;
};

// --- command line ---
class UsageError : public Error {
 public:
  using Error::Error;
};
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsinject
