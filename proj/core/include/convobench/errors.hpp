#pragma once

#include <stdexcept>
#include <string>

namespace convobench {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema documents, leaf lookups, invariant breaches.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A raw value that cannot be brought into canonical form for its kind.
class NormalizeError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

// Transcript alternation / indexing violations.
class TranscriptError : public Error {
 public:
  using Error::Error;
};

// Run-file I/O and corruption.
class PersistError : public Error {
 public:
  using Error::Error;
};

// Reply envelopes that cannot be extracted from model output.
class EnvelopeParseError : public Error {
 public:
  using Error::Error;
};

// Unresolvable template placeholders, missing template files.
class TemplateError : public Error {
 public:
  using Error::Error;
};

// Batch/CLI configuration problems; these abort before any run starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Chat-generation failures. `retryable()` drives the retry wrapper: only
// rate limits and transient transport/5xx-class failures are retried.
class BackendError : public Error {
 public:
  enum class Kind {
    Timeout,
    RateLimited,
    Transport,
    Status,        // non-success, non-retryable HTTP status
    EmptyReply,
    BadRequest,
    Exhausted,     // mock queue ran out
  };

  BackendError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

  bool retryable() const {
    return kind_ == Kind::Timeout || kind_ == Kind::RateLimited || kind_ == Kind::Transport;
  }

 private:
  Kind kind_;
};

// The agent exhausted its parse-retry budget for one turn.
class ParseFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace convobench
