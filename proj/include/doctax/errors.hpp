#ifndef DOCTAX_ERRORS_HPP
#define DOCTAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace doctax {

// Base for all library errors. `kind` is the stable machine-readable code
// used by the CLI ("ERROR <code>: <message>").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Input / IO problems (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

// Data / semantic problems (CLI exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

struct EmptyInput : InputError {
  explicit EmptyInput(const std::string& m = "input has no non-whitespace characters")
      : InputError("EmptyInput", m) {}
};

struct CorruptFile : InputError {
  explicit CorruptFile(const std::string& m) : InputError("CorruptFile", m) {}
};

struct VersionMismatch : InputError {
  explicit VersionMismatch(const std::string& m) : InputError("VersionMismatch", m) {}
};

struct EmptyGazetteer : InputError {
  explicit EmptyGazetteer(const std::string& m) : InputError("EmptyGazetteer", m) {}
};

struct RootPageMissing : InputError {
  explicit RootPageMissing(const std::string& m) : InputError("RootPageMissing", m) {}
};

struct WindowTooSmall : DataError {
  explicit WindowTooSmall(const std::string& m = "co-occurrence window must be > 2")
      : DataError("WindowTooSmall", m) {}
};

struct UnknownTerm : DataError {
  explicit UnknownTerm(const std::string& term)
      : DataError("UnknownTerm", "term never occurred in corpus: " + term) {}
};

struct EmptyUnit : DataError {
  explicit EmptyUnit(const std::string& m = "unit has no content words")
      : DataError("EmptyUnit", m) {}
};

struct DegenerateClass : DataError {
  explicit DegenerateClass(const std::string& m) : DataError("DegenerateClass", m) {}
};

struct SchemaMismatch : DataError {
  explicit SchemaMismatch(const std::string& m) : DataError("SchemaMismatch", m) {}
};

struct ClassTooSmall : DataError {
  explicit ClassTooSmall(const std::string& m) : DataError("ClassTooSmall", m) {}
};

struct InvalidCounts : DataError {
  explicit InvalidCounts(const std::string& m) : DataError("InvalidCounts", m) {}
};

}  // namespace doctax

#endif
