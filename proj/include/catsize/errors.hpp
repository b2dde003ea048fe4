#ifndef CATSIZE_ERRORS_HPP
#define CATSIZE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catsize {

// Base class for every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- state-engine errors ----------------------------------------------

struct DimensionMismatch : Error {
  using Error::Error;
};

struct OccupancyViolation : Error {
  using Error::Error;
};

struct BasisMismatch : Error {
  using Error::Error;
};

struct ZeroNorm : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct UnsupportedStatistics : Error {
  using Error::Error;
};

// ---- estimator errors --------------------------------------------------

struct NonpositiveV0 : Error {
  using Error::Error;
};

struct UnknownMaterial : Error {
  using Error::Error;
};

struct RatioOutOfRange : Error {
  using Error::Error;
};

struct NonpositiveDuration : Error {
  using Error::Error;
};

// ---- composite errors --------------------------------------------------

struct GapRatioOutOfRange : Error {
  using Error::Error;
};

struct ModelMismatch : Error {
  using Error::Error;
};

struct OverlapOutOfRange : Error {
  using Error::Error;
};

struct InapplicableGrouping : Error {
  using Error::Error;
};

// ---- scenario / parse errors -------------------------------------------
// These indicate a problem with user-supplied input files and map to CLI
// exit code 2; everything above maps to exit code 3.

struct ScenarioError : Error {
  using Error::Error;
};

struct SyntaxError : ScenarioError {
  SyntaxError(int line_, const std::string& what_)
      : ScenarioError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

struct MissingField : ScenarioError {
  explicit MissingField(const std::string& path_, int line_ = 0)
      : ScenarioError(line_ > 0
                          ? "line " + std::to_string(line_) + ": missing required field '" + path_ + "'"
                          : "missing required field '" + path_ + "'"),
        path(path_),
        line(line_) {}
  std::string path;
  int line;
};

struct InvalidValue : ScenarioError {
  InvalidValue(const std::string& path_, const std::string& reason_, int line_ = 0)
      : ScenarioError(line_ > 0 ? "line " + std::to_string(line_) + ": " + path_ + ": " + reason_
                                : path_ + ": " + reason_),
        path(path_),
        reason(reason_),
        line(line_) {}
  std::string path;
  std::string reason;
  int line;
};

struct UnknownScenarioKind : ScenarioError {
  using ScenarioError::ScenarioError;
};

}  // namespace catsize

#endif  // CATSIZE_ERRORS_HPP
