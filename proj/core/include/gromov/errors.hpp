#pragma once

#include <stdexcept>
#include <string>

namespace gromov {

// Base class for every error this library raises on purpose. what() always
// starts with a stable machine-parsable token (the error name), optionally
// followed by offending indices/values.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Metric validation
// ---------------------------------------------------------------------------

class MetricValidationError : public Error {
 public:
  enum class Kind { NonZeroDiagonal, Asymmetric, NegativeEntry, TriangleViolation };

  MetricValidationError(Kind kind, int i, int j = -1, int k = -1)
      : Error(compose(kind, i, j, k)), kind_(kind), i_(i), j_(j), k_(k) {}

  Kind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::NonZeroDiagonal: return "NonZeroDiagonal";
      case Kind::Asymmetric: return "Asymmetric";
      case Kind::NegativeEntry: return "NegativeEntry";
      case Kind::TriangleViolation: return "TriangleViolation";
    }
    return "?";
  }

 private:
  static std::string compose(Kind kind, int i, int j, int k) {
    std::string s = kind_name(kind);
    s += ' ';
    s += std::to_string(i);
    if (j >= 0) { s += ' '; s += std::to_string(j); }
    if (k >= 0) { s += ' '; s += std::to_string(k); }
    return s;
  }

  Kind kind_;
  int i_, j_, k_;
};

// ---------------------------------------------------------------------------
// Parameter and shape errors
// ---------------------------------------------------------------------------

class NegativeScaleError : public Error {
 public:
  explicit NegativeScaleError(double t) : Error("NegativeScale " + std::to_string(t)) {}
};

class NonPositiveConstantError : public Error {
 public:
  explicit NonPositiveConstantError(double c) : Error("NonPositiveConstant " + std::to_string(c)) {}
};

class SizeOverflowError : public Error {
 public:
  using Error::Error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class NonBijectivePairingError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Caps
// ---------------------------------------------------------------------------

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceededError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Files and configuration
// ---------------------------------------------------------------------------

class FileError : public Error {
 public:
  explicit FileError(const std::string& path, const std::string& detail = "")
      : Error("FileNotFound " + path + (detail.empty() ? "" : (" (" + detail + ")"))), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& key, const std::string& detail = "")
      : Error("ConfigInvalid " + key + (detail.empty() ? "" : (": " + detail))), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace gromov
