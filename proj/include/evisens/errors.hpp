#pragma once

#include <stdexcept>
#include <string>

namespace evisens {

// Process exit codes used by the CLI: 2 config/schema, 3 data/format, 4 numerical.
class error : public std::runtime_error {
 public:
  error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Bad arguments, malformed configuration, schema violations.
class input_error : public error {
 public:
  explicit input_error(const std::string& msg) : error(msg, 2) {}
};

/// On-disk file format problems (manifest, CSV, target files).
class format_error : public error {
 public:
  explicit format_error(const std::string& msg) : error(msg, 3) {}
};

/// Inconsistent data: sample/prior mismatch, weight pathologies.
class data_error : public error {
 public:
  explicit data_error(const std::string& msg) : error(msg, 3) {}
};

class degenerate_weights_error : public data_error {
 public:
  explicit degenerate_weights_error(const std::string& msg) : data_error(msg) {}
};

class disjoint_support_error : public data_error {
 public:
  explicit disjoint_support_error(const std::string& msg) : data_error(msg) {}
};

/// Numerical failures: fits that cannot proceed, failed initialisation.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& msg) : error(msg, 4) {}
};

class fit_error : public numeric_error {
 public:
  explicit fit_error(const std::string& msg) : numeric_error(msg) {}
};

}  // namespace evisens
