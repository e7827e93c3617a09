#pragma once

#include <stdexcept>
#include <string>

namespace kurlab {

// Caller-supplied data is malformed (bad token, foreign letter, invalid space ...).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (enumeration limit, monoid size, ground size ...).
class limit_error : public std::runtime_error {
public:
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A self-check that must hold by construction failed.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kurlab
