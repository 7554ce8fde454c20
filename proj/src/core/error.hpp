#pragma once

#include <stdexcept>
#include <string>

#include "blockprop/blockprop.h"

namespace bp {

// Core error type; the C API maps `code` straight onto bp_status.
class Error : public std::runtime_error {
 public:
  Error(bp_status code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  bp_status code() const { return code_; }

 private:
  bp_status code_;
};

[[noreturn]] inline void throw_error(bp_status code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bp
