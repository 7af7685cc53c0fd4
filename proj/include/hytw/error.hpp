#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hytw {

// All domain errors carry a stable machine-readable name (the CLI prints it
// and maps it to exit code 1) plus a human message.
class error : public std::runtime_error {
 public:
  error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(std::string name, const std::string& what) {
  throw error(std::move(name), what);
}

}  // namespace hytw
