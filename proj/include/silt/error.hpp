#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace silt {

enum class Errc {
  invalid_surface,
  dangling_slot,
  crossing_arcs,
  inadmissible_face,
  precondition,
  degenerate_arc,
  size_limit,
  model_inconsistency,
  io_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace silt
