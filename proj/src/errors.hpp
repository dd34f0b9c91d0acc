#pragma once
#include <stdexcept>
#include <string>

namespace kg {

enum class Errc {
  parse,
  duplicate_id,
  unknown_vertex,
  unknown_edge,
  not_composable,
  degree_out_of_range,
  bad_pair,
  not_rank_one,
  not_rank_two,
  not_saturated_hereditary,
  quotient_empty,
  too_large,
  not_validated,
  bad_argument,
  no_witness,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace kg
