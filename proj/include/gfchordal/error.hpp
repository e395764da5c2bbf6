#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfc {

enum class Errc {
  unsupported_order,
  too_many_points,
  odd_characteristic,
  index_out_of_range,
  unknown_label,
  rank_out_of_range,
  not_a_flat,
  precondition_violation,
  not_representable_amalgam,
  too_large,
  malformed_document,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gfc
