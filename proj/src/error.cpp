#include "gfchordal/error.hpp"

namespace gfc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_order: return "unsupported-order";
    case Errc::too_many_points: return "too-many-points";
    case Errc::odd_characteristic: return "odd-characteristic";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::unknown_label: return "unknown-label";
    case Errc::rank_out_of_range: return "rank-out-of-range";
    case Errc::not_a_flat: return "not-a-flat";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::not_representable_amalgam: return "not-representable-amalgam";
    case Errc::too_large: return "too-large";
    case Errc::malformed_document: return "malformed-document";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace gfc
