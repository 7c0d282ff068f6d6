#pragma once

#include <cstdint>

#include "ld/graph.hpp"

namespace ld::detail {

// Fast-path LD test without argument validation (see code.cpp).
bool is_ld_mask_unchecked(const graph& g, std::uint64_t s);

}  // namespace ld::detail
