#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "closetlab/closet.hpp"
#include "closetlab/order.hpp"

namespace closetlab {

// Orders: CHAIN3, CHAIN4, ANTICHAIN2, B2, M3, N5.
const std::vector<std::string>& order_fixture_names();
Qoset order_fixture(std::string_view name);

// Enriched closets, all over Alexandrov brackets: CHAIN3_SHIFT, CHAIN3_RANEY,
// M3_RANEY, B2_RANEY, N5_RANEY, CHAIN3_PHI_ID, ANTICHAIN2_K.
const std::vector<std::string>& closet_fixture_names();
EnrichedCloset closet_fixture(std::string_view name);

}  // namespace closetlab
