#pragma once

#include "dit/bits.hpp"
#include "dit/sbxor.hpp"
#include "dit/subset_problems.hpp"

namespace dit::fixtures {

/// 22-entry scale-free codebook and the characteristic string used with it.
Codebook ssex2_codebook();
CharString ssex2_charstring();

/// Keys 100, 101, 110 with target 011.
SbxorInstance xorsat_example();

}  // namespace dit::fixtures
