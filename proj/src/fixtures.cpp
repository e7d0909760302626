#include "dit/fixtures.hpp"

namespace dit::fixtures {

Codebook ssex2_codebook()
{
    return Codebook::of({0, 1, 2, 7, 12, 9, 40, 50, 48, 420, 874, 1511, 813, 3987, 8740, 20506,
                         26753, 3244, 22545, 226247, 331136, 166612});
}

CharString ssex2_charstring() { return CharString::parse("0000010100010111110101"); }

SbxorInstance xorsat_example()
{
    return SbxorInstance({BitVector::parse("100"), BitVector::parse("101"), BitVector::parse("110")},
                         BitVector::parse("011"));
}

}  // namespace dit::fixtures
