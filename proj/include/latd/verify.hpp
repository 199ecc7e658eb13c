#pragma once

#include <cstdint>
#include <ostream>

// Small-instance checks with independent oracles: the worked degree-2
// example, the closed-form volume against numeric determinants, exhaustive
// set equality between the generator image and the code-formula definition,
// noiseless decode round trips, and enumeration CVP against box search.
// Each prints a short report and returns pass/fail.
namespace latd {

bool verify_example1(std::ostream& out);
bool verify_volume_identity(std::ostream& out, int configs = 50,
                            uint64_t seed = 0x5eed0001);
bool verify_set_equality(std::ostream& out);
bool verify_noiseless_roundtrip(std::ostream& out, int trials_per_config = 1000,
                                uint64_t seed = 0x5eed0002);
bool verify_cvp_bruteforce(std::ostream& out, int trials = 10000,
                           uint64_t seed = 0x5eed0003);
bool verify_all(std::ostream& out);

}  // namespace latd
