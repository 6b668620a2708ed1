#pragma once

#include <string>
#include <vector>

namespace negacorr::fixtures {

// Period-10 pair where s2 is the 3-decimation of s1 yet the OACF profiles
// differ.
inline const std::string kPeriod10S1 = "1110100011";
inline const std::string kPeriod10S2 = "1001101110";
inline const std::vector<int> kPeriod10S1Oacf{10, 0, -2, -4, 2, 0, -2, 4, 2, 0};
inline const std::vector<int> kPeriod10S2Oacf{10, 0, -6, 0, 6, 0, -6, 0, 6, 0};

// Period-31 sequence s, its doubling u, the 3-decimation of u, and the
// nega-decimated s' = first half of that decimation.
inline const std::string kPeriod31S = "0111101010001001110000011001011";
inline const std::string kPeriod31U =
    "0111101010001001110000011001011"
    "1000010101110110001111100110100";
inline const std::string kPeriod31D3U =
    "0110110011101011010101100010000"
    "1001001100010100101010011101111";
inline const std::string kPeriod31SPrime = "0110110011101011010101100010000";

inline const std::vector<int> kPeriod31SOacf{31, 1,  -1, -7, -1, -7, -1, 5,  -1, 1, -9,
                                             5,  3,  5,  7,  9,  -9, -7, -5, -3, -5, 9,
                                             -1, 1,  -5, 1,  7,  1,  7,  1,  -1};
inline const std::vector<int> kPeriod31SPrimeOacf{31, -7, -1, 1,  3,  9,  -5, 9,  -5, 1, -1,
                                                  1,  7,  1,  -5, -7, 7,  5,  -1, -7, -1, 1,
                                                  -1, 5,  -9, 5,  -9, -3, -1, 1,  7};

}  // namespace negacorr::fixtures
