#pragma once

#include <vector>

// Power-basis coefficients of the first few T_n and U_n, transcribed from
// the classical tables; index k holds the coefficient of x^k.  These anchor
// the recurrence-generated values against an independent source.
namespace cheb_tests {

inline const std::vector<std::vector<long>> classic_t = {
    {1},
    {0, 1},
    {-1, 0, 2},
    {0, -3, 0, 4},
    {1, 0, -8, 0, 8},
    {0, 5, 0, -20, 0, 16},
    {-1, 0, 18, 0, -48, 0, 32},
};

inline const std::vector<std::vector<long>> classic_u = {
    {1},
    {0, 2},
    {-1, 0, 4},
    {0, -4, 0, 8},
    {1, 0, -12, 0, 16},
    {0, 6, 0, -32, 0, 32},
};

}  // namespace cheb_tests
