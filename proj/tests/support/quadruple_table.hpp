#pragma once

// The 63 canonical quadruples, transcribed by hand in ascending order.

#include <array>
#include <cstdint>

namespace oracle {

inline constexpr std::array<std::array<std::uint64_t, 4>, 63> kQuadrupleTable{{
    {1, 2, 3, 17},   {1, 2, 4, 17},   {1, 2, 5, 25},   {1, 2, 9, 18},    {1, 2, 16, 17},  {1, 3, 9, 27},
    {1, 3, 9, 81},   {1, 4, 5, 20},   {1, 4, 5, 25},   {1, 4, 16, 17},   {1, 5, 6, 25},   {1, 5, 24, 25},
    {1, 15, 16, 17}, {2, 3, 4, 17},   {2, 3, 6, 18},   {2, 3, 6, 36},    {2, 3, 9, 18},   {2, 3, 9, 27},
    {2, 3, 9, 81},   {2, 4, 5, 20},   {2, 4, 5, 25},   {2, 4, 8, 32},    {2, 4, 8, 64},   {2, 4, 16, 17},
    {2, 4, 16, 32},  {2, 4, 16, 64},  {2, 4, 16, 256}, {3, 4, 5, 20},    {3, 4, 5, 25},   {3, 4, 9, 27},
    {3, 4, 9, 36},   {3, 4, 9, 81},   {3, 4, 12, 36},  {3, 4, 16, 17},   {3, 8, 9, 24},   {3, 8, 9, 27},
    {3, 8, 9, 64},   {3, 8, 9, 72},   {3, 8, 9, 81},   {3, 9, 10, 27},   {3, 9, 10, 30},  {3, 9, 10, 81},
    {3, 9, 26, 27},  {3, 9, 27, 28},  {3, 9, 27, 81},  {3, 9, 80, 81},   {4, 5, 6, 20},   {4, 5, 6, 24},
    {4, 5, 6, 25},   {4, 5, 16, 17},  {4, 5, 16, 20},  {4, 5, 16, 25},   {4, 5, 19, 20},  {4, 5, 20, 21},
    {4, 5, 20, 25},  {4, 5, 24, 25},  {4, 8, 16, 64},  {4, 15, 16, 17},  {4, 16, 17, 18}, {5, 6, 7, 25},
    {5, 6, 24, 25},  {5, 23, 24, 25}, {14, 15, 16, 17},
}};

}  // namespace oracle
