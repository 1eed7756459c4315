#pragma once

// Known counts of Schur rings over Z_n for n = 1 ... 400, ten values per row.

#include <array>
#include <cstdint>
#include <optional>

namespace schur {

inline constexpr std::uint32_t reference_table_size = 400;

inline constexpr std::array<std::uint64_t, reference_table_size> reference_omega_values = {
    1, 1, 2, 3, 3, 7, 4, 10, 7, 10,
    4, 32, 6, 13, 21, 37, 5, 42, 6, 47,
    27, 13, 4, 172, 13, 19, 25, 61, 6, 147,
    8, 151, 27, 16, 41, 284, 9, 19, 41, 262,
    8, 188, 8, 61, 140, 13, 4, 1033, 21, 79,
    35, 91, 6, 232, 41, 334, 40, 19, 4, 1103,
    12, 25, 187, 657, 67, 147, 8, 77, 27, 281,
    8, 2311, 12, 28, 185, 90, 53, 284, 8, 1646,
    92, 25, 4, 1397, 60, 25, 41, 334, 8, 1581,
    97, 61, 53, 13, 61, 6719, 12, 128, 177, 563,
    9, 243, 8, 514, 670, 19, 4, 2219, 12, 281,
    61, 2030, 10, 277, 41, 91, 291, 13, 69, 10130,
    21, 37, 55, 119, 58, 2099, 12, 2989, 53, 457,
    8, 1397, 99, 25, 854, 442, 8, 188, 8, 2142,
    27, 25, 81, 21451, 67, 37, 289, 135, 6, 2124,
    12, 496, 238, 360, 81, 2157, 12, 25, 41, 11256,
    53, 1224, 10, 121, 670, 13, 4, 12494, 43, 411,
    283, 119, 6, 284, 353, 3030, 27, 25, 4, 17888,
    18, 658, 81, 334, 100, 366, 69, 61, 1225, 415,
    8, 45694, 14, 37, 1142, 904, 9, 1989, 12, 4973,
    53, 28, 81, 1863, 93, 25, 177, 3256, 79, 8339,
    16, 91, 53, 13, 81, 26202, 125, 37, 82, 2142,
    119, 421, 8, 13299, 2096, 31, 4, 2071, 12, 281,
    839, 514, 8, 3267, 41, 61, 53, 467, 8, 107165,
    20, 128, 345, 179, 450, 380, 153, 658, 27, 558,
    8, 23526, 53, 37, 1051, 14044, 9, 366, 153, 3590,
    275, 25, 4, 12494, 67, 672, 55, 119, 6, 14283,
    16, 2872, 1611, 25, 395, 1397, 12, 25, 369, 19935,
    16, 188, 8, 119, 997, 546, 109, 218905, 31, 457,
    83, 180, 6, 3327, 41, 766, 1063, 19, 81, 24672,
    125, 37, 61, 3027, 133, 2683, 12, 2715, 53, 549,
    8, 20014, 16, 37, 8717, 119, 6, 284, 81, 80768,
    27, 360, 103, 15934, 659, 31, 81, 694, 53, 8339,
    16, 61, 442, 13, 81, 126762, 20, 262, 69, 3275,
    145, 3168, 113, 658, 670, 19, 4, 2157, 12, 4128,
    1949, 13299, 12, 188, 81, 121, 1152, 13, 4, 257731,
    43, 55, 289, 5147, 139, 558, 8, 2030, 373, 679,
    81, 2745, 12, 467, 1464, 334, 133, 20441, 16, 3181,
    79, 25, 4, 319416, 1318, 43, 369, 181, 6, 14253,
    69, 7641, 53, 28, 81, 22162, 18, 37, 1601, 51694,
};

inline std::optional<std::uint64_t> reference_omega(std::uint64_t n) {
    if (n < 1 || n > reference_table_size) return std::nullopt;
    return reference_omega_values[n - 1];
}

}  // namespace schur
