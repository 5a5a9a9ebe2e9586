// paper_fixture.hpp
// Published table values, transcribed as printed, used by the audit.
// Bump paper_fixture_version whenever a transcription changes.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace twinprime::paper {

inline constexpr std::string_view paper_fixture_version = "1";

struct Table1Row {
    std::uint64_t x;
    std::uint64_t pi_x;
    std::uint64_t pi2_x;
    std::uint64_t pi_pi_x;
    double ratio;  // printed to 3 decimals ("1" where the ratio is exactly one)
};

struct Table2Row {
    std::uint64_t x;
    double a_bound;
    std::uint64_t pi2_x;
    double b_bound;
    bool b_decimal_slip;  // printed with '.' where ',' (thousands) was meant
};

struct Table3Row {
    std::uint64_t x;
    double h;  // 6 decimals
    std::uint64_t pi2_x;
    std::uint64_t pi2_star;
    std::uint64_t abs_delta;
    double rel_error;  // 4 decimals
};

inline constexpr std::array<Table1Row, 28> table1{{
    {25, 9, 4, 4, 1.0},
    {50, 15, 6, 6, 1.0},
    {75, 21, 8, 8, 1.0},
    {125, 30, 10, 10, 1.0},
    {150, 35, 12, 11, 1.091},
    {200, 46, 15, 14, 1.071},
    {300, 62, 19, 18, 1.056},
    {400, 78, 21, 21, 1.0},
    {500, 95, 24, 24, 1.0},
    {700, 125, 30, 30, 1.0},
    {900, 154, 35, 36, 0.972},
    {1350, 217, 46, 47, 0.979},
    {1500, 239, 49, 52, 0.942},
    {2000, 303, 60, 62, 0.968},
    {3000, 430, 81, 82, 0.988},
    {4000, 550, 102, 101, 1.010},
    {5000, 669, 123, 121, 1.016},
    {10000, 1226, 201, 201, 1.0},
    {15000, 1754, 268, 273, 0.982},
    {20000, 2262, 338, 335, 1.009},
    {25000, 2762, 403, 402, 1.002},
    {30000, 3245, 462, 457, 1.011},
    {40000, 4203, 585, 575, 1.017},
    {50000, 5133, 697, 685, 1.018},
    {100000, 9592, 1224, 1184, 1.034},
    {200000, 17984, 2159, 2062, 1.047},
    {500000, 41538, 4343, 4343, 1.035},
    {1000000, 78498, 7902, 7902, 1.033},
}};

inline constexpr std::array<Table2Row, 15> table2{{
    {50, 3, 6, 11, false},
    {125, 4, 10, 18, false},
    {200, 5, 15, 23, false},
    {300, 7, 19, 31, false},
    {400, 8, 21, 36, false},
    {500, 9, 24, 42, false},
    {700, 11, 30, 53, false},
    {1000, 14, 35, 67, false},
    {5000, 44, 123, 219, false},
    {10000, 73, 201, 372, false},
    {25000, 148, 403, 762, false},
    {50000, 256, 697, 1328, false},
    {100000, 445, 1224, 2331, false},
    {500000, 1700, 4494, 8853, false},
    {1000000, 2983, 8164, 15.887, true},
}};

inline constexpr std::array<Table3Row, 19> table3{{
    {50, 1.333336, 6, 6, 0, 0.0},
    {150, 1.346938, 11, 11, 0, 0.0},
    {500, 1.329639, 24, 24, 0, 0.0},
    {1500, 1.286742, 49, 50, 1, 0.0204},
    {2000, 1.307061, 60, 61, 1, 0.0167},
    {3000, 1.314223, 81, 82, 1, 0.0123},
    {4000, 1.348760, 102, 100, 2, 0.0196},
    {5000, 1.374114, 123, 119, 4, 0.0325},
    {10000, 1.330737, 201, 200, 1, 0.0050},
    {15000, 1.306672, 268, 274, 6, 0.0224},
    {20000, 1.321178, 338, 339, 1, 0.0030},
    {25000, 1.320680, 403, 404, 1, 0.0025},
    {30000, 1.316236, 462, 465, 3, 0.0065},
    {40000, 1.324637, 585, 585, 0, 0.0},
    {50000, 1.322696, 697, 698, 1, 0.0014},
    {100000, 1.330341, 1224, 1219, 5, 0.0041},
    {200000, 1.335088, 2159, 2143, 16, 0.0074},
    {500000, 1.302302, 4494, 4573, 79, 0.0176},
    {1000000, 1.342908, 8164, 8165, 1, 0.0001},
}};

// Large-x spot check quoted in the text.
inline constexpr std::uint64_t spot_x = 37'000'000;
inline constexpr std::uint64_t spot_pi2 = 183'728;
inline constexpr std::uint64_t spot_pi2_star = 183'463;
inline constexpr double spot_rel_error = 0.0014;

template <class Rows>
constexpr auto checkpoints_of(const Rows& rows) {
    std::array<std::uint64_t, std::tuple_size_v<Rows>> xs{};
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = rows[i].x;
    return xs;
}

inline constexpr auto table1_checkpoints = checkpoints_of(table1);
inline constexpr auto table2_checkpoints = checkpoints_of(table2);
inline constexpr auto table3_checkpoints = checkpoints_of(table3);

}  // namespace twinprime::paper
