#include "twistlcd/reference_examples.hpp"

namespace twistlcd {

const std::vector<ReferenceExample>& reference_examples() {
    static const std::vector<ReferenceExample> examples = {
        {"T41 MDS q=61", Theorem::T41, 61, 12, 2, 1, std::nullopt, {1, 2, 3, 4}, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 11, 13, 14, 21, 29, 32, 40, 47, 48, 50, 60},
         {10, 24, 32, 39, 25, 7, 5, 20, 25, 18, 41, 59},
         {11, 25, 33, 40, 26, 8, 6, 21, 26, 19, 42, 60},
         {22, 25, 33, 40, 26, 8, 6, 21, 26, 19, 42, 60},
         {{22, 25, 33, 40, 26, 8, 6, 21, 26, 19, 42, 60}, {2, 11, 13, 14, 21, 29, 32, 40, 47, 48, 50, 60}},
         11, MdsClass::MDS, true, std::nullopt},

        {"T41 NMDS q=23", Theorem::T41, 23, 11, 2, 1, std::nullopt, {1, 2, 3, 4}, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18},
         {10, 12, 13, 17, 17, 8, 2, 8, 10, 12, 6},
         {11, 13, 14, 18, 18, 9, 3, 9, 11, 13, 7},
         {22, 13, 14, 18, 18, 9, 3, 9, 11, 13, 7},
         {{22, 13, 14, 18, 18, 9, 3, 9, 11, 13, 7}, {2, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}},
         9, MdsClass::NMDS, true, std::nullopt},

        {"T42 MDS q=43", Theorem::T42, 43, 7, 2, 1, 0, {1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1},
         {1, 4, 11, 16, 21, 35, 41},
         {4, 27, 27, 34, 23, 34, 23},
         {5, 28, 28, 35, 24, 35, 24},
         {10, 28, 28, 35, 24, 35, 24},
         {{10, 28, 28, 35, 24, 35, 24}, {2, 4, 11, 16, 21, 35, 41}},
         6, MdsClass::MDS, true, 5},

        {"T42 NMDS q=41", Theorem::T42, 41, 8, 2, 1, 1, {1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1, 1},
         {1, 3, 9, 14, 27, 32, 38, 40},
         {4, 32, 0, 14, 7, 0, 25, 0},
         {5, 33, 1, 15, 8, 1, 26, 1},
         {10, 33, 1, 15, 8, 1, 26, 1},
         {{10, 33, 1, 15, 8, 1, 26, 1}, {2, 3, 9, 14, 27, 32, 38, 40}},
         6, MdsClass::NMDS, true, -2},

        {"T43 MDS q=61", Theorem::T43, 61, 12, 2, 1, std::nullopt, {1, 2, 3, 4},
         {-1, 1, -1, -1, -1, 1, 1, 1, 1, 1, -1, 2},
         {1, 11, 13, 14, 21, 29, 32, 40, 47, 48, 50, 60},
         {10, 24, 32, 39, 25, 7, 5, 20, 25, 18, 41, 59},
         {11, 25, 33, 40, 26, 8, 6, 21, 26, 19, 42, 60},
         {50, 25, 28, 21, 35, 8, 6, 21, 26, 19, 19, 59},
         {{50, 25, 28, 21, 35, 8, 6, 21, 26, 19, 19, 59}, {60, 11, 48, 47, 40, 29, 32, 40, 47, 48, 11, 59}},
         11, MdsClass::MDS, true, std::nullopt},

        {"T43 NMDS q=23", Theorem::T43, 23, 11, 2, 1, std::nullopt, {1, 2, 3, 4},
         {-1, 1, -1, -1, -1, -1, 1, -1, -1, -1, 2},
         {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18},
         {10, 12, 13, 17, 17, 8, 2, 8, 10, 12, 6},
         {11, 13, 14, 18, 18, 9, 3, 9, 11, 13, 7},
         {12, 13, 9, 5, 5, 14, 3, 14, 12, 10, 14},
         {{12, 13, 9, 5, 5, 14, 3, 14, 12, 10, 14}, {22, 2, 20, 19, 17, 15, 9, 11, 10, 7, 13}},
         9, MdsClass::NMDS, true, std::nullopt},

        // Stated with r = 1, although n = 2k+l+r with l = 3 forces r = 2.
        {"T44 MDS q=73", Theorem::T44, 73, 9, 2, 1, 1, {1, 2, 3, 4}, {1, 1, -1, -1, -1, 1, 1, -1, 2},
         {1, 2, 4, 8, 16, 32, 37, 55, 64},
         {10, 50, 44, 54, 15, 70, 51, 56, 15},
         {11, 51, 45, 55, 16, 71, 52, 57, 16},
         {11, 51, 28, 18, 57, 71, 52, 16, 32},
         {{11, 51, 28, 18, 57, 71, 52, 16, 32}, {1, 2, 69, 65, 57, 32, 37, 18, 55}},
         8, MdsClass::MDS, true, 21},

        {"T44 NMDS q=29", Theorem::T44, 29, 7, 2, 1, 0, {1, 1, 1, 1}, {1, -1, -1, 1, 1, -1, 2},
         {1, 7, 16, 20, 23, 24, 25},
         {4, 25, 21, 21, 10, 10, 25},
         {5, 26, 22, 22, 11, 11, 26},
         {5, 3, 7, 22, 11, 18, 23},
         {{5, 3, 7, 22, 11, 18, 23}, {1, 22, 13, 20, 23, 5, 21}},
         5, MdsClass::NMDS, true, 5},
    };
    return examples;
}

}  // namespace twistlcd
