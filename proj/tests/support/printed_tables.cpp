#include "printed_tables.hpp"

#include <stdexcept>
#include <string>

namespace gecstrat::testing {
namespace {

constexpr PrintedRow kSystemRows[] = {
    {"GPT-2", "zero-shot", "A", {70, 3944, 2878}, .0174, .0237, .0184},
    {"GPT-2", "zero-shot", "B", {45, 5204, 2453}, .0086, .018, .0096},
    {"GPT-2", "zero-shot", "C", {28, 4860, 1058}, .0057, .0258, .0068},
    {"GPT-2", "zero-shot", "all", {143, 14008, 6389}, .0101, .0219, .0113},
    {"GPT-2", "1-shot", "A", {86, 3447, 2862}, .0243, .0292, .0252},
    {"GPT-2", "1-shot", "B", {58, 4240, 2440}, .0135, .0232, .0147},
    {"GPT-2", "1-shot", "C", {28, 3730, 1058}, .0075, .0258, .0087},
    {"GPT-2", "1-shot", "all", {172, 11417, 6360}, .0148, .0263, .0163},
    {"GPT-2", "2-shot", "A", {103, 4175, 2845}, .0241, .0349, .0257},
    {"GPT-2", "2-shot", "B", {69, 5442, 2429}, .0125, .0276, .0141},
    {"GPT-2", "2-shot", "C", {30, 4905, 1056}, .0061, .0276, .0072},
    {"GPT-2", "2-shot", "all", {202, 14522, 6330}, .0137, .0309, .0154},
    {"GPT-2", "3-shot", "A", {140, 4445, 2808}, .0305, .0475, .0329},
    {"GPT-2", "3-shot", "B", {95, 5710, 2403}, .0164, .038, .0185},
    {"GPT-2", "3-shot", "C", {38, 4979, 1048}, .0076, .035, .009},
    {"GPT-2", "3-shot", "all", {273, 15134, 6259}, .0177, .0418, .02},
    {"GPT-2", "4-shot", "A", {133, 4347, 2815}, .0297, .0451, .0319},
    {"GPT-2", "4-shot", "B", {84, 5422, 2414}, .0153, .0336, .0171},
    {"GPT-2", "4-shot", "C", {31, 4790, 1055}, .0064, .0285, .0076},
    {"GPT-2", "4-shot", "all", {248, 14559, 6284}, .0167, .038, .0189},

    {"GPT-3.5", "zero-shot", "A", {1203, 3770, 1740}, .2419, .4088, .2634},
    {"GPT-3.5", "zero-shot", "B", {940, 4693, 1556}, .1669, .3766, .1878},
    {"GPT-3.5", "zero-shot", "C", {407, 4183, 677}, .0887, .3755, .1047},
    {"GPT-3.5", "zero-shot", "all", {2550, 12646, 3973}, .1678, .3909, .1894},
    {"GPT-3.5", "1-shot", "A", {1300, 3086, 1643}, .2964, .4417, .3173},
    {"GPT-3.5", "1-shot", "B", {1068, 3562, 1428}, .2307, .4279, .2541},
    {"GPT-3.5", "1-shot", "C", {472, 3086, 612}, .1327, .4354, .1541},
    {"GPT-3.5", "1-shot", "all", {2840, 9734, 3683}, .2259, .4354, .2499},
    {"GPT-3.5", "2-shot", "A", {1443, 2983, 1500}, .326, .4903, .3494},
    {"GPT-3.5", "2-shot", "B", {1116, 3157, 1380}, .2612, .4471, .2849},
    {"GPT-3.5", "2-shot", "C", {486, 2592, 598}, .1579, .4483, .1814},
    {"GPT-3.5", "2-shot", "all", {3045, 8732, 3478}, .2586, .4668, .2839},
    {"GPT-3.5", "3-shot", "A", {1477, 2646, 1466}, .3582, .5019, .38},
    {"GPT-3.5", "3-shot", "B", {1114, 3164, 1382}, .2604, .4463, .2841},
    {"GPT-3.5", "3-shot", "C", {479, 2416, 605}, .1655, .4419, .1891},
    {"GPT-3.5", "3-shot", "all", {3070, 8226, 3453}, .2718, .4706, .2969},
    {"GPT-3.5", "4-shot", "A", {1330, 2328, 1613}, .3636, .4519, .3784},
    {"GPT-3.5", "4-shot", "B", {1089, 2424, 1407}, .31, .4363, .329},
    {"GPT-3.5", "4-shot", "C", {457, 1870, 627}, .1964, .4216, .2199},
    {"GPT-3.5", "4-shot", "all", {2876, 6622, 3647}, .3028, .4409, .323},

    {"FT GPT-2", "zero-shot", "A", {1118, 1479, 1830}, .4305, .3792, .4192},
    {"FT GPT-2", "zero-shot", "B", {928, 1203, 1570}, .4355, .3715, .421},
    {"FT GPT-2", "zero-shot", "C", {383, 792, 703}, .326, .3527, .331},
    {"FT GPT-2", "zero-shot", "all", {2429, 3474, 4103}, .4115, .3719, .4029},
    {"FT GPT-2", "1-shot", "A", {1127, 1668, 1821}, .4032, .3823, .3989},
    {"FT GPT-2", "1-shot", "B", {925, 1325, 1573}, .4111, .3703, .4022},
    {"FT GPT-2", "1-shot", "C", {382, 913, 704}, .295, .3517, .3048},
    {"FT GPT-2", "1-shot", "all", {2434, 3906, 4098}, .3839, .3726, .3816},
    {"FT GPT-2", "2-shot", "A", {1107, 1700, 1841}, .3944, .3755, .3904},
    {"FT GPT-2", "2-shot", "B", {937, 1359, 1561}, .4081, .3751, .401},
    {"FT GPT-2", "2-shot", "C", {383, 919, 703}, .2942, .3527, .3043},
    {"FT GPT-2", "2-shot", "all", {2427, 3978, 4105}, .3789, .3716, .3774},
    {"FT GPT-2", "3-shot", "A", {1073, 1860, 1875}, .3658, .364, .3655},
    {"FT GPT-2", "3-shot", "B", {874, 1596, 1624}, .3538, .3499, .353},
    {"FT GPT-2", "3-shot", "C", {381, 1168, 705}, .246, .3508, .2616},
    {"FT GPT-2", "3-shot", "all", {2328, 4624, 4204}, .3349, .3564, .339},
    {"FT GPT-2", "4-shot", "A", {1032, 1911, 1916}, .3507, .3501, .3505},
    {"FT GPT-2", "4-shot", "B", {818, 1815, 1680}, .3107, .3275, .3139},
    {"FT GPT-2", "4-shot", "C", {359, 1310, 727}, .2151, .3306, .2313},
    {"FT GPT-2", "4-shot", "all", {2209, 5036, 4323}, .3049, .3382, .311},

    {"gector", "-", "A", {1046, 632, 2054}, .6234, .3374, .533},
    {"gector", "-", "B", {785, 458, 1836}, .6315, .2995, .5169},
    {"gector", "-", "C", {315, 208, 845}, .6023, .2716, .4843},
    {"gector", "-", "all", {2146, 1298, 4735}, .6231, .3119, .5194},
    {"t5", "-", "A", {1338, 741, 1762}, .6436, .4316, .586},
    {"t5", "-", "B", {1018, 620, 1603}, .6215, .3884, .5549},
    {"t5", "-", "C", {377, 351, 783}, .5179, .325, .4629},
    {"t5", "-", "all", {2733, 1712, 4148}, .6148, .3972, .5541},
};

constexpr PrintedMultiBeta kMultiBetaRows[] = {
    {"FT GPT-2", "zero-shot", "A", .4192, .4032, .3885},
    {"FT GPT-2", "zero-shot", "B", .4210, .4010, .3827},
    {"FT GPT-2", "zero-shot", "C", .3310, .3388, .3470},
    {"GPT-3.5", "4-shot", "A", .3784, .4030, .4310},
    {"GPT-3.5", "4-shot", "B", .3291, .3625, .4034},
    {"GPT-3.5", "4-shot", "C", .2199, .2680, .3430},
};

constexpr PrintedMultiBeta kMultiBetaAllRows[] = {
    {"FT GPT-2", "zero-shot", "all", .3907, .4029, .3792},
    {"GPT-3.5", "4-shot", "all", .3590, .3230, .4040},
};

constexpr PrintedLabelRow kLabelRows[] = {
    {"M:PUNCT", "A", {189, 171, 134}, .525, .5851, .536},
    {"M:PUNCT", "B", {203, 132, 133}, .606, .6042, .6056},
    {"M:PUNCT", "C", {95, 96, 80}, .4974, .5429, .5059},
    {"R:VERB", "A", {21, 60, 113}, .2593, .1567, .2293},
    {"R:VERB", "B", {17, 55, 113}, .2361, .1308, .2033},
    {"R:VERB", "C", {6, 43, 51}, .1224, .1053, .1186},
    {"M:PREP", "B", {24, 29, 31}, .4528, .4364, .4494},
    {"M:PREP", "C", {9, 23, 17}, .2812, .3462, .2922},
    {"R:DET", "B", {15, 30, 41}, .3333, .2679, .3178},
    {"R:DET", "C", {7, 12, 23}, .3684, .2333, .3302},
};

}  // namespace

std::span<const PrintedRow> system_rows() { return kSystemRows; }

const PrintedRow& system_row(std::string_view system, std::string_view setting, std::string_view stratum) {
  for (const auto& row : kSystemRows) {
    if (row.system == system && row.setting == setting && row.stratum == stratum) return row;
  }
  throw std::out_of_range("no printed row " + std::string(system) + " " + std::string(setting) + " " +
                          std::string(stratum));
}

std::span<const PrintedMultiBeta> multi_beta_rows() { return kMultiBetaRows; }
std::span<const PrintedMultiBeta> multi_beta_all_rows() { return kMultiBetaAllRows; }
std::span<const PrintedLabelRow> label_rows() { return kLabelRows; }

}  // namespace gecstrat::testing
