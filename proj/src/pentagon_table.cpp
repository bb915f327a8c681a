#include <array>
#include <vector>

#include "coprime/constructions.hpp"

namespace coprime {

// 70 layers of the stacked pentagon; layer i permutes 6i-5..6i-1 and
// the whole block repeats with period 420.
const std::vector<std::array<int, 5>>& pentagon_table() {
  static const std::vector<std::array<int, 5>> rows = {
    {3, 2, 1, 4, 5}, {7, 11, 10, 9, 8}, {15, 16, 13, 14, 17}, {19, 21, 22, 23, 20}, {27, 26, 25, 28, 29},
    {31, 35, 34, 33, 32}, {39, 38, 37, 40, 41}, {43, 45, 46, 47, 44}, {51, 52, 49, 50, 53}, {55, 59, 58, 57, 56},
    {63, 62, 61, 64, 65}, {67, 71, 70, 69, 68}, {75, 74, 73, 76, 77}, {79, 83, 82, 81, 80}, {87, 86, 85, 88, 89},
    {91, 95, 94, 93, 92}, {101, 98, 97, 100, 99}, {105, 107, 106, 103, 104}, {113, 110, 109, 112, 111}, {115, 119, 118, 117, 116},
    {123, 122, 121, 124, 125}, {127, 131, 130, 129, 128}, {135, 134, 133, 136, 137}, {139, 143, 142, 141, 140}, {147, 146, 145, 148, 149},
    {151, 153, 154, 155, 152}, {159, 160, 157, 158, 161}, {163, 167, 166, 165, 164}, {171, 170, 169, 172, 173}, {175, 179, 178, 177, 176},
    {183, 184, 181, 182, 185}, {187, 189, 190, 191, 188}, {195, 194, 193, 196, 197}, {199, 203, 202, 201, 200}, {207, 206, 205, 208, 209},
    {211, 213, 214, 215, 212}, {219, 220, 217, 218, 221}, {223, 227, 226, 225, 224}, {231, 230, 229, 232, 233}, {235, 239, 238, 237, 236},
    {243, 242, 241, 244, 245}, {247, 251, 250, 249, 248}, {255, 254, 253, 256, 257}, {259, 263, 262, 261, 260}, {267, 268, 265, 266, 269},
    {275, 273, 274, 271, 272}, {279, 278, 277, 280, 281}, {287, 285, 286, 283, 284}, {291, 292, 289, 290, 293}, {295, 299, 298, 297, 296},
    {303, 302, 301, 304, 305}, {307, 311, 310, 309, 308}, {315, 314, 313, 316, 317}, {319, 323, 322, 321, 320}, {327, 326, 325, 328, 329},
    {331, 335, 334, 333, 332}, {339, 338, 337, 340, 341}, {343, 345, 346, 347, 344}, {351, 352, 349, 350, 353}, {355, 357, 358, 359, 356},
    {363, 362, 361, 364, 365}, {367, 371, 370, 369, 368}, {375, 374, 373, 376, 377}, {379, 383, 382, 381, 380}, {387, 386, 385, 388, 389},
    {391, 395, 394, 393, 392}, {399, 398, 397, 400, 401}, {403, 405, 406, 407, 404}, {411, 412, 409, 410, 413}, {415, 419, 418, 417, 416},
  };
  return rows;
}

// FNV-1a over the row-major entries
std::uint64_t pentagon_table_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  for (auto& row : pentagon_table())
    for (int x : row) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
  return h;
}

std::uint64_t pentagon_table_expected_checksum() { return 0x95458845327650b5ull; }

}  // namespace coprime
