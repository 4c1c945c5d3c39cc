#include "frarl/env.hpp"

namespace frarl {

// Default map assets. Coordinates are [row, col]; walls join adjacent cells.

const std::string& office_default_json() {
    static const std::string doc = R"json({
  "width": 12,
  "height": 9,
  "initial": [4, 5],
  "slip": 0.05,
  "landmarks": [
    {"cell": [2, 3], "prop": "a"},
    {"cell": [2, 8], "prop": "b"},
    {"cell": [6, 5], "prop": "c"}
  ],
  "walls": [
    [[4, 0], [5, 0]],
    [[4, 1], [5, 1]],
    [[4, 10], [5, 10]],
    [[4, 11], [5, 11]]
  ]
})json";
    return doc;
}

// A 9x9 fenced clearing around the spawn point with the four craft
// resources near its corners, plus a small wood grove behind a gap in
// the south fence. Keeping wood off the main clearing keeps incidental
// pickups out of the inferred traces of the hammer task.
const std::string& craft_default_json() {
    static const std::string doc = R"json({
  "width": 21,
  "height": 21,
  "initial": [10, 10],
  "slip": 0.05,
  "landmarks": [
    {"cell": [7, 7], "prop": "b"},
    {"cell": [7, 13], "prop": "e"},
    {"cell": [13, 13], "prop": "f"},
    {"cell": [13, 7], "prop": "c"},
    {"cell": [16, 10], "prop": "a"}
  ],
  "walls": [
    [[5, 6], [6, 6]], [[5, 7], [6, 7]], [[5, 8], [6, 8]],
    [[5, 9], [6, 9]], [[5, 10], [6, 10]], [[5, 11], [6, 11]],
    [[5, 12], [6, 12]], [[5, 13], [6, 13]], [[5, 14], [6, 14]],
    [[6, 5], [6, 6]], [[6, 14], [6, 15]],
    [[7, 5], [7, 6]], [[7, 14], [7, 15]],
    [[8, 5], [8, 6]], [[8, 14], [8, 15]],
    [[9, 5], [9, 6]], [[9, 14], [9, 15]],
    [[10, 5], [10, 6]], [[10, 14], [10, 15]],
    [[11, 5], [11, 6]], [[11, 14], [11, 15]],
    [[12, 5], [12, 6]], [[12, 14], [12, 15]],
    [[13, 5], [13, 6]], [[13, 14], [13, 15]],
    [[14, 5], [14, 6]], [[14, 14], [14, 15]],
    [[14, 6], [15, 6]], [[14, 7], [15, 7]], [[14, 8], [15, 8]],
    [[14, 9], [15, 9]], [[14, 11], [15, 11]], [[14, 12], [15, 12]],
    [[14, 13], [15, 13]], [[14, 14], [15, 14]],
    [[15, 9], [15, 10]], [[15, 10], [15, 11]],
    [[16, 9], [16, 10]], [[16, 10], [16, 11]],
    [[16, 10], [17, 10]]
  ]
})json";
    return doc;
}

}  // namespace frarl
