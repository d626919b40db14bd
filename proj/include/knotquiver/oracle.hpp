#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "knotquiver/diagram.hpp"
#include "knotquiver/poly.hpp"

namespace kq {

// Crossings x regions. Draw a crossing with the under-strand running upwards, so slot 0 is at the
// bottom and the slots 1, 2, 3 follow counterclockwise (right, top, left). The entry of each corner
// region is
//
//              slot 2
//        -t      |      1
//   slot 3 ------+------ slot 1
//         t      |     -1
//              slot 0
//
// that is t before the crossing on the left of the under-strand, -t after it on the left, -1
// before it on the right and 1 after it on the right. Regions meeting the crossing in two corners
// get the sum.
struct AlexanderMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<LaurentPoly>> entries;
    std::pair<int, int> deleted{-1, -1};
};

AlexanderMatrix alexander_matrix(const LinkDiagram& d);
// Determinant with the columns of two adjacent regions removed; throws if they are not adjacent.
LaurentPoly alexander_det(const LinkDiagram& d, std::pair<int, int> deleted);
// Uses the two regions on either side of segment 1.
LaurentPoly alexander_det(const LinkDiagram& d);
// Adjacent region pairs, one per segment, deduplicated, in segment order.
std::vector<std::pair<int, int>> adjacent_region_pairs(const LinkDiagram& d);
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

struct SegmentCheck {
    int segment = 0;
    LaurentPoly specialization;
    LaurentPoly state_sum;
    bool spec_matches = false;
    bool state_sum_matches = false;
    bool pass() const { return spec_matches && state_sum_matches; }
};

struct VerificationReport {
    LaurentPoly determinant;
    std::vector<std::pair<std::pair<int, int>, LaurentPoly>> determinant_pairs;
    bool determinant_consistent = true;
    std::vector<SegmentCheck> segments;
    bool pass() const;
    nlohmann::json to_json() const;
};

// Compares, for every segment i, the specialized F-polynomial of T(i) and the state sum with the
// determinant, up to units; the determinant itself is computed for up to `pairs` region pairs.
VerificationReport verify_alexander_agreement(const LinkDiagram& d, int pairs = 3);

}  // namespace kq
