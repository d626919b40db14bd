#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotquiver/poly.hpp"

namespace kq {

enum class Passage { Under, Over };
enum class Side { Left, Right };

// A slot position at a crossing. Slots are numbered 0..3 counterclockwise, slot 0 being the
// incoming under-strand, so the under-strand always leaves through slot 2.
struct Endpoint {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Endpoint&) const = default;
};

struct Crossing {
    int id = 0;
    std::array<int, 4> segment{};  // segment id at each slot
    std::array<int, 4> arc{};      // input arc label at each slot
    std::array<bool, 4> outgoing{};
    // +1 when the over-strand enters at slot 3 and leaves at slot 1, -1 for the reverse.
    int sign = 0;
};

struct Segment {
    int id = 0;  // 1-based
    Endpoint tail;
    Endpoint head;
    Passage tail_passage = Passage::Under;
    Passage head_passage = Passage::Under;
    int arc_label = 0;
    int component = 0;
};

struct Region {
    int id = 0;
    // Boundary walked with the region on the left; Side::Left means the segment is traversed
    // along its orientation.
    std::vector<std::pair<int, Side>> boundary;
    std::vector<Endpoint> corners;  // (crossing, slot) pairs whose corner is this region
    bool is_unbounded = false;
};

struct ValidationReport {
    bool curl_free = true;
    bool connected = true;
    bool euler_ok = true;
    // Primality is an assumption of the theory, never decided here.
    bool primality_checked = false;
    std::vector<int> nugatory_crossings;
    std::vector<std::string> messages;
    bool valid() const { return curl_free && connected && euler_ok; }
    nlohmann::json to_json() const;
};

class LinkDiagram {
public:
    // Crossings in PD convention: four arc labels counterclockwise from the incoming under-strand.
    static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& pd);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int segment_count() const { return static_cast<int>(segments_.size()); }
    int region_count() const { return static_cast<int>(regions_.size()); }
    int components() const { return components_; }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Region>& regions() const { return regions_; }
    const Crossing& crossing(int c) const { return crossings_.at(c); }
    const Segment& segment(int j) const;
    const Region& region(int r) const { return regions_.at(r); }

    int segment_at(int c, int slot) const { return crossings_.at(c).segment[((slot % 4) + 4) % 4]; }
    // Region between slot s and the next slot clockwise, (s - 1) mod 4.
    int corner(int c, int slot) const { return corner_.at(c)[((slot % 4) + 4) % 4]; }
    // Slot of segment j at its tail / head crossing.
    bool is_tail(int j, int c, int slot) const;
    // (left region, right region) of segment j with respect to its orientation.
    std::pair<int, int> sides(int j) const;
    std::vector<int> region_segments(int r) const;

    const std::map<int, int>& arc_to_segment() const { return arc_to_segment_; }
    const std::vector<std::array<int, 4>>& pd() const { return pd_; }
    // PD code with arcs renamed to segment ids: a canonical form for hashing.
    std::string canonical_pd() const;
    nlohmann::json to_json() const;

    void recompute_regions();

private:
    std::vector<std::array<int, 4>> pd_;
    std::vector<Crossing> crossings_;
    std::vector<Segment> segments_;
    std::vector<Region> regions_;
    std::vector<std::array<int, 4>> corner_;
    std::map<int, int> arc_to_segment_;
    int components_ = 0;
};

std::vector<std::array<int, 4>> parse_pd_code(const std::string& text);
LinkDiagram parse_pd(const std::string& text);
std::vector<Region> compute_regions(const LinkDiagram& d);
ValidationReport validate(const LinkDiagram& d);
SegmentClass classify_segment(const LinkDiagram& d, int j);
std::vector<SegmentClass> segment_classes(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
const char* to_string(SegmentClass c);

std::vector<int> parse_continued_fraction(const std::string& text);
// numerator / denominator of [a1, ..., an] = a1 + 1/(a2 + 1/(... + 1/an))
std::pair<BigInt, BigInt> continued_fraction_value(const std::vector<int>& cf);
LinkDiagram two_bridge(const std::vector<int>& cf);

}  // namespace kq
