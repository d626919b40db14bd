#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "knotquiver/diagram.hpp"

namespace kq {

// An arrow is identified by the corner (crossing, region). Going clockwise around the crossing
// one meets the source segment, then the region, then the target segment.
struct Arrow {
    int id = 0;
    int source = 0;  // segment id
    int target = 0;  // segment id
    int crossing = 0;
    int region = 0;
    int slot = 0;  // slot of the source segment at the crossing
};

struct Quiver {
    int vertex_count = 0;  // vertices are segments 1..vertex_count
    std::vector<Arrow> arrows;
    std::vector<int> out_arrows(int v) const;
    std::vector<int> in_arrows(int v) const;
};

struct CycleTerm {
    int sign = 1;
    std::vector<int> arrows;  // in path order, rooted at the smallest arrow id
    int crossing = -1;        // set for crossing cycles
    int region = -1;          // set for region cycles
};

struct Potential {
    std::vector<CycleTerm> terms;
    std::vector<const CycleTerm*> plus() const;
    std::vector<const CycleTerm*> minus() const;
};

// One arrow of a removed 2-cycle expressed as a path; an empty path means the arrow is zero.
struct Substitution {
    int arrow = 0;
    std::vector<int> path;
};

struct ReducedQP {
    Quiver quiver;  // arrows keep their original ids
    Potential potential;
    std::vector<Substitution> substitutions;
};

// Arrow id = 4 * crossing + slot.
Quiver build_quiver(const LinkDiagram& d);
Potential build_potential(const LinkDiagram& d, const Quiver& q);
ReducedQP reduce_two_cycles(const Quiver& q, const Potential& w);

// Arrow following a in its region cycle, and the arrows after a in its crossing cycle.
int next_in_region(const Quiver& q, int arrow);
std::vector<int> crossing_cycle_from(int arrow);
std::vector<int> region_cycle_from(const Quiver& q, int arrow);

std::vector<int> canonical_rotation(const std::vector<int>& cycle);
std::string arrow_name(int id);
std::string export_quiver(const Quiver& q, const Potential& w, const std::string& format,
                          const std::vector<Substitution>* subs = nullptr);
nlohmann::json quiver_to_json(const Quiver& q, const Potential& w, const std::vector<Substitution>* subs = nullptr);
// Reader for the JSON export; used to check round trips.
std::pair<Quiver, Potential> quiver_from_json(const nlohmann::json& j);

}  // namespace kq
