#pragma once

#include "legsurg/front.hpp"

#include <string>
#include <vector>

namespace legsurg {

// A maximal arc of the front: born at a left cusp, dies at a right cusp,
// passing straight through any crossings in between.
struct Strand {
    int left_cusp = -1, right_cusp = -1;  // cusp ids
    bool upper_at_left = false, upper_at_right = false;
    int component = -1;
    int dir = 0;  // +1 traversed rightward, -1 leftward
};

struct Cusp {
    int event;  // 0-based index into FrontWord::events
    bool left;
    int upper, lower;  // strand ids
    int component = -1;
    bool up_passage = false;  // traversal enters on the lower branch
};

struct Crossing {
    int event;
    int upper_in, lower_in;  // strands entering at positions level, level+1
    int sign = 0;
    int comp_upper = -1, comp_lower = -1;
};

struct Component {
    int index;  // 1-based, in trace order (first left cusp first)
    std::string name;
    int orientation;  // +1 default, -1 reversed
    int first_cusp;   // cusp id of the component's first left cusp
    int up_cusps = 0, down_cusps = 0;
    int strand_count = 0;
};

class Diagram {
public:
    const std::vector<Strand>& strands() const { return strands_; }
    const std::vector<Cusp>& cusps() const { return cusps_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Component>& components() const { return components_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    const Component& component(int index) const;        // 1-based
    int component_by_name(const std::string& n) const;  // returns index, throws if unknown

private:
    friend Diagram build_diagram(const FrontWord&, const std::vector<int>&);
    std::vector<Strand> strands_;
    std::vector<Cusp> cusps_;
    std::vector<Crossing> crossings_;
    std::vector<Component> components_;
};

// Traces the word into oriented components with classified cusps and signed
// crossings. Orientations: one entry of +1/-1 per component in trace order;
// the empty vector means "use directives, default +1".
//
// Sign conventions, pinned by the anchor fixtures: the strand of more
// negative slope is the over-strand at every crossing; the crossing sign is
// the usual determinant of (over tangent, under tangent). A cusp passage
// counts as "up" when the traversal enters on the lower branch. rot is
// computed downstream as (down - up) / 2.
Diagram build_diagram(const FrontWord& word, const std::vector<int>& orientations = {});

}  // namespace legsurg
