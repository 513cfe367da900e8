#include "legsurg/diagram.hpp"

#include <cassert>
#include <stdexcept>

namespace legsurg {

const Component& Diagram::component(int index) const {
    if (index < 1 || index > component_count())
        throw std::out_of_range("unknown component index " + std::to_string(index));
    return components_[index - 1];
}

int Diagram::component_by_name(const std::string& n) const {
    for (const Component& c : components_)
        if (c.name == n) return c.index;
    throw std::out_of_range("unknown component '" + n + "'");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram build_diagram(const FrontWord& word, const std::vector<int>& orientations) {
    word.validate();
    Diagram d;

    // Sweep left to right, maintaining the strand at each position.
    std::vector<int> active;
    for (size_t k = 0; k < word.events.size(); ++k) {
        const Event& e = word.events[k];
        int i = e.level - 1;
        switch (e.kind) {
            case EventKind::LeftCusp: {
                int cusp = static_cast<int>(d.cusps_.size());
                int su = static_cast<int>(d.strands_.size());
                d.strands_.push_back({cusp, -1, true, false, -1, 0});
                int sl = static_cast<int>(d.strands_.size());
                d.strands_.push_back({cusp, -1, false, false, -1, 0});
                d.cusps_.push_back({static_cast<int>(k), true, su, sl, -1, false});
                active.insert(active.begin() + i, {su, sl});
                break;
            }
            case EventKind::RightCusp: {
                int cusp = static_cast<int>(d.cusps_.size());
                int su = active[i], sl = active[i + 1];
                d.strands_[su].right_cusp = cusp;
                d.strands_[su].upper_at_right = true;
                d.strands_[sl].right_cusp = cusp;
                d.strands_[sl].upper_at_right = false;
                d.cusps_.push_back({static_cast<int>(k), false, su, sl, -1, false});
                active.erase(active.begin() + i, active.begin() + i + 2);
                break;
            }
            case EventKind::Crossing: {
                d.crossings_.push_back({static_cast<int>(k), active[i], active[i + 1], 0, -1, -1});
                std::swap(active[i], active[i + 1]);
                break;
            }
        }
    }
    assert(active.empty());

    // Partition strands into components: cusps join their two branches.
    UnionFind uf(d.strands_.size());
    for (const Cusp& c : d.cusps_) uf.unite(c.upper, c.lower);

    std::vector<int> comp_of_root(d.strands_.size(), -1);
    for (size_t ci = 0; ci < d.cusps_.size(); ++ci) {
        const Cusp& c = d.cusps_[ci];
        if (!c.left) continue;
        int root = uf.find(c.upper);
        if (comp_of_root[root] >= 0) continue;
        int index = static_cast<int>(d.components_.size()) + 1;
        comp_of_root[root] = index;
        d.components_.push_back(
            {index, "L" + std::to_string(index), 1, static_cast<int>(ci), 0, 0, 0});
    }

    int n = d.component_count();
    if (!orientations.empty()) {
        if (static_cast<int>(orientations.size()) != n)
            throw std::invalid_argument("orientation list has " +
                                        std::to_string(orientations.size()) + " entries for " +
                                        std::to_string(n) + " components");
        for (int c = 0; c < n; ++c) {
            if (orientations[c] != 1 && orientations[c] != -1)
                throw std::invalid_argument("orientation entries must be +1 or -1");
            d.components_[c].orientation = orientations[c];
        }
    } else {
        for (const ComponentDirective& dir : word.directives) {
            if (dir.component > n)
                throw std::invalid_argument("directive for component " +
                                            std::to_string(dir.component) + " but only " +
                                            std::to_string(n) + " traced");
            Component& c = d.components_[dir.component - 1];
            c.name = dir.name;
            c.orientation = dir.orientation;
        }
    }

    for (size_t s = 0; s < d.strands_.size(); ++s)
        d.strands_[s].component = comp_of_root[uf.find(static_cast<int>(s))];
    for (Cusp& c : d.cusps_) c.component = d.strands_[c.upper].component;
    for (Crossing& x : d.crossings_) {
        x.comp_upper = d.strands_[x.upper_in].component;
        x.comp_lower = d.strands_[x.lower_in].component;
    }

    // Traverse each component once, assigning directions and cusp passages.
    for (Component& comp : d.components_) {
        int start = d.cusps_[comp.first_cusp].upper;
        int dir = comp.orientation;  // +1 starts rightward on the upper branch
        int s = start;
        do {
            d.strands_[s].dir = dir;
            ++comp.strand_count;
            int cusp_id = dir > 0 ? d.strands_[s].right_cusp : d.strands_[s].left_cusp;
            Cusp& c = d.cusps_[cusp_id];
            bool arrived_on_lower = (c.lower == s);
            c.up_passage = arrived_on_lower;
            if (arrived_on_lower)
                ++comp.up_cusps;
            else
                ++comp.down_cusps;
            s = arrived_on_lower ? c.upper : c.lower;
            dir = -dir;
        } while (!(s == start && dir == comp.orientation));
    }

    // Crossing signs. The upper-in strand descends through the crossing, so
    // it has the more negative slope and goes over. With z pointing up, its
    // tangent is (du, -du) and the under tangent is (dl, dl), du/dl = +-1.
    for (Crossing& x : d.crossings_) {
        int du = d.strands_[x.upper_in].dir;
        int dl = d.strands_[x.lower_in].dir;
        int cross = du * dl - (-du) * dl;  // over_x * under_z - over_z * under_x
        x.sign = cross > 0 ? 1 : -1;
    }

    return d;
}

}  // namespace legsurg
