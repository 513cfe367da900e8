#pragma once

// Test-only front constructions: the 2-copy (a component and its Legendrian
// push-off, running parallel) and clasp insertion. Used by property tests
// and to derive the bundled link fixtures.

#include "legsurg/diagram.hpp"
#include "legsurg/front.hpp"

#include <vector>

namespace legsurg::testsupport {

// Doubles every strand of the word into two parallel tracks, the second a
// copy shifted slightly downward. The shifted track swaps past the original
// at every cusp, which is exactly what makes the copy a Legendrian push-off
// (linking number = tb) rather than a blackboard-framed parallel.
inline FrontWord push_off_copy(const FrontWord& word) {
    FrontWord out;
    for (const Event& e : word.events) {
        int i = e.level;
        switch (e.kind) {
            case EventKind::LeftCusp:
                out.events.push_back({EventKind::LeftCusp, 2 * i - 1});
                out.events.push_back({EventKind::LeftCusp, 2 * i + 1});
                out.events.push_back({EventKind::Crossing, 2 * i});
                break;
            case EventKind::RightCusp:
                out.events.push_back({EventKind::Crossing, 2 * i});
                out.events.push_back({EventKind::RightCusp, 2 * i - 1});
                out.events.push_back({EventKind::RightCusp, 2 * i - 1});
                break;
            case EventKind::Crossing:
                out.events.push_back({EventKind::Crossing, 2 * i});
                out.events.push_back({EventKind::Crossing, 2 * i - 1});
                out.events.push_back({EventKind::Crossing, 2 * i + 1});
                out.events.push_back({EventKind::Crossing, 2 * i});
                break;
        }
    }
    out.validate();
    return out;
}

// Inserts a full twist (two consecutive crossings) of strands level, level+1
// before event position `at`.
inline FrontWord insert_clasp(const FrontWord& word, size_t at, int level) {
    FrontWord out = word;
    out.events.insert(out.events.begin() + at, {{EventKind::Crossing, level},
                                                {EventKind::Crossing, level}});
    out.validate();
    return out;
}

// Extracts one component of a link word as a front word of its own:
// events of other components are dropped and levels are renumbered by the
// component's strand positions. Crossings with other components vanish.
inline FrontWord sub_front(const FrontWord& word, int component) {
    Diagram d = build_diagram(word);
    d.component(component);  // validate
    FrontWord out;
    std::vector<int> active;  // strand ids by position, whole link
    size_t cusp_i = 0;
    auto mine = [&](int strand) { return d.strands()[strand].component == component; };
    auto level_among_mine = [&](int pos) {
        int lvl = 1;
        for (int p = 0; p < pos; ++p)
            if (mine(active[p])) ++lvl;
        return lvl;
    };
    for (const Event& e : word.events) {
        int i = e.level - 1;
        switch (e.kind) {
            case EventKind::LeftCusp: {
                const Cusp& c = d.cusps()[cusp_i++];
                if (mine(c.upper)) out.events.push_back({EventKind::LeftCusp, level_among_mine(i)});
                active.insert(active.begin() + i, {c.upper, c.lower});
                break;
            }
            case EventKind::RightCusp: {
                ++cusp_i;
                if (mine(active[i]))
                    out.events.push_back({EventKind::RightCusp, level_among_mine(i)});
                active.erase(active.begin() + i, active.begin() + i + 2);
                break;
            }
            case EventKind::Crossing: {
                if (mine(active[i]) && mine(active[i + 1]))
                    out.events.push_back({EventKind::Crossing, level_among_mine(i)});
                std::swap(active[i], active[i + 1]);
                break;
            }
        }
    }
    out.validate();
    return out;
}

}  // namespace legsurg::testsupport
