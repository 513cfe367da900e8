#pragma once

// Seeded random generation of valid front words for property tests.

#include "legsurg/diagram.hpp"
#include "legsurg/front.hpp"

#include <random>

namespace legsurg::testsupport {

inline FrontWord random_word(std::mt19937& rng, int max_cusps = 3, int max_crossings = 8) {
    std::uniform_int_distribution<int> cusp_dist(1, max_cusps);
    std::uniform_int_distribution<int> cross_dist(0, max_crossings);
    int us = cusp_dist(rng);
    int as = us;
    int xs = cross_dist(rng);

    FrontWord w;
    int count = 0;
    while (us > 0 || xs > 0 || count > 0) {
        enum Action { U, A, X };
        std::vector<Action> eligible;
        if (us > 0) eligible.push_back(U);
        if (count >= 2 && as > 0 && !(count == 2 && xs > 0 && us == 0)) eligible.push_back(A);
        if (count >= 2 && xs > 0) eligible.push_back(X);
        // bias toward crossings so diagrams are interesting
        if (count >= 2 && xs > 0) eligible.push_back(X);
        Action act = eligible[std::uniform_int_distribution<size_t>(0, eligible.size() - 1)(rng)];
        switch (act) {
            case U: {
                int lvl = std::uniform_int_distribution<int>(1, count + 1)(rng);
                w.events.push_back({EventKind::LeftCusp, lvl});
                count += 2;
                --us;
                break;
            }
            case A: {
                int lvl = std::uniform_int_distribution<int>(1, count - 1)(rng);
                w.events.push_back({EventKind::RightCusp, lvl});
                count -= 2;
                --as;
                break;
            }
            case X: {
                int lvl = std::uniform_int_distribution<int>(1, count - 1)(rng);
                w.events.push_back({EventKind::Crossing, lvl});
                --xs;
                break;
            }
        }
    }
    w.validate();
    return w;
}

inline FrontWord random_knot_word(std::mt19937& rng, int max_cusps = 3, int max_crossings = 8) {
    for (;;) {
        FrontWord w = random_word(rng, max_cusps, max_crossings);
        if (build_diagram(w).component_count() == 1) return w;
    }
}

// Independent brute-force component counter: unions strand slots through
// the events without any of the Diagram machinery.
inline int brute_force_component_count(const FrontWord& word) {
    std::vector<int> parent;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<int> active;
    for (const Event& e : word.events) {
        int i = e.level - 1;
        switch (e.kind) {
            case EventKind::LeftCusp: {
                int s1 = static_cast<int>(parent.size());
                parent.push_back(s1);
                int s2 = static_cast<int>(parent.size());
                parent.push_back(s2);
                parent[find(s1)] = find(s2);
                active.insert(active.begin() + i, {s1, s2});
                break;
            }
            case EventKind::RightCusp:
                parent[find(active[i])] = find(active[i + 1]);
                active.erase(active.begin() + i, active.begin() + i + 2);
                break;
            case EventKind::Crossing:
                std::swap(active[i], active[i + 1]);
                break;
        }
    }
    int roots = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return roots;
}

}  // namespace legsurg::testsupport
