#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legsurg {

// Errors carry the 1-based index of the offending event token.
struct FrontError : std::runtime_error {
    int event_index;
    FrontError(const std::string& msg, int index)
        : std::runtime_error(msg + " (event " + std::to_string(index) + ")"), event_index(index) {}
};
struct FrontSyntaxError : FrontError {
    using FrontError::FrontError;
};
struct FrontValidityError : FrontError {
    using FrontError::FrontError;
};

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct Event {
    EventKind kind;
    int level;  // 1-based strand position, counted top to bottom
    bool operator==(const Event&) const = default;
};

struct ComponentDirective {
    int component;  // 1-based, in trace order
    std::string name;
    int orientation;  // +1 or -1
    bool operator==(const ComponentDirective&) const = default;
};

// A front word: the elementary-event encoding of a front projection.
// Tokens: u<i> left cusp, a<i> right cusp, x<i> crossing of strands i, i+1.
// Lines may carry '#' comments. Directives: "@component <k> <name> <+|->".
struct FrontWord {
    std::vector<Event> events;
    std::vector<ComponentDirective> directives;

    bool operator==(const FrontWord&) const = default;

    // Throws FrontValidityError when strand counts go inconsistent.
    void validate() const;

    std::string print() const;
};

FrontWord parse_front_word(std::string_view text);

}  // namespace legsurg
