#include "legsurg/front.hpp"

#include <sstream>

namespace legsurg {

void FrontWord::validate() const {
    int count = 0;
    int lefts = 0, rights = 0;
    for (size_t k = 0; k < events.size(); ++k) {
        const Event& e = events[k];
        int idx = static_cast<int>(k) + 1;
        if (e.level < 1) throw FrontValidityError("level must be positive", idx);
        switch (e.kind) {
            case EventKind::LeftCusp:
                if (e.level > count + 1)
                    throw FrontValidityError("left cusp level out of range", idx);
                count += 2;
                ++lefts;
                break;
            case EventKind::RightCusp:
                if (e.level + 1 > count)
                    throw FrontValidityError("right cusp level out of range", idx);
                count -= 2;
                ++rights;
                break;
            case EventKind::Crossing:
                if (e.level + 1 > count)
                    throw FrontValidityError("crossing level out of range", idx);
                break;
        }
        if (count < 0) throw FrontValidityError("negative strand count", idx);
    }
    if (count != 0)
        throw FrontValidityError("nonzero final strand count", static_cast<int>(events.size()));
    (void)lefts;
    (void)rights;  // equality is implied by count returning to zero
}

FrontWord parse_front_word(std::string_view text) {
    FrontWord word;
    std::string src(text);
    std::istringstream in(src);
    std::string line;
    int event_count = 0;
    while (std::getline(in, line)) {
        if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "@component") {
                ComponentDirective d;
                std::string orient;
                if (!(ls >> d.component >> d.name >> orient) || d.component < 1 ||
                    (orient != "+" && orient != "-"))
                    throw FrontSyntaxError("malformed @component directive", event_count + 1);
                d.orientation = orient == "+" ? 1 : -1;
                word.directives.push_back(d);
                continue;
            }
            EventKind kind;
            switch (tok[0]) {
                case 'u': kind = EventKind::LeftCusp; break;
                case 'a': kind = EventKind::RightCusp; break;
                case 'x': kind = EventKind::Crossing; break;
                default: throw FrontSyntaxError("unknown token '" + tok + "'", event_count + 1);
            }
            std::string digits = tok.substr(1);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw FrontSyntaxError("malformed level in '" + tok + "'", event_count + 1);
            long level = std::stol(digits);
            if (level < 1 || level > 1'000'000)
                throw FrontSyntaxError("level out of range in '" + tok + "'", event_count + 1);
            word.events.push_back({kind, static_cast<int>(level)});
            ++event_count;
        }
    }
    word.validate();
    return word;
}

std::string FrontWord::print() const {
    std::ostringstream out;
    for (size_t k = 0; k < events.size(); ++k) {
        if (k) out << ' ';
        switch (events[k].kind) {
            case EventKind::LeftCusp: out << 'u'; break;
            case EventKind::RightCusp: out << 'a'; break;
            case EventKind::Crossing: out << 'x'; break;
        }
        out << events[k].level;
    }
    for (const ComponentDirective& d : directives)
        out << "\n@component " << d.component << ' ' << d.name << ' '
            << (d.orientation > 0 ? '+' : '-');
    return out.str();
}

}  // namespace legsurg
