#include "legsurg/presentation.hpp"

#include "legsurg/invariants.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace legsurg {

namespace {

std::string strip_comment(std::string line) {
    if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    return line;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw PresentationError("bad boolean '" + s + "'");
}

// "key=value" split
std::pair<std::string, std::string> split_kv(const std::string& tok) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
        throw PresentationError("expected key=value, got '" + tok + "'");
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

}  // namespace

Presentation parse_presentation(const std::string& text, const std::string& base_dir) {
    std::map<std::string, std::vector<std::string>> sections;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip_comment(raw);
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty()) continue;
        if (trimmed.front() == '[' && trimmed.back() == ']') {
            current = trimmed.substr(1, trimmed.size() - 2);
            if (current != "front" && current != "surgery" && current != "declared" &&
                current != "annotations")
                throw PresentationError("unknown section [" + current + "]");
            sections[current];
            continue;
        }
        if (current.empty()) throw PresentationError("content before first section: " + trimmed);
        sections[current].push_back(trimmed);
    }
    if (!sections.count("front")) throw PresentationError("missing [front] section");

    Presentation pres;

    // --- front ---
    const auto& front_lines = sections["front"];
    if (front_lines.size() == 1 && front_lines[0].rfind("file=", 0) == 0) {
        std::filesystem::path path = front_lines[0].substr(5);
        if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
        std::ifstream f(path);
        if (!f) throw PresentationError("cannot open front file '" + path.string() + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        pres.word = parse_front_word(buf.str());
    } else {
        std::string joined;
        for (const std::string& l : front_lines) joined += l + "\n";
        pres.word = parse_front_word(joined);
    }
    pres.diagram = build_diagram(pres.word);

    SurgeryPresentation& sp = pres.surgery;
    sp.data = classical_data(pres.diagram);
    for (int c = 1; c <= pres.diagram.component_count(); ++c) {
        auto [u, d] = cusp_counts(pres.diagram, c);
        sp.cusp_totals.push_back(u + d);
    }
    for (const Crossing& x : pres.diagram.crossings()) {
        if (x.comp_upper == x.comp_lower) continue;
        int a = std::min(x.comp_upper, x.comp_lower);
        int b = std::max(x.comp_upper, x.comp_lower);
        ++sp.shared_crossings[{a, b}];
    }

    auto comp = [&](const std::string& name) -> int {
        try {
            return pres.diagram.component_by_name(name);
        } catch (const std::out_of_range& e) {
            throw PresentationError(e.what());
        }
    };

    // --- surgery ---
    if (sections.count("surgery")) {
        for (const std::string& line : sections["surgery"]) {
            std::istringstream ls(line);
            std::string a, b;
            if (!(ls >> a >> b)) throw PresentationError("bad surgery line: " + line);
            if (a == "distinguished") {
                sp.distinguished = comp(b);
                continue;
            }
            int c = comp(a);
            if (b == "+1")
                sp.signs[c] = 1;
            else if (b == "-1")
                sp.signs[c] = -1;
            else
                throw PresentationError("surgery coefficient must be +1 or -1: " + line);
        }
    }

    // --- declared ---
    if (sections.count("declared")) {
        for (const std::string& line : sections["declared"]) {
            std::istringstream ls(line);
            std::string head;
            ls >> head;
            if (head == "q_scale") {
                std::string v;
                if (!(ls >> v)) throw PresentationError("bad q_scale line: " + line);
                sp.q_scale = Integer(v);
                if (sp.q_scale < 1) throw PresentationError("q_scale must be positive");
                continue;
            }
            int c = comp(head);
            DeclaredData& d = sp.declared[c];
            std::string tok;
            while (ls >> tok) {
                auto [key, value] = split_kv(tok);
                if (key == "knot")
                    d.knot = value;
                else if (key == "tau")
                    d.tau = parse_rational(value);
                else if (key == "tau_star")
                    d.tau_star = parse_rational(value);
                else if (key == "genus")
                    d.genus = std::stoi(value);
                else if (key == "l_space_knot")
                    d.l_space_knot = parse_bool(value);
                else if (key == "q")
                    d.order_q = Integer(value);
                else if (key == "chi")
                    d.chi = parse_rational(value);
                else if (key == "tb_q")
                    d.tb_q = parse_rational(value);
                else if (key == "rot_q")
                    d.rot_q = parse_rational(value);
                else
                    throw PresentationError("unknown declared key '" + key + "'");
            }
        }
    }

    // --- annotations ---
    if (sections.count("annotations")) {
        for (const std::string& line : sections["annotations"]) {
            std::istringstream ls(line);
            std::string kind;
            ls >> kind;
            if (kind == "fig2_configuration" || kind == "fig3_configuration") {
                std::string a, b;
                if (!(ls >> a >> b)) throw PresentationError("bad annotation line: " + line);
                auto pair = std::pair{comp(a), comp(b)};
                if (kind == "fig2_configuration")
                    sp.annotations.fig2_configuration = pair;
                else
                    sp.annotations.fig3_configuration = pair;
            } else if (kind == "isolated_summand") {
                std::string host, tok;
                if (!(ls >> host)) throw PresentationError("bad annotation line: " + line);
                IsolatedSummand s{comp(host), Rational(0), Rational(0), Rational(0)};
                bool have_tb = false, have_rot = false, have_tau = false;
                while (ls >> tok) {
                    auto [key, value] = split_kv(tok);
                    if (key == "tb") {
                        s.tb = parse_rational(value);
                        have_tb = true;
                    } else if (key == "rot") {
                        s.rot = parse_rational(value);
                        have_rot = true;
                    } else if (key == "tau") {
                        s.tau = parse_rational(value);
                        have_tau = true;
                    } else {
                        throw PresentationError("unknown isolated_summand key '" + key + "'");
                    }
                }
                if (!have_tb || !have_rot || !have_tau)
                    throw PresentationError("isolated_summand needs tb=, rot=, tau=");
                sp.annotations.isolated_summand = s;
            } else {
                throw PresentationError("unknown annotation '" + kind + "'");
            }
        }
    }

    return pres;
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open presentation '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace legsurg
