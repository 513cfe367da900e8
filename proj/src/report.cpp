#include "legsurg/report.hpp"

#include <sstream>

namespace legsurg {

namespace {

using nlohmann::json;

std::string approx(const Rational& r) {
    if (is_integer(r)) return {};
    double v = rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>();
    std::ostringstream out;
    out << " (~" << v << ")";
    return out.str();
}

json hyp_to_json(const Hypotheses& h) {
    json j = json::object();
    for (const auto& [k, v] : h) {
        if (std::holds_alternative<bool>(v))
            j[k] = std::get<bool>(v);
        else
            j[k] = rat_str(std::get<Rational>(v));
    }
    return j;
}

Hypotheses hyp_from_json(const json& j) {
    Hypotheses h;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_boolean())
            h[it.key()] = it.value().get<bool>();
        else
            h[it.key()] = parse_rational(it.value().get<std::string>());
    }
    return h;
}

}  // namespace

std::string invariants_text(const ClassicalData& data) {
    std::ostringstream out;
    for (int c = 1; c <= data.size(); ++c)
        out << data.names[c - 1] << ": tb = " << rat_str(data.tb[c - 1])
            << ", rot = " << rat_str(data.rot[c - 1]) << "\n";
    for (int a = 1; a <= data.size(); ++a)
        for (int b = a + 1; b <= data.size(); ++b)
            out << "lk(" << data.names[a - 1] << ", " << data.names[b - 1]
                << ") = " << rat_str(data.linking(a, b)) << "\n";
    return out.str();
}

nlohmann::json invariants_json(const ClassicalData& data) {
    json comps = json::array();
    for (int c = 1; c <= data.size(); ++c)
        comps.push_back({{"name", data.names[c - 1]},
                         {"tb", rat_str(data.tb[c - 1])},
                         {"rot", rat_str(data.rot[c - 1])}});
    json lk = json::array();
    for (int a = 1; a <= data.size(); ++a)
        for (int b = a + 1; b <= data.size(); ++b)
            lk.push_back({{"a", data.names[a - 1]},
                          {"b", data.names[b - 1]},
                          {"lk", rat_str(data.linking(a, b))}});
    return {{"components", comps}, {"linking", lk}};
}

std::string front_sketch(const FrontWord& word) {
    word.validate();

    // Assign every strand slot a persistent visual row. New cusps allocate
    // fresh rational rows strictly between their neighbours, so nothing ever
    // jumps; the rows compress to consecutive integers afterwards.
    struct Mark {
        size_t col;
        Rational row;
        char glyph;
    };
    std::vector<Mark> marks;
    std::vector<Rational> slots;
    for (size_t k = 0; k < word.events.size(); ++k) {
        const Event& e = word.events[k];
        size_t i = e.level - 1;
        switch (e.kind) {
            case EventKind::LeftCusp: {
                Rational r1, r2;
                if (slots.empty()) {
                    r1 = 0;
                    r2 = 1;
                } else if (i == 0) {
                    r1 = slots.front() - 2;
                    r2 = slots.front() - 1;
                } else if (i == slots.size()) {
                    r1 = slots.back() + 1;
                    r2 = slots.back() + 2;
                } else {
                    Rational lo = slots[i - 1], hi = slots[i];
                    r1 = lo + (hi - lo) / 3;
                    r2 = lo + (hi - lo) * 2 / 3;
                }
                for (size_t s = 0; s < slots.size(); ++s)
                    marks.push_back({k, slots[s], '-'});
                slots.insert(slots.begin() + i, {r1, r2});
                marks.push_back({k, r1, ','});
                marks.push_back({k, r2, '`'});
                break;
            }
            case EventKind::RightCusp: {
                marks.push_back({k, slots[i], '.'});
                marks.push_back({k, slots[i + 1], '\''});
                slots.erase(slots.begin() + i, slots.begin() + i + 2);
                for (size_t s = 0; s < slots.size(); ++s)
                    marks.push_back({k, slots[s], '-'});
                break;
            }
            case EventKind::Crossing: {
                for (size_t s = 0; s < slots.size(); ++s)
                    marks.push_back({k, slots[s], s == i ? '\\' : (s == i + 1 ? '/' : '-')});
                break;
            }
        }
        // connector column between events
        for (size_t s = 0; s < slots.size(); ++s) marks.push_back({k, slots[s], 'c'});
    }

    std::vector<Rational> used;
    for (const Mark& m : marks) used.push_back(m.row);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto row_index = [&](const Rational& r) {
        return std::lower_bound(used.begin(), used.end(), r) - used.begin();
    };

    std::vector<std::string> grid(used.size(), std::string(word.events.size() * 2, ' '));
    for (const Mark& m : marks) {
        size_t col = 2 * m.col + (m.glyph == 'c' ? 1 : 0);
        grid[row_index(m.row)][col] = m.glyph == 'c' ? '-' : m.glyph;
    }
    std::string out;
    for (const std::string& row : grid) {
        size_t end = row.find_last_not_of(' ');
        out += row.substr(0, end == std::string::npos ? 0 : end + 1);
        out += '\n';
    }
    return out;
}

std::string report_text(const Report& report) {
    std::ostringstream out;
    out << "presentation:\n";
    std::istringstream echo(report.presentation_echo);
    std::string line;
    while (std::getline(echo, line)) out << "  " << line << "\n";

    for (const StagingInfo& st : report.stagings) {
        out << "staging " << st.name << ": det M = " << rat_str(st.det_m)
            << (st.is_qhs3 ? "" : " (not a QHS3)") << "\n";
        if (st.tb_q)
            out << "  tb_q = " << rat_str(*st.tb_q) << approx(*st.tb_q)
                << ", rot_q = " << rat_str(*st.rot_q) << approx(*st.rot_q) << "\n";
        if (st.q) out << "  q = " << st.q->str() << "\n";
        if (st.chi)
            out << "  chi = " << rat_str(*st.chi) << (st.chi_defaulted ? " (defaulted to 1-2g)" : "")
                << "\n";
        if (!st.torsion.empty()) {
            out << "  H1 divisors:";
            for (const Integer& d : st.torsion) out << " " << d.str();
            out << "\n";
        }
        if (st.dual_tb)
            out << "  dual tb = " << rat_str(*st.dual_tb) << ", dual rot = " << rat_str(*st.dual_rot)
                << (st.dual_ord ? ", dual order = " + st.dual_ord->str() : "") << "\n";
        out << "  ambient gate: " << (st.ambient_l_space_tight ? "tight L-space" : "unknown")
            << " (" << st.gate_reason << ")\n";
        for (const std::string& n : st.notes) out << "  note: " << n << "\n";
    }

    out << "rules:\n";
    for (const RuleEval& e : report.rules) {
        out << "  " << e.rule;
        if (!e.staging.empty()) out << " [" << e.staging << "]";
        out << ": " << to_string(e.status);
        if (e.level) out << " -> " << to_string(*e.level);
        if (!e.scope.empty()) out << " (scope: " << e.scope << ")";
        out << "\n";
        for (const auto& [k, v] : e.hypotheses) {
            out << "      " << k << " = ";
            if (std::holds_alternative<bool>(v))
                out << (std::get<bool>(v) ? "true" : "false");
            else
                out << rat_str(std::get<Rational>(v)) << approx(std::get<Rational>(v));
            out << "\n";
        }
        for (const std::string& n : e.notes) out << "      note: " << n << "\n";
    }
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    out << "verdict: " << to_string(report.final_level);
    if (!report.fired_rules.empty()) {
        out << " (by";
        for (const std::string& r : report.fired_rules) out << " " << r;
        out << ")";
    }
    out << "\n";
    return out.str();
}

nlohmann::json report_json(const Report& report) {
    json stagings = json::array();
    for (const StagingInfo& st : report.stagings) {
        json s{{"distinguished", st.name},
               {"det_m", rat_str(st.det_m)},
               {"is_qhs3", st.is_qhs3},
               {"ambient_l_space_tight", st.ambient_l_space_tight},
               {"gate_reason", st.gate_reason},
               {"chi_defaulted", st.chi_defaulted},
               {"notes", st.notes}};
        if (st.tb_q) s["tb_q"] = rat_str(*st.tb_q);
        if (st.rot_q) s["rot_q"] = rat_str(*st.rot_q);
        if (st.q) s["q"] = st.q->str();
        if (st.chi) s["chi"] = rat_str(*st.chi);
        if (st.dual_tb) s["dual_tb"] = rat_str(*st.dual_tb);
        if (st.dual_rot) s["dual_rot"] = rat_str(*st.dual_rot);
        if (st.dual_ord) s["dual_order"] = st.dual_ord->str();
        json tor = json::array();
        for (const Integer& d : st.torsion) tor.push_back(d.str());
        s["torsion"] = tor;
        stagings.push_back(std::move(s));
    }

    json rules = json::array();
    for (const RuleEval& e : report.rules) {
        json r{{"rule", e.rule},
               {"status", to_string(e.status)},
               {"hypotheses", hyp_to_json(e.hypotheses)},
               {"notes", e.notes}};
        if (!e.staging.empty()) r["staging"] = e.staging;
        if (e.level) r["level"] = to_string(*e.level);
        if (!e.scope.empty()) r["scope"] = e.scope;
        rules.push_back(std::move(r));
    }

    return {{"presentation", report.presentation_echo},
            {"stagings", stagings},
            {"rules", rules},
            {"verdict", to_string(report.final_level)},
            {"fired_rules", report.fired_rules},
            {"notes", report.notes}};
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.presentation_echo = j.at("presentation").get<std::string>();
    report.final_level = verdict_level_from_string(j.at("verdict").get<std::string>());
    report.fired_rules = j.at("fired_rules").get<std::vector<std::string>>();
    report.notes = j.at("notes").get<std::vector<std::string>>();
    for (const json& s : j.at("stagings")) {
        StagingInfo st;
        st.name = s.at("distinguished").get<std::string>();
        st.det_m = parse_rational(s.at("det_m").get<std::string>());
        st.is_qhs3 = s.at("is_qhs3").get<bool>();
        st.ambient_l_space_tight = s.at("ambient_l_space_tight").get<bool>();
        st.gate_reason = s.at("gate_reason").get<std::string>();
        st.chi_defaulted = s.at("chi_defaulted").get<bool>();
        st.notes = s.at("notes").get<std::vector<std::string>>();
        if (s.contains("tb_q")) st.tb_q = parse_rational(s.at("tb_q").get<std::string>());
        if (s.contains("rot_q")) st.rot_q = parse_rational(s.at("rot_q").get<std::string>());
        if (s.contains("q")) st.q = Integer(s.at("q").get<std::string>());
        if (s.contains("chi")) st.chi = parse_rational(s.at("chi").get<std::string>());
        if (s.contains("dual_tb")) st.dual_tb = parse_rational(s.at("dual_tb").get<std::string>());
        if (s.contains("dual_rot"))
            st.dual_rot = parse_rational(s.at("dual_rot").get<std::string>());
        if (s.contains("dual_order")) st.dual_ord = Integer(s.at("dual_order").get<std::string>());
        for (const json& t : s.at("torsion")) st.torsion.push_back(Integer(t.get<std::string>()));
        report.stagings.push_back(std::move(st));
    }
    for (const json& r : j.at("rules")) {
        RuleEval e;
        e.rule = r.at("rule").get<std::string>();
        if (r.contains("staging")) e.staging = r.at("staging").get<std::string>();
        std::string status = r.at("status").get<std::string>();
        for (RuleStatus s :
             {RuleStatus::Fired, RuleStatus::Silent, RuleStatus::Skipped, RuleStatus::Excluded})
            if (to_string(s) == status) e.status = s;
        if (r.contains("level")) e.level = verdict_level_from_string(r.at("level").get<std::string>());
        if (r.contains("scope")) e.scope = r.at("scope").get<std::string>();
        e.hypotheses = hyp_from_json(r.at("hypotheses"));
        e.notes = r.at("notes").get<std::vector<std::string>>();
        report.rules.push_back(std::move(e));
    }
    return report;
}

}  // namespace legsurg
