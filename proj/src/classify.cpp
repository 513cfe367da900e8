#include "legsurg/classify.hpp"

#include <algorithm>
#include <sstream>

namespace legsurg {

std::string to_string(VerdictLevel level) {
    switch (level) {
        case VerdictLevel::Inconclusive: return "Inconclusive";
        case VerdictLevel::NonvanishingC: return "NonvanishingC";
        case VerdictLevel::CPlusVanishes: return "CPlusVanishes";
        case VerdictLevel::CVanishes: return "CVanishes";
        case VerdictLevel::Overtwisted: return "Overtwisted";
    }
    return "?";
}

VerdictLevel verdict_level_from_string(const std::string& s) {
    for (VerdictLevel l : {VerdictLevel::Inconclusive, VerdictLevel::NonvanishingC,
                           VerdictLevel::CPlusVanishes, VerdictLevel::CVanishes,
                           VerdictLevel::Overtwisted})
        if (to_string(l) == s) return l;
    throw std::invalid_argument("unknown verdict level '" + s + "'");
}

std::string to_string(RuleStatus s) {
    switch (s) {
        case RuleStatus::Fired: return "fired";
        case RuleStatus::Silent: return "silent";
        case RuleStatus::Skipped: return "skipped";
        case RuleStatus::Excluded: return "excluded";
    }
    return "?";
}

InternalInconsistencyError::InternalInconsistencyError(std::vector<std::string> fired)
    : std::runtime_error([&fired] {
          std::string msg = "internally inconsistent verdicts:";
          for (const std::string& r : fired) msg += " " + r;
          return msg;
      }()),
      rules(std::move(fired)) {}

const std::vector<std::string> kAllRules = {
    "rule_stein",    "rule_main1", "rule_pro0",    "rule_fig3", "rule_prop_tb", "rule_cor0",
    "rule_main3_1",  "rule_main3_2", "rule_cor2",  "rule_main2", "rule_loose",
};

// --- rule predicates --------------------------------------------------------

std::optional<Verdict> rule_stein(const SurgeryPresentation& p) {
    bool has_plus = p.distinguished.has_value();  // distinguished gets the final +1
    for (const auto& [c, s] : p.signs)
        if (s == 1) has_plus = true;
    if (has_plus) return std::nullopt;
    Verdict v{VerdictLevel::NonvanishingC, "rule_stein", {{"has_plus_one", false}}, {}, ""};
    v.notes.push_back("no +1-surgery: the result is Stein fillable, hence tight");
    return v;
}

std::optional<Verdict> rule_main1(const Rational& tb, const Rational& rot,
                                  const Rational& tau_star) {
    Hypotheses h{{"tb_q", tb}, {"rot_q", rot}, {"tau_star", tau_star}};
    if (tb + abs(rot) < 2 * tau_star - 1)
        return Verdict{VerdictLevel::CVanishes, "rule_main1", h, {}, ""};
    return std::nullopt;
}

namespace {

// Linking matrix of the (-1)-sublink, diagonal tb_i - 1.
Rational minus_sublink_det(const SurgeryPresentation& p) {
    std::vector<int> minus;
    for (const auto& [c, sg] : p.signs)
        if (sg == -1) minus.push_back(c);
    QMatrix m(minus.size(), minus.size());
    for (size_t i = 0; i < minus.size(); ++i) {
        m.at(i, i) = p.data.tb[minus[i] - 1] - 1;
        for (size_t j = i + 1; j < minus.size(); ++j) {
            Rational l = p.data.linking(minus[i], minus[j]);
            m.at(i, j) = l;
            m.at(j, i) = l;
        }
    }
    return det(m);
}

}  // namespace

std::optional<Verdict> rule_pro0(const SurgeryPresentation& p) {
    if (!p.annotations.isolated_summand) return std::nullopt;
    const IsolatedSummand& s = *p.annotations.isolated_summand;
    auto it = p.signs.find(s.host);
    if (it == p.signs.end() || it->second != 1) return std::nullopt;

    // The (-1)-sublink must present a rational homology sphere.
    Rational dm = minus_sublink_det(p);
    Hypotheses h{{"tb3", s.tb}, {"rot3", s.rot}, {"tau3", s.tau}, {"det_m2", dm}};
    if (dm == 0) return std::nullopt;  // orchestrator attaches the not-QHS3 note
    if (s.tb + abs(s.rot) < 2 * s.tau - 1)
        return Verdict{VerdictLevel::CVanishes, "rule_pro0", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_fig3(const Rational& tb1, const Rational& rot1, const Rational& tau1,
                                 const Rational& tb2) {
    Hypotheses h{{"tb1", tb1}, {"rot1", rot1}, {"tau1", tau1}, {"tb2", tb2}};
    if (tb2 == 1) return std::nullopt;
    if (tb1 + abs(rot1) < 2 * tau1 - 1)
        return Verdict{VerdictLevel::CVanishes, "rule_fig3", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_prop_tb(const Rational& tb_q, bool ambient_l_space_tight) {
    Hypotheses h{{"tb_q", tb_q}, {"ambient_l_space_tight", ambient_l_space_tight}};
    if (ambient_l_space_tight && tb_q < -1)
        return Verdict{VerdictLevel::CPlusVanishes, "rule_prop_tb", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_cor0(const Rational& tb1, const Rational& l, const KnotRecord& rec2) {
    Hypotheses h{{"tb1", tb1}, {"l", l}, {"g2", Rational(rec2.genus)},
                 {"l_space_knot", rec2.l_space_knot}};
    if (!rec2.l_space_knot) return std::nullopt;
    if (l * l > 2 * Rational(rec2.genus) * (tb1 + 1))
        return Verdict{VerdictLevel::CPlusVanishes, "rule_cor0", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_main3_1(const Rational& tb, const Rational& rot, const Rational& chi,
                                    const Integer& q) {
    Hypotheses h{{"tb_q", tb}, {"rot_q", rot}, {"chi", chi}, {"q", Rational(q)}};
    if (tb < -1 && tb - abs(rot) < chi / Rational(q))
        return Verdict{VerdictLevel::Overtwisted, "rule_main3_1", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_main3_2(const Rational& tb, const Rational& rot, const Rational& chi,
                                    const Integer& q) {
    Hypotheses h{{"tb_q", tb}, {"rot_q", rot}, {"chi", chi}, {"q", Rational(q)}};
    if (tb + abs(rot) < chi / Rational(q) - 2)
        return Verdict{VerdictLevel::Overtwisted, "rule_main3_2", h, {},
                       "any_positive_surgery"};
    return std::nullopt;
}

std::optional<Verdict> rule_cor2(const Rational& tb1, const Rational& rot1, const Rational& tb2,
                                 const Rational& rot2, int g1, int g2) {
    if (tb2 == 1) throw ExcludedCaseError("rule_cor2 excluded case: tb2 = 1");
    Rational tb_q = tb1 + 1 / (1 - tb2);
    Rational rot_q = rot1 + rot2 / (1 - tb2);
    // The clasp provides a rational Seifert surface of Euler characteristic
    // chi over the class order q; the inequality below is exactly
    // tb_q - |rot_q| < chi / q.
    Rational chi = rational_seifert_euler(g1, g2, tb2);
    Rational q = abs(1 - tb2);
    Rational rhs = 2 * Rational(g1) + (2 * Rational(g2) - 1) / abs(1 - tb2) + tb_q;
    Hypotheses h{{"tb1", tb1},   {"rot1", rot1}, {"tb2", tb2},   {"rot2", rot2},
                 {"g1", Rational(g1)}, {"g2", Rational(g2)}, {"tb_q", tb_q},
                 {"rot_q", rot_q},     {"chi", chi},         {"q", q}};
    if (tb_q < -1 && abs(rot_q) > rhs)
        return Verdict{VerdictLevel::Overtwisted, "rule_cor2", h, {}, ""};
    return std::nullopt;
}

std::optional<Verdict> rule_main2(const SurgeryPresentation& p) {
    if (!p.annotations.fig2_configuration) return std::nullopt;
    auto [a, b] = *p.annotations.fig2_configuration;
    auto sa = p.signs.find(a);
    auto sb = p.signs.find(b);
    if (sa == p.signs.end() || sa->second != 1) return std::nullopt;
    if (sb == p.signs.end() || sb->second != 1) return std::nullopt;
    if (static_cast<int>(p.cusp_totals.size()) < std::max(a, b)) return std::nullopt;
    Rational tb1 = p.data.tb[a - 1], tb2 = p.data.tb[b - 1];
    Rational l = p.data.linking(a, b);
    Main2Witness w =
        main2_witness(tb1, tb2, l, p.cusp_totals[a - 1], p.cusp_totals[b - 1]);
    Hypotheses h{{"tb1", tb1},
                 {"tb2", tb2},
                 {"l", l},
                 {"tb_lprime", w.tb_lprime},
                 {"cusp_lprime", Rational(w.cusp_lprime)},
                 {"framing_gap", w.framing_gap}};
    Verdict v{VerdictLevel::Overtwisted, "rule_main2", h, {}, ""};
    v.notes.push_back("surface framing of the witness knot matches its contact framing");
    return v;
}

std::optional<std::string> rule_loose(const Rational& tb, const Rational& rot, const Rational& chi,
                                      const Integer& q) {
    if (-abs(tb) + abs(rot) > -chi / Rational(q))
        return "complement of the auxiliary knot is overtwisted (loose): -|tb|+|rot| = " +
               rat_str(-abs(tb) + abs(rot)) + " > -chi/q = " + rat_str(-chi / Rational(q));
    return std::nullopt;
}

// --- orchestration ----------------------------------------------------------

namespace {

struct Effective {
    std::optional<Rational> tau;
    std::optional<Rational> tau_star;
    std::optional<int> genus;
    std::optional<bool> l_space_knot;
    std::optional<int> tb_max;
    std::optional<Rational> chi;
    std::optional<Rational> tb_q, rot_q;
    std::optional<Integer> order_q;
};

Effective resolve(const SurgeryPresentation& p, const KnotTable& table, int c) {
    Effective e;
    const DeclaredData* d = p.declared_for(c);
    const KnotRecord* rec = nullptr;
    if (d && d->knot) rec = &table.at(*d->knot);
    if (d) {
        e.tau = d->tau;
        e.tau_star = d->tau_star;
        e.genus = d->genus;
        e.l_space_knot = d->l_space_knot;
        e.chi = d->chi;
        e.tb_q = d->tb_q;
        e.rot_q = d->rot_q;
        e.order_q = d->order_q;
    }
    if (rec) {
        if (!e.tau) e.tau = rec->tau;
        if (!e.genus) e.genus = rec->genus;
        if (!e.l_space_knot) e.l_space_knot = rec->l_space_knot;
        if (rec->tb_max) e.tb_max = rec->tb_max;
    }
    if (e.l_space_knot && *e.l_space_knot && e.tau && e.genus && *e.tau != Rational(*e.genus))
        throw std::invalid_argument("component " + std::to_string(c) +
                                    ": L-space knot requires tau = genus");
    return e;
}

std::string component_name(const SurgeryPresentation& p, int c) {
    if (c >= 1 && c <= static_cast<int>(p.data.names.size())) return p.data.names[c - 1];
    return "L" + std::to_string(c);
}

std::string echo_presentation(const SurgeryPresentation& p) {
    std::ostringstream out;
    out << "components:\n";
    for (int c = 1; c <= p.data.size(); ++c) {
        out << "  " << component_name(p, c) << " tb=" << rat_str(p.data.tb[c - 1])
            << " rot=" << rat_str(p.data.rot[c - 1]);
        if (c <= static_cast<int>(p.cusp_totals.size()))
            out << " cusps=" << p.cusp_totals[c - 1];
        out << "\n";
    }
    out << "lk:\n";
    for (int a = 1; a <= p.data.size(); ++a)
        for (int b = a + 1; b <= p.data.size(); ++b)
            out << "  " << component_name(p, a) << " " << component_name(p, b) << " "
                << rat_str(p.data.linking(a, b)) << "\n";
    out << "surgery:\n";
    for (const auto& [c, s] : p.signs)
        out << "  " << component_name(p, c) << " " << (s > 0 ? "+1" : "-1") << "\n";
    if (p.distinguished) out << "distinguished: " << component_name(p, *p.distinguished) << "\n";
    out << "declared:\n";
    for (const auto& [c, d] : p.declared) {
        out << "  " << component_name(p, c);
        if (d.knot) out << " knot=" << *d.knot;
        if (d.tau) out << " tau=" << rat_str(*d.tau);
        if (d.tau_star) out << " tau_star=" << rat_str(*d.tau_star);
        if (d.genus) out << " genus=" << *d.genus;
        if (d.l_space_knot) out << " l_space_knot=" << (*d.l_space_knot ? "true" : "false");
        if (d.order_q) out << " q=" << d.order_q->str();
        if (d.chi) out << " chi=" << rat_str(*d.chi);
        if (d.tb_q) out << " tb_q=" << rat_str(*d.tb_q);
        if (d.rot_q) out << " rot_q=" << rat_str(*d.rot_q);
        out << "\n";
    }
    out << "annotations:\n";
    if (p.annotations.fig2_configuration)
        out << "  fig2_configuration " << component_name(p, p.annotations.fig2_configuration->first)
            << " " << component_name(p, p.annotations.fig2_configuration->second) << "\n";
    if (p.annotations.fig3_configuration)
        out << "  fig3_configuration " << component_name(p, p.annotations.fig3_configuration->first)
            << " " << component_name(p, p.annotations.fig3_configuration->second) << "\n";
    if (p.annotations.isolated_summand)
        out << "  isolated_summand " << component_name(p, p.annotations.isolated_summand->host)
            << " tb=" << rat_str(p.annotations.isolated_summand->tb)
            << " rot=" << rat_str(p.annotations.isolated_summand->rot)
            << " tau=" << rat_str(p.annotations.isolated_summand->tau) << "\n";
    if (p.q_scale != 1) out << "q_scale: " << p.q_scale.str() << "\n";
    return out.str();
}

void validate_presentation(const SurgeryPresentation& p) {
    for (const auto& [c, s] : p.signs) {
        if (c < 1 || c > p.data.size())
            throw std::invalid_argument("surgery sign for unknown component " + std::to_string(c));
        if (s != 1 && s != -1)
            throw std::invalid_argument("surgery signs must be +1 or -1");
    }
    if (p.distinguished) {
        if (*p.distinguished < 1 || *p.distinguished > p.data.size())
            throw std::invalid_argument("unknown distinguished component");
        if (p.signs.count(*p.distinguished))
            throw std::invalid_argument("distinguished component must not carry a surgery sign");
    }
    for (const auto& [c, d] : p.declared) {
        if (c < 1 || c > p.data.size())
            throw std::invalid_argument("declared data for unknown component " +
                                        std::to_string(c));
        if (d.order_q && *d.order_q < 1)
            throw std::invalid_argument("order_q must be a positive integer");
        if (d.genus && *d.genus < 0) throw std::invalid_argument("genus must be nonnegative");
    }
    if (p.q_scale < 1) throw std::invalid_argument("q_scale must be a positive integer");
    for (int c = 1; c <= p.data.size(); ++c)
        if (!p.signs.count(c) && (!p.distinguished || *p.distinguished != c))
            throw std::invalid_argument("component " + std::to_string(c) +
                                        " has no surgery sign and is not distinguished");
}

}  // namespace

void enforce_verdict_consistency(
    const std::vector<std::pair<std::string, VerdictLevel>>& fired) {
    bool nonvanishing = false, vanishing = false;
    std::vector<std::string> labels;
    for (const auto& [rule, level] : fired) {
        if (level == VerdictLevel::NonvanishingC) nonvanishing = true;
        if (level == VerdictLevel::CPlusVanishes || level == VerdictLevel::CVanishes ||
            level == VerdictLevel::Overtwisted)
            vanishing = true;
        labels.push_back(rule + "=" + to_string(level));
    }
    if (nonvanishing && vanishing) throw InternalInconsistencyError(labels);
}

Report classify(const SurgeryPresentation& p, const KnotTable& table,
                const ClassifyOptions& options) {
    validate_presentation(p);
    Report report;
    report.presentation_echo = echo_presentation(p);

    auto enabled = [&](const std::string& rule) { return !options.disabled_rules.count(rule); };
    auto skip = [&](const std::string& rule, const std::string& why,
                    const std::string& staging = "") {
        RuleEval e;
        e.rule = rule;
        e.staging = staging;
        e.status = RuleStatus::Skipped;
        e.notes.push_back(why);
        report.rules.push_back(std::move(e));
    };
    auto push_eval = [&](const std::string& rule, const std::optional<Verdict>& v, Hypotheses hyp,
                         const std::string& staging = "",
                         const std::vector<std::string>& notes = {}) {
        RuleEval e;
        e.rule = rule;
        e.staging = staging;
        e.notes = notes;
        if (v) {
            e.status = RuleStatus::Fired;
            e.level = v->level;
            e.hypotheses = v->hypotheses;
            e.scope = v->scope;
            for (const std::string& n : v->notes) e.notes.push_back(n);
        } else {
            e.status = RuleStatus::Silent;
            e.hypotheses = std::move(hyp);
        }
        report.rules.push_back(std::move(e));
    };

    std::vector<Effective> eff;
    eff.reserve(p.data.size());
    for (int c = 1; c <= p.data.size(); ++c) eff.push_back(resolve(p, table, c));

    // Sanity notes: a front cannot exceed the maximal tb of its declared knot type.
    for (int c = 1; c <= p.data.size(); ++c)
        if (eff[c - 1].tb_max && p.data.tb[c - 1] > Rational(*eff[c - 1].tb_max))
            report.notes.push_back("warning: " + component_name(p, c) + " has tb " +
                                   rat_str(p.data.tb[c - 1]) + " above the table bound " +
                                   std::to_string(*eff[c - 1].tb_max));

    // --- stagings ---
    std::vector<int> staged_components;
    if (p.distinguished) {
        staged_components.push_back(*p.distinguished);
    } else {
        for (int c = 1; c <= p.data.size(); ++c) {
            auto it = p.signs.find(c);
            if (it != p.signs.end() && it->second == 1) staged_components.push_back(c);
        }
    }

    for (int c0 : staged_components) {
        StagingInfo st;
        st.distinguished = c0;
        st.name = component_name(p, c0);

        SurgeryPresentation sub = p;
        sub.distinguished = c0;
        sub.signs.erase(c0);

        LinkingMatrices lm = build_matrices(sub);
        st.surgered = lm.surgered;
        st.det_m = det(lm.m);
        st.is_qhs3 = st.det_m != 0;

        const Effective& e0 = eff[c0 - 1];
        if (st.is_qhs3) {
            auto [tbq, rotq] = surgery_transform(lm, p.data.tb[c0 - 1], p.data.rot[c0 - 1]);
            st.tb_q = tbq;
            st.rot_q = rotq;
            if (e0.tb_q && *e0.tb_q != tbq)
                throw std::invalid_argument("declared tb_q " + rat_str(*e0.tb_q) +
                                            " disagrees with computed " + rat_str(tbq));
            if (e0.rot_q && *e0.rot_q != rotq)
                throw std::invalid_argument("declared rot_q " + rat_str(*e0.rot_q) +
                                            " disagrees with computed " + rat_str(rotq));
            try {
                HomologyData h = homology(lm, p.q_scale);
                st.torsion = h.torsion;
                if (h.order_of_class) {
                    st.q = h.order_of_class;
                    if (e0.order_q && *e0.order_q != *h.order_of_class)
                        throw std::invalid_argument(
                            "declared order q = " + e0.order_q->str() +
                            " disagrees with the computed class order " +
                            h.order_of_class->str());
                }
            } catch (const SurgeryError& ex) {
                st.notes.push_back(std::string("homology not computed: ") + ex.what());
            }
            if (!st.q && e0.order_q) {
                st.q = e0.order_q;
                st.notes.push_back("class order taken from the declaration");
            }

            // chi: declared, else 1-2g when the distinguished component is
            // split from every surgery component in the front (a genus-g
            // Seifert surface then lives in a ball the surgeries miss).
            if (e0.chi) {
                st.chi = e0.chi;
            } else {
                bool split = true;
                for (int s : lm.surgered)
                    if (p.shared(c0, s) != 0) split = false;
                if (split && e0.genus) {
                    st.chi = Rational(1) - 2 * Rational(*e0.genus);
                    st.chi_defaulted = true;
                    st.notes.push_back(
                        "chi defaulted to 1-2g: distinguished component is split from every "
                        "surgery component in the front");
                }
            }

            if (tbq != -1) {
                auto [dt, dr] = dual_invariants(tbq, rotq);
                st.dual_tb = dt;
                st.dual_rot = dr;
                if (st.q) {
                    try {
                        st.dual_ord = dual_order(*st.q, tbq);
                    } catch (const SurgeryError& ex) {
                        st.notes.push_back(std::string("dual order not attached: ") + ex.what());
                    }
                }
            } else {
                st.notes.push_back("surgery dual degenerate at tb_q = -1");
            }
        }

        // Ambient tightness/L-space gate for rule_prop_tb, derived
        // conservatively from what the table knows about the surgered
        // components.
        {
            const std::vector<int>& sur = st.surgered;
            if (sur.empty()) {
                st.ambient_l_space_tight = true;
                st.gate_reason = "ambient is the standard tight 3-sphere";
            } else {
                bool all_minus_unknots = true;
                for (int c : sur) {
                    const Effective& ec = eff[c - 1];
                    if (p.signs.at(c) != -1 || !ec.genus || *ec.genus != 0)
                        all_minus_unknots = false;
                }
                if (all_minus_unknots)
                    for (size_t i = 0; i < sur.size() && all_minus_unknots; ++i)
                        for (size_t j = i + 1; j < sur.size(); ++j)
                            if (p.data.linking(sur[i], sur[j]) != 0) all_minus_unknots = false;
                bool plus_l_space = false;
                if (sur.size() == 1 && p.signs.at(sur[0]) == 1) {
                    const Effective& ec = eff[sur[0] - 1];
                    plus_l_space = ec.l_space_knot && *ec.l_space_knot && ec.genus &&
                                   *ec.genus >= 1 &&
                                   p.data.tb[sur[0] - 1] == Rational(2 * *ec.genus - 1);
                }
                if (all_minus_unknots) {
                    st.ambient_l_space_tight = true;
                    st.gate_reason =
                        "(-1)-surgery on split unknots gives a tight connected sum of lens spaces";
                } else if (plus_l_space) {
                    st.ambient_l_space_tight = true;
                    st.gate_reason =
                        "(+1)-surgery on an L-space knot at tb = 2g-1 gives a tight L-space";
                } else {
                    st.gate_reason = "ambient tightness/L-space status not derivable";
                }
            }
        }

        // tau* in the staged ambient: declared; equals tau for the standard
        // 3-sphere (no surgered components).
        std::optional<Rational> tau_star = e0.tau_star;
        if (!tau_star && st.surgered.empty() && e0.tau) {
            tau_star = e0.tau;
            st.notes.push_back("tau_star taken from tau: ambient is the standard 3-sphere");
        }

        const std::string& sn = st.name;
        if (!st.is_qhs3) {
            for (const char* r : {"rule_main1", "rule_prop_tb", "rule_main3_1", "rule_main3_2",
                                  "rule_loose"})
                if (enabled(r)) skip(r, "ambient surgery is not a QHS3 (det M = 0)", sn);
        } else {
            if (enabled("rule_main1")) {
                if (tau_star)
                    push_eval("rule_main1", rule_main1(*st.tb_q, *st.rot_q, *tau_star),
                              {{"tb_q", *st.tb_q}, {"rot_q", *st.rot_q}, {"tau_star", *tau_star}},
                              sn);
                else
                    skip("rule_main1", "tau_star not declared for this staging", sn);
            }
            if (enabled("rule_prop_tb")) {
                auto v = rule_prop_tb(*st.tb_q, st.ambient_l_space_tight);
                push_eval("rule_prop_tb", v,
                          {{"tb_q", *st.tb_q}, {"ambient_l_space_tight", st.ambient_l_space_tight}},
                          sn, {st.gate_reason});
            }
            for (const char* r : {"rule_main3_1", "rule_main3_2"}) {
                if (!enabled(r)) continue;
                if (!st.chi) {
                    skip(r, "chi not declared or derivable", sn);
                } else if (!st.q) {
                    skip(r, "class order q not computable", sn);
                } else if (std::string(r) == "rule_main3_1") {
                    push_eval(r, rule_main3_1(*st.tb_q, *st.rot_q, *st.chi, *st.q),
                              {{"tb_q", *st.tb_q},
                               {"rot_q", *st.rot_q},
                               {"chi", *st.chi},
                               {"q", Rational(*st.q)}},
                              sn);
                } else {
                    push_eval(r, rule_main3_2(*st.tb_q, *st.rot_q, *st.chi, *st.q),
                              {{"tb_q", *st.tb_q},
                               {"rot_q", *st.rot_q},
                               {"chi", *st.chi},
                               {"q", Rational(*st.q)}},
                              sn);
                }
            }
            if (enabled("rule_loose")) {
                if (st.dual_tb && st.chi && st.dual_ord) {
                    // Stabilize the surgery dual until tb is negative; the
                    // loose bound then probes the same inequality as the
                    // overtwistedness criterion.
                    Integer kc = rat_ceil(*st.dual_tb);
                    int k = kc < 0 ? 1 : static_cast<int>(kc) + 1;
                    int sign = *st.dual_rot >= 0 ? 1 : -1;
                    auto [stb, srot] = stabilize(*st.dual_tb, *st.dual_rot, sign, k);
                    auto note = rule_loose(stb, srot, *st.chi, *st.dual_ord);
                    RuleEval e;
                    e.rule = "rule_loose";
                    e.staging = sn;
                    e.hypotheses = {{"dual_tb", *st.dual_tb},
                                    {"dual_rot", *st.dual_rot},
                                    {"stab_tb", stb},
                                    {"stab_rot", srot},
                                    {"chi", *st.chi},
                                    {"q", Rational(*st.dual_ord)}};
                    e.status = note ? RuleStatus::Fired : RuleStatus::Silent;
                    if (note) e.notes.push_back(*note);
                    report.rules.push_back(std::move(e));
                } else {
                    skip("rule_loose", "dual data, chi, or class order unavailable", sn);
                }
            }
        }
        report.stagings.push_back(std::move(st));
    }
    if (staged_components.empty())
        for (const char* r :
             {"rule_main1", "rule_prop_tb", "rule_main3_1", "rule_main3_2", "rule_loose"})
            if (enabled(r)) skip(r, "no +1-surgery staging in this presentation");

    // --- global rules ---
    if (enabled("rule_stein")) {
        auto v = rule_stein(p);
        bool has_plus = !v.has_value();
        push_eval("rule_stein", v, {{"has_plus_one", has_plus}});
    }

    if (enabled("rule_pro0")) {
        if (!p.annotations.isolated_summand) {
            skip("rule_pro0", "no isolated_summand annotation");
        } else {
            const IsolatedSummand& s = *p.annotations.isolated_summand;
            auto it = p.signs.find(s.host);
            if (it == p.signs.end() || it->second != 1) {
                skip("rule_pro0", "summand host does not carry sign +1");
            } else {
                auto v = rule_pro0(p);
                Rational dm = minus_sublink_det(p);
                Hypotheses h{{"tb3", s.tb}, {"rot3", s.rot}, {"tau3", s.tau}, {"det_m2", dm}};
                std::vector<std::string> notes;
                if (!v && dm == 0)
                    notes.push_back("(-1)-sublink does not present a QHS3 (det = 0)");
                push_eval("rule_pro0", v, h, "", notes);
            }
        }
    }

    auto clasp_pair = [&]() -> std::optional<std::pair<int, int>> {
        if (!p.annotations.fig3_configuration) return std::nullopt;
        auto [a, b] = *p.annotations.fig3_configuration;
        auto sa = p.signs.find(a);
        auto sb = p.signs.find(b);
        if (sa == p.signs.end() || sa->second != 1) return std::nullopt;
        if (sb == p.signs.end() || sb->second != -1) return std::nullopt;
        return std::pair{a, b};
    };

    if (enabled("rule_fig3")) {
        if (!p.annotations.fig3_configuration) {
            skip("rule_fig3", "no fig3_configuration annotation");
        } else if (!clasp_pair()) {
            skip("rule_fig3", "annotated components are not a +1/-1 pair");
        } else {
            auto [a, b] = *clasp_pair();
            if (abs(p.data.linking(a, b)) != 1) {
                skip("rule_fig3", "annotation inconsistent: |lk| != 1 for the clasp pair");
            } else if (!eff[a - 1].tau) {
                skip("rule_fig3", "tau not available for " + component_name(p, a));
            } else {
                push_eval("rule_fig3",
                          rule_fig3(p.data.tb[a - 1], p.data.rot[a - 1], *eff[a - 1].tau,
                                    p.data.tb[b - 1]),
                          {{"tb1", p.data.tb[a - 1]},
                           {"rot1", p.data.rot[a - 1]},
                           {"tau1", *eff[a - 1].tau},
                           {"tb2", p.data.tb[b - 1]}});
            }
        }
    }

    if (enabled("rule_cor0")) {
        bool two_plus = p.data.size() == 2 && !p.distinguished && p.signs.size() == 2 &&
                        p.signs.count(1) && p.signs.count(2) && p.signs.at(1) == 1 &&
                        p.signs.at(2) == 1;
        if (!two_plus) {
            skip("rule_cor0", "needs a two-component all-(+1) presentation");
        } else {
            for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
                const Effective& ej = eff[j - 1];
                std::string tag = "companion=" + component_name(p, j);
                if (!ej.genus || !ej.l_space_knot) {
                    skip("rule_cor0", "genus or L-space status unknown for companion", tag);
                    continue;
                }
                KnotRecord rec{component_name(p, j), ej.tau.value_or(Rational(*ej.genus)),
                               *ej.genus, *ej.l_space_knot, ej.tb_max};
                push_eval("rule_cor0",
                          rule_cor0(p.data.tb[i - 1], p.data.linking(i, j), rec),
                          {{"tb1", p.data.tb[i - 1]},
                           {"l", p.data.linking(i, j)},
                           {"g2", Rational(*ej.genus)},
                           {"l_space_knot", *ej.l_space_knot}},
                          tag);
            }
        }
    }

    if (enabled("rule_cor2")) {
        if (!p.annotations.fig3_configuration) {
            skip("rule_cor2", "no fig3_configuration annotation");
        } else if (!clasp_pair()) {
            skip("rule_cor2", "annotated components are not a +1/-1 pair");
        } else {
            auto [a, b] = *clasp_pair();
            if (p.data.linking(a, b) != 1) {
                skip("rule_cor2", "annotation inconsistent: lk != 1 for the clasp pair");
            } else if (!eff[a - 1].genus || !eff[b - 1].genus) {
                skip("rule_cor2", "genus unknown for a clasp component");
            } else {
                try {
                    push_eval("rule_cor2",
                              rule_cor2(p.data.tb[a - 1], p.data.rot[a - 1], p.data.tb[b - 1],
                                        p.data.rot[b - 1], *eff[a - 1].genus, *eff[b - 1].genus),
                              {{"tb1", p.data.tb[a - 1]},
                               {"rot1", p.data.rot[a - 1]},
                               {"tb2", p.data.tb[b - 1]},
                               {"rot2", p.data.rot[b - 1]},
                               {"g1", Rational(*eff[a - 1].genus)},
                               {"g2", Rational(*eff[b - 1].genus)}});
                } catch (const ExcludedCaseError& ex) {
                    RuleEval e;
                    e.rule = "rule_cor2";
                    e.status = RuleStatus::Excluded;
                    e.notes.push_back(ex.what());
                    report.rules.push_back(std::move(e));
                }
            }
        }
    }

    if (enabled("rule_main2")) {
        if (!p.annotations.fig2_configuration) {
            skip("rule_main2", "no fig2_configuration annotation");
        } else {
            auto [a, b] = *p.annotations.fig2_configuration;
            auto sa = p.signs.find(a);
            auto sb = p.signs.find(b);
            if (sa == p.signs.end() || sa->second != 1 || sb == p.signs.end() ||
                sb->second != 1) {
                skip("rule_main2", "annotated components do not both carry sign +1");
            } else if (static_cast<int>(p.cusp_totals.size()) < std::max(a, b)) {
                skip("rule_main2", "cusp counts unavailable for the witness");
            } else {
                push_eval("rule_main2", rule_main2(p), {});
            }
        }
    }

    // Stable ordering: rules in canonical order, stagings in component order.
    std::stable_sort(report.rules.begin(), report.rules.end(),
                     [](const RuleEval& a, const RuleEval& b) {
                         auto rank = [](const std::string& r) {
                             for (size_t i = 0; i < kAllRules.size(); ++i)
                                 if (kAllRules[i] == r) return i;
                             return kAllRules.size();
                         };
                         return rank(a.rule) < rank(b.rule);
                     });

    // Final verdict: lattice maximum over fired rules; rule_loose only files
    // notes.
    std::vector<std::pair<std::string, VerdictLevel>> fired;
    for (const RuleEval& e : report.rules)
        if (e.status == RuleStatus::Fired && e.level) fired.push_back({e.rule, *e.level});

    enforce_verdict_consistency(fired);

    for (const auto& [rule, level] : fired) {
        if (static_cast<int>(level) > static_cast<int>(report.final_level))
            report.final_level = level;
        report.fired_rules.push_back(rule);
    }
    std::sort(report.fired_rules.begin(), report.fired_rules.end());
    report.fired_rules.erase(std::unique(report.fired_rules.begin(), report.fired_rules.end()),
                             report.fired_rules.end());
    return report;
}

}  // namespace legsurg
