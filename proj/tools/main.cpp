#include "legsurg/classify.hpp"
#include "legsurg/invariants.hpp"
#include "legsurg/knot_table.hpp"
#include "legsurg/presentation.hpp"
#include "legsurg/report.hpp"
#include "legsurg/snf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace legsurg;

namespace {

// Exit codes: 0 informational (Inconclusive / NonvanishingC), 1 fixture
// mismatch, 2 parse or validity error, 3 internal inconsistency, 10/11/12
// CPlusVanishes/CVanishes/Overtwisted.
int verdict_exit_code(VerdictLevel level) {
    switch (level) {
        case VerdictLevel::Inconclusive:
        case VerdictLevel::NonvanishingC: return 0;
        case VerdictLevel::CPlusVanishes: return 10;
        case VerdictLevel::CVanishes: return 11;
        case VerdictLevel::Overtwisted: return 12;
    }
    return 0;
}

KnotTable resolve_table(const std::string& flag_path) {
    if (!flag_path.empty()) return KnotTable::load_file(flag_path);
    if (const char* env = std::getenv("LEGSURG_KNOT_TABLE")) return KnotTable::load_file(env);
    return KnotTable::bundled();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Canonical summary lines compared against expect.txt files.
std::vector<std::string> summary_lines(const Report& report) {
    std::vector<std::string> lines;
    lines.push_back("verdict " + to_string(report.final_level));
    for (const std::string& r : report.fired_rules) lines.push_back("fired " + r);
    for (const StagingInfo& st : report.stagings) {
        std::string p = "check staging." + st.name + ".";
        lines.push_back(p + "det_m " + rat_str(st.det_m));
        if (st.tb_q) lines.push_back(p + "tb_q " + rat_str(*st.tb_q));
        if (st.rot_q) lines.push_back(p + "rot_q " + rat_str(*st.rot_q));
        if (st.q) lines.push_back(p + "q " + st.q->str());
        if (st.chi) lines.push_back(p + "chi " + rat_str(*st.chi));
        if (st.dual_tb) lines.push_back(p + "dual_tb " + rat_str(*st.dual_tb));
        if (st.dual_rot) lines.push_back(p + "dual_rot " + rat_str(*st.dual_rot));
        if (st.dual_ord) lines.push_back(p + "dual_order " + st.dual_ord->str());
    }
    return lines;
}

int run_examples(const std::string& fixtures_dir, const std::string& only,
                 const KnotTable& table) {
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(fixtures_dir))
        if (entry.is_directory() && fs::exists(entry.path() / "presentation.txt"))
            dirs.push_back(entry.path());
    std::sort(dirs.begin(), dirs.end());

    int failures = 0, ran = 0;
    for (const fs::path& dir : dirs) {
        std::string name = dir.filename().string();
        if (!only.empty() && name != only) continue;
        ++ran;
        std::string status = "pass";
        std::vector<std::string> diffs;
        try {
            Presentation pres = load_presentation_file((dir / "presentation.txt").string());
            Report report = classify(pres.surgery, table);
            std::vector<std::string> actual = summary_lines(report);
            std::istringstream exp(read_file((dir / "expect.txt").string()));
            std::string line;
            while (std::getline(exp, line)) {
                if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
                line.erase(0, line.find_first_not_of(" \t\r"));
                line.erase(line.find_last_not_of(" \t\r") + 1);
                if (line.empty()) continue;
                if (std::find(actual.begin(), actual.end(), line) == actual.end()) {
                    status = "FAIL";
                    std::string key = line.substr(0, line.find_last_of(' '));
                    std::string got = "(absent)";
                    for (const std::string& a : actual)
                        if (a.rfind(key + " ", 0) == 0) got = a;
                    diffs.push_back("  expected: " + line + "\n  actual:   " + got);
                }
            }
        } catch (const std::exception& e) {
            status = "FAIL";
            diffs.push_back(std::string("  error: ") + e.what());
        }
        if (status == "FAIL") ++failures;
        std::cout << name << ": " << status << "\n";
        for (const std::string& d : diffs) std::cout << d << "\n";
    }
    if (ran == 0) {
        std::cerr << "no fixtures matched\n";
        return 1;
    }
    std::cout << (failures ? "FAILURES: " : "all passed: ") << (ran - failures) << "/" << ran
              << "\n";
    return failures ? 1 : 0;
}

ZMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Integer>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<Integer> row;
        std::string tok;
        while (ls >> tok) row.push_back(Integer(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix");
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::runtime_error("ragged matrix rows");
    ZMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian front invariants and contact surgery classification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string table_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--knot-table", table_path, "knot table file (overrides LEGSURG_KNOT_TABLE)");

    auto* inv = app.add_subcommand("invariants", "classical invariants of a front word file");
    std::string inv_path;
    bool sketch = false;
    inv->add_option("front", inv_path, "front word file")->required();
    inv->add_flag("--sketch", sketch, "print a rough sketch of the front");

    auto* cls = app.add_subcommand("classify", "classify a surgery presentation file");
    std::string cls_path;
    cls->add_option("presentation", cls_path, "presentation file")->required();

    auto* ex = app.add_subcommand("examples", "replay bundled fixtures against expectations");
    std::string fixtures_dir = "fixtures";
    std::string only_fixture;
    if (const char* env = std::getenv("LEGSURG_FIXTURES")) fixtures_dir = env;
    ex->add_option("--fixtures", fixtures_dir, "fixtures directory");
    ex->add_option("--fixture", only_fixture, "run a single fixture by name");

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_path;
    snf->add_option("matrix", snf_path, "matrix file of whitespace-separated integer rows")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            Presentation pres;
            try {
                pres.word = parse_front_word(read_file(inv_path));
                pres.diagram = build_diagram(pres.word);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            ClassicalData data = classical_data(pres.diagram);
            if (format == "json")
                std::cout << invariants_json(data).dump(2) << "\n";
            else
                std::cout << invariants_text(data);
            if (sketch) std::cout << front_sketch(pres.word);
            return 0;
        }

        if (*cls) {
            KnotTable table = resolve_table(table_path);
            Presentation pres;
            try {
                pres = load_presentation_file(cls_path);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            Report report;
            try {
                report = classify(pres.surgery, table);
            } catch (const InternalInconsistencyError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 3;
            }
            if (format == "json")
                std::cout << report_json(report).dump(2) << "\n";
            else
                std::cout << report_text(report);
            return verdict_exit_code(report.final_level);
        }

        if (*ex) return run_examples(fixtures_dir, only_fixture, resolve_table(table_path));

        if (*snf) {
            ZMatrix m = parse_matrix(read_file(snf_path));
            SnfResult r = smith_normal_form(m);
            if (format == "json") {
                nlohmann::json divisors = nlohmann::json::array();
                for (const Integer& d : r.divisors) divisors.push_back(d.str());
                auto mat = [](const ZMatrix& z) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (size_t i = 0; i < z.rows(); ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (size_t j = 0; j < z.cols(); ++j) row.push_back(z.at(i, j).str());
                        rows.push_back(row);
                    }
                    return rows;
                };
                std::cout << nlohmann::json{{"divisors", divisors}, {"u", mat(r.u)},
                                            {"v", mat(r.v)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "divisors:";
                for (const Integer& d : r.divisors) std::cout << " " << d.str();
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
