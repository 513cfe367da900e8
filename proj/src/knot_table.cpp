#include "legsurg/knot_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace legsurg {

namespace {

const char* kBundledTable = R"(# name tau genus l_space_knot [tb_max]
unknot    0  0  true  -1
trefoil_r 1  1  true   1
trefoil_l -1 1  false -6
fig8      0  1  false -3
)";

}  // namespace

KnotTable KnotTable::parse(const std::string& text) {
    KnotTable table;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        KnotRecord rec;
        std::string tau_s, lsk_s;
        if (!(ls >> rec.name)) continue;  // blank
        if (!(ls >> tau_s >> rec.genus >> lsk_s))
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": expected 'name tau genus l_space_knot'");
        rec.tau = parse_rational(tau_s);
        if (lsk_s == "true" || lsk_s == "1")
            rec.l_space_knot = true;
        else if (lsk_s == "false" || lsk_s == "0")
            rec.l_space_knot = false;
        else
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": bad boolean '" + lsk_s + "'");
        if (int tb; ls >> tb) rec.tb_max = tb;
        if (rec.genus < 0)
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": negative genus");
        if (rec.l_space_knot && rec.tau != Rational(rec.genus))
            throw std::invalid_argument("knot table line " + std::to_string(lineno) +
                                        ": L-space knot must have tau = genus");
        table.records_[rec.name] = rec;
    }
    return table;
}

KnotTable KnotTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open knot table '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const KnotTable& KnotTable::bundled() {
    static const KnotTable table = parse(kBundledTable);
    return table;
}

const KnotRecord* KnotTable::find(const std::string& name) const {
    auto it = records_.find(name);
    return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& KnotTable::at(const std::string& name) const {
    const KnotRecord* rec = find(name);
    if (!rec) throw std::out_of_range("no knot table record for '" + name + "'");
    return *rec;
}

}  // namespace legsurg
