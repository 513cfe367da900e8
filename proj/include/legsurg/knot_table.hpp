#pragma once

#include "legsurg/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace legsurg {

// Declared concordance data for named knots. The bundled table covers the
// knots used by the fixtures; values come from the standard knot tables.
struct KnotRecord {
    std::string name;
    Rational tau;
    int genus = 0;
    bool l_space_knot = false;
    std::optional<int> tb_max;  // optional fifth column, used for sanity notes
};

class KnotTable {
public:
    // Record lines: "name tau genus l_space_knot [tb_max]"; '#' comments.
    // Enforces tau == genus for L-space-knot records.
    static KnotTable parse(const std::string& text);
    static KnotTable load_file(const std::string& path);
    static const KnotTable& bundled();

    const KnotRecord* find(const std::string& name) const;
    const KnotRecord& at(const std::string& name) const;
    size_t size() const { return records_.size(); }

private:
    std::map<std::string, KnotRecord> records_;
};

}  // namespace legsurg
