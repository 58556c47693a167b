#pragma once

// The hand-built findings table for fixtures/examples.req and a helper that
// diffs actual findings against it.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reqlint/rules.hpp"

namespace expected {

struct Row {
    std::string requirement;
    std::string rule;
    std::string classification;
    std::string severity;
    std::string evidence; ///< comma-joined

    bool operator==(const Row&) const = default;
};

inline std::vector<Row> load(const std::string& path) {
    std::ifstream in(path);
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) f.push_back(cell);
        f.resize(5);
        rows.push_back({f[0], f[1], f[2], f[3], f[4]});
    }
    return rows;
}

inline Row to_row(const reqlint::Finding& f) {
    std::string ev;
    for (std::size_t i = 0; i < f.evidence.size(); ++i) ev += (i ? "," : "") + f.evidence[i];
    return {f.requirement_id.value_or("-"), std::string(reqlint::to_string(f.rule)),
            std::string(reqlint::to_string(f.classification)), std::string(reqlint::to_string(f.severity)), ev};
}

inline std::vector<Row> to_rows(const std::vector<reqlint::Finding>& findings) {
    std::vector<Row> rows;
    for (const auto& f : findings) rows.push_back(to_row(f));
    return rows;
}

/// Rows that survive the default configuration (mandatory ones dropped).
inline std::vector<Row> without_mandatory(const std::vector<Row>& rows) {
    std::vector<Row> out;
    for (const auto& r : rows)
        if (r.classification != "mandatory") out.push_back(r);
    return out;
}

inline std::string describe(const Row& r) {
    return r.requirement + " " + r.rule + " " + r.classification + " " + r.severity + " [" + r.evidence + "]";
}

/// Empty when equal, otherwise a readable listing of both sides.
inline std::string diff(const std::vector<Row>& want, const std::vector<Row>& got) {
    if (want == got) return {};
    std::ostringstream os;
    const auto n = std::max(want.size(), got.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string a = i < want.size() ? describe(want[i]) : "(none)";
        const std::string b = i < got.size() ? describe(got[i]) : "(none)";
        os << (a == b ? "  " : "! ") << "want " << a << " | got " << b << '\n';
    }
    return os.str();
}

} // namespace expected
