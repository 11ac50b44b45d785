#pragma once

#include <string>
#include <vector>

namespace wqt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // expected-vs-got detail, filled on failure
};

/// Accumulated result of one verification section.  Deterministic: no
/// timing or environment data; those live in the CLI layer.
struct Report {
    std::string section;
    std::vector<CheckResult> checks;

    explicit Report(std::string sec = "") : section(std::move(sec)) {}

    void add(std::string name, bool pass, std::string witness = "");
    /// Record an equality check; builds the witness from the operands.
    template <class T>
    void expect_eq(const std::string& name, const T& got, const T& want) {
        bool ok = (got == want);
        add(name, ok, ok ? "" : "got " + got.to_string() + " want " + want.to_string());
    }
    void merge(const Report& o);

    bool ok() const;
    int failed() const;
    int total() const { return static_cast<int>(checks.size()); }

    /// One line per failed check plus a summary line.
    std::string render_text(bool verbose = false) const;
    std::string to_json_string() const;
    /// Inverse of to_json_string; throws on malformed input.
    static Report from_json_string(const std::string& text);
};

}  // namespace wqt
