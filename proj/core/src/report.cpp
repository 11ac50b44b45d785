#include "wqt/report.hpp"

#include <sstream>

#include "json.hpp"

namespace wqt {

void Report::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

void Report::merge(const Report& o) {
    for (const auto& c : o.checks) {
        CheckResult cc = c;
        if (!o.section.empty()) cc.name = o.section + "/" + cc.name;
        checks.push_back(std::move(cc));
    }
}

bool Report::ok() const { return failed() == 0; }

int Report::failed() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string Report::render_text(bool verbose) const {
    std::ostringstream os;
    for (const auto& c : checks) {
        if (!c.pass) {
            os << "FAIL " << section << "/" << c.name;
            if (!c.witness.empty()) os << ": " << c.witness;
            os << "\n";
        } else if (verbose) {
            os << "ok   " << section << "/" << c.name << "\n";
        }
    }
    os << (ok() ? "PASS " : "FAIL ") << section << " (" << total() - failed()
       << "/" << total() << " checks)\n";
    return os.str();
}

std::string Report::to_json_string() const {
    nlohmann::json j;
    j["section"] = section;
    j["total"] = total();
    j["failed"] = failed();
    j["pass"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        j["checks"].push_back(cj);
    }
    return j.dump(2);
}

Report Report::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report rep(j.at("section").get<std::string>());
    for (const auto& cj : j.at("checks"))
        rep.add(cj.at("name").get<std::string>(), cj.at("pass").get<bool>(),
                cj.value("witness", ""));
    return rep;
}

}  // namespace wqt
