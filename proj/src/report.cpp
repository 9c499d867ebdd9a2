#include "qsd/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qsd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string params_text(const DesignParams& d) {
    std::ostringstream os;
    os << d.v << ',' << d.b << ',' << d.r << ',' << d.k << ',' << d.lambda << ",y=" << d.y;
    return os.str();
}

}  // namespace

void EliminationReport::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ReportEntry& a, const ReportEntry& b) {
                         if (a.case_id != b.case_id) return a.case_id < b.case_id;
                         bool aq = a.q.has_value(), bq = b.q.has_value();
                         if (aq != bq) return !aq;  // symbolic summary first
                         if (aq && *a.q != *b.q) return *a.q < *b.q;
                         return a.stage < b.stage;
                     });
}

std::size_t EliminationReport::count(const std::string& verdict) const {
    std::size_t n = 0;
    for (const auto& e : entries)
        if (e.verdict == verdict) ++n;
    return n;
}

bool EliminationReport::clean() const {
    return count(kSurvivor) == 0 && count(kUnresolved) == 0;
}

std::string EliminationReport::to_jsonl() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        ordered_json j;
        j["case_id"] = e.case_id;
        j["family"] = e.family;
        j["subgroup"] = e.subgroup;
        j["stage"] = e.stage;
        if (e.q)
            j["q"] = *e.q;
        else
            j["q"] = nullptr;
        j["h"] = e.h;
        j["c"] = e.c ? ordered_json(e.c->get_str()) : ordered_json(nullptr);
        j["a"] = e.a ? ordered_json(e.a->get_str()) : ordered_json(nullptr);
        ordered_json params = ordered_json::array();
        for (const auto& p : e.params) {
            ordered_json pj;
            pj["v"] = p.v.get_str();
            pj["b"] = p.b.get_str();
            pj["r"] = p.r.get_str();
            pj["k"] = p.k.get_str();
            pj["lambda"] = p.lambda.get_str();
            pj["y"] = p.y;
            params.push_back(std::move(pj));
        }
        j["params"] = std::move(params);
        j["verdict"] = e.verdict;
        j["annotations"] = e.annotations;
        os << j.dump() << '\n';
    }
    return os.str();
}

std::string EliminationReport::to_table() const {
    std::ostringstream os;
    os << std::left << std::setw(18) << "case" << std::setw(8) << "family" << std::setw(16)
       << "stage" << std::setw(10) << "q" << std::setw(12) << "verdict"
       << "detail\n";
    std::size_t eliminated = 0;
    std::vector<std::string> case_ids;
    for (const auto& e : entries) {
        if (case_ids.empty() || case_ids.back() != e.case_id) case_ids.push_back(e.case_id);
        os << std::left << std::setw(18) << e.case_id << std::setw(8) << e.family
           << std::setw(16) << e.stage << std::setw(10) << (e.q ? std::to_string(*e.q) : "-")
           << std::setw(12) << e.verdict;
        std::string detail;
        if (!e.h.empty()) detail += "h=" + e.h + " ";
        if (e.c) detail += "c=" + e.c->get_str() + " ";
        if (e.a) detail += "a=" + e.a->get_str() + " ";
        for (const auto& p : e.params) detail += "[" + params_text(p) + "] ";
        if (!e.annotations.empty()) {
            detail += "{";
            for (std::size_t i = 0; i < e.annotations.size(); ++i)
                detail += (i ? ";" : "") + e.annotations[i];
            detail += "}";
        }
        os << detail << '\n';
        if (e.verdict == kEliminated) ++eliminated;
    }
    os << "cases: " << case_ids.size() << ", eliminated: " << eliminated
       << ", survivors: " << count(kSurvivor) << ", unresolved: " << count(kUnresolved)
       << '\n';
    return os.str();
}

EliminationReport report_from_jsonl(const std::string& text) {
    EliminationReport rep;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line);
        ReportEntry e;
        e.case_id = j.at("case_id").get<std::string>();
        e.family = j.at("family").get<std::string>();
        e.subgroup = j.at("subgroup").get<std::string>();
        e.stage = j.at("stage").get<std::string>();
        if (!j.at("q").is_null()) e.q = j.at("q").get<unsigned long>();
        e.h = j.at("h").get<std::string>();
        if (!j.at("c").is_null()) e.c = Int(j.at("c").get<std::string>());
        if (!j.at("a").is_null()) e.a = Int(j.at("a").get<std::string>());
        for (const auto& pj : j.at("params")) {
            DesignParams p;
            p.v = Int(pj.at("v").get<std::string>());
            p.b = Int(pj.at("b").get<std::string>());
            p.r = Int(pj.at("r").get<std::string>());
            p.k = Int(pj.at("k").get<std::string>());
            p.lambda = Int(pj.at("lambda").get<std::string>());
            p.y = pj.at("y").get<int>();
            e.params.push_back(std::move(p));
        }
        e.verdict = j.at("verdict").get<std::string>();
        e.annotations = j.at("annotations").get<std::vector<std::string>>();
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace qsd
