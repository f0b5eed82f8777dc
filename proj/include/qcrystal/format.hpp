#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qcrystal/decomp.hpp"
#include "qcrystal/qseries.hpp"

namespace qcrystal {

/// Text rendering of a multiplicity table: one line per t with the
/// complete coefficient run, then any partial tail counts.
inline std::string table_to_text(const MultiplicityTable& tbl) {
    std::ostringstream os;
    os << "V(L0) (x) V(L" << tbl.i << "), n=" << tbl.n << ", max_boxes=" << tbl.max_boxes
       << ", maximal vectors enumerated: " << tbl.total() << "\n";
    for (int t = label_t_min(tbl.n, tbl.i); t <= label_t_max(tbl.n, tbl.i); ++t) {
        int u = partner_u(tbl.n, tbl.i, t);
        long r = label_k_min(tbl.i, t);
        long ck = tbl.complete_k.at(t);
        os << "t=" << t << " u=" << u << " min_k=" << r << " complete_through_k=" << ck << ":";
        if (ck < r) {
            os << " (no complete coefficients)";
        } else {
            for (long k = r; k <= ck; ++k) {
                auto it = tbl.counts.find({t, u, k});
                os << " " << (it == tbl.counts.end() ? 0 : it->second);
            }
        }
        long long partial = 0;
        for (const auto& [label, c] : tbl.counts)
            if (label.t == t && label.k > ck) partial += c;
        if (partial) os << "  (+" << partial << " in incomplete k > " << ck << ")";
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json table_to_json(const MultiplicityTable& tbl) {
    nlohmann::json j;
    j["n"] = tbl.n;
    j["i"] = tbl.i;
    j["max_boxes"] = tbl.max_boxes;
    j["labels"] = nlohmann::json::array();
    for (const auto& [label, c] : tbl.counts)
        j["labels"].push_back({{"t", label.t}, {"u", label.u}, {"k", label.k}, {"count", c}});
    j["complete_k"] = nlohmann::json::object();
    for (const auto& [t, k] : tbl.complete_k) j["complete_k"][std::to_string(t)] = k;
    return j;
}

/// One row per (t,u,k,count), header included.
inline std::string table_to_csv(const MultiplicityTable& tbl) {
    std::ostringstream os;
    os << "t,u,k,count\n";
    for (const auto& [label, c] : tbl.counts)
        os << label.t << "," << label.u << "," << label.k << "," << c << "\n";
    return os.str();
}

}  // namespace qcrystal
