#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcrystal {

/// Integer partition stored as multiplicity runs (part, mult) with parts
/// strictly decreasing.  Enumeration touches many of these, so runs keep
/// them small; expanded row lists are built on demand.
class Partition {
public:
    using Run = std::pair<long, long>;  // (part, multiplicity)

    Partition() = default;

    explicit Partition(std::vector<Run> runs) : runs_(std::move(runs)) {
        long prev = 0;
        for (size_t k = 0; k < runs_.size(); ++k) {
            auto [part, mult] = runs_[k];
            if (part < 1 || mult < 1)
                throw std::invalid_argument("Partition: parts and multiplicities must be positive");
            if (k > 0 && part >= prev)
                throw std::invalid_argument("Partition: parts must be strictly decreasing");
            prev = part;
        }
    }

    /// Build from a weakly decreasing row list, compressing equal rows.
    static Partition from_rows(const std::vector<long>& rows) {
        std::vector<Run> runs;
        for (long r : rows) {
            if (!runs.empty() && runs.back().first == r)
                ++runs.back().second;
            else
                runs.push_back({r, 1});
        }
        return Partition(std::move(runs));
    }

    /// Parse "5,4,1^2" (comma list, ^ for multiplicities); "" and "()"
    /// denote the empty partition.
    static Partition parse(const std::string& text) {
        if (text.empty() || text == "()") return Partition();
        auto number = [](const std::string& s) {
            size_t used = 0;
            long v = 0;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition::parse: bad number '" + s + "'");
            }
            if (used != s.size())
                throw std::invalid_argument("Partition::parse: bad number '" + s + "'");
            return v;
        };
        std::vector<Run> runs;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("Partition::parse: empty component");
            size_t caret = tok.find('^');
            long part = number(tok.substr(0, caret));
            long mult = caret == std::string::npos ? 1 : number(tok.substr(caret + 1));
            runs.push_back({part, mult});
        }
        return Partition(std::move(runs));
    }

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    long first_part() const { return runs_.empty() ? 0 : runs_[0].first; }

    long box_count() const {
        long s = 0;
        for (auto [part, mult] : runs_) s += part * mult;
        return s;
    }

    long num_rows() const {
        long s = 0;
        for (auto [part, mult] : runs_) s += mult;
        return s;
    }

    std::vector<long> rows() const {
        std::vector<long> r;
        r.reserve(num_rows());
        for (auto [part, mult] : runs_)
            for (long m = 0; m < mult; ++m) r.push_back(part);
        return r;
    }

    std::string to_string() const {
        if (runs_.empty()) return "()";
        std::ostringstream os;
        for (size_t k = 0; k < runs_.size(); ++k) {
            if (k) os << ",";
            os << runs_[k].first;
            if (runs_[k].second > 1) os << "^" << runs_[k].second;
        }
        return os.str();
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Run> runs_;
};

/// Canonical listing order: by box count, then rows lexicographically
/// descending ((9) before (6,2,1) before (4,4,1)).
inline bool canonical_less(const Partition& a, const Partition& b) {
    long ba = a.box_count(), bb = b.box_count();
    if (ba != bb) return ba < bb;
    return b.rows() < a.rows();
}

}  // namespace qcrystal
