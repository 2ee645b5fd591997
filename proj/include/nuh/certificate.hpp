#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nuh {

enum class Verdict { Proven, Unknown, Refuted };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proven: return "Proven";
        case Verdict::Unknown: return "Unknown";
        case Verdict::Refuted: return "Refuted";
    }
    return "?";
}

// Outcome of a verification procedure. Refuted always carries a re-checkable
// witness description; Unknown states the exhausted budget.
struct Certificate {
    Verdict verdict = Verdict::Unknown;
    std::string check;                       // which property was checked
    std::string witness;                     // human/machine-readable counterexample or reason
    std::vector<std::pair<std::string, double>> margins;
    std::map<std::string, std::string> provenance;

    static Certificate proven(std::string check) {
        Certificate c;
        c.verdict = Verdict::Proven;
        c.check = std::move(check);
        return c;
    }
    static Certificate refuted(std::string check, std::string witness) {
        Certificate c;
        c.verdict = Verdict::Refuted;
        c.check = std::move(check);
        c.witness = std::move(witness);
        return c;
    }
    static Certificate unknown(std::string check, std::string reason) {
        Certificate c;
        c.verdict = Verdict::Unknown;
        c.check = std::move(check);
        c.witness = std::move(reason);
        return c;
    }

    void add_margin(const std::string& name, double value) { margins.emplace_back(name, value); }

    double min_margin() const {
        double m = 1e300;
        for (auto& [k, v] : margins) m = v < m ? v : m;
        return m;
    }

    bool proven_ok() const { return verdict == Verdict::Proven; }
};

// Aggregation precedence: Refuted > Unknown > Proven.
inline Certificate merge(const Certificate& a, const Certificate& b) {
    auto rank = [](Verdict v) { return v == Verdict::Refuted ? 2 : v == Verdict::Unknown ? 1 : 0; };
    const Certificate& lead = rank(b.verdict) > rank(a.verdict) ? b : a;
    Certificate out;
    out.verdict = lead.verdict;
    out.check = a.check + "+" + b.check;
    out.witness = lead.witness;
    out.margins = a.margins;
    out.margins.insert(out.margins.end(), b.margins.begin(), b.margins.end());
    out.provenance = a.provenance;
    out.provenance.insert(b.provenance.begin(), b.provenance.end());
    return out;
}

} // namespace nuh
