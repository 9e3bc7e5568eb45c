#include "bajinv/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace bajinv {

namespace {

// Largest integer JSON consumers can hold exactly in a double.
constexpr std::uint64_t kJsonSafeMax = 9007199254740991ull;  // 2^53 - 1

nlohmann::ordered_json count_value(std::uint64_t c) {
    if (c <= kJsonSafeMax) return c;
    return std::to_string(c);
}

}  // namespace

nlohmann::ordered_json coeffs_to_json(const std::vector<std::uint64_t>& coeffs) {
    auto arr = nlohmann::ordered_json::array();
    for (std::uint64_t c : coeffs) arr.push_back(count_value(c));
    return arr;
}

nlohmann::ordered_json to_json(const Distribution& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    if (d.k)
        j["k"] = *d.k;
    else
        j["k"] = "all";
    j["coeffs"] = coeffs_to_json(d.counts);
    return j;
}

std::string to_csv(const Distribution& d) {
    std::string out = "exponent,count\n";
    for (std::size_t e = 0; e < d.counts.size(); ++e) {
        if (d.counts[e] == 0) continue;
        out += std::to_string(e);
        out += ',';
        out += std::to_string(d.counts[e]);
        out += '\n';
    }
    return out;
}

std::string to_text(const Distribution& d) {
    std::size_t ewidth = 8;  // "exponent"
    std::size_t cwidth = 5;  // "count"
    for (std::size_t e = 0; e < d.counts.size(); ++e) {
        if (d.counts[e] == 0) continue;
        ewidth = std::max(ewidth, std::to_string(e).size());
        cwidth = std::max(cwidth, std::to_string(d.counts[e]).size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out = pad("exponent", ewidth) + "  " + pad("count", cwidth) + "\n";
    for (std::size_t e = 0; e < d.counts.size(); ++e) {
        if (d.counts[e] == 0) continue;
        out += pad(std::to_string(e), ewidth) + "  " +
               pad(std::to_string(d.counts[e]), cwidth) + "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const VerificationReport& r, int theorem) {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["n"] = r.n;
    if (r.k) j["k"] = *r.k;
    j["status"] = r.passed ? "pass" : "fail";
    j["permutations"] = count_value(r.permutations_checked);
    if (r.first_mismatch) {
        nlohmann::ordered_json m;
        m["exponent"] = count_value(r.first_mismatch->exponent);
        m["lhs"] = count_value(r.first_mismatch->lhs);
        m["rhs"] = count_value(r.first_mismatch->rhs);
        j["first_mismatch"] = m;
    }
    return j;
}

std::string to_text(const VerificationReport& r, int theorem) {
    std::string out = "theorem " + std::to_string(theorem) + "  n=" + std::to_string(r.n);
    if (r.k) out += " k=" + std::to_string(*r.k);
    out += r.passed ? ": PASS" : ": FAIL";
    if (!r.detail.empty()) out += "  (" + r.detail + ")";
    char timing[64];
    std::snprintf(timing, sizeof timing, "  (%llu permutations, %.3f s)\n",
                  static_cast<unsigned long long>(r.permutations_checked),
                  r.elapsed.count());
    out += timing;
    return out;
}

}  // namespace bajinv
