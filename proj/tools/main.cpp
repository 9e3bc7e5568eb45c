// bajinv command line: permutation statistics, the v/r codecs, factorial-base
// rank/unrank, exact distribution export, and product-formula verification.
//
// Exit codes: 0 success or verification pass, 1 verification fail,
// 2 usage or validation error.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bajinv/codes.hpp"
#include "bajinv/permutation.hpp"
#include "bajinv/qpoly.hpp"
#include "bajinv/serialize.hpp"
#include "bajinv/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("format must be text, json, or csv, got '" + s + "'");
}

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t pos = 0;
        const int value = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("cannot parse integer '" + tok + "'");
        out.push_back(value);
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok += c;
    }
    flush();
    return out;
}

// Comma- or whitespace-separated integers; a bare digit string like 5472361
// is one-digit-per-entry, which is unambiguous only while n <= 9.
std::vector<int> parse_perm_text(const std::string& text) {
    const bool separated =
        text.find_first_of(", \t") != std::string::npos || text.size() <= 1;
    if (!separated) {
        bool all_digits = true;
        for (char c : text)
            if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
        if (all_digits) {
            if (text.size() > 9)
                throw std::invalid_argument(
                    "compact permutation input supports n <= 9; separate values "
                    "with commas");
            std::vector<int> out;
            for (char c : text) out.push_back(c - '0');
            return out;
        }
    }
    return split_ints(text);
}

std::string join(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string list_or_dash(const std::vector<int>& xs, char sep) {
    return xs.empty() ? "-" : join(xs, sep);
}

void reject_csv(Format format) {
    if (format == Format::csv)
        throw std::invalid_argument("csv format applies to dist only");
}

// --- subcommand bodies ------------------------------------------------------

int run_stats(const std::string& perm_text, Format format) {
    reject_csv(format);
    const bajinv::Permutation p(parse_perm_text(perm_text));
    const auto descents = bajinv::descent_set(p);
    const auto cs = bajinv::classic_stats(p);
    const auto vc = bajinv::v_encode(p);
    const auto rc = bajinv::r_encode(vc);
    std::optional<std::uint64_t> idx;
    try {
        idx = bajinv::rank(rc);
    } catch (const std::overflow_error&) {
        // rank stays unset; the index has no 64-bit representation
    }

    if (format == Format::json) {
        ordered_json j;
        j["n"] = p.size();
        j["perm"] = p.one_line();
        j["descents"] = descents;
        j["inv"] = bajinv::inv(p);
        j["baj"] = bajinv::baj(p);
        j["baj_minus_inv"] = bajinv::baj_minus_inv(p);
        j["des"] = cs.des;
        j["maj"] = cs.maj;
        j["vcode"] = vc.values();
        j["rcode"] = rc.digits();
        j["k"] = rc.k();
        j["weight"] = bajinv::weight(rc);
        if (idx)
            j["rank"] = *idx;
        else
            j["rank"] = nullptr;
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << "n        " << p.size() << "\n";
    std::cout << "perm     " << join(p.one_line(), ' ') << "\n";
    std::cout << "descents " << list_or_dash(descents, ' ') << "\n";
    std::cout << "inv      " << bajinv::inv(p) << "\n";
    std::cout << "baj      " << bajinv::baj(p) << "\n";
    std::cout << "baj-inv  " << bajinv::baj_minus_inv(p) << "\n";
    std::cout << "des      " << cs.des << "\n";
    std::cout << "maj      " << cs.maj << "\n";
    std::cout << "v        " << join(vc.values(), ',') << "\n";
    std::cout << "r        " << list_or_dash(rc.digits(), ',') << "\n";
    std::cout << "k        " << rc.k() << "\n";
    std::cout << "weight   " << bajinv::weight(rc) << "\n";
    std::cout << "rank     " << (idx ? std::to_string(*idx) : "n/a (beyond 64-bit)")
              << "\n";
    return 0;
}

int run_encode(const std::string& perm_text, const std::string& vcode_text,
               Format format) {
    reject_csv(format);
    if (perm_text.empty() == vcode_text.empty())
        throw std::invalid_argument("encode takes exactly one of --perm or --vcode");

    std::optional<bajinv::VCode> vc;
    bool from_perm = false;
    if (!perm_text.empty()) {
        vc = bajinv::v_encode(bajinv::Permutation(parse_perm_text(perm_text)));
        from_perm = true;
    } else {
        vc = bajinv::VCode(split_ints(vcode_text));
    }
    const auto rc = bajinv::r_encode(*vc);

    if (format == Format::json) {
        ordered_json j;
        j["n"] = vc->n();
        j["vcode"] = vc->values();
        j["rcode"] = rc.digits();
        j["k"] = rc.k();
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (from_perm) std::cout << "v " << join(vc->values(), ',') << "\n";
    std::cout << "r " << list_or_dash(rc.digits(), ',') << " k " << rc.k() << "\n";
    return 0;
}

int run_decode(const std::string& vcode_text, const std::string& rcode_text,
               std::optional<int> k, Format format) {
    reject_csv(format);
    if (vcode_text.empty() == rcode_text.empty())
        throw std::invalid_argument("decode takes exactly one of --vcode or --rcode");

    bajinv::Permutation p = [&] {
        if (!vcode_text.empty())
            return bajinv::v_decode(bajinv::VCode(split_ints(vcode_text)));
        if (!k)
            throw std::invalid_argument("decode of an r-code requires --k");
        const auto digits = split_ints(rcode_text);
        const int n = static_cast<int>(digits.size()) + 1;
        return bajinv::v_decode(bajinv::r_decode(bajinv::RCode(n, *k, digits)));
    }();

    if (format == Format::json) {
        ordered_json j;
        j["n"] = p.size();
        j["perm"] = p.one_line();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << join(p.one_line(), ' ') << "\n";
    return 0;
}

int run_verify(int n, std::optional<int> k, int parts, int ceiling, Format format) {
    reject_csv(format);
    const int theorem = k ? 2 : 1;
    const auto report = k ? bajinv::verify_theorem2(n, *k, parts, ceiling)
                          : bajinv::verify_theorem1(n, parts, ceiling);
    if (format == Format::json)
        std::cout << bajinv::to_json(report, theorem).dump() << "\n";
    else
        std::cout << bajinv::to_text(report, theorem);
    return report.passed ? 0 : 1;
}

int run_dist(int n, int k, int parts, int ceiling, Format format) {
    const auto d = parts > 1 ? bajinv::parallel_distribution(n, k, parts, ceiling)
                             : bajinv::distribution(n, k, ceiling);
    switch (format) {
        case Format::json: std::cout << bajinv::to_json(d).dump() << "\n"; break;
        case Format::csv: std::cout << bajinv::to_csv(d); break;
        case Format::text: std::cout << bajinv::to_text(d); break;
    }
    return 0;
}

int run_rank(const std::string& perm_text, Format format) {
    reject_csv(format);
    const bajinv::Permutation p(parse_perm_text(perm_text));
    const auto idx = bajinv::rank(bajinv::r_encode(bajinv::v_encode(p)));
    if (format == Format::json) {
        ordered_json j;
        j["n"] = p.size();
        j["rank"] = idx;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << idx << "\n";
    return 0;
}

int run_unrank(int n, int k, std::uint64_t idx, Format format) {
    reject_csv(format);
    const auto p = bajinv::v_decode(bajinv::r_decode(bajinv::unrank(n, k, idx)));
    if (format == Format::json) {
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["idx"] = idx;
        j["perm"] = p.one_line();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << join(p.one_line(), ' ') << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation statistics baj/inv, v- and r-codes, and exact "
                 "distribution verification"};
    app.require_subcommand(1);

    std::string format_text = "text";
    app.add_option("--format", format_text, "output format: text, json, or csv")
        ->capture_default_str();
    // let --format given after a subcommand match the parent option;
    // inherited by the subcommands created below
    app.fallthrough();

    std::string perm_text, vcode_text, rcode_text;
    int n = 0;
    std::optional<int> k;
    std::uint64_t idx = 0;
    int parts = 1;
    int ceiling = bajinv::kDefaultCeiling;

    auto* stats = app.add_subcommand("stats", "all statistics and codes of one permutation");
    stats->add_option("perm,--perm", perm_text, "permutation, e.g. 5,4,7,2,3,6,1")
        ->required();

    auto* encode = app.add_subcommand("encode", "v-code of a permutation, r-code of a v-code");
    encode->add_option("--perm", perm_text, "permutation to encode");
    encode->add_option("--vcode", vcode_text, "v-code to re-encode as an r-code");

    auto* decode = app.add_subcommand("decode", "permutation of a v-code or r-code");
    decode->add_option("--vcode", vcode_text, "v-code, e.g. 1,1,3,1,2,5,1");
    decode->add_option("--rcode", rcode_text, "r-code digits, e.g. 0,1,0,0,2,1");
    decode->add_option("--k", k, "last value for --rcode");

    auto* verify = app.add_subcommand("verify", "check the product formula by enumeration");
    verify->add_option("--n", n, "permutation size")->required();
    verify->add_option("--k", k, "fixed last value; all k summed when omitted");
    verify->add_option("--parts", parts, "parallel partitions");
    verify->add_option("--max-n", ceiling, "override the enumeration ceiling");

    auto* dist = app.add_subcommand("dist", "distribution of baj - inv over a last-value class");
    dist->add_option("--n", n, "permutation size")->required();
    dist->add_option("--k", k, "fixed last value")->required();
    dist->add_option("--parts", parts, "parallel partitions");
    dist->add_option("--max-n", ceiling, "override the enumeration ceiling");

    auto* rank = app.add_subcommand("rank", "factorial-base index of a permutation's r-code");
    rank->add_option("perm,--perm", perm_text, "permutation")->required();

    auto* unrank = app.add_subcommand("unrank", "permutation of a factorial-base index");
    unrank->add_option("--n", n, "permutation size")->required();
    unrank->add_option("--k", k, "fixed last value")->required();
    unrank->add_option("--idx", idx, "index in 0..(n-1)!-1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_text);
        if (stats->parsed()) return run_stats(perm_text, format);
        if (encode->parsed()) return run_encode(perm_text, vcode_text, format);
        if (decode->parsed()) return run_decode(vcode_text, rcode_text, k, format);
        if (verify->parsed()) return run_verify(n, k, parts, ceiling, format);
        if (dist->parsed()) return run_dist(n, *k, parts, ceiling, format);
        if (rank->parsed()) return run_rank(perm_text, format);
        if (unrank->parsed()) return run_unrank(n, *k, idx, format);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
