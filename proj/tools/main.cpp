#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "coprime/analysis.hpp"
#include "coprime/cluster.hpp"
#include "coprime/report.hpp"
#include "coprime/tree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr unsigned kScanCeiling = 28;
constexpr unsigned kEnumerateCeiling = 22;

unsigned default_shards() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// stdout by default, else the --out path; fails with exit 2 on an
// unwritable path.
int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "cannot open output path: " << out_path << "\n";
        return kExitUsage;
    }
    file << text;
    file.flush();
    if (!file.good()) {
        std::cerr << "failed writing output path: " << out_path << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int usage_error(const std::string& message) {
    std::cerr << message << "\n";
    return kExitUsage;
}

// "a,b" or "a b", as one or two arguments.
int run_encode(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& arg : args) {
        joined += arg;
        joined += ' ';
    }
    for (auto& ch : joined)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(joined);
    std::string ta, tb, extra;
    if (!(in >> ta >> tb) || (in >> extra))
        return usage_error("encode: expected two positive integers");
    coprime::Pair p;
    try {
        p.a = mpz_class(ta);
        p.b = mpz_class(tb);
    } catch (const std::invalid_argument&) {
        return usage_error("encode: expected two positive integers");
    }
    if (p.a <= 0 || p.b <= 0)
        return usage_error("encode: entries must be positive");
    try {
        std::cout << coprime::format_code(coprime::decode(p)) << "\n";
    } catch (const coprime::NotInTree& e) {
        std::cerr << "NotInTree: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_decode(const std::string& code_text, bool trace) {
    coprime::Code code;
    try {
        code = coprime::parse_code(code_text);
    } catch (const coprime::InvalidCharacter& e) {
        return usage_error(std::string("decode: ") + e.what());
    }
    const coprime::Trajectory walk = coprime::trajectory(code);
    if (trace)
        std::cout << coprime::format_trajectory(walk) << "\n";
    const coprime::Pair& p = walk.final_pair();
    std::cout << p.a << " " << p.b << "\n";
    return kExitOk;
}

int run_stats(const std::string& code_text) {
    if (code_text.empty())
        return usage_error("stats: code must be nonempty");
    coprime::Code code;
    try {
        code = coprime::parse_code(code_text);
    } catch (const coprime::InvalidCharacter& e) {
        return usage_error(std::string("stats: ") + e.what());
    }
    const coprime::Pair p = coprime::apply_code(code);
    std::cout << "code: " << coprime::format_code(code) << "\n"
              << "length: " << code.size() << "\n"
              << "weight: " << coprime::weight(code) << "\n"
              << "avg: " << coprime::format_rational(coprime::cluster_average(code)) << "\n"
              << "var: " << coprime::format_rational(coprime::cluster_variance(code)) << "\n"
              << "pair: " << p.a << " " << p.b << "\n"
              << "sum: " << coprime::norm1(p) << "\n"
              << "palindrome: " << (coprime::is_palindrome(code) ? "yes" : "no")
              << "\n";
    return kExitOk;
}

std::vector<coprime::TableRow> scan_rows(unsigned len,
                                         std::optional<unsigned> weight_filter) {
    std::vector<coprime::TableRow> rows;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx) {
        std::vector<std::uint8_t> bits(len);
        for (unsigned k = 0; k < len; ++k)
            bits[k] = static_cast<std::uint8_t>((idx >> (len - 1 - k)) & 1u);
        coprime::Code code(std::move(bits));
        if (weight_filter && coprime::weight(code) != *weight_filter)
            continue;
        coprime::Pair p = coprime::apply_code(code);
        rows.push_back(coprime::TableRow{std::move(code), std::move(p)});
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coprime pair tree: encode/decode, code statistics, and "
                 "exhaustive verification sweeps"};
    app.require_subcommand(1);

    // encode
    auto* encode = app.add_subcommand(
        "encode", "print the binary code of a coprime pair a < b");
    std::vector<std::string> encode_args;
    encode->add_option("pair", encode_args, "pair as \"a,b\" or \"a b\"")
        ->required()
        ->expected(1, 2);

    // decode
    auto* decode = app.add_subcommand(
        "decode", "apply a binary code from the root [1,2] and print the pair");
    std::string decode_text;
    bool decode_trace = false;
    decode->add_option("code", decode_text, "bit string (empty for the root)")
        ->required();
    decode->add_flag("--trace", decode_trace, "print the full visit chain");

    // stats
    auto* stats = app.add_subcommand(
        "stats", "length, weight, cluster average/variance, pair and sum");
    std::string stats_text;
    stats->add_option("code", stats_text, "nonempty bit string")->required();

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run one exhaustive verification sweep");
    unsigned reflection_len = 0;
    unsigned completeness_b = 0;
    unsigned blocks_j = 0;
    std::vector<std::uint64_t> homomorphism_args;
    std::size_t verify_cap = coprime::kDefaultViolationCap;
    unsigned verify_shards = default_shards();
    auto* opt_reflection = verify->add_option(
        "--reflection", reflection_len, "sum equality of reflected codes up to this length");
    auto* opt_completeness = verify->add_option(
        "--completeness", completeness_b, "decode round trip over coprime pairs with b up to this bound");
    auto* opt_blocks = verify->add_option(
        "--blocks", blocks_j, "block-code identities for j = 2..max_j");
    auto* opt_homomorphism = verify->add_option(
        "--homomorphism", homomorphism_args, "seeded generator identities: TRIALS SEED");
    opt_homomorphism->expected(2);
    verify->add_option("--cap", verify_cap, "max recorded violations");
    verify->add_option("--shards", verify_shards, "parallel shards");

    // scan
    auto* scan = app.add_subcommand(
        "scan", "conjecture scan over all codes of one length");
    unsigned scan_len = 0;
    int scan_weight = -1;
    std::size_t scan_cap = coprime::kDefaultViolationCap;
    unsigned scan_shards = default_shards();
    std::string scan_format = "table";
    std::string scan_out;
    bool scan_allow_huge = false;
    scan->add_option("--len", scan_len, "code length")->required();
    scan->add_option("--weight", scan_weight, "restrict to one weight");
    scan->add_option("--cap", scan_cap, "max recorded violations");
    scan->add_option("--format", scan_format, "table, csv or json");
    scan->add_option("--out", scan_out, "write the report to this path");
    scan->add_option("--shards", scan_shards, "parallel shards");
    scan->add_flag("--allow-huge", scan_allow_huge,
                   "lift the default length ceiling of 28");

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "all tree vertices up to a depth, depth-major");
    unsigned enum_depth = 0;
    std::string enum_format = "table";
    std::string enum_out;
    bool enum_allow_huge = false;
    enumerate->add_option("--depth", enum_depth, "tree depth")->required();
    enumerate->add_option("--format", enum_format, "table, csv or json");
    enumerate->add_option("--out", enum_out, "write the table to this path");
    enumerate->add_flag("--allow-huge", enum_allow_huge,
                        "lift the default depth ceiling of 22");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (encode->parsed())
            return run_encode(encode_args);
        if (decode->parsed())
            return run_decode(decode_text, decode_trace);
        if (stats->parsed())
            return run_stats(stats_text);

        if (verify->parsed()) {
            const int modes = (opt_reflection->count() > 0) +
                              (opt_completeness->count() > 0) +
                              (opt_blocks->count() > 0) +
                              (opt_homomorphism->count() > 0);
            if (modes != 1)
                return usage_error("verify: pass exactly one of --reflection, "
                                   "--completeness, --blocks, --homomorphism");
            if (verify_cap < 1)
                return usage_error("verify: --cap must be >= 1");
            if (verify_shards < 1)
                return usage_error("verify: --shards must be >= 1");
            coprime::SweepReport report;
            if (opt_reflection->count() > 0) {
                if (reflection_len < 1 || reflection_len > 62)
                    return usage_error("verify: --reflection expects 1..62");
                report = coprime::verify_reflection(reflection_len,
                                                    verify_shards, verify_cap);
            } else if (opt_completeness->count() > 0) {
                if (completeness_b < 2)
                    return usage_error("verify: --completeness expects >= 2");
                report = coprime::completeness_check(completeness_b, verify_cap);
            } else if (opt_blocks->count() > 0) {
                if (blocks_j < 2)
                    return usage_error("verify: --blocks expects >= 2");
                report = coprime::verify_block_proposition(blocks_j, verify_cap);
            } else {
                if (homomorphism_args[0] < 1)
                    return usage_error("verify: --homomorphism trials must be >= 1");
                report = coprime::sample_homomorphism(homomorphism_args[0],
                                                      homomorphism_args[1],
                                                      verify_cap);
            }
            std::cout << coprime::report_summary_text(report);
            return report.ok() ? kExitOk : kExitViolation;
        }

        if (scan->parsed()) {
            if (scan_len < 1)
                return usage_error("scan: --len must be >= 1");
            if (!scan_allow_huge && scan_len > kScanCeiling)
                return usage_error("scan: --len above " +
                                   std::to_string(kScanCeiling) +
                                   " needs --allow-huge");
            if (scan_len > 62)
                return usage_error("scan: --len must be <= 62");
            std::optional<unsigned> weight_filter;
            if (scan_weight >= 0) {
                if (static_cast<unsigned>(scan_weight) > scan_len)
                    return usage_error("scan: --weight must be within 0..len");
                weight_filter = static_cast<unsigned>(scan_weight);
            }
            if (scan_cap < 1)
                return usage_error("scan: --cap must be >= 1");
            if (scan_shards < 1)
                return usage_error("scan: --shards must be >= 1");
            if (scan_format != "table" && scan_format != "csv" &&
                scan_format != "json")
                return usage_error("scan: --format must be table, csv or json");

            const coprime::SweepReport report = coprime::scan_conjecture(
                scan_len, weight_filter, scan_cap, scan_shards);
            std::string text;
            if (scan_format == "table")
                text = coprime::report_summary_text(report);
            else if (scan_format == "json")
                text = coprime::report_to_json_text(report);
            else
                text = coprime::table_to_csv(scan_rows(scan_len, weight_filter));
            const int write_rc = write_output(text, scan_out);
            if (write_rc != kExitOk)
                return write_rc;
            return report.ok() ? kExitOk : kExitViolation;
        }

        if (enumerate->parsed()) {
            if (!enum_allow_huge && enum_depth > kEnumerateCeiling)
                return usage_error("enumerate: --depth above " +
                                   std::to_string(kEnumerateCeiling) +
                                   " needs --allow-huge");
            if (enum_format != "table" && enum_format != "csv" &&
                enum_format != "json")
                return usage_error("enumerate: --format must be table, csv or json");
            std::vector<coprime::TableRow> rows;
            for (auto& [code, pair] : coprime::enumerate_tree(enum_depth))
                rows.push_back(coprime::TableRow{std::move(code), std::move(pair)});
            std::string text;
            if (enum_format == "table")
                text = coprime::table_to_text(rows);
            else if (enum_format == "csv")
                text = coprime::table_to_csv(rows);
            else
                text = coprime::table_to_json_text(rows);
            return write_output(text, enum_out);
        }
    } catch (const coprime::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
