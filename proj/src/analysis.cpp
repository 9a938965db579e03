#include "coprime/analysis.hpp"

#include "coprime/tree.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <utility>

namespace coprime {

std::string sweep_kind_name(SweepKind kind) {
    switch (kind) {
    case SweepKind::Reflection: return "Reflection";
    case SweepKind::Conjecture: return "Conjecture";
    case SweepKind::Completeness: return "Completeness";
    case SweepKind::BlockProposition: return "BlockProposition";
    case SweepKind::Homomorphism: return "Homomorphism";
    }
    return "?";
}

namespace {

// Fixed-length codes map to indexes with x1 as the most significant bit,
// so numeric index order is lexicographic code order.

Code code_from_index(unsigned len, std::uint64_t idx) {
    std::vector<std::uint8_t> bits(len);
    for (unsigned k = 0; k < len; ++k)
        bits[k] = static_cast<std::uint8_t>((idx >> (len - 1 - k)) & 1u);
    return Code(std::move(bits));
}

// In-place fold of the generators over the index bits; same map as
// apply_code (the public, value-semantic route) but allocation-light for
// the 2^n sweep loops. tau0 is b += a; tau1 is swap then b += a.
Pair fold_index(unsigned len, std::uint64_t idx) {
    Pair p = tree_root();
    for (unsigned k = 0; k < len; ++k) {
        if ((idx >> (len - 1 - k)) & 1u)
            std::swap(p.a, p.b);
        p.b += p.a;
    }
    return p;
}

std::uint64_t reflect_index(unsigned len, std::uint64_t idx) {
    std::uint64_t r = 0;
    for (unsigned k = 0; k < len; ++k) {
        r = (r << 1) | (idx & 1u);
        idx >>= 1;
    }
    return r;
}

// Weight and sum of cubed run lengths straight off the index bits. At
// fixed length n, comparing sum_r3 is exactly the rational ordering of
// var = sum_r3 / n; no floating point is involved anywhere.
struct RunStats {
    unsigned weight = 0;
    std::uint64_t sum_r3 = 0;
};

RunStats run_stats_from_index(unsigned len, std::uint64_t idx) {
    RunStats s;
    std::uint64_t run = 0;
    unsigned prev = 2;
    for (unsigned k = 0; k < len; ++k) {
        const unsigned bit = static_cast<unsigned>((idx >> (len - 1 - k)) & 1u);
        s.weight += bit;
        if (bit == prev) {
            ++run;
        } else {
            s.sum_r3 += run * run * run;
            run = 1;
            prev = bit;
        }
    }
    s.sum_r3 += run * run * run;
    return s;
}

Rational make_var(std::uint64_t sum_r3, unsigned len) {
    Rational v(mpz_class(static_cast<unsigned long>(sum_r3)),
               mpz_class(static_cast<unsigned long>(len)));
    v.canonicalize();
    return v;
}

// Gosper's hack: next index of the same popcount. Callers special-case
// weight 0 (the single index 0).
std::uint64_t next_same_weight(std::uint64_t v) {
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

// Balanced contiguous split of [0, total); worker results are merged in
// shard order, so output never depends on scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_sharded(std::uint64_t total, unsigned shards, Fn fn) {
    std::uint64_t n = std::max<unsigned>(shards, 1);
    if (n > total)
        n = std::max<std::uint64_t>(total, 1);
    const std::uint64_t base = total / n;
    const std::uint64_t rem = total % n;
    std::vector<Result> results(static_cast<std::size_t>(n));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n));
    std::uint64_t lo = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
        const std::uint64_t hi = lo + base + (s < rem ? 1 : 0);
        threads.emplace_back([&results, &fn, s, lo, hi] {
            results[static_cast<std::size_t>(s)] = fn(lo, hi);
        });
        lo = hi;
    }
    for (auto& t : threads)
        t.join();
    return results;
}

std::string decimal(const mpz_class& z) {
    return z.get_str();
}

// Running min/max of (sum, code) with ties resolved to the
// lexicographically least code, so merged output is shard-invariant.
struct SumRange {
    bool set = false;
    mpz_class min_sum;
    Code min_code;
    mpz_class max_sum;
    Code max_code;

    void observe(const mpz_class& sum, const Code& code) {
        if (!set) {
            set = true;
            min_sum = sum;
            max_sum = sum;
            min_code = code;
            max_code = code;
            return;
        }
        if (sum < min_sum || (sum == min_sum && code < min_code)) {
            min_sum = sum;
            min_code = code;
        }
        if (sum > max_sum || (sum == max_sum && code < max_code)) {
            max_sum = sum;
            max_code = code;
        }
    }

    void merge(const SumRange& other) {
        if (!other.set)
            return;
        if (!set) {
            *this = other;
            return;
        }
        if (other.min_sum < min_sum ||
            (other.min_sum == min_sum && other.min_code < min_code)) {
            min_sum = other.min_sum;
            min_code = other.min_code;
        }
        if (other.max_sum > max_sum ||
            (other.max_sum == max_sum && other.max_code < max_code)) {
            max_sum = other.max_sum;
            max_code = other.max_code;
        }
    }
};

// ---- per-(weight, variance) class aggregation for the conjecture scan ----

// Key: (weight, sum of cubed run lengths). Ascending key order is
// ascending (weight, variance) order at fixed code length.
using ClassKey = std::pair<unsigned, std::uint64_t>;
using ClassAgg = SumRange;

struct ClassStats {
    ClassAgg range;
    std::uint64_t count = 0;
};

using ClassMap = std::map<ClassKey, ClassStats>;

// Callers scan indexes in ascending (lexicographic) order, so on a sum
// tie the incumbent code is already the lexicographically least one and
// no Code needs to be built. Cross-shard merges compare codes explicitly.
void class_record(ClassMap& m, ClassKey key, const mpz_class& sum,
                  unsigned len, std::uint64_t idx) {
    ClassStats& stats = m[key];
    ++stats.count;
    SumRange& range = stats.range;
    if (!range.set) {
        range.set = true;
        range.min_sum = sum;
        range.max_sum = sum;
        range.min_code = code_from_index(len, idx);
        range.max_code = range.min_code;
        return;
    }
    if (sum < range.min_sum) {
        range.min_sum = sum;
        range.min_code = code_from_index(len, idx);
    }
    if (sum > range.max_sum) {
        range.max_sum = sum;
        range.max_code = code_from_index(len, idx);
    }
}

void class_merge(ClassMap& into, const ClassMap& from) {
    for (const auto& [key, src] : from) {
        ClassStats& dst = into[key];
        dst.count += src.count;
        dst.range.merge(src.range);
    }
}

std::vector<ExtremalEntry> class_extremal(const ClassMap& m, unsigned len) {
    std::vector<ExtremalEntry> out;
    out.reserve(m.size());
    for (const auto& [key, stats] : m) {
        ExtremalEntry e;
        e.weight = key.first;
        e.var = make_var(key.second, len);
        e.count = stats.count;
        e.min_sum = stats.range.min_sum;
        e.min_code = stats.range.min_code;
        e.max_sum = stats.range.max_sum;
        e.max_code = stats.range.max_code;
        out.push_back(std::move(e));
    }
    return out;
}

Witness conjecture_witness(const Code& c1, const Code& c2, const Rational& v1,
                           const Rational& v2, const Pair& p1, const Pair& p2) {
    Witness w;
    w.codes = {c1, c2};
    w.pairs = {p1, p2};
    w.values = {format_rational(v1), format_rational(v2),
                decimal(norm1(p1)), decimal(norm1(p2))};
    return w;
}

// Canonical (c1 lex, c2 lex) enumeration of violating pairs within one
// weight group, appended until cap; matches the naive oracle's order by
// construction. The class aggregates prune c1 candidates, so the
// quadratic inner loop only runs for a c1 that yields a witness.
void emit_group_witnesses(unsigned len, unsigned w, const ClassMap& classes,
                          std::size_t cap, std::vector<Witness>& out) {
    std::vector<std::uint64_t> class_r3;
    std::vector<mpz_class> class_max;
    for (const auto& [key, stats] : classes) {
        if (key.first != w)
            continue;
        class_r3.push_back(key.second);
        class_max.push_back(stats.range.max_sum);
    }
    // suffix_max[t] = largest sum among classes with strictly larger var
    std::vector<mpz_class> suffix_max(class_r3.size() + 1, mpz_class(-1));
    for (std::size_t t = class_r3.size(); t-- > 0;)
        suffix_max[t] = std::max(suffix_max[t + 1], class_max[t]);

    const std::uint64_t first = w == 0 ? 0 : ((std::uint64_t{1} << w) - 1);
    const std::uint64_t mask = (std::uint64_t{1} << len) - 1;

    for (std::uint64_t idx1 = first;;) {
        const RunStats s1 = run_stats_from_index(len, idx1);
        const auto t = static_cast<std::size_t>(
            std::upper_bound(class_r3.begin(), class_r3.end(), s1.sum_r3) -
            class_r3.begin());
        const Pair p1 = fold_index(len, idx1);
        const mpz_class sum1 = norm1(p1);
        if (suffix_max[t] >= sum1) {
            for (std::uint64_t idx2 = first;;) {
                const RunStats s2 = run_stats_from_index(len, idx2);
                if (s2.sum_r3 > s1.sum_r3) {
                    const Pair p2 = fold_index(len, idx2);
                    if (norm1(p2) >= sum1) {
                        out.push_back(conjecture_witness(
                            code_from_index(len, idx1),
                            code_from_index(len, idx2),
                            make_var(s1.sum_r3, len), make_var(s2.sum_r3, len),
                            p1, p2));
                        if (out.size() >= cap)
                            return;
                    }
                }
                if (idx2 == mask || w == 0)
                    break;
                idx2 = next_same_weight(idx2);
                if (idx2 > mask)
                    break;
            }
        }
        if (idx1 == mask || w == 0)
            break;
        idx1 = next_same_weight(idx1);
        if (idx1 > mask)
            break;
    }
}

} // namespace

// ---- reflection sweep ----

SweepReport verify_reflection(unsigned max_len, unsigned shards, std::size_t cap) {
    if (max_len < 1)
        throw Error("verify_reflection: max_len must be >= 1");
    if (max_len > 62)
        throw Error("verify_reflection: max_len too large to index");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::Reflection;
    report.range = "max_len=" + std::to_string(max_len);

    struct ShardResult {
        std::uint64_t covered = 0;
        std::vector<Witness> violations;
        // Per-shard extremal tracked as (sum, idx): within one length,
        // smaller idx is the lexicographically smaller code.
        bool set = false;
        mpz_class min_sum;
        std::uint64_t min_idx = 0;
        mpz_class max_sum;
        std::uint64_t max_idx = 0;

        void observe(const mpz_class& sum, std::uint64_t idx) {
            if (!set) {
                set = true;
                min_sum = sum;
                max_sum = sum;
                min_idx = idx;
                max_idx = idx;
                return;
            }
            if (sum < min_sum || (sum == min_sum && idx < min_idx)) {
                min_sum = sum;
                min_idx = idx;
            }
            if (sum > max_sum || (sum == max_sum && idx < max_idx)) {
                max_sum = sum;
                max_idx = idx;
            }
        }
    };

    SumRange overall;
    for (unsigned len = 1; len <= max_len; ++len) {
        const std::uint64_t count = std::uint64_t{1} << len;
        auto results = run_sharded<ShardResult>(
            count, shards, [len, cap](std::uint64_t lo, std::uint64_t hi) {
                ShardResult r;
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    const std::uint64_t ridx = reflect_index(len, idx);
                    if (ridx < idx)
                        continue;  // class handled at its smaller member
                    const Pair p = fold_index(len, idx);
                    const mpz_class sum = norm1(p);
                    r.observe(sum, idx);
                    if (ridx == idx) {
                        r.covered += 1;
                        continue;
                    }
                    const Pair q = fold_index(len, ridx);
                    const mpz_class rsum = norm1(q);
                    r.observe(rsum, ridx);
                    r.covered += 2;
                    if (sum != rsum && r.violations.size() < cap) {
                        Witness w;
                        w.codes = {code_from_index(len, idx),
                                   code_from_index(len, ridx)};
                        w.pairs = {p, q};
                        w.values = {decimal(sum), decimal(rsum)};
                        r.violations.push_back(std::move(w));
                    }
                }
                return r;
            });
        for (auto& r : results) {
            report.checked_count += r.covered;
            for (auto& w : r.violations) {
                if (report.violations.size() >= cap)
                    break;
                report.violations.push_back(std::move(w));
            }
            if (r.set) {
                overall.observe(r.min_sum, code_from_index(len, r.min_idx));
                overall.observe(r.max_sum, code_from_index(len, r.max_idx));
            }
        }
    }

    if (overall.set) {
        ExtremalEntry e;
        e.count = report.checked_count;
        e.min_sum = overall.min_sum;
        e.min_code = overall.min_code;
        e.max_sum = overall.max_sum;
        e.max_code = overall.max_code;
        report.extremal.push_back(std::move(e));
    }
    return report;
}

// ---- converse failure ----

Witness verify_converse_failure() {
    const Code c1 = parse_code("10011");
    const Code c2 = parse_code("01110");
    const Pair p1 = apply_code(c1);
    const Pair p2 = apply_code(c2);
    Witness w;
    w.codes = {c1, c2};
    w.pairs = {p1, p2};
    w.values = {decimal(norm1(p1)), decimal(norm1(p2))};
    return w;
}

// ---- tree enumeration ----

std::vector<std::pair<Code, Pair>> enumerate_tree(unsigned depth) {
    if (depth >= 57)
        throw Error("enumerate_tree: depth too large to materialize");
    const std::uint64_t total = (std::uint64_t{1} << (depth + 1)) - 1;
    std::vector<std::pair<Code, Pair>> out;
    out.reserve(static_cast<std::size_t>(total));
    out.emplace_back(Code{}, tree_root());
    std::size_t level_begin = 0;
    for (unsigned d = 1; d <= depth; ++d) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            Code c0 = out[i].first;
            c0.push_back(0);
            Pair p0 = tau0(out[i].second);
            Code c1 = out[i].first;
            c1.push_back(1);
            Pair p1 = tau1(out[i].second);
            out.emplace_back(std::move(c0), std::move(p0));
            out.emplace_back(std::move(c1), std::move(p1));
        }
        level_begin = level_end;
    }
    return out;
}

// ---- completeness ----

namespace {
// Deliberately local Euclid loop: the sweep's coprimality filter must not
// share code with the tree operations it is checking.
std::uint64_t euclid_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace

SweepReport completeness_check(unsigned max_b, std::size_t cap) {
    if (max_b < 2)
        throw Error("completeness_check: max_b must be >= 2");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::Completeness;
    report.range = "max_b=" + std::to_string(max_b);

    std::set<std::vector<std::uint8_t>> seen_codes;
    for (std::uint64_t b = 2; b <= max_b; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            if (euclid_gcd(a, b) != 1)
                continue;
            ++report.checked_count;
            const Pair p{mpz_class(static_cast<unsigned long>(a)),
                         mpz_class(static_cast<unsigned long>(b))};
            Witness w;
            w.pairs = {p};
            try {
                const Code code = decode(p);
                const Pair back = apply_code(code);
                const bool fresh = seen_codes.insert(code.bits()).second;
                if (back == p && fresh)
                    continue;
                w.codes = {code};
                w.pairs.push_back(back);
                w.values = {decimal(norm1(p)), decimal(norm1(back)),
                            fresh ? "roundtrip mismatch" : "duplicate code"};
            } catch (const Error& e) {
                w.values = {decimal(norm1(p)),
                            std::string("decode failed: ") + e.what()};
            }
            if (report.violations.size() < cap)
                report.violations.push_back(std::move(w));
        }
    }
    return report;
}

// ---- Fibonacci block identities ----

mpz_class fibonacci(unsigned i) {
    if (i < 1)
        throw Error("fibonacci: index must be >= 1");
    mpz_class prev = 1, cur = 1;  // F1, F2
    for (unsigned k = 2; k < i; ++k) {
        mpz_class next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return i == 1 ? prev : cur;
}

namespace {
Code block_code(unsigned ones, unsigned zeros) {
    std::vector<std::uint8_t> bits;
    bits.reserve(ones + zeros);
    bits.insert(bits.end(), ones, 1);
    bits.insert(bits.end(), zeros, 0);
    return Code(std::move(bits));
}

Code alternating_code(std::uint8_t first, unsigned pairs) {
    std::vector<std::uint8_t> bits;
    bits.reserve(2 * pairs);
    for (unsigned k = 0; k < pairs; ++k) {
        bits.push_back(first);
        bits.push_back(static_cast<std::uint8_t>(1 - first));
    }
    return Code(std::move(bits));
}
} // namespace

SweepReport verify_block_proposition(unsigned max_j, std::size_t cap) {
    if (max_j < 2)
        throw Error("verify_block_proposition: max_j must be >= 2");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::BlockProposition;
    report.range = "j=2.." + std::to_string(max_j);

    auto record = [&report, cap](Witness w) {
        if (report.violations.size() < cap)
            report.violations.push_back(std::move(w));
    };

    for (unsigned j = 2; j <= max_j; ++j) {
        ++report.checked_count;
        const Code ones_zeros = block_code(j, j);
        const Code zeros_ones = refl(ones_zeros);
        const Code alt01 = alternating_code(0, j);
        const Code alt10 = alternating_code(1, j);

        const Pair p_oz = apply_code(ones_zeros);
        const Pair expected{fibonacci(j + 2),
                            fibonacci(j + 4) + (j - 1) * fibonacci(j + 2)};
        if (!(p_oz == expected)) {
            Witness w;
            w.codes = {ones_zeros};
            w.pairs = {p_oz, expected};
            w.values = {decimal(norm1(p_oz)), decimal(norm1(expected)),
                        "closed form mismatch"};
            record(std::move(w));
        }

        const Pair p_zo = apply_code(zeros_ones);
        if (norm1(p_oz) != norm1(p_zo)) {
            Witness w;
            w.codes = {ones_zeros, zeros_ones};
            w.pairs = {p_oz, p_zo};
            w.values = {decimal(norm1(p_oz)), decimal(norm1(p_zo))};
            record(std::move(w));
        }

        const Pair p01 = apply_code(alt01);
        const Pair p10 = apply_code(alt10);
        if (norm1(p01) != norm1(p10)) {
            Witness w;
            w.codes = {alt01, alt10};
            w.pairs = {p01, p10};
            w.values = {decimal(norm1(p01)), decimal(norm1(p10))};
            record(std::move(w));
        }

        if (!(norm1(p_oz) < norm1(p01))) {
            Witness w;
            w.codes = {ones_zeros, alt01};
            w.pairs = {p_oz, p01};
            w.values = {decimal(norm1(p_oz)), decimal(norm1(p01)),
                        "expected strict <"};
            record(std::move(w));
        }
    }
    return report;
}

// ---- conjecture scan ----

namespace {
std::string scan_range(unsigned len, std::optional<unsigned> weight_filter) {
    std::string range = "len=" + std::to_string(len);
    if (weight_filter)
        range += " weight=" + std::to_string(*weight_filter);
    return range;
}

// Weights whose class aggregates admit at least one violating pair: some
// class with smaller variance has min sum <= a larger-variance class's
// max sum.
std::vector<unsigned> flagged_weights(const ClassMap& classes) {
    std::vector<unsigned> flagged;
    auto it = classes.begin();
    while (it != classes.end()) {
        const unsigned w = it->first.first;
        bool has_prefix = false;
        mpz_class prefix_min;
        bool flag = false;
        for (; it != classes.end() && it->first.first == w; ++it) {
            if (has_prefix && prefix_min <= it->second.range.max_sum)
                flag = true;
            if (!has_prefix || it->second.range.min_sum < prefix_min) {
                prefix_min = it->second.range.min_sum;
                has_prefix = true;
            }
        }
        if (flag)
            flagged.push_back(w);
    }
    return flagged;
}
} // namespace

SweepReport scan_conjecture(unsigned len, std::optional<unsigned> weight_filter,
                            std::size_t cap, unsigned shards) {
    if (len < 1)
        throw Error("scan_conjecture: len must be >= 1");
    if (len > 62)
        throw Error("scan_conjecture: len too large to index");
    if (weight_filter && *weight_filter > len)
        throw Error("scan_conjecture: weight filter exceeds len");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::Conjecture;
    report.range = scan_range(len, weight_filter);

    ClassMap classes;
    if (weight_filter) {
        // Same-weight enumeration visits exactly C(len, w) codes.
        const unsigned w = *weight_filter;
        const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
        std::uint64_t idx = w == 0 ? 0 : ((std::uint64_t{1} << w) - 1);
        for (;;) {
            const RunStats s = run_stats_from_index(len, idx);
            class_record(classes, {s.weight, s.sum_r3},
                         norm1(fold_index(len, idx)), len, idx);
            ++report.checked_count;
            if (idx == mask || w == 0)
                break;
            idx = next_same_weight(idx);
            if (idx > mask)
                break;
        }
    } else {
        struct ShardResult {
            std::uint64_t count = 0;
            ClassMap classes;
        };
        auto results = run_sharded<ShardResult>(
            std::uint64_t{1} << len, shards,
            [len](std::uint64_t lo, std::uint64_t hi) {
                ShardResult r;
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    const RunStats s = run_stats_from_index(len, idx);
                    class_record(r.classes, {s.weight, s.sum_r3},
                                 norm1(fold_index(len, idx)), len, idx);
                    ++r.count;
                }
                return r;
            });
        for (const auto& r : results) {
            report.checked_count += r.count;
            class_merge(classes, r.classes);
        }
    }

    report.extremal = class_extremal(classes, len);

    for (unsigned w : flagged_weights(classes)) {
        emit_group_witnesses(len, w, classes, cap, report.violations);
        if (report.violations.size() >= cap)
            break;
    }
    return report;
}

SweepReport scan_conjecture_naive(unsigned len,
                                  std::optional<unsigned> weight_filter,
                                  std::size_t cap) {
    if (len < 1)
        throw Error("scan_conjecture_naive: len must be >= 1");
    if (len > 30)
        throw Error("scan_conjecture_naive: quadratic oracle, use small len");
    if (weight_filter && *weight_filter > len)
        throw Error("scan_conjecture_naive: weight filter exceeds len");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::Conjecture;
    report.range = scan_range(len, weight_filter);

    // Everything below goes through the public per-code operations and a
    // literal all-pairs loop; this path stays deliberately plain so it can
    // adjudicate the scanner.
    struct Entry {
        Code code;
        Rational var;
        Pair pair;
        mpz_class sum;
    };
    std::vector<std::vector<Entry>> by_weight(len + 1);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx) {
        Entry e;
        e.code = code_from_index(len, idx);
        const std::size_t w = weight(e.code);
        if (weight_filter && w != *weight_filter)
            continue;
        e.var = cluster_variance(e.code);
        e.pair = apply_code(e.code);
        e.sum = norm1(e.pair);
        ++report.checked_count;
        by_weight[w].push_back(std::move(e));
    }

    ClassMap classes;
    for (unsigned w = 0; w <= len; ++w) {
        for (const auto& e : by_weight[w]) {
            std::uint64_t r3 = 0;
            for (std::size_t r : run_lengths(e.code)) {
                const std::uint64_t rr = r;
                r3 += rr * rr * rr;
            }
            ClassStats& stats = classes[{w, r3}];
            ++stats.count;
            stats.range.observe(e.sum, e.code);
        }
    }
    report.extremal = class_extremal(classes, len);

    for (unsigned w = 0; w <= len && report.violations.size() < cap; ++w) {
        const auto& group = by_weight[w];
        for (std::size_t i = 0;
             i < group.size() && report.violations.size() < cap; ++i) {
            for (std::size_t j = 0; j < group.size(); ++j) {
                const auto& c1 = group[i];
                const auto& c2 = group[j];
                if (!(c1.var < c2.var))
                    continue;
                if (c1.sum > c2.sum)
                    continue;
                report.violations.push_back(conjecture_witness(
                    c1.code, c2.code, c1.var, c2.var, c1.pair, c2.pair));
                if (report.violations.size() >= cap)
                    break;
            }
        }
    }
    return report;
}

// ---- homomorphism sampling ----

SweepReport sample_homomorphism(std::uint64_t trials, std::uint64_t seed,
                                std::size_t cap) {
    if (trials < 1)
        throw Error("sample_homomorphism: trials must be >= 1");
    cap = std::max<std::size_t>(cap, 1);

    SweepReport report;
    report.kind = SweepKind::Homomorphism;
    report.range =
        "trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);

    auto record = [&report, cap](Witness w) {
        if (report.violations.size() < cap)
            report.violations.push_back(std::move(w));
    };

    std::mt19937_64 rng(seed);
    auto draw = [&rng] { return mpz_class(static_cast<unsigned long>(rng())); };

    for (std::uint64_t t = 0; t < trials; ++t) {
        const Pair u{draw(), draw()};
        const Pair v{draw(), draw()};
        const mpz_class k = draw();
        ++report.checked_count;
        for (unsigned bit = 0; bit <= 1; ++bit) {
            const Pair lhs_add = tau(bit, add(u, v));
            const Pair rhs_add = add(tau(bit, u), tau(bit, v));
            if (!(lhs_add == rhs_add)) {
                Witness w;
                w.pairs = {u, v, lhs_add, rhs_add};
                w.values = {"tau" + std::to_string(bit) + " not additive"};
                record(std::move(w));
            }
            const Pair lhs_scale = tau(bit, scale(k, u));
            const Pair rhs_scale = scale(k, tau(bit, u));
            if (!(lhs_scale == rhs_scale)) {
                Witness w;
                w.pairs = {u, lhs_scale, rhs_scale};
                w.values = {"tau" + std::to_string(bit) +
                            " does not commute with scaling by " + k.get_str()};
                record(std::move(w));
            }
        }
    }

    // r must NOT be additive: the fixed counterexample.
    const Pair lhs = add(reduce(Pair{1, 4}), reduce(Pair{2, 3}));
    const Pair rhs = reduce(Pair{3, 7});
    if (!(lhs == Pair{2, 5}) || !(rhs == Pair{3, 4}) || lhs == rhs) {
        Witness w;
        w.pairs = {lhs, rhs};
        w.values = {"r[1,4]+r[2,3] vs r[3,7]"};
        record(std::move(w));
    }
    return report;
}

} // namespace coprime
