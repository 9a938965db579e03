#include "coprime/report.hpp"

#include <algorithm>
#include <array>

#include "coprime/cluster.hpp"
#include "coprime/tree.hpp"

namespace coprime {

namespace {

using json = nlohmann::ordered_json;

// Unit word for "checked N <unit>, K violations".
std::string count_unit(SweepKind kind) {
    switch (kind) {
    case SweepKind::Reflection:
    case SweepKind::Conjecture: return "codes";
    case SweepKind::Completeness: return "pairs";
    case SweepKind::BlockProposition: return "cases";
    case SweepKind::Homomorphism: return "trials";
    }
    return "items";
}

json pair_json(const Pair& p) {
    return json::array({p.a.get_str(), p.b.get_str()});
}

json witness_json(const Witness& w) {
    json codes = json::array();
    for (const auto& c : w.codes)
        codes.push_back(format_code(c));
    json pairs = json::array();
    for (const auto& p : w.pairs)
        pairs.push_back(pair_json(p));
    json obj;
    obj["codes"] = std::move(codes);
    obj["pairs"] = std::move(pairs);
    obj["values"] = w.values;
    return obj;
}

json extremal_json(const ExtremalEntry& e) {
    json obj;
    if (e.weight)
        obj["weight"] = *e.weight;
    if (e.var)
        obj["var"] = format_rational(*e.var);
    obj["count"] = e.count;
    obj["min_sum"] = e.min_sum.get_str();
    obj["min_code"] = format_code(e.min_code);
    obj["max_sum"] = e.max_sum.get_str();
    obj["max_code"] = format_code(e.max_code);
    return obj;
}

std::string witness_line(const Witness& w) {
    std::string line = "violation: codes=";
    for (std::size_t i = 0; i < w.codes.size(); ++i) {
        if (i)
            line += ",";
        line += format_code(w.codes[i]);
    }
    line += " pairs=";
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
        if (i)
            line += ",";
        line += format_pair(w.pairs[i]);
    }
    line += " values=";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i)
            line += ",";
        line += w.values[i];
    }
    return line;
}

std::string extremal_line(const ExtremalEntry& e) {
    std::string line = "extremal:";
    if (e.weight)
        line += " weight=" + std::to_string(*e.weight);
    if (e.var)
        line += " var=" + format_rational(*e.var);
    line += " count=" + std::to_string(e.count);
    line += " min_sum=" + e.min_sum.get_str();
    line += " min_code=" + format_code(e.min_code);
    line += " max_sum=" + e.max_sum.get_str();
    line += " max_code=" + format_code(e.max_code);
    return line;
}

} // namespace

nlohmann::ordered_json report_to_json(const SweepReport& report) {
    json obj;
    obj["kind"] = sweep_kind_name(report.kind);
    obj["range"] = report.range;
    obj["checked_count"] = report.checked_count;
    json violations = json::array();
    for (const auto& w : report.violations)
        violations.push_back(witness_json(w));
    obj["violations"] = std::move(violations);
    json extremal = json::array();
    for (const auto& e : report.extremal)
        extremal.push_back(extremal_json(e));
    obj["extremal"] = std::move(extremal);
    return obj;
}

std::string report_to_json_text(const SweepReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string report_summary_text(const SweepReport& report) {
    std::string out;
    out += "kind: " + sweep_kind_name(report.kind) + "\n";
    out += "range: " + report.range + "\n";
    out += "checked " + std::to_string(report.checked_count) + " " +
           count_unit(report.kind) + ", " +
           std::to_string(report.violations.size()) + " violations\n";
    for (const auto& w : report.violations)
        out += witness_line(w) + "\n";
    for (const auto& e : report.extremal)
        out += extremal_line(e) + "\n";
    return out;
}

namespace {

struct RowFields {
    std::string code;
    std::string length;
    std::string weight;
    std::string var_num;  // empty for the root row
    std::string var_den;
    std::string var;      // "-" for the root row
    std::string a;
    std::string b;
    std::string sum;
};

RowFields row_fields(const TableRow& row) {
    RowFields f;
    f.code = format_code(row.code);
    f.length = std::to_string(row.code.size());
    f.weight = std::to_string(weight(row.code));
    if (row.code.empty()) {
        f.var = "-";
    } else {
        const Rational var = cluster_variance(row.code);
        f.var_num = var.get_num().get_str();
        f.var_den = var.get_den().get_str();
        f.var = format_rational(var);
    }
    f.a = row.pair.a.get_str();
    f.b = row.pair.b.get_str();
    f.sum = norm1(row.pair).get_str();
    return f;
}

} // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "code,length,weight,var_num,var_den,a,b,sum\n";
    for (const auto& row : rows) {
        const RowFields f = row_fields(row);
        out += f.code + "," + f.length + "," + f.weight + "," + f.var_num +
               "," + f.var_den + "," + f.a + "," + f.b + "," + f.sum + "\n";
    }
    return out;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    static constexpr const char* headers[6] = {"code", "a",      "b",
                                               "sum",  "weight", "var"};
    std::vector<std::array<std::string, 6>> cells;
    cells.reserve(rows.size());
    std::array<std::size_t, 6> width;
    for (std::size_t k = 0; k < 6; ++k)
        width[k] = std::string(headers[k]).size();
    for (const auto& row : rows) {
        const RowFields f = row_fields(row);
        std::array<std::string, 6> line{f.code, f.a, f.b, f.sum, f.weight, f.var};
        for (std::size_t k = 0; k < 6; ++k)
            width[k] = std::max(width[k], line[k].size());
        cells.push_back(std::move(line));
    }
    std::string out;
    auto emit = [&out, &width](const std::array<std::string, 6>& line) {
        for (std::size_t k = 0; k < 6; ++k) {
            if (k)
                out += "  ";
            out += line[k];
            out += std::string(width[k] - line[k].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += "\n";
    };
    emit({headers[0], headers[1], headers[2], headers[3], headers[4], headers[5]});
    for (const auto& line : cells)
        emit(line);
    return out;
}

std::string table_to_json_text(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        const RowFields f = row_fields(row);
        json obj;
        obj["code"] = f.code;
        obj["length"] = row.code.size();
        obj["weight"] = weight(row.code);
        if (row.code.empty()) {
            obj["var_num"] = nullptr;
            obj["var_den"] = nullptr;
        } else {
            obj["var_num"] = f.var_num;
            obj["var_den"] = f.var_den;
        }
        obj["a"] = f.a;
        obj["b"] = f.b;
        obj["sum"] = f.sum;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

} // namespace coprime
