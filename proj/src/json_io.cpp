#include "fockshift/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fockshift {

namespace {

Json entry_list(const SparseOperator<Rational>& op) {
    Json entries = Json::array();
    for (const auto& [pos, value] : op.entries())
        entries.push_back({pos.first, pos.second, rational_to_string(value)});
    return entries;
}

Json entry_list(const SparseOperator<double>& op) {
    Json entries = Json::array();
    for (const auto& [pos, value] : op.entries()) entries.push_back({pos.first, pos.second, value});
    return entries;
}

template <typename T>
Json matrix_doc(const SparseOperator<T>& op) {
    return Json{{"N", op.space().alphabet_size()},
                {"L", op.space().max_length()},
                {"entries", entry_list(op)}};
}

std::string csv_value(const Rational& value) { return rational_to_string(value); }

std::string csv_value(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

template <typename T>
std::string csv_doc(const SparseOperator<T>& op) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (const auto& [pos, value] : op.entries())
        out << pos.first << "," << pos.second << "," << csv_value(value) << "\n";
    return out.str();
}

}  // namespace

Json matrix_export(const SparseOperator<Rational>& op) { return matrix_doc(op); }
Json matrix_export(const SparseOperator<double>& op) { return matrix_doc(op); }

std::string matrix_export_csv(const SparseOperator<Rational>& op) { return csv_doc(op); }
std::string matrix_export_csv(const SparseOperator<double>& op) { return csv_doc(op); }

Json block_matrix_export(const BlockMatrix& matrix) {
    Json blocks = Json::array();
    for (const auto& [key, op] : matrix.blocks())
        blocks.push_back(
            {{"row", key.first.str()}, {"col", key.second.str()}, {"op", matrix_export(op)}});
    return Json{{"N", matrix.alphabet_size()},
                {"k", matrix.period()},
                {"m", matrix.levels()},
                {"blocks", blocks}};
}

Json relation_report_export(const RelationReport& report, const TruncatedFockSpace& space) {
    Json doc{{"check", "relations"},
             {"pass", report.pass},
             {"checked_max_length", report.checked_max_length},
             {"violation", nullptr}};
    if (report.violation) {
        const RelationViolation& v = *report.violation;
        doc["violation"] = Json{{"relation", v.relation},
                                {"i", v.i},
                                {"j", v.j},
                                {"row", v.row},
                                {"row_word", space.word_at(v.row).str()},
                                {"col", v.col},
                                {"col_word", space.word_at(v.col).str()},
                                {"expected", rational_to_string(v.expected)},
                                {"actual", rational_to_string(v.actual)}};
    }
    return doc;
}

Json decomposition_report_export(const DecompositionReport& report) {
    Json doc{{"check", "block_decomposition"},
             {"pass", report.pass},
             {"N", report.alphabet_size},
             {"k", report.period},
             {"m", report.levels},
             {"compared_columns", report.compared_columns},
             {"discrepancy", nullptr}};
    if (report.discrepancy) {
        const BlockDiscrepancy& d = *report.discrepancy;
        doc["discrepancy"] = Json{{"letter", d.letter},
                                  {"block_row", d.block_row.str()},
                                  {"block_col", d.block_col.str()},
                                  {"row", d.row},
                                  {"col", d.col},
                                  {"actual", rational_to_string(d.actual)},
                                  {"expected", rational_to_string(d.expected)}};
    }
    return doc;
}

WeightTop WeightConfig::to_top() const {
    if (!periodic) throw std::invalid_argument("config is not in periodic mode");
    return WeightTop(alphabet_size, period, values);
}

WeightFunction WeightConfig::to_function() const {
    if (periodic) return periodic_weight(to_top());
    return WeightFunction::from_table(alphabet_size, explicit_depth, values);
}

WeightConfig parse_weight_config(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config document must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "N" && key != "mode" && key != "k" && key != "weights")
            throw std::invalid_argument("config has unknown field \"" + key + "\"");
    }
    if (!doc.contains("N") || !doc["N"].is_number_integer())
        throw std::invalid_argument("config needs an integer field N");
    if (!doc.contains("mode") || !doc["mode"].is_string())
        throw std::invalid_argument("config needs a mode field, \"periodic\" or \"explicit\"");
    if (!doc.contains("weights") || !doc["weights"].is_array())
        throw std::invalid_argument("config needs a weights array");

    WeightConfig config;
    config.alphabet_size = doc["N"].get<int>();
    if (config.alphabet_size < 1) throw std::invalid_argument("config N must be at least 1");

    const std::string mode = doc["mode"].get<std::string>();
    if (mode == "periodic") {
        config.periodic = true;
        if (!doc.contains("k") || !doc["k"].is_number_integer() || doc["k"].get<int>() < 1)
            throw std::invalid_argument("periodic config needs an integer field k >= 1");
        config.period = doc["k"].get<std::size_t>();
    } else if (mode == "explicit") {
        if (doc.contains("k"))
            throw std::invalid_argument("field k only applies to periodic mode");
    } else {
        throw std::invalid_argument("config mode must be \"periodic\" or \"explicit\", got \"" +
                                    mode + "\"");
    }

    for (const Json& item : doc["weights"]) {
        if (!item.is_object() || !item.contains("i") || !item.contains("u") ||
            !item.contains("value"))
            throw std::invalid_argument("each weight needs fields i, u and value");
        if (!item["i"].is_number_integer())
            throw std::invalid_argument("weight field i must be an integer letter");
        const int letter = item["i"].get<int>();
        if (letter < 1 || letter > config.alphabet_size)
            throw std::invalid_argument("weight letter " + std::to_string(letter) +
                                        " outside alphabet");
        if (!item["u"].is_string())
            throw std::invalid_argument("weight field u must be a word string");
        const Word u = Word::parse(config.alphabet_size, item["u"].get<std::string>());
        if (!item["value"].is_string())
            throw std::invalid_argument("weight value must be an exact rational string");
        const Rational value = rational_from_string(item["value"].get<std::string>());
        if (config.periodic && value < 0)
            throw std::invalid_argument("periodic weights must be nonnegative, got " +
                                        rational_to_string(value) + " at (" +
                                        std::to_string(letter) + ", " + u.str() + ")");
        if (config.periodic && u.length() >= config.period)
            throw std::invalid_argument("weight word " + u.str() + " has length >= k");
        if (!config.values.emplace(std::make_pair(letter, u), value).second)
            throw std::invalid_argument("duplicate weight at (" + std::to_string(letter) + ", " +
                                        u.str() + ")");
        if (!config.periodic) config.explicit_depth = std::max(config.explicit_depth, u.length());
    }

    const std::size_t table_depth = config.periodic ? config.period - 1 : config.explicit_depth;
    for (std::size_t len = 0; len <= table_depth; ++len) {
        for (const Word& u : enumerate_words(config.alphabet_size, len)) {
            for (int i = 1; i <= config.alphabet_size; ++i) {
                if (!config.values.count({i, u}))
                    throw std::invalid_argument("config missing weight at (i, u) = (" +
                                                std::to_string(i) + ", " + u.str() + ")");
            }
        }
    }
    return config;
}

WeightConfig load_weight_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    try {
        return parse_weight_config(doc);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
}

Json weight_config_export(const WeightConfig& config) {
    Json weights = Json::array();
    for (const auto& [key, value] : config.values)
        weights.push_back({{"i", key.first},
                           {"u", key.second.str()},
                           {"value", rational_to_string(value)}});
    Json doc{{"N", config.alphabet_size},
             {"mode", config.periodic ? "periodic" : "explicit"},
             {"weights", weights}};
    if (config.periodic) doc["k"] = config.period;
    return doc;
}

}  // namespace fockshift
