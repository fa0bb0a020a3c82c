// JSON serialization for operators, blocks, reports and the weight config
// document consumed by the command line tool. All emitted documents have
// sorted keys and no volatile fields, so byte output is reproducible.

#ifndef FOCKSHIFT_JSON_IO_HPP
#define FOCKSHIFT_JSON_IO_HPP

#include "fockshift/classify.hpp"
#include "fockshift/decomposition.hpp"

#include <json.hpp>

#include <string>

namespace fockshift {

using Json = nlohmann::json;

// {N, L, entries: [[row, col, "p/q"], ...]} with index-valued rows/cols.
Json matrix_export(const SparseOperator<Rational>& op);
Json matrix_export(const SparseOperator<double>& op);

// {N, k, m, blocks: [{row, col, op}, ...]} with word-valued block labels.
Json block_matrix_export(const BlockMatrix& matrix);

Json relation_report_export(const RelationReport& report, const TruncatedFockSpace& space);
Json decomposition_report_export(const DecompositionReport& report);

// Matrix entries as "row,col,value" CSV lines, header included.
std::string matrix_export_csv(const SparseOperator<Rational>& op);
std::string matrix_export_csv(const SparseOperator<double>& op);

// Weight config document:
//   {N, mode: "periodic"|"explicit", k?, weights: [{i, u, value}, ...]}
// Periodic mode needs every (i, u) with |u| < k; explicit mode needs every
// (i, u) up to the deepest u mentioned.
struct WeightConfig {
    int alphabet_size = 0;
    bool periodic = false;
    std::size_t period = 0;          // periodic mode
    std::size_t explicit_depth = 0;  // explicit mode
    std::map<std::pair<int, Word>, Rational> values;

    WeightTop to_top() const;           // periodic mode only
    WeightFunction to_function() const;  // either mode
};

WeightConfig parse_weight_config(const Json& doc);
WeightConfig load_weight_config(const std::string& path);

Json weight_config_export(const WeightConfig& config);

}  // namespace fockshift

#endif  // FOCKSHIFT_JSON_IO_HPP
