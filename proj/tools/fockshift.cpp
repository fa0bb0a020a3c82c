// Command line front end: builds shift matrices from a weight config,
// runs the verification suites, classifies divisor sequences and exports
// weighted trees. Exit codes: 0 all checks pass, 1 a check failed, 2
// configuration error.

#include "fockshift/json_io.hpp"
#include "fockshift/random_gen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fockshift;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

WeightFunctionT<double> to_float_weights(const WeightFunction& weights) {
    return WeightFunctionT<double>(
        weights.alphabet_size(), weights.depth(),
        [weights](int i, const Word& u) { return rational_to_double(weights(i, u)); },
        weights.periodic_k());
}

struct BuildArgs {
    std::string config_path;
    std::optional<std::size_t> levels;      // --m
    std::optional<std::size_t> max_length;  // --depth, direct truncation
    std::string mode = "exact";
    std::string format = "json";
    std::string out_path;
};

int run_build(const BuildArgs& args) {
    const WeightConfig config = load_weight_config(args.config_path);
    if (args.levels && args.max_length)
        throw std::invalid_argument("give either --m or --depth, not both");
    std::size_t max_length;
    if (args.levels) {
        if (!config.periodic) throw std::invalid_argument("--m needs a periodic config");
        max_length = config.period * (*args.levels + 1) - 1;
    } else if (args.max_length) {
        max_length = *args.max_length;
    } else {
        throw std::invalid_argument("give a truncation: --m (periodic) or --depth");
    }
    if (!config.periodic && max_length > config.explicit_depth + 1)
        throw std::invalid_argument("explicit config defines weights through depth " +
                                    std::to_string(config.explicit_depth) +
                                    ", cannot truncate at " + std::to_string(max_length));

    const TruncatedFockSpace space(config.alphabet_size, max_length);
    const WeightFunction weights = config.to_function();

    auto emit = [&](const auto& ops) {
        if (args.format == "json") {
            if (args.out_path.empty()) {
                Json doc{{"N", config.alphabet_size}, {"L", max_length}, {"operators", Json::array()}};
                for (const auto& op : ops) doc["operators"].push_back(matrix_export(op));
                write_text(dump(doc), "");
                return;
            }
            for (std::size_t j = 0; j < ops.size(); ++j)
                write_text(dump(matrix_export(ops[j])),
                           args.out_path + "T" + std::to_string(j + 1) + ".json");
            return;
        }
        if (args.out_path.empty()) {
            std::string text;
            for (std::size_t j = 0; j < ops.size(); ++j)
                text += "# T" + std::to_string(j + 1) + "\n" + matrix_export_csv(ops[j]);
            write_text(text, "");
            return;
        }
        for (std::size_t j = 0; j < ops.size(); ++j)
            write_text(matrix_export_csv(ops[j]),
                       args.out_path + "T" + std::to_string(j + 1) + ".csv");
    };

    if (args.mode == "float")
        emit(build_shift(to_float_weights(weights), space));
    else
        emit(build_shift(weights, space));
    return kExitPass;
}

struct VerifyArgs {
    std::string check;
    std::string config_path;
    int alphabet_size = 0;
    std::size_t period = 0;
    std::size_t levels = 1;  // --m
    std::optional<std::size_t> depth;
    std::optional<std::size_t> n1;
    std::optional<std::size_t> n2;
    std::string out_path;
};

// Weight source for a verify run: config file when given, else a seeded
// random periodic top.
WeightConfig verify_weights(const VerifyArgs& args, std::size_t default_period) {
    if (!args.config_path.empty()) return load_weight_config(args.config_path);
    const int n = args.alphabet_size;
    const std::size_t k = args.period > 0 ? args.period : default_period;
    if (n < 1 || k < 1)
        throw std::invalid_argument("without --config, give -N and --k for a seeded random top");
    std::mt19937_64 engine(seed_from_env(0));
    const WeightTop top = random_top(n, k, engine);
    WeightConfig config;
    config.alphabet_size = n;
    config.periodic = true;
    config.period = k;
    config.values = top.table();
    return config;
}

int run_verify_relations(const VerifyArgs& args) {
    const WeightConfig config = verify_weights(args, 1);
    const std::size_t max_length =
        args.depth.value_or(config.periodic ? config.period : config.explicit_depth + 1);
    const TruncatedFockSpace space(config.alphabet_size, max_length);
    const auto shift = build_shift(config.to_function(), space);

    std::vector<SparseOperator<Rational>> recovered;
    try {
        for (const auto& op : shift) recovered.push_back(recover_creation(op));
    } catch (const ZeroWeightError& e) {
        Json doc{{"check", "relations"}, {"pass", false}, {"error", e.what()}};
        write_text(dump(doc), args.out_path);
        return kExitCheckFailed;
    }
    const RelationReport report = check_ct_relations(recovered);
    write_text(dump(relation_report_export(report, space)), args.out_path);
    return report.pass ? kExitPass : kExitCheckFailed;
}

int run_verify_factorization(const VerifyArgs& args) {
    const WeightConfig config = verify_weights(args, 1);
    const std::size_t max_length =
        args.depth.value_or(config.periodic ? config.period : config.explicit_depth + 1);
    const TruncatedFockSpace space(config.alphabet_size, max_length);
    const auto shift = build_shift(config.to_function(), space);

    Json doc{{"check", "factorization"},
             {"pass", true},
             {"N", config.alphabet_size},
             {"L", max_length},
             {"difference", nullptr}};
    for (int i = 1; i <= config.alphabet_size; ++i) {
        const auto& op = shift[static_cast<std::size_t>(i) - 1];
        const auto product = creation_operator(i, space) * weight_operator(op);
        const auto diff = op.first_column_difference(product, space.max_length());
        if (diff) {
            doc["pass"] = false;
            doc["difference"] = Json{{"i", i},
                                     {"row", std::get<0>(*diff)},
                                     {"col", std::get<1>(*diff)},
                                     {"shift", rational_to_string(std::get<2>(*diff))},
                                     {"product", rational_to_string(std::get<3>(*diff))}};
            break;
        }
    }
    write_text(dump(doc), args.out_path);
    return doc["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int run_verify_theorem(const VerifyArgs& args) {
    const WeightConfig config = verify_weights(args, 2);
    if (!config.periodic)
        throw std::invalid_argument("block decomposition needs a periodic config");
    const DecompositionReport report =
        verify_block_decomposition(config.to_top(), args.levels);
    write_text(dump(decomposition_report_export(report)), args.out_path);
    return report.pass ? kExitPass : kExitCheckFailed;
}

int run_verify_containment(const VerifyArgs& args) {
    if (!args.n2) throw std::invalid_argument("containment needs --n2");
    const WeightConfig config = verify_weights(args, args.n1.value_or(1));
    if (!config.periodic) throw std::invalid_argument("containment needs a periodic config");
    if (args.n1 && *args.n1 != config.period)
        throw std::invalid_argument("--n1 " + std::to_string(*args.n1) +
                                    " does not match the config period " +
                                    std::to_string(config.period));
    const WeightTop top = config.to_top();
    const std::size_t depth = args.depth.value_or(*args.n2 + 2);
    const bool pass = verify_containment(top, *args.n2, depth);
    Json doc{{"check", "containment"},
             {"pass", pass},
             {"n1", top.period()},
             {"n2", *args.n2},
             {"depth", depth}};
    write_text(dump(doc), args.out_path);
    return pass ? kExitPass : kExitCheckFailed;
}

struct ClassifyArgs {
    std::string seq_a;
    std::string seq_b;
    int base = 2;
    std::string out_path;
};

int run_classify(const ClassifyArgs& args) {
    const DivisorSequence a = DivisorSequence::parse(args.seq_a);
    const DivisorSequence b = DivisorSequence::parse(args.seq_b);
    const SupernaturalNumber sa = supernatural_from_sequence(a);
    const SupernaturalNumber sb = supernatural_from_sequence(b);
    const bool equal = supernatural_eq(a, b);
    const bool k0 = k0_isomorphic(args.base, a, b);
    const bool agreement = equal == k0;

    std::string verdict = equal ? "equal (prefix semantics)" : "not equal (prefix semantics)";
    verdict += agreement ? "; K0 agrees" : "; K0 disagrees";

    Json doc{{"check", "classification"},
             {"N", args.base},
             {"seq_a", a.str()},
             {"seq_b", b.str()},
             {"supernatural_a", sa.str()},
             {"supernatural_b", sb.str()},
             {"prefix_semantics", true},
             {"equal", equal},
             {"k0_isomorphic", k0},
             {"agreement", agreement},
             {"verdict", verdict}};
    write_text(dump(doc), args.out_path);
    return agreement ? kExitPass : kExitCheckFailed;
}

struct TreeArgs {
    std::string config_path;
    std::size_t depth = 0;
    std::string format = "dot";
    std::string out_path;
};

int run_tree(const TreeArgs& args) {
    if (args.format != "dot") throw std::invalid_argument("tree export supports --format dot");
    const WeightConfig config = load_weight_config(args.config_path);
    const FockTree tree = build_tree(config.to_function(), args.depth);
    write_text(to_dot(tree), args.out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic weighted shifts on the truncated Fock space"};
    app.require_subcommand(1);

    BuildArgs build_args;
    std::size_t build_levels = 0;
    std::size_t build_max_length = 0;
    CLI::App* build = app.add_subcommand("build", "construct shift matrices from a weight config");
    build->add_option("--config", build_args.config_path, "weight config path")->required();
    build->add_option("--m", build_levels, "repeated levels; truncates at L = k(m+1)-1");
    build->add_option("--depth", build_max_length, "direct truncation length L");
    build->add_option("--mode", build_args.mode, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    build->add_option("--format", build_args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    build->add_option("--out", build_args.out_path, "output path prefix (default: stdout)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--check", verify_args.check, "relations | factorization | theorem | containment")
        ->required()
        ->check(CLI::IsMember({"relations", "factorization", "theorem", "containment"}));
    verify->add_option("--config", verify_args.config_path, "weight config path");
    verify->add_option("-N,--n", verify_args.alphabet_size, "alphabet size for a seeded random top");
    verify->add_option("--k", verify_args.period, "period for a seeded random top");
    std::size_t verify_depth = 0;
    std::size_t verify_n1 = 0;
    std::size_t verify_n2 = 0;
    verify->add_option("--m", verify_args.levels, "repeated levels for the block comparison");
    verify->add_option("--depth", verify_depth, "truncation / check depth override");
    verify->add_option("--n1", verify_n1, "declared period for containment");
    verify->add_option("--n2", verify_n2, "containing period for containment");
    verify->add_option("--out", verify_args.out_path, "report path (default: stdout)");

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "compare two divisor sequences");
    classify->add_option("--seq-a", classify_args.seq_a, "comma-separated terms")->required();
    classify->add_option("--seq-b", classify_args.seq_b, "comma-separated terms")->required();
    classify->add_option("-N,--n", classify_args.base, "alphabet size for the K0 orders");
    classify->add_option("--out", classify_args.out_path, "report path (default: stdout)");

    TreeArgs tree_args;
    CLI::App* tree = app.add_subcommand("tree", "export the weighted tree as DOT");
    tree->add_option("--config", tree_args.config_path, "weight config path")->required();
    tree->add_option("--depth", tree_args.depth, "tree depth")->required();
    tree->add_option("--format", tree_args.format, "dot");
    tree->add_option("--out", tree_args.out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitConfigError;
    }

    if (build->count("--m") > 0) build_args.levels = build_levels;
    if (build->count("--depth") > 0) build_args.max_length = build_max_length;
    if (verify->count("--depth") > 0) verify_args.depth = verify_depth;
    if (verify->count("--n1") > 0) verify_args.n1 = verify_n1;
    if (verify->count("--n2") > 0) verify_args.n2 = verify_n2;

    try {
        if (build->parsed()) return run_build(build_args);
        if (classify->parsed()) return run_classify(classify_args);
        if (tree->parsed()) return run_tree(tree_args);
        if (verify_args.check == "relations") return run_verify_relations(verify_args);
        if (verify_args.check == "factorization") return run_verify_factorization(verify_args);
        if (verify_args.check == "theorem") return run_verify_theorem(verify_args);
        return run_verify_containment(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
