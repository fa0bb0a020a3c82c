#include "fockshift/shift.hpp"

#include <cmath>
#include <sstream>

namespace fockshift {

namespace {

// Enumeration backing the sup/inf formulas: the finite set of words the
// weight value actually depends on. Periodic rules need one period of
// prefixes; finite tables are scanned whole.
struct SupRange {
    std::size_t max_length;
    bool exhaustive;
};

SupRange sup_range(const WeightFunction& weights) {
    if (weights.periodic_k()) return {*weights.periodic_k() - 1, true};
    if (weights.depth()) return {*weights.depth(), false};
    throw std::invalid_argument("weight function has neither a period nor a finite depth");
}

}  // namespace

std::complex<double> DiagonalUnitary::phase_as_complex(const Word& w) const {
    if (exact) {
        auto it = exact_phase.find(w);
        if (it == exact_phase.end()) throw std::out_of_range("phase undefined for word " + w.str());
        return it->second.to_complex_double();
    }
    auto it = float_phase.find(w);
    if (it == float_phase.end()) throw std::out_of_range("phase undefined for word " + w.str());
    return it->second;
}

SparseOperator<GaussianRational> DiagonalUnitary::to_operator(
    const TruncatedFockSpace& space) const {
    if (!exact) throw std::logic_error("normalizing unitary has no exact representation");
    if (space.alphabet_size() != alphabet_size)
        throw std::invalid_argument("unitary alphabet does not match space");
    if (space.max_length() > depth)
        throw std::invalid_argument("unitary phases stop at depth " + std::to_string(depth));
    SparseOperator<GaussianRational> op(space);
    for (WordIndex idx = 0; idx < space.dimension(); ++idx) {
        const Word w = space.word_at(idx);
        op.set(idx, idx, exact_phase.at(w));
    }
    return op;
}

WeightFunction NormalizationResult::canonical_weights() const {
    if (!exact) throw std::logic_error("canonical weights are float-valued for this run");
    auto shared = std::make_shared<std::map<std::pair<int, Word>, Rational>>(canonical);
    int n = unitary.alphabet_size;
    std::size_t depth = unitary.depth - 1;
    return WeightFunction(n, depth, [shared](int i, const Word& w) {
        auto it = shared->find({i, w});
        if (it == shared->end()) throw std::out_of_range("canonical weight missing");
        return it->second;
    });
}

NormalizationResult normalize_weights(const RawWeightFunction& raw, std::size_t depth) {
    if (raw.depth() && *raw.depth() < depth)
        throw std::invalid_argument("raw weights stop at depth " + std::to_string(*raw.depth()));
    const int n = raw.alphabet_size();

    NormalizationResult result;
    result.unitary.alphabet_size = n;
    result.unitary.depth = depth + 1;

    // A site is representable exactly iff |lambda|^2 is a rational square;
    // phases stay exactly unimodular under the recursion, so the test does
    // not depend on the accumulated phase.
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const Word& w : enumerate_words(n, len)) {
            for (int i = 1; i <= n; ++i) {
                const GaussianRational lambda = raw(i, w);
                if (is_zero_value(lambda)) continue;
                if (!exact_rational_sqrt(lambda.norm_sq()))
                    result.inexact_sites.push_back({i, w});
            }
        }
    }
    result.exact = result.inexact_sites.empty();
    result.unitary.exact = result.exact;

    if (result.exact) {
        result.unitary.exact_phase[Word::unit(n)] = GaussianRational(Rational(1), Rational(0));
        for (std::size_t len = 0; len <= depth; ++len) {
            for (const Word& w : enumerate_words(n, len)) {
                const GaussianRational mu = result.unitary.exact_phase.at(w);
                for (int i = 1; i <= n; ++i) {
                    const GaussianRational lambda = raw(i, w);
                    const Word iw = w.prepend(i);
                    if (is_zero_value(lambda)) {
                        result.unitary.exact_phase[iw] = GaussianRational(Rational(1), Rational(0));
                        result.canonical[{i, w}] = Rational(0);
                        continue;
                    }
                    const GaussianRational z = mu.conj() * lambda;
                    const Rational mod = *exact_modulus(z);
                    result.unitary.exact_phase[iw] = z.conj() / mod;
                    result.canonical[{i, w}] = mod;
                }
            }
        }
        return result;
    }

    result.unitary.float_phase[Word::unit(n)] = {1.0, 0.0};
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const Word& w : enumerate_words(n, len)) {
            const std::complex<double> mu = result.unitary.float_phase.at(w);
            for (int i = 1; i <= n; ++i) {
                const GaussianRational lambda = raw(i, w);
                const Word iw = w.prepend(i);
                if (is_zero_value(lambda)) {
                    result.unitary.float_phase[iw] = {1.0, 0.0};
                    result.canonical_float[{i, w}] = 0.0;
                    continue;
                }
                const std::complex<double> z = std::conj(mu) * lambda.to_complex_double();
                const double mod = std::abs(z);
                result.unitary.float_phase[iw] = std::conj(z) / mod;
                result.canonical_float[{i, w}] = mod;
            }
        }
    }
    return result;
}

namespace {

// Shared structure scan: every entry must sit at (iw, w) for one letter i.
// Returns the letter, 0 for an operator with no entries.
template <typename T>
int infer_letter(const SparseOperator<T>& op) {
    const TruncatedFockSpace& space = op.space();
    int letter = 0;
    for (const auto& [pos, value] : op.entries()) {
        const Word row = space.word_at(pos.first);
        const Word col = space.word_at(pos.second);
        if (row.length() != col.length() + 1 || row.suffix(col.length()) != col)
            throw std::invalid_argument("operator entry at (" + row.str() + ", " + col.str() +
                                        ") is not a single-letter shift");
        const int i = row.letters().front();
        if (letter == 0)
            letter = i;
        else if (letter != i)
            throw std::invalid_argument("operator mixes shift letters " + std::to_string(letter) +
                                        " and " + std::to_string(i));
    }
    return letter;
}

}  // namespace

SparseOperator<Rational> weight_operator(const SparseOperator<Rational>& shift_op) {
    infer_letter(shift_op);
    const TruncatedFockSpace& space = shift_op.space();
    SparseOperator<Rational> diag(space);
    for (const auto& [pos, value] : shift_op.entries()) diag.set(pos.second, pos.second, value);
    return diag;
}

NormEstimate shift_norm(const WeightFunction& weights, int letter) {
    const SupRange range = sup_range(weights);
    NormEstimate estimate;
    estimate.value = 0;
    estimate.exact_sup = range.exhaustive;
    estimate.depth_used = range.max_length;
    for (std::size_t len = 0; len <= range.max_length; ++len)
        for (const Word& w : enumerate_words(weights.alphabet_size(), len))
            estimate.value = std::max(estimate.value, Rational(abs(weights(letter, w))));
    return estimate;
}

NormEstimate row_norm(const WeightFunction& weights) {
    NormEstimate estimate = shift_norm(weights, 1);
    for (int i = 2; i <= weights.alphabet_size(); ++i)
        estimate.value = std::max(estimate.value, shift_norm(weights, i).value);
    return estimate;
}

BoundedBelowVerdict is_bounded_below(const WeightFunction& weights) {
    const SupRange range = sup_range(weights);
    BoundedBelowVerdict verdict;
    verdict.depth_limited = !range.exhaustive;
    bool first = true;
    for (std::size_t len = 0; len <= range.max_length; ++len) {
        for (const Word& w : enumerate_words(weights.alphabet_size(), len)) {
            for (int i = 1; i <= weights.alphabet_size(); ++i) {
                const Rational value = abs(weights(i, w));
                if (first || value < verdict.min_weight) {
                    verdict.min_weight = value;
                    verdict.min_letter = i;
                    verdict.min_word = w;
                    first = false;
                }
            }
        }
    }
    verdict.bounded = !first && verdict.min_weight > 0;
    return verdict;
}

SparseOperator<Rational> recover_creation(const SparseOperator<Rational>& shift_op) {
    const int letter = infer_letter(shift_op);
    if (letter == 0)
        throw std::invalid_argument("cannot infer the shift letter of a zero operator");
    const TruncatedFockSpace& space = shift_op.space();
    const std::size_t source_count =
        space.max_length() == 0 ? 0 : space.level_offset(space.max_length());
    SparseOperator<Rational> creation(space);
    for (WordIndex col = 0; col < source_count; ++col) {
        const Word w = space.word_at(col);
        const WordIndex row = space.index_of(w.prepend(letter));
        if (is_zero_value(shift_op.at(row, col))) throw ZeroWeightError(letter, w);
        creation.set(row, col, Rational(1));
    }
    return creation;
}

}  // namespace fockshift
