#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hitsvocab/cooc.hpp"

namespace hitsvocab {

enum class WeightScheme { Freq, Ppmi };

std::string to_string(WeightScheme scheme);

// Sparse symmetric nonnegative adjacency matrix over the graph's word
// index. The sparsity pattern is a subset of the source graph's pattern.
class WeightedAdjacency {
public:
    WeightedAdjacency() = default;

    // Assembles an adjacency from explicit symmetric weight triplets.
    // Zero-weight triplets are dropped. Throws DomainError on asymmetry or
    // negative weights.
    static WeightedAdjacency from_weights(
        std::vector<std::string> words,
        const std::vector<std::tuple<WordId, WordId, double>>& triplets,
        WeightScheme scheme);

    const WordIndex& index() const { return *index_; }
    std::shared_ptr<const WordIndex> shared_index() const { return index_; }
    WeightScheme scheme() const { return scheme_; }

    std::size_t size() const { return index_ ? index_->size() : 0; }
    std::size_t nonzero_count() const { return cols_.size(); }

    double weight(WordId x, WordId y) const;
    std::span<const WordId> row_cols(WordId x) const;
    std::span<const double> row_values(WordId x) const;

    // Every stored weight multiplied by a positive factor.
    WeightedAdjacency scaled(double factor) const;

private:
    friend WeightedAdjacency weight_freq(const CoocGraph&);
    friend WeightedAdjacency weight_ppmi(const CoocGraph&);

    std::shared_ptr<const WordIndex> index_;
    std::vector<std::size_t> row_ptr_;
    std::vector<WordId> cols_;
    std::vector<double> values_;
    WeightScheme scheme_ = WeightScheme::Freq;
};

// A_xy = |x,y|: raw co-occurrence counts as weights.
WeightedAdjacency weight_freq(const CoocGraph& graph);

// pmi(x, y) = log2(M * |x,y| / (|x,*| * |*,y|)); may be negative.
// Throws UndefinedPmiError when the count or a marginal is zero.
double pmi(const CoocGraph& graph, WordId x, WordId y);

// A_xy = max(0, pmi(x, y) + log2 |x,y|) for every nonzero count cell.
// Cells that clamp to zero are dropped from the sparsity pattern, which is
// equivalent to storing explicit zeros.
WeightedAdjacency weight_ppmi(const CoocGraph& graph);

// TSV dump: "word_x<TAB>word_y<TAB>weight" with weights to 6 decimal
// places, one nonzero unordered pair per line (word_x <= word_y), sorted
// lexicographically.
void write_adjacency_tsv(const WeightedAdjacency& adjacency, std::ostream& out);

}  // namespace hitsvocab
