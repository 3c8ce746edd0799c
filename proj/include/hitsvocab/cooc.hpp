#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitsvocab/corpus.hpp"

namespace hitsvocab {

using WordId = std::uint32_t;

// Bijection between word strings and dense ids 0..size-1.
class WordIndex {
public:
    WordIndex() = default;
    explicit WordIndex(std::vector<std::string> words);

    std::size_t size() const { return word_of_.size(); }
    const std::string& word_of(WordId id) const { return word_of_[id]; }
    std::optional<WordId> id_of(std::string_view word) const;
    bool contains(std::string_view word) const { return id_of(word).has_value(); }
    const std::vector<std::string>& words() const { return word_of_; }

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> id_of_;
    std::vector<std::string> word_of_;
};

// Sparse symmetric word co-occurrence counts over a fixed window.
//
// Entry (x, y) is |x,y|: the number of ordered in-window position pairs
// whose tokens are x and y. Marginals |x,*| and the total M are kept from
// the counts at build time; prune_rare_pairs deliberately leaves them
// untouched so PMI denominators keep their corpus values.
class CoocGraph {
public:
    CoocGraph() = default;

    // Assembles a graph from explicit symmetric count triplets. Row
    // marginals and the total are derived from the triplets unless given
    // (a pruned graph keeps its pre-pruning values, so round-tripping one
    // needs the override). Throws DomainError if the triplets are not
    // symmetric.
    static CoocGraph from_counts(
        std::vector<std::string> words,
        const std::vector<std::tuple<WordId, WordId, std::uint64_t>>& triplets,
        std::uint32_t window,
        std::optional<std::vector<std::uint64_t>> row_marginals = std::nullopt,
        std::optional<std::uint64_t> total = std::nullopt);

    const WordIndex& index() const { return *index_; }
    std::shared_ptr<const WordIndex> shared_index() const { return index_; }

    std::size_t size() const { return index_ ? index_->size() : 0; }
    std::uint64_t total() const { return total_; }
    std::uint32_t window() const { return window_; }
    std::size_t nonzero_count() const { return cols_.size(); }

    std::uint64_t count(WordId x, WordId y) const;
    std::uint64_t row_marginal(WordId x) const { return row_marginals_[x]; }
    std::uint64_t col_marginal(WordId y) const { return row_marginals_[y]; }
    const std::vector<std::uint64_t>& row_marginals() const { return row_marginals_; }

    std::span<const WordId> row_cols(WordId x) const;
    std::span<const std::uint64_t> row_values(WordId x) const;

private:
    friend CoocGraph build_cooc_graph(const TokenizedCorpus&, std::uint32_t, bool);
    friend CoocGraph prune_rare_pairs(const CoocGraph&, std::uint64_t);

    std::shared_ptr<const WordIndex> index_;
    std::vector<std::size_t> row_ptr_;   // size + 1 offsets into cols_/values_
    std::vector<WordId> cols_;
    std::vector<std::uint64_t> values_;
    std::vector<std::uint64_t> row_marginals_;
    std::uint64_t total_ = 0;
    std::uint32_t window_ = 0;
};

// Counts in-window co-occurrences over the corpus. For every sentence and
// every position pair i != j with |i - j| <= window, the ordered token pair
// (w_i, w_j) adds 1 to entry (w_i, w_j). Windows never cross sentence
// boundaries. Words occurring exactly once in the corpus are excluded
// before counting: they get no id and none of their pairs are counted.
// With include_diagonal false, pairs of the same word type are skipped.
CoocGraph build_cooc_graph(const TokenizedCorpus& corpus, std::uint32_t window,
                           bool include_diagonal = true);

// Drops every entry with count < min_count. The index, marginals, and
// total are carried over unchanged from the input graph.
CoocGraph prune_rare_pairs(const CoocGraph& graph, std::uint64_t min_count);

// TSV dump: header "#M=<total>", then "word_x<TAB>word_y<TAB>count" for
// each nonzero unordered pair (word_x <= word_y), sorted lexicographically.
void write_graph_tsv(const CoocGraph& graph, std::ostream& out);

}  // namespace hitsvocab
