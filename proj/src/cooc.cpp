#include "hitsvocab/cooc.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace hitsvocab {

WordIndex::WordIndex(std::vector<std::string> words) : word_of_(std::move(words)) {
    id_of_.reserve(word_of_.size());
    for (WordId id = 0; id < word_of_.size(); ++id) id_of_.emplace(word_of_[id], id);
}

std::optional<WordId> WordIndex::id_of(std::string_view word) const {
    auto it = id_of_.find(word);
    if (it == id_of_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t CoocGraph::count(WordId x, WordId y) const {
    auto cols = row_cols(x);
    auto it = std::lower_bound(cols.begin(), cols.end(), y);
    if (it == cols.end() || *it != y) return 0;
    return values_[row_ptr_[x] + static_cast<std::size_t>(it - cols.begin())];
}

std::span<const WordId> CoocGraph::row_cols(WordId x) const {
    return {cols_.data() + row_ptr_[x], row_ptr_[x + 1] - row_ptr_[x]};
}

std::span<const std::uint64_t> CoocGraph::row_values(WordId x) const {
    return {values_.data() + row_ptr_[x], row_ptr_[x + 1] - row_ptr_[x]};
}

namespace {

// Packs an (x, y) cell into one sortable key; row-major order.
inline std::uint64_t pack(WordId x, WordId y) {
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

// Turns a sorted list of cell keys (duplicates = repeated co-occurrences,
// or pre-aggregated counts when `counts` is given) into CSR storage.
void assemble_csr(std::vector<std::uint64_t>& keys,
                  const std::vector<std::uint64_t>* counts, std::size_t num_words,
                  std::vector<std::size_t>* row_ptr, std::vector<WordId>* cols,
                  std::vector<std::uint64_t>* values) {
    row_ptr->assign(num_words + 1, 0);
    cols->clear();
    values->clear();
    std::size_t i = 0;
    while (i < keys.size()) {
        std::uint64_t key = keys[i];
        std::uint64_t total = 0;
        if (counts) {
            total = (*counts)[i++];
        } else {
            while (i < keys.size() && keys[i] == key) {
                ++total;
                ++i;
            }
        }
        cols->push_back(static_cast<WordId>(key & 0xFFFFFFFFu));
        values->push_back(total);
        (*row_ptr)[(key >> 32) + 1] = cols->size();
    }
    // Fill gaps for empty rows.
    for (std::size_t r = 1; r <= num_words; ++r) {
        if ((*row_ptr)[r] < (*row_ptr)[r - 1]) (*row_ptr)[r] = (*row_ptr)[r - 1];
    }
}

}  // namespace

CoocGraph build_cooc_graph(const TokenizedCorpus& corpus, std::uint32_t window,
                           bool include_diagonal) {
    if (window < 1) throw DomainError("window width must be at least 1");

    // Corpus frequencies decide which words enter the index: words seen
    // exactly once are excluded along with all their pairs.
    std::unordered_map<std::string, std::uint64_t> frequency;
    for (const auto& sentence : corpus.sentences) {
        for (const auto& token : sentence) ++frequency[token];
    }

    std::vector<std::string> words;  // first-appearance order
    {
        std::unordered_map<std::string, bool> added;
        for (const auto& sentence : corpus.sentences) {
            for (const auto& token : sentence) {
                if (frequency[token] < 2) continue;
                if (!added.emplace(token, true).second) continue;
                words.push_back(token);
            }
        }
    }
    auto index = std::make_shared<const WordIndex>(std::move(words));

    // Collect one packed key per ordered in-window pair, then sort and
    // run-length encode. Sorting makes the result independent of
    // accumulation order.
    std::vector<std::uint64_t> keys;
    std::vector<WordId> ids;
    for (const auto& sentence : corpus.sentences) {
        ids.clear();
        ids.reserve(sentence.size());
        constexpr WordId kSkip = static_cast<WordId>(-1);
        for (const auto& token : sentence) {
            auto id = index->id_of(token);
            ids.push_back(id ? *id : kSkip);
        }
        const std::size_t n = ids.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (ids[i] == kSkip) continue;
            const std::size_t hi = std::min(n, i + 1 + window);
            for (std::size_t j = i + 1; j < hi; ++j) {
                if (ids[j] == kSkip) continue;
                if (!include_diagonal && ids[i] == ids[j]) continue;
                keys.push_back(pack(ids[i], ids[j]));
                keys.push_back(pack(ids[j], ids[i]));
            }
        }
    }
    std::sort(keys.begin(), keys.end());

    CoocGraph graph;
    graph.index_ = index;
    graph.window_ = window;
    assemble_csr(keys, nullptr, index->size(), &graph.row_ptr_, &graph.cols_,
                 &graph.values_);
    graph.row_marginals_.assign(index->size(), 0);
    for (WordId x = 0; x < index->size(); ++x) {
        std::uint64_t sum = 0;
        for (std::uint64_t v : graph.row_values(x)) sum += v;
        graph.row_marginals_[x] = sum;
        graph.total_ += sum;
    }
    return graph;
}

CoocGraph prune_rare_pairs(const CoocGraph& graph, std::uint64_t min_count) {
    if (min_count < 1) throw DomainError("min_count must be at least 1");
    CoocGraph pruned;
    pruned.index_ = graph.index_;
    pruned.window_ = graph.window_;
    pruned.row_marginals_ = graph.row_marginals_;
    pruned.total_ = graph.total_;
    pruned.row_ptr_.assign(graph.size() + 1, 0);
    for (WordId x = 0; x < graph.size(); ++x) {
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (values[k] < min_count) continue;
            pruned.cols_.push_back(cols[k]);
            pruned.values_.push_back(values[k]);
        }
        pruned.row_ptr_[x + 1] = pruned.cols_.size();
    }
    return pruned;
}

CoocGraph CoocGraph::from_counts(
    std::vector<std::string> words,
    const std::vector<std::tuple<WordId, WordId, std::uint64_t>>& triplets,
    std::uint32_t window, std::optional<std::vector<std::uint64_t>> row_marginals,
    std::optional<std::uint64_t> total) {
    auto index = std::make_shared<const WordIndex>(std::move(words));
    const std::size_t n = index->size();

    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;  // key, count
    cells.reserve(triplets.size());
    for (const auto& [x, y, c] : triplets) {
        if (x >= n || y >= n) throw ShapeError("triplet id out of range");
        if (c == 0) continue;
        cells.emplace_back(pack(x, y), c);
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].first == cells[i - 1].first)
            throw DomainError("duplicate cell in count triplets");
    }

    CoocGraph graph;
    graph.index_ = index;
    graph.window_ = window;
    std::vector<std::uint64_t> keys(cells.size());
    std::vector<std::uint64_t> counts(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        keys[i] = cells[i].first;
        counts[i] = cells[i].second;
    }
    assemble_csr(keys, &counts, n, &graph.row_ptr_, &graph.cols_, &graph.values_);

    for (WordId x = 0; x < n; ++x) {
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (graph.count(cols[k], x) != values[k])
                throw DomainError("count triplets are not symmetric");
        }
    }

    if (row_marginals) {
        if (row_marginals->size() != n) throw ShapeError("marginal vector length mismatch");
        graph.row_marginals_ = std::move(*row_marginals);
    } else {
        graph.row_marginals_.assign(n, 0);
        for (WordId x = 0; x < n; ++x) {
            std::uint64_t sum = 0;
            for (std::uint64_t v : graph.row_values(x)) sum += v;
            graph.row_marginals_[x] = sum;
        }
    }
    if (total) {
        graph.total_ = *total;
    } else {
        graph.total_ = 0;
        for (std::uint64_t v : graph.values_) graph.total_ += v;
    }
    return graph;
}

void write_graph_tsv(const CoocGraph& graph, std::ostream& out) {
    out << "#M=" << graph.total() << '\n';
    std::vector<std::tuple<const std::string*, const std::string*, std::uint64_t>> rows;
    for (WordId x = 0; x < graph.size(); ++x) {
        const std::string& wx = graph.index().word_of(x);
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const std::string& wy = graph.index().word_of(cols[k]);
            if (wx <= wy) rows.emplace_back(&wx, &wy, values[k]);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (*std::get<0>(a) != *std::get<0>(b)) return *std::get<0>(a) < *std::get<0>(b);
        return *std::get<1>(a) < *std::get<1>(b);
    });
    for (const auto& [wx, wy, c] : rows) out << *wx << '\t' << *wy << '\t' << c << '\n';
}

}  // namespace hitsvocab
