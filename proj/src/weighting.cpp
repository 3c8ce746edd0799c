#include "hitsvocab/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hitsvocab {

std::string to_string(WeightScheme scheme) {
    return scheme == WeightScheme::Freq ? "freq" : "ppmi";
}

double WeightedAdjacency::weight(WordId x, WordId y) const {
    auto cols = row_cols(x);
    auto it = std::lower_bound(cols.begin(), cols.end(), y);
    if (it == cols.end() || *it != y) return 0.0;
    return values_[row_ptr_[x] + static_cast<std::size_t>(it - cols.begin())];
}

std::span<const WordId> WeightedAdjacency::row_cols(WordId x) const {
    return {cols_.data() + row_ptr_[x], row_ptr_[x + 1] - row_ptr_[x]};
}

std::span<const double> WeightedAdjacency::row_values(WordId x) const {
    return {values_.data() + row_ptr_[x], row_ptr_[x + 1] - row_ptr_[x]};
}

WeightedAdjacency WeightedAdjacency::scaled(double factor) const {
    if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
    WeightedAdjacency out(*this);
    for (double& v : out.values_) v *= factor;
    return out;
}

double pmi(const CoocGraph& graph, WordId x, WordId y) {
    const std::uint64_t joint = graph.count(x, y);
    const std::uint64_t row = graph.row_marginal(x);
    const std::uint64_t col = graph.col_marginal(y);
    const std::uint64_t total = graph.total();
    if (joint == 0 || row == 0 || col == 0 || total == 0) {
        throw UndefinedPmiError("pmi undefined for (" + graph.index().word_of(x) +
                                ", " + graph.index().word_of(y) +
                                "): zero count or marginal");
    }
    return std::log2(static_cast<double>(total) * static_cast<double>(joint) /
                     (static_cast<double>(row) * static_cast<double>(col)));
}

namespace {

struct CsrParts {
    std::vector<std::size_t> row_ptr;
    std::vector<WordId> cols;
    std::vector<double> values;
};

template <typename CellWeight>
CsrParts map_counts(const CoocGraph& graph, CellWeight cell_weight) {
    CsrParts parts;
    parts.row_ptr.assign(graph.size() + 1, 0);
    for (WordId x = 0; x < graph.size(); ++x) {
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const double w = cell_weight(x, cols[k], values[k]);
            if (w <= 0.0) continue;
            parts.cols.push_back(cols[k]);
            parts.values.push_back(w);
        }
        parts.row_ptr[x + 1] = parts.cols.size();
    }
    return parts;
}

}  // namespace

WeightedAdjacency weight_freq(const CoocGraph& graph) {
    auto parts = map_counts(graph, [](WordId, WordId, std::uint64_t count) {
        return static_cast<double>(count);
    });
    WeightedAdjacency adjacency;
    adjacency.index_ = graph.shared_index();
    adjacency.scheme_ = WeightScheme::Freq;
    adjacency.row_ptr_ = std::move(parts.row_ptr);
    adjacency.cols_ = std::move(parts.cols);
    adjacency.values_ = std::move(parts.values);
    return adjacency;
}

WeightedAdjacency weight_ppmi(const CoocGraph& graph) {
    const double log2_total = std::log2(static_cast<double>(graph.total()));
    auto parts = map_counts(graph, [&](WordId x, WordId y, std::uint64_t count) {
        // pmi + log2|x,y|, clamped at zero. Marginals are nonzero whenever a
        // count cell exists.
        const double c = static_cast<double>(count);
        const double p =
            log2_total +
            std::log2(c / (static_cast<double>(graph.row_marginal(x)) *
                           static_cast<double>(graph.col_marginal(y))));
        return std::max(0.0, p + std::log2(c));
    });
    WeightedAdjacency adjacency;
    adjacency.index_ = graph.shared_index();
    adjacency.scheme_ = WeightScheme::Ppmi;
    adjacency.row_ptr_ = std::move(parts.row_ptr);
    adjacency.cols_ = std::move(parts.cols);
    adjacency.values_ = std::move(parts.values);
    return adjacency;
}

WeightedAdjacency WeightedAdjacency::from_weights(
    std::vector<std::string> words,
    const std::vector<std::tuple<WordId, WordId, double>>& triplets,
    WeightScheme scheme) {
    auto index = std::make_shared<const WordIndex>(std::move(words));
    const std::size_t n = index->size();

    std::vector<std::pair<std::uint64_t, double>> cells;
    cells.reserve(triplets.size());
    for (const auto& [x, y, w] : triplets) {
        if (x >= n || y >= n) throw ShapeError("triplet id out of range");
        if (!(w >= 0.0)) throw DomainError("adjacency weights must be nonnegative");
        if (w == 0.0) continue;
        cells.emplace_back((static_cast<std::uint64_t>(x) << 32) | y, w);
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].first == cells[i - 1].first)
            throw DomainError("duplicate cell in weight triplets");
    }

    WeightedAdjacency adjacency;
    adjacency.index_ = index;
    adjacency.scheme_ = scheme;
    adjacency.row_ptr_.assign(n + 1, 0);
    for (const auto& [key, w] : cells) {
        adjacency.cols_.push_back(static_cast<WordId>(key & 0xFFFFFFFFu));
        adjacency.values_.push_back(w);
        adjacency.row_ptr_[(key >> 32) + 1] = adjacency.cols_.size();
    }
    for (std::size_t r = 1; r <= n; ++r) {
        if (adjacency.row_ptr_[r] < adjacency.row_ptr_[r - 1])
            adjacency.row_ptr_[r] = adjacency.row_ptr_[r - 1];
    }

    for (WordId x = 0; x < n; ++x) {
        auto cols = adjacency.row_cols(x);
        auto values = adjacency.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (adjacency.weight(cols[k], x) != values[k])
                throw DomainError("weight triplets are not symmetric");
        }
    }
    return adjacency;
}

void write_adjacency_tsv(const WeightedAdjacency& adjacency, std::ostream& out) {
    std::vector<std::tuple<const std::string*, const std::string*, double>> rows;
    for (WordId x = 0; x < adjacency.size(); ++x) {
        const std::string& wx = adjacency.index().word_of(x);
        auto cols = adjacency.row_cols(x);
        auto values = adjacency.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const std::string& wy = adjacency.index().word_of(cols[k]);
            if (wx <= wy) rows.emplace_back(&wx, &wy, values[k]);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (*std::get<0>(a) != *std::get<0>(b)) return *std::get<0>(a) < *std::get<0>(b);
        return *std::get<1>(a) < *std::get<1>(b);
    });
    char buffer[64];
    for (const auto& [wx, wy, w] : rows) {
        std::snprintf(buffer, sizeof(buffer), "%.6f", w);
        out << *wx << '\t' << *wy << '\t' << buffer << '\n';
    }
}

}  // namespace hitsvocab
