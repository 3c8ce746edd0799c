#pragma once

// Shared test fixtures: deterministic random generators (corpora, symmetric
// matrices), dense/sparse conversion helpers, and temp-file plumbing. All
// randomness flows through caller-provided engines with fixed seeds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "hitsvocab/cooc.hpp"
#include "hitsvocab/corpus.hpp"
#include "hitsvocab/errors.hpp"
#include "hitsvocab/weighting.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<std::string> type_pool(std::size_t count) {
    std::vector<std::string> pool;
    pool.reserve(count);
    for (std::size_t k = 0; k < count; ++k) pool.push_back("w" + std::to_string(k));
    return pool;
}

// Random corpus over a small closed type pool; skewed lengths and type
// choices so singletons, repeats, and empty-ish sentences all occur.
inline hitsvocab::TokenizedCorpus random_corpus(std::mt19937& rng,
                                                std::size_t max_sentences = 50,
                                                std::size_t max_types = 20,
                                                std::size_t max_length = 12) {
    const auto pool = type_pool(
        std::uniform_int_distribution<std::size_t>(2, max_types)(rng));
    const std::size_t sentences =
        std::uniform_int_distribution<std::size_t>(1, max_sentences)(rng);
    std::uniform_int_distribution<std::size_t> length_dist(1, max_length);
    std::uniform_int_distribution<std::size_t> type_dist(0, pool.size() - 1);

    hitsvocab::TokenizedCorpus corpus;
    corpus.sentences.reserve(sentences);
    for (std::size_t s = 0; s < sentences; ++s) {
        std::vector<std::string> sentence(length_dist(rng));
        for (auto& token : sentence) token = pool[type_dist(rng)];
        corpus.sentences.push_back(std::move(sentence));
    }
    return corpus;
}

inline oracle::Corpus to_oracle(const hitsvocab::TokenizedCorpus& corpus) {
    return corpus.sentences;
}

// Random dense symmetric nonnegative matrix with roughly the given
// fraction of nonzero cells; at least one nonzero entry.
inline oracle::Dense random_symmetric(std::mt19937& rng, std::size_t n,
                                      double density = 0.5) {
    oracle::Dense m(n, std::vector<double>(n, 0.0));
    std::uniform_real_distribution<double> value_dist(0.1, 10.0);
    std::bernoulli_distribution keep(density);
    bool any = false;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            if (!keep(rng)) continue;
            const double v = value_dist(rng);
            m[x][y] = v;
            m[y][x] = v;
            any = true;
        }
    }
    if (!any) {
        m[0][n - 1] = 1.0;
        m[n - 1][0] = 1.0;
    }
    return m;
}

// |second-largest eigenvalue| / |largest eigenvalue| of a symmetric
// matrix; 0 for n == 1. Small ratios mean fast power-iteration
// convergence.
inline double spectral_ratio(const oracle::Dense& m) {
    const std::size_t n = m.size();
    if (n < 2) return 0.0;
    Eigen::MatrixXd a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) a(x, y) = m[x][y];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> magnitudes(n);
    for (std::size_t k = 0; k < n; ++k) magnitudes[k] = std::abs(solver.eigenvalues()(k));
    std::sort(magnitudes.begin(), magnitudes.end());
    if (magnitudes[n - 1] == 0.0) return 1.0;
    return magnitudes[n - 2] / magnitudes[n - 1];
}

// Keeps drawing until the spectral ratio is at most max_ratio, so 300
// iterations converge far past the comparison tolerances.
inline oracle::Dense random_symmetric_with_gap(std::mt19937& rng, std::size_t max_n,
                                               double max_ratio = 0.9) {
    std::uniform_int_distribution<std::size_t> n_dist(2, max_n);
    std::uniform_real_distribution<double> density_dist(0.2, 0.9);
    for (;;) {
        const auto m = random_symmetric(rng, n_dist(rng), density_dist(rng));
        if (spectral_ratio(m) <= max_ratio) return m;
    }
}

inline hitsvocab::WeightedAdjacency adjacency_from_dense(
    const oracle::Dense& m, hitsvocab::WeightScheme scheme = hitsvocab::WeightScheme::Freq) {
    const std::size_t n = m.size();
    std::vector<std::tuple<hitsvocab::WordId, hitsvocab::WordId, double>> triplets;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (m[x][y] != 0.0)
                triplets.emplace_back(static_cast<hitsvocab::WordId>(x),
                                      static_cast<hitsvocab::WordId>(y), m[x][y]);
        }
    }
    return hitsvocab::WeightedAdjacency::from_weights(type_pool(n), triplets, scheme);
}

inline oracle::Dense dense_counts(const hitsvocab::CoocGraph& graph) {
    const std::size_t n = graph.size();
    oracle::Dense counts(n, std::vector<double>(n, 0.0));
    for (hitsvocab::WordId x = 0; x < n; ++x) {
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k)
            counts[x][cols[k]] = static_cast<double>(values[k]);
    }
    return counts;
}

class TempDir {
public:
    TempDir() {
        std::string pattern = (std::filesystem::temp_directory_path() / "hitsvocab_test_XXXXXX").string();
        if (mkdtemp(pattern.data()) == nullptr)
            throw hitsvocab::IoError("cannot create temp directory");
        path_ = pattern;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write_file(const std::string& name, const std::string& content) const {
        const auto file = path_ / name;
        std::ofstream out(file, std::ios::binary);
        out << content;
        return file;
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hitsvocab::IoError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace support
