#include <doctest.h>

#include <random>
#include <sstream>

#include "hitsvocab/cooc.hpp"
#include "hitsvocab/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hitsvocab;

namespace {

std::uint64_t count_of(const CoocGraph& graph, const std::string& x, const std::string& y) {
    const auto ix = graph.index().id_of(x);
    const auto iy = graph.index().id_of(y);
    REQUIRE(ix.has_value());
    REQUIRE(iy.has_value());
    return graph.count(*ix, *iy);
}

std::string dump(const CoocGraph& graph) {
    std::ostringstream out;
    write_graph_tsv(graph, out);
    return out.str();
}

// Library graph flattened into the oracle's representation.
oracle::CoocTable as_table(const CoocGraph& graph) {
    oracle::CoocTable table;
    for (WordId x = 0; x < graph.size(); ++x) {
        const auto& wx = graph.index().word_of(x);
        auto cols = graph.row_cols(x);
        auto values = graph.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (values[k] == 0) continue;
            table.counts[{wx, graph.index().word_of(cols[k])}] = values[k];
        }
        if (graph.row_marginal(x) > 0) table.row_marginals[wx] = graph.row_marginal(x);
    }
    table.total = graph.total();
    return table;
}

}  // namespace

TEST_CASE("all-singleton corpus builds an empty graph") {
    const auto graph = build_cooc_graph({{{"a", "b", "c"}}}, 2);
    CHECK(graph.size() == 0);
    CHECK(graph.nonzero_count() == 0);
    CHECK(graph.total() == 0);
    CHECK(dump(graph) == "#M=0\n");
}

TEST_CASE("window-2 counts on a repeating two-type sentence") {
    const auto graph = build_cooc_graph({{{"a", "b", "a", "b"}}}, 2);
    REQUIRE(graph.size() == 2);
    CHECK(count_of(graph, "a", "b") == 3);
    CHECK(count_of(graph, "b", "a") == 3);
    CHECK(count_of(graph, "a", "a") == 2);
    CHECK(count_of(graph, "b", "b") == 2);
    CHECK(graph.total() == 10);
    CHECK(graph.row_marginal(*graph.index().id_of("a")) == 5);
    CHECK(graph.col_marginal(*graph.index().id_of("a")) == 5);
    CHECK(graph.row_marginal(*graph.index().id_of("b")) == 5);
    CHECK(graph.window() == 2);
}

TEST_CASE("windows never cross sentence boundaries") {
    const auto graph = build_cooc_graph({{{"a", "b"}, {"a", "b"}}}, 2);
    REQUIRE(graph.size() == 2);
    CHECK(count_of(graph, "a", "b") == 2);
    CHECK(count_of(graph, "b", "a") == 2);
    CHECK(count_of(graph, "a", "a") == 0);
    CHECK(count_of(graph, "b", "b") == 0);
    CHECK(graph.total() == 4);
}

TEST_CASE("diagonal exclusion drops same-word pairs only") {
    const auto graph = build_cooc_graph({{{"a", "b", "a", "b"}}}, 2, false);
    CHECK(count_of(graph, "a", "b") == 3);
    CHECK(count_of(graph, "a", "a") == 0);
    CHECK(count_of(graph, "b", "b") == 0);
    CHECK(graph.total() == 6);
}

TEST_CASE("window must be positive") {
    CHECK_THROWS_AS(build_cooc_graph({{{"a", "a"}}}, 0), DomainError);
}

TEST_CASE("singleton words never enter the index") {
    // "c" occurs once; "a" and "b" keep their original positions, so the
    // a..b distance still exceeds a window of 1.
    const auto graph = build_cooc_graph({{{"a", "c", "b"}, {"a", "b"}}}, 1);
    CHECK_FALSE(graph.index().id_of("c").has_value());
    CHECK(count_of(graph, "a", "b") == 1);
    CHECK(graph.total() == 2);
}

TEST_CASE("prune with min_count 1 is the identity") {
    const auto graph = build_cooc_graph({{{"a", "b", "a", "b"}}}, 2);
    const auto pruned = prune_rare_pairs(graph, 1);
    CHECK(dump(pruned) == dump(graph));
}

TEST_CASE("prune zeroes rare cells but keeps marginals and M") {
    const auto graph = build_cooc_graph({{{"a", "b"}, {"a", "a"}, {"b"}}}, 2);
    REQUIRE(count_of(graph, "a", "b") == 1);
    REQUIRE(count_of(graph, "a", "a") == 2);
    const auto pruned = prune_rare_pairs(graph, 2);
    CHECK(count_of(pruned, "a", "b") == 0);
    CHECK(count_of(pruned, "b", "a") == 0);
    CHECK(count_of(pruned, "a", "a") == 2);
    CHECK(pruned.total() == graph.total());
    CHECK(pruned.row_marginal(*pruned.index().id_of("a")) ==
          graph.row_marginal(*graph.index().id_of("a")));
    CHECK(pruned.nonzero_count() < graph.nonzero_count());
}

TEST_CASE("prune keeps graphs whose cells all meet the threshold") {
    const auto graph = build_cooc_graph({{{"a", "b", "a", "b"}}}, 2);
    CHECK(dump(prune_rare_pairs(graph, 2)) == dump(graph));
}

TEST_CASE("prune rejects a zero threshold") {
    const auto graph = build_cooc_graph({{{"a", "a"}}}, 1);
    CHECK_THROWS_AS(prune_rare_pairs(graph, 0), DomainError);
}

TEST_CASE("graph dump is sorted upper-triangle TSV with an M header") {
    const auto graph = build_cooc_graph({{{"a", "b", "a", "b"}}}, 2);
    CHECK(dump(graph) == "#M=10\na\ta\t2\na\tb\t3\nb\tb\t2\n");
}

TEST_CASE("word index is a bijection with contiguous ids") {
    const auto graph = build_cooc_graph({{{"c", "a", "c", "a"}}}, 1);
    const auto& index = graph.index();
    REQUIRE(index.size() == 2);
    for (WordId id = 0; id < index.size(); ++id)
        CHECK(index.id_of(index.word_of(id)) == id);
    CHECK(index.word_of(0) == "c");  // first-appearance order
    CHECK(index.word_of(1) == "a");
}

TEST_CASE("build matches the brute-force enumerator on random corpora") {
    std::mt19937 rng(411);
    for (int round = 0; round < 60; ++round) {
        const auto corpus = support::random_corpus(rng);
        const auto window =
            std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
        const bool diagonal = round % 3 != 0;
        const auto graph = build_cooc_graph(corpus, window, diagonal);
        const auto expected =
            oracle::brute_force_cooc(support::to_oracle(corpus), window, diagonal);
        const auto actual = as_table(graph);
        CHECK(actual.counts == expected.counts);
        CHECK(actual.row_marginals == expected.row_marginals);
        CHECK(actual.total == expected.total);
    }
}

TEST_CASE("symmetry holds after build and after pruning") {
    std::mt19937 rng(412);
    for (int round = 0; round < 40; ++round) {
        const auto corpus = support::random_corpus(rng);
        const auto graph = build_cooc_graph(corpus, 2);
        const auto pruned = prune_rare_pairs(graph, 2);
        for (const CoocGraph* g : {&graph, &pruned}) {
            for (WordId x = 0; x < g->size(); ++x) {
                auto cols = g->row_cols(x);
                auto values = g->row_values(x);
                for (std::size_t k = 0; k < cols.size(); ++k)
                    CHECK(g->count(cols[k], x) == values[k]);
            }
        }
    }
}

TEST_CASE("no surviving row belongs to a corpus singleton") {
    std::mt19937 rng(413);
    for (int round = 0; round < 40; ++round) {
        const auto corpus = support::random_corpus(rng);
        const auto stats = corpus_stats(corpus);
        const auto graph = build_cooc_graph(corpus, 2);
        for (WordId x = 0; x < graph.size(); ++x)
            CHECK(stats.type_frequencies.at(graph.index().word_of(x)) >= 2);
    }
}

TEST_CASE("building twice yields bit-identical graphs") {
    std::mt19937 rng(414);
    const auto corpus = support::random_corpus(rng);
    CHECK(dump(build_cooc_graph(corpus, 2)) == dump(build_cooc_graph(corpus, 2)));
}

TEST_CASE("from_counts validates symmetry and ranges") {
    using Triplets = std::vector<std::tuple<WordId, WordId, std::uint64_t>>;
    CHECK_THROWS_AS(
        CoocGraph::from_counts({"a", "b"}, Triplets{{0, 1, 3}}, 2, std::nullopt, std::nullopt),
        DomainError);
    CHECK_THROWS_AS(
        CoocGraph::from_counts({"a"}, Triplets{{0, 1, 3}}, 2, std::nullopt, std::nullopt),
        ShapeError);
    const auto graph = CoocGraph::from_counts({"a", "b"}, Triplets{{0, 1, 3}, {1, 0, 3}}, 2,
                                              std::nullopt, std::nullopt);
    CHECK(graph.count(0, 1) == 3);
    CHECK(graph.total() == 6);
    CHECK(graph.row_marginal(0) == 3);
}
