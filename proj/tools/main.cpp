// hitsvocab: corpus preprocessing around a co-occurrence word graph.
//
// Subcommands compose into the pipeline
//   count -> score -> select -> apply
// plus the analysis commands diff, split, pos, and stats. Data goes to
// files (or standard output); progress and summaries go to standard error
// unless they are the command's actual output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hitsvocab/config.hpp"
#include "hitsvocab/cooc.hpp"
#include "hitsvocab/corpus.hpp"
#include "hitsvocab/errors.hpp"
#include "hitsvocab/hits.hpp"
#include "hitsvocab/vocab.hpp"
#include "hitsvocab/weighting.hpp"

namespace hv = hitsvocab;

namespace {

// Pipeline flags shared by several subcommands. A config file provides the
// base settings; any flag given explicitly on the command line wins.
struct ConfigFlags {
    std::string config_path;
    std::uint32_t window = 2;
    std::uint64_t min_pair_count = 2;
    std::string scheme = "ppmi";
    std::uint32_t iterations = 300;
    std::string norm = "l2";
    bool no_diagonal = false;

    CLI::Option* config_opt = nullptr;
    CLI::Option* window_opt = nullptr;
    CLI::Option* min_pair_opt = nullptr;
    CLI::Option* scheme_opt = nullptr;
    CLI::Option* iterations_opt = nullptr;
    CLI::Option* norm_opt = nullptr;
    CLI::Option* no_diagonal_opt = nullptr;

    void add_counting(CLI::App* cmd) {
        config_opt = cmd->add_option("--config", config_path,
                                     "Config file (flat key=value); flags override");
        window_opt = cmd->add_option("-w,--window", window, "Co-occurrence window width")
                         ->check(CLI::PositiveNumber);
        min_pair_opt = cmd->add_option("--min-pair-count", min_pair_count,
                                       "Drop pairs seen fewer times than this")
                           ->check(CLI::PositiveNumber);
        no_diagonal_opt = cmd->add_flag("--no-diagonal", no_diagonal,
                                        "Exclude same-word pairs from the graph");
    }

    void add_scoring(CLI::App* cmd) {
        scheme_opt = cmd->add_option("--scheme", scheme, "Edge weighting: freq or ppmi");
        iterations_opt = cmd->add_option("--iterations", iterations,
                                         "Power-iteration count")
                             ->check(CLI::PositiveNumber);
        norm_opt = cmd->add_option("--norm", norm, "Score normalization: l2 or l1");
    }

    hv::RunConfig resolve() const {
        hv::RunConfig cfg;
        if (config_opt != nullptr && config_opt->count() > 0)
            cfg = hv::load_run_config(config_path);
        if (window_opt != nullptr && window_opt->count() > 0) cfg.window = window;
        if (min_pair_opt != nullptr && min_pair_opt->count() > 0)
            cfg.min_pair_count = min_pair_count;
        if (scheme_opt != nullptr && scheme_opt->count() > 0)
            cfg.scheme = hv::parse_scheme(scheme);
        if (iterations_opt != nullptr && iterations_opt->count() > 0)
            cfg.iterations = iterations;
        if (norm_opt != nullptr && norm_opt->count() > 0) cfg.norm = hv::parse_norm(norm);
        if (no_diagonal_opt != nullptr && no_diagonal_opt->count() > 0)
            cfg.include_diagonal = !no_diagonal;
        return cfg;
    }
};

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
    if (path.empty()) {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hv::IoError("cannot open output file: " + path);
    fn(out);
    out.flush();
    if (!out) throw hv::IoError("error writing output file: " + path);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hv::IoError("cannot open file: " + path);
    return in;
}

hv::CoocGraph counted_graph(const hv::TokenizedCorpus& corpus, const hv::RunConfig& cfg) {
    auto graph = hv::build_cooc_graph(corpus, cfg.window, cfg.include_diagonal);
    if (cfg.min_pair_count > 1) graph = hv::prune_rare_pairs(graph, cfg.min_pair_count);
    return graph;
}

hv::WeightedAdjacency weighted(const hv::CoocGraph& graph, hv::WeightScheme scheme) {
    return scheme == hv::WeightScheme::Ppmi ? hv::weight_ppmi(graph)
                                            : hv::weight_freq(graph);
}

hv::HitsScores scored(const hv::TokenizedCorpus& corpus, const hv::RunConfig& cfg) {
    auto graph = counted_graph(corpus, cfg);
    hv::HitsConfig hits_cfg;
    hits_cfg.iterations = cfg.iterations;
    hits_cfg.norm = cfg.norm;
    return hv::run_hits(weighted(graph, cfg.scheme), hits_cfg);
}

// Scores TSV reader, the inverse of the score dump: skips '#' comment
// lines, takes "word<TAB>hubness[<TAB>...]" rows.
std::vector<std::pair<std::string, double>> read_scores_tsv(const std::string& path) {
    auto in = open_input(path);
    std::vector<std::pair<std::string, double>> scored_words;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw hv::ParseError(path + ":" + std::to_string(line_number) +
                                 ": expected \"word<TAB>score\"");
        }
        const std::string word = line.substr(0, tab);
        const std::string rest = line.substr(tab + 1);
        std::size_t used = 0;
        double score = 0.0;
        try {
            score = std::stod(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || (used < rest.size() && rest[used] != '\t')) {
            throw hv::ParseError(path + ":" + std::to_string(line_number) +
                                 ": bad score value");
        }
        scored_words.emplace_back(word, score);
    }
    return scored_words;
}

// Plain word list: first tab-separated column per line, blanks skipped.
std::set<std::string> read_word_list(const std::string& path) {
    auto in = open_input(path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tab = line.find('\t');
        std::string word = tab == std::string::npos ? line : line.substr(0, tab);
        if (!word.empty()) words.insert(std::move(word));
    }
    return words;
}

void add_count(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string output_path;
        ConfigFlags flags;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("count", "Build the co-occurrence graph of a corpus");
    cmd->add_option("corpus", opts->corpus_path, "Tokenized corpus, one sentence per line")
        ->required();
    cmd->add_option("-o,--output", opts->output_path, "Graph TSV (default: standard output)");
    opts->flags.add_counting(cmd);
    cmd->callback([opts]() {
        const auto cfg = opts->flags.resolve();
        const auto corpus = hv::read_corpus(opts->corpus_path);
        const auto stats = hv::corpus_stats(corpus);
        const auto graph = counted_graph(corpus, cfg);
        with_output(opts->output_path, [&](std::ostream& out) { hv::write_graph_tsv(graph, out); });
        std::ostream& summary = opts->output_path.empty() ? std::cerr : std::cout;
        summary << "sentences\t" << stats.sentence_count << '\n'
                << "tokens\t" << stats.token_count << '\n'
                << "types\t" << stats.type_count() << '\n'
                << "graph_words\t" << graph.size() << '\n'
                << "pairs\t" << graph.nonzero_count() << '\n'
                << "M\t" << graph.total() << '\n';
    });
}

void add_score(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string output_path;
        ConfigFlags flags;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("score", "Rank word types by hubness over the graph");
    cmd->add_option("corpus", opts->corpus_path, "Tokenized corpus")->required();
    cmd->add_option("-o,--output", opts->output_path, "Score TSV (default: standard output)");
    opts->flags.add_counting(cmd);
    opts->flags.add_scoring(cmd);
    cmd->callback([opts]() {
        const auto cfg = opts->flags.resolve();
        const auto corpus = hv::read_corpus(opts->corpus_path);
        const auto scores = scored(corpus, cfg);
        with_output(opts->output_path, [&](std::ostream& out) { hv::write_scores_tsv(scores, out); });
    });
}

void add_select(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string scores_path;
        std::string output_path;
        std::uint32_t size = 0;
        bool freq_baseline = false;
        bool with_scores = false;
        ConfigFlags flags;
        CLI::Option* size_opt = nullptr;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("select", "Select a vocabulary from score dump or frequency");
    cmd->add_option("corpus", opts->corpus_path, "Corpus the scores came from")->required();
    opts->size_opt = cmd->add_option("-k,--size", opts->size,
                                     "Total vocabulary size, reserved tokens included")
                         ->check(CLI::PositiveNumber);
    auto* scores_opt =
        cmd->add_option("--scores", opts->scores_path, "Score TSV from the score subcommand");
    auto* baseline_opt = cmd->add_flag("--freq-baseline", opts->freq_baseline,
                                       "Rank by corpus frequency instead of scores");
    scores_opt->excludes(baseline_opt);
    cmd->add_option("-o,--output", opts->output_path,
                    "Vocabulary file (default: standard output)");
    cmd->add_flag("--with-scores", opts->with_scores, "Append a score column");
    opts->flags.add_counting(cmd);
    opts->flags.add_scoring(cmd);
    cmd->callback([opts]() {
        const auto cfg = opts->flags.resolve();
        if (!opts->freq_baseline && opts->scores_path.empty())
            throw CLI::RequiredError("select needs --scores FILE or --freq-baseline");
        std::optional<std::uint32_t> k;
        if (opts->size_opt->count() > 0)
            k = opts->size;
        else if (cfg.vocab_size)
            k = cfg.vocab_size;
        if (!k) throw CLI::RequiredError("--size (or vocab_size in the config file)");

        const auto corpus = hv::read_corpus(opts->corpus_path);
        const auto stats = hv::corpus_stats(corpus);
        hv::VocabularyRanking ranking;
        if (opts->freq_baseline) {
            ranking = hv::rank_by_frequency(stats);
        } else {
            const auto method = cfg.scheme == hv::WeightScheme::Ppmi
                                    ? hv::RankMethod::HitsPpmi
                                    : hv::RankMethod::HitsFreq;
            ranking = hv::rank_from_scored_words(read_scores_tsv(opts->scores_path), stats,
                                                 method);
        }
        const auto vocab = hv::select_vocabulary(ranking, *k);
        with_output(opts->output_path, [&](std::ostream& out) {
            if (opts->with_scores)
                hv::write_vocabulary(vocab, ranking, out);
            else
                hv::write_vocabulary(vocab, out);
        });
        std::cerr << "vocabulary\t" << vocab.size() << " tokens ("
                  << vocab.specials().size() << " reserved)\n";
    });
}

void add_apply(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string vocab_path;
        std::string output_path;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("apply", "Rewrite a corpus, mapping out-of-vocabulary "
                                            "tokens to the unknown token");
    cmd->add_option("corpus", opts->corpus_path, "Tokenized corpus")->required();
    cmd->add_option("--vocab", opts->vocab_path, "Vocabulary file")->required();
    cmd->add_option("-o,--output", opts->output_path,
                    "Rewritten corpus (default: standard output)");
    cmd->callback([opts]() {
        const auto corpus = hv::read_corpus(opts->corpus_path);
        const auto vocab = hv::read_vocabulary(opts->vocab_path);
        const auto rewritten = hv::apply_vocabulary(corpus, vocab);
        with_output(opts->output_path, [&](std::ostream& out) { hv::write_corpus(rewritten, out); });

        std::uint64_t total = 0;
        std::uint64_t replaced = 0;
        for (const auto& sentence : corpus.sentences) {
            total += sentence.size();
            for (const auto& token : sentence)
                if (!vocab.contains(token)) ++replaced;
        }
        const double rate = total == 0 ? 0.0 : 100.0 * static_cast<double>(replaced) /
                                                   static_cast<double>(total);
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.2f", rate);
        std::cerr << "replaced " << replaced << " of " << total << " tokens (" << buffer
                  << "%)\n";
    });
}

void add_diff(CLI::App& app) {
    struct Opts {
        std::string vocab_a_path;
        std::string vocab_b_path;
        std::string corpus_path;
        std::string output_path;
        std::string only_a_path;
        std::string only_b_path;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("diff", "Compare two vocabularies over one corpus");
    cmd->add_option("vocab_a", opts->vocab_a_path, "First vocabulary file")->required();
    cmd->add_option("vocab_b", opts->vocab_b_path, "Second vocabulary file")->required();
    cmd->add_option("--corpus", opts->corpus_path,
                    "Corpus supplying token counts for exclusive words")
        ->required();
    cmd->add_option("-o,--output", opts->output_path,
                    "Diff report TSV (default: standard output)");
    cmd->add_option("--only-a", opts->only_a_path, "Write words exclusive to A, one per line");
    cmd->add_option("--only-b", opts->only_b_path, "Write words exclusive to B, one per line");
    cmd->callback([opts]() {
        const auto vocab_a = hv::read_vocabulary(opts->vocab_a_path);
        const auto vocab_b = hv::read_vocabulary(opts->vocab_b_path);
        const auto stats = hv::corpus_stats(hv::read_corpus(opts->corpus_path));
        const auto diff = hv::diff_vocabularies(vocab_a, vocab_b, stats);
        with_output(opts->output_path, [&](std::ostream& out) { hv::write_diff_report(diff, out); });
        const auto write_words = [](const std::string& path, const std::set<std::string>& words) {
            if (path.empty()) return;
            with_output(path, [&](std::ostream& out) {
                for (const auto& word : words) out << word << '\n';
            });
        };
        write_words(opts->only_a_path, diff.only_in_a);
        write_words(opts->only_b_path, diff.only_in_b);
        std::cerr << "common\t" << diff.common.size() << "\nonly_a\t" << diff.only_in_a.size()
                  << "\nonly_b\t" << diff.only_in_b.size() << '\n';
    });
}

void add_split(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string vocab_a_path;
        std::string vocab_b_path;
        std::string common_path;
        std::string diff_path;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("split", "Partition a test corpus into sentences covered "
                                            "by both vocabularies (COMMON) and the rest (DIFF)");
    cmd->add_option("corpus", opts->corpus_path, "Test corpus")->required();
    cmd->add_option("--vocab-a", opts->vocab_a_path, "First vocabulary file")->required();
    cmd->add_option("--vocab-b", opts->vocab_b_path, "Second vocabulary file")->required();
    cmd->add_option("--common", opts->common_path, "Output for fully covered sentences")
        ->required();
    cmd->add_option("--diff", opts->diff_path, "Output for the remaining sentences")->required();
    cmd->callback([opts]() {
        const auto corpus = hv::read_corpus(opts->corpus_path);
        const auto vocab_a = hv::read_vocabulary(opts->vocab_a_path);
        const auto vocab_b = hv::read_vocabulary(opts->vocab_b_path);
        const auto [common, diff] = hv::split_common_diff(corpus, vocab_a, vocab_b);
        hv::write_corpus(common, opts->common_path);
        hv::write_corpus(diff, opts->diff_path);
        std::cerr << "common\t" << common.sentence_count() << "\ndiff\t"
                  << diff.sentence_count() << '\n';
    });
}

void add_pos(CLI::App& app) {
    struct Opts {
        std::string tagged_path;
        std::string words_path;
        std::string output_path;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("pos", "Tally POS tags of the given words in a tagged corpus");
    cmd->add_option("tagged", opts->tagged_path,
                    "Tagged corpus: word<TAB>tag per line, blank line between sentences")
        ->required();
    cmd->add_option("--words", opts->words_path, "Word list, one per line")->required();
    cmd->add_option("-o,--output", opts->output_path,
                    "Tag report TSV (default: standard output)");
    cmd->callback([opts]() {
        const auto words = read_word_list(opts->words_path);
        const auto tally = hv::pos_tally(opts->tagged_path, words);
        with_output(opts->output_path, [&](std::ostream& out) { hv::write_pos_report(tally, out); });
    });
}

void add_stats(CLI::App& app) {
    struct Opts {
        std::string corpus_path;
        std::string output_path;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("stats", "Sentence, token, and type counts of a corpus");
    cmd->add_option("corpus", opts->corpus_path, "Tokenized corpus")->required();
    cmd->add_option("-o,--output", opts->output_path, "Stats TSV (default: standard output)");
    cmd->callback([opts]() {
        const auto stats = hv::corpus_stats(hv::read_corpus(opts->corpus_path));
        std::uint64_t singletons = 0;
        for (const auto& [word, freq] : stats.type_frequencies)
            if (freq == 1) ++singletons;
        with_output(opts->output_path, [&](std::ostream& out) {
            out << "sentences\t" << stats.sentence_count << '\n'
                << "tokens\t" << stats.token_count << '\n'
                << "types\t" << stats.type_count() << '\n'
                << "singletons\t" << singletons << '\n';
        });
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Corpus preprocessing toolkit: co-occurrence graphs, word scores by graph "
                 "centrality, vocabulary selection and analysis"};
    app.require_subcommand(1);
    add_count(app);
    add_score(app);
    add_select(app);
    add_apply(app);
    add_diff(app);
    add_split(app);
    add_pos(app);
    add_stats(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const hv::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
