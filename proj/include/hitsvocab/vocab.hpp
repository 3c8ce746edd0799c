#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hitsvocab/corpus.hpp"
#include "hitsvocab/hits.hpp"

namespace hitsvocab {

inline constexpr std::string_view kUnknownToken = "<unk>";

enum class RankMethod { FrequencyBaseline, HitsFreq, HitsPpmi };

std::string to_string(RankMethod method);

struct RankedWord {
    std::string word;
    double score = 0.0;
    std::uint64_t frequency = 0;

    bool operator==(const RankedWord&) const = default;
};

// Total order over word types: score descending, ties by corpus frequency
// descending, then by word.
struct VocabularyRanking {
    std::vector<RankedWord> entries;
    RankMethod method = RankMethod::FrequencyBaseline;
};

// The comparator behind every ranking in the toolkit.
bool ranked_before(const RankedWord& a, const RankedWord& b);

// Ranking by corpus frequency alone.
VocabularyRanking rank_by_frequency(const CorpusStats& stats);

// Ranking by hubness. Every scored word must appear in stats (else
// ConsistencyError). Corpus words absent from the HITS index — singletons
// excluded from the graph — are appended after all scored words, ordered by
// the frequency baseline among themselves, with score 0.
VocabularyRanking rank_by_hits(const HitsScores& scores, const CorpusStats& stats,
                               WeightScheme scheme);

// Shared core for rankings whose scores come from a file rather than a
// HitsScores object.
VocabularyRanking rank_from_scored_words(
    const std::vector<std::pair<std::string, double>>& scored_words,
    const CorpusStats& stats, RankMethod method);

// A selected vocabulary: reserved tokens first, then ranked words. The
// first reserved token is the unknown-word token used for replacement;
// reserved tokens never count against ranking order.
class Vocabulary {
public:
    Vocabulary(std::vector<std::string> ranked_words, std::size_t size_limit,
               std::vector<std::string> specials);

    bool contains_word(std::string_view token) const;     // ranked words only
    bool is_special(std::string_view token) const;
    bool contains(std::string_view token) const {
        return is_special(token) || contains_word(token);
    }

    const std::vector<std::string>& ranked_words() const { return ranked_words_; }
    const std::vector<std::string>& specials() const { return specials_; }
    const std::string& unknown_token() const { return specials_.front(); }
    std::size_t size() const { return specials_.size() + ranked_words_.size(); }
    std::size_t size_limit() const { return size_limit_; }

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

    std::vector<std::string> ranked_words_;
    StringSet word_set_;
    std::vector<std::string> specials_;
    StringSet special_set_;
    std::size_t size_limit_;
};

std::vector<std::string> default_specials();

// The reserved tokens plus the first (k - |specials|) ranked words.
// Throws CapacityError when k leaves no room for regular words.
Vocabulary select_vocabulary(const VocabularyRanking& ranking, std::size_t k,
                             std::vector<std::string> specials = default_specials());

// Replaces every token outside the vocabulary with the unknown token.
TokenizedCorpus apply_vocabulary(const TokenizedCorpus& corpus, const Vocabulary& vocab);

// Exclusive/common word sets of two vocabularies, with token totals and
// tokens-per-type averages for the exclusive sets.
struct VocabDiff {
    std::set<std::string> only_in_a;
    std::set<std::string> only_in_b;
    std::set<std::string> common;
    std::uint64_t tokens_only_a = 0;
    std::uint64_t tokens_only_b = 0;
    double avg_tokens_a = 0.0;
    double avg_tokens_b = 0.0;
};

// Set differences over non-special words; token totals sum the corpus
// frequencies of the exclusive words (absent words count 0).
VocabDiff diff_vocabularies(const Vocabulary& a, const Vocabulary& b,
                            const CorpusStats& stats);

// Partitions a test corpus: sentences whose every token lies in both
// vocabularies' word sets (COMMON) versus all others (DIFF), order
// preserved.
std::pair<TokenizedCorpus, TokenizedCorpus> split_common_diff(
    const TokenizedCorpus& test_corpus, const Vocabulary& a, const Vocabulary& b);

// Tallies, per POS tag, how many tokens of a tagged corpus belong to the
// given word set. Input format: "word<TAB>tag" per token, blank lines
// between sentences. Throws ParseError (with line number) on bad lines.
std::map<std::string, std::uint64_t> pos_tally(std::istream& in, const std::string& name,
                                               const std::set<std::string>& words);
std::map<std::string, std::uint64_t> pos_tally(const std::filesystem::path& path,
                                               const std::set<std::string>& words);

// Vocabulary file: one token per line in rank order, specials first. With
// a ranking, ranked words get a TAB-separated score (8 significant digits).
void write_vocabulary(const Vocabulary& vocab, std::ostream& out);
void write_vocabulary(const Vocabulary& vocab, const VocabularyRanking& ranking,
                      std::ostream& out);

// Reads a vocabulary file back: first column per line; lines equal to the
// unknown token are treated as reserved. A vocabulary read this way always
// carries the unknown token even if the file lacks one.
Vocabulary read_vocabulary(const std::filesystem::path& path);
Vocabulary read_vocabulary(std::istream& in, const std::string& name);

// Diff report: "set<TAB>types<TAB>tokens<TAB>avg_tokens" header, one row
// per exclusive set, averages to 2 decimal places.
void write_diff_report(const VocabDiff& diff, std::ostream& out);

// POS report: "tag<TAB>count" by descending count (ties by tag), then a
// Total row.
void write_pos_report(const std::map<std::string, std::uint64_t>& tally,
                      std::ostream& out);

}  // namespace hitsvocab
