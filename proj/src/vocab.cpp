#include "hitsvocab/vocab.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace hitsvocab {

std::string to_string(RankMethod method) {
    switch (method) {
        case RankMethod::FrequencyBaseline: return "frequency";
        case RankMethod::HitsFreq: return "hits-freq";
        case RankMethod::HitsPpmi: return "hits-ppmi";
    }
    return "unknown";
}

bool ranked_before(const RankedWord& a, const RankedWord& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
}

VocabularyRanking rank_by_frequency(const CorpusStats& stats) {
    VocabularyRanking ranking;
    ranking.method = RankMethod::FrequencyBaseline;
    ranking.entries.reserve(stats.type_frequencies.size());
    for (const auto& [word, frequency] : stats.type_frequencies) {
        ranking.entries.push_back({word, static_cast<double>(frequency), frequency});
    }
    std::sort(ranking.entries.begin(), ranking.entries.end(), ranked_before);
    return ranking;
}

VocabularyRanking rank_from_scored_words(
    const std::vector<std::pair<std::string, double>>& scored_words,
    const CorpusStats& stats, RankMethod method) {
    VocabularyRanking ranking;
    ranking.method = method;

    std::unordered_set<std::string> scored;
    scored.reserve(scored_words.size());
    for (const auto& [word, score] : scored_words) {
        auto it = stats.type_frequencies.find(word);
        if (it == stats.type_frequencies.end()) {
            throw ConsistencyError("scored word not present in corpus stats: " + word);
        }
        ranking.entries.push_back({word, score, it->second});
        scored.insert(word);
    }
    std::sort(ranking.entries.begin(), ranking.entries.end(), ranked_before);

    // Words the graph excluded (corpus singletons) follow the scored words,
    // in frequency-baseline order among themselves.
    std::vector<RankedWord> unscored;
    for (const auto& [word, frequency] : stats.type_frequencies) {
        if (scored.contains(word)) continue;
        unscored.push_back({word, 0.0, frequency});
    }
    std::sort(unscored.begin(), unscored.end(), ranked_before);
    ranking.entries.insert(ranking.entries.end(),
                           std::make_move_iterator(unscored.begin()),
                           std::make_move_iterator(unscored.end()));
    return ranking;
}

VocabularyRanking rank_by_hits(const HitsScores& scores, const CorpusStats& stats,
                               WeightScheme scheme) {
    std::vector<std::pair<std::string, double>> scored_words;
    scored_words.reserve(scores.hubness.size());
    for (WordId id = 0; id < scores.hubness.size(); ++id) {
        scored_words.emplace_back(scores.index->word_of(id), scores.hubness[id]);
    }
    return rank_from_scored_words(scored_words, stats,
                                  scheme == WeightScheme::Freq ? RankMethod::HitsFreq
                                                               : RankMethod::HitsPpmi);
}

std::vector<std::string> default_specials() {
    return {std::string(kUnknownToken)};
}

Vocabulary::Vocabulary(std::vector<std::string> ranked_words, std::size_t size_limit,
                       std::vector<std::string> specials)
    : ranked_words_(std::move(ranked_words)),
      specials_(std::move(specials)),
      size_limit_(size_limit) {
    if (specials_.empty()) throw DomainError("vocabulary needs at least one reserved token");
    special_set_.insert(specials_.begin(), specials_.end());
    for (const auto& word : ranked_words_) {
        if (special_set_.contains(word))
            throw DomainError("reserved token also listed as a ranked word: " + word);
        word_set_.insert(word);
    }
    if (size() > size_limit_)
        throw CapacityError("vocabulary exceeds its size limit");
}

bool Vocabulary::contains_word(std::string_view token) const {
    return word_set_.find(token) != word_set_.end();
}

bool Vocabulary::is_special(std::string_view token) const {
    return special_set_.find(token) != special_set_.end();
}

Vocabulary select_vocabulary(const VocabularyRanking& ranking, std::size_t k,
                             std::vector<std::string> specials) {
    if (k <= specials.size()) {
        throw CapacityError("vocabulary size " + std::to_string(k) +
                            " leaves no room beyond " + std::to_string(specials.size()) +
                            " reserved token(s)");
    }
    const std::size_t capacity = k - specials.size();
    std::vector<std::string> words;
    words.reserve(std::min(capacity, ranking.entries.size()));
    for (const auto& entry : ranking.entries) {
        if (words.size() == capacity) break;
        words.push_back(entry.word);
    }
    return Vocabulary(std::move(words), k, std::move(specials));
}

TokenizedCorpus apply_vocabulary(const TokenizedCorpus& corpus, const Vocabulary& vocab) {
    TokenizedCorpus out;
    out.sentences.reserve(corpus.sentences.size());
    for (const auto& sentence : corpus.sentences) {
        Sentence rewritten;
        rewritten.reserve(sentence.size());
        for (const auto& token : sentence) {
            rewritten.push_back(vocab.contains(token) ? token : vocab.unknown_token());
        }
        out.sentences.push_back(std::move(rewritten));
    }
    return out;
}

VocabDiff diff_vocabularies(const Vocabulary& a, const Vocabulary& b,
                            const CorpusStats& stats) {
    VocabDiff diff;
    for (const auto& word : a.ranked_words()) {
        if (b.contains_word(word)) {
            diff.common.insert(word);
        } else {
            diff.only_in_a.insert(word);
        }
    }
    for (const auto& word : b.ranked_words()) {
        if (!a.contains_word(word)) diff.only_in_b.insert(word);
    }

    auto frequency_of = [&stats](const std::string& word) -> std::uint64_t {
        auto it = stats.type_frequencies.find(word);
        return it == stats.type_frequencies.end() ? 0 : it->second;
    };
    for (const auto& word : diff.only_in_a) diff.tokens_only_a += frequency_of(word);
    for (const auto& word : diff.only_in_b) diff.tokens_only_b += frequency_of(word);
    if (!diff.only_in_a.empty()) {
        diff.avg_tokens_a = static_cast<double>(diff.tokens_only_a) /
                            static_cast<double>(diff.only_in_a.size());
    }
    if (!diff.only_in_b.empty()) {
        diff.avg_tokens_b = static_cast<double>(diff.tokens_only_b) /
                            static_cast<double>(diff.only_in_b.size());
    }
    return diff;
}

std::pair<TokenizedCorpus, TokenizedCorpus> split_common_diff(
    const TokenizedCorpus& test_corpus, const Vocabulary& a, const Vocabulary& b) {
    TokenizedCorpus common;
    TokenizedCorpus diff;
    for (const auto& sentence : test_corpus.sentences) {
        const bool covered =
            std::all_of(sentence.begin(), sentence.end(), [&](const std::string& token) {
                return a.contains_word(token) && b.contains_word(token);
            });
        (covered ? common : diff).sentences.push_back(sentence);
    }
    return {std::move(common), std::move(diff)};
}

std::map<std::string, std::uint64_t> pos_tally(std::istream& in, const std::string& name,
                                               const std::set<std::string>& words) {
    std::map<std::string, std::uint64_t> tally;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;  // sentence boundary
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
            line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(name + ":" + std::to_string(line_number) +
                             ": expected exactly \"word<TAB>tag\"");
        }
        if (!is_valid_utf8(line)) {
            throw ParseError(name + ":" + std::to_string(line_number) +
                             ": invalid UTF-8 byte sequence");
        }
        const std::string word = line.substr(0, tab);
        if (words.contains(word)) ++tally[line.substr(tab + 1)];
    }
    if (in.bad()) throw IoError("failed while reading " + name);
    return tally;
}

std::map<std::string, std::uint64_t> pos_tally(const std::filesystem::path& path,
                                               const std::set<std::string>& words) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tagged corpus: " + path.string());
    return pos_tally(in, path.string(), words);
}

void write_vocabulary(const Vocabulary& vocab, std::ostream& out) {
    for (const auto& token : vocab.specials()) out << token << '\n';
    for (const auto& word : vocab.ranked_words()) out << word << '\n';
}

void write_vocabulary(const Vocabulary& vocab, const VocabularyRanking& ranking,
                      std::ostream& out) {
    std::unordered_map<std::string, double> score_of;
    score_of.reserve(ranking.entries.size());
    for (const auto& entry : ranking.entries) score_of.emplace(entry.word, entry.score);
    for (const auto& token : vocab.specials()) out << token << '\n';
    for (const auto& word : vocab.ranked_words()) {
        out << word;
        auto it = score_of.find(word);
        if (it != score_of.end()) out << '\t' << format_score(it->second);
        out << '\n';
    }
}

Vocabulary read_vocabulary(std::istream& in, const std::string& name) {
    std::vector<std::string> words;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!is_valid_utf8(line)) {
            throw ParseError(name + ":" + std::to_string(line_number) +
                             ": invalid UTF-8 byte sequence");
        }
        std::string token = line.substr(0, line.find('\t'));
        // The unknown token is reserved whether or not the file lists it.
        if (token == kUnknownToken) continue;
        if (seen.insert(token).second) words.push_back(std::move(token));
    }
    if (in.bad()) throw IoError("failed while reading " + name);
    const std::size_t limit = words.size() + 1;
    return Vocabulary(std::move(words), limit, default_specials());
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vocabulary file: " + path.string());
    return read_vocabulary(in, path.string());
}

void write_diff_report(const VocabDiff& diff, std::ostream& out) {
    char avg[32];
    out << "set\ttypes\ttokens\tavg_tokens\n";
    std::snprintf(avg, sizeof(avg), "%.2f", diff.avg_tokens_a);
    out << "only_a\t" << diff.only_in_a.size() << '\t' << diff.tokens_only_a << '\t'
        << avg << '\n';
    std::snprintf(avg, sizeof(avg), "%.2f", diff.avg_tokens_b);
    out << "only_b\t" << diff.only_in_b.size() << '\t' << diff.tokens_only_b << '\t'
        << avg << '\n';
}

void write_pos_report(const std::map<std::string, std::uint64_t>& tally,
                      std::ostream& out) {
    std::vector<std::pair<std::string, std::uint64_t>> rows(tally.begin(), tally.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::uint64_t total = 0;
    for (const auto& [tag, count] : rows) {
        out << tag << '\t' << count << '\n';
        total += count;
    }
    out << "Total\t" << total << '\n';
}

}  // namespace hitsvocab
