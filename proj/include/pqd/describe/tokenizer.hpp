#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pqd::describe {

// Byte-pair-merge tokenizer over whitespace-separated words. The last symbol
// of every word carries the "</w>" end-of-word marker, so decoding is exact
// up to whitespace normalization. Immutable after construction.
class Tokenizer {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kEot = 2;
  static constexpr const char* kEndOfWord = "</w>";

  Tokenizer() = default;
  Tokenizer(std::vector<std::string> vocab, std::vector<std::pair<std::string, std::string>> merges);

  int size() const { return static_cast<int>(vocab_.size()); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const { return merges_; }
  // -1 when absent.
  int id(const std::string& token) const;
  const std::string& token(int id) const;

  // Ids of the words of `text`, without end-of-text or padding.
  std::vector<int> tokenize(const std::string& text) const;
  // tokenize + end-of-text, then truncated (head kept) or right-padded to
  // exactly `budget` ids. The empty string encodes to all padding.
  std::vector<int> encode(const std::string& text, int budget) const;
  // Stops at the first end-of-text; padding is skipped.
  std::string decode(const std::vector<int>& ids) const;

  nlohmann::json to_json() const;
  static Tokenizer from_json(const nlohmann::json& j);

  friend bool operator==(const Tokenizer& a, const Tokenizer& b) {
    return a.vocab_ == b.vocab_ && a.merges_ == b.merges_;
  }

 private:
  std::vector<std::string> word_symbols(const std::string& word) const;

  std::vector<std::string> vocab_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::string, int> merge_rank_;  // key: a + '\0' + b
};

// Learns merges until the vocabulary holds target_vocab entries or no pair
// remains. Ties in pair frequency go to the lexicographically smallest pair.
// Throws DomainError on an empty corpus and ConfigError when target_vocab is
// smaller than the specials plus the corpus's base symbols.
Tokenizer train_tokenizer(const std::vector<std::string>& corpus, int target_vocab);

// Whitespace-split words.
std::vector<std::string> split_words(const std::string& text);

}  // namespace pqd::describe
