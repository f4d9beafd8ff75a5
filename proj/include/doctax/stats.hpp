#ifndef DOCTAX_STATS_HPP
#define DOCTAX_STATS_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "doctax/types.hpp"

namespace doctax {

// Windowed co-occurrence statistics over a corpus of content-lemma streams.
//
// Counting scheme (documented in the file header as well): term_count counts
// every content-lemma token; a lemma pair is counted once per unit, at the
// first window position where both lemmas appear together. This keeps
// pair_count[(a,b)] <= min(term_count[a], term_count[b]). total_positions is
// the number of window positions (a stream shorter than the window
// contributes one window).
class CorpusStats {
 public:
  CorpusStats() = default;
  explicit CorpusStats(int window_k) : window_k_(window_k) {}

  int window_k() const { return window_k_; }
  std::uint64_t total_positions() const { return total_positions_; }
  std::uint64_t total_terms() const { return total_terms_; }
  std::size_t vocab_size() const { return term_count_.size(); }

  bool has_term(const std::string& t) const { return term_count_.contains(t); }
  std::uint64_t term_count(const std::string& t) const;
  std::uint64_t pair_count(const std::string& a, const std::string& b) const;

  const std::unordered_map<std::string, std::uint64_t>& terms() const {
    return term_count_;
  }
  // Keys are "a\tb" with a < b.
  const std::unordered_map<std::string, std::uint64_t>& pairs() const {
    return pair_count_;
  }

  void add_stream(std::span<const std::string> lemmas);
  void merge(const CorpusStats& other);  // window sizes must match

  // Deserialization entry point; counts are taken as-is.
  static CorpusStats from_raw(int window_k, std::uint64_t total_positions,
                              std::uint64_t total_terms,
                              std::unordered_map<std::string, std::uint64_t> terms,
                              std::unordered_map<std::string, std::uint64_t> pairs);

 private:
  int window_k_ = 5;
  std::uint64_t total_positions_ = 0;
  std::uint64_t total_terms_ = 0;
  std::unordered_map<std::string, std::uint64_t> term_count_;
  std::unordered_map<std::string, std::uint64_t> pair_count_;
};

inline constexpr int kDefaultWindow = 5;

// Builds stats over analyzed units (tokens, tags and lemmas present).
// Throws WindowTooSmall when window_k <= 2.
CorpusStats build_stats(std::span<const DocumentUnit> units, int window_k = kDefaultWindow);
CorpusStats build_stats_from_streams(std::span<const std::vector<std::string>> streams,
                                     int window_k = kDefaultWindow);

// Eq.-style normalized pointwise mutual information in [-1,1]. Throws
// UnknownTerm for vocabulary misses; extraction call sites use the _or_neg1
// variant, which maps unknown terms to -1.
double npmi(const CorpusStats& stats, const std::string& t1, const std::string& t2);
double npmi_or_neg1(const CorpusStats& stats, const std::string& t1,
                    const std::string& t2) noexcept;

// Symmetric per-unit relatedness matrix over the unit's unique content
// lemmas (first-occurrence order); diagonal fixed at 1, unknown terms -1.
struct NpmiMatrix {
  std::vector<std::string> words;
  std::vector<std::vector<double>> values;

  std::size_t size() const { return words.size(); }
};

NpmiMatrix unit_matrix(const CorpusStats& stats, const DocumentUnit& unit);

// Versioned text container, magic "DTXSTATS"; round-trips bit-exactly.
std::string stats_to_string(const CorpusStats& stats);
CorpusStats stats_from_string(std::string_view text, const std::string& origin);
void save_stats(const CorpusStats& stats, const std::filesystem::path& path);
CorpusStats load_stats(const std::filesystem::path& path);

}  // namespace doctax

#endif
