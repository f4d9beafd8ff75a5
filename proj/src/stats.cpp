#include "doctax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "doctax/corpus.hpp"
#include "doctax/errors.hpp"
#include "doctax/io_util.hpp"

namespace doctax {

namespace {

std::string pair_key(const std::string& a, const std::string& b) {
  return a <= b ? a + '\t' + b : b + '\t' + a;
}

}  // namespace

std::uint64_t CorpusStats::term_count(const std::string& t) const {
  auto it = term_count_.find(t);
  return it == term_count_.end() ? 0 : it->second;
}

std::uint64_t CorpusStats::pair_count(const std::string& a, const std::string& b) const {
  auto it = pair_count_.find(pair_key(a, b));
  return it == pair_count_.end() ? 0 : it->second;
}

void CorpusStats::add_stream(std::span<const std::string> lemmas) {
  const std::size_t n = lemmas.size();
  if (n == 0) return;
  for (const auto& l : lemmas) ++term_count_[l];
  total_terms_ += n;
  const std::size_t k = static_cast<std::size_t>(window_k_);
  total_positions_ += n <= k ? 1 : n - k + 1;

  // A pair co-occurs iff two occurrences fall in one window, i.e. their
  // distance is < window_k; counted once per unit (first co-window).
  std::set<std::string> seen;
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t lo = j >= k - 1 ? j - (k - 1) : 0;
    if (n <= k) lo = 0;
    for (std::size_t i = lo; i < j; ++i) {
      if (lemmas[i] == lemmas[j]) continue;
      seen.insert(pair_key(lemmas[i], lemmas[j]));
    }
  }
  for (const auto& key : seen) ++pair_count_[key];
}

void CorpusStats::merge(const CorpusStats& other) {
  total_positions_ += other.total_positions_;
  total_terms_ += other.total_terms_;
  for (const auto& [t, c] : other.term_count_) term_count_[t] += c;
  for (const auto& [p, c] : other.pair_count_) pair_count_[p] += c;
}

CorpusStats build_stats_from_streams(std::span<const std::vector<std::string>> streams,
                                     int window_k) {
  if (window_k <= 2) throw WindowTooSmall();
  CorpusStats stats(window_k);
  for (const auto& s : streams) stats.add_stream(s);
  return stats;
}

CorpusStats build_stats(std::span<const DocumentUnit> units, int window_k) {
  if (window_k <= 2) throw WindowTooSmall();
  std::vector<std::vector<std::string>> streams;
  streams.reserve(units.size());
  for (const auto& u : units) streams.push_back(content_words(u));
  return build_stats_from_streams(streams, window_k);
}

double npmi(const CorpusStats& stats, const std::string& t1, const std::string& t2) {
  if (!stats.has_term(t1)) throw UnknownTerm(t1);
  if (!stats.has_term(t2)) throw UnknownTerm(t2);
  if (t1 == t2) return 1.0;  // p(t,t) = p(t): perfect dependence limit

  std::uint64_t pc = stats.pair_count(t1, t2);
  if (pc == 0) return -1.0;
  double pj = static_cast<double>(pc) / static_cast<double>(stats.total_positions());
  if (pj >= 1.0) return 1.0;  // log denominator would be zero

  double p1 = static_cast<double>(stats.term_count(t1)) /
              static_cast<double>(stats.total_terms());
  double p2 = static_cast<double>(stats.term_count(t2)) /
              static_cast<double>(stats.total_terms());
  double value = (std::log(p1) + std::log(p2)) / std::log(pj) - 1.0;
  return std::clamp(value, -1.0, 1.0);
}

double npmi_or_neg1(const CorpusStats& stats, const std::string& t1,
                    const std::string& t2) noexcept {
  if (!stats.has_term(t1) || !stats.has_term(t2)) return -1.0;
  return npmi(stats, t1, t2);
}

NpmiMatrix unit_matrix(const CorpusStats& stats, const DocumentUnit& unit) {
  NpmiMatrix m;
  for (const Token& t : unit.tokens) {
    if (!is_content_token(t)) continue;
    if (std::find(m.words.begin(), m.words.end(), t.lemma) == m.words.end())
      m.words.push_back(t.lemma);
  }
  if (m.words.empty()) throw EmptyUnit("unit has no content words: " + unit.id);

  const std::size_t n = m.words.size();
  m.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    m.values[i][i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = npmi_or_neg1(stats, m.words[i], m.words[j]);
      m.values[i][j] = v;
      m.values[j][i] = v;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Serialization. Line-oriented, keys sorted, counts are exact integers.

namespace {
constexpr std::string_view kMagic = "DTXSTATS";
constexpr int kVersion = 1;
}  // namespace

std::string stats_to_string(const CorpusStats& stats) {
  std::ostringstream out;
  out << kMagic << '\t' << kVersion << '\t' << stats.window_k() << '\t'
      << stats.total_positions() << '\n';
  out << "# p(t)=term_count/total_terms; p(ti,tj)=pair_count/total_positions; "
         "pairs counted once per unit at first co-window; log base e\n";

  std::vector<std::pair<std::string, std::uint64_t>> terms(stats.terms().begin(),
                                                           stats.terms().end());
  std::sort(terms.begin(), terms.end());
  for (const auto& [t, c] : terms) out << "T\t" << t << '\t' << c << '\n';

  std::vector<std::pair<std::string, std::uint64_t>> pairs(stats.pairs().begin(),
                                                           stats.pairs().end());
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [p, c] : pairs) out << "P\t" << p << '\t' << c << '\n';
  return out.str();
}

void save_stats(const CorpusStats& stats, const std::filesystem::path& path) {
  write_file_atomic(path, stats_to_string(stats));
}

CorpusStats load_stats(const std::filesystem::path& path) {
  return stats_from_string(read_file(path), path.string());
}

CorpusStats stats_from_string(std::string_view text, const std::string& origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw CorruptFile("empty stats data: " + origin);

  std::istringstream header(line);
  std::string magic;
  int version = 0, window_k = 0;
  std::uint64_t positions = 0;
  header >> magic;
  if (magic != kMagic) throw CorruptFile("bad magic in " + origin);
  if (!(header >> version >> window_k >> positions))
    throw CorruptFile("bad header in " + origin);
  if (version != kVersion)
    throw VersionMismatch("stats version " + std::to_string(version) +
                          " not supported (expected " + std::to_string(kVersion) + ")");

  std::uint64_t total_terms = 0;
  std::unordered_map<std::string, std::uint64_t> terms, pairs;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    if (t1 == std::string::npos) throw CorruptFile("bad row in " + origin);
    std::string kind = line.substr(0, t1);
    if (kind == "T") {
      std::size_t t2 = line.find('\t', t1 + 1);
      if (t2 == std::string::npos) throw CorruptFile("bad term row in " + origin);
      std::string term = line.substr(t1 + 1, t2 - t1 - 1);
      std::uint64_t count = std::strtoull(line.c_str() + t2 + 1, nullptr, 10);
      terms[term] = count;
      total_terms += count;
    } else if (kind == "P") {
      std::size_t t2 = line.find('\t', t1 + 1);
      std::size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
      if (t3 == std::string::npos) throw CorruptFile("bad pair row in " + origin);
      std::string key = line.substr(t1 + 1, t3 - t1 - 1);
      std::uint64_t count = std::strtoull(line.c_str() + t3 + 1, nullptr, 10);
      pairs[key] = count;
    } else {
      throw CorruptFile("unknown row kind '" + kind + "' in " + origin);
    }
  }

  return CorpusStats::from_raw(window_k, positions, total_terms, std::move(terms),
                               std::move(pairs));
}

CorpusStats CorpusStats::from_raw(int window_k, std::uint64_t total_positions,
                                  std::uint64_t total_terms,
                                  std::unordered_map<std::string, std::uint64_t> terms,
                                  std::unordered_map<std::string, std::uint64_t> pairs) {
  CorpusStats s(window_k);
  s.total_positions_ = total_positions;
  s.total_terms_ = total_terms;
  s.term_count_ = std::move(terms);
  s.pair_count_ = std::move(pairs);
  return s;
}

}  // namespace doctax
