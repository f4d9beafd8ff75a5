#ifndef DOCTAX_GAZETTEER_HPP
#define DOCTAX_GAZETTEER_HPP

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "doctax/stats.hpp"
#include "doctax/types.hpp"

namespace doctax {

// A curated term list for direct-lookup extraction. Entries are lowercase
// lemma-normalized phrases of 1-4 words.
struct Gazetteer {
  std::string name;
  std::set<std::string> entries;  // ordered: deterministic iteration
  std::string source;

  bool contains(const std::string& phrase) const { return entries.contains(phrase); }
  std::size_t max_words() const;
};

// Lemma-normalizes a phrase the way gazetteer entries are stored.
std::string normalize_phrase(std::string_view phrase);

// One entry per line, "#" comments and blanks skipped, entries lemmatized
// and deduplicated. Throws EmptyGazetteer when nothing remains.
Gazetteer load_gazetteer(const std::filesystem::path& path, std::string name);
Gazetteer gazetteer_from_text(std::string_view text, std::string name,
                              std::string source);

// Bag-of-words cosine over content lemmas of the first two paragraphs of
// each text (raw term frequencies); 0 when either vector is empty.
double bow_cosine(std::string_view a, std::string_view b);

// Version-control domain model: seed phrases plus co-occurrence statistics
// built over snapshot pages that pass the similarity filter.
struct VcDomainModel {
  Gazetteer seeds;
  CorpusStats stats;
  int pages_total = 0;
  int pages_accepted = 0;
};

inline constexpr double kDefaultVcThreshold = 0.15;

// Snapshot layout: a directory of .html/.txt pages plus "manifest.tsv" with
// one "filename<TAB>title" line per page. Seeds come from the page titles
// and the root page's link anchors; pages with cosine(page, root) below the
// threshold are dropped; stats are built over the accepted pages. Seeds
// whose words never made it into the accepted-page vocabulary are pruned.
VcDomainModel build_vc_model(const std::filesystem::path& snapshot_dir,
                             const std::string& root_page,
                             double threshold = kDefaultVcThreshold,
                             int window_k = kDefaultWindow);

// Fallback model for pipelines run without a snapshot: bundled seed list
// over caller-provided statistics.
VcDomainModel make_default_vc_model(CorpusStats stats);

void save_vc_model(const VcDomainModel& model, const std::filesystem::path& path);
VcDomainModel load_vc_model(const std::filesystem::path& path);

}  // namespace doctax

#endif
