#include "doctax/gazetteer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "doctax/corpus.hpp"
#include "doctax/errors.hpp"
#include "doctax/io_util.hpp"
#include "doctax/resources.hpp"
#include "doctax/syntax.hpp"

namespace doctax {

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

DocumentUnit analyze_text(std::string_view text) {
  DocumentUnit unit;
  unit.raw_text = std::string(text);
  tokenize_and_segment(unit);
  pos_tag(unit);
  apply_lemmas(unit);
  return unit;
}

}  // namespace

std::size_t Gazetteer::max_words() const {
  std::size_t m = 0;
  for (const auto& e : entries) m = std::max(m, split_words(e).size());
  return m;
}

std::string normalize_phrase(std::string_view phrase) {
  std::vector<std::string> words = split_words(phrase);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += lemmatize(w, PosTag::Noun);
  }
  return out;
}

Gazetteer gazetteer_from_text(std::string_view text, std::string name,
                              std::string source) {
  Gazetteer g;
  g.name = std::move(name);
  g.source = std::move(source);
  for (const auto& line : resources::parse_line_list(text)) {
    std::string norm = normalize_phrase(line);
    std::size_t words = split_words(norm).size();
    if (!norm.empty() && words >= 1 && words <= 4) g.entries.insert(norm);
  }
  return g;
}

Gazetteer load_gazetteer(const std::filesystem::path& path, std::string name) {
  Gazetteer g = gazetteer_from_text(read_file(path), std::move(name), path.string());
  if (g.entries.empty()) throw EmptyGazetteer("no entries in " + path.string());
  return g;
}

// ---------------------------------------------------------------------------

double bow_cosine(std::string_view a, std::string_view b) {
  auto first_two_paragraphs = [](std::string_view text) {
    std::size_t count = 0;
    std::size_t i = 0;
    std::size_t end = text.size();
    while (i < text.size()) {
      std::size_t nl = text.find('\n', i);
      if (nl == std::string_view::npos) break;
      // A blank (whitespace-only) line terminates a paragraph.
      std::size_t next = text.find('\n', nl + 1);
      std::string_view between = text.substr(nl + 1, (next == std::string_view::npos
                                                          ? text.size()
                                                          : next) - nl - 1);
      bool blank = between.find_first_not_of(" \t\r") == std::string_view::npos;
      if (blank) {
        if (++count == 2) {
          end = nl;
          break;
        }
        i = next == std::string_view::npos ? text.size() : next + 1;
      } else {
        i = nl + 1;
      }
    }
    return text.substr(0, end);
  };

  auto tf = [&](std::string_view text) {
    std::map<std::string, double> counts;
    std::string_view head = first_two_paragraphs(text);
    if (head.find_first_not_of(" \t\r\n") == std::string_view::npos) return counts;
    DocumentUnit u = analyze_text(head);
    for (const auto& lemma : content_words(u)) counts[lemma] += 1.0;
    return counts;
  };

  std::map<std::string, double> ta = tf(a), tb = tf(b);
  if (ta.empty() || tb.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [w, c] : ta) {
    na += c * c;
    if (auto it = tb.find(w); it != tb.end()) dot += c * it->second;
  }
  for (const auto& [w, c] : tb) nb += c * c;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// ---------------------------------------------------------------------------

namespace {

struct SnapshotPage {
  std::string filename;
  std::string title;
  std::string raw_html;   // original bytes (anchor extraction)
  DocumentUnit unit;      // ingested + analyzed
};

// Anchor texts of <a ...>...</a> elements, markup inside stripped.
std::vector<std::string> anchor_texts(std::string_view html) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < html.size()) {
    std::size_t open = html.find('<', i);
    if (open == std::string_view::npos) break;
    std::size_t after = open + 1;
    if (after < html.size() && (html[after] == 'a' || html[after] == 'A') &&
        after + 1 < html.size() &&
        (html[after + 1] == '>' || std::isspace(static_cast<unsigned char>(html[after + 1])))) {
      std::size_t gt = html.find('>', open);
      if (gt == std::string_view::npos) break;
      std::size_t close = html.find("</a", gt);
      if (close == std::string_view::npos) {
        i = gt + 1;
        continue;
      }
      std::string inner(html.substr(gt + 1, close - gt - 1));
      std::string text;
      bool in_tag = false;
      for (char c : inner) {
        if (c == '<') in_tag = true;
        else if (c == '>') in_tag = false;
        else if (!in_tag) text += c;
      }
      out.push_back(text);
      i = close + 1;
      continue;
    }
    i = open + 1;
  }
  return out;
}

bool seed_in_vocab(const std::string& seed, const CorpusStats& stats) {
  for (const auto& w : split_words(seed))
    if (!stats.has_term(w)) return false;
  return true;
}

}  // namespace

VcDomainModel build_vc_model(const std::filesystem::path& snapshot_dir,
                             const std::string& root_page, double threshold,
                             int window_k) {
  std::filesystem::path manifest = snapshot_dir / "manifest.tsv";
  std::string manifest_text = read_file(manifest);

  std::vector<SnapshotPage> pages;
  std::istringstream in(manifest_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw CorruptFile("bad manifest row: " + line);
    SnapshotPage p;
    p.filename = line.substr(0, tab);
    p.title = line.substr(tab + 1);
    pages.push_back(std::move(p));
  }

  int root_idx = -1;
  for (std::size_t i = 0; i < pages.size(); ++i)
    if (pages[i].title == root_page || pages[i].filename == root_page)
      root_idx = static_cast<int>(i);
  if (root_idx < 0)
    throw RootPageMissing("root page '" + root_page + "' not in snapshot manifest");

  for (auto& p : pages) {
    std::filesystem::path file = snapshot_dir / p.filename;
    p.raw_html = read_file(file);
    auto ext = file.extension().string();
    InputFormat fmt = (ext == ".html" || ext == ".htm") ? InputFormat::Html
                                                        : InputFormat::Plain;
    p.unit = ingest(p.raw_html, fmt, p.filename, file.string());
    tokenize_and_segment(p.unit);
    pos_tag(p.unit);
    apply_lemmas(p.unit);
  }

  const SnapshotPage& root = pages[static_cast<std::size_t>(root_idx)];

  VcDomainModel model;
  model.pages_total = static_cast<int>(pages.size());

  std::vector<DocumentUnit> accepted;
  for (const auto& p : pages) {
    double sim = bow_cosine(p.unit.raw_text, root.unit.raw_text);
    if (sim >= threshold) {
      accepted.push_back(p.unit);
      ++model.pages_accepted;
    }
  }
  model.stats = build_stats(accepted, window_k);

  model.seeds.name = "vc-seeds";
  model.seeds.source = snapshot_dir.string() + " (titles + root anchors)";
  auto add_seed = [&](std::string_view raw) {
    std::string norm = normalize_phrase(raw);
    std::size_t words = split_words(norm).size();
    if (!norm.empty() && words >= 1 && words <= 4 && seed_in_vocab(norm, model.stats))
      model.seeds.entries.insert(norm);
  };
  for (const auto& p : pages) add_seed(p.title);
  for (const auto& anchor : anchor_texts(root.raw_html)) add_seed(anchor);

  return model;
}

VcDomainModel make_default_vc_model(CorpusStats stats) {
  VcDomainModel model;
  model.stats = std::move(stats);
  Gazetteer all = gazetteer_from_text(resources::vc_seeds_text(), "vc-seeds", "bundled");
  model.seeds.name = all.name;
  model.seeds.source = all.source;
  for (const auto& e : all.entries)
    if (seed_in_vocab(e, model.stats)) model.seeds.entries.insert(e);
  return model;
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::string_view kVcMagic = "DTXVCMOD";
constexpr int kVcVersion = 1;
}  // namespace

void save_vc_model(const VcDomainModel& model, const std::filesystem::path& path) {
  std::ostringstream out;
  out << kVcMagic << '\t' << kVcVersion << '\t' << model.pages_accepted << '\t'
      << model.pages_total << '\n';
  for (const auto& s : model.seeds.entries) out << "S\t" << s << '\n';
  out << "STATS\n";
  out << stats_to_string(model.stats);
  write_file_atomic(path, out.str());
}

VcDomainModel load_vc_model(const std::filesystem::path& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw CorruptFile("empty vc model: " + path.string());
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  VcDomainModel model;
  header >> magic >> version >> model.pages_accepted >> model.pages_total;
  if (magic != kVcMagic) throw CorruptFile("bad magic in " + path.string());
  if (version != kVcVersion)
    throw VersionMismatch("vc model version " + std::to_string(version) +
                          " not supported");

  model.seeds.name = "vc-seeds";
  model.seeds.source = path.string();
  std::string stats_text;
  bool in_stats = false;
  while (std::getline(in, line)) {
    if (in_stats) {
      stats_text += line;
      stats_text += '\n';
      continue;
    }
    if (line == "STATS") {
      in_stats = true;
      continue;
    }
    if (line.rfind("S\t", 0) == 0) model.seeds.entries.insert(line.substr(2));
    else if (!line.empty())
      throw CorruptFile("unexpected row in " + path.string());
  }
  if (!in_stats) throw CorruptFile("missing stats section in " + path.string());

  std::filesystem::path tmp = path;
  tmp += ".stats.tmp";
  write_file_atomic(tmp, stats_text);
  model.stats = load_stats(tmp);
  std::filesystem::remove(tmp);
  return model;
}

}  // namespace doctax
