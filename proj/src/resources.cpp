#include "doctax/resources.hpp"

#include <algorithm>
#include <cctype>

namespace doctax::resources {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    line = strip(line);
    if (!line.empty() && line.front() != '#') fn(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

PosTag tag_from_name(std::string_view name) {
  if (name == "NOUN") return PosTag::Noun;
  if (name == "PROPER_NOUN") return PosTag::ProperNoun;
  if (name == "VERB") return PosTag::Verb;
  if (name == "ADJ") return PosTag::Adj;
  if (name == "ADV") return PosTag::Adv;
  if (name == "PRON") return PosTag::Pron;
  if (name == "PREP") return PosTag::Prep;
  if (name == "DET") return PosTag::Det;
  if (name == "CONJ") return PosTag::Conj;
  if (name == "NUM") return PosTag::Num;
  return PosTag::Other;
}

}  // namespace

std::vector<std::string> parse_line_list(std::string_view text) {
  std::vector<std::string> out;
  for_each_line(text, [&](std::string_view line) { out.emplace_back(line); });
  return out;
}

std::unordered_map<std::string, PosTag> parse_lexicon(std::string_view text) {
  std::unordered_map<std::string, PosTag> out;
  for_each_line(text, [&](std::string_view line) {
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) return;
    std::string word = to_lower(strip(line.substr(0, tab)));
    PosTag tag = tag_from_name(strip(line.substr(tab + 1)));
    out.emplace(std::move(word), tag);  // first occurrence wins
  });
  return out;
}

LemmaExceptions parse_lemma_exceptions(std::string_view text) {
  LemmaExceptions out;
  for_each_line(text, [&](std::string_view line) {
    std::size_t t1 = line.find('\t');
    if (t1 == std::string_view::npos) return;
    std::size_t t2 = line.find('\t', t1 + 1);
    std::string surface = to_lower(strip(line.substr(0, t1)));
    std::string lemma(strip(t2 == std::string_view::npos ? line.substr(t1 + 1)
                                                         : line.substr(t1 + 1, t2 - t1 - 1)));
    std::string_view pos_name =
        t2 == std::string_view::npos ? "*" : strip(line.substr(t2 + 1));
    PosTag pos = pos_name == "*" ? PosTag::Other : tag_from_name(pos_name);
    out.emplace(LemmaKey{std::move(surface), pos}, std::move(lemma));
  });
  return out;
}

const std::unordered_set<std::string>& stopword_set() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s;
    for (const auto& w : parse_line_list(stopwords_text())) s.insert(to_lower(w));
    return s;
  }();
  return set;
}

const LemmaExceptions& lemma_exceptions() {
  static const LemmaExceptions table = parse_lemma_exceptions(lemma_exceptions_text());
  return table;
}

const std::unordered_map<std::string, PosTag>& pos_lexicon() {
  static const std::unordered_map<std::string, PosTag> lex = parse_lexicon(pos_lexicon_text());
  return lex;
}

const std::vector<std::string>& task_dep_labels() {
  static const std::vector<std::string> labels = parse_line_list(task_deps_text());
  return labels;
}

}  // namespace doctax::resources
