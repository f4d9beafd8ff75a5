#include "doctax/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "doctax/errors.hpp"
#include "doctax/resources.hpp"

namespace doctax {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return is_letter(c) || is_digit(c); }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// ---------------------------------------------------------------------------
// UTF-8 cleanup: invalid sequences become U+FFFD, counted.

std::string clean_utf8(std::string_view in, int* replacements) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    unsigned char c = static_cast<unsigned char>(in[i]);
    std::size_t extra;
    if (c < 0x80) extra = 0;
    else if ((c & 0xE0) == 0xC0 && c >= 0xC2) extra = 1;
    else if ((c & 0xF0) == 0xE0) extra = 2;
    else if ((c & 0xF8) == 0xF0 && c <= 0xF4) extra = 3;
    else {
      out += kReplacement;
      if (replacements) ++*replacements;
      ++i;
      continue;
    }
    bool ok = i + extra < in.size();
    for (std::size_t k = 1; ok && k <= extra; ++k)
      ok = (static_cast<unsigned char>(in[i + k]) & 0xC0) == 0x80;
    if (ok) {
      out.append(in.substr(i, extra + 1));
      i += extra + 1;
    } else {
      out += kReplacement;
      if (replacements) ++*replacements;
      ++i;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HTML stripping with code-span capture.

bool is_code_tag(std::string_view name) {
  return name == "code" || name == "pre" || name == "tt" || name == "samp" ||
         name == "kbd" || name == "var";
}

bool is_block_tag(std::string_view name) {
  static constexpr std::string_view kBlocks[] = {
      "p",  "br", "div", "li", "ul", "ol", "tr", "td", "th", "table", "blockquote",
      "h1", "h2", "h3",  "h4", "h5", "h6", "dt", "dd", "dl", "section", "article", "hr"};
  return std::find(std::begin(kBlocks), std::end(kBlocks), name) != std::end(kBlocks);
}

struct HtmlResult {
  std::string text;
  std::vector<CharSpan> spans;
  int warnings = 0;
};

void decode_entity(std::string_view body, std::string& out) {
  if (body == "amp") out += '&';
  else if (body == "lt") out += '<';
  else if (body == "gt") out += '>';
  else if (body == "quot") out += '"';
  else if (body == "apos") out += '\'';
  else if (body == "nbsp") out += ' ';
  else if (!body.empty() && body[0] == '#') {
    long code = 0;
    if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X'))
      code = std::strtol(std::string(body.substr(2)).c_str(), nullptr, 16);
    else
      code = std::strtol(std::string(body.substr(1)).c_str(), nullptr, 10);
    // Encode the code point back to UTF-8.
    if (code > 0 && code <= 0x10FFFF) {
      char32_t cp = static_cast<char32_t>(code);
      if (cp < 0x80) out += static_cast<char>(cp);
      else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      }
    }
  } else {
    out += '&';
    out += body;
    out += ';';
  }
}

HtmlResult strip_html(std::string_view html) {
  HtmlResult r;
  r.text.reserve(html.size());
  bool pending_break = false;
  int code_depth = 0;
  std::size_t span_start = 0;

  auto append = [&](char c) {
    if (pending_break && !r.text.empty()) r.text += '\n';
    pending_break = false;
    r.text += c;
  };

  std::size_t i = 0;
  while (i < html.size()) {
    char c = html[i];
    if (c == '<') {
      // Comments and declarations.
      if (html.compare(i, 4, "<!--") == 0) {
        std::size_t end = html.find("-->", i + 4);
        i = end == std::string_view::npos ? html.size() : end + 3;
        continue;
      }
      if (i + 1 < html.size() && (html[i + 1] == '!' || html[i + 1] == '?')) {
        std::size_t end = html.find('>', i);
        i = end == std::string_view::npos ? html.size() : end + 1;
        if (end == std::string_view::npos) ++r.warnings;
        continue;
      }
      std::size_t j = i + 1;
      bool closing = j < html.size() && html[j] == '/';
      if (closing) ++j;
      std::size_t name_start = j;
      while (j < html.size() && is_alnum(html[j])) ++j;
      std::size_t name_end = j;
      // Not a tag at all ("x < y"): keep the '<' literally.
      if (name_end == name_start) {
        append('<');
        ++i;
        continue;
      }
      std::size_t gt = html.find('>', j);
      if (gt == std::string_view::npos) {
        // Unterminated tag: literal text, recovered.
        ++r.warnings;
        append('<');
        ++i;
        continue;
      }
      std::string name = to_lower(html.substr(name_start, name_end - name_start));
      bool self_closed = gt > i && html[gt - 1] == '/';
      i = gt + 1;
      if (name == "script" || name == "style") {
        if (!closing && !self_closed) {
          std::string close = "</" + name;
          std::size_t k = i;
          std::size_t found = std::string_view::npos;
          while (k < html.size()) {
            std::size_t p = html.find('<', k);
            if (p == std::string_view::npos) break;
            if (html.size() - p >= close.size() &&
                to_lower(html.substr(p, close.size())) == close) {
              found = p;
              break;
            }
            k = p + 1;
          }
          if (found == std::string_view::npos) {
            i = html.size();
          } else {
            std::size_t end = html.find('>', found);
            i = end == std::string_view::npos ? html.size() : end + 1;
          }
        }
        continue;
      }
      if (is_code_tag(name) && !self_closed) {
        if (!closing) {
          if (code_depth == 0) {
            if (pending_break && !r.text.empty()) r.text += '\n';
            pending_break = false;
            span_start = r.text.size();
          }
          ++code_depth;
        } else {
          if (code_depth == 0) {
            ++r.warnings;  // close without open, tag dropped
          } else if (--code_depth == 0) {
            if (r.text.size() > span_start)
              r.spans.push_back({span_start, r.text.size()});
          }
        }
        continue;
      }
      if (is_block_tag(name)) pending_break = true;
      continue;
    }
    if (c == '&') {
      std::size_t semi = html.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 10) {
        std::string body(html.substr(i + 1, semi - i - 1));
        if (pending_break && !r.text.empty()) r.text += '\n';
        pending_break = false;
        decode_entity(body, r.text);
        i = semi + 1;
        continue;
      }
      append('&');
      ++i;
      continue;
    }
    if (is_space(c)) {
      // Whitespace never cancels a pending block break; keep it verbatim
      // only when inside already-emitted content.
      if (!r.text.empty() && !pending_break) r.text += c;
      ++i;
      continue;
    }
    append(c);
    ++i;
  }
  if (code_depth > 0) ++r.warnings;  // unclosed code markup; span dropped
  return r;
}

}  // namespace

DocumentUnit ingest(std::string_view bytes, InputFormat format, std::string id,
                    std::string source, IngestReport* report) {
  IngestReport local;
  IngestReport* rep = report ? report : &local;
  std::string clean = clean_utf8(bytes, &rep->utf8_replacements);

  DocumentUnit unit;
  unit.id = std::move(id);
  unit.source = std::move(source);
  if (format == InputFormat::Html) {
    HtmlResult r = strip_html(clean);
    rep->markup_warnings += r.warnings;
    unit.raw_text = std::move(r.text);
    unit.code_spans = std::move(r.spans);
  } else {
    unit.raw_text = std::move(clean);
  }
  bool has_content = std::any_of(unit.raw_text.begin(), unit.raw_text.end(),
                                 [](char c) { return !is_space(c); });
  if (!has_content) throw EmptyInput();
  return unit;
}

// ---------------------------------------------------------------------------
// Tokenizer.

namespace {

const std::array<std::string_view, 3> kAbbreviations = {"e.g.", "i.e.", "etc."};

bool is_abbreviation(std::string_view s) {
  std::string lower = to_lower(s);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

bool is_word_chunk(std::string_view s) {
  if (s.empty() || !is_letter(s.front())) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (is_alnum(c)) continue;
    if ((c == '-' || c == '\'') && i > 0 && i + 1 < s.size() && is_alnum(s[i - 1]) &&
        is_alnum(s[i + 1]))
      continue;
    return false;
  }
  return true;
}

bool is_number_chunk(std::string_view s) {
  if (s.empty() || !is_digit(s.front())) return false;
  bool prev_digit = true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (is_digit(c)) {
      prev_digit = true;
    } else if ((c == '.' || c == ',') && prev_digit && i + 1 < s.size() &&
               is_digit(s[i + 1])) {
      prev_digit = false;
    } else {
      return false;
    }
  }
  return true;
}

// Identifier-with-punctuation heuristic for plain text: underscores, internal
// dots, call parens, URLs, or camel case mark a chunk as code.
bool looks_code(std::string_view s) {
  static constexpr std::string_view kAllowed = "_.()[]{}'\":/\\+=<>*#@&%$^|~,;!?-";
  bool has_letter = false;
  int parens = 0;
  for (char c : s) {
    if (is_letter(c)) has_letter = true;
    else if (!is_digit(c) && kAllowed.find(c) == std::string_view::npos) return false;
    if (c == '(') ++parens;
    if (c == ')') --parens;
    if (parens < 0) return false;
  }
  if (!has_letter || parens != 0) return false;
  if (s.find('_') != std::string_view::npos) return true;
  if (s.find("()") != std::string_view::npos) return true;
  if (s.find("://") != std::string_view::npos) return true;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '.' && i > 0 && is_alnum(s[i - 1]) && is_alnum(s[i + 1])) {
      // Require a run of >= 2 on either side so "e.g." stays prose.
      std::size_t left = 0, right = 0;
      for (std::size_t k = i; k > 0 && is_alnum(s[k - 1]); --k) ++left;
      for (std::size_t k = i + 1; k < s.size() && is_alnum(s[k]); ++k) ++right;
      if (left >= 2 || right >= 2) return true;
    }
    if (is_letter(s[i]) && !is_upper(s[i]) && is_upper(s[i + 1])) return true;  // camelCase
  }
  return false;
}

Token make_token(std::string_view text, std::size_t start, PosTag pos, bool code) {
  Token t;
  t.surface = std::string(text);
  t.char_start = start;
  t.char_end = start + text.size();
  t.pos = pos;
  t.is_code_like = code;
  if (!code && resources::stopword_set().contains(to_lower(text))) t.is_stopword = true;
  return t;
}

// Lex one whitespace-free chunk that lies outside code spans.
void lex_chunk(std::string_view text, std::size_t offset, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_alnum(c)) {
      // Try successively shorter prefixes until something parses; stripped
      // suffix characters are re-lexed as punctuation.
      std::size_t t = text.size();
      bool emitted = false;
      while (t > i) {
        std::string_view cand = text.substr(i, t - i);
        if (is_abbreviation(cand)) {
          out.push_back(make_token(cand, offset + i, PosTag::Other, false));
          emitted = true;
          break;
        }
        if (looks_code(cand)) {
          out.push_back(make_token(cand, offset + i, PosTag::Code, true));
          emitted = true;
          break;
        }
        if (is_number_chunk(cand)) {
          out.push_back(make_token(cand, offset + i, PosTag::Num, false));
          emitted = true;
          break;
        }
        if (is_word_chunk(cand)) {
          out.push_back(make_token(cand, offset + i, PosTag::Other, false));
          emitted = true;
          break;
        }
        --t;
      }
      if (emitted) {
        i = t;
      } else {
        out.push_back(make_token(text.substr(i, 1), offset + i, PosTag::Punct, false));
        ++i;
      }
    } else {
      // Punctuation: group runs of the same character ("...", "--").
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == c) ++j;
      out.push_back(make_token(text.substr(i, j - i), offset + i, PosTag::Punct, false));
      i = j;
    }
  }
}

}  // namespace

void tokenize_and_segment(DocumentUnit& unit) {
  const std::string& text = unit.raw_text;
  std::vector<CharSpan> spans = unit.code_spans;
  std::sort(spans.begin(), spans.end(),
            [](const CharSpan& a, const CharSpan& b) { return a.begin < b.begin; });

  auto span_covering = [&](std::size_t pos) -> const CharSpan* {
    for (const auto& s : spans)
      if (pos >= s.begin && pos < s.end) return &s;
    return nullptr;
  };
  auto next_span_start = [&](std::size_t pos) {
    for (const auto& s : spans)
      if (s.begin >= pos) return s.begin;
    return text.size();
  };

  unit.tokens.clear();
  unit.sentences.clear();

  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (const CharSpan* sp = span_covering(i)) {
      // Inside markup code: whitespace-delimited CODE tokens.
      std::size_t j = i;
      while (j < sp->end && !is_space(text[j])) ++j;
      unit.tokens.push_back(
          make_token(std::string_view(text).substr(i, j - i), i, PosTag::Code, true));
      i = j;
      continue;
    }
    std::size_t limit = std::min(next_span_start(i), text.size());
    std::size_t j = i;
    while (j < limit && !is_space(text[j])) ++j;
    lex_chunk(std::string_view(text).substr(i, j - i), i, unit.tokens);
    i = j;
  }

  // Sentence boundaries: a PUNCT token of sentence enders, outside code
  // spans, followed by whitespace and then an uppercase letter.
  auto is_sentence_end = [&](std::size_t ti) {
    const Token& t = unit.tokens[ti];
    if (t.pos != PosTag::Punct) return false;
    for (char c : t.surface)
      if (c != '.' && c != '!' && c != '?') return false;
    if (span_covering(t.char_start) != nullptr) return false;
    std::size_t after = t.char_end;
    if (after >= text.size()) return true;
    if (!is_space(text[after])) return false;
    while (after < text.size() && is_space(text[after])) ++after;
    return after >= text.size() || is_upper(text[after]);
  };

  std::size_t start = 0;
  for (std::size_t ti = 0; ti < unit.tokens.size(); ++ti) {
    if (is_sentence_end(ti)) {
      unit.sentences.push_back({start, ti + 1});
      start = ti + 1;
    }
  }
  if (start < unit.tokens.size()) unit.sentences.push_back({start, unit.tokens.size()});
}

// ---------------------------------------------------------------------------
// Lemmatizer.

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Undo consonant doubling / restore silent e after stripping -ing / -ed.
std::string fix_verb_stem(std::string stem) {
  std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z' &&
      stem[n - 1] != 'f') {
    stem.pop_back();
    return stem;
  }
  if (n >= 2 && !is_vowel(stem[n - 1]) && stem[n - 1] != 'w' && stem[n - 1] != 'x' &&
      stem[n - 1] != 'y' && is_vowel(stem[n - 2]) && (n == 2 || !is_vowel(stem[n - 3]))) {
    stem += 'e';  // mak -> make, stor -> store
  }
  return stem;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string noun_rules(std::string w) {
  if (ends_with(w, "ies") && w.size() > 4) {
    w.replace(w.size() - 3, 3, "y");
    return w;
  }
  if ((ends_with(w, "ses") || ends_with(w, "xes") || ends_with(w, "zes") ||
       ends_with(w, "ches") || ends_with(w, "shes")) &&
      w.size() > 4) {
    w.erase(w.size() - 2);
    return w;
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is") && w.size() > 3) {
    w.pop_back();
  }
  return w;
}

std::string verb_rules(std::string w, bool strip_third_person) {
  if (ends_with(w, "ies") && w.size() > 4) {
    w.replace(w.size() - 3, 3, "y");
    return w;
  }
  if (ends_with(w, "ing") && w.size() > 5) {
    w.erase(w.size() - 3);
    return fix_verb_stem(std::move(w));
  }
  if (ends_with(w, "ied") && w.size() > 4) {
    w.replace(w.size() - 3, 3, "y");
    return w;
  }
  if (ends_with(w, "ed") && w.size() > 4) {
    w.erase(w.size() - 2);
    return fix_verb_stem(std::move(w));
  }
  if (strip_third_person) {
    if ((ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "sses") ||
         ends_with(w, "xes") || ends_with(w, "zes")) &&
        w.size() > 4) {
      w.erase(w.size() - 2);
      return w;
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
        !ends_with(w, "is") && w.size() > 3) {
      w.pop_back();
    }
  }
  return w;
}

}  // namespace

std::string lemmatize(std::string_view surface, PosTag pos) {
  if (pos == PosTag::Code) return std::string(surface);
  std::string lower = to_lower(surface);

  PosTag key_pos = pos == PosTag::ProperNoun ? PosTag::Noun : pos;
  const auto& exceptions = resources::lemma_exceptions();
  if (auto it = exceptions.find({lower, key_pos}); it != exceptions.end())
    return it->second;
  if (auto it = exceptions.find({lower, PosTag::Other}); it != exceptions.end())
    return it->second;

  switch (pos) {
    case PosTag::Noun:
    case PosTag::ProperNoun:
      return noun_rules(std::move(lower));
    case PosTag::Verb:
      return verb_rules(std::move(lower), /*strip_third_person=*/true);
    case PosTag::Adj:
      return verb_rules(std::move(lower), /*strip_third_person=*/false);
    default:
      return lower;
  }
}

void apply_lemmas(DocumentUnit& unit) {
  for (Token& t : unit.tokens) t.lemma = lemmatize(t.surface, t.pos);
}

bool is_content_token(const Token& t) {
  return !t.is_stopword && t.pos != PosTag::Punct && t.pos != PosTag::Other;
}

std::vector<std::string> content_words(const DocumentUnit& unit) {
  std::vector<std::string> out;
  out.reserve(unit.tokens.size());
  for (const Token& t : unit.tokens)
    if (is_content_token(t)) out.push_back(t.lemma);
  return out;
}

}  // namespace doctax
