#include "hog/word_set.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace hog {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Printable, non-whitespace ASCII.
bool is_word_byte(unsigned char c) { return c > 0x20 && c < 0x7f; }

std::vector<std::string> parse_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view word = trim(line);
    if (word.empty()) continue;
    for (unsigned char c : word) {
      if (!is_word_byte(c)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": invalid byte 0x" << std::hex
            << static_cast<unsigned>(c) << " (words must be printable ASCII "
            << "without whitespace)";
        throw format_error(msg.str());
      }
    }
    out.emplace_back(word);
  }
  return out;
}

std::vector<std::string> parse_fasta(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::string record_id;
  std::string sequence;
  bool in_record = false;
  std::size_t line_no = 0;

  auto finish = [&] {
    if (!in_record) return;
    if (sequence.empty())
      throw format_error("FASTA record '" + record_id + "' has an empty sequence");
    out.push_back(std::move(sequence));
    sequence.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '>') {
      finish();
      body.remove_prefix(1);
      auto end = std::find_if(body.begin(), body.end(), [](char c) {
        return is_space(static_cast<unsigned char>(c));
      });
      record_id.assign(body.begin(), end);
      in_record = true;
      continue;
    }
    if (!in_record) {
      throw format_error("line " + std::to_string(line_no) +
                         ": sequence data before the first FASTA header");
    }
    for (unsigned char c : body) {
      if (!is_word_byte(c)) {
        std::ostringstream msg;
        msg << "line " << line_no << " (record '" << record_id
            << "'): invalid byte 0x" << std::hex << static_cast<unsigned>(c);
        throw format_error(msg.str());
      }
      sequence.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  finish();
  return out;
}

}  // namespace

StringSet::StringSet(std::vector<std::string> words) : words_(std::move(words)) {
  std::array<bool, 256> seen{};
  std::unordered_set<std::string_view> distinct;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::string& w = words_[i];
    if (w.empty())
      throw validation_error("word " + std::to_string(i + 1) + " is empty");
    if (!distinct.insert(w).second)
      throw validation_error("duplicate word '" + w + "'");
    norm_ += w.size();
    max_length_ = std::max(max_length_, w.size());
    for (unsigned char c : w) seen[c] = true;
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (i != j && words_[j].find(words_[i]) != std::string::npos) {
        throw validation_error("word " + std::to_string(i + 1) + " '" +
                               words_[i] + "' is a substring of word " +
                               std::to_string(j + 1) + " '" + words_[j] + "'");
      }
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c)
    if (seen[c]) alphabet_.push_back(static_cast<Symbol>(c));
}

std::vector<std::string> parse_words(std::istream& input, InputFormat format) {
  return format == InputFormat::lines ? parse_lines(input) : parse_fasta(input);
}

std::vector<std::string> parse_words(std::string_view input, InputFormat format) {
  std::istringstream in{std::string(input)};
  return parse_words(in, format);
}

StringSet normalize(std::vector<std::string> raw, ContainmentPolicy policy) {
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i].empty())
      throw validation_error("word " + std::to_string(i + 1) + " is empty");

  if (policy == ContainmentPolicy::reject) return StringSet(std::move(raw));

  std::vector<std::string> unique;
  std::unordered_set<std::string> seen;
  for (auto& w : raw)
    if (seen.insert(w).second) unique.push_back(std::move(w));

  // Naive containment test; an index is not worth it at this scale.
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < unique.size() && !contained; ++j)
      contained = i != j && unique[j].find(unique[i]) != std::string::npos;
    if (!contained) kept.push_back(unique[i]);
  }
  return StringSet(std::move(kept));
}

InputFormat parse_input_format(std::string_view name) {
  if (name == "lines") return InputFormat::lines;
  if (name == "fasta") return InputFormat::fasta;
  throw validation_error("unknown input format '" + std::string(name) + "'");
}

ContainmentPolicy parse_containment_policy(std::string_view name) {
  if (name == "reject") return ContainmentPolicy::reject;
  if (name == "filter") return ContainmentPolicy::filter;
  throw validation_error("unknown containment policy '" + std::string(name) + "'");
}

}  // namespace hog
