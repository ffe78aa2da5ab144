#include "ivlr/tokens.hpp"

#include <sstream>

namespace ivlr {

Vocab::Vocab() {
  words_ = {"<pad>", "<mask>", "<bos>", "<eot>", "<sep>",
            "put",   "the",    "block", "in",    "zone",
            "then",  ",",      "grasp", "place", "inside",
            "move",  "toward", "red",   "green", "blue",
            "yellow"};
}

TokenId Vocab::id(const std::string& word) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] == word) return static_cast<TokenId>(i);
  }
  throw Error("bad_token", word);
}

const std::string& Vocab::word(TokenId id) const {
  if (id >= words_.size()) throw Error("bad_token", "id out of range");
  return words_[id];
}

std::vector<TokenId> Vocab::tokenize(const std::string& text) const {
  std::vector<TokenId> out;
  std::istringstream in(text);
  std::string piece;
  while (in >> piece) {
    while (!piece.empty() && piece.back() == ',') piece.pop_back(), out.push_back(id(piece)), piece = ",";
    out.push_back(id(piece));
  }
  return out;
}

std::string Vocab::detokenize(const std::vector<TokenId>& tokens) const {
  std::string out;
  for (TokenId t : tokens) {
    const std::string& w = word(t);
    if (!out.empty() && w != ",") out += ' ';
    out += w;
  }
  return out;
}

const Vocab& vocab() {
  static const Vocab v;
  return v;
}

}  // namespace ivlr
