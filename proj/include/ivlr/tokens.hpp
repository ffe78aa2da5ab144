#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivlr/common.hpp"

namespace ivlr {

using TokenId = std::uint16_t;

// Closed vocabulary over the task template grammar plus structural tokens.
namespace tok {
inline constexpr TokenId PAD = 0;
inline constexpr TokenId MASK = 1;
inline constexpr TokenId BOS = 2;
inline constexpr TokenId EOT = 3;  // end of trace, doubles as EOS
inline constexpr TokenId SEP = 4;  // stage separator
}  // namespace tok

class Vocab {
 public:
  Vocab();

  int size() const { return static_cast<int>(words_.size()); }
  TokenId id(const std::string& word) const;
  const std::string& word(TokenId id) const;
  bool is_structural(TokenId id) const { return id < 5; }

  // Whitespace split with "," broken out as its own token. Throws bad_token
  // for anything outside the vocabulary.
  std::vector<TokenId> tokenize(const std::string& text) const;
  std::string detokenize(const std::vector<TokenId>& tokens) const;

 private:
  std::vector<std::string> words_;
};

const Vocab& vocab();

}  // namespace ivlr
