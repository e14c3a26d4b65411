#include "cogrowth/word.hpp"

#include <algorithm>

#include "cogrowth/errors.hpp"

namespace cogrowth {

Word parse_word(const GeneratorChoice& X, const std::string& text) {
  if (text == "1") return {};
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // Greedy: take the longest symbol matching at pos.
    std::size_t best_len = 0;
    GenIndex best = 0;
    for (GenIndex i = 0; i < X.symbols.size(); ++i) {
      const std::string& s = X.symbols[i];
      if (s.size() > best_len && text.compare(pos, s.size(), s) == 0) {
        best_len = s.size();
        best = i;
      }
    }
    if (best_len == 0)
      throw UsageError("cannot tokenize word '" + text + "' at position " +
                       std::to_string(pos));
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string format_word(const GeneratorChoice& X, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (GenIndex g : w) out += X.symbols.at(g);
  return out;
}

}  // namespace cogrowth
