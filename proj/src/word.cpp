#include "sturmian/word.hpp"

#include "sturmian/error.hpp"

namespace sturmian {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != '0' && c != '1') {
      throw ParseError("word", "expected letters 0/1, got '" + letters_ + "'");
    }
  }
}

}  // namespace sturmian
