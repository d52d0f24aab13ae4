#include <cctype>
#include <stdexcept>
#include <string>

#include "d4shear/braid.hpp"

namespace d4shear::braid {

Generator inverse(Generator g) {
  switch (g) {
    case Generator::b12: return Generator::b12_inv;
    case Generator::b12_inv: return Generator::b12;
    case Generator::b23: return Generator::b23_inv;
    case Generator::b23_inv: return Generator::b23;
  }
  return g;
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::b12: return "12";
    case Generator::b23: return "23";
    case Generator::b12_inv: return "12i";
    case Generator::b23_inv: return "23i";
  }
  return "?";
}

BraidWord::BraidWord(const std::vector<Generator>& letters) {
  for (Generator g : letters) push_back(g);
}

void BraidWord::push_back(Generator g) {
  if (!letters_.empty() && letters_.back() == braid::inverse(g)) {
    letters_.pop_back();
  } else {
    letters_.push_back(g);
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  BraidWord word;
  std::string token;
  auto flush = [&](bool at_separator) {
    std::string t;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    token.clear();
    if (t.empty()) {
      if (at_separator) throw std::invalid_argument("braid word: empty letter");
      return;
    }
    if (t == "12") word.push_back(Generator::b12);
    else if (t == "23") word.push_back(Generator::b23);
    else if (t == "12i") word.push_back(Generator::b12_inv);
    else if (t == "23i") word.push_back(Generator::b23_inv);
    else throw std::invalid_argument("braid word: unknown letter '" + t + "'");
  };
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) return word;
  for (char c : text) {
    if (c == ',') {
      flush(true);
    } else {
      token += c;
    }
  }
  flush(true);
  return word;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(braid::inverse(*it));
  return r;
}

std::string BraidWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ',';
    s += to_string(letters_[i]);
  }
  return s;
}

std::vector<BraidWord> reduced_words(int max_length) {
  std::vector<BraidWord> out{BraidWord{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Generator g : {Generator::b12, Generator::b23, Generator::b12_inv, Generator::b23_inv}) {
        const auto& prev = out[i].letters();
        if (!prev.empty() && prev.back() == inverse(g)) continue;
        auto letters = prev;
        letters.push_back(g);
        out.emplace_back(letters);
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace d4shear::braid
