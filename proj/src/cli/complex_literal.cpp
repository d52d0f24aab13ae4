#include "d4shear/complex_literal.hpp"

#include <cctype>
#include <charconv>
#include <numbers>
#include <stdexcept>
#include <string>

namespace d4shear::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::complex<double> sum() {
    skip();
    if (at_end()) fail("empty literal");
    std::complex<double> total = 0.0;
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += sign * term();
      first = false;
      skip();
    }
    return total;
  }

 private:
  std::complex<double> term() {
    std::complex<double> value = 1.0;
    int factors = 0;
    for (;;) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        value *= number();
      } else if (s_.substr(pos_, 2) == "pi") {
        pos_ += 2;
        value *= std::numbers::pi;
      } else if (s_.substr(pos_, 2) == "\xCF\x80") {  // UTF-8 pi
        pos_ += 2;
        value *= std::numbers::pi;
      } else if (c == 'i') {
        ++pos_;
        value *= std::complex<double>(0.0, 1.0);
      } else if (c == '*') {
        if (factors == 0) fail("'*' without a left factor");
        ++pos_;
        skip();
        if (at_end() || peek() == '+' || peek() == '-' || peek() == '*') fail("'*' without a right factor");
        continue;
      } else if (c == '+' || c == '-') {
        // A sign directly after an exponent marker is consumed by number().
        break;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      ++factors;
    }
    if (factors == 0) fail("missing term");
    return value;
  }

  double number() {
    std::size_t end = pos_;
    while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.')) ++end;
    if (end < s_.size() && (s_[end] == 'e' || s_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < s_.size() && (s_[e] == '+' || s_[e] == '-')) ++e;
      if (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) {
        while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
        end = e;
      }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + end, v);
    if (ec != std::errc() || ptr != s_.data() + end) fail("malformed number");
    pos_ = end;
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed complex literal '" + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const auto parts = split(text);
  if (parts.size() == 2) {
    const auto re = Parser(parts[0]).sum();
    const auto im = Parser(parts[1]).sum();
    if (re.imag() != 0.0 || im.imag() != 0.0) throw std::invalid_argument("pair form 'a,b' takes real parts");
    return {re.real(), im.real()};
  }
  if (parts.size() != 1) throw std::invalid_argument("malformed complex literal '" + std::string(text) + "'");
  return Parser(text).sum();
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text, std::size_t count) {
  const auto parts = split(text);
  if (parts.size() != count) {
    throw std::invalid_argument("expected " + std::to_string(count) + " comma-separated values, got '" +
                                std::string(text) + "'");
  }
  std::vector<std::complex<double>> out;
  for (auto p : parts) out.push_back(Parser(p).sum());
  return out;
}

}  // namespace d4shear::cli
