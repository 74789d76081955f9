#include "hnp/text.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace hnp {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected ") + what);
  }

  std::int64_t integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::int64_t digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
        throw ParseError(start, "integer literal overflows");
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::pair<Slope, std::int64_t> parse_term(Scanner& s) {
  s.expect('O', "'O'");
  s.expect('(', "'('");
  const std::int64_t num = s.integer(true);
  std::int64_t den = 1;
  if (s.accept('/')) {
    const std::size_t at = s.pos();
    den = s.integer(false);
    if (den == 0) throw ParseError(at, "denominator must be positive");
  }
  s.expect(')', "')'");
  std::int64_t mult = 1;
  if (s.accept('^')) {
    const std::size_t at = s.pos();
    mult = s.integer(false);
    if (mult == 0) throw ParseError(at, "multiplicity must be positive");
  }
  return {Slope(num, den), mult};
}

}  // namespace

Bundle parse_bundle(std::string_view text) {
  Scanner s(text);
  s.skip_space();
  if (s.accept('0')) {
    if (!s.at_end()) throw ParseError(s.pos(), "trailing input after '0'");
    return Bundle{};
  }
  std::vector<std::pair<Slope, std::int64_t>> terms;
  terms.push_back(parse_term(s));
  while (s.accept('+')) terms.push_back(parse_term(s));
  if (!s.at_end()) throw ParseError(s.pos(), "unexpected input");
  return Bundle::from_factors(std::move(terms));
}

std::string format_slope(const Slope& s) {
  std::string out = std::to_string(s.num);
  if (s.den > 1) {
    out += '/';
    out += std::to_string(s.den);
  }
  return out;
}

std::string format_bundle(const Bundle& b) {
  if (b.is_zero()) return "0";
  std::string out;
  for (const auto& f : b.factors()) {
    if (!out.empty()) out += " + ";
    out += "O(" + format_slope(f.slope) + ")";
    if (f.mult > 1) out += "^" + std::to_string(f.mult);
  }
  return out;
}

}  // namespace hnp
