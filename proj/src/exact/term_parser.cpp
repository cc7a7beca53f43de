#include "term_parser.hpp"

#include <cctype>

#include "solvcohom/errors.hpp"

namespace solvcohom::detail {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("offset " + std::to_string(pos_), what + " in \"" + std::string(text_) + "\"");
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= text_.size() || !is_start(text_[pos_])) fail("expected a number or symbol");
    while (pos_ < text_.size() && is_body(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void parse_factor(Scanner& s, Term& term, int& i_power) {
  if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
    mpq_class value(mpz_class(s.digits()));
    if (s.accept('/')) {
      mpz_class den(s.digits());
      if (den == 0) s.fail("zero denominator");
      value /= mpq_class(den);
    }
    term.coeff *= value;
    return;
  }
  std::size_t at = s.pos();
  std::string name = s.identifier();
  if (name == "i") {
    ++i_power;
    return;
  }
  if (term.symbol) {
    throw ParseError("offset " + std::to_string(at),
                     "product of two symbols (" + *term.symbol + "*" + name + ") is not allowed");
  }
  term.symbol = std::move(name);
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text) {
  Scanner s(text);
  std::vector<Term> terms;
  if (s.done()) s.fail("empty expression");
  bool first = true;
  while (!s.done()) {
    bool negative = false;
    if (s.accept('+')) {
    } else if (s.accept('-')) {
      negative = true;
    } else if (!first) {
      s.fail("expected '+' or '-'");
    }
    first = false;

    Term term;
    term.position = s.pos();
    int i_power = 0;
    parse_factor(s, term, i_power);
    while (s.accept('*')) parse_factor(s, term, i_power);

    if (negative) term.coeff = -term.coeff;
    if (i_power % 4 >= 2) term.coeff = -term.coeff;
    term.times_i = (i_power % 2) == 1;
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace solvcohom::detail
