#include "slantlab/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "slantlab/json_io.hpp"

namespace slantlab {

namespace {

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind;
  std::string text;
  double value = 0.0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : in_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept_symbol(char c) {
    if (current_.kind == Token::Symbol && current_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_symbol(char c) {
    if (!accept_symbol(c))
      throw std::invalid_argument(std::string("symbol parse error: expected '") +
                                  c + "'");
  }

 private:
  void advance() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_])))
      ++pos_;
    if (pos_ >= in_.size()) {
      current_ = {Token::End, "", 0.0};
      return;
    }
    const char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      while (end < in_.size() &&
             (std::isdigit(static_cast<unsigned char>(in_[end])) ||
              in_[end] == '.' || in_[end] == 'e' || in_[end] == 'E' ||
              ((in_[end] == '+' || in_[end] == '-') && end > pos_ &&
               (in_[end - 1] == 'e' || in_[end - 1] == 'E'))))
        ++end;
      const std::string text = in_.substr(pos_, end - pos_);
      pos_ = end;
      current_ = {Token::Number, text, std::stod(text)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < in_.size() &&
             std::isalpha(static_cast<unsigned char>(in_[end])))
        ++end;
      current_ = {Token::Ident, in_.substr(pos_, end - pos_), 0.0};
      pos_ = end;
      return;
    }
    current_ = {Token::Symbol, std::string(1, c), 0.0};
    ++pos_;
  }

  std::string in_;
  std::size_t pos_ = 0;
  Token current_{Token::End, "", 0.0};
};

int parse_exponent(Lexer& lex) {
  if (!lex.accept_symbol('^')) return 1;
  const Token t = lex.take();
  if (t.kind != Token::Number)
    throw std::invalid_argument("symbol parse error: exponent must be a number");
  const double v = t.value;
  const int n = static_cast<int>(v);
  if (v != n || n < 0)
    throw std::invalid_argument("symbol parse error: exponent must be a nonnegative integer");
  return n;
}

// number ['i'] | 'i' | '(' number [('+'|'-') number 'i'] ')'
Complex parse_complex_literal(Lexer& lex) {
  if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
    lex.take();
    return Complex(0.0, 1.0);
  }
  if (lex.peek().kind == Token::Number) {
    const double v = lex.take().value;
    if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
      lex.take();
      return Complex(0.0, v);
    }
    return Complex(v, 0.0);
  }
  if (lex.accept_symbol('(')) {
    double re = 0.0, im = 0.0;
    double sign = lex.accept_symbol('-') ? -1.0 : 1.0;
    if (lex.peek().kind != Token::Number)
      throw std::invalid_argument("symbol parse error: bad complex literal");
    double first = sign * lex.take().value;
    bool first_imag = false;
    if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
      lex.take();
      first_imag = true;
    }
    if (first_imag)
      im = first;
    else
      re = first;
    if (lex.peek().kind == Token::Symbol &&
        (lex.peek().text[0] == '+' || lex.peek().text[0] == '-')) {
      const double s2 = lex.take().text[0] == '-' ? -1.0 : 1.0;
      if (lex.peek().kind != Token::Number)
        throw std::invalid_argument("symbol parse error: bad complex literal");
      const double second = s2 * lex.take().value;
      if (lex.peek().kind == Token::Ident && lex.peek().text == "i")
        lex.take();
      else
        throw std::invalid_argument(
            "symbol parse error: second component of a complex literal must be imaginary");
      im = second;
    }
    lex.expect_symbol(')');
    return Complex(re, im);
  }
  throw std::invalid_argument("symbol parse error: expected a complex literal");
}

// 'z' ['^' n] -> frequency n; 'conj' '(' 'z' ')' ['^' n] -> frequency -n.
bool try_parse_atom(Lexer& lex, int* freq) {
  if (lex.peek().kind != Token::Ident) return false;
  if (lex.peek().text == "z") {
    lex.take();
    *freq = parse_exponent(lex);
    return true;
  }
  if (lex.peek().text == "conj") {
    lex.take();
    lex.expect_symbol('(');
    const Token t = lex.take();
    if (t.kind != Token::Ident || t.text != "z")
      throw std::invalid_argument("symbol parse error: conj() takes z");
    lex.expect_symbol(')');
    *freq = -parse_exponent(lex);
    return true;
  }
  return false;
}

// factor := complex-literal | atom ; term := factor ('*' factor)*
void parse_term(Lexer& lex, Complex* coeff, int* freq) {
  *coeff = Complex(1.0, 0.0);
  *freq = 0;
  bool any = false;
  for (;;) {
    int f = 0;
    if (try_parse_atom(lex, &f)) {
      *freq += f;
    } else {
      *coeff *= parse_complex_literal(lex);
    }
    any = true;
    if (!lex.accept_symbol('*')) break;
  }
  if (!any) throw std::invalid_argument("symbol parse error: empty term");
}

CircleFunction parse_shorthand(const std::string& spec, int band) {
  Lexer lex(spec);
  CircleFunction f(band);
  bool first = true;
  while (lex.peek().kind != Token::End) {
    double sign = 1.0;
    if (lex.accept_symbol('-'))
      sign = -1.0;
    else if (lex.accept_symbol('+'))
      sign = 1.0;
    else if (!first)
      throw std::invalid_argument("symbol parse error: expected '+' or '-'");
    Complex coeff;
    int freq = 0;
    parse_term(lex, &coeff, &freq);
    if (freq < -band || freq > band)
      throw std::invalid_argument("symbol parse error: frequency outside band");
    f.set_coeff(freq, f.coeff(freq) + sign * coeff);
    first = false;
  }
  if (first) throw std::invalid_argument("symbol parse error: empty input");
  return f;
}

bool looks_like_file(const std::string& spec) {
  std::ifstream in(spec);
  return in.good();
}

Json load_json(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') return Json::parse(spec);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open JSON file: " + spec);
  Json j;
  in >> j;
  return j;
}

}  // namespace

CircleFunction parse_symbol(const std::string& spec, int band) {
  if (!spec.empty() && (spec[0] == '{' || looks_like_file(spec))) {
    CircleFunction f = circle_fn_from_json(load_json(spec));
    return f.band() == band ? f : rebanded(f, band);
  }
  return parse_shorthand(spec, band);
}

FiniteBlaschke parse_inner(const std::string& spec) {
  if (!spec.empty() && (spec[0] == '{' || looks_like_file(spec)))
    return blaschke_from_json(load_json(spec));
  Lexer lex(spec);
  const Token t = lex.take();
  if (t.kind == Token::Ident && t.text == "z") {
    const int n = parse_exponent(lex);
    if (lex.peek().kind != Token::End)
      throw std::invalid_argument("inner function parse error: trailing input");
    return FiniteBlaschke::power(n);
  }
  throw std::invalid_argument(
      "inner function parse error: expected \"z^N\", inline JSON or a JSON file");
}

}  // namespace slantlab
