#include <cctype>
#include <string>

#include "qspin/error.hpp"
#include "qspin/scalar.hpp"

namespace qspin {

namespace {

// Map the accepted non-ASCII spellings onto ASCII.
std::string ascii_fold(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size();) {
    auto match = [&](std::string_view s) { return in.substr(i, s.size()) == s; };
    if (match("Δ")) { out += 'D'; i += std::string_view("Δ").size(); }
    else if (match("δ")) { out += 'd'; i += std::string_view("δ").size(); }
    else if (match("−")) { out += '-'; i += std::string_view("−").size(); }
    else if (match("·")) { out += '*'; i += std::string_view("·").size(); }
    else if (match("⁻¹")) { out += "^-1"; i += std::string_view("⁻¹").size(); }
    else { out += in[i]; ++i; }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  ScalarK parse() {
    ScalarK r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) error("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  long signed_integer() {
    bool negative = false;
    while (true) {
      if (eat('-')) negative = !negative;
      else if (!eat('+')) break;
    }
    long v = integer();
    return negative ? -v : v;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  ScalarK expr() {
    ScalarK acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '[' || c == '{';
  }

  ScalarK term() {
    ScalarK acc = unary();
    while (true) {
      if (eat('*')) acc = acc * unary();
      else if (eat('/')) acc = acc / unary();
      else if (starts_primary()) acc = acc * power();
      else return acc;
    }
  }

  ScalarK unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  ScalarK power() {
    ScalarK base = primary();
    if (eat('^')) {
      long e;
      if (eat('(')) {
        e = signed_integer();
        expect(')');
      } else {
        e = signed_integer();
      }
      if (e > 10000 || e < -10000) error("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  // b n + a inside [..] or {..}.
  std::pair<long, long> linear_form(char close) {
    long b = 0, a = 0;
    bool first = true;
    while (peek() != close) {
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (!eat('+') && !first) error("expected '+' or '-'");
      first = false;
      long coeff = 1;
      bool has_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = integer();
        has_number = true;
      }
      if (peek() == 'n') {
        ++pos_;
        b += sign * coeff;
      } else {
        if (!has_number) error("expected an integer or n");
        a += sign * coeff;
      }
    }
    expect(close);
    return {b, a};
  }

  ScalarK primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ScalarK(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (eat('(')) {
      ScalarK r = expr();
      expect(')');
      return r;
    }
    if (eat('[')) {
      auto [b, a] = linear_form(']');
      return ScalarK::qint(static_cast<int>(b), static_cast<int>(a));
    }
    if (eat('{')) {
      auto [b, a] = linear_form('}');
      if (b == 0) return ScalarK::brace(static_cast<int>(a));
      if (b == 1) return ScalarK::brace_shifted(static_cast<int>(-a));
      error("brace symbols take the form {k} or {n-k}");
    }
    std::string id = identifier();
    if (id == "q") return ScalarK::q();
    if (id == "z") return ScalarK::z();
    if (id == "D" || id == "Delta") return ScalarK::Delta();
    if (id == "d" || id == "delta") return ScalarK::delta();
    if (id == "u") return ScalarK::u();
    if (id == "v") return ScalarK::v();
    if (id == "qint") {
      expect('(');
      long b = signed_integer();
      expect(',');
      long a = signed_integer();
      expect(')');
      return ScalarK::qint(static_cast<int>(b), static_cast<int>(a));
    }
    if (id == "brace" || id == "brace_shifted") {
      expect('(');
      long k = signed_integer();
      expect(')');
      return id == "brace" ? ScalarK::brace(static_cast<int>(k)) : ScalarK::brace_shifted(static_cast<int>(k));
    }
    if (id.empty()) error("expected an expression");
    error("unknown identifier '" + id + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarK parse_scalar(std::string_view text) { return Parser(ascii_fold(text)).parse(); }

}  // namespace qspin
