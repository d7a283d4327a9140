#include <cctype>

#include "mccool/automorphism.hpp"
#include "mccool/error.hpp"

namespace mccool {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  GroupExpression parse() {
    GroupExpression out(rank_);
    skip_separators();
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      AutGenerator g = generator();
      int exponent = 1;
      if (peek() == '^') {
        ++pos_;
        if (peek() == '-') {
          ++pos_;
          exponent = -1;
        } else if (peek() == '+') {
          ++pos_;
        }
        expect('1');
      }
      if (pos_ < text_.size() && !is_separator(text_[pos_])) {
        throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
      }
      try {
        out.append(g, exponent);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), start);
      }
      skip_separators();
    }
    return out;
  }

 private:
  static bool is_separator(char c) {
    return c == '*' || std::isspace(static_cast<unsigned char>(c));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_separators() {
    while (pos_ < text_.size() && is_separator(text_[pos_])) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool consume(std::string_view keyword) {
    if (text_.substr(pos_, keyword.size()) == keyword) {
      pos_ += keyword.size();
      return true;
    }
    return false;
  }

  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an index", pos_);
    }
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("index too large", pos_);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  AutGenerator generator() {
    if (consume("th[")) {
      const int k = number();
      expect(';');
      const int s = number();
      expect(',');
      const int t = number();
      expect(']');
      return Theta{k, s, t};
    }
    if (consume("tau[")) {
      const int i = number();
      expect(']');
      return Tau{i};
    }
    if (consume("xi[")) {
      const int i = number();
      expect(']');
      return Xi{i};
    }
    if (consume("delta")) return Delta{};
    if (consume("c[")) {
      const int k = number();
      expect(',');
      const int i = number();
      expect(']');
      return Chi{k, i};
    }
    if (consume("s[")) {
      const int i = number();
      expect(']');
      return Sigma{i};
    }
    throw ParseError("unknown generator", pos_);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpression parse_expression(std::string_view text, int rank) {
  return ExpressionParser(text, rank).parse();
}

std::string format_generator(const AutGenerator& g) {
  struct Formatter {
    std::string operator()(const Chi& c) const {
      return "c[" + std::to_string(c.k) + "," + std::to_string(c.i) + "]";
    }
    std::string operator()(const Theta& t) const {
      return "th[" + std::to_string(t.k) + ";" + std::to_string(t.s) + "," +
             std::to_string(t.t) + "]";
    }
    std::string operator()(const Xi& g) const { return "xi[" + std::to_string(g.i) + "]"; }
    std::string operator()(const Tau& g) const { return "tau[" + std::to_string(g.i) + "]"; }
    std::string operator()(const Delta&) const { return "delta"; }
    std::string operator()(const Sigma& g) const { return "s[" + std::to_string(g.i) + "]"; }
  };
  return std::visit(Formatter{}, g);
}

std::string format_expression(const GroupExpression& e) {
  std::string out;
  for (const Factor& f : e.factors()) {
    if (!out.empty()) out += " * ";
    out += format_generator(f.generator);
    if (f.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace mccool
