#include "fbeta/text.hpp"

#include <cctype>
#include <deque>
#include <sstream>

namespace fbeta {

namespace {

const ParamTable& table_or_base(const ParamTablePtr& pt) {
  static const ParamTable base{};
  return pt ? *pt : base;
}

std::string render_exponent(const Rat& e) {
  if (e == 1) return "";
  std::string body = e.get_str();
  if (e.get_den() == 1) return "^" + body;
  return "^(" + body + ")";
}

std::string render_term(const Monomial& m, const Rat& abs_coeff,
                        const ParamTable& pt) {
  if (m.is_one()) return abs_coeff.get_str();
  std::string out;
  if (abs_coeff != 1) out = abs_coeff.get_str();
  for (const auto& [id, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += pt.spec(id).name + render_exponent(e);
  }
  return out;
}

struct Tok {
  enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  const Tok& peek(size_t ahead = 0) {
    while (buf_.size() <= ahead) buf_.push_back(lex());
    return buf_[ahead];
  }

  Tok take() {
    peek();
    Tok t = buf_.front();
    buf_.pop_front();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw ParseError(msg, line, col);
  }

  char cur() const { return s_[i_]; }
  bool done() const { return i_ >= s_.size(); }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  Tok lex() {
    while (!done() && std::isspace(static_cast<unsigned char>(cur()))) advance();
    int line = line_, col = col_;
    if (done()) return {Tok::End, "", line, col};
    char c = cur();
    switch (c) {
      case '+': advance(); return {Tok::Plus, "+", line, col};
      case '-': advance(); return {Tok::Minus, "-", line, col};
      case '*': advance(); return {Tok::Star, "*", line, col};
      case '/': advance(); return {Tok::Slash, "/", line, col};
      case '^': advance(); return {Tok::Caret, "^", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
        text += cur();
        advance();
      }
      return {Tok::Num, text, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) ||
                         cur() == '_' || cur() == '\'')) {
        text += cur();
        advance();
      }
      if (!done() && cur() == '[') {
        // Bracketed index list is part of the parameter name; canonicalize
        // by stripping interior whitespace.
        text += '[';
        advance();
        bool expect_int = true;
        while (true) {
          if (done()) fail("unterminated parameter index list", line, col);
          char d = cur();
          if (std::isspace(static_cast<unsigned char>(d))) {
            advance();
            continue;
          }
          if (d == ']') {
            if (expect_int) fail("empty parameter index", line_, col_);
            text += ']';
            advance();
            break;
          }
          if (d == ',') {
            if (expect_int) fail("empty parameter index", line_, col_);
            text += ',';
            expect_int = true;
            advance();
            continue;
          }
          if (d == '-' || std::isdigit(static_cast<unsigned char>(d))) {
            text += d;
            expect_int = false;
            advance();
            continue;
          }
          fail(std::string("unexpected character '") + d +
                   "' in parameter index",
               line_, col_);
        }
      }
      return {Tok::Ident, text, line, col};
    }
    fail(std::string("unexpected character '") + c + "'", line, col);
  }

  std::string_view s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  std::deque<Tok> buf_;
};

class Parser {
 public:
  Parser(std::string_view text, const ParamTablePtr& pt)
      : lx_(text), pt_(pt), tab_(table_or_base(pt)) {}

  FieldElem element() {
    LaurentPoly num;
    if (lx_.peek().kind == Tok::LParen) {
      lx_.take();
      num = poly();
      expect(Tok::RParen, "')'");
    } else {
      num = poly();
    }
    if (lx_.peek().kind == Tok::Slash) {
      lx_.take();
      expect(Tok::LParen, "'('");
      LaurentPoly den = poly();
      expect(Tok::RParen, "')'");
      expect(Tok::End, "end of input");
      return FieldElem::fraction(std::move(num), std::move(den));
    }
    expect(Tok::End, "end of input");
    return FieldElem::from_poly(std::move(num));
  }

 private:
  void expect(Tok::Kind k, const char* what) {
    Tok t = lx_.take();
    if (t.kind != k)
      throw ParseError(std::string("expected ") + what, t.line, t.col);
  }

  Rat num_token_value(const Tok& t) { return Rat(t.text); }

  // rational := integer [ '/' posint ]; the integer part was already taken.
  Rat rational_tail(Rat head) {
    if (lx_.peek().kind == Tok::Slash && lx_.peek(1).kind == Tok::Num) {
      lx_.take();
      Tok d = lx_.take();
      Rat den = num_token_value(d);
      if (den == 0) throw ParseError("zero denominator", d.line, d.col);
      head /= den;
    }
    return head;
  }

  Rat signed_rational() {
    bool neg = false;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      neg = true;
    }
    Tok t = lx_.take();
    if (t.kind != Tok::Num)
      throw ParseError("expected number in exponent", t.line, t.col);
    Rat r = rational_tail(num_token_value(t));
    return neg ? -r : r;
  }

  Rat exponent() {
    if (lx_.peek().kind == Tok::LParen) {
      lx_.take();
      Rat r = signed_rational();
      expect(Tok::RParen, "')'");
      return r;
    }
    return signed_rational();
  }

  // term := factor ('*' factor)*; returns coefficient and raw factors.
  std::pair<Rat, std::vector<std::pair<int, Rat>>> term() {
    Rat coeff(1);
    std::vector<std::pair<int, Rat>> factors;
    while (true) {
      Tok t = lx_.take();
      if (t.kind == Tok::Num) {
        coeff *= rational_tail(num_token_value(t));
      } else if (t.kind == Tok::Ident) {
        int id = tab_.find(t.text);
        if (id < 0) {
          std::ostringstream os;
          os << "unknown parameter '" << t.text << "' at " << t.line << ":"
             << t.col;
          throw ConfigError(os.str());
        }
        Rat e(1);
        if (lx_.peek().kind == Tok::Caret) {
          lx_.take();
          e = exponent();
        }
        factors.push_back({id, e});
      } else {
        throw ParseError("expected a number or parameter", t.line, t.col);
      }
      if (lx_.peek().kind == Tok::Star) {
        lx_.take();
        continue;
      }
      break;
    }
    return {std::move(coeff), std::move(factors)};
  }

  LaurentPoly poly() {
    LaurentPoly p = LaurentPoly::constant(0, pt_);
    int sign = +1;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      sign = -1;
    }
    while (true) {
      auto [coeff, factors] = term();
      int msign = +1;
      Monomial m = mono_make(std::move(factors), tab_, msign);
      p.add_term(m, coeff * sign * msign);
      Tok::Kind k = lx_.peek().kind;
      if (k == Tok::Plus) {
        lx_.take();
        sign = +1;
      } else if (k == Tok::Minus) {
        lx_.take();
        sign = -1;
      } else {
        break;
      }
    }
    return p;
  }

  Lexer lx_;
  ParamTablePtr pt_;
  const ParamTable& tab_;
};

}  // namespace

std::string render(const Rat& c) { return c.get_str(); }

std::string render(const Monomial& m, const ParamTable& pt) {
  return render_term(m, Rat(1), pt);
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const ParamTable& pt = table_or_base(p.table());
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << render_term(m, abs(c), pt);
  }
  return os.str();
}

std::string render(const FieldElem& x) {
  if (x.is_zero()) return "0";
  if (x.den().is_one()) return render(x.num());
  std::string num = x.num().size() > 1 ? "(" + render(x.num()) + ")"
                                       : render(x.num());
  return num + " / (" + render(x.den()) + ")";
}

FieldElem parse_scalar(std::string_view text, const ParamTablePtr& pt) {
  Parser parser(text, pt);
  return parser.element();
}

}  // namespace fbeta
