#include "unitri/text.hpp"

#include <cctype>

#include "unitri/error.hpp"

namespace unitri {

namespace {

enum class Tok { number, slash, plus, minus, caret, star, var, der, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;  // digits for number/var/der
  SourcePos pos;
};

class Lexer {
 public:
  Lexer(std::string_view src, SourcePos origin) : src_(src), pos_(origin) {}

  Token next() {
    skip_space();
    Token tok;
    tok.pos = pos_;
    if (i_ >= src_.size()) return tok;
    const char ch = src_[i_];
    auto single = [&](Tok k) {
      advance();
      tok.kind = k;
      return tok;
    };
    switch (ch) {
      case '/': return single(Tok::slash);
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '^': return single(Tok::caret);
      case '*': return single(Tok::star);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      tok.kind = Tok::number;
      tok.text = digits();
      return tok;
    }
    if (ch == 'x' || ch == 'd') {
      advance();
      tok.kind = ch == 'x' ? Tok::var : Tok::der;
      if (i_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
        throw ParseError(std::string("expected an index after '") + ch + "'", pos_.line, pos_.column);
      tok.text = digits();
      return tok;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_.line, pos_.column);
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
  }
  std::string digits() {
    std::string out;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      out.push_back(src_[i_]);
      advance();
    }
    return out;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

std::size_t to_index(const Token& tok) {
  if (tok.text.size() > 9) throw ParseError("index too large", tok.pos.line, tok.pos.column);
  return static_cast<std::size_t>(std::stoul(tok.text));
}

struct ParsedTerm {
  Scalar coeff = 1;
  std::vector<Exponent> exps;
  std::size_t der = 0;  // 0 = no dK factor
  SourcePos pos;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t n, bool derivation, SourcePos origin)
      : lex_(src, origin), n_(n), derivation_(derivation) {
    tok_ = lex_.next();
  }

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    if (tok_.kind == Tok::end) fail("empty expression");
    int sign = 1;
    if (tok_.kind == Tok::minus || tok_.kind == Tok::plus) {
      sign = tok_.kind == Tok::minus ? -1 : 1;
      bump();
    }
    for (;;) {
      ParsedTerm t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (tok_.kind == Tok::end) break;
      if (tok_.kind != Tok::plus && tok_.kind != Tok::minus) fail("expected '+' or '-'");
      sign = tok_.kind == Tok::minus ? -1 : 1;
      bump();
    }
    return terms;
  }

 private:
  void bump() { tok_ = lex_.next(); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_.pos.line, tok_.pos.column); }

  ParsedTerm term() {
    ParsedTerm t;
    t.pos = tok_.pos;
    t.exps.assign(n_, 0);
    bool any = false;
    if (tok_.kind == Tok::number) {
      Integer num(tok_.text, 10);
      Integer den(1);
      bump();
      if (tok_.kind == Tok::slash) {
        bump();
        if (tok_.kind != Tok::number) fail("expected a denominator after '/'");
        den = Integer(tok_.text, 10);
        if (den == 0) fail("zero denominator");
        bump();
      }
      t.coeff = Scalar(num, den);
      t.coeff.canonicalize();
      any = true;
    }
    for (;;) {
      if (tok_.kind == Tok::star) {
        if (!any) fail("unexpected '*'");
        bump();
        if (tok_.kind != Tok::var && tok_.kind != Tok::der) fail("expected a factor after '*'");
      }
      if (tok_.kind == Tok::var) {
        const std::size_t k = to_index(tok_);
        if (k == 0 || k > n_) fail("variable x" + tok_.text + " out of range for n = " + std::to_string(n_));
        bump();
        Exponent e = 1;
        if (tok_.kind == Tok::caret) {
          bump();
          if (tok_.kind != Tok::number) fail("expected an exponent after '^'");
          if (tok_.text.size() > 9) fail("exponent too large");
          e = static_cast<Exponent>(std::stoul(tok_.text));
          bump();
        }
        t.exps[k - 1] += e;
        any = true;
        continue;
      }
      if (tok_.kind == Tok::der) {
        if (!derivation_) fail("derivation symbol d" + tok_.text + " in a polynomial");
        const std::size_t k = to_index(tok_);
        if (k == 0 || k > n_) fail("derivation d" + tok_.text + " out of range for n = " + std::to_string(n_));
        for (std::size_t v = k; v <= n_; ++v)
          if (t.exps[v - 1] != 0)
            throw ParseError("coefficient of d" + std::to_string(k) + " may only involve x1..x" +
                                 std::to_string(k - 1),
                             t.pos.line, t.pos.column);
        t.der = k;
        bump();
        return t;
      }
      break;
    }
    if (!any) fail("expected a term");
    if (tok_.kind == Tok::number) fail("unexpected number");
    if (derivation_ && t.coeff != 0) throw ParseError("term lacks a dK factor", t.pos.line, t.pos.column);
    return t;
  }

  Lexer lex_;
  Token tok_;
  std::size_t n_;
  bool derivation_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n, SourcePos origin) {
  Parser parser(text, n, false, origin);
  std::vector<Polynomial::Term> terms;
  for (auto& t : parser.parse()) terms.emplace_back(Monomial(std::move(t.exps)), t.coeff);
  return Polynomial::from_terms(n, std::move(terms));
}

UniDerivation parse_derivation(std::string_view text, std::size_t n, SourcePos origin) {
  Parser parser(text, n, true, origin);
  std::vector<std::vector<Polynomial::Term>> slots(n);
  for (auto& t : parser.parse()) {
    if (t.der == 0) continue;  // a bare zero term
    slots[t.der - 1].emplace_back(Monomial(std::move(t.exps)), t.coeff);
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (auto& s : slots) coeffs.push_back(Polynomial::from_terms(n, std::move(s)));
  return UniDerivation(std::move(coeffs));
}

std::size_t infer_variable_count(std::string_view text, SourcePos origin) {
  Lexer lex(text, origin);
  std::size_t best = 0;
  for (Token tok = lex.next(); tok.kind != Tok::end; tok = lex.next())
    if (tok.kind == Tok::var || tok.kind == Tok::der) best = std::max(best, to_index(tok));
  return best;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    const Exponent e = m.exponent(k);
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(k);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Appends one signed term; `suffix` is the optional trailing dK symbol.
void append_term(std::string& out, const Monomial& m, const Scalar& c, const std::string& suffix) {
  const bool negative = c < 0;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Scalar mag = negative ? Scalar(-c) : c;
  std::string body;
  if (mag != 1 || (m.is_one() && suffix.empty())) body = to_string(mag);
  if (!m.is_one()) body += (body.empty() ? "" : " ") + to_string(m);
  if (!suffix.empty()) body += (body.empty() ? "" : " ") + suffix;
  out += body;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) append_term(out, m, c, "");
  return out.empty() ? "0" : out;
}

std::string to_string(const UniDerivation& d) {
  std::string out;
  for (std::size_t j = 1; j <= d.ambient(); ++j) {
    const std::string sym = "d" + std::to_string(j);
    for (const auto& [m, c] : d.coefficient(j).terms()) append_term(out, m, c, sym);
  }
  return out.empty() ? "0" : out;
}

}  // namespace unitri
