#include "isl/parser.hpp"

#include <cctype>

namespace isl {

namespace {

enum class Tok { End, Ident, False, Not, Box, And, Or, Imp, LParen, RParen, Comma, Semi, Arrow };

struct Token {
  Tok kind;
  std::size_t start, end;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  bool match(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t start = pos_;
    auto emit = [&](Tok k) { cur_ = Token{k, start, pos_, std::string(s_.substr(start, pos_ - start))}; };
    if (pos_ >= s_.size()) return emit(Tok::End);
    if (match("->") || match("→")) return emit(Tok::Imp);
    if (match("=>") || match("⇒")) return emit(Tok::Arrow);
    if (match("[]") || match("□")) return emit(Tok::Box);
    if (match("~") || match("¬")) return emit(Tok::Not);
    if (match("&") || match("∧")) return emit(Tok::And);
    if (match("|") || match("∨")) return emit(Tok::Or);
    if (match("⊥")) return emit(Tok::False);
    if (match("(")) return emit(Tok::LParen);
    if (match(")")) return emit(Tok::RParen);
    if (match(",")) return emit(Tok::Comma);
    if (match(";")) return emit(Tok::Semi);
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size()) {
        char d = s_[pos_];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_' && d != '\'') break;
        ++pos_;
      }
      emit(Tok::Ident);
      if (cur_.text == "false") cur_.kind = Tok::False;
      return;
    }
    // one UTF-8 code point
    ++pos_;
    while (pos_ < s_.size() && (static_cast<unsigned char>(s_[pos_]) & 0xC0) == 0x80) ++pos_;
    throw ParseError("unexpected character '" + std::string(s_.substr(start, pos_ - start)) + "'",
                     {start, pos_});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, 0, {}};
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s), len_(s.size()) {}

  Formula formula() {
    Formula lhs = disjunction();
    if (lex_.peek().kind == Tok::Imp) {
      lex_.take();
      return imp(lhs, formula());
    }
    return lhs;
  }

  Multiset formula_list() {
    Multiset out;
    if (!starts_formula()) return out;
    out.push_back(formula());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      out.push_back(formula());
    }
    return out;
  }

  std::optional<Formula> succedent() {
    expect(Tok::Arrow, "expected '=>'");
    std::optional<Formula> succ;
    if (starts_formula()) succ = formula();
    if (lex_.peek().kind == Tok::Comma) {
      const Token& t = lex_.peek();
      throw ParseError("more than one succedent formula", {t.start, len_});
    }
    return succ;
  }

  void finish() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError("unexpected '" + t.text + "'", {t.start, t.end});
  }

  Tok peek_kind() const { return lex_.peek().kind; }
  void take() { lex_.take(); }

 private:
  bool starts_formula() const {
    switch (lex_.peek().kind) {
      case Tok::Ident: case Tok::False: case Tok::Not: case Tok::Box: case Tok::LParen: return true;
      default: return false;
    }
  }

  void expect(Tok k, const char* msg) {
    const Token& t = lex_.peek();
    if (t.kind != k) throw ParseError(msg, {t.start, t.kind == Tok::End ? len_ : t.end});
    lex_.take();
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Not: lex_.take(); return neg(unary());
      case Tok::Box: lex_.take(); return box(unary());
      case Tok::False: lex_.take(); return bot();
      case Tok::Ident: lex_.take(); return atom(t.text);
      case Tok::LParen: {
        lex_.take();
        Formula f = formula();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", {t.start, len_});
      default: throw ParseError("expected a formula, found '" + t.text + "'", {t.start, t.end});
    }
  }

  Lexer lex_;
  std::size_t len_;
};

int precedence(Formula f) {
  switch (f.kind()) {
    case Kind::Imp: return f.right().is_bottom() ? 4 : 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

void render_into(Formula f, std::string& out);

void render_child(Formula f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(Formula f, std::string& out) {
  switch (f.kind()) {
    case Kind::Bottom: out += "false"; return;
    case Kind::Atom: out += f.name(); return;
    case Kind::Box:
      out += "[]";
      render_child(f.inner(), precedence(f.inner()) < 4, out);
      return;
    case Kind::Imp:
      if (f.right().is_bottom()) {
        out += '~';
        render_child(f.left(), precedence(f.left()) < 4, out);
        return;
      }
      render_child(f.left(), precedence(f.left()) <= 1, out);
      out += " -> ";
      render_into(f.right(), out);
      return;
    case Kind::Or:
    case Kind::And: {
      int p = precedence(f);
      render_child(f.left(), precedence(f.left()) < p, out);
      out += f.is_or() ? " | " : " & ";
      render_child(f.right(), precedence(f.right()) <= p, out);
      return;
    }
  }
}

}  // namespace

Sequent SplitSequent::whole() const {
  Multiset all = left;
  all.insert(all.end(), right.begin(), right.end());
  return Sequent(std::move(all), succ);
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Multiset ante = p.formula_list();
  auto succ = p.succedent();
  p.finish();
  return Sequent(std::move(ante), succ);
}

SplitSequent parse_split(std::string_view text) {
  Parser p(text);
  SplitSequent s;
  s.left = p.formula_list();
  if (p.peek_kind() != Tok::Semi) throw ParseError("expected ';' separating the two parts", {0, text.size()});
  p.take();
  s.right = p.formula_list();
  s.succ = p.succedent();
  p.finish();
  sort_multiset(s.left);
  sort_multiset(s.right);
  return s;
}

std::string render(Formula f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const Multiset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    render_into(m[i], out);
  }
  return out;
}

std::string render(const Sequent& s) {
  std::string out = render(s.ante);
  out += out.empty() ? "=>" : " =>";
  if (s.succ) out += " " + render(*s.succ);
  return out;
}

std::string render(const SplitSequent& s) {
  std::string out = render(s.left);
  out += out.empty() ? ";" : " ;";
  std::string r = render(s.right);
  if (!r.empty()) out += " " + r;
  out += " =>";
  if (s.succ) out += " " + render(*s.succ);
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string format_diagnostic(std::string_view input, const ParseError& e) {
  std::string out(input);
  out += '\n';
  out += std::string(e.span.start, ' ');
  out += std::string(std::max<std::size_t>(1, e.span.end - e.span.start), '^');
  out += ' ';
  out += e.what();
  return out;
}

}  // namespace isl
