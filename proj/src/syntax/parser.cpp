#include "cobcoh/parser.hpp"

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "cobcoh/typecheck.hpp"

namespace cobcoh {

namespace {

constexpr std::size_t kMaxNesting = 2000;

constexpr std::array<std::string_view, 17> kReserved = {
    "I",     "x",     "id",    "alpha", "alpha'", "lambda",
    "lambda'", "sigma", "eta", "eps",   "inj1",   "inj2",
    "proj1", "proj2", "zero",  "hom",   "dg"};

enum class Tok {
  Ident,
  Zero,
  Tensor,   // (x)
  Oplus,    // (+)
  Lolli,    // -o
  Star,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Semi,
  Plus,
  End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::Tensor: return "'(x)'";
    case Tok::Oplus: return "'(+)'";
    case Tok::Lolli: return "'-o'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Semi: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text, Position origin) {
  std::vector<Token> out;
  Position pos = origin;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Position start = pos;
    auto rest = text.substr(i);
    if (rest.starts_with("(x)")) {
      out.push_back({Tok::Tensor, "(x)", start});
      advance(3);
    } else if (rest.starts_with("(+)")) {
      out.push_back({Tok::Oplus, "(+)", start});
      advance(3);
    } else if (rest.starts_with("-o")) {
      out.push_back({Tok::Lolli, "-o", start});
      advance(2);
    } else if (ident_start(c)) {
      std::size_t n = 1;
      while (n < rest.size() && ident_char(rest[n])) ++n;
      if (n < rest.size() && rest[n] == '\'') ++n;
      out.push_back({Tok::Ident, std::string(rest.substr(0, n)), start});
      advance(n);
    } else {
      Tok k;
      switch (c) {
        case '0': k = Tok::Zero; break;
        case '*': k = Tok::Star; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case ',': k = Tok::Comma; break;
        case '.': k = Tok::Dot; break;
        case ';': k = Tok::Semi; break;
        case '+': k = Tok::Plus; break;
        default:
          throw SyntaxError(start,
                            std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), start});
      advance(1);
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts)
      : toks_(lex(text, opts.origin)), opts_(opts) {}

  Object object_expr() { return lolli_level(); }

  Arrow arrow_expr() { return sum_level(); }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw SyntaxError(peek().pos, std::string("unexpected ") +
                                        describe(peek().kind) + " '" +
                                        peek().text + "'");
  }

 private:
  struct NestingGuard {
    explicit NestingGuard(Parser& p) : p(p) {
      if (++p.nesting_ > kMaxNesting)
        throw SyntaxError(p.peek().pos, "expression nested too deeply");
    }
    ~NestingGuard() { --p.nesting_; }
    Parser& p;
  };

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(cur_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++cur_;
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k)
      throw SyntaxError(peek().pos, std::string("expected ") + describe(k) +
                                        ", found " + describe(peek().kind));
    return toks_[cur_++];
  }
  [[noreturn]] void mode_violation(const Position& pos, const std::string& m) {
    throw ModeError(to_string(pos) + ": " + m);
  }

  // ---- objects: -o (right, lowest) < (+) < (x) < postfix * ----

  Object lolli_level() {
    std::vector<std::pair<Object, Position>> parts;
    parts.emplace_back(oplus_level(), peek().pos);
    while (peek().kind == Tok::Lolli) {
      Position pos = peek().pos;
      ++cur_;
      if (opts_.mode != Mode::Smcb)
        mode_violation(pos, "-o is not allowed in " +
                                std::string(to_string(opts_.mode)));
      parts.emplace_back(oplus_level(), pos);
    }
    Object acc = parts.back().first;
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      acc = Object::lollipop(parts[i].first, acc);
    return acc;
  }

  Object oplus_level() {
    Object acc = tensor_level();
    while (accept(Tok::Oplus)) acc = Object::oplus(acc, tensor_level());
    return acc;
  }

  Object tensor_level() {
    Object acc = postfix_level();
    while (accept(Tok::Tensor)) acc = Object::tensor(acc, postfix_level());
    return acc;
  }

  Object postfix_level() {
    Object acc = object_atom();
    while (peek().kind == Tok::Star) {
      Position pos = peek().pos;
      ++cur_;
      if (opts_.mode == Mode::Smcb)
        mode_violation(pos, "Dual not allowed in SMCB");
      acc = Object::dual(acc);
    }
    return acc;
  }

  Object object_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero:
        ++cur_;
        return Object::zero();
      case Tok::LParen: {
        NestingGuard guard(*this);
        ++cur_;
        Object inner = object_expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        ++cur_;
        if (t.text == "I") return Object::unit();
        if (opts_.env) {
          auto it = opts_.env->objects.find(t.text);
          if (it != opts_.env->objects.end()) return it->second;
        }
        if (is_reserved_word(t.text))
          throw SyntaxError(t.pos, "reserved word '" + t.text +
                                       "' cannot name a generator");
        return Object::generator(t.text);
      }
      default:
        throw SyntaxError(t.pos, std::string("expected an object, found ") +
                                     describe(t.kind));
    }
  }

  // ---- arrows: + (lowest) < . ; < (+) < (x) < atoms ----

  Arrow sum_level() {
    Arrow acc = compose_level();
    while (accept(Tok::Plus)) acc = Arrow::plus(acc, compose_level());
    return acc;
  }

  Arrow compose_level() {
    Arrow acc = arrow_oplus_level();
    for (;;) {
      if (accept(Tok::Dot)) {
        acc = Arrow::compose(acc, arrow_oplus_level());
      } else if (accept(Tok::Semi)) {
        acc = Arrow::compose(arrow_oplus_level(), acc);
      } else {
        return acc;
      }
    }
  }

  Arrow arrow_oplus_level() {
    Arrow acc = arrow_tensor_level();
    while (accept(Tok::Oplus)) acc = Arrow::oplus(acc, arrow_tensor_level());
    return acc;
  }

  Arrow arrow_tensor_level() {
    Arrow acc = arrow_atom();
    while (accept(Tok::Tensor)) acc = Arrow::tensor(acc, arrow_atom());
    return acc;
  }

  std::vector<Object> subscripts() {
    std::vector<Object> objs;
    expect(Tok::LBracket);
    objs.push_back(object_expr());
    while (accept(Tok::Comma)) objs.push_back(object_expr());
    expect(Tok::RBracket);
    return objs;
  }

  Arrow arrow_atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        NestingGuard guard(*this);
        ++cur_;
        Arrow inner = arrow_expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::LBracket: {
        NestingGuard guard(*this);
        ++cur_;
        if (opts_.mode != Mode::Smcb)
          mode_violation(t.pos, "whiskering [a -o g] is not allowed in " +
                                    std::string(to_string(opts_.mode)));
        Object a = oplus_level();
        expect(Tok::Lolli);
        Arrow g = arrow_expr();
        expect(Tok::RBracket);
        return Arrow::whisker(a, g);
      }
      case Tok::Ident:
        return named_atom(t);
      default:
        throw SyntaxError(t.pos, std::string("expected an arrow, found ") +
                                     describe(t.kind));
    }
  }

  Arrow binary_call(ArrowKind kind) {
    NestingGuard guard(*this);
    expect(Tok::LParen);
    Arrow f = arrow_expr();
    expect(Tok::Comma);
    Arrow g = arrow_expr();
    expect(Tok::RParen);
    return Arrow::make(kind, {}, {f, g});
  }

  Arrow named_atom(const Token& t) {
    ++cur_;
    const std::string& w = t.text;
    if (w == "hom") {
      if (opts_.mode != Mode::Smcb)
        mode_violation(t.pos, "hom(f,g) is not allowed in " +
                                  std::string(to_string(opts_.mode)));
      return binary_call(ArrowKind::HomMap);
    }
    if (w == "dg") {
      if (opts_.mode != Mode::Dccb)
        mode_violation(t.pos, "dg(f) requires dccb mode");
      NestingGuard guard(*this);
      expect(Tok::LParen);
      Arrow f = arrow_expr();
      expect(Tok::RParen);
      return Arrow::dagger(f);
    }
    struct Entry {
      std::string_view word;
      ArrowKind kind;
      std::size_t arity;
    };
    static constexpr Entry table[] = {
        {"id", ArrowKind::Id, 1},         {"alpha", ArrowKind::Alpha, 3},
        {"alpha'", ArrowKind::AlphaInv, 3}, {"lambda", ArrowKind::Lambda, 1},
        {"lambda'", ArrowKind::LambdaInv, 1}, {"sigma", ArrowKind::Sigma, 2},
        {"inj1", ArrowKind::Inj1, 2},     {"inj2", ArrowKind::Inj2, 2},
        {"proj1", ArrowKind::Proj1, 2},   {"proj2", ArrowKind::Proj2, 2},
        {"zero", ArrowKind::Zero, 2},
    };
    if (w == "eta" || w == "eps") {
      auto objs = subscripts();
      bool smc = objs.size() == 2;
      if (objs.size() != 1 && objs.size() != 2)
        throw SyntaxError(t.pos, w + " takes one or two objects");
      if (smc && opts_.mode != Mode::Smcb)
        mode_violation(t.pos, w + "[a,b] is not allowed in " +
                                  std::string(to_string(opts_.mode)));
      if (!smc && opts_.mode == Mode::Smcb)
        mode_violation(t.pos, w + "[a] is not allowed in smcb");
      ArrowKind k = w == "eta" ? (smc ? ArrowKind::EtaSmc : ArrowKind::EtaCc)
                               : (smc ? ArrowKind::EpsSmc : ArrowKind::EpsCc);
      return Arrow::make(k, std::move(objs), {});
    }
    for (const auto& e : table) {
      if (e.word != w) continue;
      auto objs = subscripts();
      if (objs.size() != e.arity)
        throw SyntaxError(t.pos, w + " takes " + std::to_string(e.arity) +
                                     " object(s), got " +
                                     std::to_string(objs.size()));
      return Arrow::make(e.kind, std::move(objs), {});
    }
    if (opts_.env) {
      auto it = opts_.env->arrows.find(w);
      if (it != opts_.env->arrows.end()) return it->second;
    }
    throw SyntaxError(t.pos, "unknown arrow name '" + w + "'");
  }

  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  std::size_t nesting_ = 0;
  ParseOptions opts_;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (auto r : kReserved)
    if (r == word) return true;
  return false;
}

Object parse_object(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Object a = p.object_expr();
  p.expect_end();
  return a;
}

Arrow parse_arrow_untyped(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Arrow t = p.arrow_expr();
  p.expect_end();
  // Arrow names from the environment are spliced in unchecked.
  check_arrow_mode(t, opts.mode);
  return t;
}

Arrow parse_arrow(std::string_view text, const ParseOptions& opts) {
  Arrow t = parse_arrow_untyped(text, opts);
  infer_type(t, opts.mode);
  return t;
}

}  // namespace cobcoh
