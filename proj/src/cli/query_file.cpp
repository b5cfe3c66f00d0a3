#include "cobcoh/query_file.hpp"

#include <cctype>

#include "cobcoh/typecheck.hpp"
#include "cobcoh/render.hpp"

namespace cobcoh {

QueryError::QueryError(const std::string& file, Position pos, const std::string& message)
    : Error(file + ":" + to_string(pos) + ": " + message), pos_(pos) {}

std::string_view to_string(Directive::Kind kind) {
  switch (kind) {
    case Directive::Kind::Check: return "check";
    case Directive::Kind::Normalize: return "normalize";
    case Directive::Kind::Interpret: return "interpret";
    case Directive::Kind::Decompose: return "decompose";
  }
  return "?";
}

namespace {

struct Span {
  std::string_view text;
  Position pos;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Span trim(Span s) {
  while (!s.text.empty() && is_space(s.text.front())) {
    s.text.remove_prefix(1);
    ++s.pos.column;
  }
  while (!s.text.empty() && is_space(s.text.back())) s.text.remove_suffix(1);
  return s;
}

Span sub(const Span& s, std::size_t from, std::size_t len = std::string_view::npos) {
  Span out{s.text.substr(from, len), s.pos};
  out.pos.column += from;
  return trim(out);
}

/// First word and the remainder after it.
std::pair<Span, Span> head_word(const Span& s) {
  std::size_t n = 0;
  while (n < s.text.size() && !is_space(s.text[n])) ++n;
  return {Span{s.text.substr(0, n), s.pos}, sub(s, n)};
}

bool is_identifier(std::string_view w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_'))
    return false;
  for (char c : w)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// Runs `body`, converting library errors into QueryErrors located at `at`.
template <class F>
auto located(const std::string& file, const Span& at, F&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    throw QueryError(file, e.position(), e.message());
  } catch (const QueryError&) {
    throw;
  } catch (const Error& e) {
    std::string what = e.what();
    // Parser mode errors already start with line:col.
    if (!what.empty() && std::isdigit(static_cast<unsigned char>(what[0]))) {
      auto colon = what.find(':', what.find(':') + 1);
      Position pos;
      pos.line = std::stoul(what);
      pos.column = std::stoul(what.substr(what.find(':') + 1));
      throw QueryError(file, pos, what.substr(colon + 2));
    }
    throw QueryError(file, at.pos, what);
  }
}

Object object_at(const Span& s, const QueryFile& q, const std::string& file) {
  if (s.text.empty()) throw QueryError(file, s.pos, "expected an object");
  return located(file, s, [&] {
    return parse_object(s.text, ParseOptions{q.mode, &q.env, s.pos});
  });
}

Arrow arrow_at(const Span& s, const QueryFile& q, const std::string& file) {
  if (s.text.empty()) throw QueryError(file, s.pos, "expected an arrow");
  return located(file, s, [&] {
    return parse_arrow(s.text, ParseOptions{q.mode, &q.env, s.pos});
  });
}

void define_name(const Span& name, const QueryFile& q, const std::string& file) {
  std::string n(name.text);
  if (!is_identifier(n)) throw QueryError(file, name.pos, "invalid name '" + n + "'");
  if (is_reserved_word(n)) throw QueryError(file, name.pos, "reserved word '" + n + "'");
  if (q.env.objects.count(n) || q.env.arrows.count(n))
    throw QueryError(file, name.pos, "'" + n + "' is already defined");
}

Directive directive_at(Directive::Kind kind, const Span& arg, const QueryFile& q,
                       const std::string& file) {
  Directive d{kind, arg.pos, {}, {}, {}, {}};
  switch (kind) {
    case Directive::Kind::Check: {
      auto eq = arg.text.find('=');
      if (eq == std::string_view::npos)
        throw QueryError(file, arg.pos, "check expects 'f = g'");
      d.lhs = arrow_at(sub(arg, 0, eq), q, file);
      d.rhs = arrow_at(sub(arg, eq + 1), q, file);
      ArrowType l = infer_type(d.lhs, q.mode), r = infer_type(d.rhs, q.mode);
      if (l != r)
        throw QueryError(file, arg.pos,
                         "type error: sides are not parallel: " + render(l.source) + " -> " +
                             render(l.target) + " versus " + render(r.source) + " -> " +
                             render(r.target));
      break;
    }
    case Directive::Kind::Normalize:
    case Directive::Kind::Interpret: d.lhs = arrow_at(arg, q, file); break;
    case Directive::Kind::Decompose: d.object = object_at(arg, q, file); break;
  }
  return d;
}

std::optional<Directive::Kind> directive_kind(std::string_view w) {
  if (w == "check") return Directive::Kind::Check;
  if (w == "normalize") return Directive::Kind::Normalize;
  if (w == "interpret") return Directive::Kind::Interpret;
  if (w == "decompose") return Directive::Kind::Decompose;
  return std::nullopt;
}

}  // namespace

Directive parse_directive(Directive::Kind kind, std::string_view argument,
                          const QueryFile& context, const std::string& file,
                          Position origin) {
  Span arg = trim(Span{argument, origin});
  Directive d = directive_at(kind, arg, context, file);
  d.text = std::string(to_string(kind)) + " " + std::string(arg.text);
  return d;
}

QueryFile parse_query_file(std::string_view text, const std::string& file, Mode fallback,
                           std::optional<Mode> forced) {
  QueryFile q;
  q.mode = forced.value_or(fallback);
  bool seen_other = false;
  bool seen_mode = false;
  std::size_t line_no = 0;
  for (std::size_t start = 0; start <= text.size();) {
    ++line_no;
    auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Span line = trim(Span{raw, Position{line_no, 1}});
    if (line.text.empty()) continue;
    auto [word, rest] = head_word(line);
    if (word.text == "mode") {
      if (seen_mode) throw QueryError(file, word.pos, "mode declared twice");
      if (seen_other)
        throw QueryError(file, word.pos, "mode must be declared before other lines");
      auto m = parse_mode(rest.text);
      if (!m) throw QueryError(file, rest.pos, "unknown mode '" + std::string(rest.text) + "'");
      if (forced && *forced != *m)
        throw QueryError(file, rest.pos, "file declares mode " + std::string(rest.text) +
                                             " but " + std::string(to_string(*forced)) +
                                             " was requested");
      q.mode = *m;
      seen_mode = true;
      continue;
    }
    seen_other = true;
    if (word.text == "obj") {
      auto eq = rest.text.find('=');
      if (eq == std::string_view::npos)
        throw QueryError(file, rest.pos, "expected 'obj <name> = <object>'");
      Span name = sub(rest, 0, eq);
      define_name(name, q, file);
      Object a = object_at(sub(rest, eq + 1), q, file);
      q.env.objects.emplace(std::string(name.text), a);
    } else if (word.text == "arrow") {
      auto colon = rest.text.find(':');
      auto arrow = rest.text.find("->");
      auto eq = rest.text.find('=');
      if (colon == std::string_view::npos || arrow == std::string_view::npos ||
          eq == std::string_view::npos || !(colon < arrow && arrow < eq))
        throw QueryError(file, rest.pos,
                         "expected 'arrow <name> : <object> -> <object> = <arrow>'");
      Span name = sub(rest, 0, colon);
      define_name(name, q, file);
      Object s = object_at(sub(rest, colon + 1, arrow - colon - 1), q, file);
      Object t = object_at(sub(rest, arrow + 2, eq - arrow - 2), q, file);
      Span body = sub(rest, eq + 1);
      Arrow f = arrow_at(body, q, file);
      ArrowType ty = infer_type(f, q.mode);
      if (ty.source != s || ty.target != t)
        throw QueryError(file, body.pos,
                         "arrow '" + std::string(name.text) + "' has type " +
                             render(ty.source) + " -> " + render(ty.target) +
                             ", declared " + render(s) + " -> " + render(t));
      q.env.arrows.emplace(std::string(name.text), f);
    } else if (auto kind = directive_kind(word.text)) {
      Directive d = directive_at(*kind, rest, q, file);
      d.pos = line.pos;
      d.text = std::string(line.text);
      q.directives.push_back(std::move(d));
    } else {
      throw QueryError(file, word.pos, "unknown line '" + std::string(word.text) + "'");
    }
  }
  return q;
}

}  // namespace cobcoh
