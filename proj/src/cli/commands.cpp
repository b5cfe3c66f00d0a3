#include "cobcoh/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cobcoh/axioms.hpp"
#include "cobcoh/biproduct.hpp"
#include "cobcoh/decide.hpp"
#include "cobcoh/dot.hpp"
#include "cobcoh/interpret.hpp"
#include "cobcoh/normalize.hpp"
#include "cobcoh/query_file.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/serialize.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

namespace {

struct Options {
  std::string mode = "smcb";
  std::string format = "text";
  std::string file;
  std::vector<std::string> exprs;
  std::string out_path;
  bool certificate = false;
  bool verbose = false;
  std::uint64_t seed = 0;
  std::size_t depth = 3;
  std::size_t instances = 50;
};

struct Job {
  QueryFile query;
  std::vector<Directive> directives;
};

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

Job load(const Options& o, Directive::Kind kind, std::optional<Mode> forced) {
  Mode mode = parse_mode(o.mode).value_or(Mode::Smcb);
  Job job;
  if (o.file.empty() && o.exprs.empty()) throw Error("expected a query file or -e EXPR");
  if (!o.file.empty())
    job.query = parse_query_file(read_source(o.file), o.file == "-" ? "<stdin>" : o.file,
                                 mode, forced);
  else
    job.query.mode = mode;
  if (!o.exprs.empty()) {
    for (std::size_t k = 0; k < o.exprs.size(); ++k)
      job.directives.push_back(parse_directive(kind, o.exprs[k], job.query,
                                               "<expr " + std::to_string(k + 1) + ">"));
  } else {
    for (const auto& d : job.query.directives)
      if (d.kind == kind) job.directives.push_back(d);
  }
  return job;
}

Json strings(const std::vector<Object>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(render(x));
  return out;
}

void emit(std::ostream& out, const Options& o, Mode mode, Json results) {
  if (o.format != "json") return;
  Json doc;
  doc["mode"] = std::string(to_string(mode));
  doc["results"] = std::move(results);
  out << doc.dump(2) << "\n";
}

int cmd_check(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Job job = load(o, Directive::Kind::Check, forced);
  Mode mode = job.query.mode;
  bool any_ne = false, any_inc = false;
  Json results = Json::array();
  for (const auto& d : job.directives) {
    Verdict v = decide_equal(d.lhs, d.rhs, mode, DecideOptions{o.certificate});
    any_ne |= v.kind == Verdict::Kind::NotEqual;
    any_inc |= v.kind == Verdict::Kind::Inconclusive;
    if (o.format == "json") {
      Json r;
      r["line"] = d.pos.line;
      r["directive"] = d.text;
      Json verdict = v.to_json();
      for (auto& [k, val] : verdict.items()) r[k] = val;
      results.push_back(std::move(r));
    } else {
      out << d.text << ": " << v.to_string() << "\n";
      if (v.images) {
        out << "lhs image:\n" << to_text(v.images->first);
        out << "rhs image:\n" << to_text(v.images->second);
      }
    }
  }
  emit(out, o, mode, std::move(results));
  if (any_ne) return kExitNotEqual;
  if (any_inc) return kExitInconclusive;
  return kExitEqual;
}

int cmd_normalize(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Job job = load(o, Directive::Kind::Normalize, forced);
  Json results = Json::array();
  for (const auto& d : job.directives) {
    TermMatrix m = normalize_syntactic(d.lhs);
    if (o.format == "json") {
      Json r;
      r["directive"] = d.text;
      r["shape"] = {m.rows.size(), m.cols.size()};
      r["rows"] = strings(m.rows);
      r["cols"] = strings(m.cols);
      Json entries = Json::array();
      for (std::size_t i = 0; i < m.rows.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols.size(); ++j) row.push_back(render(m.entry_term(i, j)));
        entries.push_back(std::move(row));
      }
      r["entries"] = std::move(entries);
      results.push_back(std::move(r));
    } else {
      out << d.text << ": " << m.rows.size() << "x" << m.cols.size() << " " << render(m)
          << "\n";
    }
  }
  emit(out, o, job.query.mode, std::move(results));
  return kExitEqual;
}

Json decomposition_json(const Object& a) {
  auto dec = decompose(a);
  Json comps = Json::array();
  for (std::size_t i = 0; i < dec->size(); ++i) {
    Json c;
    c["object"] = render(dec->components[i]);
    c["iota"] = render(dec->injections[i]);
    c["pi"] = render(dec->projections[i]);
    comps.push_back(std::move(c));
  }
  return comps;
}

void decomposition_text(std::ostream& out, const Object& a, const std::string& label) {
  auto dec = decompose(a);
  out << label << ": " << dec->size()
      << (dec->size() == 1 ? " component\n" : " components\n");
  for (std::size_t i = 0; i < dec->size(); ++i) {
    out << "  " << i << ": " << render(dec->components[i]) << "\n";
    out << "    iota: " << render(dec->injections[i]) << "\n";
    out << "    pi: " << render(dec->projections[i]) << "\n";
  }
}

int cmd_interpret(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Job job = load(o, Directive::Kind::Interpret, forced);
  Mode mode = job.query.mode;
  Json results = Json::array();
  for (const auto& d : job.directives) {
    CobMatrix m = interpret_arrow(d.lhs, mode);
    ArrowType ty = infer_type(d.lhs, mode);
    if (o.format == "json") {
      Json r;
      r["directive"] = d.text;
      if (o.verbose) {
        r["source"] = decomposition_json(ty.source);
        r["target"] = decomposition_json(ty.target);
      }
      r["image"] = to_json(m);
      results.push_back(std::move(r));
    } else {
      out << d.text << "\n";
      if (o.verbose) {
        decomposition_text(out, ty.source, "source " + render(ty.source));
        decomposition_text(out, ty.target, "target " + render(ty.target));
      }
      out << to_text(m);
    }
  }
  emit(out, o, mode, std::move(results));
  return kExitEqual;
}

int cmd_decompose(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Job job = load(o, Directive::Kind::Decompose, forced);
  Json results = Json::array();
  for (const auto& d : job.directives) {
    if (o.format == "json") {
      Json r;
      r["directive"] = d.text;
      r["components"] = decomposition_json(d.object);
      results.push_back(std::move(r));
    } else {
      decomposition_text(out, d.object, d.text);
    }
  }
  emit(out, o, job.query.mode, std::move(results));
  return kExitEqual;
}

int cmd_render(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Job job = load(o, Directive::Kind::Interpret, forced);
  std::ostringstream dot;
  for (std::size_t k = 0; k < job.directives.size(); ++k) {
    const auto& d = job.directives[k];
    std::string name = o.exprs.empty() ? "line" + std::to_string(d.pos.line)
                                       : "expr" + std::to_string(k + 1);
    dot << "// " << d.text << "\n" << to_dot(interpret_arrow(d.lhs, job.query.mode), name);
  }
  if (o.out_path.empty()) {
    out << dot.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw Error("cannot write " + o.out_path);
    file << dot.str();
  }
  return kExitEqual;
}

int cmd_selftest(const Options& o, std::optional<Mode> forced, std::ostream& out) {
  Mode mode = forced.value_or(Mode::Smcb);
  SuiteReport report = axiom_suite(mode, o.depth, o.instances, o.seed);
  if (o.format == "json")
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
  return report.ok() ? kExitEqual : kExitNotEqual;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide equality of arrows in free monoidal categories with biproducts",
               "cobcoh"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "smcb, ccb or dccb")
        ->check(CLI::IsMember({"smcb", "ccb", "dccb"}));
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto with_input = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("file", o.file, "query file, or - for stdin");
    sub->add_option("-e,--expr", o.exprs, "directive argument; replaces the file's directives");
  };

  using Handler = int (*)(const Options&, std::optional<Mode>, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto* check = app.add_subcommand("check", "decide every 'check f = g'");
  with_input(check);
  check->add_flag("--certificate", o.certificate, "print both images");
  subs.emplace_back(check, cmd_check);
  auto* normalize = app.add_subcommand("normalize", "matrix of pure terms (smcb)");
  with_input(normalize);
  subs.emplace_back(normalize, cmd_normalize);
  auto* interpret = app.add_subcommand("interpret", "cobordism matrix of each term");
  with_input(interpret);
  interpret->add_flag("-v,--verbose", o.verbose, "also decompose source and target");
  subs.emplace_back(interpret, cmd_interpret);
  auto* decomp = app.add_subcommand("decompose", "components with iota and pi");
  with_input(decomp);
  subs.emplace_back(decomp, cmd_decompose);
  auto* render_cmd = app.add_subcommand("render", "DOT drawing of each interpret directive");
  with_input(render_cmd);
  render_cmd->add_option("--out", o.out_path, "output path (default stdout)");
  subs.emplace_back(render_cmd, cmd_render);
  auto* selftest = app.add_subcommand("selftest", "randomized axiom suite");
  common(selftest);
  selftest->add_option("--seed", o.seed, "base seed");
  selftest->add_option("--depth", o.depth, "object depth")->check(CLI::Range(0, 8));
  selftest->add_option("--instances", o.instances, "instances per family");
  subs.emplace_back(selftest, cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitEqual : kExitError;
  }

  for (auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    std::optional<Mode> forced;
    if (sub->count("--mode")) forced = parse_mode(o.mode);
    try {
      return handler(o, forced, out);
    } catch (const QueryError& e) {
      err << e.what() << "\n";
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
    }
    return kExitError;
  }
  return kExitError;
}

}  // namespace cobcoh
