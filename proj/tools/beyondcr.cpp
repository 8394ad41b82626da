#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bcr/bounds.hpp"
#include "bcr/checkers.hpp"
#include "bcr/fixtures.hpp"
#include "bcr/io.hpp"
#include "bcr/kuratowski.hpp"
#include "bcr/layouts.hpp"
#include "bcr/random_drawing.hpp"
#include "bcr/svg.hpp"

using namespace bcr;

namespace {

struct Opts {
  std::string concept_name;
  int ell = 0;
  std::optional<int> k;
  std::string variant = "witness";
  std::string in, out, format;
  bool rectilinear = false;
  std::optional<std::uint64_t> seed;
  int vertices = 7;
  int edges = 10;
  bool straight = false;
  std::optional<std::string> n, m;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Opts& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

ConceptKind need_concept(const Opts& o) {
  if (o.concept_name.empty()) throw Usage("--concept is required");
  return parse_concept(o.concept_name);
}

int need_ell(const Opts& o) {
  if (o.ell < 1) throw Usage("--ell must be given and >= 1");
  return o.ell;
}

int k_or(const Opts& o, ConceptKind c, const Json& meta = Json::object()) {
  if (o.k) return *o.k;
  if (meta.contains("k") && meta["k"].is_number_integer()) return meta["k"].get<int>();
  return min_k(c);
}

std::string format_or(const Opts& o, const std::string& dflt, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? dflt : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw Usage("--format " + f + " is not supported here");
}

struct Loaded {
  Drawing d;
  Json meta;
};

Loaded load_drawing(const Opts& o) {
  if (o.in.empty()) throw Usage("--in is required");
  Json j = read_json_file(o.in);
  return {drawing_from_json(j), drawing_meta(j)};
}

std::optional<FrameworkGraph> framework_of(const Json& meta) {
  if (!meta.contains("concept") || !meta.contains("ell")) return std::nullopt;
  ConceptKind c = parse_concept(meta["concept"].get<std::string>());
  return construction_for(c, meta["ell"].get<int>(), meta.value("k", 1));
}

SvgStyle style_for(const Drawing& d, const Json& meta) {
  SvgStyle st;
  if (auto fg = framework_of(meta)) {
    SvgStyle fs = framework_style(*fg);
    std::vector<int> to_fg = attribute_edges(d, *fg);
    for (int e = 0; e < d.graph.m(); ++e) st.edge_color.push_back(fs.edge_color[to_fg[e]]);
  }
  return st;
}

int cmd_gen(const Opts& o) {
  if (o.seed) {
    RandomDrawingOptions ro;
    ro.vertices = o.vertices;
    ro.edges = o.edges;
    ro.straight = o.straight;
    Drawing d = random_drawing(*o.seed, ro);
    emit(o, dump(drawing_to_json(d, Json{{"seed", *o.seed}})));
    return 0;
  }
  ConceptKind c = need_concept(o);
  FrameworkGraph fg = construction_for(c, need_ell(o), k_or(o, c));
  emit(o, dump(graph_to_json(fg.graph, framework_meta(fg))));
  return 0;
}

int cmd_layout(const Opts& o) {
  ConceptKind c = need_concept(o);
  std::string fmt = format_or(o, "json", {"json", "svg"});
  StandardDrawing sd = standard_drawing(c, need_ell(o), k_or(o, c), parse_variant(o.variant), o.rectilinear);
  if (fmt == "json") {
    emit(o, dump(drawing_to_json(sd.drawing, framework_meta(sd.fg))));
  } else {
    CrossingSet cs = compute_crossings(sd.drawing);
    SvgStyle st = framework_style(sd.fg);
    st.crossings = &cs;
    emit(o, to_svg(sd.drawing, st));
  }
  return 0;
}

int cmd_check(const Opts& o) {
  ConceptKind c = need_concept(o);
  std::string fmt = format_or(o, "json", {"json", "text"});
  Loaded l = load_drawing(o);
  CrossingSet cs = compute_crossings(l.d);
  Verdict v = check_concept(Concept{c, k_or(o, c, l.meta)}, l.d, cs);
  if (fmt == "json")
    emit(o, dump(to_json(v)));
  else
    emit(o, v.concept_name + ": " + (v.holds ? "holds" : "fails") + "\n" +
                (v.witness ? "witness: " + v.witness->dump() + "\n" : ""));
  return v.holds ? 0 : 1;
}

int cmd_coverage(const Opts& o) {
  std::string fmt = format_or(o, "text", {"json", "text"});
  Drawing d;
  FrameworkGraph fg;
  if (!o.in.empty()) {
    Loaded l = load_drawing(o);
    auto f = framework_of(l.meta);
    if (!f) throw FormatError("meta", "drawing carries no framework metadata (concept, ell)");
    d = std::move(l.d);
    fg = std::move(*f);
  } else {
    ConceptKind c = need_concept(o);
    StandardDrawing sd = standard_drawing(c, need_ell(o), k_or(o, c), parse_variant(o.variant), o.rectilinear);
    d = std::move(sd.drawing);
    fg = std::move(sd.fg);
  }
  CoverageLedger L = coverage_ledger(d, fg);
  Verdict v = verify_full_coverage(L, fg);
  if (fmt == "json") {
    emit(o, dump(Json{{"verdict", to_json(v)}, {"ledger", ledger_to_json(L)}}));
  } else {
    std::string s = std::string("fully covered: ") + (v.holds ? "true" : "false") + "\n";
    s += "kuratowski subdivisions: " + L.kuratowski_count.get_str() + "\n";
    s += "contributing crossings: " + std::to_string(L.entries.size()) + "\n";
    if (v.witness) s += "uncovered: " + (*v.witness)["uncovered"].dump() + "\n";
    emit(o, s);
  }
  return v.holds ? 0 : 1;
}

int cmd_bound(const Opts& o) {
  ConceptKind c = need_concept(o);
  std::string fmt = format_or(o, "text", {"json", "text"});
  int k = k_or(o, c);
  Json out;
  std::string text;
  if (o.ell > 0) {
    CountingBound b = counting_lower_bound(c, o.ell, k);
    out["counting_lower_bound"] = Json{{"value", to_string(b.value)}, {"trace", b.trace}};
    text += "counting lower bound: " + to_string(b.value) + (b.below_threshold ? " (below threshold)" : "") + "\n";
    for (const auto& s : b.trace["steps"])
      text += "  " + s["step"].get<std::string>() + " = " + s["value"].get<std::string>() + "  [" +
              s["reason"].get<std::string>() + "]\n";
  }
  if (o.n && o.m) {
    Integer n(*o.n), m(*o.m);
    LemmaBound lb = crossing_lemma_bound(n, m);
    RatioUpper ru = ratio_upper(c, n, m, k);
    out["crossing_lemma"] = Json{{"value", to_string(lb.value)}, {"sparse", lb.sparse}, {"constant", "1/64"}};
    out["ratio_upper"] = Json{{"value", to_string(ru.value)}, {"trace", ru.trace}};
    text += "crossing lemma bound: " + to_string(lb.value) + (lb.sparse ? " (sparse)" : "") + "\n";
    text += "ratio upper bound: " + to_string(ru.value) + " (class " + ru.theta_class + ")" +
            (ru.simple_only ? " simple-drawings-only" : "") + "\n";
  }
  if (out.empty()) throw Usage("bound needs --ell, or --n and --m");
  emit(o, fmt == "json" ? dump(out) : text);
  return 0;
}

int cmd_report(const Opts& o) {
  std::string fmt = format_or(o, "text", {"json", "text"});
  auto rows = table1_report(o.k.value_or(2));
  emit(o, fmt == "json" ? dump(table1_to_json(rows)) : table1_text(rows));
  return 0;
}

int cmd_svg(const Opts& o) {
  Loaded l = load_drawing(o);
  CrossingSet cs = compute_crossings(l.d);
  SvgStyle st = style_for(l.d, l.meta);
  st.crossings = &cs;
  emit(o, to_svg(l.d, st));
  return 0;
}

int cmd_fixtures(const Opts& o) {
  if (o.out.empty()) throw Usage("--out DIR is required");
  for (const auto& name : write_fixtures(o.out)) std::cout << name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beyondcr: crossing-ratio constructions, drawings and checkers"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s) {
    s->add_option("--concept", o.concept_name, "kpl kvp ic nic nnic kfcf ac fc wfp sfp kecr kgap kapex skew");
    s->add_option("--ell", o.ell, "construction size parameter");
    s->add_option("--k", o.k, "concept parameter");
    s->add_option("--variant", o.variant, "witness or upper");
    s->add_option("--in", o.in, "input JSON");
    s->add_option("--out", o.out, "output file (stdout if omitted)");
    s->add_option("--format", o.format, "json, svg or text");
    s->add_flag("--rectilinear", o.rectilinear, "require straight-line drawings");
    s->add_option("--seed", o.seed, "random drawing seed");
  };
  std::map<std::string, std::function<int(const Opts&)>> run{
      {"gen", cmd_gen},         {"layout", cmd_layout}, {"check", cmd_check}, {"coverage", cmd_coverage},
      {"bound", cmd_bound},     {"report", cmd_report}, {"svg", cmd_svg},     {"fixtures", cmd_fixtures}};
  std::map<std::string, std::string> help{
      {"gen", "framework graph JSON, or a random drawing with --seed"},
      {"layout", "standard drawing as JSON or SVG"},
      {"check", "run a concept checker on a drawing (exit 1 if it fails)"},
      {"coverage", "Kuratowski coverage of a drawing (exit 1 if incomplete)"},
      {"bound", "counting lower bound, crossing lemma and ratio upper bound"},
      {"report", "Table 1 reproduction"},
      {"svg", "render a drawing file"},
      {"fixtures", "regenerate the golden files"}};
  for (const auto& [name, fn] : run) {
    CLI::App* s = app.add_subcommand(name, help[name]);
    common(s);
    if (name == "gen") {
      s->add_option("--vertices", o.vertices, "random drawing vertices");
      s->add_option("--edges", o.edges, "random drawing edges");
      s->add_flag("--straight", o.straight, "random drawing without bends");
    }
    if (name == "bound") {
      s->add_option("--n", o.n, "vertex count");
      s->add_option("--m", o.m, "edge count");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto* s : app.get_subcommands()) return run.at(s->get_name())(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise BEYONDCR_BUDGET)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
