// latkit: command line front end over the shared-library C surface.
// Every command writes one JSON document to stdout (dot writes DOT text).
// Exit codes: 0 success, 1 usage error, 2 mathematical refutation or a
// negative verdict (decide says not embeddable, spanning-check fails).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latkit.h"

namespace {

using ordered = nlohmann::ordered_json;

struct LatticeHandle {
  latkit_lattice* l = nullptr;
  LatticeHandle() = default;
  explicit LatticeHandle(latkit_lattice* l) : l(l) {}
  ~LatticeHandle() { latkit_lattice_free(l); }
  LatticeHandle(LatticeHandle&& o) : l(o.l) { o.l = nullptr; }
  LatticeHandle& operator=(LatticeHandle&& o) {
    if (this != &o) {
      latkit_lattice_free(l);
      l = o.l;
      o.l = nullptr;
    }
    return *this;
  }
  LatticeHandle(const LatticeHandle&) = delete;
  LatticeHandle& operator=(const LatticeHandle&) = delete;
  explicit operator bool() const { return l != nullptr; }
};

int exit_class(latkit_status s) {
  switch (s) {
    case LATKIT_E_CAP_EXCEEDED:
    case LATKIT_E_SIZE_GUARD:
    case LATKIT_E_UNKNOWN_FIXTURE:
    case LATKIT_E_UNKNOWN_ELEMENT:
    case LATKIT_E_UNBOUND_VARIABLE:
    case LATKIT_E_BUDGET_EXCEEDED:
    case LATKIT_E_PARSE_ERROR:
    case LATKIT_E_BAD_DOCUMENT:
    case LATKIT_E_INTERNAL:
      return 1;  // the request was malformed
    default:
      return 2;  // the mathematics said no
  }
}

void print_doc(const std::string& text) { std::fputs(text.c_str(), stdout); }

int emit_error(latkit_status s, const std::string& message, const std::vector<int>& witness) {
  ordered doc;
  doc["error"] = latkit_status_name(s);
  doc["code"] = int(s);
  doc["message"] = message;
  doc["witness"] = witness;
  print_doc(doc.dump(2) + "\n");
  return exit_class(s);
}

int emit_last_error() {
  latkit_status s = latkit_last_status();
  std::vector<int> witness(std::size_t(std::max(0, latkit_last_witness(nullptr, 0))));
  if (!witness.empty()) latkit_last_witness(witness.data(), int(witness.size()));
  return emit_error(s, latkit_last_message(), witness);
}

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path);
  if (!in.good()) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

struct Source {
  std::string expr, input;
  bool given() const { return !expr.empty() || !input.empty(); }
};

void add_source(CLI::App* cmd, Source& src, int min_required) {
  auto* group = cmd->add_option_group("lattice source");
  group->add_option("--expr", src.expr, "construction expression");
  group->add_option("--input", src.input, "lattice document path, - for stdin");
  group->require_option(min_required, 1);
}

// Loads the lattice, or emits an error document and stores the exit code.
LatticeHandle load(const Source& src, int& rc) {
  if (!src.expr.empty()) {
    LatticeHandle h(latkit_parse_construction(src.expr.c_str()));
    if (!h) rc = emit_last_error();
    return h;
  }
  std::string text;
  if (!read_all(src.input, text)) {
    rc = emit_error(LATKIT_E_BAD_DOCUMENT, "cannot read \"" + src.input + "\"", {});
    return LatticeHandle();
  }
  LatticeHandle h(latkit_document_parse(text.c_str()));
  if (!h) rc = emit_last_error();
  return h;
}

int print_string_result(char* s) {
  if (!s) return emit_last_error();
  print_doc(s);
  latkit_string_free(s);
  return 0;
}

int resolve_names(const LatticeHandle& l, const std::vector<std::string>& names,
                  std::vector<int>& out) {
  for (const std::string& name : names) {
    int e = latkit_element_index(l.l, name.c_str());
    if (e < 0) return emit_last_error();
    out.push_back(e);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on small lattices"};
  app.require_subcommand(1);

  Source src_construct, src_analyze, src_quotient, src_double, src_decide, src_gadgets,
      src_span, src_dot;

  auto* cmd_construct = app.add_subcommand("construct", "evaluate and emit a lattice document");
  add_source(cmd_construct, src_construct, 1);

  auto* cmd_analyze = app.add_subcommand("analyze", "full structural report");
  add_source(cmd_analyze, src_analyze, 1);

  auto* cmd_quotient =
      app.add_subcommand("quotient", "quotient by the congruence collapsing given pairs");
  add_source(cmd_quotient, src_quotient, 1);
  std::vector<std::string> collapse;
  cmd_quotient->add_option("--collapse", collapse, "pair of element names to collapse")
      ->type_size(2)
      ->required();

  auto* cmd_double = app.add_subcommand("double", "double a convex region");
  add_source(cmd_double, src_double, 1);
  std::vector<std::string> region;
  bool interval = false;
  cmd_double->add_option("--region", region, "element names of the region");
  cmd_double->add_flag("--interval", interval, "require the region to be an interval");

  auto* cmd_decide =
      app.add_subcommand("decide", "free-embeddability verdict; exits 2 unless embeddable");
  add_source(cmd_decide, src_decide, 1);

  auto* cmd_gadgets = app.add_subcommand("gadgets", "classify all gadget triples");
  add_source(cmd_gadgets, src_gadgets, 1);

  auto* cmd_explore =
      app.add_subcommand("explore-variety", "lower-bound the relatively free lattice");
  std::string kind = "distributive";
  int level = 0, generators = 0, depth = 0, probe_cap = 0;
  std::vector<std::string> probes;
  cmd_explore->add_option("--kind", kind, "distributive | sd_meet | sd_join | sd_both");
  auto* opt_level = cmd_explore->add_option("--level", level, "semidistributivity level");
  auto* opt_gens = cmd_explore->add_option("--generators", generators, "generator count");
  auto* opt_depth = cmd_explore->add_option("--depth", depth, "term growth depth");
  auto* opt_cap = cmd_explore->add_option("--probe-cap", probe_cap,
                                          "enumerate probes up to this size");
  cmd_explore->add_option("--probe", probes, "probe construction expression");

  auto* cmd_span = app.add_subcommand("spanning-check", "verify a spanning-pair witness");
  add_source(cmd_span, src_span, 0);
  std::vector<int> window;
  bool implicit = false, dual = false;
  int prefix = 0, claim = 0;
  std::string witness_text;
  auto* opt_window =
      cmd_span->add_option("--window", window, "materialize this window of 2 x Z")
          ->expected(2);
  auto* opt_implicit =
      cmd_span->add_flag("--implicit", implicit, "work on the coordinate model of 2 x Z");
  cmd_span->add_flag("--dual", dual, "dualize the implicit order");
  cmd_span->add_option("--prefix", prefix, "chain prefix length to verify");
  auto* opt_claim =
      cmd_span->add_option("--claim", claim, "reducible-antichain bound to check");
  cmd_span->add_option("--witness", witness_text,
                       "two_by_z_canonical or a witness JSON object");
  opt_window->excludes(opt_implicit);

  auto* cmd_dot = app.add_subcommand("dot", "Hasse diagram as DOT text");
  add_source(cmd_dot, src_dot, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  int rc = 0;

  if (cmd_construct->parsed()) {
    LatticeHandle l = load(src_construct, rc);
    if (!l) return rc;
    return print_string_result(latkit_document_dump(l.l));
  }

  if (cmd_analyze->parsed()) {
    LatticeHandle l = load(src_analyze, rc);
    if (!l) return rc;
    return print_string_result(latkit_analyze(l.l));
  }

  if (cmd_quotient->parsed()) {
    LatticeHandle l = load(src_quotient, rc);
    if (!l) return rc;
    std::vector<int> pairs;
    if (int bad = resolve_names(l, collapse, pairs)) return bad;
    LatticeHandle q(latkit_quotient_collapse(l.l, pairs.data(), int(pairs.size()) / 2));
    if (!q) return emit_last_error();
    return print_string_result(latkit_document_dump(q.l));
  }

  if (cmd_double->parsed()) {
    LatticeHandle l = load(src_double, rc);
    if (!l) return rc;
    std::vector<int> elems;
    if (int bad = resolve_names(l, region, elems)) return bad;
    LatticeHandle d(
        latkit_double_region(l.l, elems.data(), int(elems.size()), interval ? 1 : 0));
    if (!d) return emit_last_error();
    return print_string_result(latkit_document_dump(d.l));
  }

  if (cmd_decide->parsed()) {
    LatticeHandle l = load(src_decide, rc);
    if (!l) return rc;
    char* report = latkit_decide(l.l);
    if (!report) return emit_last_error();
    std::string text(report);
    latkit_string_free(report);
    print_doc(text);
    return ordered::parse(text)["verdict"] == "embeddable" ? 0 : 2;
  }

  if (cmd_gadgets->parsed()) {
    LatticeHandle l = load(src_gadgets, rc);
    if (!l) return rc;
    return print_string_result(latkit_gadgets(l.l));
  }

  if (cmd_explore->parsed()) {
    ordered options;
    options["kind"] = kind;
    if (*opt_level) options["level"] = level;
    if (*opt_gens) options["generators"] = generators;
    if (*opt_depth) options["depth"] = depth;
    if (*opt_cap) options["probe_cap"] = probe_cap;
    if (!probes.empty()) options["probes"] = probes;
    return print_string_result(latkit_explore(options.dump().c_str()));
  }

  if (cmd_span->parsed()) {
    LatticeHandle l;
    if (src_span.given()) {
      l = load(src_span, rc);
      if (!l) return rc;
    }
    ordered options;
    if (implicit) {
      options["implicit"] = true;
      if (dual) options["dual"] = true;
    }
    if (*opt_window) options["two_by_z_window"] = window;
    options["prefix"] = prefix;
    if (*opt_claim) options["hypothesis"] = claim;
    if (!witness_text.empty()) {
      if (witness_text == "two_by_z_canonical") {
        options["witness"] = witness_text;
      } else {
        ordered parsed = ordered::parse(witness_text, nullptr, false);
        if (parsed.is_discarded())
          return emit_error(LATKIT_E_BAD_DOCUMENT, "witness is not valid JSON", {});
        options["witness"] = parsed;
      }
    }
    char* report = latkit_spanning_check(l.l, options.dump().c_str());
    if (!report) return emit_last_error();
    std::string text(report);
    latkit_string_free(report);
    print_doc(text);
    return ordered::parse(text)["ok"] == true ? 0 : 2;
  }

  if (cmd_dot->parsed()) {
    LatticeHandle l = load(src_dot, rc);
    if (!l) return rc;
    return print_string_result(latkit_dot(l.l));
  }

  return 1;
}
