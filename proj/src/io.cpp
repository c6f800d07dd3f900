#include "latkit/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "latkit/congruence.hpp"
#include "latkit/constructors.hpp"
#include "latkit/doubling.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/gj.hpp"
#include "latkit/predicates.hpp"
#include "latkit/spanning.hpp"
#include "latkit/terms.hpp"

namespace latkit {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Err::BadDocument, msg); }

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::BadDocument, std::string(what) + ": " + e.what());
  }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const char* what) {
  for (auto& [k, v] : obj.items())
    if (!allowed.count(k)) bad(std::string(what) + " has unknown key \"" + k + "\"");
}

std::vector<std::string> element_names(const FiniteLattice& l, const std::vector<int>& elems) {
  std::vector<std::string> out;
  for (int e : elems) out.push_back(l.names()[std::size_t(e)]);
  return out;
}

std::vector<std::string> element_names(const FiniteLattice& l, const Bitset& elems) {
  return element_names(l, elems.to_vector());
}

// ---------------------------------------------------------------- documents

struct DocumentShape {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
};

DocumentShape read_document(const json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  reject_unknown_keys(doc, {"format_version", "elements", "covers", "metadata"}, "document");
  if (!doc.contains("format_version") || !doc["format_version"].is_string() ||
      doc["format_version"] != "1")
    bad("format_version must be the string \"1\"");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    bad("elements must be an array of names");
  if (!doc.contains("covers") || !doc["covers"].is_array())
    bad("covers must be an array of [lower, upper] pairs");
  if (doc.contains("metadata") && !doc["metadata"].is_object())
    bad("metadata must be an object");

  DocumentShape shape;
  std::map<std::string, int> index;
  for (auto& e : doc["elements"]) {
    if (!e.is_string()) bad("elements must be strings");
    std::string name = e.get<std::string>();
    if (!index.emplace(name, int(shape.names.size())).second)
      bad("duplicate element \"" + name + "\"");
    shape.names.push_back(std::move(name));
  }
  for (auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      bad("each cover must be a [lower, upper] pair of names");
    auto lo = index.find(c[0].get<std::string>());
    auto hi = index.find(c[1].get<std::string>());
    if (lo == index.end() || hi == index.end())
      bad("cover references undeclared element \"" +
          (lo == index.end() ? c[0] : c[1]).get<std::string>() + "\"");
    shape.covers.emplace_back(lo->second, hi->second);
  }
  return shape;
}

// --------------------------------------------------------------------- DSL

struct Token {
  enum Kind { number, ident, text, punct, eof } kind = eof;
  std::string s;      // literal spelling (digits for numbers, body for text)
  long long num = 0;  // kind == number
  int pos = 0;
};

class ConstructionParser {
 public:
  explicit ConstructionParser(std::string_view src) : src_(src) { lex(); }

  FiniteLattice run() {
    FiniteLattice l = expr();
    if (peek().kind != Token::eof) oops("unexpected trailing input", peek().pos);
    return l;
  }

 private:
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  [[noreturn]] void oops(const std::string& msg, int pos) {
    fail(Err::ParseError, msg + " at position " + std::to_string(pos), {pos});
  }

  void lex() {
    int i = 0, n = int(src_.size());
    while (i < n) {
      char c = src_[std::size_t(i)];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Token t;
      t.pos = i;
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        int start = i;
        if (c == '-') ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(src_[std::size_t(i)])))
          oops("expected digits after '-'", start);
        while (i < n && std::isdigit(static_cast<unsigned char>(src_[std::size_t(i)]))) ++i;
        t.kind = Token::number;
        t.s = std::string(src_.substr(std::size_t(start), std::size_t(i - start)));
        if (t.s.size() > 12) oops("number out of range", start);
        t.num = std::stoll(t.s);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        int start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(src_[std::size_t(i)])) ||
                         src_[std::size_t(i)] == '_'))
          ++i;
        t.kind = Token::ident;
        t.s = std::string(src_.substr(std::size_t(start), std::size_t(i - start)));
      } else if (c == '"') {
        int start = ++i;
        while (i < n && src_[std::size_t(i)] != '"') ++i;
        if (i >= n) oops("unterminated string", t.pos);
        t.kind = Token::text;
        t.s = std::string(src_.substr(std::size_t(start), std::size_t(i - start)));
        ++i;
      } else if (std::string_view("()[],=").find(c) != std::string_view::npos) {
        t.kind = Token::punct;
        t.s = std::string(1, c);
        ++i;
      } else {
        oops("unexpected character", i);
      }
      toks_.push_back(std::move(t));
    }
    toks_.push_back(Token{Token::eof, "", 0, n});
  }

  const Token& peek() const { return toks_[at_]; }
  Token take() {
    Token t = toks_[at_];
    if (at_ + 1 < toks_.size()) ++at_;
    return t;
  }
  void expect(const char* p) {
    Token t = take();
    if (t.kind != Token::punct || t.s != p)
      oops(std::string("expected '") + p + "'", t.pos);
  }
  bool accept(const char* p) {
    if (peek().kind == Token::punct && peek().s == p) {
      take();
      return true;
    }
    return false;
  }

  int int_arg() {
    Token t = take();
    if (t.kind != Token::number) oops("expected an integer", t.pos);
    if (t.num < -1000000 || t.num > 1000000) oops("number out of range", t.pos);
    return int(t.num);
  }

  int positive_arg(const char* what) {
    Token t = peek();
    int v = int_arg();
    if (v < 1) oops(std::string(what) + " must be positive", t.pos);
    return v;
  }

  std::string name_arg() {
    Token t = take();
    if (t.kind != Token::ident && t.kind != Token::text && t.kind != Token::number)
      oops("expected an element name", t.pos);
    return t.s;
  }

  int element_arg(const FiniteLattice& l) {
    Token t = peek();
    std::string name = name_arg();
    int e = l.index_of(name);
    if (e < 0) fail(Err::UnknownElement, "unknown element \"" + name + "\"", {t.pos});
    return e;
  }

  bool bool_arg() {
    Token t = take();
    if (t.kind == Token::ident && t.s == "true") return true;
    if (t.kind == Token::ident && t.s == "false") return false;
    oops("expected true or false", t.pos);
  }

  void keyword(const char* kw) {
    Token t = take();
    if (t.kind != Token::ident || t.s != kw)
      oops(std::string("expected '") + kw + "='", t.pos);
    expect("=");
  }

  FiniteLattice expr() {
    Token t = take();
    if (t.kind == Token::number) {
      if (t.num < 1) oops("a bare integer abbreviates chain(n), n >= 1", t.pos);
      return chain_lattice(int(t.num));
    }
    if (t.kind != Token::ident) oops("expected a construction", t.pos);
    const std::string& f = t.s;

    if (f == "chain" || f == "boolean" || f == "fd") {
      expect("(");
      int n = f == "boolean" ? int_arg() : positive_arg("size");
      expect(")");
      if (f == "chain") return chain_lattice(n);
      if (f == "boolean") return boolean_lattice(n);
      return free_distributive(n);
    }
    if (f == "two_by_z") {
      expect("(");
      int lo = int_arg();
      expect(",");
      int hi = int_arg();
      expect(")");
      if (lo > hi) oops("two_by_z needs lo <= hi", t.pos);
      return two_by_z_window(lo, hi).lattice;
    }
    if (f == "product") {
      expect("(");
      FiniteLattice a = expr();
      expect(",");
      FiniteLattice b = expr();
      expect(")");
      return product(a, b);
    }
    if (f == "linsum" || f == "lexsum") {
      expect("(");
      std::vector<FiniteLattice> blocks;
      blocks.push_back(expr());
      while (accept(",")) blocks.push_back(expr());
      expect(")");
      if (f == "linsum") return linear_sum(blocks);
      // lexsum(index, block, ...): the first operand contributes its order as
      // the index poset, the rest fill its positions
      if (blocks.size() != std::size_t(blocks[0].size()) + 1)
        oops("lexsum needs one block per element of its index", t.pos);
      Poset index;
      index.n = blocks[0].size();
      index.names = blocks[0].names();
      for (int i = 0; i < index.n; ++i) index.up.push_back(blocks[0].up_set(i));
      return lexicographic_sum(index,
                               std::vector<FiniteLattice>(blocks.begin() + 1, blocks.end()));
    }
    if (f == "double") {
      expect("(");
      FiniteLattice base = expr();
      expect(",");
      keyword("region");
      expect("[");
      Bitset region(base.size());
      if (!accept("]")) {
        region.set(element_arg(base));
        while (accept(",")) region.set(element_arg(base));
        expect("]");
      }
      bool interval = false;
      if (accept(",")) {
        keyword("interval");
        interval = bool_arg();
      }
      expect(")");
      return day_double(base, DoublingSpec{region, interval}).lattice;
    }
    if (f == "quotient") {
      expect("(");
      FiniteLattice base = expr();
      expect(",");
      expect("[");
      Congruence cong = Congruence::identity(base);
      if (!accept("]")) {
        do {
          expect("[");
          int a = element_arg(base);
          expect(",");
          int b = element_arg(base);
          expect("]");
          cong = congruence_join(base, cong, principal_congruence(base, a, b));
        } while (accept(","));
        expect("]");
      }
      expect(")");
      return quotient(base, cong).lattice;
    }
    return fixture(f);
  }
};

// ------------------------------------------------------------------ reports

json gadget_census_json(const std::vector<GadgetWitness>& ws) {
  const GadgetClass classes[] = {GadgetClass::case1, GadgetClass::case1_dual, GadgetClass::case2,
                                 GadgetClass::case2_dual, GadgetClass::case3,
                                 GadgetClass::case3_dual};
  json census;
  for (GadgetClass c : classes) {
    int n = 0;
    for (auto& w : ws)
      if (w.iso_class == c) ++n;
    census[gadget_class_name(c)] = n;
  }
  return census;
}

std::string block_tag(const BlockTag& b) {
  if (b.shape == BlockShape::two_by_chain)
    return "two_by_chain(" + std::to_string(b.chain_length) + ")";
  return block_shape_name(b.shape);
}

json block_tags_json(const FiniteLattice& l) {
  if (is_distributive(l))
    if (auto dec = theorem2_decompose(l, false)) {
      json tags = json::array();
      for (auto& b : dec->blocks) tags.push_back(block_tag(b));
      return tags;
    }
  json tags = json::array();
  for (auto& b : linear_decomposition(l))
    tags.push_back("block(" + std::to_string(b.count()) + ")");
  return tags;
}

VarietySpec variety_from(const json& opt) {
  std::string kind = opt.value("kind", "distributive");
  VarietySpec spec;
  if (kind == "distributive")
    spec.kind = VarietySpec::Kind::distributive;
  else if (kind == "sd_meet")
    spec.kind = VarietySpec::Kind::sd_meet;
  else if (kind == "sd_join")
    spec.kind = VarietySpec::Kind::sd_join;
  else if (kind == "sd_both")
    spec.kind = VarietySpec::Kind::sd_both;
  else
    bad("unknown variety kind \"" + kind + "\"");
  spec.level = opt.value("level", 0);
  if (spec.kind != VarietySpec::Kind::distributive && spec.level < 1)
    bad("semidistributive varieties need level >= 1");
  return spec;
}

}  // namespace

FiniteLattice document_to_lattice(const std::string& json_text) {
  DocumentShape shape = read_document(parse_json(json_text, "invalid document"));
  const int n = int(shape.names.size());
  return FiniteLattice::from_covers(n, shape.covers, std::move(shape.names));
}

std::string lattice_to_document(const FiniteLattice& l,
                                const std::map<std::string, std::string>& metadata) {
  json doc;
  doc["format_version"] = "1";
  doc["elements"] = l.names();
  json covers = json::array();
  for (int i = 0; i < l.size(); ++i)
    for (int j : l.upper_covers(i))
      covers.push_back({l.names()[std::size_t(i)], l.names()[std::size_t(j)]});
  doc["covers"] = std::move(covers);
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc.dump(2) + "\n";
}

FiniteLattice parse_construction(std::string_view expr) {
  return ConstructionParser(expr).run();
}

std::string analyze(const FiniteLattice& l) {
  json rep;
  rep["size"] = l.size();
  rep["width"] = width(l).width;
  rep["distributive"] = is_distributive(l);
  rep["modular"] = is_modular(l);
  rep["sd_meet"] = is_semidistributive_meet(l);
  rep["sd_join"] = is_semidistributive_join(l);
  auto lev = sd_level(l);
  rep["sd_level"] = lev ? json(*lev) : json(nullptr);
  rep["whitman"] = whitman(l);
  rep["doubly_reducible"] = element_names(l, doubly_reducible(l));
  rep["blocks"] = block_tags_json(l);
  auto ws = find_gadgets(l);
  json census = gadget_census_json(ws);
  census["total"] = int(ws.size());
  rep["gadgets"] = std::move(census);
  rep["bounded"] = boundedness_report(l).bounded;
  auto fe = decide_free_embeddable(l);
  rep["free_embeddable"] = embed_verdict_name(fe.verdict);
  if (!fe.reason.empty()) rep["reason"] = fe.reason;
  return rep.dump(2) + "\n";
}

std::string decide_report(const FiniteLattice& l) {
  json rep;
  auto fe = decide_free_embeddable(l);
  rep["verdict"] = embed_verdict_name(fe.verdict);
  if (!fe.reason.empty()) rep["reason"] = fe.reason;
  rep["evidence"] = element_names(l, fe.evidence);
  if (fe.decomposition) {
    json tags = json::array();
    for (auto& b : fe.decomposition->blocks) tags.push_back(block_tag(b));
    rep["blocks"] = std::move(tags);
  }
  return rep.dump(2) + "\n";
}

std::string gadget_report(const FiniteLattice& l) {
  auto ws = find_gadgets(l);
  json rep;
  rep["total"] = int(ws.size());
  rep["census"] = gadget_census_json(ws);
  json list = json::array();
  for (auto& w : ws) {
    json g;
    g["p"] = l.names()[std::size_t(w.p)];
    g["q"] = l.names()[std::size_t(w.q)];
    g["r"] = l.names()[std::size_t(w.r)];
    g["class"] = gadget_class_name(w.iso_class);
    g["shared"] = shared_bound_name(w.shared_bound);
    g["generated"] = element_names(l, w.generated);
    list.push_back(std::move(g));
  }
  rep["gadgets"] = std::move(list);
  return rep.dump(2) + "\n";
}

std::string explore_report(const std::string& options_json) {
  json opt = parse_json(options_json, "invalid options");
  if (!opt.is_object()) bad("options must be a JSON object");
  reject_unknown_keys(opt, {"kind", "level", "generators", "depth", "probe_cap", "probes"},
                      "options");
  // probes default to every lattice of size <= 6 in the variety: small enough
  // to stay interactive, rich enough to separate depth-4 terms
  constexpr int kProbeCapDefault = 6;
  VarietySpec variety;
  int generators = 3, depth = 2, probe_cap = kProbeCapDefault;
  std::vector<FiniteLattice> probes;
  try {
    variety = variety_from(opt);
    generators = opt.value("generators", 3);
    depth = opt.value("depth", 2);
    probe_cap = opt.value("probe_cap", kProbeCapDefault);
    if (opt.contains("probes")) {
      if (!opt["probes"].is_array()) bad("probes must be an array of expressions");
      for (auto& p : opt["probes"]) {
        if (!p.is_string()) bad("probes must be an array of expressions");
        probes.push_back(parse_construction(p.get<std::string>()));
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("invalid options: ") + e.what());
  }
  if (probes.empty()) {
    auto identities = variety.identities();
    for (int n = 1; n <= probe_cap; ++n)
      for (auto& l : enumerate_lattices(n)) {
        bool in = true;
        for (auto& id : identities)
          if (!check_identity(l, id).holds) in = false;
        if (in) probes.push_back(l);
      }
  }
  auto res = explore_relatively_free(variety, generators, depth, probes);
  json rep;
  rep["kind"] = opt.value("kind", "distributive");
  rep["level"] = variety.level;
  rep["generators"] = generators;
  rep["depth"] = depth;
  rep["probe_count"] = int(probes.size());
  rep["class_count"] = res.class_count;
  rep["counts_by_depth"] = res.counts_by_depth;
  json reps = json::array();
  for (auto& t : res.representatives) reps.push_back(format_term(t));
  rep["representatives"] = std::move(reps);
  return rep.dump(2) + "\n";
}

std::string spanning_report(const FiniteLattice* window, const std::string& options_json) {
  json opt = parse_json(options_json, "invalid options");
  if (!opt.is_object()) bad("options must be a JSON object");
  reject_unknown_keys(
      opt, {"implicit", "dual", "prefix", "two_by_z_window", "witness", "hypothesis"},
      "options");

  bool implicit = false, dual_order = false;
  int prefix = 0;
  try {
    implicit = opt.value("implicit", false);
    dual_order = opt.value("dual", false);
    prefix = opt.value("prefix", 0);
  } catch (const std::exception& e) {
    bad(std::string("invalid options: ") + e.what());
  }
  if (prefix < 0) bad("prefix must be nonnegative");

  json rep;
  SpanningCheckReport check;
  bool hypothesis_ok = true;

  if (implicit) {
    if (opt.contains("two_by_z_window") || opt.contains("hypothesis"))
      bad("implicit mode takes only witness, prefix and dual");
    TwoByZWitness w = two_by_z_canonical(dual_order);
    if (opt.contains("witness") && opt["witness"].is_object()) {
      auto coord = [&](const json& j) -> std::pair<int, int> {
        if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
            !j[1].is_number_integer())
          bad("coordinates must be [i, k] integer pairs");
        return {j[0].get<int>(), j[1].get<int>()};
      };
      const json& jw = opt["witness"];
      reject_unknown_keys(jw, {"p", "q", "ascending", "descending"}, "witness");
      w.canonical = false;
      if (jw.contains("p")) w.p = coord(jw["p"]);
      if (jw.contains("q")) w.q = coord(jw["q"]);
      w.ascending.clear();
      w.descending.clear();
      for (auto& e : jw.value("ascending", json::array())) w.ascending.push_back(coord(e));
      for (auto& e : jw.value("descending", json::array())) w.descending.push_back(coord(e));
    } else if (opt.contains("witness") && opt["witness"] != "two_by_z_canonical") {
      bad("witness must be \"two_by_z_canonical\" or an object");
    }
    check = verify_spanning_pair(w, prefix, dual_order);
    rep["mode"] = "implicit";
    rep["dual"] = dual_order;
    json viol = json::array();
    for (std::size_t i = 0; i + 1 < check.violating.size(); i += 2)
      viol.push_back({check.violating[i], check.violating[i + 1]});
    rep["prefix"] = prefix;
    rep["prefix_ok"] = check.prefix_ok;
    rep["violation"] = check.violation;
    rep["violating"] = std::move(viol);
    rep["unboundedness"] = unboundedness_name(check.unboundedness);
    rep["refuting_bounds"] = json::array();
  } else {
    if (dual_order) bad("dual applies to implicit mode only");
    std::optional<TwoByZWindow> tw;
    if (opt.contains("two_by_z_window")) {
      const json& jw = opt["two_by_z_window"];
      if (!jw.is_array() || jw.size() != 2 || !jw[0].is_number_integer() ||
          !jw[1].is_number_integer())
        bad("two_by_z_window must be [lo, hi]");
      int lo = jw[0].get<int>(), hi = jw[1].get<int>();
      if (lo > hi) bad("two_by_z_window needs lo <= hi");
      tw = two_by_z_window(lo, hi);
    }
    const FiniteLattice* l = tw ? &tw->lattice : window;
    if (!l) bad("no lattice supplied");

    SpanningPairWitness w;
    bool have_witness = false;
    if (!opt.contains("witness") || opt["witness"] == "two_by_z_canonical") {
      if (!tw) bad("the canonical witness needs a two_by_z window");
      w = canonical_window_witness(*tw, prefix);
      have_witness = true;
    } else if (opt["witness"].is_object()) {
      const json& jw = opt["witness"];
      reject_unknown_keys(jw, {"p", "q", "ascending", "descending"}, "witness");
      auto elem = [&](const json& j) {
        if (!j.is_string()) bad("witness elements are names");
        int e = l->index_of(j.get<std::string>());
        if (e < 0)
          fail(Err::UnknownElement, "unknown element \"" + j.get<std::string>() + "\"");
        return e;
      };
      if (!jw.contains("p") || !jw.contains("q")) bad("witness needs p and q");
      w.p = elem(jw["p"]);
      w.q = elem(jw["q"]);
      for (auto& e : jw.value("ascending", json::array())) w.ascending.push_back(elem(e));
      for (auto& e : jw.value("descending", json::array())) w.descending.push_back(elem(e));
      have_witness = true;
    } else {
      bad("witness must be \"two_by_z_canonical\" or an object");
    }

    check = verify_spanning_pair(*l, w, prefix);
    rep["mode"] = "window";
    rep["prefix"] = prefix;
    rep["prefix_ok"] = check.prefix_ok;
    rep["violation"] = check.violation;
    rep["violating"] = element_names(*l, check.violating);
    rep["unboundedness"] = unboundedness_name(check.unboundedness);
    rep["refuting_bounds"] = element_names(*l, check.refuting_bounds);
    if (opt.contains("hypothesis")) {
      if (!opt["hypothesis"].is_number_integer()) bad("hypothesis must be an integer claim");
      int claim = opt["hypothesis"].get<int>();
      Bitset interior = tw ? tw->interior() : Bitset(l->size());
      hypothesis_ok = check_theorem6_hypothesis(*l, claim, tw ? &interior : nullptr);
      rep["hypothesis_claim"] = claim;
      rep["hypothesis_ok"] = hypothesis_ok;
    }
    (void)have_witness;
  }
  rep["ok"] = check.prefix_ok && hypothesis_ok;
  return rep.dump(2) + "\n";
}

std::string emit_dot(const FiniteLattice& l) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < l.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + quote(l.names()[std::size_t(i)]) + "];\n";
  for (int i = 0; i < l.size(); ++i)
    for (int j : l.upper_covers(i))
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latkit
