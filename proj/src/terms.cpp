#include "latkit/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

#include "latkit/error.hpp"

namespace latkit {
namespace {

Term node(TermNode::Op op, std::string name, Term a, Term b) {
  auto n = std::make_shared<TermNode>();
  n->op = op;
  n->name = std::move(name);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t->op == TermNode::Op::var) {
    out.insert(t->name);
    return;
  }
  collect_vars(t->lhs, out);
  collect_vars(t->rhs, out);
}

std::string fmt(const Term& t, TermNode::Op parent) {
  if (t->op == TermNode::Op::var) return t->name;
  std::string s = fmt(t->lhs, t->op) + (t->op == TermNode::Op::join ? " v " : "^") +
                  fmt(t->rhs, t->op);
  if (parent != TermNode::Op::var && parent != t->op) s = "(" + s + ")";
  return s;
}

// postfix program: opcode -1 join, -2 meet, >= 0 push variable slot
void compile(const Term& t, const std::vector<std::string>& vars, std::vector<int>& prog) {
  if (t->op == TermNode::Op::var) {
    auto it = std::find(vars.begin(), vars.end(), t->name);
    if (it == vars.end()) throw Error(Err::UnboundVariable, "variable " + t->name + " not bound");
    prog.push_back(int(it - vars.begin()));
    return;
  }
  compile(t->lhs, vars, prog);
  compile(t->rhs, vars, prog);
  prog.push_back(t->op == TermNode::Op::join ? -1 : -2);
}

int run(const std::vector<int>& prog, const FiniteLattice& l, const std::vector<int>& slots) {
  // stack depth is bounded by program length
  static thread_local std::vector<int> stack;
  stack.clear();
  for (int op : prog) {
    if (op >= 0) {
      stack.push_back(slots[op]);
    } else {
      int b = stack.back();
      stack.pop_back();
      int a = stack.back();
      stack.back() = op == -1 ? l.join(a, b) : l.meet(a, b);
    }
  }
  return stack.back();
}

struct Tokenizer {
  std::string_view src;
  size_t pos = 0;

  // kinds: '(' ')' '^' 'v' (join), 'x' identifier, 0 end
  char kind = 0;
  std::string ident;

  void next() {
    while (pos < src.size() && std::isspace(uint8_t(src[pos]))) ++pos;
    if (pos == src.size()) {
      kind = 0;
      return;
    }
    char c = src[pos];
    if (c == '(' || c == ')' || c == '^') {
      kind = c;
      ++pos;
      return;
    }
    if (std::isalnum(uint8_t(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() && (std::isalnum(uint8_t(src[pos])) || src[pos] == '_')) ++pos;
      ident = std::string(src.substr(start, pos - start));
      kind = ident == "v" ? 'v' : 'x';
      return;
    }
    throw Error(Err::ParseError, "unexpected character '" + std::string(1, c) + "' in term");
  }
};

Term parse_expr(Tokenizer& tz);

Term parse_atom(Tokenizer& tz) {
  if (tz.kind == '(') {
    tz.next();
    Term t = parse_expr(tz);
    if (tz.kind != ')') throw Error(Err::ParseError, "expected ')'");
    tz.next();
    return t;
  }
  if (tz.kind == 'x') {
    Term t = term_var(tz.ident);
    tz.next();
    return t;
  }
  throw Error(Err::ParseError, "expected a variable or '('");
}

Term parse_expr(Tokenizer& tz) {
  Term t = parse_atom(tz);
  char op = 0;
  while (tz.kind == '^' || tz.kind == 'v') {
    if (op == 0)
      op = tz.kind;
    else if (op != tz.kind)
      throw Error(Err::ParseError, "mixed ^ and v need parentheses");
    tz.next();
    Term rhs = parse_atom(tz);
    t = op == 'v' ? term_join(t, rhs) : term_meet(t, rhs);
  }
  return t;
}

}  // namespace

Term term_var(std::string name) { return node(TermNode::Op::var, std::move(name), {}, {}); }
Term term_join(Term a, Term b) { return node(TermNode::Op::join, {}, std::move(a), std::move(b)); }
Term term_meet(Term a, Term b) { return node(TermNode::Op::meet, {}, std::move(a), std::move(b)); }

int term_size(const Term& t) {
  if (t->op == TermNode::Op::var) return 1;
  return 1 + term_size(t->lhs) + term_size(t->rhs);
}

std::vector<std::string> term_variables(const Term& t) {
  std::set<std::string> vars;
  collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

std::string format_term(const Term& t) { return fmt(t, TermNode::Op::var); }

Term parse_term(std::string_view src) {
  Tokenizer tz{src};
  tz.next();
  Term t = parse_expr(tz);
  if (tz.kind != 0) throw Error(Err::ParseError, "trailing input after term");
  return t;
}

int evaluate(const Term& t, const FiniteLattice& l,
             const std::map<std::string, int>& assignment) {
  if (t->op == TermNode::Op::var) {
    auto it = assignment.find(t->name);
    if (it == assignment.end())
      throw Error(Err::UnboundVariable, "variable " + t->name + " not bound");
    if (it->second < 0 || it->second >= l.size())
      throw Error(Err::UnknownElement, "assignment out of range", {it->second});
    return it->second;
  }
  int a = evaluate(t->lhs, l, assignment);
  int b = evaluate(t->rhs, l, assignment);
  return t->op == TermNode::Op::join ? l.join(a, b) : l.meet(a, b);
}

IdentitySpec make_identity(Term left, Term right) {
  std::set<std::string> vars;
  collect_vars(left, vars);
  collect_vars(right, vars);
  return IdentitySpec{std::move(left), std::move(right), {vars.begin(), vars.end()}};
}

IdentitySpec parse_identity(std::string_view src) {
  size_t eq = src.find('=');
  if (eq == std::string_view::npos) throw Error(Err::ParseError, "identity needs '='");
  if (src.find('=', eq + 1) != std::string_view::npos)
    throw Error(Err::ParseError, "identity has more than one '='");
  return make_identity(parse_term(src.substr(0, eq)), parse_term(src.substr(eq + 1)));
}

IdentityCheck check_identity(const FiniteLattice& l, const IdentitySpec& spec) {
  int k = int(spec.variables.size());
  if (k > kIdentityVarCap)
    throw Error(Err::CapExceeded, "identity uses " + std::to_string(k) +
                                      " variables, cap is " + std::to_string(kIdentityVarCap));
  std::vector<int> left, right;
  compile(spec.left, spec.variables, left);
  compile(spec.right, spec.variables, right);
  if (k == 0) {
    // no variables can only happen with malformed specs; nothing to scan
    return IdentityCheck{true, {}};
  }
  std::vector<int> slots(k, 0);
  // odometer with the last variable fastest = lexicographic order, so the
  // first failure is the least witness
  while (true) {
    if (run(left, l, slots) != run(right, l, slots)) {
      IdentityCheck out{false, {}};
      for (int i = 0; i < k; ++i) out.witness[spec.variables[i]] = slots[i];
      return out;
    }
    int i = k - 1;
    while (i >= 0 && slots[i] == l.size() - 1) slots[i--] = 0;
    if (i < 0) return IdentityCheck{true, {}};
    ++slots[i];
  }
}

IdentitySpec sd_identity(int n, SdPolarity polarity) {
  if (n < 0) throw Error(Err::BadDocument, "sd_identity level must be nonnegative");
  Term x = term_var("x"), y = term_var("y"), z = term_var("z");
  Term yk = y, zk = z;
  for (int k = 0; k < n; ++k) {
    Term yn, zn;
    if (polarity == SdPolarity::meet) {
      yn = term_join(y, term_meet(x, zk));
      zn = term_join(z, term_meet(x, yk));
    } else {
      yn = term_meet(y, term_join(x, zk));
      zn = term_meet(z, term_join(x, yk));
    }
    yk = yn;
    zk = zn;
  }
  if (polarity == SdPolarity::meet)
    return make_identity(term_meet(x, term_join(y, z)), term_meet(x, yk));
  return make_identity(term_join(x, term_meet(y, z)), term_join(x, yk));
}

std::optional<int> sd_level(const FiniteLattice& l, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    if (check_identity(l, sd_identity(n, SdPolarity::meet)).holds &&
        check_identity(l, sd_identity(n, SdPolarity::join)).holds)
      return n;
  return std::nullopt;
}

std::vector<IdentitySpec> VarietySpec::identities() const {
  switch (kind) {
    case Kind::distributive:
      return {make_identity(
          term_meet(term_var("x"), term_join(term_var("y"), term_var("z"))),
          term_join(term_meet(term_var("x"), term_var("y")),
                    term_meet(term_var("x"), term_var("z"))))};
    case Kind::sd_meet:
      return {sd_identity(level, SdPolarity::meet)};
    case Kind::sd_join:
      return {sd_identity(level, SdPolarity::join)};
    case Kind::sd_both:
      return {sd_identity(level, SdPolarity::meet), sd_identity(level, SdPolarity::join)};
  }
  throw Error(Err::Internal, "bad variety kind");
}

ExploreResult explore_relatively_free(const VarietySpec& variety, int generators, int depth,
                                      const std::vector<FiniteLattice>& probes) {
  if (generators < 1 || generators > kIdentityVarCap)
    throw Error(Err::CapExceeded, "generator count must be between 1 and " +
                                      std::to_string(kIdentityVarCap));
  if (depth < 0) throw Error(Err::BadDocument, "depth must be nonnegative");
  if (probes.empty()) throw Error(Err::BadDocument, "need at least one probe lattice");
  auto ids = variety.identities();
  for (size_t p = 0; p < probes.size(); ++p)
    for (auto& id : ids)
      if (!check_identity(probes[p], id).holds)
        throw Error(Err::ProbeOutsideVariety,
                    "probe " + std::to_string(p) + " violates a variety identity", {int(p)});

  // evaluation vector layout: one byte per (probe, assignment) coordinate,
  // assignments in odometer order per probe
  struct Segment {
    const FiniteLattice* l;
    size_t offset, length;
  };
  std::vector<Segment> segments;
  size_t total = 0;
  for (auto& p : probes) {
    if (p.size() > 255) throw Error(Err::CapExceeded, "probe too large for byte evaluation");
    size_t len = 1;
    for (int g = 0; g < generators; ++g) len *= size_t(p.size());
    segments.push_back({&p, total, len});
    total += len;
  }

  auto base_vector = [&](int gen) {
    std::string v(total, char(0));
    for (auto& seg : segments) {
      int n = seg.l->size();
      // coordinate index decodes to the assignment; generator `gen` cycles
      // with period n^(generators-gen)
      size_t period = 1;
      for (int g = generators - 1; g > gen; --g) period *= size_t(n);
      for (size_t i = 0; i < seg.length; ++i)
        v[seg.offset + i] = char(uint8_t((i / period) % size_t(n)));
    }
    return v;
  };
  auto combine = [&](const std::string& a, const std::string& b, bool is_join) {
    std::string v(total, char(0));
    for (auto& seg : segments) {
      const FiniteLattice& l = *seg.l;
      for (size_t i = seg.offset; i < seg.offset + seg.length; ++i)
        v[i] = char(uint8_t(is_join ? l.join(uint8_t(a[i]), uint8_t(b[i]))
                                    : l.meet(uint8_t(a[i]), uint8_t(b[i]))));
    }
    return v;
  };

  std::vector<std::string> vecs;
  ExploreResult out;
  std::unordered_map<std::string, int> seen;
  auto add = [&](std::string v, Term t) {
    auto [it, fresh] = seen.emplace(std::move(v), int(out.representatives.size()));
    if (!fresh) return;
    vecs.push_back(it->first);
    out.representatives.push_back(std::move(t));
  };

  for (int g = 0; g < generators; ++g)
    add(base_vector(g), term_var("x" + std::to_string(g + 1)));
  out.counts_by_depth.push_back(int(out.representatives.size()));

  for (int d = 1; d <= depth; ++d) {
    size_t before = out.representatives.size();
    for (size_t i = 0; i < before; ++i)
      for (size_t j = i; j < before; ++j) {
        add(combine(vecs[i], vecs[j], true), term_join(out.representatives[i],
                                                       out.representatives[j]));
        add(combine(vecs[i], vecs[j], false), term_meet(out.representatives[i],
                                                        out.representatives[j]));
      }
    out.counts_by_depth.push_back(int(out.representatives.size()));
    if (out.representatives.size() == before) {
      // fixpoint: deeper rounds cannot separate anything new
      while (int(out.counts_by_depth.size()) <= depth)
        out.counts_by_depth.push_back(int(out.representatives.size()));
      break;
    }
  }
  out.class_count = int(out.representatives.size());
  return out;
}

}  // namespace latkit
