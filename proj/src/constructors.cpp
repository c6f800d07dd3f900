#include "latkit/constructors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "latkit/config.hpp"

namespace latkit {
namespace {

void check_count(long long n) {
  if (n < 1 || n > kConstructionCap)
    throw Error(Err::CapExceeded,
                "construction would have " + std::to_string(n) + " elements, cap is " +
                    std::to_string(kConstructionCap));
}

std::string boolean_name(uint32_t mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1) {
      if (!s.empty()) s += 'v';
      s += 'a';
      s += std::to_string(i + 1);
    }
  return s;
}

// "a^c" for a generator mask; parenthesized inside joins when non-atomic.
std::string meet_term(uint32_t mask, bool wrap) {
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (mask >> i & 1) {
      if (!s.empty()) s += '^';
      s += char('a' + i);
    }
  if (wrap && std::popcount(mask) > 1) s = "(" + s + ")";
  return s;
}

std::string antichain_name(const std::vector<uint32_t>& members) {
  if (members.size() == 1) return meet_term(members[0], false);
  std::string s;
  for (uint32_t m : members) {
    if (!s.empty()) s += " v ";
    s += meet_term(m, true);
  }
  return s;
}

FiniteLattice from_named_covers(const std::vector<std::string>& names,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, int> idx;
  for (int i = 0; i < int(names.size()); ++i) idx[names[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(covers.size());
  for (auto& [lo, hi] : covers) pairs.emplace_back(idx.at(lo), idx.at(hi));
  return FiniteLattice::from_covers(int(names.size()), pairs, names);
}

FiniteLattice fixture_m3() {
  return from_named_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice fixture_n5() {
  return from_named_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// Free lattice on a + (b < c), which happens to be finite with 9 elements.
FiniteLattice fixture_fl_1_2() {
  return from_named_covers({"a^b", "a^c", "b", "(a^c)vb", "a", "(avb)^c", "avb", "c", "avc"},
                           {{"a^b", "a^c"},
                            {"a^b", "b"},
                            {"a^c", "a"},
                            {"a^c", "(a^c)vb"},
                            {"b", "(a^c)vb"},
                            {"(a^c)vb", "(avb)^c"},
                            {"(avb)^c", "avb"},
                            {"(avb)^c", "c"},
                            {"a", "avb"},
                            {"avb", "avc"},
                            {"c", "avc"}});
}

// Sublattice generated by p, q, r with q < r, p incomparable to both and the
// meets collapsing: p^q = p^r. Pentagon shaped; here p v q = p v r too.
FiniteLattice fixture_gadget_case1() {
  return from_named_covers(
      {"p^r", "p", "q", "r", "pvr"},
      {{"p^r", "p"}, {"p^r", "q"}, {"q", "r"}, {"p", "pvr"}, {"r", "pvr"}});
}

// Same generator constraints but only the meets collapse; (pvq)^r = q. A
// 2 x 3 grid.
FiniteLattice fixture_gadget_case2() {
  return from_named_covers({"p^r", "q", "r", "p", "pvq", "pvr"},
                           {{"p^r", "q"},
                            {"q", "r"},
                            {"p^r", "p"},
                            {"q", "pvq"},
                            {"r", "pvr"},
                            {"p", "pvq"},
                            {"pvq", "pvr"}});
}

// Meets collapse and (pvq)^r sits strictly between q and both pvq, r. Seven
// elements; not isomorphic to its own dual.
FiniteLattice fixture_gadget_case3() {
  return from_named_covers({"p^r", "p", "q", "(pvq)^r", "pvq", "r", "pvr"},
                           {{"p^r", "p"},
                            {"p^r", "q"},
                            {"q", "(pvq)^r"},
                            {"(pvq)^r", "pvq"},
                            {"(pvq)^r", "r"},
                            {"p", "pvq"},
                            {"pvq", "pvr"},
                            {"r", "pvr"}});
}

// 2 x 3 grid with the letter scheme x < y < z, s < t < u used by the gadget
// classification tests.
FiniteLattice fixture_gadget_fig5() {
  return from_named_covers(
      {"x", "y", "z", "s", "t", "u"},
      {{"x", "y"}, {"y", "z"}, {"x", "s"}, {"s", "t"}, {"t", "u"}, {"y", "t"}, {"z", "u"}});
}

// Free distributive lattice on a, b, c drawn element by element; the median
// (a^b) v (a^c) v (b^c) keeps its short alias z.
FiniteLattice fixture_fd3() {
  std::vector<std::string> names = {
      "a^b^c",
      "a^b", "a^c", "b^c",
      "(a^b) v (a^c)", "(a^b) v (b^c)", "(a^c) v (b^c)",
      "a", "b", "c",
      "z",
      "a v (b^c)", "b v (a^c)", "c v (a^b)",
      "a v b", "a v c", "b v c",
      "a v b v c"};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"a^b^c", "a^b"},
      {"a^b^c", "a^c"},
      {"a^b^c", "b^c"},
      {"a^b", "(a^b) v (a^c)"},
      {"a^b", "(a^b) v (b^c)"},
      {"a^c", "(a^b) v (a^c)"},
      {"a^c", "(a^c) v (b^c)"},
      {"b^c", "(a^b) v (b^c)"},
      {"b^c", "(a^c) v (b^c)"},
      {"(a^b) v (a^c)", "a"},
      {"(a^b) v (b^c)", "b"},
      {"(a^c) v (b^c)", "c"},
      {"(a^b) v (a^c)", "z"},
      {"(a^b) v (b^c)", "z"},
      {"(a^c) v (b^c)", "z"},
      {"a", "a v (b^c)"},
      {"b", "b v (a^c)"},
      {"c", "c v (a^b)"},
      {"z", "a v (b^c)"},
      {"z", "b v (a^c)"},
      {"z", "c v (a^b)"},
      {"a v (b^c)", "a v b"},
      {"a v (b^c)", "a v c"},
      {"b v (a^c)", "a v b"},
      {"b v (a^c)", "b v c"},
      {"c v (a^b)", "a v c"},
      {"c v (a^b)", "b v c"},
      {"a v b", "a v b v c"},
      {"a v c", "a v b v c"},
      {"b v c", "a v b v c"}};
  return from_named_covers(names, covers);
}

}  // namespace

FiniteLattice chain_lattice(int n) {
  check_count(n);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(n, covers);
}

FiniteLattice boolean_lattice(int n) {
  if (n < 0) throw Error(Err::CapExceeded, "boolean_lattice needs n >= 0");
  check_count(n >= 30 ? kConstructionCap + 1LL : 1LL << n);
  int size = 1 << n;
  std::vector<Bitset> up(size, Bitset(size));
  std::vector<std::string> names(size);
  for (int x = 0; x < size; ++x) {
    names[x] = boolean_name(uint32_t(x));
    for (int y = 0; y < size; ++y)
      if ((x & y) == x) up[x].set(y);
  }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  check_count(1LL * a.size() * b.size());
  int n = a.size() * b.size();
  auto id = [&](int x, int y) { return x * b.size() + y; };
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      int e = id(x, y);
      names[e] = "(" + a.name(x) + "," + b.name(y) + ")";
      for (int x2 = 0; x2 < a.size(); ++x2) {
        if (!a.leq(x, x2)) continue;
        for (int y2 = 0; y2 < b.size(); ++y2)
          if (b.leq(y, y2)) up[e].set(id(x2, y2));
      }
    }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

FiniteLattice linear_sum(const std::vector<FiniteLattice>& blocks) {
  if (blocks.empty()) throw Error(Err::BadDocument, "linear_sum needs at least one block");
  if (blocks.size() == 1) return blocks[0];
  std::vector<std::pair<int, int>> chain;
  for (int i = 0; i + 1 < int(blocks.size()); ++i) chain.emplace_back(i, i + 1);
  return lexicographic_sum(Poset::from_pairs(int(blocks.size()), chain), blocks);
}

FiniteLattice lexicographic_sum(const Poset& index, const std::vector<FiniteLattice>& blocks) {
  if (index.n != int(blocks.size()))
    throw Error(Err::BadDocument, "lexicographic_sum: index size " + std::to_string(index.n) +
                                      " does not match " + std::to_string(blocks.size()) +
                                      " blocks");
  if (index.n == 0) throw Error(Err::BadDocument, "lexicographic_sum needs at least one block");
  long long total = 0;
  std::vector<int> base(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) {
    base[i] = int(total);
    total += blocks[i].size();
  }
  check_count(total);
  int n = int(total);
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < index.n; ++i)
    for (int x = 0; x < blocks[i].size(); ++x) {
      int e = base[i] + x;
      names[e] = index.names[i] + ":" + blocks[i].name(x);
      for (int j = 0; j < index.n; ++j) {
        if (!index.leq(i, j)) continue;
        if (j == i) {
          for (int y = 0; y < blocks[i].size(); ++y)
            if (blocks[i].leq(x, y)) up[e].set(base[i] + y);
        } else {
          for (int y = 0; y < blocks[j].size(); ++y) up[e].set(base[j] + y);
        }
      }
    }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

std::vector<std::vector<uint32_t>> free_distributive_normal_forms(int n) {
  if (n < 1 || n > kFreeDistributiveCap)
    throw Error(Err::CapExceeded, "free_distributive supports 1 <= n <= " +
                                      std::to_string(kFreeDistributiveCap));
  uint32_t masks = (1u << n) - 1;  // nonempty generator subsets 1..masks
  std::vector<std::vector<uint32_t>> families;
  for (uint64_t f = 1; f <= (1ull << masks) - 1; ++f) {
    std::vector<uint32_t> members;
    for (uint32_t m = 1; m <= masks; ++m)
      if (f >> (m - 1) & 1) members.push_back(m);
    bool antichain = true;
    for (size_t i = 0; i < members.size() && antichain; ++i)
      for (size_t j = 0; j < members.size(); ++j)
        if (i != j && (members[i] & members[j]) == members[i]) {
          antichain = false;
          break;
        }
    if (antichain) families.push_back(std::move(members));
  }
  std::sort(families.begin(), families.end(),
            [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return families;
}

FiniteLattice free_distributive(int n) {
  auto families = free_distributive_normal_forms(n);
  int size = int(families.size());
  check_count(size);
  // A <= B iff every meet in A lies below some meet in B, i.e. every member
  // of A contains a member of B as a subset.
  auto below = [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    for (uint32_t ma : a) {
      bool hit = false;
      for (uint32_t mb : b)
        if ((ma & mb) == mb) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  std::vector<Bitset> up(size, Bitset(size));
  std::vector<std::string> names(size);
  for (int i = 0; i < size; ++i) {
    names[i] = antichain_name(families[i]);
    for (int j = 0; j < size; ++j)
      if (below(families[i], families[j])) up[i].set(j);
  }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"fd3",          "fl_1_2",       "gadget_case1",
                                                 "gadget_case2", "gadget_case3", "gadget_fig5",
                                                 "m3",           "n5"};
  return names;
}

FiniteLattice fixture(std::string_view name) {
  if (name == "m3") return fixture_m3();
  if (name == "n5") return fixture_n5();
  if (name == "fd3") return fixture_fd3();
  if (name == "fl_1_2") return fixture_fl_1_2();
  if (name == "gadget_case1") return fixture_gadget_case1();
  if (name == "gadget_case2") return fixture_gadget_case2();
  if (name == "gadget_case3") return fixture_gadget_case3();
  if (name == "gadget_fig5") return fixture_gadget_fig5();
  throw Error(Err::UnknownFixture, "unknown fixture \"" + std::string(name) + "\"");
}

Bitset TwoByZWindow::interior() const {
  Bitset s(lattice.size());
  for (int k = lo + 1; k < hi; ++k) {
    s.set(index(0, k));
    s.set(index(1, k));
  }
  return s;
}

TwoByZWindow two_by_z_window(int lo, int hi) {
  if (lo > hi) throw Error(Err::BadDocument, "two_by_z_window needs lo <= hi");
  long long rows = 1LL * hi - lo + 1;
  check_count(2 * rows);
  int n = int(2 * rows);
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> names(n);
  auto id = [&](int i, int k) { return (k - lo) * 2 + i; };
  for (int k = lo; k <= hi; ++k) {
    names[id(0, k)] = "(0," + std::to_string(k) + ")";
    names[id(1, k)] = "(1," + std::to_string(k) + ")";
    covers.emplace_back(id(0, k), id(1, k));
    if (k < hi) {
      covers.emplace_back(id(0, k), id(0, k + 1));
      covers.emplace_back(id(1, k), id(1, k + 1));
    }
  }
  return TwoByZWindow{FiniteLattice::from_covers(n, covers, std::move(names)), lo, hi};
}

}  // namespace latkit
