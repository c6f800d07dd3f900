#include "latkit.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/error.hpp"
#include "latkit/io.hpp"
#include "latkit/lattice.hpp"

struct latkit_lattice {
  latkit::FiniteLattice impl;
};

namespace {

thread_local latkit_status g_status = LATKIT_OK;
thread_local std::string g_message;
thread_local std::vector<int> g_witness;

template <class T, class F>
T guarded(T fallback, F&& f) {
  g_status = LATKIT_OK;
  g_message.clear();
  g_witness.clear();
  try {
    return f();
  } catch (const latkit::Error& e) {
    g_status = latkit_status(int(e.code) + 1);
    g_message = e.what();
    g_witness = e.witness;
  } catch (const std::exception& e) {
    g_status = LATKIT_E_INTERNAL;
    g_message = e.what();
  } catch (...) {
    g_status = LATKIT_E_INTERNAL;
    g_message = "unknown failure";
  }
  return fallback;
}

void require(bool ok, latkit::Err code, const char* msg) {
  if (!ok) latkit::fail(code, msg);
}

const latkit::FiniteLattice& deref(const latkit_lattice* l) {
  require(l != nullptr, latkit::Err::Internal, "null lattice handle");
  return l->impl;
}

void require_element(const latkit::FiniteLattice& l, int e) {
  require(e >= 0 && e < l.size(), latkit::Err::UnknownElement, "element index out of range");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  require(out != nullptr, latkit::Err::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

latkit_lattice* wrap(latkit::FiniteLattice l) { return new latkit_lattice{std::move(l)}; }

}  // namespace

extern "C" {

latkit_lattice* latkit_parse_construction(const char* expr) {
  return guarded<latkit_lattice*>(nullptr, [&] {
    require(expr != nullptr, latkit::Err::ParseError, "null expression");
    return wrap(latkit::parse_construction(expr));
  });
}

latkit_lattice* latkit_document_parse(const char* json_text) {
  return guarded<latkit_lattice*>(nullptr, [&] {
    require(json_text != nullptr, latkit::Err::BadDocument, "null document");
    return wrap(latkit::document_to_lattice(json_text));
  });
}

void latkit_lattice_free(latkit_lattice* l) { delete l; }

int latkit_size(const latkit_lattice* l) {
  return guarded(-1, [&] { return deref(l).size(); });
}

const char* latkit_element_name(const latkit_lattice* l, int e) {
  return guarded<const char*>(nullptr, [&]() -> const char* {
    const auto& impl = deref(l);
    require_element(impl, e);
    return impl.names()[std::size_t(e)].c_str();
  });
}

int latkit_element_index(const latkit_lattice* l, const char* name) {
  return guarded(-1, [&] {
    const auto& impl = deref(l);
    require(name != nullptr, latkit::Err::UnknownElement, "null element name");
    int e = impl.index_of(name);
    require(e >= 0, latkit::Err::UnknownElement,
            "no element carries this name");
    return e;
  });
}

int latkit_leq(const latkit_lattice* l, int a, int b) {
  return guarded(-1, [&] {
    const auto& impl = deref(l);
    require_element(impl, a);
    require_element(impl, b);
    return impl.leq(a, b) ? 1 : 0;
  });
}

int latkit_join(const latkit_lattice* l, int a, int b) {
  return guarded(-1, [&] {
    const auto& impl = deref(l);
    require_element(impl, a);
    require_element(impl, b);
    return impl.join(a, b);
  });
}

int latkit_meet(const latkit_lattice* l, int a, int b) {
  return guarded(-1, [&] {
    const auto& impl = deref(l);
    require_element(impl, a);
    require_element(impl, b);
    return impl.meet(a, b);
  });
}

latkit_lattice* latkit_quotient_collapse(const latkit_lattice* l, const int* pairs,
                                         int npairs) {
  return guarded<latkit_lattice*>(nullptr, [&] {
    const auto& impl = deref(l);
    require(npairs == 0 || pairs != nullptr, latkit::Err::Internal, "null pair array");
    auto cong = latkit::Congruence::identity(impl);
    for (int i = 0; i < npairs; ++i) {
      int a = pairs[2 * i], b = pairs[2 * i + 1];
      require_element(impl, a);
      require_element(impl, b);
      cong = latkit::congruence_join(impl, cong, latkit::principal_congruence(impl, a, b));
    }
    return wrap(latkit::quotient(impl, cong).lattice);
  });
}

latkit_lattice* latkit_double_region(const latkit_lattice* l, const int* region, int nregion,
                                     int interval) {
  return guarded<latkit_lattice*>(nullptr, [&] {
    const auto& impl = deref(l);
    require(nregion == 0 || region != nullptr, latkit::Err::Internal, "null region array");
    latkit::Bitset c(impl.size());
    for (int i = 0; i < nregion; ++i) {
      require_element(impl, region[i]);
      c.set(region[i]);
    }
    return wrap(latkit::day_double(impl, latkit::DoublingSpec{c, interval != 0}).lattice);
  });
}

char* latkit_document_dump(const latkit_lattice* l) {
  return guarded<char*>(nullptr, [&] { return copy_out(latkit::lattice_to_document(deref(l))); });
}

char* latkit_analyze(const latkit_lattice* l) {
  return guarded<char*>(nullptr, [&] { return copy_out(latkit::analyze(deref(l))); });
}

char* latkit_decide(const latkit_lattice* l) {
  return guarded<char*>(nullptr, [&] { return copy_out(latkit::decide_report(deref(l))); });
}

char* latkit_gadgets(const latkit_lattice* l) {
  return guarded<char*>(nullptr, [&] { return copy_out(latkit::gadget_report(deref(l))); });
}

char* latkit_explore(const char* options_json) {
  return guarded<char*>(nullptr, [&] {
    require(options_json != nullptr, latkit::Err::BadDocument, "null options");
    return copy_out(latkit::explore_report(options_json));
  });
}

char* latkit_spanning_check(const latkit_lattice* l, const char* options_json) {
  return guarded<char*>(nullptr, [&] {
    require(options_json != nullptr, latkit::Err::BadDocument, "null options");
    return copy_out(latkit::spanning_report(l ? &l->impl : nullptr, options_json));
  });
}

char* latkit_dot(const latkit_lattice* l) {
  return guarded<char*>(nullptr, [&] { return copy_out(latkit::emit_dot(deref(l))); });
}

void latkit_string_free(char* s) { std::free(s); }

latkit_status latkit_last_status(void) { return g_status; }

const char* latkit_last_message(void) { return g_message.c_str(); }

int latkit_last_witness(int* out, int cap) {
  int n = int(g_witness.size());
  for (int i = 0; i < n && i < cap && out; ++i) out[i] = g_witness[std::size_t(i)];
  return n;
}

const char* latkit_status_name(latkit_status s) {
  if (s == LATKIT_OK) return "OK";
  if (s < LATKIT_E_NOT_A_PARTIAL_ORDER || s > LATKIT_E_INTERNAL) return "Unknown";
  return latkit::err_name(latkit::Err(int(s) - 1));
}

}  // extern "C"
