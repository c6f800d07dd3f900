#pragma once

#include <map>
#include <string>
#include <string_view>

#include "latkit/lattice.hpp"

namespace latkit {

// Interchange document: UTF-8 JSON object with format_version "1", elements
// (array of unique names) and covers (array of [lower, upper] name pairs);
// an optional metadata object is tolerated and otherwise ignored. Unknown
// keys are rejected with BadDocument; the cover relation must present a
// lattice or from_covers raises the usual order errors.
FiniteLattice document_to_lattice(const std::string& json_text);
std::string lattice_to_document(const FiniteLattice& l,
                                const std::map<std::string, std::string>& metadata = {});

// Construction expressions:
//   chain(n) | boolean(n) | fd(n) | product(e,e) | linsum(e,...) |
//   lexsum(e,...) | two_by_z(lo,hi) | double(e, region=[names...],
//   interval=true|false) | quotient(e, [[a,b],...]) | <fixture name>
// and a bare integer n abbreviates chain(n). Element names may be written
// bare or double-quoted (quotes are required for names like "(0,1)").
FiniteLattice parse_construction(std::string_view expr);

// One-object structural report: size, width, law flags, semidistributivity
// level, doubly reducible elements, block tags, gadget census, boundedness
// and the free-embeddability verdict. Key order is fixed.
std::string analyze(const FiniteLattice& l);

// Free-embeddability verdict with evidence and block tags.
std::string decide_report(const FiniteLattice& l);

// Gadget census plus one record per classified triple.
std::string gadget_report(const FiniteLattice& l);

// Relatively-free exploration. Options object:
//   {"kind": "distributive"|"sd_meet"|"sd_join"|"sd_both", "level": n,
//    "generators": g, "depth": d, "probe_cap": c, "probes": [expr...]}
// Probes default to every lattice of size <= probe_cap satisfying the
// variety's identities; explicit probes are construction expressions.
std::string explore_report(const std::string& options_json);

// Spanning-pair verification. Options object:
//   {"implicit": bool, "dual": bool, "prefix": n,
//    "two_by_z_window": [lo, hi],
//    "witness": "two_by_z_canonical" | {"p": .., "q": ..,
//                "ascending": [..], "descending": [..]},
//    "hypothesis": n_claim}
// Implicit mode works on the coordinate model of 2 x Z (witness entries are
// [i,k] pairs); otherwise the witness names elements of `window` or of the
// materialized two_by_z_window. hypothesis runs the reducible-antichain
// bound check, judged on the window interior when one is given.
std::string spanning_report(const FiniteLattice* window, const std::string& options_json);

// Hasse diagram as a DOT digraph, cover edges pointing upward; byte-stable.
std::string emit_dot(const FiniteLattice& l);

}  // namespace latkit
