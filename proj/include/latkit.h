#ifndef LATKIT_H
#define LATKIT_H

/* C interface to the lattice toolkit. Handles are opaque; every entry point
 * stores a thread-local status + message + integer witness, cleared on entry,
 * so a NULL or negative return can be diagnosed with latkit_last_status().
 * Strings returned as char* are heap copies owned by the caller; release them
 * with latkit_string_free. const char* returns borrow from the handle and
 * stay valid until it is freed. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct latkit_lattice latkit_lattice;

typedef enum latkit_status {
  LATKIT_OK = 0,
  LATKIT_E_NOT_A_PARTIAL_ORDER = 1,
  LATKIT_E_NOT_A_LATTICE = 2,
  LATKIT_E_CAP_EXCEEDED = 3,
  LATKIT_E_SIZE_GUARD = 4,
  LATKIT_E_NOT_DISTRIBUTIVE = 5,
  LATKIT_E_NOT_CONVEX = 6,
  LATKIT_E_NOT_AN_INTERVAL = 7,
  LATKIT_E_CARRIER_MISMATCH = 8,
  LATKIT_E_NOT_A_HOMOMORPHISM = 9,
  LATKIT_E_NOT_DISTRIBUTIVE_TARGET = 10,
  LATKIT_E_UNKNOWN_FIXTURE = 11,
  LATKIT_E_UNKNOWN_ELEMENT = 12,
  LATKIT_E_UNBOUND_VARIABLE = 13,
  LATKIT_E_PROBE_OUTSIDE_VARIETY = 14,
  LATKIT_E_BUDGET_EXCEEDED = 15,
  LATKIT_E_UNCLASSIFIABLE_GADGET = 16,
  LATKIT_E_ELEMENT_OUT_OF_WINDOW = 17,
  LATKIT_E_PARSE_ERROR = 18,
  LATKIT_E_BAD_DOCUMENT = 19,
  LATKIT_E_INTERNAL = 20
} latkit_status;

/* ------------------------------------------------------------ construction */

/* Evaluates a construction expression: chain(n), boolean(n), fd(n),
 * product(e,e), linsum(e,...), lexsum(e,...), two_by_z(lo,hi),
 * double(e, region=[...], interval=b), quotient(e, [[a,b],...]), fixture
 * names, or a bare integer for chain(n). NULL on error. */
latkit_lattice* latkit_parse_construction(const char* expr);

/* Validates an interchange document (JSON with format_version "1", elements,
 * covers). NULL on error. */
latkit_lattice* latkit_document_parse(const char* json_text);

void latkit_lattice_free(latkit_lattice* l);

/* ----------------------------------------------------------------- queries */

int latkit_size(const latkit_lattice* l); /* -1 on error */

/* Borrowed pointer, NULL when e is out of range. */
const char* latkit_element_name(const latkit_lattice* l, int e);

/* -1 when no element carries the name (status LATKIT_E_UNKNOWN_ELEMENT). */
int latkit_element_index(const latkit_lattice* l, const char* name);

int latkit_leq(const latkit_lattice* l, int a, int b);  /* 1, 0, or -1 on error */
int latkit_join(const latkit_lattice* l, int a, int b); /* -1 on error */
int latkit_meet(const latkit_lattice* l, int a, int b); /* -1 on error */

/* -------------------------------------------------------------- transforms */

/* Quotient by the congruence generated by npairs element pairs, flattened as
 * pairs[0],pairs[1], pairs[2],pairs[3], ... NULL on error. */
latkit_lattice* latkit_quotient_collapse(const latkit_lattice* l, const int* pairs,
                                         int npairs);

/* Doubles the given region (nregion element indices); interval != 0 also
 * requires the region to be the full interval of its extrema. NULL on error. */
latkit_lattice* latkit_double_region(const latkit_lattice* l, const int* region, int nregion,
                                     int interval);

/* ----------------------------------------------------------------- reports */

char* latkit_document_dump(const latkit_lattice* l);

/* Structural report: size, width, law flags, sd level, Whitman flag, doubly
 * reducible elements, block tags, gadget census, boundedness, verdict. */
char* latkit_analyze(const latkit_lattice* l);

/* Free-embeddability verdict with evidence. */
char* latkit_decide(const latkit_lattice* l);

/* Gadget census plus one record per classified triple. */
char* latkit_gadgets(const latkit_lattice* l);

/* Relatively-free exploration; options documented with the io layer:
 * {"kind","level","generators","depth","probe_cap","probes"}. */
char* latkit_explore(const char* options_json);

/* Spanning-pair check; l may be NULL for implicit or two_by_z_window modes.
 * Options: {"implicit","dual","prefix","two_by_z_window","witness",
 * "hypothesis"}. */
char* latkit_spanning_check(const latkit_lattice* l, const char* options_json);

/* Hasse diagram as DOT text. */
char* latkit_dot(const latkit_lattice* l);

void latkit_string_free(char* s);

/* ------------------------------------------------------------------ errors */

latkit_status latkit_last_status(void);

/* Borrowed pointer into thread-local storage; valid until the next call on
 * this thread. Empty string when the last call succeeded. */
const char* latkit_last_message(void);

/* Copies up to cap witness elements into out, returns the full length. */
int latkit_last_witness(int* out, int cap);

/* Stable identifier, e.g. "NotALattice"; "OK" for LATKIT_OK. */
const char* latkit_status_name(latkit_status s);

#ifdef __cplusplus
}
#endif

#endif /* LATKIT_H */
