#ifndef SISO_H
#define SISO_H

/* C interface to the siso engine: systems of partial isometries on finite
 * metric forests, their induction moves, and the lamination diagnostics.
 *
 * Conventions:
 *   - every fallible call returns a siso_errc (SISO_OK == 0 on success);
 *   - on failure, out parameters are left untouched and siso_last_message()
 *     holds a description (thread-local, overwritten by the next failure);
 *   - strings handed out through `char**` are heap-allocated; release them
 *     with siso_string_free;
 *   - all reports are deterministic: same document, same options, same bytes.
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Values are stable; new codes are only ever appended. */
typedef enum siso_errc {
  SISO_OK = 0,
  SISO_FIELD_MISMATCH = 1,
  SISO_DIVISION_BY_ZERO = 2,
  SISO_NOT_SQUARE_FREE = 3,
  SISO_NON_POSITIVE_LENGTH = 4,
  SISO_CYCLE_DETECTED = 5,
  SISO_DISCONNECTED = 6,
  SISO_BAD_INDEX = 7,
  SISO_HOST_MISMATCH = 8,
  SISO_OUTSIDE_HOST = 9,
  SISO_ISOMETRY_VIOLATION = 10,
  SISO_CONTAINMENT_VIOLATION = 11,
  SISO_ANCHOR_DEFICIT = 12,
  SISO_UNREDUCED_WORD = 13,
  SISO_BUDGET_EXCEEDED = 14,
  SISO_EMPTY_OUTPUT = 15,
  SISO_NOT_A_SPLITTING_POINT = 16,
  SISO_FREENESS_VIOLATION = 17,
  SISO_KEANE_VIOLATION = 18,
  SISO_INVALID_IET = 19,
  SISO_PARSE_ERROR = 20,
  SISO_IO_ERROR = 21,
  SISO_USAGE_ERROR = 22,
  SISO_INTERNAL_ERROR = 23
} siso_errc;

/* Verdict of an analysis, for exit-code mapping. */
typedef enum siso_verdict {
  SISO_PASS = 0,
  SISO_FAIL = 1,
  SISO_INCONCLUSIVE = 2
} siso_verdict;

const char* siso_version(void);
const char* siso_errc_name(int code);
const char* siso_last_message(void);
void siso_string_free(char* s);

/* A parsed document: either a system of isometries or an interval exchange.
 * Release with siso_free. Analyses that need a system accept an exchange
 * document too and suspend it on the fly. */
typedef struct siso_doc siso_doc;

int siso_read(const char* path, siso_doc** out);
int siso_parse(const char* text, siso_doc** out);
void siso_free(siso_doc* d);

int siso_is_iet(const siso_doc* d);

/* Canonical document text (parse(emit) is byte-identical). */
int siso_emit(const siso_doc* d, char** out);

/* Validation summary of whatever the document holds. */
int siso_describe(const siso_doc* d, char** out);

/* The document's scalar field, written "rational" or "quad:<d>". Checked
 * against `field` when that is non-NULL (SISO_FIELD_MISMATCH otherwise). */
int siso_field(const siso_doc* d, const char* field, char** out);

/* Associated graph: text report and DOT export. */
int siso_report_gamma(const siso_doc* d, char** out);
int siso_dot_gamma(const siso_doc* d, char** out);

/* Induction moves. `rips` folds up to max_steps trimming moves (stopping
 * at a fixed point); `split` locates the splitting points and, unless
 * find_only, performs the simultaneous splitting; `induct` runs the full
 * alternation and reports the classification. */
int siso_report_rips(const siso_doc* d, int max_steps, char** out);
int siso_report_split(const siso_doc* d, int find_only, char** out);
int siso_report_induction(const siso_doc* d, int max_steps, char** out);

/* Lamination diagnostics. Budgets bound the number of words visited. */
int siso_report_turns(const siso_doc* d, int legality_L, long long budget,
                      char** out);
int siso_report_whitehead(const siso_doc* d, int legality_L, long long budget,
                          int* verdict, char** out);
int siso_dot_whitehead(const siso_doc* d, int legality_L, long long budget,
                       char** out);
int siso_report_minimality(const siso_doc* d, int depth_n, int recurrence_R,
                           long long budget, int* verdict, char** out);

/* Leaf sets of depth depth_n through every singular point, with their
 * diagonal closures. */
int siso_report_diagonal(const siso_doc* d, int depth_n, long long budget,
                         char** out);

/* Index bounds over the singular points at the given radius; FAIL when a
 * sum exceeds 2*rank - 2. siso_singular_count and siso_dot_orbit expose
 * the orbit graph of the k-th singular point for export. */
int siso_report_index(const siso_doc* d, int radius_r, long long budget,
                      int* verdict, char** out);
int siso_singular_count(const siso_doc* d, int* out);
int siso_dot_orbit(const siso_doc* d, int which, int radius_r,
                   long long budget, char** out);

/* Interval-exchange front end; these require an exchange document.
 * siso_convert_iet emits the suspension as a system document. */
int siso_report_rauzy(const siso_doc* d, int max_steps, char** out);
int siso_report_compare(const siso_doc* d, int steps, int* verdict,
                        char** out);
int siso_convert_iet(const siso_doc* d, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SISO_H */
