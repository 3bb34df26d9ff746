#ifndef HOMKERNEL_H
#define HOMKERNEL_H

/* C interface of the homkernel shared library.  One session holds the last
 * error message; reports come back as malloc'd JSON strings owned by the
 * caller.  All functions are safe to call from C. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hk_session hk_session;

/* Return codes of hk_run.  Nonzero means no report was produced. */
#define HK_OK 0         /* report written; inspect its verdicts */
#define HK_EINVAL 1     /* bad arguments: unusable flag values or malformed call */
#define HK_EPARSE 2     /* input document does not parse or misses required parts */
#define HK_EREF 3       /* unknown module, arrow, command, or oracle name */
#define HK_EDOMAIN 4    /* mathematical precondition unmet for the request */
#define HK_EINTERNAL 5  /* invariant violation inside the engine; please report */

hk_session* hk_open(void);
void hk_close(hk_session* session);

/* Runs one command against one input document.
 *   input_json  full document text; may be NULL for commands that need none
 *   argc/argv   command tokens, e.g. {"check", "tilting", "DA", "2"}
 *   seed        base seed for randomized searches and oracle replay
 *   cap         length bound for resolve/coresolve (16 is a sane default)
 *   trials      oracle trial count; 0 keeps each oracle's default
 *   field       nonzero overrides the document's prime
 *   pretty      nonzero indents the report
 *   timing      nonzero adds wall-clock milliseconds to the report
 *   report_json receives a malloc'd JSON string on HK_OK; free with
 *               hk_string_free
 * Returns HK_OK or an HK_E* code; the message is kept in the session. */
int hk_run(hk_session* session, const char* input_json, int argc, const char* const* argv,
           uint64_t seed, int cap, int trials, uint32_t field, int pretty, int timing,
           char** report_json);

/* Message of the last failed hk_run on this session; empty after success. */
const char* hk_last_error(const hk_session* session);

void hk_string_free(char* text);

const char* hk_version(void);

#ifdef __cplusplus
}
#endif

#endif
