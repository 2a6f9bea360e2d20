#ifndef FBKOSZUL_H
#define FBKOSZUL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define FBK_API __attribute__((visibility("default")))
#else
#define FBK_API
#endif

typedef enum fbk_status {
    FBK_OK = 0,
    FBK_INVALID_ARGUMENT = 1, /* null pointer, unknown object or suite name */
    FBK_BOUND_EXCEEDED = 2,   /* arity bound above the hard guard or window outside [0,N]^2 */
    FBK_BAD_PRESENTATION = 3, /* operad file unreadable or presentation invalid */
    FBK_UNSUPPORTED = 4,      /* request not available for this operad */
    FBK_COMPUTE_ERROR = 5,    /* internal consistency failure during a computation */
    FBK_OUT_OF_MEMORY = 6
} fbk_status;

/* Inclusive bidegree window [s_lo, s_hi] x [t_lo, t_hi]. */
typedef struct fbk_window {
    int s_lo, s_hi, t_lo, t_hi;
} fbk_window;

typedef struct fbk_session fbk_session;

FBK_API const char* fbk_version(void);
FBK_API const char* fbk_report_schema(void);
FBK_API int fbk_max_bound(void);
FBK_API const char* fbk_status_string(fbk_status status);

/* operad is "builtin:com", "builtin:lie", "builtin:unit" or a path to a JSON file.
   On failure *out is null and, if error is non-null, *error receives a message
   to be released with fbk_string_free. */
FBK_API fbk_status fbk_session_open(const char* operad, int bound, fbk_session** out, char** error);
FBK_API void fbk_session_close(fbk_session* session);

/* Message of the last failed call on this session; empty when none. Owned by the session. */
FBK_API const char* fbk_session_error(const fbk_session* session);
FBK_API const char* fbk_session_presentation_hash(const fbk_session* session);
FBK_API int fbk_session_bound(const fbk_session* session);

/* Progress lines during long computations; the callback may run on worker
   threads but calls are serialized. Pass null to disable. */
typedef void (*fbk_progress_fn)(void* user, const char* line);
FBK_API void fbk_session_set_progress(fbk_session* session, fbk_progress_fn fn, void* user);

/* JSON results are written to *out_json and released with fbk_string_free.
   objects is a comma-separated list of object names; null selects the defaults. */
FBK_API fbk_status fbk_dims_json(fbk_session* session, const char* objects, fbk_window window, int workers,
                                 char** out_json);
/* *all_pass is set to 1 when every verdict of the suite passes. */
FBK_API fbk_status fbk_verify_json(fbk_session* session, const char* suite, fbk_window window, int workers,
                                   int inject_fault, int* all_pass, char** out_json);
FBK_API fbk_status fbk_export_json(fbk_session* session, const char* object, fbk_window window, char** out_json);

FBK_API fbk_status fbk_dim(fbk_session* session, const char* object, int s, int t, int degree, size_t* out);
FBK_API fbk_status fbk_homology_dim(fbk_session* session, const char* object, int s, int t, int degree,
                                    size_t* out);

/* Null-terminated lists of the known names; static storage. */
FBK_API const char* const* fbk_object_names(void);
FBK_API const char* const* fbk_suite_names(void);

FBK_API void fbk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
