/* C interface to the Thompson's group F library.
 *
 * Elements are opaque handles owned by the caller and released with
 * tf_element_free. Every fallible call returns a tf_status; on failure the
 * message of the most recent error on the calling thread is available from
 * tf_last_error_message. Strings returned through char** are allocated with
 * malloc and released with tf_string_free. */

#ifndef THOMPSON_H
#define THOMPSON_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TF_API __declspec(dllexport)
#else
#define TF_API __attribute__((visibility("default")))
#endif

typedef struct tf_element tf_element;

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_INVALID_ARGUMENT = 1,
  TF_ERR_PARSE = 2,
  TF_ERR_WORD_TOO_SHORT = 3,
  TF_ERR_NOT_A_COPY = 4,
  TF_ERR_NOT_IN_IMAGE = 5,
  TF_ERR_ARITY_TOO_SMALL = 6,
  TF_ERR_EMPTY_CLASS = 7,
  TF_ERR_TOO_LARGE = 8,
  TF_ERR_INTERNAL = 9
} tf_status;

TF_API const char* tf_status_name(tf_status status);
TF_API const char* tf_last_error_message(void);
TF_API const char* tf_version(void);
TF_API void tf_string_free(char* s);

/* Elements. Text is the canonical "<T+>,<T->" preorder form or a group word
 * such as "x0^2 x1^-1". */
TF_API tf_status tf_element_parse(const char* text, tf_element** out);
TF_API tf_status tf_element_identity(tf_element** out);
TF_API tf_status tf_element_generator(unsigned index, tf_element** out);
TF_API tf_status tf_element_clone(const tf_element* e, tf_element** out);
TF_API void tf_element_free(tf_element* e);

TF_API tf_status tf_element_multiply(const tf_element* a, const tf_element* b, tf_element** out);
TF_API tf_status tf_element_invert(const tf_element* a, tf_element** out);
TF_API tf_status tf_element_power(const tf_element* a, long long exponent, tf_element** out);
TF_API tf_status tf_element_size(const tf_element* e, size_t* out);
TF_API tf_status tf_element_equal(const tf_element* a, const tf_element* b, int* out);
TF_API tf_status tf_element_serialize(const tf_element* e, char** out);

/* Action on [0,1] through binary words. */
TF_API tf_status tf_apply_to_word(const tf_element* e, const char* word, char** out);
TF_API tf_status tf_has_branch_pair(const tf_element* e, const char* u, const char* v, int* out);
TF_API tf_status tf_fixes_interval(const tf_element* e, const char* u, int* out);
TF_API tf_status tf_ab(const tf_element* e, long long* a, long long* b);

/* Natural copies and the maps built from them. */
TF_API tf_status tf_copy_in(const tf_element* g, const char* v, tf_element** out);
TF_API tf_status tf_strip_copy(const tf_element* f, const char* v, tf_element** out);
TF_API tf_status tf_phi1(const tf_element* g, tf_element** out);
TF_API tf_status tf_phi2(const tf_element* g, tf_element** out);

/* Generation certificate: *verdict is 0 for Generates, 1 for NotGenerating,
 * 2 for Unknown. */
TF_API tf_status tf_certify(const tf_element* const* gens, size_t count, size_t depth, int* verdict);

/* Reports (JSON unless stated). `meta` adds a timestamped "meta" object.
 * Generator lists are text: one element per line or ';'-separated, '#'
 * comments allowed. Model is "sum" or "max". */
TF_API tf_status tf_report_count_csv(unsigned max_n, char** out);
TF_API tf_status tf_report_sphere(unsigned k, unsigned n, const char* model, int meta, char** out);
TF_API tf_status tf_report_density(unsigned k, unsigned n, const char* model, int meta, char** out);
TF_API tf_status tf_report_certify(const char* gens, size_t depth, int meta, char** out);
TF_API tf_status tf_report_experiment(unsigned k, unsigned n, const char* model, unsigned long long samples,
                                      size_t depth, unsigned long long seed, unsigned threads, int meta,
                                      char** out);
TF_API tf_status tf_report_nat(const char* gens, const char* u, unsigned k, int meta, char** out);

/* Acceptance suite. `ids` selects criteria (all twelve when count is 0).
 * The callback receives each criterion's formatted result as it finishes. */
typedef void (*tf_acceptance_callback)(int id, int passed, const char* text, void* user);
TF_API tf_status tf_run_acceptance(const int* ids, size_t count, unsigned threads, tf_acceptance_callback callback,
                                   void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
