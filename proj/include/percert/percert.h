// Copyright 2026 The percert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERCERT_PERCERT_H
#define PERCERT_PERCERT_H

/* C interface to the percert library. Results come back as heap strings
 * (JSON unless noted) that the caller releases with percert_string_free.
 * On failure the out-pointer is left NULL and percert_last_error() holds a
 * JSON error object for the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define PERCERT_API __declspec(dllexport)
#else
#define PERCERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum percert_status {
  PERCERT_OK = 0,
  PERCERT_ERR_PARSE = 1,
  PERCERT_ERR_PARAMETER = 2,
  PERCERT_ERR_PRECONDITION = 3,
  PERCERT_ERR_IO = 4,
  PERCERT_ERR_CAP_EXCEEDED = 5,
  PERCERT_ERR_INTERNAL = 6,
  PERCERT_ERR_NULL_ARGUMENT = 7
} percert_status;

typedef struct percert_graph percert_graph;

PERCERT_API const char* percert_version(void);
PERCERT_API const char* percert_status_name(percert_status status);

/* {"error":{"code":...,"module":...,"message":...}} for the last failing call
 * on this thread, or "" when it succeeded. Owned by the library. */
PERCERT_API const char* percert_last_error(void);

PERCERT_API void percert_string_free(char* s);

/* spec: path(n) | star(k) | cycle(n) | complete(n) | theta(k,l) |
 *       prod(spec, ...) | file:PATH */
PERCERT_API percert_status percert_graph_from_spec(const char* spec, percert_graph** out);
PERCERT_API void percert_graph_free(percert_graph* g);
PERCERT_API percert_status percert_graph_counts(const percert_graph* g, size_t* vertices, size_t* edges);
PERCERT_API percert_status percert_graph_json(const percert_graph* g, char** out);

/* colouring: NULL or "greedy", "structural", "file:PATH". */
PERCERT_API percert_status percert_dim_w(const percert_graph* g, int r, const char* colouring,
                                         int with_basis, char** out);

/* seed_path names a JSON array of [u, v] edges. */
PERCERT_API percert_status percert_percolate(const percert_graph* g, int r, const char* seed_path,
                                             char** out);

/* max_bruteforce < 0 takes PERCERT_BRUTEFORCE_CAP or the default.
 * certified (optional) is set to 1 for certified-exact or brute-forced. */
PERCERT_API percert_status percert_me(const percert_graph* g, int r, long max_bruteforce,
                                      int* certified, char** out);

PERCERT_API percert_status percert_construct(const percert_graph* g, int r, long max_bruteforce,
                                             char** out);

/* family: "tree", "star" or "theta", matched against the last factor. */
PERCERT_API percert_status percert_witness(const percert_graph* g, int r, const char* family,
                                           const char* colouring, char** out);

PERCERT_API percert_status percert_formula_stars(const int* leaves, size_t count, int r, char** out);
PERCERT_API percert_status percert_formula_theta(const int* k, const int* l, size_t count, int r,
                                                 char** out);
PERCERT_API percert_status percert_formula_tree_product(const percert_graph* g, const percert_graph* t,
                                                        int r, long max_bruteforce, char** out);

/* family: paths | stars | thetas | mixed. csv != 0 gives CSV text.
 * consistent (optional) is set to 1 when every row agrees. */
PERCERT_API percert_status percert_verify(const char* family, int max_n, int r, long max_bruteforce,
                                          int csv, int* consistent, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PERCERT_PERCERT_H */
