/* C interface to cechkit. Scenes are opaque handles; results come back as
 * JSON strings owned by the caller and released with cech_string_free. */
#ifndef CECHKIT_H
#define CECHKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CECH_API __declspec(dllexport)
#else
#define CECH_API __attribute__((visibility("default")))
#endif

typedef enum cech_status {
  CECH_OK = 0,            /* claims verified */
  CECH_REFUTED = 1,       /* a claim was checked and is false; *out still holds the report */
  CECH_INPUT_ERROR = 2,   /* malformed or inconsistent input; see cech_last_error */
  CECH_INTERNAL_ERROR = 3
} cech_status;

typedef struct cech_scene cech_scene;

CECH_API const char* cech_version(void);

/* Message of the last failing call on this thread, or "" */
CECH_API const char* cech_last_error(void);

CECH_API void cech_string_free(char* s);

CECH_API cech_status cech_scene_parse(const char* json, cech_scene** out);
CECH_API void cech_scene_free(cech_scene* scene);
/* Canonical re-emission of the scene. */
CECH_API cech_status cech_scene_dump(const cech_scene* scene, char** out);

CECH_API cech_status cech_nerve(const cech_scene* scene, char** out);
/* target may be NULL or "" for everything */
CECH_API cech_status cech_validate(const cech_scene* scene, const char* target, char** out);
CECH_API cech_status cech_cohomology(const cech_scene* scene, const char* sheaf, size_t degree, char** out);
CECH_API cech_status cech_connect(const cech_scene* scene, const char* sequence, const char* cocycle, char** out);
CECH_API cech_status cech_staged_connect(const cech_scene* scene, const char* extension, const char* cocycle,
                                         char** out);
CECH_API cech_status cech_descent_check(const cech_scene* scene, const char* datum, char** out);
CECH_API cech_status cech_lci(const cech_scene* scene, const char* data, char** out);
CECH_API cech_status cech_p2_demo(char** out);
/* scene may be NULL for certificates that reference a built-in scene */
CECH_API cech_status cech_verify(const char* certificate_json, const cech_scene* scene, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CECHKIT_H */
