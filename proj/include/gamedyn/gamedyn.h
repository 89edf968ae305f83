/*
 * Copyright 2026 The gamedyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the gamedyn library. Objects are opaque handles; every
 * call returns a gd_status and, on failure, leaves a message readable with
 * gd_last_error() on the calling thread. Strings returned through char**
 * are owned by the caller and released with gd_string_free(). */

#ifndef GAMEDYN_GAMEDYN_H
#define GAMEDYN_GAMEDYN_H

#include <stdint.h>

#if defined(GAMEDYN_BUILDING)
#define GD_API __attribute__((visibility("default")))
#else
#define GD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_ERR_SYNTAX = 5,
  GD_ERR_UNKNOWN_VERTEX = 6,
  GD_ERR_VALIDATION = 7,
  GD_ERR_NOT_MAXIMAL = 8,
  GD_ERR_INVALID_PLAY = 9,
  GD_ERR_STATE_SPACE_TOO_LARGE = 10,
  GD_ERR_CYCLIC_ARENA = 11,
  GD_ERR_UNKNOWN_EDGE = 12,
  GD_ERR_NOT_DELETABLE = 13,
  GD_ERR_SCRIPT_STEP_FAILED = 14,
  GD_ERR_SOURCE_MISMATCH = 15,
  GD_ERR_SEARCH_BUDGET_EXCEEDED = 16,
  GD_ERR_NON_DETERMINISTIC_BEST_REPLY = 17,
  GD_ERR_INVALID_SDW = 18,
  GD_ERR_INVALID_OTG = 19,
  GD_ERR_SUFFIX_CLOSURE_REPAIR_NEEDED = 20,
  GD_ERR_INCONSISTENT = 21,
  GD_ERR_INVALID_ARGUMENT = 22,
  GD_ERR_INTERNAL = 23
} gd_status;

typedef enum gd_format { GD_FORMAT_TEXT = 0, GD_FORMAT_JSON = 1, GD_FORMAT_DOT = 2 } gd_format;

/* Outcome of an analysis that ran to completion. */
typedef enum gd_verdict { GD_VERDICT_OK = 0, GD_VERDICT_VIOLATED = 3, GD_VERDICT_UNKNOWN = 4 } gd_verdict;

typedef struct gd_config {
  uint64_t profile_guard;
  uint64_t search_budget;
  int force;
} gd_config;

typedef struct gd_game gd_game;
typedef struct gd_otg gd_otg;

GD_API void gd_config_default(gd_config* cfg);
GD_API const char* gd_last_error(void);
GD_API const char* gd_status_name(gd_status status);
/* "error", "warn", "info" or "debug". */
GD_API gd_status gd_set_log_level(const char* level);
GD_API void gd_string_free(char* s);

GD_API gd_status gd_game_parse(const char* text, gd_game** out);
GD_API void gd_game_free(gd_game* game);
GD_API gd_status gd_game_to_json(const gd_game* game, char** out);
GD_API gd_status gd_game_to_dot(const gd_game* game, char** out);
GD_API gd_status gd_game_stats(const gd_game* game, int* players, int* vertices, int* edges);

/* kind is "1", "p1", "bp1", "pc" or "bpc". cfg may be NULL for defaults. */
GD_API gd_status gd_dynamics(const gd_game* game, const char* kind, const gd_config* cfg,
                             gd_format format, char** out);
/* check is "termination", "fair-termination" or "equilibria". */
GD_API gd_status gd_analyze(const gd_game* game, const char* kind, const char* check,
                            const gd_config* cfg, gd_format format, char** out, int* verdict);
/* script is a JSON deletion script. */
GD_API gd_status gd_minor(const gd_game* game, const char* script, const gd_config* cfg,
                          gd_format format, char** out, int* verdict);
GD_API gd_status gd_dominated(const gd_game* game, const char* from1, const char* to1,
                              const char* from2, const char* to2, const gd_config* cfg,
                              gd_format format, char** out, int* verdict);
GD_API gd_status gd_belief(const gd_game* game, const gd_config* cfg, gd_format format, char** out,
                           int* verdict);
GD_API gd_status gd_dis_minor(const gd_game* game, const gd_config* cfg, gd_format format,
                              char** out, int* verdict);

GD_API gd_status gd_spp_parse(const char* text, int complete_suffixes, gd_otg** out);
GD_API gd_status gd_otg_from_game(const gd_game* game, gd_otg** out);
GD_API void gd_otg_free(gd_otg* otg);
/* command is "validate", "dw", "sdw" or "safety"; mode ("structural",
 * "exact", "both") is read by "safety" only and may be NULL. */
GD_API gd_status gd_spp(const gd_otg* otg, const char* command, const char* mode,
                        const gd_config* cfg, gd_format format, char** out, int* verdict);

/* family is "game", "acyclic", "otg" or "notg"; the result is a game document. */
GD_API gd_status gd_generate(const char* family, uint64_t seed, int max_players, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GAMEDYN_GAMEDYN_H */
