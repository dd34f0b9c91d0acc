/* C interface to the k-graph analysis library.
 *
 * Handles are opaque; every function returns a status code. String outputs
 * are heap-allocated and must be released with kg_string_free; graph outputs
 * with kg_free. On any failure kg_last_error() returns a message for the
 * calling thread.
 */
#ifndef KGRAPH_KGRAPH_H
#define KGRAPH_KGRAPH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kg_graph kg_graph;

typedef enum kg_status {
  KG_OK = 0,
  KG_ERR_PARSE = 1,      /* malformed input text */
  KG_ERR_VALIDATION = 2, /* graph fails the k-graph axioms */
  KG_ERR_ARG = 3,        /* bad argument (unknown id, wrong rank, ...) */
  KG_ERR_TOO_LARGE = 4,  /* an enumeration cap was exceeded */
  KG_ERR_INTERNAL = 5
} kg_status;

const char* kg_last_error(void);
void kg_string_free(char* s);
void kg_free(kg_graph* g);

/* Construction */
kg_status kg_parse(const char* text, kg_graph** out);
kg_status kg_read_file(const char* path, kg_graph** out);

/* On KG_ERR_VALIDATION the report (JSON) is still written when report_json
 * is non-NULL. Analyses below validate on demand. */
kg_status kg_validate(kg_graph* g, char** report_json);

kg_status kg_info_json(kg_graph* g, char** out);
kg_status kg_emit(kg_graph* g, char** out);
kg_status kg_export_dot(kg_graph* g, char** out);

/* Paths are comma-separated edge ids; vertex sets comma-separated vertex
 * ids ("" is the empty set); bounds comma-separated non-negative integers,
 * one per color. */
kg_status kg_normal_form(kg_graph* g, const char* path_csv, char** out_csv);
kg_status kg_saturate(kg_graph* g, const char* set_csv, char** out_csv);
kg_status kg_hereditary_closure(kg_graph* g, const char* set_csv, char** out_csv);

/* method: "brute", "closure" or "both". format: "text", "json" or "dot". */
kg_status kg_lattice(kg_graph* g, const char* method, const char* format, char** out);
kg_status kg_quotient(kg_graph* g, const char* set_csv, kg_graph** out);

/* method: "direct", "mt" or "both". */
kg_status kg_tails(kg_graph* g, const char* method, const char* format, char** out);
kg_status kg_topology(kg_graph* g, const char* format, char** out);

/* bounds_csv may be NULL for the defaults. */
kg_status kg_aperiodic(kg_graph* g, const char* bounds_csv, char** verdict_json);
kg_status kg_strong_aperiodic(kg_graph* g, const char* bounds_csv, char** verdict_json);
kg_status kg_quartet(kg_graph* g, const char* vertex, int a_max, int b_max, char** out);

kg_status kg_product(kg_graph* a, kg_graph* b, kg_graph** out);
kg_status kg_skew(kg_graph* g, const char* labels_text, kg_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* KGRAPH_KGRAPH_H */
