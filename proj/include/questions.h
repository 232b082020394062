/* questions — mathematics-of-questions library, public C API.
 *
 * A thin extern-C layer over the C++ core: opaque handles, integer status
 * codes, plain structs for records. Every function returns QST_OK on success;
 * on failure qst_last_error() describes the most recent error in the calling
 * thread. Handles are created and released by the matching _free call.
 */
#ifndef QUESTIONS_H
#define QUESTIONS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qst_status {
    QST_OK = 0,
    QST_ERR_INVALID_ARGUMENT = 1,
    QST_ERR_DOMAIN = 2,
    QST_ERR_IO = 3,
    QST_ERR_UNKNOWN = 4
} qst_status;

const char* qst_version(void);
/* Thread-local message for the last failing call in this thread. */
const char* qst_last_error(void);

/* ------------------------------------------------------------------ */
/* Worlds: distributions and propositions                             */
/* ------------------------------------------------------------------ */

typedef struct qst_dist qst_dist;
typedef struct qst_prop qst_prop;

qst_status qst_dist_create(const double* probs, size_t n_worlds, qst_dist** out);
qst_status qst_dist_uniform(size_t n_worlds, qst_dist** out);
/* Product distribution over 2^n worlds with P(generator i) = marginals[i]. */
qst_status qst_dist_product(const double* marginals, int n_generators, qst_dist** out);
void qst_dist_free(qst_dist* dist);
qst_status qst_dist_size(const qst_dist* dist, size_t* out);

/* truth[w] nonzero iff the proposition holds in world w. */
qst_status qst_prop_create(const uint8_t* truth, size_t n_worlds, qst_prop** out);
/* Generator proposition i over the 2^n worlds of n generators. */
qst_status qst_prop_generator(int n_generators, int index, qst_prop** out);
qst_status qst_prop_not(const qst_prop* a, qst_prop** out);
qst_status qst_prop_and(const qst_prop* a, const qst_prop* b, qst_prop** out);
qst_status qst_prop_or(const qst_prop* a, const qst_prop* b, qst_prop** out);
qst_status qst_prop_xor(const qst_prop* a, const qst_prop* b, qst_prop** out);
qst_status qst_prop_xnor(const qst_prop* a, const qst_prop* b, qst_prop** out);
void qst_prop_free(qst_prop* prop);

qst_status qst_prob(const qst_dist* dist, const qst_prop* prop, double* out);
qst_status qst_info(const qst_dist* dist, const qst_prop* prop, double* out);
qst_status qst_mutual_info(const qst_dist* dist, const qst_prop* a, const qst_prop* b,
                           double* out);
qst_status qst_balance_sum(const qst_dist* dist, const qst_prop* a, const qst_prop* b,
                           double* out);

/* ------------------------------------------------------------------ */
/* Measures (a proposition stands for its askable question A?)        */
/* ------------------------------------------------------------------ */

qst_status qst_gap_askable(const qst_dist* dist, const qst_prop* prop, double* out);
qst_status qst_gap_pure(const qst_dist* dist, const qst_prop* prop, double* out);
qst_status qst_gmp(const qst_dist* dist, const qst_prop* const* props, size_t count,
                   double* out);
qst_status qst_evidence(const qst_dist* dist, const qst_prop* prop, double* out);
/* Doubt in nats: imaginary part is pi when the signed gap is negative. */
qst_status qst_doubt(const qst_dist* dist, const qst_prop* prop, double* out_real,
                     double* out_imag);

/* ------------------------------------------------------------------ */
/* Actions                                                            */
/* ------------------------------------------------------------------ */

qst_status qst_dist_give(const qst_dist* dist, const qst_prop* prop, qst_dist** out);
/* Raises the pure question of the proposition. */
qst_status qst_dist_raise(const qst_dist* dist, const qst_prop* prop, qst_dist** out);
qst_status qst_info_content(const qst_dist* dist, double* out);

/* ------------------------------------------------------------------ */
/* Tilde relation                                                     */
/* ------------------------------------------------------------------ */

typedef struct qst_tilde_record {
    double pa, pb;
    double gap_a, gap_b;
    double t, s, y;
    double u_re, u_im;
    double v_re, v_im;
    double x; /* P(AB) under ~ */
} qst_tilde_record;

qst_status qst_tilde_eval(double pa, double pb, qst_tilde_record* out);
/* unconstrained is set at pa = 0 with pb in {0, 1}. */
qst_status qst_tilde_conditional(double pa, double pb, double* value, int* unconstrained);
qst_status qst_tilde_discrepancy(double pa, double pb, double* out);
/* Admissible roots of the tilde quartic, ascending. Returns the total count;
 * at most `capacity` roots are stored. */
qst_status qst_tilde_quartic_roots(double pa, double pb, double* roots, size_t capacity,
                                   size_t* count);

/* ------------------------------------------------------------------ */
/* Two-state system (state vectors as re0, im0, re1, im1)             */
/* ------------------------------------------------------------------ */

qst_status qst_born(const double psi[4], const double phi[4], double* out);
qst_status qst_bloch_from_state(const double psi[4], double v[3]);
qst_status qst_state_from_bloch(const double v[3], double psi[4]);
qst_status qst_gap_along(const double v[3], const double axis[3], double* out);
qst_status qst_add_with_angle(const double p1[3], const double p2[3], double phi,
                              double out[3]);
/* Deterministic collapse: the posterior is +-axis by the answer. */
qst_status qst_measure(const double axis[3], int answer_yes, double out[3]);
qst_status qst_sample_measure(const double v[3], const double axis[3], uint64_t seed,
                              int* answer_yes, double out[3]);

/* ------------------------------------------------------------------ */
/* Entanglement and the Bell analysis                                 */
/* ------------------------------------------------------------------ */

/* Joint outcome probability for a correlated pair: sign -1 = singlet,
 * +1 = aligned; result signs s1, s2 are +-1. */
qst_status qst_joint_prob_correlated(int sign, const double d1[3], int s1,
                                     const double d2[3], int s2, double* out);

typedef struct qst_bell_probs {
    double p_xy, p_xw, p_wy;
    int violated;
} qst_bell_probs;

qst_status qst_bell_probs_at(double w_angle_rad, qst_bell_probs* out);

typedef struct qst_bell_counts {
    uint64_t trials, n_xy, n_xw, n_wy;
} qst_bell_counts;

qst_status qst_bell_montecarlo(double w_angle_rad, uint64_t trials, uint64_t seed,
                               qst_bell_counts* out);
qst_status qst_lhv_inequality(const uint64_t counts[8], uint64_t* lhs, uint64_t* rhs,
                              int* holds);

/* ------------------------------------------------------------------ */
/* Group census                                                       */
/* ------------------------------------------------------------------ */

typedef struct qst_census {
    int n;
    uint64_t q_size, q1_size, generator_count;
    uint64_t s_sizes[5]; /* index m, 1 <= m <= n */
    int closure_ok, involution_ok, associativity_ok;
} qst_census;

qst_status qst_group_census(int n, qst_census* out);

/* ------------------------------------------------------------------ */
/* Figures and verification                                           */
/* ------------------------------------------------------------------ */

/* format is "csv" or "json"; grid_step 0 selects the default. */
qst_status qst_figure_write(const char* name, double grid_step, const char* format,
                            const char* path);
qst_status qst_figure_names(const char* const** names, size_t* count);

typedef struct qst_verify_report qst_verify_report;

typedef struct qst_check_view {
    const char* id;
    const char* description;
    int passed;
    double measured;
    double tolerance;
} qst_check_view;

/* suite is one of the module names or "all". */
qst_status qst_verify_run(const char* suite, uint64_t seed, qst_verify_report** out);
size_t qst_verify_suite_count(const qst_verify_report* report);
const char* qst_verify_suite_name(const qst_verify_report* report, size_t suite);
size_t qst_verify_check_count(const qst_verify_report* report, size_t suite);
qst_status qst_verify_check(const qst_verify_report* report, size_t suite, size_t check,
                            qst_check_view* out);
int qst_verify_passed(const qst_verify_report* report);
void qst_verify_free(qst_verify_report* report);

/* Shortest round-trip decimal, capped at 14 significant digits. */
qst_status qst_format_double(double value, char* buf, size_t buflen);

#ifdef __cplusplus
}
#endif

#endif /* QUESTIONS_H */
