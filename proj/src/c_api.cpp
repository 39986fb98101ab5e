// SPDX-License-Identifier: Apache-2.0
//
// extern "C" surface over the C++ core. Every entry point translates
// exceptions into a status code and a thread-local message.

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "cochain/cochain.h"
#include "cochain/dp_solver.hpp"
#include "cochain/error.hpp"
#include "cochain/generators.hpp"
#include "cochain/io.hpp"
#include "cochain/oracle.hpp"
#include "cochain/twinfree.hpp"

struct cochain_graph {
  cochain::SimpleGraph graph;
};

struct cochain_form {
  cochain::ChainForm form;
};

struct cochain_solution {
  cochain::Solution solution;
};

struct cochain_generator {
  cochain::ChainFormGenerator generator;
};

namespace {

thread_local std::string last_error;

cochain_status to_status(cochain::ErrorCode code) {
  using cochain::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return COCHAIN_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidGraph: return COCHAIN_ERR_INVALID_GRAPH;
    case ErrorCode::InvalidForm: return COCHAIN_ERR_INVALID_FORM;
    case ErrorCode::InvalidCut: return COCHAIN_ERR_INVALID_CUT;
    case ErrorCode::OutOfRange: return COCHAIN_ERR_OUT_OF_RANGE;
    case ErrorCode::BudgetExceeded: return COCHAIN_ERR_BUDGET;
    case ErrorCode::Parse: return COCHAIN_ERR_PARSE;
    case ErrorCode::Io: return COCHAIN_ERR_IO;
    case ErrorCode::InternalFault: return COCHAIN_ERR_INTERNAL;
  }
  return COCHAIN_ERR_INTERNAL;
}

cochain_status fail(cochain_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Body>
cochain_status guarded(Body&& body) {
  try {
    return body();
  } catch (const cochain::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COCHAIN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COCHAIN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COCHAIN_ERR_INTERNAL, "unknown exception");
  }
}

cochain_status null_argument(const char* name) {
  return fail(COCHAIN_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

cochain::twinfree::Variant variant_of(int minus) {
  return minus ? cochain::twinfree::Variant::Minus
               : cochain::twinfree::Variant::Full;
}

void copy_pattern(const cochain::twinfree::PatternOptimum& p, cochain_pattern* out) {
  out->x = p.pattern.x;
  out->y = p.pattern.y;
  out->z = p.pattern.z;
  out->t = p.pattern.t;
  out->apex_in_s = p.apex_in_s ? 1 : 0;
  out->value = p.value;
}

cochain_status check_capacity(const cochain::ChainForm& form, size_t capacity) {
  if (capacity < form.rows()) {
    return fail(COCHAIN_ERR_INVALID_ARGUMENT,
                "buffer holds " + std::to_string(capacity) + " entries, need " +
                    std::to_string(form.rows()));
  }
  return COCHAIN_OK;
}

cochain::CutAssignment read_cut(const cochain::ChainForm& form, const int64_t* s,
                                const int64_t* s_prime) {
  return {std::vector<cochain::Count>(s, s + form.rows()),
          std::vector<cochain::Count>(s_prime, s_prime + form.rows())};
}

}  // namespace

extern "C" {

const char* cochain_version(void) { return "1.0.0"; }

const char* cochain_last_error(void) { return last_error.c_str(); }

const char* cochain_status_string(cochain_status status) {
  switch (status) {
    case COCHAIN_OK: return "ok";
    case COCHAIN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COCHAIN_ERR_INVALID_GRAPH: return "invalid graph";
    case COCHAIN_ERR_INVALID_FORM: return "invalid chain form";
    case COCHAIN_ERR_INVALID_CUT: return "invalid cut";
    case COCHAIN_ERR_OUT_OF_RANGE: return "index out of range";
    case COCHAIN_ERR_PARSE: return "parse error";
    case COCHAIN_ERR_IO: return "i/o error";
    case COCHAIN_ERR_REJECTED: return "not a co-bipartite chain graph";
    case COCHAIN_ERR_BUDGET: return "oracle budget exceeded";
    case COCHAIN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cochain_reject_stage_string(cochain_reject_stage stage) {
  switch (stage) {
    case COCHAIN_ACCEPTED: return "accepted";
    case COCHAIN_REJECT_COMPLEMENT_NOT_BIPARTITE:
      return cochain::to_string(cochain::RejectStage::ComplementNotBipartite).data();
    case COCHAIN_REJECT_CHAIN_VIOLATED:
      return cochain::to_string(cochain::RejectStage::ChainViolated).data();
  }
  return "unknown stage";
}

// ---- graphs ---------------------------------------------------------------

cochain_status cochain_graph_create(uint32_t n, const uint32_t* edges,
                                    size_t edge_count, cochain_graph** out) {
  if (!out) return null_argument("out");
  if (edge_count > 0 && !edges) return null_argument("edges");
  return guarded([&] {
    std::vector<cochain::Edge> list(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new cochain_graph{cochain::SimpleGraph(n, list)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_graph_read_edgelist(const char* path, cochain_graph** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_graph{cochain::io::read_edge_list(path)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_graph_write_edgelist(const cochain_graph* graph, const char* path) {
  if (!graph) return null_argument("graph");
  if (!path) return null_argument("path");
  return guarded([&] {
    cochain::io::write_edge_list(path, graph->graph);
    return COCHAIN_OK;
  });
}

void cochain_graph_free(cochain_graph* graph) { delete graph; }

uint32_t cochain_graph_vertex_count(const cochain_graph* graph) {
  return graph ? graph->graph.vertex_count() : 0;
}

uint64_t cochain_graph_edge_count(const cochain_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

cochain_status cochain_graph_edges(const cochain_graph* graph, uint32_t* pairs,
                                   size_t capacity_pairs) {
  if (!graph) return null_argument("graph");
  if (!pairs && graph->graph.edge_count() > 0) return null_argument("pairs");
  if (capacity_pairs < graph->graph.edge_count()) {
    return fail(COCHAIN_ERR_INVALID_ARGUMENT, "edge buffer too small");
  }
  return guarded([&] {
    size_t i = 0;
    for (const auto& e : graph->graph.edges()) {
      pairs[2 * i] = e.u;
      pairs[2 * i + 1] = e.v;
      ++i;
    }
    return COCHAIN_OK;
  });
}

cochain_status cochain_graph_cut_size(const cochain_graph* graph, const uint8_t* in_s,
                                      int64_t* out) {
  if (!graph) return null_argument("graph");
  if (!in_s && graph->graph.vertex_count() > 0) return null_argument("in_s");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<bool> subset(graph->graph.vertex_count());
    for (size_t v = 0; v < subset.size(); ++v) subset[v] = in_s[v] != 0;
    *out = cochain::cut_size(graph->graph, subset);
    return COCHAIN_OK;
  });
}

// ---- recognition ----------------------------------------------------------

cochain_status cochain_recognize(const cochain_graph* graph, cochain_reject_stage* stage) {
  if (!graph) return null_argument("graph");
  if (!stage) return null_argument("stage");
  return guarded([&] {
    const auto result = cochain::recognize(graph->graph);
    if (const auto* rejection = std::get_if<cochain::Rejection>(&result)) {
      *stage = rejection->stage == cochain::RejectStage::ComplementNotBipartite
                   ? COCHAIN_REJECT_COMPLEMENT_NOT_BIPARTITE
                   : COCHAIN_REJECT_CHAIN_VIOLATED;
    } else {
      *stage = COCHAIN_ACCEPTED;
    }
    return COCHAIN_OK;
  });
}

cochain_status cochain_normalize(const cochain_graph* graph, cochain_form** out,
                                 cochain_reject_stage* stage, uint8_t* sides,
                                 uint64_t* rows) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto result = cochain::normalize(graph->graph);
    if (const auto* rejection = std::get_if<cochain::Rejection>(&result)) {
      if (stage) {
        *stage = rejection->stage == cochain::RejectStage::ComplementNotBipartite
                     ? COCHAIN_REJECT_COMPLEMENT_NOT_BIPARTITE
                     : COCHAIN_REJECT_CHAIN_VIOLATED;
      }
      return fail(COCHAIN_ERR_REJECTED,
                  std::string(cochain::to_string(rejection->stage)) + ": " +
                      rejection->detail);
    }
    auto& normalized = std::get<cochain::Normalized>(result);
    if (stage) *stage = COCHAIN_ACCEPTED;
    for (size_t v = 0; v < normalized.map.size(); ++v) {
      if (sides) {
        sides[v] = normalized.map[v].side == cochain::Side::K ? COCHAIN_SIDE_K
                                                              : COCHAIN_SIDE_K_PRIME;
      }
      if (rows) rows[v] = normalized.map[v].row;
    }
    *out = new cochain_form{std::move(normalized.form)};
    return COCHAIN_OK;
  });
}

// ---- chain forms ----------------------------------------------------------

cochain_status cochain_form_create(uint64_t k, const int64_t* m, const int64_t* m_prime,
                                   cochain_form** out) {
  if (!m) return null_argument("m");
  if (!m_prime) return null_argument("m_prime");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto rows = static_cast<size_t>(k) + 1;
    *out = new cochain_form{cochain::ChainForm(std::vector<cochain::Count>(m, m + rows),
                                               std::vector<cochain::Count>(m_prime, m_prime + rows))};
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_read(const char* path, cochain_form** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{cochain::io::read_chain_form(path)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_sniff_format(const char* path, cochain_file_format* out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = cochain::io::sniff_format(path) == cochain::io::FileFormat::ChainForm
               ? COCHAIN_FORMAT_CHAINFORM
               : COCHAIN_FORMAT_EDGELIST;
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_write(const cochain_form* form, const char* path) {
  if (!form) return null_argument("form");
  if (!path) return null_argument("path");
  return guarded([&] {
    cochain::io::write_chain_form(path, form->form);
    return COCHAIN_OK;
  });
}

void cochain_form_free(cochain_form* form) { delete form; }

uint64_t cochain_form_k(const cochain_form* form) { return form ? form->form.k() : 0; }

int cochain_form_is_minus(const cochain_form* form) {
  return form && form->form.is_minus() ? 1 : 0;
}

int64_t cochain_form_vertex_count(const cochain_form* form) {
  return form ? form->form.vertex_count() : 0;
}

int64_t cochain_form_edge_count(const cochain_form* form) {
  return form ? cochain::edge_count(form->form) : 0;
}

cochain_status cochain_form_multiplicities(const cochain_form* form, int64_t* m,
                                           int64_t* m_prime, size_t capacity) {
  if (!form) return null_argument("form");
  if (auto status = check_capacity(form->form, capacity); status != COCHAIN_OK) {
    return status;
  }
  for (size_t i = 0; i < form->form.rows(); ++i) {
    if (m) m[i] = form->form.m()[i];
    if (m_prime) m_prime[i] = form->form.m_prime()[i];
  }
  return COCHAIN_OK;
}

cochain_status cochain_form_expand(const cochain_form* form, cochain_graph** out) {
  if (!form) return null_argument("form");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_graph{cochain::expand(form->form)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_shuffle_expand(const cochain_form* form, uint64_t seed,
                                           cochain_graph** out) {
  if (!form) return null_argument("form");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_graph{cochain::shuffle_expand(form->form, seed)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_canonical(const cochain_form* form, cochain_form** out) {
  if (!form) return null_argument("form");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{cochain::canonical(form->form)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_cut_size(const cochain_form* form, const int64_t* s,
                                const int64_t* s_prime, int64_t* out) {
  if (!form) return null_argument("form");
  if (!s) return null_argument("s");
  if (!s_prime) return null_argument("s_prime");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = cochain::cut_size(form->form, read_cut(form->form, s, s_prime));
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_counterexample(cochain_form** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{cochain::counterexample_instance()};
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_build_cc(uint64_t k, int minus, cochain_form** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{cochain::twinfree::build_cc(k, variant_of(minus))};
    return COCHAIN_OK;
  });
}

cochain_status cochain_form_scaling_instance(int64_t n_vertices, uint64_t seed,
                                             cochain_form** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{cochain::scaling_instance(n_vertices, seed)};
    return COCHAIN_OK;
  });
}

// ---- generator ------------------------------------------------------------

cochain_status cochain_generator_create(const cochain_gen_spec* spec,
                                        cochain_generator** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    cochain::GenSpec gen;
    gen.k_min = spec->k_min;
    gen.k_max = spec->k_max;
    gen.multiplicity_min = spec->multiplicity_min;
    gen.multiplicity_max = spec->multiplicity_max;
    gen.seed = spec->seed;
    gen.full_weight = spec->full_weight;
    gen.minus_weight = spec->minus_weight;
    *out = new cochain_generator{cochain::ChainFormGenerator(gen)};
    return COCHAIN_OK;
  });
}

cochain_status cochain_generator_next(cochain_generator* gen, cochain_form** out) {
  if (!gen) return null_argument("gen");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cochain_form{gen->generator.next()};
    return COCHAIN_OK;
  });
}

void cochain_generator_free(cochain_generator* gen) { delete gen; }

// ---- solver ---------------------------------------------------------------

cochain_status cochain_solve(const cochain_form* form, int reconstruct,
                             cochain_solution** out) {
  if (!form) return null_argument("form");
  if (!out) return null_argument("out");
  return guarded([&] {
    cochain::SolveOptions options;
    options.reconstruct = reconstruct != 0;
    *out = new cochain_solution{cochain::solve(form->form, options)};
    return COCHAIN_OK;
  });
}

void cochain_solution_free(cochain_solution* solution) { delete solution; }

int64_t cochain_solution_size(const cochain_solution* solution) {
  return solution ? solution->solution.size : 0;
}

int cochain_solution_has_cut(const cochain_solution* solution) {
  return solution && solution->solution.cut ? 1 : 0;
}

void cochain_solution_objective(const cochain_solution* solution, int64_t* x,
                                int64_t* x_prime) {
  if (!solution) return;
  if (x) *x = solution->solution.x;
  if (x_prime) *x_prime = solution->solution.x_prime;
}

cochain_status cochain_solution_cut(const cochain_solution* solution, int64_t* s,
                                    int64_t* s_prime, size_t capacity) {
  if (!solution) return null_argument("solution");
  if (!s) return null_argument("s");
  if (!s_prime) return null_argument("s_prime");
  const auto& cut = solution->solution.cut;
  if (!cut) {
    return fail(COCHAIN_ERR_INVALID_ARGUMENT, "solution was computed without a certificate");
  }
  if (capacity < cut->s.size()) {
    return fail(COCHAIN_ERR_INVALID_ARGUMENT, "cut buffer too small");
  }
  std::copy(cut->s.begin(), cut->s.end(), s);
  std::copy(cut->s_prime.begin(), cut->s_prime.end(), s_prime);
  return COCHAIN_OK;
}

// ---- oracles --------------------------------------------------------------

cochain_status cochain_oracle_subsets(const cochain_graph* graph, uint64_t limit,
                                      cochain_oracle_result* out, uint8_t* in_s) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  *out = cochain_oracle_result{0, 0, cochain::oracle::subset_state_count(graph->graph)};
  return guarded([&] {
    const auto result = cochain::oracle::brute_force_subsets(graph->graph, limit);
    out->size = result.size;
    out->states_examined = result.states_examined;
    if (in_s) {
      const auto& subset = std::get<std::vector<bool>>(result.witness);
      for (size_t v = 0; v < subset.size(); ++v) in_s[v] = subset[v] ? 1 : 0;
    }
    return COCHAIN_OK;
  });
}

cochain_status cochain_oracle_multiplicity(const cochain_form* form, uint64_t limit,
                                           cochain_oracle_result* out, int64_t* s,
                                           int64_t* s_prime) {
  if (!form) return null_argument("form");
  if (!out) return null_argument("out");
  *out = cochain_oracle_result{0, 0, cochain::oracle::multiplicity_state_count(form->form)};
  return guarded([&] {
    const auto result = cochain::oracle::brute_force_multiplicity(form->form, limit);
    out->size = result.size;
    out->states_examined = result.states_examined;
    const auto& cut = std::get<cochain::CutAssignment>(result.witness);
    if (s) std::copy(cut.s.begin(), cut.s.end(), s);
    if (s_prime) std::copy(cut.s_prime.begin(), cut.s_prime.end(), s_prime);
    return COCHAIN_OK;
  });
}

// ---- twin-free closed form -------------------------------------------------

cochain_status cochain_closed_form(uint64_t k, int minus, cochain_pattern* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    copy_pattern(cochain::twinfree::closed_form_optimum(k, variant_of(minus)), out);
    return COCHAIN_OK;
  });
}

cochain_status cochain_pattern_search(uint64_t k, int minus, cochain_pattern* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    copy_pattern(cochain::twinfree::pattern_search(k, variant_of(minus)), out);
    return COCHAIN_OK;
  });
}

cochain_status cochain_fit_exponent(const double* sizes, const double* seconds,
                                    size_t count, double* out) {
  if (!sizes) return null_argument("sizes");
  if (!seconds) return null_argument("seconds");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = cochain::fitted_exponent(std::vector<double>(sizes, sizes + count),
                                    std::vector<double>(seconds, seconds + count));
    return COCHAIN_OK;
  });
}

}  // extern "C"
