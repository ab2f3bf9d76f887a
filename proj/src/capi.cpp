#include "rigidity.h"

#include "rigidity/analysis.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/families.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/henneberg.hpp"
#include "rigidity/realizations.hpp"
#include "rigidity/reference_tables.hpp"
#include "rigidity/reproduce.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

struct rg_graph {
    rigidity::Graph g;
};

struct rg_count_result {
    rigidity::RealizationCount rc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
rg_status guard(Fn&& fn) {
    try {
        fn();
        return RG_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return RG_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RG_ERR_RUNTIME;
    } catch (...) {
        g_last_error = "unknown error";
        return RG_ERR_RUNTIME;
    }
}

void require_arg(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

rigidity::BigInt parse_code_arg(const char* code, const char* what) {
    require_arg(code != nullptr, what);
    return rigidity::parse_code(code);
}

rigidity::CountConfig to_config(const rg_count_config* cfg) {
    rigidity::CountConfig out;
    if (cfg) {
        out.prime = cfg->prime;
        out.prime_floor = cfg->prime_floor;
        out.runs = cfg->runs;
        out.max_runs = cfg->max_runs;
        out.seed = cfg->seed;
        out.preprocess = cfg->preprocess != 0;
    }
    return out;
}

int fill_ints(const std::vector<int>& values, int* out, int capacity) {
    if (out) {
        int limit = static_cast<int>(values.size()) < capacity
                        ? static_cast<int>(values.size())
                        : capacity;
        for (int i = 0; i < limit; ++i) out[i] = values[i];
    }
    return static_cast<int>(values.size());
}

}  // namespace

extern "C" {

const char* rg_last_error(void) { return g_last_error.c_str(); }

void rg_string_free(char* s) { std::free(s); }

const char* rg_version(void) { return "0.1.0"; }

/* ---- graphs and codec -------------------------------------------------- */

rg_status rg_graph_decode(const char* code, int n, rg_graph** out) {
    return guard([&] {
        require_arg(out != nullptr, "output pointer is null");
        rigidity::Graph g = rigidity::decode(parse_code_arg(code, "code is null"), n);
        *out = new rg_graph{std::move(g)};
    });
}

rg_status rg_graph_from_edges(int n, const int* endpoints, int edge_count,
                              rg_graph** out) {
    return guard([&] {
        require_arg(out != nullptr, "output pointer is null");
        require_arg(endpoints != nullptr || edge_count == 0, "endpoints is null");
        require_arg(edge_count >= 0, "edge count is negative");
        std::vector<std::pair<rigidity::Vertex, rigidity::Vertex>> edges;
        edges.reserve(static_cast<std::size_t>(edge_count));
        for (int i = 0; i < edge_count; ++i) {
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        }
        *out = new rg_graph{rigidity::Graph(n, edges)};
    });
}

void rg_graph_free(rg_graph* g) { delete g; }

rg_status rg_graph_encode(const rg_graph* g, char** code_out) {
    return guard([&] {
        require_arg(g && code_out, "argument is null");
        *code_out = dup_string(rigidity::encode(g->g).str());
    });
}

rg_status rg_graph_canonical_code(const rg_graph* g, char** code_out) {
    return guard([&] {
        require_arg(g && code_out, "argument is null");
        *code_out = dup_string(rigidity::canonical_code(g->g).str());
    });
}

rg_status rg_infer_vertex_count(const char* code, int* n_out) {
    return guard([&] {
        require_arg(n_out != nullptr, "output pointer is null");
        *n_out = rigidity::infer_vertex_count(parse_code_arg(code, "code is null"));
    });
}

int rg_graph_vertex_count(const rg_graph* g) { return g ? g->g.vertex_count() : 0; }

int rg_graph_edge_count(const rg_graph* g) { return g ? g->g.edge_count() : 0; }

rg_status rg_graph_edge(const rg_graph* g, int index, int* u_out, int* v_out) {
    return guard([&] {
        require_arg(g && u_out && v_out, "argument is null");
        auto edges = g->g.edges();
        require_arg(index >= 0 && index < static_cast<int>(edges.size()),
                    "edge index out of range");
        *u_out = edges[static_cast<std::size_t>(index)].first;
        *v_out = edges[static_cast<std::size_t>(index)].second;
    });
}

rg_status rg_graph_has_edge(const rg_graph* g, int u, int v, int* out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        require_arg(u >= 0 && u < g->g.vertex_count() && v >= 0 &&
                        v < g->g.vertex_count(),
                    "vertex out of range");
        *out = g->g.has_edge(u, v) ? 1 : 0;
    });
}

rg_status rg_graph_degree(const rg_graph* g, int vertex, int* degree_out) {
    return guard([&] {
        require_arg(g && degree_out, "argument is null");
        require_arg(vertex >= 0 && vertex < g->g.vertex_count(), "vertex out of range");
        *degree_out = g->g.degree(vertex);
    });
}

rg_status rg_graph_is_isomorphic(const rg_graph* a, const rg_graph* b, int* out) {
    return guard([&] {
        require_arg(a && b && out, "argument is null");
        *out = rigidity::is_isomorphic(a->g, b->g) ? 1 : 0;
    });
}

/* ---- structural analysis ----------------------------------------------- */

rg_status rg_is_laman(const rg_graph* g, int* out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        *out = rigidity::is_laman(g->g) ? 1 : 0;
    });
}

rg_status rg_satisfies_3d_count(const rg_graph* g, int* out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        *out = rigidity::satisfies_3d_count(g->g) ? 1 : 0;
    });
}

rg_status rg_is_connected(const rg_graph* g, int* out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        *out = g->g.is_connected() ? 1 : 0;
    });
}

rg_status rg_is_planar(const rg_graph* g, int* out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        *out = rigidity::is_planar(g->g) ? 1 : 0;
    });
}

rg_status rg_hamiltonian_cycle(const rg_graph* g, int* found, int* cycle_out) {
    return guard([&] {
        require_arg(g && found, "argument is null");
        auto cycle = rigidity::hamiltonian_cycle(g->g);
        *found = cycle.has_value() ? 1 : 0;
        if (cycle && cycle_out) {
            for (std::size_t i = 0; i < cycle->size(); ++i) {
                cycle_out[i] = (*cycle)[i];
            }
        }
    });
}

rg_status rg_count_short_cycles(const rg_graph* g, long long* three_out,
                                long long* four_out) {
    return guard([&] {
        require_arg(g && three_out && four_out, "argument is null");
        auto [c3, c4] = rigidity::count_short_cycles(g->g);
        *three_out = c3;
        *four_out = c4;
    });
}

/* ---- construction-step enumeration ------------------------------------- */

rg_status rg_generate(int max_n, int dimension, const char* kinds, int jobs,
                      const char* state_dir,
                      int (*callback)(void* user, int n, const char* code),
                      void* user) {
    return guard([&] {
        require_arg(callback != nullptr, "callback is null");
        rigidity::GenerateOptions options;
        if (kinds) {
            std::string token;
            for (const char* p = kinds;; ++p) {
                if (*p == ',' || *p == '\0') {
                    require_arg(!token.empty(), "empty step kind in list");
                    options.kinds.push_back(rigidity::parse_step_kind(token));
                    token.clear();
                    if (*p == '\0') break;
                } else {
                    token += *p;
                }
            }
        }
        if (jobs > 0) options.jobs = jobs;
        if (state_dir) options.state_dir = state_dir;
        for (const rigidity::GraphListEntry& e :
             rigidity::generate_up_to(max_n, dimension, options)) {
            if (!callback(user, e.n, e.code.str().c_str())) break;
        }
    });
}

/* ---- realization counting ---------------------------------------------- */

void rg_count_config_default(rg_count_config* cfg) {
    if (!cfg) return;
    rigidity::CountConfig d;
    cfg->prime = d.prime;
    cfg->prime_floor = d.prime_floor;
    cfg->runs = d.runs;
    cfg->max_runs = d.max_runs;
    cfg->seed = d.seed;
    cfg->preprocess = d.preprocess ? 1 : 0;
}

rg_status rg_count(const rg_graph* g, int dimension, const rg_count_config* cfg,
                   rg_count_result** out) {
    return guard([&] {
        require_arg(g && out, "argument is null");
        rigidity::RealizationCount rc =
            rigidity::count_realizations(g->g, dimension, to_config(cfg));
        *out = new rg_count_result{std::move(rc)};
    });
}

void rg_count_result_free(rg_count_result* r) { delete r; }

int rg_count_result_flexible(const rg_count_result* r) {
    return r && r->rc.flexible ? 1 : 0;
}

int rg_count_result_agreed(const rg_count_result* r) {
    return r && r->rc.agreed ? 1 : 0;
}

rg_status rg_count_result_value(const rg_count_result* r, uint64_t* out) {
    return guard([&] {
        require_arg(r && out, "argument is null");
        if (!r->rc.value) {
            throw std::runtime_error(r->rc.flexible
                                         ? "graph is flexible: no finite count"
                                         : "runs did not agree on a count");
        }
        *out = *r->rc.value;
    });
}

uint64_t rg_count_result_factor(const rg_count_result* r) {
    return r ? r->rc.factor : 0;
}

int rg_count_result_run_count(const rg_count_result* r) {
    return r ? static_cast<int>(r->rc.runs.size()) : 0;
}

rg_status rg_count_result_run(const rg_count_result* r, int index,
                              uint32_t* prime_out, uint64_t* seed_out,
                              uint64_t* raw_out, int* flexible_out,
                              int* degenerate_out) {
    return guard([&] {
        require_arg(r != nullptr, "argument is null");
        require_arg(index >= 0 && index < static_cast<int>(r->rc.runs.size()),
                    "run index out of range");
        const rigidity::RunRecord& run = r->rc.runs[static_cast<std::size_t>(index)];
        if (prime_out) *prime_out = run.prime;
        if (seed_out) *seed_out = run.seed;
        if (raw_out) *raw_out = run.raw ? *run.raw : std::numeric_limits<uint64_t>::max();
        if (flexible_out) *flexible_out = run.flexible ? 1 : 0;
        if (degenerate_out) *degenerate_out = run.degenerate ? 1 : 0;
    });
}

int rg_count_result_removed(const rg_count_result* r, int* out, int capacity) {
    return r ? fill_ints(r->rc.removed, out, capacity) : 0;
}

int rg_count_result_pinned(const rg_count_result* r, int* out, int capacity) {
    return r ? fill_ints(r->rc.pinned, out, capacity) : 0;
}

int rg_count_result_fallback_pin(const rg_count_result* r) {
    return r && r->rc.fallback_pin ? 1 : 0;
}

/* ---- lower bounds ------------------------------------------------------ */

rg_status rg_bound(const char* construction, const rg_graph* base,
                   int base_vertices, const char* base_count,
                   const rg_graph* glue, int glue_vertices,
                   const char* glue_count, int n, char** value_out,
                   int* k_out, int* padding_out, int* exact_out,
                   double* rate_out) {
    return guard([&] {
        require_arg(construction != nullptr, "construction is null");
        std::string name = construction;
        rigidity::BoundKind kind;
        if (name == "caterpillar") {
            kind = rigidity::BoundKind::Caterpillar;
        } else if (name == "fan") {
            kind = rigidity::BoundKind::Fan;
        } else if (name == "genfan") {
            kind = rigidity::BoundKind::GeneralizedFan;
        } else if (name == "genfan3d") {
            kind = rigidity::BoundKind::GeneralizedFan3D;
        } else {
            throw std::invalid_argument("unknown construction '" + name + "'");
        }
        rigidity::BoundSpec spec;
        spec.dimension = kind == rigidity::BoundKind::GeneralizedFan3D ? 3 : 2;
        if (base) spec.base_graph = base->g;
        spec.base_vertices = base_vertices;
        spec.base_count = parse_code_arg(base_count, "base count is null");
        if (glue) spec.glue_graph = glue->g;
        spec.glue_vertices = glue_vertices;
        if (glue_count) spec.glue_count = rigidity::parse_code(glue_count);
        spec.n = n;
        rigidity::BoundResult res = rigidity::evaluate_bound(kind, spec);
        if (value_out) *value_out = dup_string(res.value.str());
        if (k_out) *k_out = res.k;
        if (padding_out) *padding_out = res.padding;
        if (exact_out) *exact_out = res.exact ? 1 : 0;
        if (rate_out) *rate_out = res.rate;
    });
}

rg_status rg_theorem_bound(int dimension, int n, char** value_out) {
    return guard([&] {
        require_arg(value_out != nullptr, "output pointer is null");
        *value_out = dup_string(rigidity::theorem_bound(dimension, n).str());
    });
}

rg_status rg_format_rate(double rate, char** out) {
    return guard([&] {
        require_arg(out != nullptr, "output pointer is null");
        *out = dup_string(rigidity::format_rate(rate));
    });
}

/* ---- graph families ---------------------------------------------------- */

rg_status rg_family_check(const rg_graph* g, char family, int* verdict_out,
                          char** reason_out) {
    return guard([&] {
        require_arg(g && verdict_out, "argument is null");
        rigidity::FamilyReport report;
        if (family == 'T') {
            report = rigidity::in_T(g->g);
        } else if (family == 'S') {
            report = rigidity::in_S(g->g);
        } else {
            throw std::invalid_argument("family must be 'T' or 'S'");
        }
        *verdict_out = report.verdict ? 1 : 0;
        if (reason_out) *reason_out = dup_string(report.reason);
    });
}

rg_status rg_family_search(int n, char family, int with_counts,
                           const rg_count_config* cfg,
                           int (*callback)(void* user, const char* code,
                                           const char* count),
                           void* user) {
    return guard([&] {
        require_arg(callback != nullptr, "callback is null");
        std::vector<rigidity::FamilyMatch> matches =
            rigidity::search_family(n, family, with_counts != 0, to_config(cfg));
        for (const rigidity::FamilyMatch& m : matches) {
            std::string code = m.code.str();
            if (m.count) {
                std::string count = m.count->str();
                if (!callback(user, code.c_str(), count.c_str())) break;
            } else {
                if (!callback(user, code.c_str(), nullptr)) break;
            }
        }
    });
}

/* ---- reproduction of embedded reference tables ------------------------- */

rg_status rg_reproduce(const char* table, int stretch,
                       const rg_count_config* cfg,
                       void (*callback)(void* user, const char* table,
                                        const char* name, const char* expected,
                                        const char* computed, const char* tier,
                                        int checked, int pass,
                                        const char* note),
                       void* user, int* all_passed_out) {
    return guard([&] {
        require_arg(table != nullptr, "table is null");
        rigidity::ReproduceOptions options;
        options.stretch = stretch != 0;
        options.count = to_config(cfg);
        if (callback) {
            options.on_line = [&](const rigidity::ReproLine& l) {
                callback(user, l.table.c_str(), l.name.c_str(), l.expected.c_str(),
                         l.computed.c_str(), rigidity::to_string(l.tier).c_str(),
                         l.checked ? 1 : 0, l.pass ? 1 : 0, l.note.c_str());
            };
        }
        std::vector<rigidity::ReproLine> lines = rigidity::reproduce_table(table, options);
        if (all_passed_out) *all_passed_out = rigidity::reproduce_passed(lines) ? 1 : 0;
    });
}

int rg_reproduce_table_count(void) {
    return static_cast<int>(rigidity::reproduce_table_names().size());
}

const char* rg_reproduce_table_name(int index) {
    const std::vector<std::string>& names = rigidity::reproduce_table_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[static_cast<std::size_t>(index)].c_str();
}

} /* extern "C" */
