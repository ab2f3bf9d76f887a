// Command-line surface for the rigidity toolkit. Machine-readable JSON lines
// go to stdout; human-readable summaries go to stderr. The tool talks to the
// library exclusively through the C interface in rigidity.h.

#include "rigidity.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

// ---- small RAII helpers over the C interface --------------------------------

struct CStr {
    char* s = nullptr;
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    ~CStr() { rg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct GraphPtr {
    rg_graph* g = nullptr;
    GraphPtr() = default;
    GraphPtr(const GraphPtr&) = delete;
    GraphPtr& operator=(const GraphPtr&) = delete;
    GraphPtr(GraphPtr&& other) noexcept : g(other.g) { other.g = nullptr; }
    ~GraphPtr() { rg_graph_free(g); }
};

struct CountPtr {
    rg_count_result* r = nullptr;
    CountPtr() = default;
    CountPtr(const CountPtr&) = delete;
    CountPtr& operator=(const CountPtr&) = delete;
    ~CountPtr() { rg_count_result_free(r); }
};

std::string last_error() { return rg_last_error(); }

// ---- input parsing -----------------------------------------------------------

struct InputGraph {
    int n = 0;
    std::string code;
    std::vector<int> endpoints;  // filled when the line carried an edge list
    bool has_edges = false;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string json_code_field(const json& j) {
    const json& c = j.at("code");
    if (c.is_string()) return c.get<std::string>();
    return c.dump();  // plain integer literal
}

// Accepts graph-list lines ("n<TAB>code"), JSON objects with n and code, and
// JSON objects with n and an explicit edge list.
bool parse_graph_line(const std::string& raw, InputGraph& out, std::string& err) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') {
        err = "empty line";
        return false;
    }
    try {
        if (line[0] == '{') {
            json j = json::parse(line);
            out.n = j.at("n").get<int>();
            if (j.contains("edges")) {
                out.has_edges = true;
                for (const auto& e : j.at("edges")) {
                    out.endpoints.push_back(e.at(0).get<int>());
                    out.endpoints.push_back(e.at(1).get<int>());
                }
            }
            if (j.contains("code")) {
                out.code = json_code_field(j);
            } else if (!out.has_edges) {
                err = "JSON line has neither code nor edges";
                return false;
            }
            return true;
        }
        std::istringstream in(line);
        std::string first, second;
        if (!(in >> first)) {
            err = "blank line";
            return false;
        }
        // "n code" graph-list line or "n u-v u-v ..." edge list.
        out.n = std::stoi(first);
        while (in >> second) {
            auto dash = second.find('-');
            if (dash == std::string::npos) {
                if (!out.code.empty()) {
                    err = "unexpected token '" + second + "'";
                    return false;
                }
                out.code = second;
            } else {
                out.has_edges = true;
                out.endpoints.push_back(std::stoi(second.substr(0, dash)));
                out.endpoints.push_back(std::stoi(second.substr(dash + 1)));
            }
        }
        if (out.code.empty() && !out.has_edges) {
            err = "line carries neither code nor edges";
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        err = "cannot parse '" + line + "': " + e.what();
        return false;
    }
}

// Builds a graph handle from a parsed line (decoding or edge assembly).
bool graph_from_input(const InputGraph& in, GraphPtr& out, std::string& err) {
    rg_status st;
    if (in.has_edges && in.code.empty()) {
        st = rg_graph_from_edges(in.n, in.endpoints.data(),
                                 static_cast<int>(in.endpoints.size() / 2), &out.g);
    } else {
        st = rg_graph_decode(in.code.c_str(), in.n, &out.g);
    }
    if (st != RG_OK) {
        err = last_error();
        return false;
    }
    return true;
}

// ---- IO plumbing -------------------------------------------------------------

struct Streams {
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;

    bool open(const std::string& input, const std::string& output, std::string& err) {
        if (!input.empty()) {
            in_file.open(input);
            if (!in_file) {
                err = "cannot open input file '" + input + "'";
                return false;
            }
            in = &in_file;
        }
        if (!output.empty()) {
            out_file.open(output);
            if (!out_file) {
                err = "cannot open output file '" + output + "'";
                return false;
            }
            out = &out_file;
        }
        return true;
    }
};

int fail(const std::string& message) {
    std::cerr << "rigidity: " << message << "\n";
    return 1;
}

// Reads all usable lines; parse failures are reported immediately.
std::vector<InputGraph> read_batch(std::istream& in, int& failures) {
    std::vector<InputGraph> batch;
    std::string raw;
    long line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#') continue;
        InputGraph g;
        std::string err;
        if (parse_graph_line(stripped, g, err)) {
            batch.push_back(std::move(g));
        } else {
            ++failures;
            json j;
            j["line"] = line_no;
            j["error"] = err;
            std::cout << j.dump() << "\n";
            std::cerr << "line " << line_no << ": " << err << "\n";
        }
    }
    return batch;
}

// ---- counting configuration shared by several subcommands ---------------------

void add_count_options(CLI::App* cmd, rg_count_config& cfg, bool& no_preprocess) {
    rg_count_config_default(&cfg);
    cmd->add_option("--runs", cfg.runs, "independent runs that must agree")
        ->capture_default_str();
    cmd->add_option("--max-runs", cfg.max_runs,
                    "total runs allowed when resolving disagreement")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "base seed for length sampling")
        ->capture_default_str();
    cmd->add_option("--prime", cfg.prime, "largest prime tried first")
        ->envname("RIGIDITY_PRIME")
        ->capture_default_str();
    cmd->add_option("--prime-floor", cfg.prime_floor,
                    "abort when the prime ladder falls below this")
        ->capture_default_str();
    cmd->add_flag("--no-preprocess", no_preprocess,
                  "keep degree-d vertices instead of collapsing them");
}

json count_to_json(const InputGraph& in, const rg_count_result* r) {
    json j;
    j["n"] = in.n;
    j["code"] = in.code;
    uint64_t value = 0;
    if (rg_count_result_value(r, &value) == RG_OK) {
        j["value"] = value;
    } else {
        j["value"] = nullptr;
    }
    j["flexible"] = rg_count_result_flexible(r) == 1;
    j["agreed"] = rg_count_result_agreed(r) == 1;
    j["factor"] = rg_count_result_factor(r);
    int removed_len = rg_count_result_removed(r, nullptr, 0);
    std::vector<int> removed(static_cast<std::size_t>(removed_len));
    rg_count_result_removed(r, removed.data(), removed_len);
    j["removed"] = removed;
    int pinned_len = rg_count_result_pinned(r, nullptr, 0);
    std::vector<int> pinned(static_cast<std::size_t>(pinned_len));
    rg_count_result_pinned(r, pinned.data(), pinned_len);
    j["pinned"] = pinned;
    j["fallback_pin"] = rg_count_result_fallback_pin(r) == 1;
    json runs = json::array();
    for (int i = 0; i < rg_count_result_run_count(r); ++i) {
        uint32_t prime = 0;
        uint64_t seed = 0, raw = 0;
        int flexible = 0, degenerate = 0;
        rg_count_result_run(r, i, &prime, &seed, &raw, &flexible, &degenerate);
        json run;
        run["prime"] = prime;
        run["seed"] = seed;
        if (raw == UINT64_MAX) {
            run["raw"] = nullptr;
        } else {
            run["raw"] = raw;
        }
        run["flexible"] = flexible == 1;
        run["degenerate"] = degenerate == 1;
        runs.push_back(std::move(run));
    }
    j["runs"] = std::move(runs);
    return j;
}

// ---- subcommand implementations -----------------------------------------------

int run_encode(Streams& io) {
    int failures = 0;
    std::vector<InputGraph> batch = read_batch(*io.in, failures);
    for (const InputGraph& in : batch) {
        GraphPtr g;
        std::string err;
        if (!in.has_edges) {
            err = "encode expects an edge list";
        } else if (graph_from_input(in, g, err)) {
            CStr code;
            if (rg_graph_encode(g.g, &code.s) == RG_OK) {
                json j;
                j["n"] = in.n;
                j["code"] = code.str();
                *io.out << j.dump() << "\n";
                std::cerr << "n=" << in.n << " -> " << code.str() << "\n";
                continue;
            }
            err = last_error();
        }
        ++failures;
        json j;
        j["n"] = in.n;
        j["error"] = err;
        *io.out << j.dump() << "\n";
        std::cerr << "encode: " << err << "\n";
    }
    return failures == 0 ? 0 : 1;
}

bool emit_decoded(const InputGraph& in, Streams& io) {
    GraphPtr g;
    std::string err;
    InputGraph resolved = in;
    if (resolved.n == 0 && !resolved.code.empty()) {
        if (rg_infer_vertex_count(resolved.code.c_str(), &resolved.n) != RG_OK) {
            err = last_error();
        }
    }
    if (err.empty() && graph_from_input(resolved, g, err)) {
        json edges = json::array();
        for (int i = 0; i < rg_graph_edge_count(g.g); ++i) {
            int u = 0, v = 0;
            rg_graph_edge(g.g, i, &u, &v);
            edges.push_back(json::array({u, v}));
        }
        json degrees = json::array();
        std::ostringstream human;
        for (int v = 0; v < rg_graph_vertex_count(g.g); ++v) {
            int d = 0;
            rg_graph_degree(g.g, v, &d);
            degrees.push_back(d);
        }
        CStr code;
        rg_graph_encode(g.g, &code.s);
        json j;
        j["n"] = resolved.n;
        j["code"] = code.str();
        j["edges"] = std::move(edges);
        j["degrees"] = std::move(degrees);
        *io.out << j.dump() << "\n";
        human << code.str() << " (n=" << resolved.n << "):";
        for (int i = 0; i < rg_graph_edge_count(g.g); ++i) {
            int u = 0, v = 0;
            rg_graph_edge(g.g, i, &u, &v);
            human << " " << u << "-" << v;
        }
        std::cerr << human.str() << "\n";
        return true;
    }
    json j;
    j["code"] = in.code;
    j["error"] = err;
    *io.out << j.dump() << "\n";
    std::cerr << "decode: " << err << "\n";
    return false;
}

int run_decode(const std::string& code, int n, Streams& io) {
    if (!code.empty()) {
        InputGraph in;
        in.code = code;
        in.n = n;
        return emit_decoded(in, io) ? 0 : 1;
    }
    int failures = 0;
    for (const InputGraph& in : read_batch(*io.in, failures)) {
        if (!emit_decoded(in, io)) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int run_canon(const std::string& code, int n, Streams& io) {
    auto one = [&](const InputGraph& in) {
        GraphPtr g;
        std::string err;
        if (graph_from_input(in, g, err)) {
            CStr canon, original;
            if (rg_graph_canonical_code(g.g, &canon.s) == RG_OK &&
                rg_graph_encode(g.g, &original.s) == RG_OK) {
                json j;
                j["n"] = in.n;
                j["code"] = original.str();
                j["canonical"] = canon.str();
                *io.out << j.dump() << "\n";
                std::cerr << original.str() << " -> " << canon.str() << "\n";
                return true;
            }
            err = last_error();
        }
        json j;
        j["code"] = in.code;
        j["error"] = err;
        *io.out << j.dump() << "\n";
        std::cerr << "canon: " << err << "\n";
        return false;
    };
    if (!code.empty()) {
        InputGraph in;
        in.code = code;
        in.n = n;
        return one(in) ? 0 : 1;
    }
    int failures = 0;
    for (const InputGraph& in : read_batch(*io.in, failures)) {
        if (!one(in)) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int run_check(int dim, Streams& io) {
    int failures = 0;
    for (const InputGraph& in : read_batch(*io.in, failures)) {
        GraphPtr g;
        std::string err;
        if (!graph_from_input(in, g, err)) {
            ++failures;
            json j;
            j["code"] = in.code;
            j["error"] = err;
            *io.out << j.dump() << "\n";
            std::cerr << "check: " << err << "\n";
            continue;
        }
        int tight = 0, connected = 0, planar = 0, found = 0;
        long long c3 = 0, c4 = 0;
        if (dim == 2) {
            rg_is_laman(g.g, &tight);
        } else {
            rg_satisfies_3d_count(g.g, &tight);
        }
        rg_is_connected(g.g, &connected);
        rg_is_planar(g.g, &planar);
        std::vector<int> cycle(static_cast<std::size_t>(rg_graph_vertex_count(g.g)));
        rg_hamiltonian_cycle(g.g, &found, cycle.data());
        rg_count_short_cycles(g.g, &c3, &c4);
        json degrees = json::array();
        for (int v = 0; v < rg_graph_vertex_count(g.g); ++v) {
            int d = 0;
            rg_graph_degree(g.g, v, &d);
            degrees.push_back(d);
        }
        CStr code;
        rg_graph_encode(g.g, &code.s);
        json j;
        j["n"] = rg_graph_vertex_count(g.g);
        j["code"] = code.str();
        j["dim"] = dim;
        j["tight"] = tight == 1;
        j["connected"] = connected == 1;
        j["planar"] = planar == 1;
        j["hamiltonian"] = found == 1;
        j["degrees"] = std::move(degrees);
        j["three_cycles"] = c3;
        j["four_cycles"] = c4;
        *io.out << j.dump() << "\n";
        std::cerr << code.str() << " (n=" << rg_graph_vertex_count(g.g)
                  << "): " << (dim == 2 ? "Laman: " : "(3,6)-tight: ")
                  << (tight ? "true" : "false")
                  << ", connected: " << (connected ? "true" : "false")
                  << ", planar: " << (planar ? "true" : "false")
                  << ", Hamiltonian: " << (found ? "true" : "false") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

struct GenerateSink {
    std::ostream* out;
    long emitted = 0;
};

int generate_callback(void* user, int n, const char* code) {
    auto* sink = static_cast<GenerateSink*>(user);
    *sink->out << n << "\t" << code << "\n";
    sink->emitted += 1;
    return 1;
}

int run_generate(int dim, int max_n, const std::string& kinds,
                 const std::string& state_dir, int jobs, Streams& io) {
    GenerateSink sink{io.out};
    rg_status st = rg_generate(max_n, dim, kinds.empty() ? nullptr : kinds.c_str(),
                               jobs, state_dir.empty() ? nullptr : state_dir.c_str(),
                               generate_callback, &sink);
    if (st != RG_OK) return fail("generate: " + last_error());
    std::cerr << "generated " << sink.emitted << " graphs with up to " << max_n
              << " vertices (dim " << dim << ")\n";
    return 0;
}

int run_count(int dim, const rg_count_config& cfg, int jobs, Streams& io) {
    int failures = 0;
    std::vector<InputGraph> batch = read_batch(*io.in, failures);
    std::vector<std::string> results(batch.size());
    std::vector<std::string> human(batch.size());
    std::atomic<std::size_t> next{0};
    std::atomic<int> batch_failures{0};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= batch.size()) return;
            const InputGraph& in = batch[i];
            GraphPtr g;
            std::string err;
            CountPtr result;
            if (graph_from_input(in, g, err) &&
                rg_count(g.g, dim, &cfg, &result.r) == RG_OK) {
                json j = count_to_json(in, result.r);
                results[i] = j.dump();
                std::ostringstream h;
                h << in.code << " (n=" << in.n << "): ";
                if (j["value"].is_null()) {
                    h << (rg_count_result_flexible(result.r) ? "flexible"
                                                             : "no agreement");
                } else {
                    h << j["value"];
                }
                h << " [" << rg_count_result_run_count(result.r) << " runs]";
                human[i] = h.str();
                continue;
            }
            if (err.empty()) err = last_error();
            json j;
            j["n"] = in.n;
            j["code"] = in.code;
            j["error"] = err;
            results[i] = j.dump();
            human[i] = in.code + ": " + err;
            batch_failures.fetch_add(1);
        }
    };

    int workers = jobs > 0 ? jobs : 1;
    if (workers > 1 && batch.size() > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    } else {
        worker();
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
        *io.out << results[i] << "\n";
        std::cerr << human[i] << "\n";
    }
    failures += batch_failures.load();
    return failures == 0 ? 0 : 1;
}

struct BoundRow {
    int n;
    std::string value;
    std::string rate;  // empty when the construction has no per-n rate
};

int run_bound(const std::string& construction, const std::string& base_arg,
              const std::string& glue_arg, std::string base_count,
              std::string glue_count, const std::string& range,
              const std::string& csv_path, const std::string& plot_path,
              const rg_count_config& cfg) {
    auto parse_spec = [](const std::string& arg, std::string& code, int& n) {
        auto colon = arg.rfind(':');
        if (colon == std::string::npos) return false;
        code = arg.substr(0, colon);
        try {
            n = std::stoi(arg.substr(colon + 1));
        } catch (const std::exception&) {
            return false;
        }
        return !code.empty();
    };

    int lo = 0, hi = 0;
    {
        auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            return fail("bound: cannot parse --n-range '" + range + "'");
        }
        if (lo > hi) return fail("bound: empty --n-range");
    }

    bool theorem = construction == "theorem2d" || construction == "theorem3d";
    GraphPtr base, glue;
    std::string base_code, glue_code;
    int base_n = 0, glue_n = 0;
    if (!theorem) {
        if (base_arg.empty()) return fail("bound: --base CODE:N is required");
        if (!parse_spec(base_arg, base_code, base_n)) {
            return fail("bound: cannot parse --base '" + base_arg + "'");
        }
        if (rg_graph_decode(base_code.c_str(), base_n, &base.g) != RG_OK) {
            return fail("bound: " + last_error());
        }
        if (!glue_arg.empty()) {
            if (!parse_spec(glue_arg, glue_code, glue_n)) {
                return fail("bound: cannot parse --glue '" + glue_arg + "'");
            }
            if (rg_graph_decode(glue_code.c_str(), glue_n, &glue.g) != RG_OK) {
                return fail("bound: " + last_error());
            }
        }
        int dim = construction == "genfan3d" ? 3 : 2;
        auto fill_count = [&](const GraphPtr& g, std::string& count,
                              const char* what) {
            if (!count.empty() || !g.g) return true;
            CountPtr r;
            uint64_t value = 0;
            if (rg_count(g.g, dim, &cfg, &r.r) != RG_OK ||
                rg_count_result_value(r.r, &value) != RG_OK) {
                std::cerr << "rigidity: bound: counting the " << what
                          << " graph failed: " << last_error() << "\n";
                return false;
            }
            count = std::to_string(value);
            std::cerr << "counted " << what << " graph: " << count << "\n";
            return true;
        };
        if (!fill_count(base, base_count, "base")) return 1;
        if (!fill_count(glue, glue_count, "glue")) return 1;
    }

    std::vector<BoundRow> rows;
    for (int n = lo; n <= hi; ++n) {
        json j;
        j["construction"] = construction;
        j["n"] = n;
        if (theorem) {
            CStr value;
            if (rg_theorem_bound(construction == "theorem2d" ? 2 : 3, n, &value.s) !=
                RG_OK) {
                return fail("bound: " + last_error());
            }
            j["value"] = value.str();
            rows.push_back({n, value.str(), ""});
        } else {
            CStr value;
            int k = 0, padding = 0, exact = 0;
            double rate = 0.0;
            if (rg_bound(construction.c_str(), base.g, base_n, base_count.c_str(),
                         glue.g, glue_n,
                         glue_count.empty() ? nullptr : glue_count.c_str(), n,
                         &value.s, &k, &padding, &exact, &rate) != RG_OK) {
                return fail("bound: " + last_error());
            }
            CStr rate_text;
            rg_format_rate(rate, &rate_text.s);
            j["value"] = value.str();
            j["rate"] = rate_text.str();
            j["k"] = k;
            j["padding"] = padding;
            j["exact"] = exact == 1;
            rows.push_back({n, value.str(), rate_text.str()});
        }
        std::cout << j.dump() << "\n";
        std::cerr << construction << " n=" << n << ": " << rows.back().value;
        if (!rows.back().rate.empty()) std::cerr << " (rate " << rows.back().rate << ")";
        std::cerr << "\n";
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) return fail("bound: cannot open '" + csv_path + "'");
        csv << "n,construction,base_code,glue_code,bound,rate\n";
        for (const BoundRow& row : rows) {
            csv << row.n << "," << construction << "," << base_code << ","
                << glue_code << "," << row.value << "," << row.rate << "\n";
        }
        std::cerr << "wrote " << csv_path << "\n";
    }
    if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) return fail("bound: cannot open '" + plot_path + "'");
        bool has_rate = !rows.empty() && !rows.front().rate.empty();
        plot << "set title '" << construction << " lower bound'\n";
        plot << "set xlabel 'n'\n";
        if (has_rate) {
            plot << "set ylabel 'growth rate'\n";
            plot << "plot '-' using 1:2 with linespoints title '" << construction
                 << "'\n";
            for (const BoundRow& row : rows) plot << row.n << " " << row.rate << "\n";
        } else {
            plot << "set ylabel 'bound'\n";
            plot << "set logscale y\n";
            plot << "plot '-' using 1:2 with linespoints title '" << construction
                 << "'\n";
            for (const BoundRow& row : rows) plot << row.n << " " << row.value << "\n";
        }
        plot << "e\n";
        std::cerr << "wrote " << plot_path << "\n";
    }
    return 0;
}

struct FamilySearchSink {
    char family;
    int n;
    long matches = 0;
};

int family_search_callback(void* user, const char* code, const char* count) {
    auto* sink = static_cast<FamilySearchSink*>(user);
    json j;
    j["family"] = std::string(1, sink->family);
    j["n"] = sink->n;
    j["code"] = code;
    if (count) j["count"] = std::stoull(count);
    std::cout << j.dump() << "\n";
    std::cerr << "  " << code;
    if (count) std::cerr << " (count " << count << ")";
    std::cerr << "\n";
    sink->matches += 1;
    return 1;
}

int run_family(char family, int n, bool search_mode, bool with_counts,
               const rg_count_config& cfg, Streams& io) {
    if (search_mode) {
        std::cerr << "members of " << family << "(" << n << "):\n";
        FamilySearchSink sink{family, n};
        if (rg_family_search(n, family, with_counts ? 1 : 0, &cfg,
                             family_search_callback, &sink) != RG_OK) {
            return fail("family: " + last_error());
        }
        std::cerr << sink.matches << " member(s)\n";
        return 0;
    }
    int failures = 0;
    for (const InputGraph& in : read_batch(*io.in, failures)) {
        GraphPtr g;
        std::string err;
        int verdict = 0;
        CStr reason;
        if (!graph_from_input(in, g, err) ||
            rg_family_check(g.g, family, &verdict, &reason.s) != RG_OK) {
            if (err.empty()) err = last_error();
            ++failures;
            json j;
            j["code"] = in.code;
            j["error"] = err;
            *io.out << j.dump() << "\n";
            std::cerr << "family: " << err << "\n";
            continue;
        }
        json j;
        j["n"] = in.n;
        j["code"] = in.code;
        j["family"] = std::string(1, family);
        j["member"] = verdict == 1;
        if (verdict == 0) j["reason"] = reason.str();
        *io.out << j.dump() << "\n";
        std::cerr << in.code << " (n=" << in.n << "): "
                  << (verdict ? "in " : "not in ") << family;
        if (!verdict) std::cerr << " (" << reason.str() << ")";
        std::cerr << "\n";
    }
    return failures == 0 ? 0 : 1;
}

void reproduce_callback(void* /*user*/, const char* table, const char* name,
                        const char* expected, const char* computed,
                        const char* tier, int checked, int pass,
                        const char* note) {
    json j;
    j["table"] = table;
    j["name"] = name;
    j["tier"] = tier;
    j["checked"] = checked == 1;
    j["pass"] = checked == 1 && pass == 1;
    j["expected"] = expected;
    j["computed"] = computed;
    j["note"] = note;
    std::cout << j.dump() << "\n";

    const char* tag = "info";
    if (checked) {
        tag = pass ? " ok " : "FAIL";
    } else if (std::strncmp(note, "skipped", 7) == 0) {
        tag = "skip";
    }
    std::cerr << "[" << tag << "] " << name;
    if (checked) {
        std::cerr << ": expected " << expected << ", computed " << computed;
    } else if (std::strlen(computed) > 0) {
        std::cerr << ": expected " << expected << ", computed " << computed
                  << " (informational)";
    } else {
        std::cerr << ": expected " << expected;
    }
    if (std::strlen(note) > 0) std::cerr << " [" << note << "]";
    std::cerr << "\n";
}

int run_reproduce(const std::string& table, bool stretch,
                  const rg_count_config& cfg) {
    int all_passed = 0;
    if (rg_reproduce(table.c_str(), stretch ? 1 : 0, &cfg, reproduce_callback,
                     nullptr, &all_passed) != RG_OK) {
        return fail("reproduce: " + last_error());
    }
    if (all_passed != 1) {
        return fail("reproduce: table " + table + " has failing or unchecked lines");
    }
    std::cerr << "table " << table << ": all checked lines match\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigidity toolkit: Laman/Geiringer graph counts, constructions, "
                 "bounds, and reference-table reproduction"};
    app.require_subcommand(1);
    app.set_config("--config", "", "configuration file with key=value lines");
    app.set_version_flag("--version", []() { return std::string(rg_version()); });

    unsigned hardware = std::thread::hardware_concurrency();
    int jobs = hardware == 0 ? 1 : static_cast<int>(hardware);
    app.add_option("--jobs", jobs, "worker threads for batch subcommands")
        ->capture_default_str();

    std::string input_path, output_path;

    // encode
    auto* encode = app.add_subcommand("encode", "edge lists to adjacency codes");
    encode->add_option("--input,-i", input_path, "read from a file instead of stdin");
    encode->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // decode
    std::string decode_code;
    int decode_n = 0;
    auto* decode = app.add_subcommand("decode", "adjacency codes to edge lists");
    decode->add_option("code", decode_code, "adjacency code (batch mode when absent)");
    decode->add_option("n", decode_n, "vertex count (inferred when omitted)");
    decode->add_option("--input,-i", input_path, "read from a file instead of stdin");
    decode->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // canon
    std::string canon_code;
    int canon_n = 0;
    auto* canon = app.add_subcommand("canon", "canonical codes");
    canon->add_option("code", canon_code, "adjacency code (batch mode when absent)");
    canon->add_option("n", canon_n, "vertex count (required with a code)");
    canon->add_option("--input,-i", input_path, "read from a file instead of stdin");
    canon->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // check
    int check_dim = 2;
    auto* check = app.add_subcommand("check", "structural verdicts for graphs");
    check->add_option("--dim", check_dim, "dimension (2 or 3)")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    check->add_option("--input,-i", input_path, "read from a file instead of stdin");
    check->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // generate
    int gen_dim = 2, gen_max_n = 6;
    std::string gen_kinds, gen_state_dir;
    auto* generate = app.add_subcommand("generate",
                                        "enumerate construction-step reachable graphs");
    generate->add_option("--dim", gen_dim, "dimension (2 or 3)")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    generate->add_option("--max-n", gen_max_n, "largest vertex count")->required();
    generate->add_option("--kinds", gen_kinds,
                         "comma-separated step kinds (default: all for the dimension)");
    generate->add_option("--state-dir", gen_state_dir,
                         "persist levels here and resume interrupted runs");
    generate->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // count
    int count_dim = 2;
    rg_count_config count_cfg;
    bool count_no_preprocess = false;
    auto* count = app.add_subcommand("count", "realization counts over finite fields");
    count->add_option("--dim", count_dim, "dimension (2 or 3)")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    add_count_options(count, count_cfg, count_no_preprocess);
    count->add_option("--input,-i", input_path, "read from a file instead of stdin");
    count->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // bound
    std::string bound_construction, bound_base, bound_glue, bound_base_count,
        bound_glue_count, bound_range = "6..12", bound_csv, bound_plot;
    rg_count_config bound_cfg;
    bool bound_no_preprocess = false;
    auto* bound = app.add_subcommand("bound", "gluing-construction lower bounds");
    bound->add_option("--construction", bound_construction, "construction kind")
        ->check(CLI::IsMember({"caterpillar", "fan", "genfan", "genfan3d",
                               "theorem2d", "theorem3d"}))
        ->required();
    bound->add_option("--base", bound_base, "base graph as CODE:N");
    bound->add_option("--glue", bound_glue, "glue graph as CODE:N");
    bound->add_option("--base-count", bound_base_count,
                      "realization count of the base (counted when omitted)");
    bound->add_option("--glue-count", bound_glue_count,
                      "realization count of the glue (counted when omitted)");
    bound->add_option("--n-range", bound_range, "target sizes A..B or a single N")
        ->capture_default_str();
    bound->add_option("--csv", bound_csv, "write a CSV table here");
    bound->add_option("--plot", bound_plot, "write a gnuplot script here");
    add_count_options(bound, bound_cfg, bound_no_preprocess);

    // family
    std::string family_name;
    int family_n = 0;
    bool family_counts = false;
    rg_count_config family_cfg;
    bool family_no_preprocess = false;
    auto* family = app.add_subcommand("family", "T/S family membership and search");
    family->add_option("--family", family_name, "family name (T or S)")
        ->check(CLI::IsMember({"T", "S"}))
        ->required();
    family->add_option("--n", family_n, "search this vertex count instead of stdin");
    family->add_flag("--with-counts", family_counts,
                     "rank search results by realization count");
    add_count_options(family, family_cfg, family_no_preprocess);
    family->add_option("--input,-i", input_path, "read from a file instead of stdin");
    family->add_option("--output,-o", output_path, "write to a file instead of stdout");

    // reproduce
    std::string repro_table;
    bool repro_stretch = false;
    rg_count_config repro_cfg;
    bool repro_no_preprocess = false;
    auto* reproduce = app.add_subcommand("reproduce",
                                         "diff recomputed tables against embedded values");
    {
        std::vector<std::string> tables;
        for (int i = 0; i < rg_reproduce_table_count(); ++i) {
            tables.emplace_back(rg_reproduce_table_name(i));
        }
        reproduce->add_option("--table", repro_table, "table identifier")
            ->check(CLI::IsMember(tables))
            ->required();
    }
    reproduce->add_flag("--stretch", repro_stretch,
                        "also run stretch-tier lines (minutes to an hour)");
    add_count_options(reproduce, repro_cfg, repro_no_preprocess);

    CLI11_PARSE(app, argc, argv);

    count_cfg.preprocess = count_no_preprocess ? 0 : 1;
    bound_cfg.preprocess = bound_no_preprocess ? 0 : 1;
    family_cfg.preprocess = family_no_preprocess ? 0 : 1;
    repro_cfg.preprocess = repro_no_preprocess ? 0 : 1;

    try {
        Streams io;
        std::string err;
        if (!io.open(input_path, output_path, err)) return fail(err);

        if (encode->parsed()) return run_encode(io);
        if (decode->parsed()) return run_decode(decode_code, decode_n, io);
        if (canon->parsed()) {
            if (!canon_code.empty() && canon_n == 0) {
                if (rg_infer_vertex_count(canon_code.c_str(), &canon_n) != RG_OK) {
                    return fail("canon: " + last_error());
                }
            }
            return run_canon(canon_code, canon_n, io);
        }
        if (check->parsed()) return run_check(check_dim, io);
        if (generate->parsed()) {
            return run_generate(gen_dim, gen_max_n, gen_kinds, gen_state_dir, jobs, io);
        }
        if (count->parsed()) return run_count(count_dim, count_cfg, jobs, io);
        if (bound->parsed()) {
            return run_bound(bound_construction, bound_base, bound_glue,
                             bound_base_count, bound_glue_count, bound_range,
                             bound_csv, bound_plot, bound_cfg);
        }
        if (family->parsed()) {
            return run_family(family_name[0], family_n, family->count("--n") > 0,
                              family_counts, family_cfg, io);
        }
        if (reproduce->parsed()) {
            return run_reproduce(repro_table, repro_stretch, repro_cfg);
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return fail("no subcommand selected");
}
