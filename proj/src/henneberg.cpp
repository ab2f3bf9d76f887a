#include "rigidity/henneberg.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

namespace fs = std::filesystem;

namespace rigidity {

namespace {

void require(bool ok, const char* pattern) {
    if (!ok) throw std::invalid_argument(pattern);
}

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// number of auxiliary edges {u,x}, {w,x} present for an edge split
int aux_edge_count(const Graph& g, int u, int w, int x) {
    return (g.has_edge(u, x) ? 1 : 0) + (g.has_edge(w, x) ? 1 : 0);
}

StepKind h2_kind(int aux) { return aux == 2 ? StepKind::H2a : aux == 1 ? StepKind::H2b : StepKind::H2c; }

void validate(const Graph& g, const StepDescriptor& s) {
    int n = g.vertex_count();
    std::vector<int> attach = s.attach;
    std::sort(attach.begin(), attach.end());
    require(attach == s.attach, "attach list must be sorted");
    require(std::adjacent_find(attach.begin(), attach.end()) == attach.end(),
            "attach vertices must be distinct");
    for (int v : attach) require(v >= 0 && v < n, "attach vertex outside the graph");
    for (auto [u, v] : s.removed) {
        require(u >= 0 && u < n && v >= 0 && v < n && u < v, "removed edge malformed");
        require(g.has_edge(u, v), "removed edge absent from the graph");
    }
    auto attached = [&](int v) { return std::binary_search(attach.begin(), attach.end(), v); };

    switch (s.kind) {
        case StepKind::H1:
            require(attach.size() == 2, "type 1 attaches to two vertices");
            require(s.removed.empty(), "type 1 removes no edge");
            break;
        case StepKind::H2a:
        case StepKind::H2b:
        case StepKind::H2c: {
            require(attach.size() == 3, "type 2 attaches to three vertices");
            require(s.removed.size() == 1, "type 2 removes one edge");
            auto [u, w] = s.removed.front();
            require(attached(u) && attached(w), "type 2 must attach to the removed endpoints");
            int x = -1;
            for (int v : attach)
                if (v != u && v != w) x = v;
            require(h2_kind(aux_edge_count(g, u, w, x)) == s.kind,
                    "auxiliary edges do not match the subtype");
            break;
        }
        case StepKind::VertexSplit: {
            int c = s.split_vertex, d = s.split_partner;
            require(c >= 0 && c < n && d >= 0 && d < n, "split vertices outside the graph");
            require(g.has_edge(c, d), "split partner must neighbour the split vertex");
            std::vector<int> moved = s.moved;
            std::sort(moved.begin(), moved.end());
            require(moved == s.moved, "moved list must be sorted");
            require(std::adjacent_find(moved.begin(), moved.end()) == moved.end(),
                    "moved vertices must be distinct");
            std::vector<std::pair<int, int>> expect_removed;
            for (int b : moved) {
                require(b != d && b != c, "moved vertices exclude the split pair");
                require(g.has_edge(c, b), "moved vertices must neighbour the split vertex");
                expect_removed.push_back(norm_edge(c, b));
            }
            std::sort(expect_removed.begin(), expect_removed.end());
            std::vector<std::pair<int, int>> removed = s.removed;
            std::sort(removed.begin(), removed.end());
            require(removed == expect_removed, "removed edges must be the moved connections");
            std::vector<int> expect_attach = moved;
            expect_attach.push_back(c);
            expect_attach.push_back(d);
            std::sort(expect_attach.begin(), expect_attach.end());
            require(attach == expect_attach, "attach list must be the split pair plus moved");
            break;
        }
        case StepKind::H3d1:
            require(attach.size() == 3, "3D type 1 attaches to three vertices");
            require(s.removed.empty(), "3D type 1 removes no edge");
            break;
        case StepKind::H3d2: {
            require(attach.size() == 4, "3D type 2 attaches to four vertices");
            require(s.removed.size() == 1, "3D type 2 removes one edge");
            auto [u, w] = s.removed.front();
            require(attached(u) && attached(w), "3D type 2 must attach to the removed endpoints");
            break;
        }
        case StepKind::H3d3x: {
            require(attach.size() == 5, "3D type 3 attaches to five vertices");
            require(s.removed.size() == 2, "3D type 3 removes two edges");
            auto [a, b] = s.removed[0];
            auto [c, d] = s.removed[1];
            require(s.removed[0] != s.removed[1], "removed edges must differ");
            std::set<int> ends{a, b, c, d};
            require(ends.size() == 4, "type 3x removes vertex-disjoint edges");
            for (int v : ends) require(attached(v), "type 3x must attach to all removed endpoints");
            break;
        }
        case StepKind::H3d3v: {
            require(attach.size() == 5, "3D type 3 attaches to five vertices");
            require(s.removed.size() == 2, "3D type 3 removes two edges");
            auto [a, b] = s.removed[0];
            auto [c, d] = s.removed[1];
            require(s.removed[0] != s.removed[1], "removed edges must differ");
            std::set<int> ends{a, b, c, d};
            require(ends.size() == 3, "type 3v removes edges sharing one vertex");
            for (int v : ends) require(attached(v), "type 3v must attach to all removed endpoints");
            break;
        }
    }
}

// ---- level generation helpers ----

// Dedup set for canonical codes with optional spilling of sorted runs.
class CodeSet {
  public:
    CodeSet(std::size_t threshold, fs::path spill_dir)
        : threshold_(threshold), spill_dir_(std::move(spill_dir)) {}

    void add(const BigInt& code) {
        mem_.insert(code);
        if (mem_.size() > threshold_) flush();
    }

    void absorb(CodeSet&& other) {
        for (auto& p : other.runs_) runs_.push_back(std::move(p));
        other.runs_.clear();
        if (mem_.empty()) {
            mem_ = std::move(other.mem_);
        } else {
            mem_.merge(other.mem_);
        }
        while (mem_.size() > threshold_) flush();
    }

    std::size_t run_count() const { return runs_.size(); }

    // merge memory and spilled runs into a sorted unique vector
    std::vector<BigInt> finalize() {
        std::vector<BigInt> out;
        if (runs_.empty()) {
            out.assign(mem_.begin(), mem_.end());
            mem_.clear();
            return out;
        }
        struct Source {
            std::ifstream file;
            BigInt head;
            bool alive = false;
        };
        std::vector<Source> sources(runs_.size());
        auto advance = [](Source& s) {
            std::string line;
            s.alive = static_cast<bool>(std::getline(s.file, line));
            if (s.alive) s.head = parse_code(line);
        };
        for (size_t i = 0; i < runs_.size(); ++i) {
            sources[i].file.open(runs_[i]);
            advance(sources[i]);
        }
        auto mem_it = mem_.begin();
        while (true) {
            const BigInt* best = nullptr;
            int best_src = -1;
            if (mem_it != mem_.end()) best = &*mem_it;
            for (size_t i = 0; i < sources.size(); ++i)
                if (sources[i].alive && (!best || sources[i].head < *best)) {
                    best = &sources[i].head;
                    best_src = static_cast<int>(i);
                }
            if (!best) break;
            if (out.empty() || out.back() != *best) out.push_back(*best);
            if (best_src < 0)
                ++mem_it;
            else
                advance(sources[best_src]);
        }
        for (auto& s : sources) s.file.close();
        for (const fs::path& p : runs_) fs::remove(p);
        runs_.clear();
        mem_.clear();
        return out;
    }

  private:
    void flush() {
        fs::create_directories(spill_dir_);
        fs::path p = spill_dir_ / ("run-" + std::to_string(counter_id()) + ".codes");
        std::ofstream out(p);
        for (const BigInt& c : mem_) out << c << '\n';
        mem_.clear();
        runs_.push_back(p);
    }

    static std::size_t counter_id() {
        static std::atomic<std::size_t> next{0};
        return next.fetch_add(1);
    }

    std::size_t threshold_;
    fs::path spill_dir_;
    std::set<BigInt> mem_;
    std::vector<fs::path> runs_;
};

fs::path level_file(const fs::path& dir, int level) {
    return dir / ("level_" + std::to_string(level) + ".graphs");
}

void write_level(const fs::path& dir, int level, const std::vector<BigInt>& codes) {
    fs::path final_path = level_file(dir, level);
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        for (const BigInt& c : codes) write_graph_list_line(out, level, c);
    }
    fs::rename(tmp, final_path);  // completeness marker: only whole levels are visible
}

std::vector<BigInt> read_level(const fs::path& dir, int level) {
    std::ifstream in(level_file(dir, level));
    std::vector<BigInt> codes;
    for (const GraphListEntry& e : read_graph_list(in)) {
        if (e.n != level) throw std::runtime_error("state file has the wrong vertex count");
        codes.push_back(e.code);
    }
    if (!std::is_sorted(codes.begin(), codes.end()))
        throw std::runtime_error("state file is not sorted");
    return codes;
}

}  // namespace

int step_dimension(StepKind kind) {
    switch (kind) {
        case StepKind::H1:
        case StepKind::H2a:
        case StepKind::H2b:
        case StepKind::H2c:
        case StepKind::VertexSplit:
            return 2;
        default:
            return 3;
    }
}

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::H1: return "h1";
        case StepKind::H2a: return "h2a";
        case StepKind::H2b: return "h2b";
        case StepKind::H2c: return "h2c";
        case StepKind::VertexSplit: return "vsplit";
        case StepKind::H3d1: return "3d1";
        case StepKind::H3d2: return "3d2";
        case StepKind::H3d3x: return "3d3x";
        case StepKind::H3d3v: return "3d3v";
    }
    return "?";
}

StepKind parse_step_kind(const std::string& name) {
    for (StepKind k :
         {StepKind::H1, StepKind::H2a, StepKind::H2b, StepKind::H2c, StepKind::VertexSplit,
          StepKind::H3d1, StepKind::H3d2, StepKind::H3d3x, StepKind::H3d3v})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown step kind: " + name);
}

const std::vector<StepKind>& default_kinds(int dimension) {
    static const std::vector<StepKind> two{StepKind::H1, StepKind::H2a, StepKind::H2b,
                                           StepKind::H2c};
    static const std::vector<StepKind> three{StepKind::H3d1, StepKind::H3d2, StepKind::H3d3x,
                                             StepKind::H3d3v};
    if (dimension == 2) return two;
    if (dimension == 3) return three;
    throw std::invalid_argument("dimension must be 2 or 3");
}

Graph apply_step(const Graph& g, const StepDescriptor& s) {
    validate(g, s);
    Graph out = g;
    for (auto [u, v] : s.removed) out.remove_edge(u, v);
    int z = out.add_vertex();
    for (int a : s.attach) out.add_edge(z, a);
    return out;
}

std::vector<StepDescriptor> enumerate_steps(const Graph& g, int dimension,
                                            const std::vector<StepKind>& kinds) {
    for (StepKind k : kinds)
        if (step_dimension(k) != dimension)
            throw std::invalid_argument("step kind does not match the dimension");
    auto wanted = [&](StepKind k) {
        return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    };
    int n = g.vertex_count();
    std::vector<StepDescriptor> out;
    auto edges = g.edges();

    if (wanted(StepKind::H1))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                out.push_back({StepKind::H1, {u, v}, {}, -1, -1, {}});

    if (wanted(StepKind::H2a) || wanted(StepKind::H2b) || wanted(StepKind::H2c))
        for (auto [u, w] : edges)
            for (int x = 0; x < n; ++x) {
                if (x == u || x == w) continue;
                StepKind k = h2_kind(aux_edge_count(g, u, w, x));
                if (!wanted(k)) continue;
                std::vector<int> attach{u, w, x};
                std::sort(attach.begin(), attach.end());
                out.push_back({k, attach, {{u, w}}, -1, -1, {}});
            }

    if (wanted(StepKind::VertexSplit))
        for (int c = 0; c < n; ++c) {
            std::vector<int> nbrs;
            for (int v = 0; v < n; ++v)
                if (g.has_edge(c, v)) nbrs.push_back(v);
            for (int d : nbrs) {
                std::vector<int> rest;
                for (int v : nbrs)
                    if (v != d) rest.push_back(v);
                for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
                    StepDescriptor s;
                    s.kind = StepKind::VertexSplit;
                    s.split_vertex = c;
                    s.split_partner = d;
                    for (size_t i = 0; i < rest.size(); ++i)
                        if (mask >> i & 1u) s.moved.push_back(rest[i]);
                    for (int b : s.moved) s.removed.push_back(norm_edge(c, b));
                    std::sort(s.removed.begin(), s.removed.end());
                    s.attach = s.moved;
                    s.attach.push_back(c);
                    s.attach.push_back(d);
                    std::sort(s.attach.begin(), s.attach.end());
                    out.push_back(std::move(s));
                }
            }
        }

    if (wanted(StepKind::H3d1))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int w = v + 1; w < n; ++w)
                    out.push_back({StepKind::H3d1, {u, v, w}, {}, -1, -1, {}});

    if (wanted(StepKind::H3d2))
        for (auto [u, w] : edges)
            for (int x = 0; x < n; ++x) {
                if (x == u || x == w) continue;
                for (int y = x + 1; y < n; ++y) {
                    if (y == u || y == w) continue;
                    std::vector<int> attach{u, w, x, y};
                    std::sort(attach.begin(), attach.end());
                    out.push_back({StepKind::H3d2, attach, {{u, w}}, -1, -1, {}});
                }
            }

    if (wanted(StepKind::H3d3x))
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                if (a == c || a == d || b == c || b == d) continue;
                for (int v = 0; v < n; ++v) {
                    if (v == a || v == b || v == c || v == d) continue;
                    std::vector<int> attach{a, b, c, d, v};
                    std::sort(attach.begin(), attach.end());
                    out.push_back({StepKind::H3d3x, attach, {edges[i], edges[j]}, -1, -1, {}});
                }
            }

    if (wanted(StepKind::H3d3v))
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                std::set<int> ends{a, b, c, d};
                if (ends.size() != 3) continue;
                for (int x = 0; x < n; ++x) {
                    if (ends.count(x)) continue;
                    for (int y = x + 1; y < n; ++y) {
                        if (ends.count(y)) continue;
                        std::vector<int> attach(ends.begin(), ends.end());
                        attach.push_back(x);
                        attach.push_back(y);
                        std::sort(attach.begin(), attach.end());
                        out.push_back({StepKind::H3d3v, attach, {edges[i], edges[j]}, -1, -1, {}});
                    }
                }
            }

    return out;
}

std::vector<GraphListEntry> generate_up_to(int n, int dimension, const GenerateOptions& opts) {
    const std::vector<StepKind>& kinds = opts.kinds.empty() ? default_kinds(dimension) : opts.kinds;
    for (StepKind k : kinds)
        if (step_dimension(k) != dimension)
            throw std::invalid_argument("step kind does not match the dimension");
    int base_n = dimension == 2 ? 2 : 3;
    if (n < base_n) throw std::invalid_argument("target vertex count below the base graph");
    if (n > canonical_max_vertices())
        throw std::invalid_argument("target vertex count beyond the canonical-labeling limit");
    int jobs = std::max(1, opts.jobs);

    fs::path spill_dir = opts.state_dir.empty()
                             ? fs::temp_directory_path() / "rigidity-gen-spill"
                             : fs::path(opts.state_dir) / "spill";

    GenerateStats stats;
    std::vector<GraphListEntry> out;
    std::vector<BigInt> frontier;
    int level = base_n;

    Graph base(base_n);
    for (int u = 0; u < base_n; ++u)
        for (int v = u + 1; v < base_n; ++v) base.add_edge(u, v);

    bool resumed = false;
    if (!opts.state_dir.empty()) {
        fs::create_directories(opts.state_dir);
        for (int k = base_n; k <= n; ++k) {
            if (!fs::exists(level_file(opts.state_dir, k))) break;
            frontier = read_level(opts.state_dir, k);
            level = k;
            resumed = true;
            ++stats.levels_resumed;
        }
        if (resumed) {
            for (int k = base_n; k <= level; ++k)
                for (const BigInt& c : read_level(opts.state_dir, k)) out.push_back({k, c});
        }
    }
    if (!resumed) {
        frontier = {canonical_code(base)};
        out.push_back({base_n, frontier.front()});
        if (!opts.state_dir.empty()) write_level(opts.state_dir, base_n, frontier);
    }

    while (level < n) {
        std::vector<CodeSet> locals;
        locals.reserve(jobs);
        for (int j = 0; j < jobs; ++j) locals.emplace_back(opts.spill_threshold, spill_dir);
        auto work = [&](int j) {
            for (size_t i = j; i < frontier.size(); i += jobs) {
                Graph g = decode(frontier[i], level);
                for (const StepDescriptor& s : enumerate_steps(g, dimension, kinds))
                    locals[j].add(canonical_code(apply_step(g, s)));
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> workers;
            for (int j = 0; j < jobs; ++j) workers.emplace_back(work, j);
            for (std::thread& t : workers) t.join();
        }
        CodeSet merged(opts.spill_threshold, spill_dir);
        for (CodeSet& l : locals) merged.absorb(std::move(l));
        stats.spill_files += merged.run_count();
        frontier = merged.finalize();
        ++level;
        for (const BigInt& c : frontier) out.push_back({level, c});
        if (!opts.state_dir.empty()) write_level(opts.state_dir, level, frontier);
    }
    if (opts.stats) *opts.stats = stats;
    return out;
}

}  // namespace rigidity
