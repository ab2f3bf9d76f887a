#include "rigidity/reproduce.hpp"

#include "rigidity/analysis.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/families.hpp"
#include "rigidity/henneberg.hpp"
#include "rigidity/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigidity {

namespace {

using Lines = std::vector<ReproLine>;

void emit(Lines& out, const ReproduceOptions& o, ReproLine line) {
    if (o.on_line) o.on_line(line);
    out.push_back(std::move(line));
}

// Cost class of a single realization count.
ReproTier count_tier(int dimension, int n) {
    if (dimension == 2) {
        if (n <= 8) return ReproTier::Desk;
        if (n <= 10) return ReproTier::Stretch;
        return ReproTier::Beyond;
    }
    if (n <= 8) return ReproTier::Desk;
    if (n == 9) return ReproTier::Stretch;
    return ReproTier::Beyond;
}

// Cost class of counting every n-vertex graph the generator produces.
ReproTier sweep_tier(int n) {
    if (n <= 7) return ReproTier::Desk;
    if (n == 8) return ReproTier::Stretch;
    return ReproTier::Beyond;
}

bool tier_runs(ReproTier tier, const ReproduceOptions& o) {
    return tier == ReproTier::Desk || (tier == ReproTier::Stretch && o.stretch);
}

ReproLine skipped_line(std::string table, std::string name, std::string expected,
                       ReproTier tier) {
    ReproLine l;
    l.table = std::move(table);
    l.name = std::move(name);
    l.expected = std::move(expected);
    l.tier = tier;
    l.note = tier == ReproTier::Beyond ? "skipped: beyond desk scale"
                                       : "skipped: enable stretch to run";
    return l;
}

ReproLine checked_line(std::string table, std::string name, std::string expected,
                       std::string computed, ReproTier tier, std::string note = "") {
    ReproLine l;
    l.table = std::move(table);
    l.name = std::move(name);
    l.expected = std::move(expected);
    l.computed = std::move(computed);
    l.tier = tier;
    l.checked = true;
    l.pass = l.computed == l.expected;
    l.note = std::move(note);
    return l;
}

ReproLine info_line(std::string table, std::string name, std::string expected,
                    std::string computed, std::string note) {
    ReproLine l;
    l.table = std::move(table);
    l.name = std::move(name);
    l.expected = std::move(expected);
    l.computed = std::move(computed);
    l.note = std::move(note);
    return l;
}

// Runs fn() and turns an exception into a failing line instead of aborting
// the whole table.
template <typename Fn>
void guarded(Lines& out, const ReproduceOptions& o, const std::string& table,
             const std::string& name, const std::string& expected, ReproTier tier,
             Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        ReproLine l = checked_line(table, name, expected, std::string("error: ") + e.what(),
                                   tier);
        l.pass = false;
        emit(out, o, l);
    }
}

std::string count_string(const Graph& g, int dimension, const CountConfig& cfg) {
    RealizationCount rc = count_realizations(g, dimension, cfg);
    if (rc.flexible) return "flexible";
    if (!rc.value) return "no agreement between runs";
    return std::to_string(*rc.value);
}

std::string count_name(const BigInt& code, int n, int dimension) {
    std::ostringstream s;
    s << (dimension == 2 ? "2D" : "3D") << " count of " << code << " (n=" << n << ")";
    return s.str();
}

void count_line(Lines& out, const ReproduceOptions& o, const std::string& table,
                const BigInt& code, int n, int dimension, const BigInt& expected) {
    std::string name = count_name(code, n, dimension);
    ReproTier tier = count_tier(dimension, n);
    if (!tier_runs(tier, o)) {
        emit(out, o, skipped_line(table, name, expected.str(), tier));
        return;
    }
    guarded(out, o, table, name, expected.str(), tier, [&] {
        Graph g = decode(code, n);
        emit(out, o, checked_line(table, name, expected.str(),
                                  count_string(g, dimension, o.count), tier));
    });
}

// Emits each (code, n) count at most once per table.
struct CountOnce {
    std::set<std::pair<int, BigInt>> seen;
    void operator()(Lines& out, const ReproduceOptions& o, const std::string& table,
                    const BigInt& code, int n, int dimension, const BigInt& expected) {
        if (!seen.insert({n, code}).second) return;
        count_line(out, o, table, code, n, dimension, expected);
    }
};

// ---- step tables ----------------------------------------------------------

StepKind token_kind(const std::string& token, int dimension) {
    if (dimension == 2) {
        if (token == "1") return StepKind::H1;
        if (token == "2a") return StepKind::H2a;
        if (token == "2b") return StepKind::H2b;
        if (token == "2c") return StepKind::H2c;
    } else {
        if (token == "1") return StepKind::H3d1;
        if (token == "2") return StepKind::H3d2;
        if (token == "3x") return StepKind::H3d3x;
        if (token == "3v") return StepKind::H3d3v;
    }
    throw std::invalid_argument("reproduce: unknown step token '" + token + "'");
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Listed two-decimal factors mix round-half-up with truncation, so a listed
// value F is accepted when the exact ratio lies in [F - 0.005, F + 0.01).
bool factor_matches(const std::string& listed, const BigInt& from, const BigInt& to) {
    auto dot = listed.find('.');
    std::string digits = dot == std::string::npos
                             ? listed + "00"
                             : listed.substr(0, dot) + listed.substr(dot + 1);
    if (dot != std::string::npos && listed.size() - dot - 1 != 2) return false;
    BigInt scaled = std::stol(digits, nullptr, 10);  // listed * 100
    BigInt diff = 200 * to - 2 * scaled * from;
    return diff >= -from && diff < 2 * from;
}

std::string ratio_string(const BigInt& from, const BigInt& to) {
    double r = to.convert_to<double>() / from.convert_to<double>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", r);
    return buf;
}

void step_rows(Lines& out, const ReproduceOptions& o, const std::string& table,
               const std::vector<RefStep>& rows) {
    CountOnce once;
    for (const RefStep& s : rows) {
        once(out, o, table, s.from_code, s.from_n, s.dimension, s.from_count);
        once(out, o, table, s.to_code, s.to_n, s.dimension, s.to_count);
    }
    for (const RefStep& s : rows) {
        std::ostringstream label;
        label << (s.dimension == 2 ? "2D" : "3D") << " step " << s.kinds << ": "
              << s.from_code << " -> " << s.to_code;

        // The listed factor against the exact count ratio (embedded data only).
        {
            std::string name = label.str() + " (factor)";
            ReproLine l = checked_line(table, name, s.factor,
                                       ratio_string(s.from_count, s.to_count),
                                       ReproTier::Desk);
            l.pass = factor_matches(s.factor, s.from_count, s.to_count);
            l.note = "listed factor accepted within one unit in the last place";
            emit(out, o, l);
        }

        // Structural witness: every listed step type produces the target.
        std::string name = label.str() + " (reachability)";
        guarded(out, o, table, name, "reachable", ReproTier::Desk, [&] {
            Graph from = decode(s.from_code, s.from_n);
            Graph to = decode(s.to_code, s.to_n);
            BigInt target = canonical_code(to);
            auto reaches = [&](const Graph& source, StepKind kind) {
                for (const StepDescriptor& d : enumerate_steps(source, s.dimension, {kind})) {
                    if (canonical_code(apply_step(source, d)) == target) return true;
                }
                return false;
            };
            std::string computed = "reachable";
            std::string note;
            for (const std::string& token : split_tokens(s.kinds)) {
                StepKind kind = token_kind(token, s.dimension);
                if (reaches(from, kind)) continue;
                // A listed type may pair with a different source graph; search
                // the other candidates of the same size for a witness.
                bool witnessed = false;
                if (s.from_n <= 8) {
                    const BigInt from_canon = canonical_code(from);
                    for (const GraphListEntry& e : generate_up_to(s.from_n, s.dimension)) {
                        if (e.n != s.from_n || e.code == from_canon) continue;
                        if (reaches(decode(e.code, e.n), kind)) {
                            if (!note.empty()) note += "; ";
                            note += "type " + token + " witnessed from candidate " +
                                    e.code.str() + ", not from the listed source";
                            witnessed = true;
                            break;
                        }
                    }
                }
                if (!witnessed) {
                    computed = "no step of type " + token + " produces the target";
                    break;
                }
            }
            emit(out, o,
                 checked_line(table, name, "reachable", computed, ReproTier::Desk, note));
        });
    }
}

void table_steps(Lines& out, const ReproduceOptions& o) {
    step_rows(out, o, "1", ref_steps_2d());
    step_rows(out, o, "1", ref_steps_3d());
}

// ---- family table ---------------------------------------------------------

void table_family_best(Lines& out, const ReproduceOptions& o) {
    const std::string table = "2";
    for (const RefFamilyBest& row : ref_family_best()) {
        {
            std::ostringstream name;
            name << row.t_code << " is in T(" << row.n << ")";
            guarded(out, o, table, name.str(), "true", ReproTier::Desk, [&] {
                FamilyReport rep = in_T(decode(row.t_code, row.n));
                emit(out, o, checked_line(table, name.str(), "true",
                                          rep.verdict ? "true" : "false (" + rep.reason + ")",
                                          ReproTier::Desk));
            });
        }
        {
            std::ostringstream name;
            name << row.s_code << " is in S(" << row.n << ")";
            guarded(out, o, table, name.str(), "true", ReproTier::Desk, [&] {
                FamilyReport rep = in_S(decode(row.s_code, row.n));
                emit(out, o, checked_line(table, name.str(), "true",
                                          rep.verdict ? "true" : "false (" + rep.reason + ")",
                                          ReproTier::Desk));
            });
        }
        count_line(out, o, table, row.t_code, row.n, 2, row.t_count);
        if (row.s_code != row.t_code) {
            count_line(out, o, table, row.s_code, row.n, 2, row.s_count);
        }
    }
}

// ---- extremal tables ------------------------------------------------------

Graph vertex_addition_chain(int n) {
    Graph g(n);
    g.add_edge(0, 1);
    for (int v = 2; v < n; ++v) {
        g.add_edge(v - 2, v);
        g.add_edge(v - 1, v);
    }
    return g;
}

struct SweepOutcome {
    BigInt min = 0;
    BigInt max = 0;
    std::vector<BigInt> max_codes;  // canonical codes attaining the maximum
    int counted = 0;
    int flexible = 0;
    int unresolved = 0;
};

SweepOutcome sweep_counts(int n, int dimension, const CountConfig& cfg) {
    SweepOutcome res;
    for (const GraphListEntry& e : generate_up_to(n, dimension)) {
        if (e.n != n) continue;
        Graph g = decode(e.code, e.n);
        RealizationCount rc = count_realizations(g, dimension, cfg);
        if (rc.flexible) {
            ++res.flexible;
            continue;
        }
        if (!rc.value) {
            ++res.unresolved;
            continue;
        }
        BigInt v(*rc.value);
        if (res.counted == 0 || v < res.min) res.min = v;
        if (res.counted == 0 || v > res.max) {
            res.max = v;
            res.max_codes.clear();
        }
        if (v == res.max) res.max_codes.push_back(e.code);
        ++res.counted;
    }
    return res;
}

void sweep_lines(Lines& out, const ReproduceOptions& o, const std::string& table,
                 int n, int dimension, const BigInt& expect_min, const BigInt& expect_max,
                 const BigInt& reference_max_code) {
    std::string scope = dimension == 2 ? "graphs" : "rigid candidates";
    std::string min_name = "minimum over all " + std::to_string(n) + "-vertex " + scope;
    std::string max_name = "maximum over all " + std::to_string(n) + "-vertex " + scope;
    std::string arg_name = "maximizer at n=" + std::to_string(n) + " matches the reference graph";
    ReproTier tier = sweep_tier(n);
    if (!tier_runs(tier, o)) {
        emit(out, o, skipped_line(table, min_name, expect_min.str(), tier));
        emit(out, o, skipped_line(table, max_name, expect_max.str(), tier));
        emit(out, o, skipped_line(table, arg_name, "unique match", tier));
        return;
    }
    guarded(out, o, table, min_name, expect_min.str(), tier, [&] {
        SweepOutcome res = sweep_counts(n, dimension, o.count);
        std::string note;
        if (res.flexible > 0) {
            note = std::to_string(res.flexible) + " flexible candidates excluded";
        }
        if (res.unresolved > 0) {
            ReproLine l = checked_line(table, min_name, expect_min.str(),
                                       "unresolved counts in sweep", tier, note);
            l.pass = false;
            emit(out, o, l);
            return;
        }
        emit(out, o, checked_line(table, min_name, expect_min.str(), res.min.str(), tier, note));
        emit(out, o, checked_line(table, max_name, expect_max.str(), res.max.str(), tier));
        std::string arg = res.max_codes.size() != 1
                              ? std::to_string(res.max_codes.size()) + " maximizers"
                              : (res.max_codes[0] ==
                                         canonical_code(decode(reference_max_code, n))
                                     ? "unique match"
                                     : "different graph");
        emit(out, o, checked_line(table, arg_name, "unique match", arg, tier));
    });
}

void table_extremal_2d(Lines& out, const ReproduceOptions& o) {
    const std::string table = "3";
    const Graph prism = decode(7916, 6);
    for (const RefExtremal& row : ref_extremal_2d()) {
        // The minimum is attained by vertex-addition chains; preprocessing
        // collapses them, so this runs instantly at every listed n.
        std::string chain_name =
            "2D count of the vertex-addition chain (n=" + std::to_string(row.n) + ")";
        guarded(out, o, table, chain_name, row.min.str(), ReproTier::Desk, [&] {
            emit(out, o, checked_line(table, chain_name, row.min.str(),
                                      count_string(vertex_addition_chain(row.n), 2, o.count),
                                      ReproTier::Desk));
        });

        const RefGraph* maxrow = nullptr;
        for (const RefGraph& g : ref_max_2d()) {
            if (g.n == row.n) maxrow = &g;
        }
        sweep_lines(out, o, table, row.n, 2, row.min, row.max,
                    maxrow ? maxrow->code : BigInt(0));
        if (maxrow) count_line(out, o, table, maxrow->code, maxrow->n, 2, maxrow->count);

        if (row.prior_low != 0) {
            std::string name = "best chain bound from the three-prism at n=" +
                               std::to_string(row.n);
            guarded(out, o, table, name, row.prior_low.str(), ReproTier::Desk, [&] {
                BoundSpec spec;
                spec.dimension = 2;
                spec.base_graph = prism;
                spec.base_count = 24;
                spec.n = row.n;
                BigInt best = std::max(caterpillar_bound(spec).value, fan_bound(spec).value);
                emit(out, o, checked_line(table, name, row.prior_low.str(), best.str(),
                                          ReproTier::Desk));
            });
        }
    }
}

void table_extremal_3d(Lines& out, const ReproduceOptions& o) {
    const std::string table = "5";
    CountOnce once;
    for (const RefExtremal& row : ref_extremal_3d()) {
        if (row.min != 0) {
            const RefGraph* maxrow = nullptr;
            for (const RefGraph& g : ref_max_3d()) {
                if (g.n == row.n) maxrow = &g;
            }
            sweep_lines(out, o, table, row.n, 3, row.min, row.max,
                        maxrow ? maxrow->code : BigInt(0));
        }
        std::string name = "prior upper bound at n=" + std::to_string(row.n);
        guarded(out, o, table, name, row.prior_high.str(), ReproTier::Desk, [&] {
            emit(out, o, checked_line(table, name, row.prior_high.str(),
                                      prior_upper_3d(row.n).str(), ReproTier::Desk));
        });
    }
    for (const RefGraph& g : ref_max_3d()) {
        once(out, o, table, g.code, g.n, 3, g.count);
    }
}

// ---- growth-rate tables ---------------------------------------------------

std::string cell_rate(const RefRate& cell) {
    long double ratio = cell.base_count.convert_to<long double>() /
                        cell.glue_count.convert_to<long double>();
    int span = cell.n - cell.glue_vertices;
    double rate = static_cast<double>(std::exp(std::log(ratio) / span));
    std::string s = format_rate(rate);
    // Whole-number rates are listed without a decimal part.
    if (s.size() > 6 && s.substr(s.size() - 6) == ".00000") {
        s = s.substr(0, s.size() - 6);
    }
    return s;
}

void rate_tables(Lines& out, const ReproduceOptions& o, const std::string& table,
                 const std::vector<RefRate>& cells, int dimension) {
    CountOnce once;
    for (const RefRate& cell : cells) {
        std::string name = "growth rate, " + cell.column + " column, n=" +
                           std::to_string(cell.n);
        if (cell.base_code == 0) {
            emit(out, o, info_line(table, name, cell.expected, "",
                                   "no base encoding listed; informational"));
            continue;
        }
        if (!cell.consistent) {
            guarded(out, o, table, name, cell.expected, ReproTier::Desk, [&] {
                emit(out, o, info_line(table, name, cell.expected, cell_rate(cell),
                                       "listed value does not match the listed base "
                                       "count; informational"));
            });
            continue;
        }
        guarded(out, o, table, name, cell.expected, ReproTier::Desk, [&] {
            emit(out, o,
                 checked_line(table, name, cell.expected, cell_rate(cell), ReproTier::Desk));
        });
    }
    for (const RefRate& cell : cells) {
        if (cell.base_code == 0 || cell.base_count == 0) continue;
        once(out, o, table, cell.base_code, cell.n, dimension, cell.base_count);
    }
}

// ---- appendix -------------------------------------------------------------

struct AppendixList {
    const char* name;
    const std::vector<RefGraph>* rows;
    int dimension;
    BigInt contains_code;  // 0: no containment check
    int contains_n;
    char family;  // 'T', 'S', or 0
};

void table_appendix(Lines& out, const ReproduceOptions& o) {
    const std::string table = "appendix";
    const std::vector<AppendixList> lists = {
        {"max-2d", &ref_max_2d(), 2, BigInt(0), 0, 0},
        {"t-family", &ref_t_family(), 2, BigInt(0), 0, 'T'},
        {"s-family", &ref_s_high(), 2, BigInt(0), 0, 'S'},
        {"fan-found", &ref_fan_high(), 2, BigInt(7), 3, 0},
        {"31-fan", &ref_fan31(), 2, BigInt(31), 4, 0},
        {"254-fan", &ref_fan254(), 2, BigInt(254), 5, 0},
        {"223-fan", &ref_fan223(), 2, BigInt(223), 5, 0},
        {"239-fan", &ref_fan239(), 2, BigInt(239), 5, 0},
        {"7916-fan", &ref_fan7916(), 2, BigInt(7916), 6, 0},
        {"max-3d", &ref_max_3d(), 3, BigInt(0), 0, 0},
        {"fan-3d", &ref_fan_3d(), 3, BigInt(63), 4, 0},
        {"genfan-3d", &ref_genfan_3d(), 3, BigInt(511), 5, 0},
    };
    CountOnce once;
    for (const AppendixList& list : lists) {
        for (const RefGraph& row : *list.rows) {
            std::ostringstream prefix;
            prefix << list.name << " " << row.code << " (n=" << row.n << ")";
            int want_edges = list.dimension == 2 ? 2 * row.n - 3 : 3 * row.n - 6;
            std::string edge_name = prefix.str() + ": edge count";
            guarded(out, o, table, edge_name, std::to_string(want_edges), ReproTier::Desk, [&] {
                Graph g = decode(row.code, row.n);
                emit(out, o, checked_line(table, edge_name, std::to_string(want_edges),
                                          std::to_string(g.edge_count()), ReproTier::Desk));

                std::string structural = list.dimension == 2 ? "Laman" : "(3,6)-tight";
                std::string struct_name = prefix.str() + ": " + structural;
                bool ok = list.dimension == 2 ? is_laman(g) : satisfies_3d_count(g);
                emit(out, o, checked_line(table, struct_name, "true", ok ? "true" : "false",
                                          ReproTier::Desk));

                if (list.contains_code != 0) {
                    std::string cname = prefix.str() + ": contains " +
                                        list.contains_code.str();
                    bool has = contains_subgraph(
                        g, decode(list.contains_code, list.contains_n));
                    emit(out, o, checked_line(table, cname, "true", has ? "true" : "false",
                                              ReproTier::Desk));
                }
                if (list.family == 'T') {
                    std::string fname = prefix.str() + ": in T";
                    FamilyReport rep = in_T(g);
                    emit(out, o, checked_line(table, fname, "true",
                                              rep.verdict ? "true"
                                                          : "false (" + rep.reason + ")",
                                              ReproTier::Desk));
                } else if (list.family == 'S') {
                    std::string fname = prefix.str() + ": in S";
                    FamilyReport rep = in_S(g);
                    emit(out, o, checked_line(table, fname, "true",
                                              rep.verdict ? "true"
                                                          : "false (" + rep.reason + ")",
                                              ReproTier::Desk));
                }
            });
            once(out, o, table, row.code, row.n, list.dimension, row.count);
        }
    }
}

}  // namespace

const std::vector<std::string>& reproduce_table_names() {
    static const std::vector<std::string> names = {"1", "2", "3", "4", "5", "6", "appendix"};
    return names;
}

std::vector<ReproLine> reproduce_table(const std::string& table,
                                       const ReproduceOptions& options) {
    Lines out;
    if (table == "1") {
        table_steps(out, options);
    } else if (table == "2") {
        table_family_best(out, options);
    } else if (table == "3") {
        table_extremal_2d(out, options);
    } else if (table == "4") {
        rate_tables(out, options, "4", ref_rates_2d(), 2);
    } else if (table == "5") {
        table_extremal_3d(out, options);
    } else if (table == "6") {
        rate_tables(out, options, "6", ref_rates_3d(), 3);
    } else if (table == "appendix") {
        table_appendix(out, options);
    } else {
        throw std::invalid_argument("reproduce: unknown table '" + table +
                                    "' (expected 1..6 or appendix)");
    }
    return out;
}

bool reproduce_passed(const std::vector<ReproLine>& lines) {
    bool any = false;
    for (const ReproLine& l : lines) {
        if (!l.checked) continue;
        any = true;
        if (!l.pass) return false;
    }
    return any;
}

std::string to_string(ReproTier tier) {
    switch (tier) {
        case ReproTier::Desk: return "desk";
        case ReproTier::Stretch: return "stretch";
        case ReproTier::Beyond: return "beyond";
    }
    throw std::invalid_argument("reproduce: bad tier");
}

}  // namespace rigidity
