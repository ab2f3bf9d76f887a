#include "doctest.h"

#include "rigidity/analysis.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/reference_tables.hpp"
#include "rigidity/reproduce.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace rigidity;

namespace {

const ReproLine* find_line(const std::vector<ReproLine>& lines, const std::string& name) {
    for (const ReproLine& l : lines) {
        if (l.name == name) return &l;
    }
    return nullptr;
}

int count_checked(const std::vector<ReproLine>& lines) {
    int n = 0;
    for (const ReproLine& l : lines) n += l.checked ? 1 : 0;
    return n;
}

std::vector<const ReproLine*> failing(const std::vector<ReproLine>& lines) {
    std::vector<const ReproLine*> out;
    for (const ReproLine& l : lines) {
        if (l.checked && !l.pass) out.push_back(&l);
    }
    return out;
}

void require_all_checked_pass(const std::vector<ReproLine>& lines) {
    for (const ReproLine* l : failing(lines)) {
        CAPTURE(l->name);
        CAPTURE(l->expected);
        CAPTURE(l->computed);
        CHECK(l->pass);
    }
    CHECK(reproduce_passed(lines));
}

}  // namespace

TEST_CASE("reference lists decode to graphs of the right shape") {
    struct ListCheck {
        const std::vector<RefGraph>* rows;
        int dimension;
        std::size_t size;
    };
    const std::vector<ListCheck> lists = {
        {&ref_max_2d(), 2, 7},   {&ref_t_family(), 2, 7}, {&ref_s_high(), 2, 6},
        {&ref_fan_high(), 2, 3}, {&ref_fan31(), 2, 11},   {&ref_fan254(), 2, 12},
        {&ref_fan223(), 2, 7},   {&ref_fan239(), 2, 7},   {&ref_fan7916(), 2, 11},
        {&ref_max_3d(), 3, 7},   {&ref_fan_3d(), 3, 6},   {&ref_genfan_3d(), 3, 5},
    };
    for (const ListCheck& list : lists) {
        CHECK(list.rows->size() == list.size);
        for (const RefGraph& row : *list.rows) {
            CAPTURE(row.code);
            Graph g = decode(row.code, row.n);
            if (list.dimension == 2) {
                CHECK(g.edge_count() == 2 * row.n - 3);
                CHECK(is_laman(g));
            } else {
                CHECK(g.edge_count() == 3 * row.n - 6);
                CHECK(satisfies_3d_count(g));
            }
            CHECK(row.count > 0);
        }
    }
}

TEST_CASE("3D prior upper bound closed form") {
    const std::vector<std::pair<int, long long>> expected = {
        {4, 2},     {5, 8},     {6, 40},     {7, 224},
        {8, 1344},  {9, 8448},  {10, 54912}, {11, 366080},
        {12, 2489344},
    };
    for (auto [n, value] : expected) {
        CAPTURE(n);
        CHECK(prior_upper_3d(n) == value);
    }
    for (const RefExtremal& row : ref_extremal_3d()) {
        CHECK(prior_upper_3d(row.n) == row.prior_high);
    }
    CHECK_THROWS_AS(prior_upper_3d(3), std::invalid_argument);
}

TEST_CASE("embedded rate cells carry the right spot values") {
    auto cell = [](const std::vector<RefRate>& cells, const std::string& column,
                   int n) -> const RefRate& {
        for (const RefRate& c : cells) {
            if (c.column == column && c.n == n) return c;
        }
        REQUIRE(false);
        return cells.front();
    };
    CHECK(cell(ref_rates_2d(), "caterpillar", 6).expected == "2.21336");
    CHECK(cell(ref_rates_2d(), "caterpillar", 12).expected == "2.39386");
    CHECK(cell(ref_rates_2d(), "fan-T", 18).expected == "2.50798");
    CHECK(cell(ref_rates_2d(), "31-fan", 7).expected == "2.28943");
    CHECK(cell(ref_rates_2d(), "31-fan", 6).base_code == 0);
    CHECK_FALSE(cell(ref_rates_2d(), "fan", 17).consistent);
    CHECK(cell(ref_rates_3d(), "caterpillar", 10).expected == "3.06825");
    CHECK(cell(ref_rates_3d(), "fan", 10).expected == "3.06681");

    int cells_2d = 0;
    for (const RefRate& c : ref_rates_2d()) {
        CHECK((c.base_code == 0 || c.base_count > 0));
        ++cells_2d;
    }
    CHECK(cells_2d == 13 + 13 + 3 + 12 + 12 + 11);
    CHECK(ref_rates_3d().size() == 5 + 5 + 4);
}

TEST_CASE("reproduce: rate tables pass at desk tier") {
    for (const std::string table : {"4", "6"}) {
        CAPTURE(table);
        ReproduceOptions opt;
        std::vector<ReproLine> lines = reproduce_table(table, opt);
        require_all_checked_pass(lines);

        int rate_lines = 0;
        for (const ReproLine& l : lines) {
            if (l.name.rfind("growth rate", 0) == 0 && l.checked) ++rate_lines;
        }
        CHECK(rate_lines >= (table == std::string("4") ? 60 : 14));
    }
}

TEST_CASE("reproduce: inconsistent and unlisted rate cells are informational") {
    ReproduceOptions opt;
    std::vector<ReproLine> lines = reproduce_table("4", opt);

    const ReproLine* fan17 = find_line(lines, "growth rate, fan column, n=17");
    REQUIRE(fan17 != nullptr);
    CHECK_FALSE(fan17->checked);
    CHECK(fan17->expected == "2.49779");
    CHECK(fan17->computed == "2.67822");
    CHECK(fan17->note.find("does not match") != std::string::npos);

    const ReproLine* fan31_6 = find_line(lines, "growth rate, 31-fan column, n=6");
    REQUIRE(fan31_6 != nullptr);
    CHECK_FALSE(fan31_6->checked);
    CHECK(fan31_6->expected == "2");
    CHECK(fan31_6->note.find("no base encoding") != std::string::npos);
}

TEST_CASE("reproduce: step tables at desk tier") {
    ReproduceOptions opt;
    std::vector<ReproLine> lines = reproduce_table("1", opt);
    require_all_checked_pass(lines);

    // Every row gets a factor line and a reachability line, always at desk tier.
    int factor_lines = 0;
    int reach_lines = 0;
    for (const ReproLine& l : lines) {
        if (l.name.find("(factor)") != std::string::npos) {
            ++factor_lines;
            CHECK(l.checked);
        }
        if (l.name.find("(reachability)") != std::string::npos) {
            ++reach_lines;
            CHECK(l.checked);
            CHECK(l.computed == "reachable");
        }
    }
    CHECK(factor_lines == 18);
    CHECK(reach_lines == 18);

    // Counts above desk scale are reported but skipped.
    const ReproLine* big = find_line(lines, "2D count of 11177989553 (n=9)");
    REQUIRE(big != nullptr);
    CHECK_FALSE(big->checked);
    CHECK(big->tier == ReproTier::Stretch);
    CHECK(big->expected == "344");
    const ReproLine* beyond = find_line(lines, "3D count of 9634462543324 (n=10)");
    REQUIRE(beyond != nullptr);
    CHECK(beyond->tier == ReproTier::Beyond);
    CHECK(beyond->note.find("beyond") != std::string::npos);

    // Desk-tier counts really ran.
    const ReproLine* prism_step = find_line(lines, "2D count of 481867 (n=7)");
    REQUIRE(prism_step != nullptr);
    CHECK(prism_step->checked);
    CHECK(prism_step->computed == "44");
}

TEST_CASE("reproduce: family table memberships at desk tier") {
    std::vector<std::string> streamed;
    ReproduceOptions opt;
    opt.on_line = [&](const ReproLine& l) { streamed.push_back(l.name); };
    std::vector<ReproLine> lines = reproduce_table("2", opt);
    require_all_checked_pass(lines);

    CHECK(streamed.size() == lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) CHECK(streamed[i] == lines[i].name);

    // 7 T-membership + 7 S-membership lines are checked; the 13 realization
    // counts (12 at n >= 13 plus the shared n=12 maximizer) are beyond desk.
    CHECK(count_checked(lines) == 14);
    for (const ReproLine& l : lines) {
        if (!l.checked) {
            CHECK(l.tier == ReproTier::Beyond);
            CHECK(l.computed.empty());
        }
    }
    const ReproLine* t12 = find_line(lines, "757486969329934592 is in T(12)");
    REQUIRE(t12 != nullptr);
    CHECK(t12->pass);
}

TEST_CASE("reproduce: 2D extremal table at desk tier") {
    ReproduceOptions opt;
    std::vector<ReproLine> lines = reproduce_table("3", opt);
    require_all_checked_pass(lines);

    // Chains collapse under preprocessing, so every listed n is desk tier.
    for (int n = 6; n <= 12; ++n) {
        const ReproLine* chain = find_line(
            lines, "2D count of the vertex-addition chain (n=" + std::to_string(n) + ")");
        REQUIRE(chain != nullptr);
        CHECK(chain->checked);
        CHECK(chain->pass);
    }
    const ReproLine* sweep7 = find_line(lines, "maximum over all 7-vertex graphs");
    REQUIRE(sweep7 != nullptr);
    CHECK(sweep7->checked);
    CHECK(sweep7->computed == "56");
    const ReproLine* arg7 = find_line(lines, "maximizer at n=7 matches the reference graph");
    REQUIRE(arg7 != nullptr);
    CHECK(arg7->computed == "unique match");
    const ReproLine* sweep8 = find_line(lines, "maximum over all 8-vertex graphs");
    REQUIRE(sweep8 != nullptr);
    CHECK_FALSE(sweep8->checked);
    CHECK(sweep8->tier == ReproTier::Stretch);
    CHECK(sweep8->note.find("stretch") != std::string::npos);

    for (int n = 6; n <= 10; ++n) {
        const ReproLine* low = find_line(
            lines, "best chain bound from the three-prism at n=" + std::to_string(n));
        REQUIRE(low != nullptr);
        CHECK(low->checked);
        CHECK(low->pass);
    }
    CHECK(find_line(lines, "best chain bound from the three-prism at n=11") == nullptr);
}

TEST_CASE("reproduce: 3D extremal table at desk tier") {
    ReproduceOptions opt;
    std::vector<ReproLine> lines = reproduce_table("5", opt);
    require_all_checked_pass(lines);

    const ReproLine* min6 = find_line(lines, "minimum over all 6-vertex rigid candidates");
    REQUIRE(min6 != nullptr);
    CHECK(min6->checked);
    CHECK(min6->computed == "8");
    CHECK(min6->note.find("flexible") != std::string::npos);

    const ReproLine* max7 = find_line(lines, "maximum over all 7-vertex rigid candidates");
    REQUIRE(max7 != nullptr);
    CHECK(max7->computed == "48");

    for (int n = 6; n <= 12; ++n) {
        const ReproLine* up = find_line(lines, "prior upper bound at n=" + std::to_string(n));
        REQUIRE(up != nullptr);
        CHECK(up->checked);
        CHECK(up->pass);
    }

    const ReproLine* tetra = find_line(lines, "3D count of 63 (n=4)");
    REQUIRE(tetra != nullptr);
    CHECK(tetra->computed == "2");
    const ReproLine* max9 = find_line(lines, "3D count of 7345971057 (n=9)");
    REQUIRE(max9 != nullptr);
    CHECK_FALSE(max9->checked);
    CHECK(max9->tier == ReproTier::Stretch);
    const ReproLine* max10 = find_line(lines, "3D count of 3559487592083 (n=10)");
    REQUIRE(max10 != nullptr);
    CHECK(max10->tier == ReproTier::Beyond);
}

TEST_CASE("reproduce: appendix tables at desk tier") {
    ReproduceOptions opt;
    std::vector<ReproLine> lines = reproduce_table("appendix", opt);
    require_all_checked_pass(lines);

    // 89 rows, one edge-count and one tightness line each, plus containment
    // or family lines for every list except the two plain maximal lists.
    int edges = 0, contains = 0, family = 0;
    for (const ReproLine& l : lines) {
        if (l.name.find(": edge count") != std::string::npos) ++edges;
        if (l.name.find(": contains ") != std::string::npos) ++contains;
        if (l.name.find(": in T") != std::string::npos ||
            l.name.find(": in S") != std::string::npos)
            ++family;
    }
    CHECK(edges == 89);
    CHECK(contains == 3 + 11 + 12 + 7 + 7 + 11 + 6 + 5);
    CHECK(family == 13);

    const ReproLine* dup = find_line(lines, "3D count of 7679 (n=6)");
    REQUIRE(dup != nullptr);
    int dup_count = 0;
    for (const ReproLine& l : lines) {
        if (l.name == dup->name) ++dup_count;
    }
    CHECK(dup_count == 1);  // appears in two lists but is counted once
}

TEST_CASE("reproduce: bookkeeping") {
    CHECK(reproduce_table_names() ==
          std::vector<std::string>{"1", "2", "3", "4", "5", "6", "appendix"});
    CHECK_THROWS_AS(reproduce_table("7"), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_table(""), std::invalid_argument);

    CHECK_FALSE(reproduce_passed({}));
    ReproLine info;
    info.checked = false;
    CHECK_FALSE(reproduce_passed({info}));
    ReproLine good;
    good.checked = good.pass = true;
    CHECK(reproduce_passed({info, good}));
    ReproLine bad;
    bad.checked = true;
    bad.pass = false;
    CHECK_FALSE(reproduce_passed({good, bad}));

    CHECK(to_string(ReproTier::Desk) == "desk");
    CHECK(to_string(ReproTier::Stretch) == "stretch");
    CHECK(to_string(ReproTier::Beyond) == "beyond");
}
