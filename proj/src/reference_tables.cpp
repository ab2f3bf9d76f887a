#include "rigidity/reference_tables.hpp"

#include <stdexcept>

namespace rigidity {

namespace {

BigInt big(const char* s) { return BigInt(s); }

}  // namespace

const std::vector<RefGraph>& ref_max_2d() {
    static const std::vector<RefGraph> rows = {
        {6, big("7916"), big("24")},
        {7, big("1269995"), big("56")},
        {8, big("170989214"), big("136")},
        {9, big("11177989553"), big("344")},
        {10, big("4778440734593"), big("880")},
        {11, big("18120782205838348"), big("2288")},
        {12, big("252590061719913632"), big("6180")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_t_family() {
    static const std::vector<RefGraph> rows = {
        {12, big("757486969329934592"), big("5952")},
        {13, big("3102079810848683155456"), big("15056")},
        {14, big("12393113433401056197689344"), big("39696")},
        {15, big("101535867160732294622504828928"), big("105384")},
        {16, big("283980994531838217547205604229120"), big("277864")},
        {17, big("65135173642079980743135145171586662400"), big("731336")},
        {18, big("9061092056503516236392931137633162134437921"), big("1953816")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_s_high() {
    static const std::vector<RefGraph> rows = {
        {13, big("2731597771584836257824"), big("15536")},
        {14, big("3932631430916370534240769"), big("42780")},
        {15, big("94091005932357252120217796609"), big("112752")},
        {16, big("892527555716690691964688718172672"), big("312636")},
        {17, big("97035633928660816927022803757023440896"), big("870414")},
        {18, big("1132478330239973528711451061872988363235584"), big("2237312")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan_high() {
    static const std::vector<RefGraph> rows = {
        {13, big("517844367551685511200"), big("15268")},
        {14, big("8465213527269428904345612"), big("40088")},
        {17, big("34561064106536153162036856640676376576"), big("1953816")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan31() {
    static const std::vector<RefGraph> rows = {
        {7, big("127575"), big("48")},
        {8, big("7654183"), big("112")},
        {9, big("11987422577"), big("288")},
        {10, big("26665598300033"), big("688")},
        {11, big("18226243755613920"), big("1760")},
        {12, big("57080320167818985484"), big("4864")},
        {13, big("1845359412452332949520"), big("12616")},
        {14, big("2116433716010931973523488"), big("32984")},
        {15, big("366442648507105101448244891666"), big("83792")},
        {16, big("1054776952932226148552313881544736"), big("224976")},
        {17, big("260539761471154896904085679883542331426"), big("570544")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan254() {
    static const std::vector<RefGraph> rows = {
        {6, big("3326"), big("16")},
        {7, big("190686"), big("32")},
        {8, big("210799326"), big("96")},
        {9, big("27047004894"), big("224")},
        {10, big("220302198846"), big("576")},
        {11, big("511412109882689"), big("1376")},
        {12, big("270814819769185025"), big("3648")},
        {13, big("2585030414085585133728"), big("9472")},
        {14, big("6356539347198988132306956"), big("24752")},
        {15, big("1109200018557493535348018405392"), big("62416")},
        {16, big("5598668013338146547621855406197248"), big("168256")},
        {17, big("176789006904155934327358957938973624416"), big("433920")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan223() {
    static const std::vector<RefGraph> rows = {
        {6, big("12511"), big("16")},
        {7, big("111335"), big("32")},
        {8, big("6419031"), big("96")},
        {9, big("812960551"), big("224")},
        {10, big("209151514913"), big("576")},
        {11, big("110640260854593"), big("1376")},
        {12, big("37616617704925531361"), big("3648")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan239() {
    static const std::vector<RefGraph> rows = {
        {6, big("10479"), big("16")},
        {7, big("103805"), big("32")},
        {8, big("12339295"), big("96")},
        {9, big("1024072271"), big("224")},
        {10, big("221350536519"), big("576")},
        {11, big("18441562579184833"), big("1376")},
        {12, big("21047011153048344071"), big("3648")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan7916() {
    static const std::vector<RefGraph> rows = {
        {7, big("120478"), big("48")},
        {8, big("6475132"), big("96")},
        {9, big("51946608057"), big("288")},
        {10, big("18284890201676"), big("672")},
        {11, big("5366995734673421"), big("1728")},
        {12, big("523614257391638273"), big("4128")},
        {13, big("2066305871268252766241"), big("10944")},
        {14, big("40197303758420411293510144"), big("28416")},
        {15, big("61903368089062917457613881376"), big("70656")},
        {16, big("11358585136343922383033065301099552"), big("177408")},
        {17, big("33233417861308024077754506274593047824"), big("486528")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_max_3d() {
    static const std::vector<RefGraph> rows = {
        {4, big("63"), big("2")},
        {5, big("511"), big("4")},
        {6, big("16350"), big("16")},
        {7, big("515806"), big("48")},
        {8, big("49724126"), big("160")},
        {9, big("7345971057"), big("640")},
        {10, big("3559487592083"), big("2560")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_fan_3d() {
    static const std::vector<RefGraph> rows = {
        {5, big("511"), big("4")},
        {6, big("7679"), big("8")},
        {7, big("257911"), big("32")},
        {8, big("16559991"), big("96")},
        {9, big("4076665507"), big("448")},
        {10, big("4894450217603"), big("1664")},
    };
    return rows;
}

const std::vector<RefGraph>& ref_genfan_3d() {
    static const std::vector<RefGraph> rows = {
        {6, big("7679"), big("8")},
        {7, big("237055"), big("16")},
        {8, big("14937975"), big("64")},
        {9, big("38164887119"), big("256")},
        {10, big("3168405805643"), big("896")},
    };
    return rows;
}

const std::vector<RefStep>& ref_steps_2d() {
    static const std::vector<RefStep> rows = {
        {"2c", 2, big("1269995"), 7, big("56"), big("31004235"), 8, big("96"), "1.71"},
        {"2c", 2, big("7916"), 6, big("24"), big("481867"), 7, big("44"), "1.83"},
        {"2b", 2, big("186013"), 7, big("32"), big("170989214"), 8, big("136"), "4.25"},
        {"2c", 2, big("183548"), 7, big("32"), big("170989214"), 8, big("136"), "4.25"},
        {"2c", 2, big("20042142"), 8, big("64"), big("11177989553"), 9, big("344"), "5.37"},
        {"2c", 2, big("4593214614"), 9, big("128"), big("22301628505804"), 10, big("808"), "6.31"},
        {"2c", 2, big("1248809223262"), 10, big("256"), big("2960334732174949"), 11, big("1976"), "7.72"},
        {"2c", 2, big("1710909647295913"), 11, big("512"), big("15006592507478215906"), 12, big("4816"), "9.41"},
    };
    return rows;
}

const std::vector<RefStep>& ref_steps_3d() {
    static const std::vector<RefStep> rows = {
        {"3v", 3, big("11717490611"), 9, big("512"), big("9634462543324"), 10, big("128"), "0.25"},
        {"3v", 3, big("49724126"), 8, big("160"), big("18848282483"), 9, big("64"), "0.40"},
        {"3v", 3, big("515806"), 7, big("48"), big("203906043"), 8, big("32"), "0.66"},
        {"2", 3, big("981215"), 7, big("24"), big("31965132"), 8, big("24"), "1.00"},
        {"3x", 3, big("16350"), 6, big("16"), big("1973983"), 7, big("16"), "1.00"},
        {"2,3x", 3, big("1973983"), 7, big("16"), big("49524604"), 8, big("128"), "8.00"},
        {"3x", 3, big("384510"), 7, big("16"), big("49724126"), 8, big("160"), "10.00"},
        {"3v", 3, big("382463"), 7, big("16"), big("49724126"), 8, big("160"), "10.00"},
        {"3x", 3, big("15661790"), 8, big("32"), big("7309884067"), 9, big("512"), "16.00"},
        {"3x", 3, big("2000476603"), 9, big("48"), big("2704137746603"), 10, big("1088"), "22.66"},
    };
    return rows;
}

const std::vector<RefExtremal>& ref_extremal_2d() {
    static const std::vector<RefExtremal> rows = {
        {6, big("16"), big("24"), big("24"), big("0")},
        {7, big("32"), big("56"), big("48"), big("0")},
        {8, big("64"), big("136"), big("96"), big("0")},
        {9, big("128"), big("344"), big("288"), big("0")},
        {10, big("256"), big("880"), big("576"), big("0")},
        {11, big("512"), big("2288"), big("0"), big("0")},
        {12, big("1024"), big("6180"), big("0"), big("0")},
    };
    return rows;
}

const std::vector<RefExtremal>& ref_extremal_3d() {
    static const std::vector<RefExtremal> rows = {
        {6, big("8"), big("16"), big("0"), big("40")},
        {7, big("16"), big("48"), big("0"), big("224")},
        {8, big("24"), big("160"), big("0"), big("1344")},
        {9, big("48"), big("640"), big("0"), big("8448")},
        {10, big("76"), big("2560"), big("0"), big("54912")},
        {11, big("0"), big("0"), big("0"), big("366080")},
        {12, big("0"), big("0"), big("0"), big("2489344")},
    };
    return rows;
}

const std::vector<RefFamilyBest>& ref_family_best() {
    static const std::vector<RefFamilyBest> rows = {
        {12, big("757486969329934592"), big("5952"), big("252590061719913632"), big("6180")},
        {13, big("3102079810848683155456"), big("15056"), big("2731597771584836257824"), big("15536")},
        {14, big("12393113433401056197689344"), big("39696"), big("3932631430916370534240769"), big("42780")},
        {15, big("101535867160732294622504828928"), big("105384"), big("94091005932357252120217796609"), big("112752")},
        {16, big("283980994531838217547205604229120"), big("277864"), big("892527555716690691964688718172672"), big("312636")},
        {17, big("65135173642079980743135145171586662400"), big("731336"), big("97035633928660816927022803757023440896"), big("870414")},
        {18, big("9061092056503516236392931137633162134437921"), big("1953816"), big("1132478330239973528711451061872988363235584"), big("2237312")},
    };
    return rows;
}

namespace {

struct RateColumn {
    const char* column;
    int glue_vertices;
    BigInt glue_count;
};

void add_cells(std::vector<RefRate>& out, const RateColumn& col,
               const std::vector<RefGraph>& rows, int n_from, int n_to,
               const std::vector<const char*>& expected) {
    std::size_t e = 0;
    for (const RefGraph& r : rows) {
        if (r.n < n_from || r.n > n_to) continue;
        if (e >= expected.size()) throw std::logic_error("reference rate cells misaligned");
        out.push_back({col.column, r.n, expected[e], r.code, r.count,
                       col.glue_vertices, col.glue_count, true});
        ++e;
    }
    if (e != expected.size()) throw std::logic_error("reference rate cells misaligned");
}

std::vector<RefRate> build_rates_2d() {
    std::vector<RefRate> out;
    RateColumn cat{"caterpillar", 2, BigInt(1)};
    add_cells(out, cat, ref_max_2d(), 6, 12,
              {"2.21336", "2.23685", "2.26772", "2.30338", "2.33378", "2.36196", "2.39386"});
    add_cells(out, cat, ref_s_high(), 13, 18,
              {"2.40453", "2.43185", "2.44695", "2.46890", "2.48875", "2.49378"});

    RateColumn fan_t{"fan-T", 3, BigInt(2)};
    add_cells(out, fan_t, ref_max_2d(), 6, 11,
              {"2.28943", "2.30033", "2.32542", "2.35824", "2.38581", "2.41159"});
    add_cells(out, fan_t, ref_t_family(), 12, 18,
              {"2.43198", "2.44156", "2.45868", "2.47445", "2.48657", "2.49668", "2.50798"});

    RateColumn fan{"fan", 3, BigInt(2)};
    add_cells(out, fan, ref_fan_high(), 13, 14, {"2.44498", "2.46087"});
    // The n = 17 cell disagrees with the count listed for its own base graph:
    // (1953816/2)^(1/14) = 2.67822, not 2.49779.
    out.push_back({"fan", 17, "2.49779", ref_fan_high()[2].code, ref_fan_high()[2].count,
                   3, BigInt(2), false});

    // The first cell of the 31-fan column has no base encoding listed.
    out.push_back({"31-fan", 6, "2", BigInt(0), BigInt(0), 4, BigInt(4), true});
    RateColumn fan31{"31-fan", 4, BigInt(4)};
    add_cells(out, fan31, ref_fan31(), 7, 17,
              {"2.28943", "2.30033", "2.35216", "2.35824", "2.38581", "2.43006",
               "2.44772", "2.46391", "2.47076", "2.48794", "2.49160"});

    RateColumn fan254{"254-fan", 5, BigInt(8)};
    add_cells(out, fan254, ref_fan254(), 6, 17,
              {"2", "2", "2.28943", "2.30033", "2.35216", "2.35824", "2.39802",
               "2.42197", "2.44251", "2.45031", "2.47166", "2.48043"});

    RateColumn fan7916{"7916-fan", 6, BigInt(24)};
    add_cells(out, fan7916, ref_fan7916(), 7, 17,
              {"2", "2", "2.28943", "2.30033", "2.35216", "2.35824", "2.39802",
               "2.42197", "2.42906", "2.43712", "2.46341"});
    return out;
}

std::vector<RefRate> build_rates_3d() {
    std::vector<RefRate> out;
    RateColumn cat{"caterpillar", 3, BigInt(1)};
    add_cells(out, cat, ref_max_3d(), 6, 10,
              {"2.51984", "2.63215", "2.75946", "2.93560", "3.06825"});
    RateColumn fan{"fan", 4, BigInt(2)};
    add_cells(out, fan, ref_fan_3d(), 6, 10,
              {"2", "2.51984", "2.63215", "2.95155", "3.06681"});
    RateColumn genfan{"genfan", 5, BigInt(4)};
    add_cells(out, genfan, ref_genfan_3d(), 7, 10,
              {"2", "2.51984", "2.82843", "2.95155"});
    return out;
}

}  // namespace

const std::vector<RefRate>& ref_rates_2d() {
    static const std::vector<RefRate> rows = build_rates_2d();
    return rows;
}

const std::vector<RefRate>& ref_rates_3d() {
    static const std::vector<RefRate> rows = build_rates_3d();
    return rows;
}

BigInt prior_upper_3d(int n) {
    if (n < 4) throw std::invalid_argument("prior_upper_3d: n must be at least 4");
    // 2^(n-3) * binomial(2n-6, n-3) / (n-2)
    BigInt binom = 1;
    for (int i = 1; i <= n - 3; ++i) {
        binom = binom * (n - 3 + i) / i;  // exact at every step
    }
    return (BigInt(1) << (n - 3)) * binom / (n - 2);
}

}  // namespace rigidity
