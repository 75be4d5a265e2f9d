#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skmaass/bessel.hpp"
#include "skmaass/errors.hpp"
#include "skmaass/qforms.hpp"
#include "skmaass/sk.hpp"
#include "skmaass/table_io.hpp"

using nlohmann::json;
using namespace skmaass;

namespace {

json scalar_json(const QuadExt& v) {
    return {{"q", v.radicand()},
            {"x", rational_str(v.rational_part())},
            {"y", rational_str(v.surd_part())},
            {"display", v.str()}};
}

json form_json(const QForm& f) { return {{"a", f.a}, {"b", f.b}, {"c", f.c}}; }

Rational parse_rational_lit(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw format_error(e.what());
    }
}

// literal grammar: R | R+R*sqrt(q) | R-R*sqrt(q) | R*sqrt(q), R = [sign]num[/den]
QuadExt parse_scalar(const std::string& text, long q) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw format_error("empty scalar literal");

    const auto pos = s.find("*sqrt(");
    if (pos == std::string::npos) {
        if (s.find("sqrt") != std::string::npos)
            throw format_error("bad scalar literal: " + text);
        return QuadExt(q, parse_rational_lit(s));
    }
    if (s.back() != ')')
        throw format_error("bad scalar literal: " + text);
    const std::string rad = s.substr(pos + 6, s.size() - pos - 7);
    if (rad.empty() || rad.find_first_not_of("0123456789") != std::string::npos)
        throw format_error("bad radicand in scalar literal: " + text);
    const long lit_q = std::stol(rad);
    if (lit_q != q)
        throw std::domain_error("literal radicand sqrt(" + rad + ") does not match q=" +
                                std::to_string(q));

    const std::string head = s.substr(0, pos);
    if (head.empty())
        throw format_error("bad scalar literal: " + text);
    std::string xs = "0", ys;
    const auto split = head.find_first_of("+-", 1);
    if (split == std::string::npos) {
        ys = head;
    } else {
        xs = head.substr(0, split);
        ys = head.substr(split);
        if (ys[0] == '+')
            ys = ys.substr(1);
    }
    return QuadExt(q, parse_rational_lit(xs), parse_rational_lit(ys));
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(sep, start);
        if (end == std::string::npos)
            end = s.size();
        if (end > start)
            out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::map<std::int64_t, Integer> parse_eigen_list(const std::string& s) {
    std::map<std::int64_t, Integer> out;
    for (const auto& item : split_list(s, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw format_error("--eigen expects \"p:c(p),...\", got: " + item);
        std::int64_t p;
        try {
            p = std::stoll(item.substr(0, colon));
        } catch (const std::exception&) {
            throw format_error("bad prime in --eigen: " + item);
        }
        Integer c;
        if (mpz_set_str(c.get_mpz_t(), item.substr(colon + 1).c_str(), 10) != 0)
            throw format_error("bad eigenvalue in --eigen: " + item);
        if (!out.emplace(p, c).second)
            throw format_error("duplicate prime in --eigen: " + item);
    }
    return out;
}

std::map<std::int64_t, Rational> parse_base_list(const std::string& s) {
    std::map<std::int64_t, Rational> out;
    for (const auto& item : split_list(s, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw format_error("--base expects \"d:num/den,...\", got: " + item);
        std::int64_t d;
        try {
            d = std::stoll(item.substr(0, colon));
        } catch (const std::exception&) {
            throw format_error("bad discriminant in --base: " + item);
        }
        if (!out.emplace(d, parse_rational_lit(item.substr(colon + 1))).second)
            throw format_error("duplicate discriminant in --base: " + item);
    }
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(s, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw format_error("bad integer list entry: " + item);
        }
    }
    return out;
}

const char* kind_name(BesselKind k) {
    switch (k) {
        case BesselKind::SKType: return "sk-type";
        case BesselKind::Exceptional: return "exceptional";
        case BesselKind::Generic: return "generic";
    }
    return "?";
}

const char* verdict_name(SKVerdict v) {
    switch (v) {
        case SKVerdict::SpezialscharConsistent: return "SpezialscharConsistent";
        case SKVerdict::Fails: return "Fails";
        case SKVerdict::BaseVanishes: return "BaseVanishes";
    }
    return "?";
}

void emit(const json& j) { std::cout << j.dump(1) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Saito-Kurokawa coefficient tables, local "
                 "Bessel values and Maass relations"};
    app.require_subcommand(1);
    int rc = 0;

    // bessel
    auto* bessel = app.add_subcommand("bessel", "value of the local spherical Bessel function");
    struct {
        std::int64_t q = 2;
        std::string A, B;
        int delta = 0;
        int l = 0, m = 0;
    } bes;
    bessel->add_option("--q", bes.q, "residue field size (prime)")->required();
    bessel->add_option("--A", bes.A, "trace alpha+1/alpha, e.g. \"0\" or \"1+1/2*sqrt(2)\"")->required();
    bessel->add_option("--B", bes.B, "trace beta+1/beta")->required();
    bessel->add_option("--delta", bes.delta, "(L/F): 1 split, -1 inert, 0 ramified")->required();
    bessel->add_option("--l", bes.l)->check(CLI::NonNegativeNumber);
    bessel->add_option("--m", bes.m)->check(CLI::NonNegativeNumber);
    bessel->callback([&] {
        SphericalParams params(bes.q, parse_scalar(bes.A, bes.q),
                               parse_scalar(bes.B, bes.q), bes.delta);
        const auto cls = classify(params);
        std::optional<QuadExt> value;
        std::string path;
        if (bes.l == 0) {
            value = b0(params, bes.m);
            path = "recurrence";
        } else {
            if (cls.kind != BesselKind::SKType)
                throw std::domain_error(
                    "B(h(l,m)) with l>0 is only determined for sk-type parameters; "
                    "got " + std::string(kind_name(cls.kind)) + " parameters");
            value = blm_sk(params, bes.l, bes.m);
            path = "local-maass-sum";
        }
        emit({{"q", bes.q},
              {"delta", bes.delta},
              {"A", scalar_json(params.A)},
              {"B", scalar_json(params.B)},
              {"l", bes.l},
              {"m", bes.m},
              {"classification", kind_name(cls.kind)},
              {"path", path},
              {"value", scalar_json(*value)}});
    });

    // qforms
    auto* qf = app.add_subcommand("qforms", "binary quadratic form utilities");
    qf->require_subcommand(1);

    auto* qreduce = qf->add_subcommand("reduce", "Gauss reduction with transform");
    struct { std::int64_t a = 0, b = 0, c = 0; } red;
    qreduce->add_option("--a", red.a)->required();
    qreduce->add_option("--b", red.b)->required();
    qreduce->add_option("--c", red.c)->required();
    qreduce->callback([&] {
        QForm f{red.a, red.b, red.c};
        auto [r, t] = reduce(f);
        emit({{"input", form_json(f)},
              {"reduced", form_json(r)},
              {"transform", {{t.m00, t.m01}, {t.m10, t.m11}}},
              {"disc", r.disc()},
              {"content", r.content()}});
    });

    auto* qenum = qf->add_subcommand("enum", "reduced classes of given discriminant and content");
    struct { std::int64_t D = 0, L = 1; } en;
    qenum->add_option("--D", en.D, "primitive discriminant (negative)")->required();
    qenum->add_option("--L", en.L, "content");
    qenum->callback([&] {
        auto classes = enumerate_classes(en.D, en.L);
        json forms = json::array();
        for (const auto& f : classes)
            forms.push_back(form_json(f));
        emit({{"D", en.D}, {"L", en.L}, {"count", classes.size()}, {"forms", forms}});
    });

    auto* qcount = qf->add_subcommand("count", "class count: enumeration vs formula");
    struct { std::int64_t d = 0, M = 1, L = 1; } cnt;
    qcount->add_option("--d", cnt.d, "fundamental discriminant (negative)")->required();
    qcount->add_option("--M", cnt.M, "conductor");
    qcount->add_option("--L", cnt.L, "content");
    qcount->callback([&] {
        const auto enumerated =
            static_cast<std::int64_t>(enumerate_classes(cnt.d * cnt.M * cnt.M, cnt.L).size());
        const auto formula = class_count_formula(cnt.d, cnt.M, cnt.L);
        const bool agree = enumerated == formula;
        emit({{"d", cnt.d},
              {"M", cnt.M},
              {"L", cnt.L},
              {"enumerated", enumerated},
              {"formula", formula},
              {"agree", agree}});
        if (!agree)
            rc = 4;
    });

    // arch
    auto* arch = app.add_subcommand("arch", "archimedean Bessel value and Cartan data");
    struct { std::int64_t a = 0, b = 0, c = 0; int k = 10; } ar;
    arch->add_option("--a", ar.a)->required();
    arch->add_option("--b", ar.b)->required();
    arch->add_option("--c", ar.c)->required();
    arch->add_option("--k", ar.k, "even weight >= 4");
    arch->callback([&] {
        QForm f{ar.a, ar.b, ar.c};
        const auto dec = arch_decompose(f);
        const double value = bessel_arch(f, ar.k);
        emit({{"form", form_json(f)},
              {"k", ar.k},
              {"u", dec.u},
              {"x", dec.x},
              {"y", dec.y},
              {"lambda", dec.lambda},
              {"zeta", dec.zeta},
              {"value", value}});
    });

    // sk
    auto* sk = app.add_subcommand("sk", "coefficient tables and Maass-relation checks");
    sk->require_subcommand(1);

    auto* gen = sk->add_subcommand("gen", "generate a coefficient table");
    struct {
        int k = 10;
        std::string eigen, base, out;
        std::int64_t bound = 100;
        int jobs = 1;
    } g;
    gen->add_option("--k", g.k, "Siegel weight (even)")->required();
    gen->add_option("--eigen", g.eigen, "\"p:c(p),...\"")->required();
    gen->add_option("--base", g.base, "\"d:num/den,...\"")->required();
    gen->add_option("--disc-bound", g.bound, "maximal |disc|")->required();
    gen->add_option("--out", g.out, "output table file")->required();
    gen->add_option("--jobs", g.jobs, "parallel workers")->check(CLI::PositiveNumber);
    gen->callback([&] {
        SKLiftSpec lift;
        lift.hecke.k = g.k;
        lift.hecke.eigen = parse_eigen_list(g.eigen);
        lift.base = parse_base_list(g.base);
        auto table = generate_table(lift, g.bound, g.jobs);
        save_table(table, g.out);
        emit({{"out", g.out}, {"weight", table.k}, {"entries", table.entries.size()}});
    });

    auto* check = sk->add_subcommand("check", "verify the Maass relations on a table");
    std::string check_table;
    check->add_option("--table", check_table)->required();
    check->callback([&] {
        auto table = load_table(check_table);
        auto report = maass_check(table);
        json failures = json::array();
        for (const auto& r : report.relations)
            if (!r.pass)
                failures.push_back({{"D", r.D},
                                    {"L", r.L},
                                    {"form", form_json(r.rep)},
                                    {"lhs", rational_str(r.lhs)},
                                    {"rhs", rational_str(r.rhs)}});
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"form1", form_json(v.s1)},
                                  {"value1", rational_str(v.v1)},
                                  {"form2", form_json(v.s2)},
                                  {"value2", rational_str(v.v2)}});
        json incomplete = json::array();
        for (const auto& inc : report.incomplete)
            incomplete.push_back({{"D", inc.D}, {"L", inc.L}, {"missing_disc", inc.missing_disc}});
        emit({{"weight", table.k},
              {"entries", table.entries.size()},
              {"relations_checked", report.relations.size()},
              {"failed", report.failed_count()},
              {"failures", failures},
              {"class_function_violations", violations},
              {"incomplete", incomplete}});
        if (!report.all_pass())
            rc = 4;
        else if (!report.incomplete.empty())
            rc = 3;
    });

    auto* detect = sk->add_subcommand("detect", "averaged Maass-relation detector at (d, p)");
    struct {
        std::string table;
        std::int64_t d = -4, p = 2;
    } det;
    detect->add_option("--table", det.table)->required();
    detect->add_option("--d", det.d, "fundamental discriminant")->required();
    detect->add_option("--p", det.p, "prime")->required();
    detect->callback([&] {
        auto table = load_table(det.table);
        auto res = detect_sk(table, det.d, det.p);
        emit({{"d", det.d},
              {"p", det.p},
              {"verdict", verdict_name(res.verdict)},
              {"avg_d_1", rational_str(res.base_avg)},
              {"lhs", rational_str(res.lhs)},
              {"rhs", rational_str(res.rhs)},
              {"defect", rational_str(res.lhs - res.rhs)}});
        if (res.verdict == SKVerdict::Fails)
            rc = 4;
    });

    auto* asym = sk->add_subcommand("asymptotic", "normalized defect of the averaged relation per prime");
    struct {
        std::string table, primes;
        std::int64_t d = -4;
    } as;
    asym->add_option("--table", as.table)->required();
    asym->add_option("--d", as.d, "fundamental discriminant")->required();
    asym->add_option("--primes", as.primes, "\"p1,p2,...\"")->required();
    asym->callback([&] {
        auto table = load_table(as.table);
        auto points = detect_asymptotic(table, as.d, parse_int_list(as.primes));
        json arr = json::array();
        bool any_incomplete = false;
        for (const auto& pt : points) {
            if (pt.complete) {
                arr.push_back({{"p", pt.p}, {"value", rational_str(pt.value)}});
            } else {
                arr.push_back({{"p", pt.p}, {"incomplete", true}});
                any_incomplete = true;
            }
        }
        emit({{"d", as.d}, {"points", arr}});
        if (any_incomplete)
            rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const incomplete_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
