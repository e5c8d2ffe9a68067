#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "parmax/airy.hpp"
#include "parmax/airy_integrals.hpp"
#include "parmax/dist.hpp"
#include "parmax/hitting.hpp"
#include "parmax/mc.hpp"
#include "parmax/quadrature.hpp"
#include "parmax/scorer.hpp"
#include "parmax/version.hpp"
#include "parmax/zeros.hpp"

using nlohmann::json;
using namespace parmax;

namespace {

std::string fmt17(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

struct GridSpec {
    double a = 0.0, b = 0.0;
    int n = 1;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> g.a >> c1 >> g.b >> c2 >> g.n) || c1 != ':' || c2 != ':' ||
        !in.eof())
        throw CLI::ValidationError("--grid", "expected a:b:n");
    if (g.n < 1 || g.b < g.a)
        throw CLI::ValidationError("--grid", "need n >= 1 and b >= a");
    return g;
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> xs(std::size_t(g.n));
    if (g.n == 1) {
        xs[0] = g.a;
        return xs;
    }
    double step = (g.b - g.a) / (g.n - 1);
    for (int i = 0; i < g.n; ++i) xs[std::size_t(i)] = g.a + step * i;
    xs.back() = g.b;
    return xs;
}

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;

    void row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }

    std::string csv() const {
        std::ostringstream o;
        for (std::size_t i = 0; i < cols.size(); ++i)
            o << (i ? "," : "") << cols[i];
        o << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                o << (i ? "," : "") << r[i];
            o << "\n";
        }
        return o.str();
    }

    json to_json() const {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            for (std::size_t i = 0; i < cols.size() && i < r.size(); ++i) {
                char* end = nullptr;
                double v = std::strtod(r[i].c_str(), &end);
                if (end && *end == '\0' && end != r[i].c_str())
                    obj[cols[i]] = v;
                else
                    obj[cols[i]] = r[i];
            }
            arr.push_back(obj);
        }
        return arr;
    }
};

struct Sink {
    bool as_json = false;
    std::string out_path;
    json manifest;
    json data;
    Table table;
    std::vector<std::string> warnings;

    void finish(double wall_s) {
        long clamps = clamp_event_count();
        if (clamps > 0)
            warnings.push_back("value clamps: " + std::to_string(clamps));
        manifest["version"] = version_string;
        manifest["wall_time_s"] = wall_s;
        manifest["warnings"] = warnings;

        std::ostringstream o;
        if (as_json) {
            json root;
            root["schema"] = 1;
            root["manifest"] = manifest;
            if (!data.is_null()) root["data"] = data;
            if (!table.cols.empty()) root["table"] = table.to_json();
            o << root.dump(2) << "\n";
        } else {
            o << "# command: " << manifest.value("command", "") << "\n";
            o << "# version: " << version_string << "\n";
            o << "# config: " << manifest.value("config", json::object()).dump()
              << "\n";
            o << "# wall_time_s: " << wall_s << "\n";
            for (const auto& w : warnings) o << "# warning: " << w << "\n";
            if (!data.is_null()) o << "# summary: " << data.dump() << "\n";
            o << table.csv();
        }
        if (out_path.empty()) {
            std::cout << o.str();
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open " + out_path);
            f << o.str();
        }
    }
};

int env_threads(std::vector<std::string>& warnings) {
    const char* e = std::getenv("PARMAX_THREADS");
    if (!e) return 1;
    char* end = nullptr;
    long t = std::strtol(e, &end, 10);
    if (!end || *end != '\0' || t < 1) {
        warnings.push_back("PARMAX_THREADS ignored (unparseable)");
        return 1;
    }
    if (t > 64) t = 64;
    if (t > 1)
        warnings.push_back("PARMAX_THREADS=" + std::to_string(t) +
                           " requested; evaluation is sequential");
    return int(t);
}

struct MomentRow {
    double value, err;
};

struct SixMoments {
    MomentRow en, em, en2, em2, var_n, var_m;
};

void push_six(Table& t, const char* route, const SixMoments& m) {
    const char* names[6] = {"E_N", "E_M", "E_N2", "E_M2", "Var_N", "Var_M"};
    const MomentRow* v[6] = {&m.en, &m.em, &m.en2, &m.em2, &m.var_n, &m.var_m};
    for (int i = 0; i < 6; ++i)
        t.row({route, names[i], fmt17(v[i]->value), fmt17(v[i]->err)});
}

json six_json(const SixMoments& m) {
    auto e = [](const MomentRow& r) {
        return json{{"value", r.value}, {"err_est", r.err}};
    };
    return json{{"E_N", e(m.en)},     {"E_M", e(m.em)},
                {"E_N2", e(m.en2)},   {"E_M2", e(m.em2)},
                {"Var_N", e(m.var_n)}, {"Var_M", e(m.var_m)}};
}

SixMoments series_moments(const SeriesConfig& sc) {
    MomentSet ms = moments(sc);
    return {{ms.en.value, ms.en.err_est},     {ms.em.value, ms.em.err_est},
            {ms.en2.value, ms.en2.err_est},   {ms.em2.value, ms.em2.err_est},
            {ms.var_n.value, ms.var_n.err_est},
            {ms.var_m.value, ms.var_m.err_est}};
}

SixMoments integral_moments(const SeriesConfig& sc) {
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-10;
    qs.tail_bound = 1e-12;  // mass of G beyond x = 8
    auto q = [&](auto&& f) { return integrate(f, 0.0, 8.0, qs); };
    QuadResult g = q([&](double x) { return tail_probability_G(x, sc); });
    QuadResult g2 = q([&](double x) {
        double v = tail_probability_G(x, sc);
        return v * v;
    });
    QuadResult xg = q([&](double x) { return x * tail_probability_G(x, sc); });
    QuadResult xg2 = q([&](double x) {
        double v = tail_probability_G(x, sc);
        return x * v * v;
    });
    double en = g.value;
    double em = 2.0 * g.value - g2.value;
    double en2 = 2.0 * xg.value;
    double em2 = 4.0 * xg.value - 2.0 * xg2.value;
    double e_en = g.err_est + 2e-9;  // G itself is accurate to ~1e-9 pointwise
    double e_em = 2.0 * g.err_est + g2.err_est + 4e-9;
    double e_en2 = 2.0 * xg.err_est + 4e-9;
    double e_em2 = 4.0 * xg.err_est + 2.0 * xg2.err_est + 8e-9;
    double vn = en2 - en * en, vm = em2 - em * em;
    return {{en, e_en},
            {em, e_em},
            {en2, e_en2},
            {em2, e_em2},
            {vn, e_en2 + 2.0 * en * e_en},
            {vm, e_em2 + 2.0 * em * e_em}};
}

struct McStats {
    MomentRow m1, m2;  // first and second sample moments, err = 1 std err
};

McStats pair_stats(const std::vector<double>& s, long long from, long long count,
                   long long lag) {
    // consecutive units are antithetic pair means; lag > 0 maxes s[i] with
    // s[i+lag] first (independent components under the stream layout)
    long long units = count / 2;
    double a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    for (long long i = 0; i + 1 < count; i += 2) {
        double x = lag ? std::max(s[std::size_t(from + i)],
                                  s[std::size_t(from + i + lag)])
                       : s[std::size_t(from + i)];
        double y = lag ? std::max(s[std::size_t(from + i + 1)],
                                  s[std::size_t(from + i + 1 + lag)])
                       : s[std::size_t(from + i + 1)];
        double u = 0.5 * (x + y);
        double v = 0.5 * (x * x + y * y);
        a1 += u;
        a2 += u * u;
        b1 += v;
        b2 += v * v;
    }
    McStats r;
    r.m1.value = a1 / double(units);
    r.m2.value = b1 / double(units);
    double va = a2 / double(units) - r.m1.value * r.m1.value;
    double vb = b2 / double(units) - r.m2.value * r.m2.value;
    if (va < 0) va = 0;
    if (vb < 0) vb = 0;
    r.m1.err = std::sqrt(va / double(units - 1));
    r.m2.err = std::sqrt(vb / double(units - 1));
    return r;
}

SixMoments mc_moments(long long paths, std::uint64_t seed) {
    long long n = paths - paths % 4;
    if (n < 10000) n = 10000;
    std::vector<double> s(std::size_t(n), 0.0);
    McStats nh[2], mh[2];
    double hs[2] = {4e-4, 1e-4};
    for (int r = 0; r < 2; ++r) {
        McConfig c;
        c.h = hs[r];
        c.n = n;
        c.seed = seed;
        SampleStream st(c, SampleStream::Kind::single_max, 11 + r);
        for (long long i = 0; i < n; ++i) s[std::size_t(i)] = st.next();
        nh[r] = pair_stats(s, 0, n, 0);
        mh[r] = pair_stats(s, 0, n / 2, n / 2);
    }
    auto ext = [](const MomentRow& c4, const MomentRow& c1) {
        return MomentRow{2.0 * c1.value - c4.value,
                         std::sqrt(4.0 * c1.err * c1.err + c4.err * c4.err)};
    };
    MomentRow en = ext(nh[0].m1, nh[1].m1), en2 = ext(nh[0].m2, nh[1].m2);
    MomentRow em = ext(mh[0].m1, mh[1].m1), em2 = ext(mh[0].m2, mh[1].m2);
    auto var = [](const MomentRow& m2, const MomentRow& m1) {
        return MomentRow{m2.value - m1.value * m1.value,
                         std::sqrt(m2.err * m2.err +
                                   4.0 * m1.value * m1.value * m1.err * m1.err)};
    };
    MomentRow vn = var(en2, en), vm = var(em2, em);
    // report 3 sigma as the error estimate
    for (MomentRow* p : {&en, &em, &en2, &em2, &vn, &vm}) p->err *= 3.0;
    return {en, em, en2, em2, vn, vm};
}

int cmd_moments(const std::string& route, int terms, const std::string& tail,
                long long paths, std::uint64_t seed, Sink& sink) {
    SeriesConfig sc;
    sc.K = terms;
    sc.tail_mode = tail == "none" ? SeriesConfig::TailMode::none
                                  : SeriesConfig::TailMode::asymptotic;
    validate(sc);
    sink.table.cols = {"route", "moment", "value", "err_est"};

    bool want_series = route == "series" || route == "all";
    bool want_integral = route == "integral" || route == "all";
    bool want_mc = route == "mc" || route == "all";

    SixMoments ser{}, integ{}, mc{};
    if (want_series) {
        ser = series_moments(sc);
        push_six(sink.table, "series", ser);
        sink.data["series"] = six_json(ser);
    }
    if (want_integral) {
        integ = integral_moments(sc);
        push_six(sink.table, "integral", integ);
        sink.data["integral"] = six_json(integ);
    }
    if (want_mc) {
        mc = mc_moments(paths, seed);
        push_six(sink.table, "mc", mc);
        sink.data["mc"] = six_json(mc);
    }

    int rc = 0;
    if (route == "all") {
        const MomentRow* a[6] = {&ser.en, &ser.em, &ser.en2,
                                 &ser.em2, &ser.var_n, &ser.var_m};
        const MomentRow* b[6] = {&integ.en, &integ.em, &integ.en2,
                                 &integ.em2, &integ.var_n, &integ.var_m};
        const MomentRow* c[6] = {&mc.en, &mc.em, &mc.en2,
                                 &mc.em2, &mc.var_n, &mc.var_m};
        double worst_si = 0, worst_sm = 0;
        bool ok = true;
        for (int i = 0; i < 6; ++i) {
            double gap_si = std::fabs(a[i]->value - b[i]->value);
            double tol_si = a[i]->err + b[i]->err + 1e-7;
            double gap_sm = std::fabs(a[i]->value - c[i]->value);
            double tol_sm = c[i]->err + 2e-3;
            worst_si = std::max(worst_si, gap_si);
            worst_sm = std::max(worst_sm, gap_sm);
            if (gap_si > tol_si || gap_sm > tol_sm) ok = false;
        }
        sink.data["agreement"] = {{"max_gap_series_integral", worst_si},
                                  {"max_gap_series_mc", worst_sm},
                                  {"pass", ok}};
        if (!ok) {
            sink.warnings.push_back("routes disagree beyond tolerance");
            rc = 3;
        }
    }
    return rc;
}

int cmd_dist(const std::string& what, const std::string& which,
             const std::string& grid, double xflag, bool has_x, Sink& sink) {
    std::vector<double> xs;
    if (has_x)
        xs.push_back(xflag);
    else
        xs = grid_points(parse_grid(grid.empty() ? "0:4:401" : grid));
    SeriesConfig sc;
    sink.table.cols = {"x", "value"};
    double mono = 0.0;
    for (double x : xs) {
        EvalPoint p = eval_point(x, sc);
        double v;
        if (what == "cdf") {
            v = which == "N" ? p.cdf_n : p.cdf_m;
            v = mono = std::min(1.0, std::max(mono, v));
        } else {
            v = which == "N" ? p.f_n : p.f_m;
        }
        sink.table.row({fmt17(x), fmt17(v)});
    }
    return 0;
}

int cmd_hitting(double x, const std::string& grid, Sink& sink) {
    SeriesConfig sc;
    HittingEval hv(x, sc);
    GridSpec g = parse_grid(grid.empty() ? "0:6:601" : grid);
    std::vector<double> ts = grid_points(g);
    sink.table.cols = {"t", "f_tau", "cumulative"};

    // 4-point Gauss-Legendre per segment for the running integral
    static const double gx[2] = {0.3399810435848563, 0.8611363115940526};
    static const double gw[2] = {0.6521451548625461, 0.3478548451374538};
    double cum = 0.0;
    double prev = ts.empty() ? 0.0 : ts.front();
    if (!ts.empty() && ts.front() > 0.0) {
        QuadratureSpec qs;
        qs.abs_tol = 1e-12;
        qs.rel_tol = 1e-10;
        cum = integrate([&](double t) { return hv.density(t); }, 0.0,
                        ts.front(), qs)
                  .value;
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double t = ts[i];
        if (i > 0) {
            double c = 0.5 * (prev + t), hw = 0.5 * (t - prev);
            double acc = 0.0;
            for (int j = 0; j < 2; ++j)
                acc += gw[j] * (hv.density(c - hw * gx[j]) +
                                hv.density(c + hw * gx[j]));
            cum += hw * acc;
        }
        sink.table.row({fmt17(t), fmt17(hv.density(t)), fmt17(cum)});
        prev = t;
    }
    sink.data["defect_reference"] = tail_probability_G(x, sc);
    return 0;
}

int cmd_zeros(int count, Sink& sink) {
    const auto& tab = zero_table(count);
    sink.table.cols = {"k", "a_k", "aip", "bi", "hi", "phi"};
    for (int k = 1; k <= count; ++k) {
        const ZeroRecord& r = tab[std::size_t(k) - 1];
        sink.table.row({std::to_string(k), fmt17(r.a), fmt17(r.aip),
                        fmt17(r.bi), fmt17(r.hi), fmt17(r.phi)});
    }
    return 0;
}

struct CheckRow {
    std::string suite, name;
    double stat, bound;
    bool pass;
};

void suite_airy(std::vector<CheckRow>& out) {
    double worst_w = 0.0;
    for (double x = -50.0; x <= 8.0; x += 0.004) {
        AiryValues v = airy_eval(x);
        double w = v.ai * v.bip - v.aip * v.bi;
        worst_w = std::max(worst_w, std::fabs(w * 3.14159265358979323846 - 1.0));
    }
    out.push_back({"airy", "wronskian residual on [-50 8]", worst_w, 1e-12,
                   worst_w <= 1e-12});

    const auto& tab = zero_table(1000);
    double worst_z = 0.0;
    for (int k = 1; k <= 1000; ++k) {
        const ZeroRecord& r = tab[std::size_t(k) - 1];
        double res = std::fabs(airy_eval(r.a).ai / (r.aip * r.a));
        worst_z = std::max(worst_z, res);
    }
    out.push_back({"airy", "zero residual k <= 1e3", worst_z, 1e-12,
                   worst_z <= 1e-12});

    double worst_p = 0.0;
    for (int k = 11; k <= 60; ++k) {
        const ZeroRecord& r = tab[std::size_t(k) - 1];
        double gap = std::fabs(phi_integral(r.a) - phi_asymptotic(r.a));
        worst_p = std::max(worst_p, gap);
    }
    out.push_back({"airy", "phi dual-route at crossover", worst_p, 1e-10,
                   worst_p <= 1e-10});
}

void suite_identities(std::vector<CheckRow>& out) {
    SeriesConfig sc;
    for (const IdentityReport& r : airy_identity_suite({}, 4))
        out.push_back({"identities", r.name, r.abs_gap, 1e-9, r.pass});
    for (double z : {0.5, 1.0, 2.0}) {
        IdentityReport r = laplace_airy_check(z);
        out.push_back({"identities", r.name, r.abs_gap, 1e-9, r.pass});
    }
    {
        IdentityReport r = parseval_sum(1000);
        out.push_back({"identities", r.name, r.abs_gap, 1e-9, r.pass});
    }
    double em_series = moments(sc).em.value;
    double forms[3] = {em_via_integral(EmForm::ratio),
                       em_via_integral(EmForm::t_weighted),
                       em_via_integral(EmForm::complex_split)};
    const char* fn[3] = {"em ratio form", "em t-weighted form",
                         "em complex-split form"};
    for (int i = 0; i < 3; ++i) {
        double gap = std::fabs(forms[i] - em_series);
        out.push_back({"identities", fn[i], gap, 1e-8, gap <= 1e-8});
    }
    double mutual = std::max({std::fabs(forms[0] - forms[1]),
                              std::fabs(forms[0] - forms[2]),
                              std::fabs(forms[1] - forms[2])});
    out.push_back(
        {"identities", "em integral forms mutual", mutual, 1e-9, mutual <= 1e-9});

    for (double x : {0.25, 0.5, 1.0}) {
        for (double z : {0.0, 0.5, 1.0, 2.0}) {
            double lhs = hitting_laplace(x, z, sc);
            double rhs = hitting_laplace_reference(x, z);
            double rel = std::fabs(lhs - rhs) / std::fabs(rhs);
            std::ostringstream nm;
            nm << "hitting transform x=" << x << " z=" << z;
            out.push_back({"identities", nm.str(), rel, 1e-7, rel <= 1e-7});
        }
    }
}

void suite_series(std::vector<CheckRow>& out) {
    SeriesConfig sc;
    MomentSet ms = moments(sc);
    auto push = [&out](const std::string& n, double stat, double bound) {
        out.push_back({"series", n, stat, bound, stat <= bound});
    };
    push("E_N vs pinned", std::fabs(ms.en.value - 0.6955289995), 1e-8);
    push("E_M vs pinned", std::fabs(ms.em.value - 0.9961930199), 1e-8);

    SixMoments integ = integral_moments(sc);
    push("E_N2 series vs quadrature", std::fabs(ms.en2.value - integ.en2.value),
         1e-8);
    push("E_M2 series vs quadrature", std::fabs(ms.em2.value - integ.em2.value),
         2e-8);

    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-10;
    double mass_n =
        integrate([&](double x) { return density_fN(x, sc); }, 1e-12, 8.0, qs)
            .value;
    double mass_m =
        integrate([&](double x) { return density_fM(x, sc); }, 1e-12, 8.0, qs)
            .value;
    push("f_N mass", std::fabs(mass_n - 1.0), 1e-8);
    push("f_M mass", std::fabs(mass_m - 1.0), 1e-8);

    double worst_d = 0.0;
    int sq_mismatch = 0;
    for (double x = 0.1; x <= 3.0001; x += 0.1) {
        const double d = 1e-5;
        EvalPoint hi = eval_point(x + d, sc), lo = eval_point(x - d, sc);
        EvalPoint ce = eval_point(x, sc);
        worst_d = std::max(
            worst_d, std::fabs((hi.cdf_n - lo.cdf_n) / (2 * d) - ce.f_n));
        const double sq = ce.cdf_n * ce.cdf_n;
        if (ce.cdf_m != sq) ++sq_mismatch;
    }
    push("dF_N/dx vs f_N on [0.1 3]", worst_d, 1e-5);
    push("F_M = F_N^2 bitwise mismatches", double(sq_mismatch), 0.0);

    auto tm = mean_via_tmean(sc);
    push("conditional-mean route E_N", std::fabs(tm.first - ms.en.value), 1e-3);
    push("conditional-mean route E_M", std::fabs(tm.second - ms.em.value), 1e-3);

    auto gp = gparseval_check(sc);
    push("G Parseval quadrature vs series", std::fabs(gp.first - gp.second),
         1e-9);

    SeriesConfig rough;
    rough.K = 2000;
    rough.tail_mode = SeriesConfig::TailMode::none;
    MomentSet mr = moments(rough);
    push("truncated-route honesty E_N", std::fabs(mr.en.value - ms.en.value),
         mr.en.err_est + ms.en.err_est);
    push("truncated-route honesty E_M2", std::fabs(mr.em2.value - ms.em2.value),
         mr.em2.err_est + ms.em2.err_est);
}

int cmd_validate(const std::string& suite, long long paths, std::uint64_t seed,
                 Sink& sink) {
    std::vector<CheckRow> rows;
    if (suite == "airy" || suite == "all") suite_airy(rows);
    if (suite == "identities" || suite == "all") suite_identities(rows);
    if (suite == "series" || suite == "all") suite_series(rows);
    if (suite == "mc" || suite == "all") {
        for (const McCheck& c : mc_concordance_suite(paths, seed))
            rows.push_back({"mc", c.name, c.stat, c.bound, c.pass});
    }
    sink.table.cols = {"suite", "name", "stat", "bound", "pass"};
    int bad = 0;
    for (const CheckRow& r : rows) {
        sink.table.row({r.suite, r.name, fmt17(r.stat), fmt17(r.bound),
                        r.pass ? "1" : "0"});
        if (!r.pass) ++bad;
    }
    sink.data["checks"] = int(rows.size());
    sink.data["failures"] = bad;
    return bad == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum of Brownian motion with parabolic drift"};
    app.require_subcommand(1);

    Sink sink;
    std::string route = "series", tail = "asymptotic", what, which, grid,
                suite = "all";
    int terms = 200, count = 10;
    long long paths = 100000;
    std::uint64_t seed = 20260822;
    double xval = 0.0;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", sink.as_json, "emit JSON instead of CSV");
        c->add_option("--out", sink.out_path, "write output to a file");
        c->add_option("--seed", seed, "RNG seed for sampling commands");
    };

    CLI::App* m = app.add_subcommand("moments", "moment table");
    m->add_option("--route", route)
        ->check(CLI::IsMember({"series", "integral", "mc", "all"}));
    m->add_option("--terms", terms, "direct summation cutoff K");
    m->add_option("--tail", tail)->check(CLI::IsMember({"none", "asymptotic"}));
    m->add_option("--paths", paths, "sample count for the mc route");
    add_common(m);

    CLI::App* d = app.add_subcommand("dist", "CDF/PDF tables");
    d->add_option("--what", what)->required()->check(
        CLI::IsMember({"cdf", "pdf"}));
    d->add_option("--dist", which)->required()->check(CLI::IsMember({"N", "M"}));
    d->add_option("--grid", grid, "a:b:n inclusive grid");
    CLI::Option* xopt = d->add_option("--x", xval, "single evaluation point");
    add_common(d);

    CLI::App* h = app.add_subcommand("hitting", "hitting-time density table");
    h->add_option("--x", xval, "starting gap x > 0")->required();
    h->add_option("--grid", grid, "a:b:n inclusive grid");
    add_common(h);

    CLI::App* z = app.add_subcommand("zeros", "Airy zero table");
    z->add_option("--count", count)->check(CLI::Range(1, 200000));
    add_common(z);

    CLI::App* v = app.add_subcommand("validate", "consistency suites");
    v->add_option("--suite", suite)
        ->check(CLI::IsMember({"airy", "identities", "series", "mc", "all"}));
    v->add_option("--paths", paths, "sample count for the mc suite");
    add_common(v);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ostringstream cmdline;
    for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];
    sink.manifest["command"] = cmdline.str();
    int threads = env_threads(sink.warnings);

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    reset_clamp_event_count();
    try {
        if (m->parsed()) {
            sink.manifest["config"] = {{"route", route},  {"terms", terms},
                                       {"tail", tail},    {"paths", paths},
                                       {"seed", seed},    {"threads", threads}};
            rc = cmd_moments(route, terms, tail, paths, seed, sink);
        } else if (d->parsed()) {
            sink.manifest["config"] = {{"what", what},
                                       {"dist", which},
                                       {"grid", grid.empty() && !*xopt
                                                    ? "0:4:401"
                                                    : grid},
                                       {"threads", threads}};
            if (*xopt) sink.manifest["config"]["x"] = xval;
            rc = cmd_dist(what, which, grid, xval, bool(*xopt), sink);
        } else if (h->parsed()) {
            sink.manifest["config"] = {{"x", xval},
                                       {"grid", grid.empty() ? "0:6:601" : grid},
                                       {"threads", threads}};
            rc = cmd_hitting(xval, grid, sink);
        } else if (z->parsed()) {
            sink.manifest["config"] = {{"count", count}, {"threads", threads}};
            rc = cmd_zeros(count, sink);
        } else if (v->parsed()) {
            sink.manifest["config"] = {{"suite", suite},
                                       {"paths", paths},
                                       {"seed", seed},
                                       {"threads", threads}};
            rc = cmd_validate(suite, paths, seed, sink);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    try {
        sink.finish(wall);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return rc;
}
