// Command-line surface for the exact K_n distribution library.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "exkn/conjecture.hpp"
#include "exkn/eppf.hpp"
#include "exkn/k3_region.hpp"
#include "exkn/paintbox.hpp"
#include "exkn/sampler.hpp"
#include "exkn/two_param.hpp"

using namespace exkn;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verification verdicts still emit their full output before the nonzero exit.
int g_verify_exit = 0;

enum class ColType { Text, Rat };

// One tabular result: rationals serialized as "a/b" strings; rational columns
// get a lossy float twin rendered at the requested precision.
struct Output {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<ColType> types;
    std::vector<std::vector<std::string>> rows;

    void add_column(std::string name, ColType t) {
        columns.push_back(std::move(name));
        types.push_back(t);
    }
    void add_param(std::string k, std::string v) {
        params.emplace_back(std::move(k), std::move(v));
    }
};

std::string fmt_double(double v, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

double rat_to_double(const std::string& s) {
    Rational r;
    r.set_str(s, 10);
    r.canonicalize();
    return r.get_d();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_csv(const Output& o, int precision, std::ostream& os) {
    for (size_t c = 0; c < o.columns.size(); ++c) {
        if (c) os << ',';
        os << csv_escape(o.columns[c]);
        if (o.types[c] == ColType::Rat) os << ',' << csv_escape(o.columns[c] + "_float");
    }
    os << "\r\n";
    for (const auto& row : o.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << csv_escape(row[c]);
            if (o.types[c] == ColType::Rat)
                os << ',' << (row[c].empty() ? "" : fmt_double(rat_to_double(row[c]), precision));
        }
        os << "\n";
    }
}

void emit_json(const Output& o, int precision, std::ostream& os) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = o.command;
    json params = json::object();
    for (const auto& [k, v] : o.params) params[k] = v;
    doc["parameters"] = params;
    json lossy = json::array();
    for (size_t c = 0; c < o.columns.size(); ++c)
        if (o.types[c] == ColType::Rat) lossy.push_back(o.columns[c] + "_float");
    doc["lossy_columns"] = lossy;
    json rows = json::array();
    for (const auto& row : o.rows) {
        json r = json::object();
        for (size_t c = 0; c < row.size(); ++c) {
            r[o.columns[c]] = row[c];
            if (o.types[c] == ColType::Rat && !row[c].empty()) {
                double v = rat_to_double(row[c]);
                std::istringstream is(fmt_double(v, precision));
                double rounded;
                is >> rounded;
                r[o.columns[c] + "_float"] = rounded;
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
}

Rational flag_rational(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> flag_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(flag_rational(tok));
    if (out.empty()) throw UsageError("rational list: empty");
    return out;
}

std::string join_parts(const IntegerPartition& lambda) {
    std::string out;
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(lambda.parts[i]);
    }
    return out;
}

// Extreme-point counts s_m captured at each requested level of one
// incremental coefficient expansion.
std::map<unsigned, K3Region> regions_at_levels(const std::set<unsigned>& levels) {
    unsigned top = *levels.rbegin();
    if (*levels.begin() < 3 || top > kMaxExpandLevel)
        throw std::invalid_argument("levels must lie in [3, 45]");
    std::map<unsigned, K3Region> out;
    CoefficientMatrix cm = expand_coefficients(3, 3);
    while (true) {
        if (levels.count(cm.m)) {
            K3Region region;
            region.m = cm.m;
            std::vector<Point> pts;
            for (const auto& [lambda, coeffs] : cm.entries) {
                Rational c(cluster_count(lambda));
                K3Point kp{Rational(coeffs[0]) / c, Rational(coeffs[2]) / c};
                region.points.push_back(kp);
                pts.emplace_back(kp.q1, kp.q3);
            }
            for (const auto& v : hull2d(pts)) region.hull.push_back({v[0], v[1]});
            out.emplace(cm.m, std::move(region));
        }
        if (cm.m == top) break;
        cm = expand_one_level(cm);
    }
    return out;
}

void add_law_rows(Output& out, const LawOfK& law, const std::string& tag = "") {
    for (int k = 1; k <= law.n; ++k) {
        std::vector<std::string> row;
        if (!tag.empty()) row.push_back(tag);
        row.push_back(std::to_string(k));
        row.push_back(to_string(law.at(k)));
        out.rows.push_back(std::move(row));
    }
}

// ---- subcommand payloads -------------------------------------------------

Output run_vnm(int n, const std::string& m_flag) {
    Output out;
    out.command = "vnm";
    out.add_param("n", std::to_string(n));
    out.add_param("m", m_flag);
    VnmVector v;
    if (m_flag == "inf") {
        v = v_nm_infinity(n);
    } else {
        unsigned long m;
        try {
            size_t pos = 0;
            m = std::stoul(m_flag, &pos);
            if (pos != m_flag.size()) throw std::invalid_argument(m_flag);
        } catch (const std::exception&) {
            throw UsageError("vnm: --m must be a positive integer or 'inf'");
        }
        v = v_nm(n, static_cast<unsigned>(m));
    }
    out.add_column("k", ColType::Text);
    out.add_column("p", ColType::Rat);
    add_law_rows(out, v.law);
    return out;
}

Output run_law(const std::string& atoms, int n) {
    Output out;
    out.command = "law";
    out.add_param("atoms", atoms);
    out.add_param("n", std::to_string(n));
    RankedDiscreteDistribution p(flag_rational_list(atoms));
    out.add_param("dust", to_string(p.dust()));
    out.add_column("k", ColType::Text);
    out.add_column("p", ColType::Rat);
    add_law_rows(out, law_of_kn(p, n));
    return out;
}

Output run_region_check(const std::string& q1s, const std::string& q3s) {
    Output out;
    out.command = "region-check";
    Rational q1 = flag_rational(q1s), q3 = flag_rational(q3s);
    out.add_param("q1", to_string(q1));
    out.add_param("q3", to_string(q3));
    auto check = region_check({q1, q3});
    out.add_column("inside", ColType::Text);
    out.add_column("segments", ColType::Text);
    out.add_column("reason", ColType::Text);
    std::string segs;
    for (size_t i = 0; i < check.segments.size(); ++i) {
        if (i) segs += ';';
        segs += std::to_string(check.segments[i]);
    }
    out.rows.push_back({check.inside ? "true" : "false", segs, check.reason});
    return out;
}

Output run_verify_extremes(int n, unsigned m_max) {
    Output out;
    out.command = "verify-extremes";
    out.add_param("n", std::to_string(n));
    out.add_param("m_max", std::to_string(m_max));
    auto report = verify_extremes(n, m_max);
    out.add_param("seconds", fmt_double(report.seconds, 6));
    out.add_param("all_extreme", report.all_extreme ? "true" : "false");
    out.add_column("m", ColType::Text);
    out.add_column("extreme", ColType::Text);
    for (const auto& v : report.verdicts)
        out.rows.push_back({std::to_string(v.m), v.extreme ? "true" : "false"});
    if (!report.all_extreme) g_verify_exit = kExitVerify;
    return out;
}

Output run_hull_member(const std::string& law_flag, int n, unsigned m_max) {
    Output out;
    out.command = "hull-member";
    out.add_param("law", law_flag);
    out.add_param("n", std::to_string(n));
    out.add_param("m_max", std::to_string(m_max));
    out.add_param("verdict_type", "evidence (finite truncation of the reference family)");
    LawOfK law(n, flag_rational_list(law_flag));
    bool member = hull_membership(law, n, m_max);
    out.add_column("member", ColType::Text);
    out.rows.push_back({member ? "true" : "false"});
    if (!member) g_verify_exit = kExitVerify;
    return out;
}

Output run_sn_table(unsigned m_min, unsigned m_max) {
    Output out;
    out.command = "sn-table";
    out.add_param("m_min", std::to_string(m_min));
    out.add_param("m_max", std::to_string(m_max));
    if (m_min > m_max) throw std::invalid_argument("sn-table: m_min > m_max");
    std::set<unsigned> levels;
    for (unsigned m = m_min; m <= m_max; ++m) levels.insert(m);
    out.add_column("m", ColType::Text);
    out.add_column("s_m", ColType::Text);
    for (const auto& [m, region] : regions_at_levels(levels))
        out.rows.push_back({std::to_string(m), std::to_string(region.hull.size())});
    return out;
}

Output run_sharp_bound(int n) {
    Output out;
    out.command = "sharp-bound";
    out.add_param("n", std::to_string(n));
    auto bound = sharp_bound_kn(n);
    out.add_column("value", ColType::Rat);
    out.add_column("achieved_by", ColType::Text);
    out.rows.push_back({to_string(bound.value), join_parts(bound.achieved_by)});
    return out;
}

Output run_two_param(const std::string& as, const std::string& ts) {
    Output out;
    out.command = "two-param";
    auto params = ParamsAT::make(flag_rational(as), flag_rational(ts));
    out.add_param("alpha", to_string(params.alpha));
    out.add_param("theta", to_string(params.theta));
    out.add_param("regime",
                  params.regime == ParamsAT::Regime::Main ? "main" : "exceptional");
    auto q = k3_law_at(params);
    out.add_column("q1", ColType::Rat);
    out.add_column("q2", ColType::Rat);
    out.add_column("q3", ColType::Rat);
    out.add_column("m_ray", ColType::Rat);
    out.add_column("h", ColType::Rat);
    std::string m_ray;
    if (params.regime == ParamsAT::Regime::Main)
        m_ray = to_string(params.alpha / (1 + params.theta));
    out.rows.push_back({to_string(q[0]), to_string(q[1]), to_string(q[2]), m_ray,
                        to_string(h_curve(q[0], q[2]))});
    return out;
}

Output run_dual(const std::string& as, const std::string& ts) {
    Output out;
    out.command = "dual";
    auto params = ParamsAT::make(flag_rational(as), flag_rational(ts));
    auto dual = dual_params(params);
    out.add_param("alpha", to_string(params.alpha));
    out.add_param("theta", to_string(params.theta));
    out.add_param("alpha_star", to_string(dual.alpha));
    out.add_param("theta_star", to_string(dual.theta));
    out.add_column("role", ColType::Text);
    out.add_column("alpha", ColType::Rat);
    out.add_column("theta", ColType::Rat);
    out.add_column("q1", ColType::Rat);
    out.add_column("q2", ColType::Rat);
    out.add_column("q3", ColType::Rat);
    for (const auto& [role, p] :
         {std::pair<std::string, ParamsAT>{"primal", params}, {"dual", dual}}) {
        auto q = k3_law_at(p);
        out.rows.push_back({role, to_string(p.alpha), to_string(p.theta),
                            to_string(q[0]), to_string(q[1]), to_string(q[2])});
    }
    return out;
}

Output run_inverse(const std::string& q1s, const std::string& q3s) {
    Output out;
    out.command = "inverse";
    Rational q1 = flag_rational(q1s), q3 = flag_rational(q3s);
    out.add_param("q1", to_string(q1));
    out.add_param("q3", to_string(q3));
    auto params = inverse_map(q1, q3);
    out.add_column("alpha", ColType::Rat);
    out.add_column("theta", ColType::Rat);
    out.rows.push_back({to_string(params.alpha), to_string(params.theta)});
    return out;
}

Output run_sample(const std::string& model, int n, long reps, std::uint64_t seed,
                  const std::string& as, const std::string& ts,
                  const std::string& atoms, unsigned m) {
    SampleReport report;
    if (model == "crp") {
        if (as.empty() || ts.empty())
            throw UsageError("sample crp: --alpha and --theta required");
        report = sample_crp(ParamsAT::make(flag_rational(as), flag_rational(ts)), n,
                            reps, seed);
    } else if (model == "paintbox") {
        if (atoms.empty()) throw UsageError("sample paintbox: --atoms required");
        report = sample_paintbox(RankedDiscreteDistribution(flag_rational_list(atoms)),
                                 n, reps, seed);
    } else if (model == "dirichlet") {
        if (as.empty()) throw UsageError("sample dirichlet: --alpha required");
        // Flag carries the (negative) alpha of the exceptional ray.
        report = sample_dirichlet_uniform(m, -flag_rational(as), n, reps, seed);
    } else {
        throw UsageError("sample: unknown model '" + model + "'");
    }

    Output out;
    out.command = "sample";
    out.add_param("model", model);
    out.add_param("n", std::to_string(report.n));
    out.add_param("reps", std::to_string(report.reps));
    out.add_param("seed", std::to_string(report.seed));
    out.add_param("rng", report.rng);
    out.add_param("max_abs_deviation", to_string(report.max_abs_deviation));
    out.add_param("sigma_bound", to_string(report.sigma_bound));
    out.add_param("within_tolerance", report.within_tolerance ? "true" : "false");
    out.add_column("k", ColType::Text);
    out.add_column("exact", ColType::Rat);
    out.add_column("empirical", ColType::Rat);
    out.add_column("abs_deviation", ColType::Rat);
    for (int k = 1; k <= report.n; ++k) {
        Rational dev = abs(report.empirical[k - 1] - report.exact.at(k));
        out.rows.push_back({std::to_string(k), to_string(report.exact.at(k)),
                            to_string(report.empirical[k - 1]), to_string(dev)});
    }
    if (!report.within_tolerance) g_verify_exit = kExitVerify;
    return out;
}

Output run_figure(int id) {
    Output out;
    out.command = "figure";
    out.add_param("id", std::to_string(id));
    switch (id) {
        case 1: {
            // Lower-boundary vertices v_N with the slope of [v_N, v_{N+1}].
            out.add_column("N", ColType::Text);
            out.add_column("q1", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            out.add_column("segment_slope", ColType::Rat);
            for (unsigned N = 1; N <= 20; ++N) {
                auto v = v_point(N);
                out.rows.push_back({std::to_string(N), to_string(v.q1),
                                    to_string(v.q3), to_string(segment_slope(N))});
            }
            auto v = v_point_infinity();
            out.rows.push_back({"inf", to_string(v.q1), to_string(v.q3), ""});
            break;
        }
        case 2: {
            // Paintbox image clouds: barycentric lattice of step 1/40 on the
            // simplex of m-atom distributions, m = 3, 4, 5.
            out.add_param("lattice_step", "1/40");
            out.add_column("m", ColType::Text);
            out.add_column("q1", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            constexpr unsigned kSteps = 40;
            for (unsigned m : {3u, 4u, 5u}) {
                std::vector<unsigned> parts;
                auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
                    if (parts.size() == m || remaining == 0) {
                        if (remaining != 0) return;
                        std::vector<Rational> atoms;
                        for (unsigned p : parts) atoms.push_back(make_rational(p, kSteps));
                        auto q = q3_closed(RankedDiscreteDistribution(std::move(atoms)));
                        out.rows.push_back({std::to_string(m), to_string(q[0]),
                                            to_string(q[2])});
                        return;
                    }
                    for (unsigned p = std::min(max_part, remaining); p >= 1; --p) {
                        parts.push_back(p);
                        self(self, remaining - p, p);
                        parts.pop_back();
                    }
                };
                rec(rec, kSteps, kSteps);
            }
            break;
        }
        case 3: {
            out.add_column("m", ColType::Text);
            out.add_column("vertex", ColType::Text);
            out.add_column("q1", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            for (const auto& [m, region] :
                 regions_at_levels({4, 5, 7, 12, 19, 41})) {
                for (size_t i = 0; i < region.hull.size(); ++i)
                    out.rows.push_back({std::to_string(m), std::to_string(i),
                                        to_string(region.hull[i].q1),
                                        to_string(region.hull[i].q3)});
            }
            break;
        }
        case 5: {
            // Ewens (alpha = 0) K_3 probabilities against theta.
            out.add_column("theta", ColType::Rat);
            out.add_column("q1", ColType::Rat);
            out.add_column("q2", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            for (int j = 1; j <= 100; ++j) {
                Rational theta = make_rational(j, 10);
                auto q = k3_law_at(ParamsAT::make(Rational(0), theta));
                out.rows.push_back({to_string(theta), to_string(q[0]), to_string(q[1]),
                                    to_string(q[2])});
            }
            break;
        }
        case 6: {
            out.add_column("alpha", ColType::Rat);
            out.add_column("theta", ColType::Rat);
            out.add_column("q2", ColType::Rat);
            for (int i = 0; i < 20; ++i) {
                Rational alpha = make_rational(i, 20);
                for (int j = 1; j <= 60; ++j) {
                    Rational theta = -alpha + make_rational(j, 10);
                    auto q = k3_law_at(ParamsAT::make(alpha, theta));
                    out.rows.push_back(
                        {to_string(alpha), to_string(theta), to_string(q[1])});
                }
            }
            break;
        }
        case 7: {
            // Boundaries of the bijection domain {h >= 0, q1 + q3 < 1}.
            out.add_column("boundary", ColType::Text);
            out.add_column("q1", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            for (int j = 1; j <= 400; ++j) {
                auto q = k3_law_at(ParamsAT::make(Rational(0), make_rational(j, 20)));
                out.rows.push_back({"h=0", to_string(q[0]), to_string(q[2])});
            }
            for (int j = 0; j <= 40; ++j) {
                Rational q1 = make_rational(j, 40);
                out.rows.push_back({"q1+q3=1", to_string(q1), to_string(1 - q1)});
            }
            break;
        }
        case 8: {
            out.add_column("series", ColType::Text);
            out.add_column("q1", ColType::Rat);
            out.add_column("q3", ColType::Rat);
            for (unsigned m = 2; m <= 6; ++m)
                for (int j = 1; j <= 80; ++j) {
                    auto q = dirichlet_ray_law(m, make_rational(-j, 10));
                    out.rows.push_back({"m=" + std::to_string(m), to_string(q[0]),
                                        to_string(q[2])});
                }
            for (int j = 1; j <= 200; ++j) {
                auto q = k3_law_at(ParamsAT::make(Rational(0), make_rational(j, 10)));
                out.rows.push_back({"h=0", to_string(q[0]), to_string(q[2])});
            }
            break;
        }
        default:
            throw UsageError("figure: id must be one of 1,2,3,5,6,7,8");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distributions of the number of distinct values K_n"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--precision accepted after the subcommand

    std::string format = "json";
    int precision = 6;
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", precision, "Digits for the lossy float columns")
        ->check(CLI::Range(1, 17));

    int n = 3;
    std::string m_flag = "inf", atoms, q1s, q3s, alpha_s, theta_s, law_flag, model;
    unsigned m_max = 30, m_min = 3, m_uint = 2;
    long reps = 100000;
    std::uint64_t seed = 0;
    int figure_id = 1;

    auto* vnm = app.add_subcommand("vnm", "Law of K_n under uniform sampling from m values");
    vnm->add_option("--n", n)->required();
    vnm->add_option("--m", m_flag, "positive integer or 'inf'")->required();

    auto* law = app.add_subcommand("law", "Law of K_n of a paintbox");
    law->add_option("--atoms", atoms, "comma-separated rationals")->required();
    law->add_option("--n", n)->required();

    auto* region = app.add_subcommand("region-check", "Membership in the achievable (q1,q3) region");
    region->add_option("--q1", q1s)->required();
    region->add_option("--q3", q3s)->required();

    auto* extremes = app.add_subcommand("verify-extremes", "Extremality of every v_{n,m}, m <= m-max");
    extremes->add_option("--n", n)->required();
    extremes->add_option("--m-max", m_max)->required();

    auto* hull = app.add_subcommand("hull-member", "Evidence-grade hull membership of a law");
    hull->add_option("--law", law_flag, "comma-separated probabilities")->required();
    hull->add_option("--n", n)->required();
    hull->add_option("--m-max", m_max);

    auto* sn = app.add_subcommand("sn-table", "Extreme-point counts s_m of the level-m regions");
    sn->add_option("--m-min", m_min);
    sn->add_option("--m-max", m_max)->required();

    auto* sharp = app.add_subcommand("sharp-bound", "Sharp bound on P(K_n = n-1) one level up");
    sharp->add_option("--n", n)->required();

    auto* two = app.add_subcommand("two-param", "K_3 law and curve data of an (alpha,theta) pair");
    two->add_option("--alpha", alpha_s)->required();
    two->add_option("--theta", theta_s)->required();

    auto* dual = app.add_subcommand("dual", "The q1/q3-swapping dual parameter pair");
    dual->add_option("--alpha", alpha_s)->required();
    dual->add_option("--theta", theta_s)->required();

    auto* inverse = app.add_subcommand("inverse", "Parameters realizing a given (q1,q3)");
    inverse->add_option("--q1", q1s)->required();
    inverse->add_option("--q3", q3s)->required();

    auto* sample = app.add_subcommand("sample", "Monte Carlo check against the exact law");
    sample->add_option("--model", model, "crp|paintbox|dirichlet")->required();
    sample->add_option("--n", n);
    sample->add_option("--reps", reps)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--alpha", alpha_s);
    sample->add_option("--theta", theta_s);
    sample->add_option("--atoms", atoms);
    sample->add_option("--m", m_uint);

    auto* figure = app.add_subcommand("figure", "Data series behind a figure");
    figure->add_option("--id", figure_id)->required();
    figure->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Output out;
        if (*vnm) out = run_vnm(n, m_flag);
        else if (*law) out = run_law(atoms, n);
        else if (*region) out = run_region_check(q1s, q3s);
        else if (*extremes) out = run_verify_extremes(n, m_max);
        else if (*hull) out = run_hull_member(law_flag, n, m_max);
        else if (*sn) out = run_sn_table(m_min, m_max);
        else if (*sharp) out = run_sharp_bound(n);
        else if (*two) out = run_two_param(alpha_s, theta_s);
        else if (*dual) out = run_dual(alpha_s, theta_s);
        else if (*inverse) out = run_inverse(q1s, q3s);
        else if (*sample) out = run_sample(model, n, reps, seed, alpha_s, theta_s, atoms, m_uint);
        else if (*figure) out = run_figure(figure_id);

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::runtime_error("cannot open output file: " + out_path);
            os = &file;
        }
        if (format == "csv")
            emit_csv(out, precision, *os);
        else
            emit_json(out, precision, *os);
        if (g_verify_exit != 0)
            std::cerr << "error: verification: verdict negative (exit "
                      << g_verify_exit << ")\n";
        return g_verify_exit;
    } catch (const UsageError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
