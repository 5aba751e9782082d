#include "curvemod/cli.hpp"

#include "curvemod/cubic.hpp"
#include "curvemod/divisor.hpp"
#include "curvemod/error.hpp"
#include "curvemod/factor.hpp"
#include "curvemod/flex.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/polyio.hpp"
#include "curvemod/projective.hpp"
#include "curvemod/quadext.hpp"
#include "curvemod/realcurves.hpp"
#include "curvemod/singularity.hpp"
#include "curvemod/stabilizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace curvemod {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Report {
    std::string command;
    std::string input;
    ordered_json result = ordered_json::object();
    bool exact = true;
};

std::string decimal(const Rat& r, int precBits)
{
    mpf_class f(r, static_cast<mp_bitcnt_t>(precBits));
    std::ostringstream os;
    int digits = std::max(6, static_cast<int>(precBits * 0.30103));
    os << std::setprecision(digits) << f;
    return os.str();
}

ordered_json cplx(std::complex<double> z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json sphere_json(const SpherePoint& p) { return p.inf ? ordered_json("inf") : cplx(p.z); }

template <class K>
ordered_json mat_json(const Mat3<K>& m)
{
    ordered_json a = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        a.push_back(r);
    }
    return a;
}

ordered_json rmat_json(const RMat& m)
{
    ordered_json a = ordered_json::array();
    for (int i = 0; i < m.n; ++i) {
        ordered_json r = ordered_json::array();
        for (int j = 0; j < m.n; ++j) r.push_back(m(i, j));
        a.push_back(r);
    }
    return a;
}

ordered_json interval_json(const RatInterval& iv, int prec)
{
    return {{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}, {"loDecimal", decimal(iv.lo, prec)},
            {"hiDecimal", decimal(iv.hi, prec)}};
}

RMat parse_matrix(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Err::Parse, std::string("matrix must be a JSON array of rows: ") + e.what());
    }
    std::vector<std::vector<double>> rows;
    try {
        for (const auto& r : j) rows.push_back(r.get<std::vector<double>>());
    } catch (const json::exception& e) {
        fail(Err::Parse, std::string("matrix entries must be numbers: ") + e.what());
    }
    size_t n = rows.size();
    if (n != 2 && n != 3) fail(Err::BadArgument, "only 2x2 and 3x3 matrices are supported");
    for (const auto& r : rows)
        if (r.size() != n) fail(Err::BadArgument, "matrix must be square");
    return RMat::from_rows(rows);
}

std::array<Num, 3> parse_point(const std::string& text)
{
    std::string s = text;
    for (char& c : s)
        if (c == ':' || c == '(' || c == ')') c = c == ':' ? ',' : ' ';
    std::array<Num, 3> p;
    std::stringstream ss(s);
    std::string part;
    int k = 0;
    while (std::getline(ss, part, ',')) {
        if (k == 3) fail(Err::Parse, "a point has three coordinates: " + text);
        p[k++] = parse_quadext(part).to_num();
    }
    if (k != 3) fail(Err::Parse, "a point has three coordinates: " + text);
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) fail(Err::ZeroInput, "the zero vector is not a point");
    return p;
}

TreeOfSpheres parse_tree(const std::string& text)
{
    TreeOfSpheres t;
    try {
        json j = json::parse(text);
        t.spheres = j.at("spheres").get<int>();
        for (const auto& n : j.value("nodes", json::array()))
            t.nodes.push_back({n.at("i").get<int>(), n.at("j").get<int>(), parse_p1(n.at("a").get<std::string>()),
                               parse_p1(n.at("b").get<std::string>())});
        for (const auto& m : j.value("marks", json::array()))
            t.marks.push_back({m.at("sphere").get<int>(), parse_p1(m.at("p").get<std::string>())});
    } catch (const json::exception& e) {
        fail(Err::Parse, std::string("malformed tree: ") + e.what());
    }
    return t;
}

ordered_json flex_json(const VirtualFlexSet& v)
{
    ordered_json entries = ordered_json::array();
    for (const auto& c : v.entries) {
        ordered_json e = {{"point", point_string(c.p)}, {"phi", c.mult}, {"conjugates", c.conjugates}};
        if (!c.in_tower()) {
            ordered_json ap = ordered_json::array();
            for (const auto& q : c.approx) ap.push_back({cplx(q[0]), cplx(q[1]), cplx(q[2])});
            e["approx"] = ap;
        }
        entries.push_back(e);
    }
    return {{"n", v.n}, {"entries", entries}, {"total", v.total()}};
}

bool all_in_tower(const VirtualFlexSet& v)
{
    for (const auto& c : v.entries)
        if (!c.in_tower()) return false;
    return true;
}

void measures_json(ordered_json& r, const Properness& p)
{
    r["pMax"] = p.measures.pMax.get_str();
    r["LMax"] = p.measures.LMax.get_str();
    r["witnessPoint"] = p.measures.witnessPoint;
    r["witnessLine"] = p.measures.witnessLine;
    r["proper"] = p.proper;
    r["result"] = p.proper ? "Proper" : "Inconclusive";
    r["kappaInterval"] = p.proper ? ordered_json::array({p.kappaLo.get_str(), p.kappaHi.get_str()}) : ordered_json();
}

Reduction reduce_auto(const Form& phi, const std::string& flexText, std::string& flexUsed)
{
    if (!flexText.empty()) {
        auto p = parse_point(flexText);
        flexUsed = point_string(normalize_point(p));
        return reduce_weierstrass(phi, p);
    }
    auto flexes = find_flexes_cubic(phi);
    // prefer rational flexes, then quadratic ones, simplest coordinates first
    auto zeros = [](const PointClass& c) {
        return c.p[0].is_zero() + c.p[1].is_zero() + c.p[2].is_zero();
    };
    std::stable_sort(flexes.begin(), flexes.end(), [&](const PointClass& a, const PointClass& b) {
        if (zeros(a) != zeros(b)) return zeros(a) > zeros(b);
        return point_string(a.p).size() < point_string(b.p).size();
    });
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& c : flexes) {
            if ((pass == 0) != (c.conjugates == 1) || !c.in_tower()) continue;
            try {
                auto r = reduce_weierstrass(phi, c.p);
                flexUsed = point_string(c.p);
                return r;
            } catch (const Error& e) {
                if (e.code() != Err::NotAFlex) throw;
            }
        }
    fail(Err::NotAFlex, "no smooth flex with coordinates in a quadratic field");
}

ordered_json divisor_points(const NumDivisor& d)
{
    ordered_json a = ordered_json::array();
    for (size_t i = 0; i < d.pts.size(); ++i) a.push_back({{"point", sphere_json(d.pts[i])}, {"mult", d.mult[i]}});
    return a;
}

void print_text(const Report& r, std::ostream& out)
{
    out << "command: " << r.command << "\n";
    if (!r.input.empty()) out << "input: " << r.input << "\n";
    for (const auto& [k, v] : r.result.items())
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int exit_code(Err e)
{
    return e == Err::ExtensionTooLarge || e == Err::NoConvergence ? 3 : 2;
}

ordered_json error_json(const std::string& command, const std::string& code, const std::string& msg)
{
    return {{"schema", 1}, {"command", command}, {"error", {{"code", code}, {"message", msg}}}};
}

int run_batch(const std::string& file, int jobs, std::ostream& out, std::ostream& err)
{
    std::ifstream in(file);
    if (!in) {
        err << "cannot open " << file << "\n";
        out << error_json("batch", "BadArgument", "cannot open " + file).dump() << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        if (!l.empty() && l[0] != '#') lines.push_back(l);
    std::vector<std::string> outputs(lines.size());
    std::vector<int> codes(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < lines.size();) {
            std::ostringstream o, e;
            auto args = split_command_line(lines[i]);
            if (!args.empty() && args[0] == "batch") {
                codes[i] = 2;
                o << error_json("batch", "BadArgument", "nested batch").dump();
            } else {
                codes[i] = run(args, o, e);
            }
            outputs[i] = o.str();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    ordered_json all = ordered_json::array();
    int worst = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        ordered_json item = {{"line", lines[i]}, {"exit", codes[i]}};
        try {
            item["output"] = ordered_json::parse(outputs[i]);
        } catch (const json::exception&) {
            item["output"] = outputs[i];
        }
        all.push_back(item);
        worst = std::max(worst, codes[i]);
    }
    out << ordered_json{{"schema", 1}, {"command", "batch"}, {"results", all}}.dump(2) << "\n";
    return worst;
}

} // namespace

std::vector<std::string> split_command_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            have = true;
        } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (have) out.push_back(cur);
            cur.clear();
            have = false;
        } else {
            cur += c;
            have = true;
        }
    }
    if (quoted) fail(Err::Parse, "unterminated quote in: " + line);
    if (have) out.push_back(cur);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"curvemod: moduli of plane curves and divisors on the projective line", "curvemod"};
    app.require_subcommand(1);
    app.fallthrough(); // inherited, so global options may follow the subcommand
    std::string format = "json";
    int prec = 160;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--prec", prec, "binary digits for decimal renderings of certified intervals")
        ->check(CLI::Range(24, 4096));

    Report rep;
    std::function<void()> action;
    auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
        return parent->add_subcommand(name, help);
    };
    auto bind = [&](CLI::App* s, std::string cmd, std::function<void()> f) {
        s->callback([&, cmd, f] {
            rep.command = cmd;
            action = f;
        });
    };

    std::string text, text2, text3, text4, flexText;
    int sphere = 0, degree = 0, maxN = 7, maxIter = 10000, primeP = 0, batchJobs = 1;
    double tol = 1e-6, eps = 0.1;
    bool exactMode = false;

    // divisor
    CLI::App* div = app.add_subcommand("divisor", "divisors on the projective line");
    div->require_subcommand(1);
    {
        auto* s = leaf(div, "cross-ratio", "cross-ratio of four points");
        s->add_option("x", text)->required();
        s->add_option("y", text2)->required();
        s->add_option("z", text3)->required();
        s->add_option("w", text4)->required();
        bind(s, "divisor cross-ratio", [&] {
            rep.input = text + ", " + text2 + ", " + text3 + ", " + text4;
            rep.result["rho"] =
                cross_ratio(parse_p1(text), parse_p1(text2), parse_p1(text3), parse_p1(text4)).str();
        });
    }
    {
        auto* s = leaf(div, "orbit", "the cross-ratio values under reordering");
        s->add_option("rho", text)->required();
        bind(s, "divisor orbit", [&] {
            P1 rho = parse_p1(text);
            rep.input = rho.str();
            ordered_json o = ordered_json::array();
            for (const auto& v : cross_ratio_orbit(rho)) o.push_back(v.str());
            rep.result["orbit"] = o;
            rep.result["J"] = j_of_rho(rho).str();
        });
    }
    {
        auto* s = leaf(div, "j", "shape invariant of four distinct points");
        s->add_option("divisor", text)->required();
        bind(s, "divisor j", [&] {
            Divisor1 d = parse_divisor(text);
            rep.input = d.str();
            if (d.distinct() != 4 || d.degree() != 4)
                fail(Err::BadArgument, "J needs four distinct points of multiplicity one");
            const auto& p = d.points;
            rep.result["J"] = shape_invariant(p[0].first, p[1].first, p[2].first, p[3].first).str();
        });
    }
    {
        auto* s = leaf(div, "classify", "classify a degree four divisor");
        s->add_option("divisor", text)->required();
        bind(s, "divisor classify", [&] {
            Divisor1 d = parse_divisor(text);
            rep.input = d.str();
            auto c = classify_deg4(d);
            rep.result["tag"] = tag_name(c.tag);
            rep.result["stabilizerOrder"] = c.stabilizerOrder;
            rep.result["ramification"] = c.ramification;
            rep.result["J"] = c.J.str();
        });
    }
    {
        auto* s = leaf(div, "membership", "where the divisor lies relative to the moduli space");
        s->add_option("divisor", text)->required();
        bind(s, "divisor membership", [&] {
            Divisor1 d = parse_divisor(text);
            rep.input = d.str();
            rep.result["membership"] = membership_name(moduli_membership(d));
            rep.result["degree"] = d.degree();
            rep.result["maxMult"] = d.max_mult();
        });
    }
    {
        auto* s = leaf(div, "theta", "smallest spherical diameter of a heavy subset");
        s->add_option("divisor", text)->required();
        bind(s, "divisor theta", [&] {
            Divisor1 d = parse_divisor(text);
            rep.input = d.str();
            rep.exact = false;
            NumDivisor nd = to_numeric(d);
            rep.result["theta"] = theta(nd);
            ordered_json w = ordered_json::array();
            for (int i : theta_witness(nd)) w.push_back(d.points[i].first.str());
            rep.result["witness"] = w;
        });
    }
    {
        auto* s = leaf(div, "normalize", "move the divisor until theta reaches pi/4");
        s->add_option("divisor", text)->required();
        s->add_option("--max-iter", maxIter);
        s->add_option("--tol", tol);
        bind(s, "divisor normalize", [&] {
            Divisor1 d = parse_divisor(text);
            rep.input = d.str();
            rep.exact = false;
            auto r = normalize_theta(d, ThetaOptions{maxIter, tol});
            rep.result["theta"] = r.theta;
            rep.result["iterations"] = r.iterations;
            rep.result["mobius"] = {{"a", cplx(r.g.a)}, {"b", cplx(r.g.b)}, {"c", cplx(r.g.c)}, {"d", cplx(r.g.d)}};
            rep.result["image"] = divisor_points(r.image);
        });
    }

    // curve
    CLI::App* cur = app.add_subcommand("curve", "plane curves given by a homogeneous form");
    cur->require_subcommand(1);
    auto curve_leaf = [&](const char* name, const char* help, std::function<void(const Form&)> f) {
        auto* s = leaf(cur, name, help);
        s->add_option("form", text)->required();
        return std::make_pair(s, [&, f] {
            Form phi = parse_form(text);
            rep.input = to_string(phi);
            f(phi);
        });
    };
    {
        auto [s, f] = curve_leaf("factor", "irreducible components over Q", [&](const Form& phi) {
            Cycle c = factor_rational(phi);
            rep.result["unit"] = c.unit.get_str();
            ordered_json comps = ordered_json::array();
            for (const auto& [g, m] : c.components) comps.push_back({{"form", to_string(g)}, {"mult", m}});
            rep.result["components"] = comps;
            rep.result["degree"] = c.degree();
        });
        bind(s, "curve factor", f);
    }
    {
        auto [s, f] = curve_leaf("flexes", "virtual flex points with multiplicities", [&](const Form& phi) {
            auto v = virtual_flexes(phi, exactMode ? Mode::Exact : Mode::Auto);
            rep.exact = all_in_tower(v);
            ordered_json fj = flex_json(v);
            for (auto& [k, x] : fj.items()) rep.result[k] = x;
            Properness p;
            p.measures = flex_measures(v);
            p.kappaLo = p.measures.pMax;
            p.kappaHi = 1 - p.measures.LMax;
            p.proper = p.measures.pMax + p.measures.LMax < 1;
            measures_json(rep.result, p);
        });
        s->add_flag("--exact", exactMode, "fail instead of isolating points numerically");
        bind(s, "curve flexes", f);
    }
    {
        auto [s, f] = curve_leaf("properness", "sufficient test for local properness", [&](const Form& phi) {
            auto v = virtual_flexes(phi, exactMode ? Mode::Exact : Mode::Auto);
            rep.exact = all_in_tower(v);
            Properness p;
            p.measures = flex_measures(v);
            p.kappaLo = p.measures.pMax;
            p.kappaHi = 1 - p.measures.LMax;
            p.proper = p.measures.pMax + p.measures.LMax < 1;
            rep.result["n"] = v.n;
            rep.result["total"] = v.total();
            measures_json(rep.result, p);
            rep.result["numericLines"] = p.measures.numericLines;
        });
        s->add_flag("--exact", exactMode, "fail instead of isolating points numerically");
        bind(s, "curve properness", f);
    }
    {
        auto [s, f] = curve_leaf("singularities", "singular points with local invariants", [&](const Form& phi) {
            ordered_json pts = ordered_json::array();
            for (const auto& lp : singular_points(phi)) {
                auto r = analyze_point(chart_poly(phi, lp.chart), lp.coords);
                pts.push_back({{"point", point_string(lp.proj)},
                               {"conjugates", lp.conjugates},
                               {"mu", r.mu},
                               {"mult", r.mult},
                               {"branches", r.branches},
                               {"genus", r.genus},
                               {"genusPlus", r.genusPlus}});
            }
            rep.result["points"] = pts;
        });
        bind(s, "curve singularities", f);
    }
    {
        auto [s, f] = curve_leaf("genus", "geometric genus and local genus sums", [&](const Form& phi) {
            auto g = geometric_genus(phi);
            rep.result["degree"] = g.degree;
            rep.result["components"] = g.componentCount;
            rep.result["geomGenus"] = g.geomGenus;
            rep.result["sumGenusPlus"] = g.sumGenusPlus();
            ordered_json pts = ordered_json::array();
            for (const auto& [lp, r] : g.perPoint)
                pts.push_back({{"point", point_string(lp.proj)},
                               {"conjugates", lp.conjugates},
                               {"genus", r.genus},
                               {"genusPlus", r.genusPlus}});
            rep.result["points"] = pts;
        });
        bind(s, "curve genus", f);
    }
    {
        auto [s, f] = curve_leaf("genus-properness", "genus criterion for properness", [&](const Form& phi) {
            auto g = genus_properness(phi);
            rep.result["proper"] = g.proper;
            rep.result["maxGenus"] = g.maxGenus;
            rep.result["maxGenusPlus"] = g.maxGenusPlus;
            rep.result["bound"] = g.bound;
            rep.result["condition1"] = g.condition1;
            rep.result["condition2"] = g.condition2 ? ordered_json(*g.condition2) : ordered_json();
            rep.result["separatingPoint"] = g.separatingPoint;
            rep.result["containsLine"] = g.containsLine;
            rep.result["lineCondition"] = g.lineCondition ? ordered_json(*g.lineCondition) : ordered_json();
            rep.result["note"] = g.note;
        });
        bind(s, "curve genus-properness", f);
    }
    {
        auto [s, f] = curve_leaf("stabilizer", "Lie algebra of the stabilizer", [&](const Form& phi) {
            auto r = stab_lie(phi);
            rep.result["lieDim"] = r.lieDim;
            rep.result["finite"] = r.lieDim == 0;
            ordered_json basis = ordered_json::array(), types = ordered_json::array();
            for (const auto& a : r.basis) {
                basis.push_back(mat_json(a));
                try {
                    types.push_back(one_param_type(a).str());
                } catch (const Error& e) {
                    types.push_back(err_name(e.code()));
                }
            }
            rep.result["basis"] = basis;
            rep.result["types"] = types;
        });
        bind(s, "curve stabilizer", f);
    }
    {
        auto [s, f] = curve_leaf("reduce", "Weierstrass normal form of a cubic", [&](const Form& phi) {
            std::string used;
            auto r = reduce_auto(phi, flexText, used);
            rep.result["flex"] = used;
            rep.result["a"] = r.w.a.str();
            rep.result["b"] = r.w.b.str();
            rep.result["g"] = mat_json(r.g);
            if (!r.w.infinite_stabilizer()) {
                auto m = m3_point(r.w);
                rep.result["m3"] = {m.first.str(), m.second.str()};
                rep.result["J"] = cubic_j(r.w).str();
            }
        });
        s->add_option("--flex", flexText, "flex point as x,y,z");
        bind(s, "curve reduce", f);
    }
    {
        auto [s, f] = curve_leaf("flex-slope", "slope invariant of a real cubic", [&](const Form& phi) {
            std::string used;
            auto r = reduce_auto(phi, flexText, used);
            auto fs = flex_slope(r.w);
            rep.result["flex"] = used;
            rep.result["a"] = r.w.a.str();
            rep.result["b"] = r.w.b.str();
            rep.result["s"] = interval_json(fs.s, prec);
            rep.result["singularRepresentative"] = fs.singularRepresentative;
            rep.result["flexX"] = interval_json(fs.flexX, prec);
        });
        s->add_option("--flex", flexText, "flex point as x,y,z");
        bind(s, "curve flex-slope", f);
    }
    {
        auto [s, f] = curve_leaf("classify-real", "real type of a cubic", [&](const Form& phi) {
            std::string used;
            auto r = reduce_auto(phi, flexText, used);
            rep.result["flex"] = used;
            rep.result["a"] = r.w.a.str();
            rep.result["b"] = r.w.b.str();
            rep.result["class"] = real_class_name(classify_real_cubic(r.w));
        });
        s->add_option("--flex", flexText, "flex point as x,y,z");
        bind(s, "curve classify-real", f);
    }

    // tree
    CLI::App* tree = app.add_subcommand("tree", "trees of marked spheres");
    tree->require_subcommand(1);
    {
        auto* s = leaf(tree, "retract", "push all marks onto one sphere");
        s->add_option("tree", text, "JSON {spheres, nodes: [{i, j, a, b}], marks: [{sphere, p}]}")->required();
        s->add_option("--sphere", sphere)->required();
        bind(s, "tree retract", [&] {
            auto t = parse_tree(text);
            rep.input = text;
            Divisor1 d = tree_retract(t, sphere);
            rep.result["divisor"] = d.str();
            rep.result["degree"] = d.degree();
        });
    }

    // group
    CLI::App* grp = app.add_subcommand("group", "real projective transformations");
    grp->require_subcommand(1);
    {
        auto* s = leaf(grp, "svd", "g = r diag(a) r'");
        s->add_option("matrix", text, "JSON rows")->required();
        bind(s, "group svd", [&] {
            RMat g = parse_matrix(text);
            rep.input = to_string(g);
            rep.exact = false;
            auto d = svd_decompose(g);
            rep.result["r"] = rmat_json(d.r);
            rep.result["a"] = d.a;
            rep.result["rp"] = rmat_json(d.rp);
        });
    }
    {
        auto* s = leaf(grp, "distortion", "neighbourhoods exchanged by g");
        s->add_option("matrix", text, "JSON rows")->required();
        s->add_option("--eps", eps);
        bind(s, "group distortion", [&] {
            RMat g = parse_matrix(text);
            rep.input = to_string(g);
            rep.exact = false;
            if (g.n == 3) {
                auto d = distortion_p2(g, eps);
                rep.result["case"] = case_name(d.kind);
                rep.result["k"] = d.k;
                rep.result["singular"] = d.singular;
                if (d.kind != DistortionCase::InsideCompact) {
                    rep.result["line"] = d.line;
                    rep.result["point"] = d.point;
                }
            } else {
                auto d = distortion_p1(g, eps);
                rep.result["inside"] = d.inside;
                rep.result["ratio"] = d.ratio;
                rep.result["radius"] = d.radius;
                if (!d.inside) {
                    rep.result["plus"] = d.plus;
                    rep.result["minus"] = d.minus;
                }
            }
        });
    }

    // tables
    CLI::App* tab = app.add_subcommand("tables", "dimension tables");
    tab->require_subcommand(1);
    {
        auto* s = leaf(tab, "aut-dims", "curves with automorphisms of prime period");
        s->add_option("--max-n", maxN)->check(CLI::Range(3, 1000));
        s->add_option("--p", primeP, "restrict to one prime");
        bind(s, "tables aut-dims", [&] {
            ordered_json two = ordered_json::array(), three = ordered_json::array();
            int pa = primeP ? primeP : 2, pb = primeP ? primeP : 3;
            for (int n = 3; n <= maxN; ++n) {
                auto d = dim_counts(n, pa);
                two.push_back({{"n", n}, {"dimModuliSmooth", d.dimModuliSmooth}, {"dimTwoEqualEigen", d.dimTwoEqualEigen}});
            }
            for (int n = 4; n <= maxN; ++n) {
                auto d = dim_counts(n, pb);
                three.push_back({{"n", n}, {"dimModuliSmooth", d.dimModuliSmooth}, {"boundThreeDistinct", d.boundThreeDistinct}});
            }
            rep.result["twoEqualEigenvalues"] = {{"p", pa}, {"rows", two}};
            rep.result["threeDistinctEigenvalues"] = {{"p", pb}, {"rows", three}};
        });
    }
    {
        auto* s = leaf(tab, "chow", "dimensions of spaces of cycles");
        s->add_option("--max-n", maxN)->check(CLI::Range(1, 1000));
        bind(s, "tables chow", [&] {
            ordered_json rows = ordered_json::array();
            for (int n = 1; n <= maxN; ++n) {
                auto c = chow_dims(n);
                rows.push_back({{"n", n}, {"chowDim", c.chowDim}, {"reducibleDim", c.reducibleDim}});
            }
            rep.result["rows"] = rows;
        });
    }
    {
        auto* s = leaf(tab, "harnack", "maximal number of real components");
        s->add_option("--max-n", maxN)->check(CLI::Range(1, 1000));
        bind(s, "tables harnack", [&] {
            ordered_json rows = ordered_json::array();
            for (int n = 1; n <= maxN; ++n) rows.push_back({{"n", n}, {"bound", harnack_bound(n)}});
            rep.result["rows"] = rows;
        });
    }

    // real
    CLI::App* real = app.add_subcommand("real", "arrangements of real ovals");
    real->require_subcommand(1);
    {
        auto* s = leaf(real, "validate", "necessary conditions for a degree n arrangement");
        s->add_option("graph", text, "JSON nesting forest or explicit dual graph")->required();
        s->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
        bind(s, "real validate", [&] {
            auto g = parse_dual_graph(text);
            rep.input = to_json(g);
            auto c = validate_arrangement(g, degree);
            rep.result["valid"] = c.valid;
            rep.result["rule"] = c.valid ? ordered_json() : ordered_json(c.rule);
            rep.result["reason"] = c.valid ? ordered_json() : ordered_json(c.reason);
            rep.result["components"] = g.components();
            rep.result["harnackBound"] = harnack_bound(degree);
        });
    }
    {
        auto* s = leaf(real, "isotopy", "compare two arrangements up to isotopy");
        s->add_option("first", text)->required();
        s->add_option("second", text2)->required();
        bind(s, "real isotopy", [&] {
            auto a = parse_dual_graph(text), b = parse_dual_graph(text2);
            rep.result["equal"] = isotopy_equal(a, b);
            rep.result["canonical"] = {canonical_form(a), canonical_form(b)};
        });
    }

    // batch
    {
        auto* s = app.add_subcommand("batch", "run one command per line of a file");
        s->add_option("file", text)->required();
        s->add_option("--jobs", batchJobs)->check(CLI::Range(1, 256));
        s->callback([&] {
            rep.command = "batch";
            action = nullptr;
        });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        out << error_json(rep.command, "Usage", e.what()).dump() << "\n";
        return 2;
    }
    if (rep.command == "batch") return run_batch(text, batchJobs, out, err);

    try {
        action();
    } catch (const Error& e) {
        err << e.what() << "\n";
        out << error_json(rep.command, err_name(e.code()), e.what()).dump() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        out << error_json(rep.command, "Internal", e.what()).dump() << "\n";
        return 1;
    }

    if (format == "text") {
        print_text(rep, out);
        return 0;
    }
    ordered_json j = {{"schema", 1}, {"command", rep.command}};
    if (!rep.input.empty()) j["input"] = rep.input;
    j["exact"] = rep.exact;
    j["result"] = rep.result;
    out << j.dump(2) << "\n";
    return 0;
}

} // namespace curvemod
