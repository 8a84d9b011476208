#include "cli.hpp"

#include "selftest.hpp"
#include "tiltwall/tiltwall.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace tiltwall::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Rat rat_arg(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(trim(text));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

long int_arg(const std::string& flag, const std::string& text) {
    const Rat v = rat_arg(flag, text);
    if (!v.is_integer() || !v.num().fits_slong_p()) throw std::invalid_argument(flag + ": expected an integer, got " + text);
    return v.num().get_si();
}

TiltPoint point_arg(const std::string& flag, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw std::invalid_argument(flag + ": expected alpha2,beta");
    const Rat a2 = rat_arg(flag, parts[0]);
    if (a2.sign() <= 0) throw std::invalid_argument(flag + ": alpha2 must be positive");
    return {a2, rat_arg(flag, parts[1])};
}

std::vector<Rat> grid_arg(const std::string& flag, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw std::invalid_argument(flag + ": expected start,end,step");
    try {
        return rat_grid(rat_arg(flag, parts[0]), rat_arg(flag, parts[1]), rat_arg(flag, parts[2]));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

CharVector char_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_char_vector(trim(text));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

ReducedClass reduced_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_reduced_class(trim(text));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

std::string approx_str(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

/// Ordered key/value output rendered as "key: value" lines or one JSON object.
class Report {
public:
    Report(bool as_json, bool approx) : json_(as_json), approx_(approx) {}

    void put(const std::string& key, const std::string& value) {
        obj_[key] = value;
        lines_.push_back(key + ": " + value);
    }
    void put(const std::string& key, const Rat& value) {
        obj_[key] = value.str();
        std::string line = key + ": " + value.str();
        if (approx_ && !value.is_integer()) {
            obj_[key + "_approx"] = value.to_double();
            line += "  (approx " + approx_str(value.to_double()) + ")";
        }
        lines_.push_back(line);
    }
    void put(const std::string& key, const ExtRat& value) {
        if (value.is_infinite()) put(key, std::string("inf"));
        else put(key, value.value());
    }
    void put(const std::string& key, const QuadRat& value) {
        obj_[key] = value.str();
        std::string line = key + ": " + value.str();
        if (approx_ && !value.is_rational()) {
            obj_[key + "_approx"] = value.to_double();
            line += "  (approx " + approx_str(value.to_double()) + ")";
        }
        lines_.push_back(line);
    }
    void put(const std::string& key, bool value) {
        obj_[key] = value;
        lines_.push_back(key + ": " + (value ? "true" : "false"));
    }
    /// Text mode prints only this line instead of key: value pairs.
    void bare(std::string line) { bare_ = std::move(line); }

    void print(std::ostream& out) const {
        if (json_) {
            out << obj_.dump() << '\n';
            return;
        }
        if (!bare_.empty()) {
            out << bare_ << '\n';
            return;
        }
        for (const auto& l : lines_) out << l << '\n';
    }

private:
    bool json_;
    bool approx_;
    json obj_ = json::object();
    std::vector<std::string> lines_;
    std::string bare_;
};

struct Common {
    long genus = 0;
    long degree = 0;
    std::string format = "text";
    bool approx = false;
    std::string config;

    [[nodiscard]] RuledThreefold threefold() const { return {genus, degree}; }
    [[nodiscard]] bool json() const { return format == "json"; }
    [[nodiscard]] Report report() const { return {json(), approx}; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--genus", c.genus, "genus of the base curve");
    sub->add_option("--degree", c.degree, "H^3 = deg E");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--approx", c.approx, "add labeled decimal approximations");
    sub->add_option("--config", c.config, "key = value file");
}

void degree_note(const Common& c, std::ostream& err) {
    if (c.degree < 0) err << "note: degree " << c.degree << " < 0; H is not nef on this threefold\n";
}

std::string quad_or_undefined(const std::function<QuadRat()>& f) {
    try {
        return f().str();
    } catch (const std::domain_error&) {
        return "undefined";
    }
}

/// The numerical checks never see the semistability hypothesis, hence the
/// qualifier on every verdict.
int verdict(Report& rep, const std::vector<Rat>& defects, std::ostream& out) {
    const bool holds = std::all_of(defects.begin(), defects.end(), [](const Rat& d) { return d.sign() >= 0; });
    std::string v = holds ? "holds" : "violated";
    v += " (conditional on semistability)";
    rep.put("verdict", v);
    rep.print(out);
    return holds ? ok : negative;
}

void write_csv(const Enumeration& e, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << "w_r,w_c,w_d,wall_type,center,radius_sq\n";
    for (const auto& hit : e.hits)
        for (const auto& w : hit.classes) {
            f << w.r.str() << ',' << w.c.str() << ',' << w.dd.str() << ',' << hit.wall.type_name() << ',';
            if (hit.wall.is_vertical()) f << hit.wall.beta().str() << ",\n";
            else f << hit.wall.center().str() << ',' << hit.wall.radius_sq().str() << '\n';
        }
    if (!f) throw std::runtime_error("failed writing " + path);
}

json wall_json(const NumericalWall& nw) {
    json j = json::object();
    if (nw.kind == NumericalWall::Kind::none) j["type"] = "none";
    else if (nw.kind == NumericalWall::Kind::everywhere) j["type"] = "everywhere";
    else if (nw.wall->is_vertical()) {
        j["type"] = "vertical";
        j["beta"] = nw.wall->beta().str();
    } else {
        j["type"] = "semicircle";
        j["center"] = nw.wall->center().str();
        j["radius_sq"] = nw.wall->radius_sq().str();
    }
    return j;
}

std::string wall_text(const Wall& w) {
    if (w.is_vertical()) return "vertical beta=" + w.beta().str();
    return "semicircle center=" + w.center().str() + " radius_sq=" + w.radius_sq().str();
}

/// Appends "--key=value" for config entries not already given on the
/// command line.
std::vector<std::string> inject_config(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("--config: cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<std::string> out = args;
    for (const auto& [key, value] : parse_config(buf.str())) {
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) out.push_back(flag + "=" + value);
    }
    return out;
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key.find(' ') != std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(n) + ": bad key '" + key + "'");
        if (key == "config") throw std::invalid_argument("config line " + std::to_string(n) + ": nested config");
        out[key] = value;
    }
    return out;
}

unsigned worker_threads() {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const char* env = std::getenv("TILTWALL_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw std::invalid_argument(std::string("TILTWALL_THREADS must be a positive integer, got ") + env);
    return std::min<unsigned>(hw, static_cast<unsigned>(v));
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tilt-stability numerics on ruled threefolds P(E) over a curve", "tiltwall"};
    app.require_subcommand(1);

    Common c;
    std::string char_s, beta_s = "0", alpha2_s = "1", s_s = "1", t_s = "1";

    auto* chern = app.add_subcommand("chern", "twisted character, discriminants and Euler characteristic");
    std::string tensor_s;
    chern->add_option("--char", char_s, "r,cHF,cHH,dF,dH,e")->required();
    chern->add_option("--beta", beta_s, "twist parameter");
    chern->add_option("--tensor", tensor_s, "a,b: tensor with O(aH + bF) first");

    auto* slope = app.add_subcommand("slope", "slope functions");
    std::string kind;
    slope->add_option("--kind", kind)->required()->check(CLI::IsMember({"muHF", "muC", "nu", "nuMixed", "nuSigma"}));
    slope->add_option("--char", char_s)->required();
    slope->add_option("--alpha2", alpha2_s);
    slope->add_option("--beta", beta_s);
    slope->add_option("--s", s_s);
    slope->add_option("--t", t_s);

    auto* check = app.add_subcommand("check", "inequality defects");
    std::string ineq;
    long fibers = 1;
    check->add_option("--ineq", ineq)
        ->required()
        ->check(CLI::IsMember({"conj31", "conj32", "star", "weak", "nabla", "corollary", "fiber-bog", "classical"}));
    check->add_option("--char", char_s)->required();
    check->add_option("--alpha2", alpha2_s);
    check->add_option("--beta", beta_s);
    check->add_option("--k", fibers, "fiber multiplicity for fiber-bog");

    auto* wall = app.add_subcommand("wall", "numerical wall of two reduced classes");
    std::string u_s, w_s;
    wall->add_option("--u", u_s, "r,c,d")->required();
    wall->add_option("--w", w_s, "r,c,d")->required();

    auto* walls = app.add_subcommand("walls", "enumerate destabilizing classes and their walls");
    long rank_bound = 0;
    std::string at_s, svg_path, csv_path;
    walls->add_option("--u", u_s, "r,c,d")->required();
    walls->add_option("--rank-bound", rank_bound)->required();
    walls->add_option("--at", at_s, "alpha2,beta");
    walls->add_option("--svg", svg_path);
    walls->add_option("--csv", csv_path);

    auto* chi = app.add_subcommand("chi", "Euler characteristic");
    std::string from_s;
    bool bounds = false;
    chi->add_option("--char", char_s)->required();
    chi->add_option("--from", from_s, "A: print chi(A, E) instead of chi(E)");
    chi->add_flag("--bounds", bounds, "print chi(O(H), E) and chi(O(2H), E)");

    auto* support = app.add_subcommand("support", "search for a support-property quadratic form");
    std::string lambda_s = "0,2,1/2", mu_s = "1/2,2,1/2";
    support->add_option("--alpha2", alpha2_s);
    support->add_option("--beta", beta_s);
    support->add_option("--s", s_s);
    support->add_option("--t", t_s);
    support->add_option("--lambda-grid", lambda_s, "start,end,step");
    support->add_option("--mu-grid", mu_s, "start,end,step");

    auto* selftest = app.add_subcommand("selftest", "randomized identity suites");
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    selftest->add_option("--seed", seed);
    selftest->add_option("--samples", samples);

    for (auto* sub : {chern, slope, check, wall, walls, chi, support, selftest}) add_common(sub, c);
    bool wall_format_given = false;

    try {
        const auto args = inject_config(raw_args);
        wall_format_given = std::any_of(args.begin(), args.end(),
                                        [](const std::string& a) { return a.rfind("--format", 0) == 0; });
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    try {
        const RuledThreefold x = c.threefold();
        const unsigned threads = worker_threads();

        if (chern->parsed()) {
            degree_note(c, err);
            CharVector ch = char_arg("--char", char_s);
            if (!tensor_s.empty()) {
                const auto ab = split(tensor_s, ',');
                if (ab.size() != 2) throw std::invalid_argument("--tensor: expected a,b");
                ch = tensor_line(ch, int_arg("--tensor", ab[0]), int_arg("--tensor", ab[1]), x);
            }
            const Rat beta = rat_arg("--beta", beta_s);
            const auto cl = disc_classical(ch, x);
            Report rep = c.report();
            rep.put("char", ch.str());
            rep.put("twisted", twist(ch, beta, x).str());
            rep.put("reduced", reduced(ch).str());
            rep.put("mu_HF", mu_HF(ch));
            rep.put("disc_bar", disc_bar(ch));
            rep.put("F_delta", cl.f_delta);
            rep.put("H_delta", cl.h_delta);
            rep.put("disc_tilde", disc_tilde(ch, beta, x));
            rep.put("nabla", nabla(ch, x));
            rep.put("euler_char", euler_char(x, ch));
            rep.put("beta_bar", quad_or_undefined([&] { return beta_bar(ch); }));
            rep.print(out);
            return ok;
        }

        if (slope->parsed()) {
            const CharVector ch = char_arg("--char", char_s);
            const TiltPoint pt(rat_arg("--alpha2", alpha2_s), rat_arg("--beta", beta_s));
            ExtRat v;
            if (kind == "muHF") v = mu_HF(ch);
            else if (kind == "muC") v = mu_C(ch);
            else if (kind == "nu") v = nu(ch, pt);
            else {
                degree_note(c, err);
                if (kind == "nuMixed") v = nu_mixed(ch, pt, rat_arg("--t", t_s), x);
                else v = nu_sigma(ch, ChargeParams(pt.alpha2, pt.beta, rat_arg("--s", s_s), rat_arg("--t", t_s)), x);
            }
            Report rep = c.report();
            rep.put("kind", kind);
            rep.put("value", v);
            rep.bare(v.str());
            rep.print(out);
            return ok;
        }

        if (check->parsed()) {
            degree_note(c, err);
            const CharVector ch = char_arg("--char", char_s);
            const TiltPoint pt(rat_arg("--alpha2", alpha2_s), rat_arg("--beta", beta_s));
            Report rep = c.report();
            rep.put("ineq", ineq);
            if (ineq == "classical") {
                const auto cl = disc_classical(ch, x);
                rep.put("F_delta", cl.f_delta);
                rep.put("H_delta", cl.h_delta);
                return verdict(rep, {cl.f_delta, cl.h_delta}, out);
            }
            Rat d;
            if (ineq == "conj31") d = bg_main_defect(ch, pt, x);
            else if (ineq == "conj32") d = bg_nu_zero_defect(ch, pt, x);
            else if (ineq == "star") d = bg_star_defect(ch, pt, x);
            else if (ineq == "weak") d = bg_weak_defect(ch, pt, x);
            else if (ineq == "nabla") d = nabla(ch, x);
            else if (ineq == "corollary") d = corollary_defect(ch, x);
            else d = fiber_bogomolov_defect(fibers, ch, x, pt.beta);
            rep.put("defect", d);
            return verdict(rep, {d}, out);
        }

        if (wall->parsed()) {
            const NumericalWall nw = numerical_wall(reduced_arg("--u", u_s), reduced_arg("--w", w_s));
            if (c.format == "json" || !wall_format_given) {
                out << wall_json(nw).dump() << '\n';
            } else if (nw.is_proper()) {
                out << wall_text(*nw.wall) << '\n';
            } else {
                out << (nw.kind == NumericalWall::Kind::none ? "none" : "everywhere") << '\n';
            }
            return ok;
        }

        if (walls->parsed()) {
            const ReducedClass u = reduced_arg("--u", u_s);
            std::optional<TiltPoint> at;
            if (!at_s.empty()) at = point_arg("--at", at_s);
            const Enumeration e = enumerate_destabilizers(u, rank_bound, at, threads);
            if (e.discriminant_negative)
                err << "warning: disc_bar(u) = " << disc_bar(u).str()
                    << " < 0, so no tilt-semistable object has class u\n";
            if (c.json()) {
                json j = json::object();
                j["u"] = u.str();
                j["rank_bound"] = rank_bound;
                j["discriminant_negative"] = e.discriminant_negative;
                json list = json::array();
                for (const auto& hit : e.hits) {
                    json h = wall_json({NumericalWall::Kind::proper, hit.wall});
                    if (c.approx && hit.wall.is_semicircle()) {
                        h["center_approx"] = hit.wall.center().to_double();
                        h["radius_sq_approx"] = hit.wall.radius_sq().to_double();
                    }
                    json cls = json::array();
                    for (const auto& w : hit.classes) cls.push_back(w.str());
                    h["classes"] = cls;
                    list.push_back(h);
                }
                j["walls"] = list;
                out << j.dump() << '\n';
            } else {
                out << "walls: " << e.hits.size() << "  classes: " << e.class_count() << '\n';
                for (const auto& hit : e.hits) {
                    out << wall_text(hit.wall);
                    if (c.approx && hit.wall.is_semicircle())
                        out << "  (approx center " << approx_str(hit.wall.center().to_double()) << ", radius "
                            << approx_str(std::sqrt(hit.wall.radius_sq().to_double())) << ")";
                    out << '\n';
                    for (const auto& w : hit.classes) out << "  w = " << w.str() << '\n';
                }
            }
            if (!csv_path.empty()) write_csv(e, csv_path);
            if (!svg_path.empty()) {
                std::vector<Wall> ws;
                for (const auto& hit : e.hits) ws.push_back(hit.wall);
                emit_svg(ws, at, svg_path);
            }
            return ok;
        }

        if (chi->parsed()) {
            degree_note(c, err);
            const CharVector ch = char_arg("--char", char_s);
            Report rep = c.report();
            if (bounds) {
                const auto b = prop42_chi_bounds(ch, x);
                rep.put("chi_O(H)", b.chi1);
                rep.put("chi_O(2H)", b.chi2);
            } else {
                const Rat v = from_s.empty() ? euler_char(x, ch) : euler_char_pair(x, char_arg("--from", from_s), ch);
                rep.put("chi", v);
                rep.bare(v.str());
            }
            rep.print(out);
            return ok;
        }

        if (support->parsed()) {
            degree_note(c, err);
            const ChargeParams p(rat_arg("--alpha2", alpha2_s), rat_arg("--beta", beta_s), rat_arg("--s", s_s),
                                 rat_arg("--t", t_s));
            const auto res = verify_support(p, x, grid_arg("--lambda-grid", lambda_s), grid_arg("--mu-grid", mu_s),
                                            threads);
            if (c.json()) {
                json j = json::object();
                j["witness"] = res.witness.has_value();
                j["candidates_tried"] = res.candidates_tried;
                if (res.witness) {
                    j["lambda"] = res.witness->lambda.str();
                    j["mu"] = res.witness->mu.str();
                    json q = json::array();
                    for (const auto& v : res.witness->form.upper_entries()) q.push_back(v.str());
                    j["form_upper"] = q;
                } else {
                    j["diagnostic"] = res.diagnostic;
                }
                out << j.dump() << '\n';
            } else if (res.witness) {
                out << "witness lambda=" << res.witness->lambda << " mu=" << res.witness->mu << '\n';
                const auto& m = res.witness->form.matrix();
                for (std::size_t i = 0; i < 6; ++i)
                    for (std::size_t j = i; j < 6; ++j) out << "Q[" << i << "][" << j << "] = " << m(i, j) << '\n';
            } else {
                out << "no witness in grid\n" << res.diagnostic << '\n';
            }
            return res.witness ? ok : negative;
        }

        if (selftest->parsed()) {
            bool all = true;
            json j = json::array();
            for (const auto& r : run_selftest(seed, samples)) {
                all = all && r.ok();
                if (c.json()) j.push_back({{"suite", r.name}, {"passed", r.passed}, {"total", r.total}});
                else out << r.name << ": " << r.passed << "/" << r.total << (r.ok() ? " ok" : " FAILED") << '\n';
            }
            if (c.json()) out << j.dump() << '\n';
            else out << "selftest: " << (all ? "passed" : "failed") << '\n';
            return all ? ok : negative;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

}  // namespace tiltwall::cli
