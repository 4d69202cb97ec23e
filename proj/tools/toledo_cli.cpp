#include "toledo/eulerchi.hpp"
#include "toledo/fusion.hpp"
#include "toledo/hermitian.hpp"
#include "toledo/json_io.hpp"
#include "toledo/mgnclasses.hpp"
#include "toledo/qrep.hpp"
#include "toledo/rmatrix.hpp"
#include "toledo/tables.hpp"
#include "toledo/uniformization.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace toledo;
namespace fs = std::filesystem;

namespace {

struct Opts {
    std::string format = "json";
    std::string family = "so3";
    int level = 5;
    long embedding = 1;
    int g = 0, n = 0, gmax = 3, nmax = 6, color = 1, i = 0, j = 0;
    std::string colors = "1";
    std::string matrix, a, b, form, dump, class_file, case_ = "0,5";
    std::string table, golden;
    bool all = false, update = false;
};

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

std::string Q(const Rational& x) { return rational_string(x); }

json qvec(const QVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(Q(x));
    return a;
}

Embedding embedding_for(const CMat& m, long k)
{
    long N = 1;
    for (const auto& x : m.data()) N = lcm_order(N, x.order());
    return Embedding(static_cast<int>(N), k);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Line diff good enough for golden reports.
void print_diff(const std::string& want, const std::string& got, const std::string& name)
{
    std::istringstream a(want), b(got);
    std::string la, lb;
    int line = 0;
    std::cout << "--- golden/" << name << "\n+++ computed\n";
    while (true) {
        bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
        ++line;
        if (!ha && !hb) break;
        if (ha && hb && la == lb) continue;
        std::cout << "@@ line " << line << "\n";
        if (ha) std::cout << "-" << la << "\n";
        if (hb) std::cout << "+" << lb << "\n";
    }
}

int run_reproduce(const Opts& o)
{
    std::vector<std::string> names;
    if (o.all) names = table_names();
    else if (!o.table.empty()) names = {o.table};
    else throw CLI::ValidationError("reproduce", "give --all or --table NAME");
    int rc = 0;
    std::string ext = o.format;
    for (const auto& name : names) {
        std::string out = render_tables(reproduce_table(name), o.format, "reproduce", json{{"table", name}});
        if (o.golden.empty()) {
            std::cout << out;
            continue;
        }
        fs::path p = fs::path(o.golden) / (name + "." + ext);
        if (o.update) {
            std::ofstream(p) << out;
            std::cout << "wrote " << p.string() << "\n";
        } else if (!fs::exists(p)) {
            std::cout << "missing golden file " << p.string() << "\n";
            rc = 3;
        } else {
            std::string want = slurp(p);
            if (want != out) {
                print_diff(want, out, name + "." + ext);
                rc = 3;
            } else {
                std::cout << name << ": matches golden\n";
            }
        }
    }
    return rc;
}

std::vector<int> parse_colors(const std::string& s, int n)
{
    std::vector<int> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) c.push_back(std::stoi(tok));
    if (c.size() == 1 && n != 1) c.assign(n, c[0]);
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("--colors needs one entry or n entries");
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signatures, Toledo invariants and R-matrices of SO3/SU2 modular functors"};
    app.require_subcommand(1);
    Opts o;
    std::string cmd;

    auto fmt = [&](CLI::App* s) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    };
    auto lev = [&](CLI::App* s, bool fam) {
        if (fam) s->add_option("--family", o.family, "so3 or su2")->check(CLI::IsMember({"so3", "su2"}));
        s->add_option("--level", o.level, "l for SO3, r for SU2");
        s->add_option("--embedding", o.embedding, "q -> exp(2 pi i k / N)");
    };

    auto* fusion = app.add_subcommand("fusion", "Frobenius algebras and signature tables");
    fusion->require_subcommand(1);
    auto* fb = fusion->add_subcommand("build", "Structure constants, signs, alpha, discriminant");
    lev(fb, true);
    fmt(fb);
    auto* fs_ = fusion->add_subcommand("sigtable", "p|q table of sigma_{g,n} against the unitary dimension");
    lev(fs_, true);
    fs_->add_option("--gmax", o.gmax);
    fs_->add_option("--nmax", o.nmax);
    fs_->add_option("--color", o.color);
    fmt(fs_);

    auto* herm = app.add_subcommand("herm", "Exact signatures and Meyer cocycles");
    herm->require_subcommand(1);
    auto* hs = herm->add_subcommand("signature", "Signature of a Hermitian matrix");
    hs->add_option("--matrix", o.matrix)->required();
    hs->add_option("--embedding", o.embedding);
    fmt(hs);
    auto* hm = herm->add_subcommand("meyer", "Meyer cocycle and Toledo value of a pair of isometries");
    hm->add_option("--a", o.a)->required();
    hm->add_option("--b", o.b)->required();
    hm->add_option("--form", o.form)->required();
    hm->add_option("--embedding", o.embedding);
    fmt(hm);

    auto* qrep = app.add_subcommand("qrep", "Quantum representations of the four-holed sphere and one-holed torus");
    qrep->require_subcommand(1);
    auto* q04 = qrep->add_subcommand("tau04", "tau_{0,4}(w, w, e_i, e_j)");
    lev(q04, false);
    q04->add_option("--i", o.i);
    q04->add_option("--j", o.j);
    fmt(q04);
    auto* q11 = qrep->add_subcommand("tau11", "tau_{1,1}(e_i)");
    lev(q11, false);
    q11->add_option("--i", o.i);
    fmt(q11);
    auto* qt = qrep->add_subcommand("torus", "Twist matrices and form on the one-holed torus");
    lev(qt, false);
    qt->add_option("--i", o.i);
    qt->add_option("--dump", o.dump, "Write the matrices to this JSON file");
    fmt(qt);

    auto* rm = app.add_subcommand("rmatrix", "R_1 reconstruction and degree-2 classes");
    rm->require_subcommand(1);
    auto* rs = rm->add_subcommand("solve", "Solve R_1 from tau_{0,4} and tau_{1,1}");
    lev(rs, false);
    fmt(rs);
    auto* rc = rm->add_subcommand("class", "tau_{g,n}(colors) in H^2");
    lev(rc, false);
    rc->add_option("--g", o.g)->required();
    rc->add_option("--n", o.n)->required();
    rc->add_option("--colors", o.colors, "Comma list of color indices, or one index for all points");
    fmt(rc);
    auto* rx = rm->add_subcommand("crosscheck", "Relation-side coefficients against the R-matrix class (level 5)");
    rx->add_option("--gmax", o.gmax);
    rx->add_option("--nmax", o.nmax);
    fmt(rx);

    auto* cl = app.add_subcommand("classes", "Classes on moduli spaces of curves");
    cl->require_subcommand(1);
    auto* cc = cl->add_subcommand("check", "Uniformization identities for one case");
    cc->add_option("--case", o.case_, "0,5 | 1,2 | 1,3 | 2,1");
    fmt(cc);
    auto* cr = cl->add_subcommand("reduce", "Reduce a class to the fixed basis");
    cr->add_option("--g", o.g)->required();
    cr->add_option("--n", o.n)->required();
    cr->add_option("--class", o.class_file)->required();
    fmt(cr);
    auto* ck = cl->add_subcommand("canonical", "Canonical class of the twisted compactification");
    ck->add_option("--level", o.level);
    ck->add_option("--g", o.g)->required();
    ck->add_option("--n", o.n)->required();
    fmt(ck);

    auto* eu = app.add_subcommand("euler", "Orbifold Euler characteristics");
    eu->require_subcommand(1);
    auto* ec = eu->add_subcommand("chibar", "Nodal-count polynomial");
    ec->add_option("--g", o.g)->required();
    ec->add_option("--n", o.n)->required();
    fmt(ec);
    auto* et = eu->add_subcommand("twisted", "Euler characteristic of the l-twisted compactification");
    et->add_option("--g", o.g)->required();
    et->add_option("--n", o.n)->required();
    et->add_option("--level", o.level)->required();
    fmt(et);

    auto* rp = app.add_subcommand("reproduce", "Regenerate the reference tables, optionally diffing against golden files");
    rp->add_flag("--all", o.all);
    rp->add_option("--table", o.table)->check(CLI::IsMember(table_names()));
    rp->add_option("--golden", o.golden, "Directory of golden files");
    rp->add_flag("--update-golden", o.update);
    fmt(rp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string command;
        for (auto* s : app.get_subcommands()) {
            command = s->get_name();
            for (auto* t : s->get_subcommands()) command += " " + t->get_name();
        }
        auto out = [&](const json& payload, const json& params) {
            std::cout << render_payload(payload, o.format, command, params);
        };
        auto tables = [&](const std::vector<Table>& t, const json& params) {
            std::cout << render_tables(t, o.format, command, params);
        };
        json lp{{"level", o.level}, {"embedding", o.embedding}};

        if (*fb) {
            Family f = parse_family(o.family);
            FrobeniusAlgebra V = build_algebra(f, o.level, o.embedding);
            auto ss = is_semisimple(V);
            json eps = json::array(), mult = json::array();
            for (int k = 0; k < V.rank(); ++k) {
                eps.push_back(V.epsilon(k));
                json m = json::array();
                for (int a = 0; a < V.rank(); ++a) m.push_back(qvec(V.product(V.basis(k), V.basis(a))));
                mult.push_back(m);
            }
            json p{{"family", family_name(f)}, {"rank", V.rank()}, {"epsilon", eps}, {"products", mult},
                   {"alpha", qvec(V.alpha())}, {"Omega", qvec(V.omega_element())},
                   {"discriminant", Q(ss.determinant)}, {"semisimple", ss.semisimple}};
            lp["family"] = family_name(f);
            if (o.format == "json") out(p, lp);
            else {
                Table t{"fusion", {"key", "value"}, {}};
                for (const auto& [k, v] : p.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
                tables({t}, lp);
            }
        } else if (*fs_) {
            Family f = parse_family(o.family);
            FrobeniusAlgebra V = build_algebra(f, o.level, o.embedding);
            auto cells = signature_table(V, o.gmax, o.nmax, o.color);
            Table t{"sigtable", {"g", "n", "sigma", "dim", "p|q", "stable"}, {}};
            for (const auto& c : cells)
                t.rows.push_back({std::to_string(c.g), std::to_string(c.n), Q(c.sigma), Q(c.dim), Q(c.p) + "|" + Q(c.q),
                                  c.stable ? "yes" : "no"});
            lp["family"] = o.family;
            lp["gmax"] = o.gmax;
            lp["nmax"] = o.nmax;
            lp["color"] = o.color;
            tables({t}, lp);
        } else if (*hs) {
            CMat H = cmat_from_json(read_json(o.matrix));
            auto s = signature(H, embedding_for(H, o.embedding));
            out(json{{"p", s.p}, {"q", s.q}, {"z", s.z}, {"signature", s.value()}},
                json{{"matrix", o.matrix}, {"embedding", o.embedding}});
        } else if (*hm) {
            CMat A = cmat_from_json(read_json(o.a)), B = cmat_from_json(read_json(o.b)), h = cmat_from_json(read_json(o.form));
            CMat all(A.rows(), 3 * A.cols());
            all.set_block(0, 0, A);
            all.set_block(0, A.cols(), B);
            all.set_block(0, 2 * A.cols(), h);
            Embedding e = embedding_for(all, o.embedding);
            out(json{{"mu", meyer_cocycle(A, B, h, e)}, {"tau", Q(toledo_triangle_meyer(A, B, h, e))}},
                json{{"a", o.a}, {"b", o.b}, {"form", o.form}, {"embedding", o.embedding}});
        } else if (*q04) {
            Embedding e(o.level, o.embedding);
            lp["i"] = o.i;
            lp["j"] = o.j;
            out(json{{"tau04", Q(four_point_toledo(o.level, e, o.i, o.j))}}, lp);
        } else if (*q11) {
            Embedding e(o.level, o.embedding);
            lp["i"] = o.i;
            out(json{{"tau11", Q(tau_11(o.level, e, o.i))}}, lp);
        } else if (*qt) {
            auto T = punctured_torus_rep(o.level, Embedding(o.level, o.embedding), o.i);
            json win = json::array();
            for (int w : T.window) win.push_back(w);
            json mats{{"h", to_json(T.h)}, {"T_gamma", to_json(T.Tg)}, {"T_delta", to_json(T.Td)},
                      {"C_gamma", to_json(T.Cg)}, {"C_delta", to_json(T.Cd)}};
            if (!o.dump.empty()) std::ofstream(o.dump) << mats.dump(2) << "\n";
            auto sig = signature(T.h, T.e);
            lp["i"] = o.i;
            out(json{{"dim", T.dim()}, {"window", win}, {"form_signature", sig.value()},
                     {"tau11", T.i == 0 ? std::string("0") : Q(tau_11(T))}},
                lp);
        } else if (*rs) {
            FrobeniusAlgebra V = build_algebra(Family::SO3, o.level, o.embedding);
            R1Matrix R = solve_r1(V, r1_input(o.level, o.embedding));
            auto inv = check_r1(V, R);
            if (o.format == "json") {
                json p = to_json(R);
                p["denominator_bound"] = inv.bound.get_str();
                p["invariants_hold"] = inv.all();
                out(p, lp);
            } else {
                tables({r1_table(o.level, o.embedding)}, lp);
            }
        } else if (*rc) {
            FrobeniusAlgebra V = build_algebra(Family::SO3, o.level, o.embedding);
            R1Matrix R = solve_r1(V, r1_input(o.level, o.embedding));
            std::vector<QVec> cols;
            for (int c : parse_colors(o.colors, o.n)) cols.push_back(V.basis(c));
            H2Class X = degree2_class(V, R.R, o.g, o.n, cols);
            json p{{"kappa_basis", to_json(X)}, {"kappa_tilde_basis", to_json(to_kappa_tilde_basis(X))}};
            if (reduce_supported(o.g, o.n)) p["reduced"] = to_json(reduce(X));
            lp["g"] = o.g;
            lp["n"] = o.n;
            lp["colors"] = o.colors;
            if (o.format == "json") out(p, lp);
            else {
                Table t{"class", {"basis", "label", "coefficient"}, {}};
                for (const auto& [b, v] : p.items())
                    for (const auto& [k, c] : v["coeffs"].items()) t.rows.push_back({b, k, c.get<std::string>()});
                tables({t}, lp);
            }
        } else if (*rx) {
            tables({crosscheck_table(o.gmax, o.nmax)}, json{{"gmax", o.gmax}, {"nmax", o.nmax}});
        } else if (*cc) {
            int g = 0, n = 0;
            char comma = 0;
            std::istringstream in(o.case_);
            if (!(in >> g >> comma >> n) || comma != ',') throw CLI::ValidationError("--case", "expected g,n");
            auto rep = uniformization_check(g, n);
            Table t{"uniformization", {"check", "lhs", "rhs", "pass"}, {}};
            t.rows.push_back({"tau = " + Q(rep.factor) + " * K", rep.tau.to_string(), rep.rhs.to_string(),
                              rep.proportional ? "yes" : "no"});
            for (const auto& x : rep.extra) t.rows.push_back({x.name, Q(x.value), Q(x.expected), x.pass ? "yes" : "no"});
            tables({t}, json{{"case", o.case_}});
        } else if (*cr) {
            H2Class c = h2class_from_json(read_json(o.class_file));
            if (c.g() != o.g || c.n() != o.n) throw std::invalid_argument("class file is for a different (g,n)");
            out(to_json(reduce(c)), json{{"g", o.g}, {"n", o.n}, {"class", o.class_file}});
        } else if (*ck) {
            H2Class K = canonical_class(o.level, o.g, o.n);
            json p{{"class", to_json(K)}};
            if (reduce_supported(o.g, o.n)) p["reduced"] = to_json(reduce(K));
            out(p, json{{"level", o.level}, {"g", o.g}, {"n", o.n}});
        } else if (*ec) {
            auto p = chi_bar(o.g, o.n);
            json c = json::array();
            for (const auto& x : p.coeffs) c.push_back(Q(x));
            out(json{{"chi_bar", p.to_string()}, {"coeffs", c}}, json{{"g", o.g}, {"n", o.n}});
        } else if (*et) {
            out(json{{"value", Q(chi_twisted(o.g, o.n, o.level))}}, json{{"g", o.g}, {"n", o.n}, {"level", o.level}});
        } else if (*rp) {
            return run_reproduce(o);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
