// superorbit: batch CLI over the supercommutative-algebra engine.
// Exit codes: 0 success, 1 a verified property is false, 2 usage/parse error,
// 3 precondition violation.

#include "superorbit/json_io.hpp"
#include "superorbit/parser.hpp"
#include "superorbit/quotient.hpp"
#include "superorbit/sampling.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace superorbit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct Options {
    std::string ring;      // "M,N"
    std::string caps;      // "c1,c2,.."
    std::string shape;     // "m,n"
    std::string algebra = "gl";
    std::string lambda;    // "l1,l2,.."
    int h_order = 3;
    int deg_cutoff = 4;
    uint64_t seed = 1;
    bool json_out = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

SigPtr ring_from(const Options& opt) {
    if (opt.ring.empty()) throw Error("--ring M,N is required here");
    auto parts = split(opt.ring, ',');
    if (parts.size() != 2) throw Error("--ring expects M,N");
    int m = std::stoi(parts[0]), n = std::stoi(parts[1]);
    if (opt.caps.empty()) return make_signature(m, n);
    std::vector<int> caps;
    for (auto& c : split(opt.caps, ',')) caps.push_back(std::stoi(c));
    return make_signature(m, n, std::move(caps));
}

BlockShape shape_from(const Options& opt) {
    auto parts = split(opt.shape, ',');
    if (parts.size() != 2) throw Error("--shape expects m,n");
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

QVector lambda_from(const Options& opt) {
    QVector v;
    for (auto& l : split(opt.lambda, ',')) v.push_back(rat_from_string(l));
    return v;
}

AlgebraPtr algebra_from(const Options& opt) {
    BlockShape sh = shape_from(opt);
    switch (kind_from_string(opt.algebra)) {
        case AlgebraKind::Gl: return build_gl(sh.m, sh.n);
        case AlgebraKind::Sl: return build_sl(sh.m, sh.n);
        case AlgebraKind::Osp: return build_osp(sh.m, sh.n);
    }
    throw Error("unreachable");
}

json read_stdin_json() {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return json::parse(buffer.str());
}

std::string hseries_text(const HSeries& c) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= c.order(); ++k) {
        if (is_zero(c.at(k))) continue;
        if (!first) os << " + ";
        os << rat_to_string(c.at(k));
        if (k >= 1) os << "*h";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string hpoly_text(const HPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        std::string mono = monomial_text(m, *p.sig());
        os << "(" << hseries_text(c) << ")";
        if (!mono.empty()) os << "*" << mono;
        first = false;
    }
    return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_eval(const Options& opt, const std::string& expr, bool body, int odd_component,
             bool invert) {
    auto sig = ring_from(opt);
    SuperPolynomial p = parse_poly(expr, sig);
    if (body) p = p.body();
    if (odd_component >= 0) p = p.odd_component(odd_component);
    if (invert) p = poly_invert(p);
    json out;
    out["text"] = to_text(p);
    out["terms"] = io::poly_to_json(p);
    out["parity"] = p.parity() == Parity::Even ? "even"
                    : p.parity() == Parity::Odd ? "odd"
                                                : "mixed";
    emit(out);
    return kExitOk;
}

int cmd_subst(const Options& opt, const std::string& map_text, const std::string& expr) {
    auto sig = ring_from(opt);
    Substitution sub(sig, sig);
    for (auto& rule : split(map_text, ';')) {
        auto eq = rule.find('=');
        if (eq == std::string::npos) throw Error("substitution rules look like x1=expr");
        std::string name = rule.substr(0, eq);
        auto hit = sig->find_name(name);
        if (!hit) throw Error("unknown generator '" + name + "'");
        SuperPolynomial image = parse_poly(rule.substr(eq + 1), sig);
        if (hit->first) sub.set_even(hit->second, std::move(image));
        else sub.set_odd(hit->second, std::move(image));
    }
    SuperPolynomial p = sub.apply(parse_poly(expr, sig));
    json out;
    out["text"] = to_text(p);
    out["terms"] = io::poly_to_json(p);
    emit(out);
    return kExitOk;
}

int cmd_ber(const Options& opt) {
    json j = read_stdin_json();
    SigPtr ring = opt.ring.empty() ? io::infer_ring_from_matrix_json(j) : ring_from(opt);
    SuperMatrix a = io::matrix_from_json(j, ring, MatParity::Even);
    SuperPolynomial b = berezinian(a);
    json out;
    out["ber"] = to_text(b);
    out["terms"] = io::poly_to_json(b);
    emit(out);
    return kExitOk;
}

int cmd_strpow(const Options& opt, int kmax, bool even_only) {
    json j = read_stdin_json();
    SigPtr ring = opt.ring.empty() ? io::infer_ring_from_matrix_json(j) : ring_from(opt);
    SuperMatrix a = io::matrix_from_json(j, ring, MatParity::Even);
    json out;
    json powers = json::array();
    for (auto& p : power_sums(a, kmax, even_only)) powers.push_back(to_text(p));
    out["powers"] = std::move(powers);
    emit(out);
    return kExitOk;
}

int cmd_inv(const Options& opt) {
    json j = read_stdin_json();
    SigPtr ring = opt.ring.empty() ? io::infer_ring_from_matrix_json(j) : ring_from(opt);
    SuperMatrix a = io::matrix_from_json(j, ring, MatParity::Even);
    emit(io::matrix_to_json(mat_inverse(a)));
    return kExitOk;
}

int cmd_bracket_table(const Options& opt) {
    emit(io::algebra_to_json(*algebra_from(opt)));
    return kExitOk;
}

int cmd_check_axioms(const Options& opt, bool from_stdin) {
    std::shared_ptr<const LieSuperAlgebra> L;
    if (from_stdin) L = io::algebra_from_json(read_stdin_json());
    else L = algebra_from(opt);
    AxiomReport rep = check_axioms(*L);
    json out;
    out["pass"] = rep.pass();
    out["grading"] = rep.grading_violations;
    out["antisymmetry"] = rep.antisymmetry_violations;
    out["jacobi"] = rep.jacobi_violations;
    emit(out);
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_killing(const Options& opt) {
    auto L = algebra_from(opt);
    KillingForm kf = killing_form(*L);
    json out;
    json b = json::array();
    for (auto& row : kf.B) {
        json r = json::array();
        for (auto& v : row) r.push_back(rat_to_string(v));
        b.push_back(std::move(r));
    }
    out["B"] = std::move(b);
    out["detEven"] = rat_to_string(kf.det_even);
    out["detOdd"] = rat_to_string(kf.det_odd);
    out["nondegenerate"] = kf.nondegenerate;
    emit(out);
    return kExitOk;
}

int cmd_poisson(const Options& opt, const std::string& ftext, const std::string& gtext) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    auto f = parse_poly(ftext, P.sig());
    auto g = parse_poly(gtext, P.sig());
    auto br = poisson_bracket(f, g, P);
    json out;
    out["bracket"] = to_text(br);
    out["terms"] = io::poly_to_json(br);
    emit(out);
    return kExitOk;
}

int cmd_diagonalize(const Options& opt) {
    json j = read_stdin_json();
    SigPtr ring = opt.ring.empty() ? io::infer_ring_from_matrix_json(j) : ring_from(opt);
    BlockShape sh = shape_from(opt);
    OrbitSpec spec(kind_from_string(opt.algebra), sh.m, sh.n, lambda_from(opt));
    SuperMatrix w = io::matrix_from_json(j, ring, MatParity::Even);
    DiagonalizationResult res = superdiagonalize(w, spec);
    json out;
    out["g"] = io::matrix_to_json(res.g);
    out["D"] = io::matrix_to_json(res.diagonal);
    out["perOrderResiduals"] = res.per_order_residuals;
    out["membership"] = res.membership;
    out["rigid"] = res.matches_target;
    emit(out);
    return kExitOk;
}

int cmd_vandermonde(const Options& opt) {
    BlockShape sh = shape_from(opt);
    QVector lambda = lambda_from(opt);
    VandermondeResult res = vandermonde_criterion(lambda, sh.m, sh.n);
    json out;
    out["det"] = rat_to_string(res.det);
    out["product"] = rat_to_string(res.product);
    out["statedSign"] = res.stated_sign;
    bool distinct = !is_zero(res.det);
    out["distinct"] = distinct;
    emit(out);
    return distinct ? kExitOk : kExitPrecondition;  // collision = precondition
}

int cmd_ad_invariance(const Options& opt, int kmax, int thetas) {
    BlockShape sh = shape_from(opt);
    AdInvarianceReport rep =
        ad_invariance_check(kind_from_string(opt.algebra), sh.m, sh.n, kmax, thetas, opt.seed);
    json out;
    out["pass"] = rep.pass;
    out["failures"] = rep.failures;
    emit(out);
    return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_syzygy_verify(const Options& opt) {
    auto sig = ring_from(opt);
    json j = read_stdin_json();
    SyzygyInstance inst;
    for (auto& q : j.at("q")) inst.q.push_back(parse_poly(q.get<std::string>(), sig));
    for (auto& f : j.at("f")) inst.f.push_back(parse_poly(f.get<std::string>(), sig));
    for (auto& row : j.at("F")) {
        std::vector<SuperPolynomial> r;
        for (auto& e : row) r.push_back(parse_poly(e.get<std::string>(), sig));
        inst.F.push_back(std::move(r));
    }
    SyzygyReport rep = syzygy_verify(inst);
    json out;
    out["sumVanishes"] = rep.sum_vanishes;
    out["antisymmetric"] = rep.antisymmetric;
    out["certifies"] = rep.certifies;
    out["generatorsEven"] = rep.generators_even;
    out["pass"] = rep.pass();
    emit(out);
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_symmetrize(const Options& opt, const std::string& expr) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    EnvElement e = symmetrize(parse_poly(expr, P.sig()), P, opt.h_order);
    emit(io::env_to_json(e));
    return kExitOk;
}

int cmd_star(const Options& opt, const std::string& ftext, const std::string& gtext) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    auto f = parse_poly(ftext, P.sig());
    auto g = parse_poly(gtext, P.sig());
    HPolynomial prod = star_product(f, g, P, opt.h_order);
    json out;
    out["text"] = hpoly_text(prod);
    out["terms"] = io::hpoly_to_json(prod);
    emit(out);
    return kExitOk;
}

int cmd_casimir(const Options& opt, int index) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    CasimirPair cp = casimir_element(L, P, index, opt.h_order);
    json out;
    out["classical"] = to_text(cp.classical);
    out["classicalTerms"] = io::poly_to_json(cp.classical);
    out["quantum"] = io::env_to_json(cp.quantum);
    emit(out);
    return kExitOk;
}

int cmd_central(const Options& opt, int index, bool from_stdin) {
    auto L = algebra_from(opt);
    EnvElement e(L, opt.h_order);
    if (from_stdin) {
        e = io::env_from_json(read_stdin_json(), L, opt.h_order);
    } else {
        PoissonRing P(L);
        e = casimir_element(L, P, index, opt.h_order).quantum;
    }
    bool central = centrality_check(e);
    json out;
    out["central"] = central;
    emit(out);
    return central ? kExitOk : kExitCheckFailed;
}

int cmd_quotient_basis(const Options& opt) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    BlockShape sh = shape_from(opt);
    OrbitSpec spec(kind_from_string(opt.algebra), sh.m, sh.n, lambda_from(opt));
    IdealSpec ideal = make_orbit_ideal(L, P, spec, opt.deg_cutoff, opt.h_order);
    QuotientBasis Q(std::move(ideal));
    json out;
    json words = json::array();
    for (auto& w : Q.basis_words()) {
        json jw = json::array();
        for (int i : w.idx) jw.push_back(i + 1);
        words.push_back(std::move(jw));
    }
    out["basis"] = std::move(words);
    json monos = json::array();
    for (auto& m : Q.standard_monomials()) {
        std::string s = monomial_text(m, *P.sig());
        monos.push_back(s.empty() ? "1" : s);
    }
    out["standardMonomials"] = std::move(monos);
    out["gradedDims"] = Q.graded_dimensions();
    out["rank"] = (int)Q.standard_monomials().size();
    emit(out);
    return kExitOk;
}

int cmd_star_axioms(const Options& opt, int samples) {
    auto L = algebra_from(opt);
    PoissonRing P(L);
    std::optional<QuotientBasis> Q;
    if (!opt.lambda.empty()) {
        BlockShape sh = shape_from(opt);
        OrbitSpec spec(kind_from_string(opt.algebra), sh.m, sh.n, lambda_from(opt));
        Q.emplace(make_orbit_ideal(L, P, spec, opt.deg_cutoff, opt.h_order));
    }
    StarAxiomReport rep =
        star_axiom_check(P, Q ? &*Q : nullptr, samples, opt.h_order, opt.seed);
    json out;
    out["pairsChecked"] = rep.pairs_checked;
    out["failures"] = rep.failures;
    out["pass"] = rep.pass();
    emit(out);
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for supercommutative rings, supermatrices,\n"
                 "Lie superalgebras, orbit diagonalization and deformation quantization"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--ring", opt.ring, "ring generators M,N")->group("global");
    app.add_option("--caps", opt.caps, "even generator exponent caps c1,c2,..")->group("global");
    app.add_option("--shape", opt.shape, "block shape m,n")->group("global");
    app.add_option("--algebra", opt.algebra, "gl | sl | osp")->group("global");
    app.add_option("--lambda", opt.lambda, "diagonal eigenvalues l1,l2,..")->group("global");
    app.add_option("--h-order", opt.h_order, "h truncation order H")->group("global");
    app.add_option("--deg-cutoff", opt.deg_cutoff, "degree cutoff d")->group("global");
    app.add_option("--seed", opt.seed, "random seed")->group("global");
    app.add_flag("--json", opt.json_out, "machine output (always on for data commands)")
        ->group("global");

    std::string expr, expr2, map_text;
    bool body = false, invert = false, even_only = false, from_stdin = false;
    int odd_comp = -1, kmax = 3, thetas = 1, index = 1, samples = 25;

    auto* eval = app.add_subcommand("eval", "parse and evaluate an expression");
    eval->add_option("expr", expr)->required();
    eval->add_flag("--body", body, "project to the even subring");
    eval->add_option("--odd-component", odd_comp, "keep odd degree exactly k");
    eval->add_flag("--invert", invert, "invert (constant + nilpotent)");

    auto* subst = app.add_subcommand("subst", "apply a generator substitution");
    subst->add_option("--map", map_text, "x1=expr;t2=expr;..")->required();
    subst->add_option("expr", expr)->required();

    auto* ber = app.add_subcommand("ber", "berezinian of the matrix on stdin");
    (void)ber;
    auto* strpow = app.add_subcommand("strpow", "supertrace powers of the matrix on stdin");
    strpow->add_option("--kmax", kmax);
    strpow->add_flag("--even-only", even_only);
    auto* inv = app.add_subcommand("inv", "inverse of the matrix on stdin");
    (void)inv;

    auto* table = app.add_subcommand("bracket-table", "structure constants of a preset algebra");
    (void)table;
    auto* axioms = app.add_subcommand("check-axioms", "graded bracket axioms");
    axioms->add_flag("--stdin", from_stdin, "read a structure-constant table from stdin");
    auto* killing = app.add_subcommand("killing", "Killing form and nondegeneracy");
    (void)killing;

    auto* poisson = app.add_subcommand("poisson", "Poisson bracket of two coordinate polynomials");
    poisson->add_option("f", expr)->required();
    poisson->add_option("g", expr2)->required();

    auto* diag = app.add_subcommand("diagonalize", "order-by-order diagonalization of stdin matrix");
    (void)diag;
    auto* vand = app.add_subcommand("vandermonde", "signed power-matrix determinant");
    (void)vand;
    auto* adinv = app.add_subcommand("ad-invariance", "symbolic conjugation invariance of power sums");
    adinv->add_option("--kmax", kmax);
    adinv->add_option("--thetas", thetas, "number of extra odd parameters");
    auto* syz = app.add_subcommand("syzygy-verify", "verify an antisymmetric syzygy certificate");
    (void)syz;

    auto* symify = app.add_subcommand("symmetrize", "supersymmetrizer image of a polynomial");
    symify->add_option("expr", expr)->required();
    auto* star = app.add_subcommand("star", "star product of two coordinate polynomials");
    star->add_option("f", expr)->required();
    star->add_option("g", expr2)->required();
    auto* casimir = app.add_subcommand("casimir", "invariant power sum and its quantum image");
    casimir->add_option("--index", index, "power i");
    auto* central = app.add_subcommand("central", "centrality in the deformed enveloping algebra");
    central->add_option("--index", index, "casimir power i");
    central->add_flag("--stdin", from_stdin, "read the element from stdin instead");
    auto* qbasis = app.add_subcommand("quotient-basis", "standard-monomial basis of the orbit quotient");
    (void)qbasis;
    auto* staraxioms = app.add_subcommand("star-axioms", "deformation axioms, optionally on the quotient");
    staraxioms->add_option("--samples", samples);

    // global flags are accepted after the subcommand name too
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(opt, expr, body, odd_comp, invert);
        if (subst->parsed()) return cmd_subst(opt, map_text, expr);
        if (ber->parsed()) return cmd_ber(opt);
        if (strpow->parsed()) return cmd_strpow(opt, kmax, even_only);
        if (inv->parsed()) return cmd_inv(opt);
        if (table->parsed()) return cmd_bracket_table(opt);
        if (axioms->parsed()) return cmd_check_axioms(opt, from_stdin);
        if (killing->parsed()) return cmd_killing(opt);
        if (poisson->parsed()) return cmd_poisson(opt, expr, expr2);
        if (diag->parsed()) return cmd_diagonalize(opt);
        if (vand->parsed()) return cmd_vandermonde(opt);
        if (adinv->parsed()) return cmd_ad_invariance(opt, kmax, thetas);
        if (syz->parsed()) return cmd_syzygy_verify(opt);
        if (symify->parsed()) return cmd_symmetrize(opt, expr);
        if (star->parsed()) return cmd_star(opt, expr, expr2);
        if (casimir->parsed()) return cmd_casimir(opt, index);
        if (central->parsed()) return cmd_central(opt, index, from_stdin);
        if (qbasis->parsed()) return cmd_quotient_basis(opt);
        if (staraxioms->parsed()) return cmd_star_axioms(opt, samples);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
