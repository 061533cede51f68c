#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "ncfgl/bfk.hpp"
#include "ncfgl/errors.hpp"
#include "ncfgl/qsym.hpp"
#include "ncfgl/verify.hpp"

using namespace ncfgl;
using nlohmann::json;

namespace {

struct RunConfig {
    int order = 10;
    std::string convention = "paper-figures";
    std::string format = "text";
    std::string out;
    int max_weight = 8;
    bool topological = false;
};

Convention conv_of(const RunConfig& cfg) {
    auto c = convention_from_name(cfg.convention);
    if (!c) throw BadInput("unknown convention: " + cfg.convention);
    return *c;
}

FglEngine make_engine(const RunConfig& cfg) {
    if (cfg.order < 2) throw BadInput("order must be >= 2");
    return FglEngine(cfg.order, conv_of(cfg));
}

std::string render(const FreePoly& p, const RunConfig& cfg, const std::string& gen = "Z") {
    if (cfg.format == "latex") return p.to_latex(gen);
    if (cfg.format == "json") return p.to_json();
    return p.to_text(gen);
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw BadInput("cannot open output path " + cfg.out);
        f << payload;
    }
}

Composition parse_comp(const std::string& s) {
    Composition I;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(part, &pos);
        } catch (const std::exception&) {
            throw BadInput("bad composition entry: " + part);
        }
        if (pos != part.size() || v < 1) throw BadInput("bad composition entry: " + part);
        I.push_back(v);
    }
    return I;
}

std::string comp_text(const Composition& I) {
    std::string s = "m[";
    for (size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    return s + "]";
}

std::string qsym_lines(const QSymElement& e, const std::string& head, const RunConfig& cfg) {
    if (cfg.format == "json") {
        json j;
        j["order"] = e.order;
        j["terms"] = json::array();
        for (const auto& [I, c] : e.terms)
            j["terms"].push_back({{"comp", I}, {"value", json::parse(c.to_json())}});
        return j.dump(2);
    }
    std::ostringstream os;
    for (const auto& [I, c] : e.terms)
        os << head << '[' << comp_text(I) << "] = " << render(c, cfg) << "\n";
    return os.str();
}

std::string report_lines(const std::vector<RelationReport>& rs, const RunConfig& cfg) {
    if (cfg.format == "json") return reports_to_json(rs);
    std::ostringstream os;
    int bad = 0;
    for (const auto& r : rs) {
        os << (r.ok ? "ok   " : "FAIL ") << r.relation << "\n";
        if (!r.ok) {
            ++bad;
            os << "     lhs: " << r.lhs << "\n     rhs: " << r.rhs << "\n";
        }
    }
    os << rs.size() << " checks, " << bad << " failures\n";
    return os.str();
}

int thread_cap() {
    // accepted for interface stability; all computation is sequential today
    const char* env = std::getenv("NCFGL_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    (void)thread_cap();

    CLI::App app{"exact calculus of the noncommutative formal group law"};
    app.require_subcommand(1);
    app.add_option("-n,--order", cfg.order, "truncation order (weight cap)")
        ->capture_default_str();
    app.add_option("--convention", cfg.convention, "braiding table naming")
        ->check(CLI::IsMember({"paper-figures", "direct"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output file (reproduce-figures: output directory)");
    app.add_option("--max-weight", cfg.max_weight, "weight bound for suites and enumerations")
        ->capture_default_str();
    app.add_flag("--topological", cfg.topological, "report degrees doubled (topological grading)");

    int rc = 0;

    int phi_k = 1;
    std::string phi_arg = "Z1";
    auto* c_phi = app.add_subcommand("phi", "apply phi_k to a polynomial")->fallthrough();
    c_phi->add_option("--k", phi_k, "operator index")->required();
    c_phi->add_option("--arg", phi_arg, "argument polynomial")->capture_default_str();
    c_phi->callback([&] {
        FglEngine eng = make_engine(cfg);
        emit(cfg, render(eng.phi(phi_k, FreePoly::parse(phi_arg)), cfg));
    });

    int ups_p = 1, ups_q = 2;
    auto* c_ups = app.add_subcommand("upsilon", "braiding table entry")->fallthrough();
    c_ups->add_option("--p", ups_p)->required();
    c_ups->add_option("--q", ups_q)->required();
    c_ups->callback([&] {
        FglEngine eng = make_engine(cfg);
        emit(cfg, render(eng.upsilon(ups_p, ups_q), cfg));
    });

    int fgl_i = 1, fgl_j = 1;
    auto* c_fgl = app.add_subcommand("fgl", "group-law coefficient a_{i,j}")->fallthrough();
    c_fgl->add_option("--i", fgl_i)->required();
    c_fgl->add_option("--j", fgl_j)->required();
    c_fgl->callback([&] {
        FglEngine eng = make_engine(cfg);
        emit(cfg, render(eng.fgl_coeff(fgl_i, fgl_j), cfg));
    });

    auto* c_inv = app.add_subcommand("inverse", "formal inverse coefficients")->fallthrough();
    c_inv->callback([&] {
        FglEngine eng = make_engine(cfg);
        const auto& iota = eng.formal_inverse();
        if (cfg.format == "json") {
            json j = json::array();
            for (int k = 1; k <= eng.order(); ++k)
                j.push_back({{"k", k}, {"value", json::parse(iota[size_t(k)].to_json())}});
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (int k = 1; k <= eng.order(); ++k)
            os << "iota[" << k << "] = " << render(iota[size_t(k)], cfg) << "\n";
        emit(cfg, os.str());
    });

    auto* c_gens = app.add_subcommand("gens", "free generator family")->fallthrough();
    c_gens->callback([&] {
        FglEngine eng = make_engine(cfg);
        if (cfg.max_weight > eng.order()) throw BadInput("max-weight exceeds order");
        auto gens = commutator_generators(cfg.max_weight);
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& gs : gens) {
                FreePoly v = eng.phi_word(gs.ivec, eng.upsilon(gs.p, gs.q));
                j.push_back({{"name", gs.name()},
                             {"weight", gs.weight()},
                             {"value", json::parse(v.to_json())}});
            }
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (const auto& gs : gens)
            os << gs.name() << " = "
               << render(eng.phi_word(gs.ivec, eng.upsilon(gs.p, gs.q)), cfg) << "\n";
        emit(cfg, os.str());
    });

    auto* c_comm = app.add_subcommand("commutators", "[X_i, X_j] table")->fallthrough();
    c_comm->callback([&] {
        FglEngine eng = make_engine(cfg);
        int top = std::min(3, eng.order());
        if (cfg.format == "json") {
            json j = json::array();
            for (int i = 1; i <= top; ++i)
                for (int k = i + 1; k <= top; ++k) {
                    FreePoly c = commutator(eng.generator_X(i), eng.generator_X(k));
                    j.push_back({{"i", i}, {"j", k}, {"value", json::parse(c.to_json())}});
                }
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (int i = 1; i <= top; ++i)
            for (int k = i + 1; k <= top; ++k)
                os << "[X" << i << ",X" << k << "] = "
                   << render(commutator(eng.generator_X(i), eng.generator_X(k)), cfg) << "\n";
        emit(cfg, os.str());
    });

    int vieta_nvars = 2;
    auto* c_vieta = app.add_subcommand("vieta", "conjugated Vieta coordinates")->fallthrough();
    c_vieta->add_option("--nvars", vieta_nvars)->capture_default_str();
    c_vieta->callback([&] {
        if (vieta_nvars < 1) throw BadInput("nvars must be >= 1");
        VietaFrame fr = vieta(vieta_nvars, cfg.order);
        if (cfg.format == "json") {
            json j = json::array();
            for (int k = 0; k < vieta_nvars; ++k) {
                json terms = json::array();
                for (const auto& [e, c] : fr.y[size_t(k)].terms())
                    terms.push_back({{"exp", e}, {"value", json::parse(c.to_json())}});
                j.push_back({{"y", k + 1}, {"terms", terms}});
            }
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (int k = 0; k < vieta_nvars; ++k)
            for (const auto& [e, c] : fr.y[size_t(k)].terms()) {
                os << 'y' << (k + 1) << '[';
                for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
                os << "] = " << render(c, cfg) << "\n";
            }
        emit(cfg, os.str());
    });

    int chern_k = 2, chern_nvars = 0;
    auto* c_chern = app.add_subcommand("chern", "propagated Chern class")->fallthrough();
    c_chern->add_option("--k", chern_k)->capture_default_str();
    c_chern->add_option("--nvars", chern_nvars, "0 = same as k")->capture_default_str();
    c_chern->callback([&] {
        int nv = chern_nvars > 0 ? chern_nvars : chern_k;
        if (chern_k < 1 || nv < chern_k) throw BadInput("need 1 <= k <= nvars");
        emit(cfg, qsym_lines(chern(chern_k, nv, cfg.order), "c" + std::to_string(chern_k), cfg));
    });

    std::string mul_left = "1", mul_right = "1";
    auto* c_mul = app.add_subcommand("qsym-mul", "product of monomial functions")->fallthrough();
    c_mul->add_option("--left", mul_left, "composition, comma separated")->required();
    c_mul->add_option("--right", mul_right, "composition, comma separated")->required();
    c_mul->callback([&] {
        QSymElement a = QSymElement::monomial(cfg.order, parse_comp(mul_left));
        QSymElement b = QSymElement::monomial(cfg.order, parse_comp(mul_right));
        emit(cfg, qsym_lines(qsym_mul(a, b, cfg.order), "prod", cfg));
    });

    std::string sc_comp = "1", sc_poly = "Z1";
    auto* c_sc = app.add_subcommand("qsym-scalar", "right action of a scalar")->fallthrough();
    c_sc->add_option("--comp", sc_comp, "composition, comma separated")->required();
    c_sc->add_option("--scalar", sc_poly, "scalar polynomial")->required();
    c_sc->callback([&] {
        FglEngine eng = make_engine(cfg);
        QSymElement r = qsym_scalar(parse_comp(sc_comp), FreePoly::parse(sc_poly), cfg.order, eng);
        emit(cfg, qsym_lines(r, "res", cfg));
    });

    std::string wh_comp = "1", wh_poly = "1";
    auto* c_wh = app.add_subcommand("whitney", "deconcatenation coproduct")->fallthrough();
    c_wh->add_option("--comp", wh_comp, "composition, comma separated")->required();
    c_wh->add_option("--scalar", wh_poly, "left coefficient")->capture_default_str();
    c_wh->callback([&] {
        QSymElement a =
            QSymElement::monomial(cfg.order, parse_comp(wh_comp), FreePoly::parse(wh_poly));
        auto split = whitney_coproduct(a);
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& t : split)
                j.push_back({{"left", t.left},
                             {"right", t.right},
                             {"value", json::parse(t.c.to_json())}});
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (const auto& t : split)
            os << render(t.c, cfg) << " | " << comp_text(t.left) << " (x) "
               << comp_text(t.right) << "\n";
        emit(cfg, os.str());
    });

    auto* c_theta = app.add_subcommand("theta", "mixed-basis commutation table")->fallthrough();
    c_theta->callback([&] {
        ThetaTable th = theta_table(cfg.order);
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& [pq, c] : th.t)
                j.push_back(
                    {{"p", pq.first}, {"q", pq.second}, {"value", json::parse(c.to_json())}});
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (const auto& [pq, c] : th.t)
            os << "theta[" << pq.first << ',' << pq.second << "] = " << render(c, cfg) << "\n";
        emit(cfg, os.str());
    });

    auto* c_split = app.add_subcommand("splitting-b", "splitting coefficients")->fallthrough();
    c_split->callback([&] {
        auto B = splitting_B(cfg.order);
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& [nm, c] : B)
                j.push_back(
                    {{"n", nm.first}, {"m", nm.second}, {"value", json::parse(c.to_json())}});
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (const auto& [nm, c] : B)
            os << "B[" << nm.first << ',' << nm.second << "] = " << render(c, cfg) << "\n";
        emit(cfg, os.str());
    });

    auto* c_ranks = app.add_subcommand("ranks", "module freeness rank table")->fallthrough();
    c_ranks->callback([&] {
        FglEngine eng = make_engine(cfg);
        if (cfg.max_weight > eng.order()) throw BadInput("max-weight exceeds order");
        auto rows = basis_check(cfg.max_weight, eng);
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& r : rows)
                j.push_back({{"weight", cfg.topological ? 2 * r.weight : r.weight},
                             {"family", r.family_size},
                             {"expected", r.expected.str()},
                             {"rank", r.rank},
                             {"index", r.index.str()},
                             {"ok", r.count_ok && r.full_rank}});
            emit(cfg, j.dump(2));
            return;
        }
        std::ostringstream os;
        for (const auto& r : rows)
            os << (cfg.topological ? "degree " : "weight ")
               << (cfg.topological ? 2 * r.weight : r.weight) << ": family " << r.family_size
               << ", expected " << r.expected.str() << ", rank " << r.rank << ", index "
               << r.index.str() << (r.count_ok && r.full_rank ? ", ok" : ", RANK DEFECT") << "\n";
        emit(cfg, os.str());
    });

    std::string suite = "all";
    auto* c_verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"relations", "hopf", "basis", "qsym", "vieta", "all"}))
        ->capture_default_str();
    c_verify->callback([&] {
        FglEngine eng = make_engine(cfg);
        std::vector<RelationReport> rs;
        auto add = [&rs](std::vector<RelationReport> v) {
            for (auto& r : v) rs.push_back(std::move(r));
        };
        bool all = suite == "all";
        if (all || suite == "relations") {
            add(verify_figures(eng));
            add(verify_relation_suite(eng.order(), eng));
            add(verify_commutators(eng));
        }
        if (all || suite == "hopf") {
            add(verify_hopf(cfg.max_weight, eng));
            add(verify_braiding(std::min(eng.order(), 8), eng));
        }
        if (all || suite == "basis")
            add(verify_dims(eng.order(), std::min(cfg.max_weight, eng.order()), eng));
        if (all || suite == "qsym") {
            add(verify_qsym(eng));
            add(verify_splitting(std::min(eng.order(), 8)));
        }
        if (all || suite == "vieta") add(verify_vieta_chern(eng));
        if (all) {
            auto f1 = reproduce_figures(eng), f2 = reproduce_figures(eng);
            rs.push_back({"reproduce-figures byte-determinism", f1 == f2 && !f1.empty(), "", ""});
        }
        emit(cfg, report_lines(rs, cfg));
        if (!all_ok(rs)) rc = 1;
    });

    auto* c_repr =
        app.add_subcommand("reproduce-figures", "regenerate the published tables")->fallthrough();
    c_repr->callback([&] {
        FglEngine eng = make_engine(cfg);
        auto files = reproduce_figures(eng);
        std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
        std::filesystem::create_directories(dir);
        for (const auto& [name, payload] : files) {
            std::ofstream f(dir / name, std::ios::binary);
            if (!f) throw BadInput("cannot open output path " + (dir / name).string());
            f << payload;
            std::cout << "wrote " << (dir / name).string() << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
