#include "wpalg/rings.hpp"
#include "wpalg/tate.hpp"
#include "wpalg/verify.hpp"
#include "wpalg/wp_model.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    int p = 2;
    int max_degree = 6;
    std::string format = "json";
    std::string out;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opt.out);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << text << "\n";
    }
}

json quiver_json(const wpalg::Quiver& q) { return json::parse(q.to_json()); }

int cmd_quiver(const Options& opt, const std::string& which, const std::string& window) {
    wpalg::Quiver q;
    if (which == "wp") {
        q = *wpalg::build_wp_instance(opt.p).quiver;
    } else if (which == "zhu") {
        q = *wpalg::build_wp_instance(opt.p).zhu_quiver;
    } else if (which == "gra") {
        wpalg::Quiver g;
        int v = g.add_vertex("C");
        for (const char* lbl : {"E", "F", "H", "omega"}) g.add_arrow(v, v, lbl);
        q = g;
    } else if (which == "gra-graded") {
        if (window.empty()) {
            std::cerr << "error: --window a:b is required for --which gra-graded\n";
            return kExitUsage;
        }
        auto colon = window.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --window must look like a:b\n";
            return kExitUsage;
        }
        long a = std::stol(window.substr(0, colon));
        long b = std::stol(window.substr(colon + 1));
        q = wpalg::graded_grA_quiver_window(opt.p, a, b);
    } else {
        std::cerr << "error: unknown quiver '" << which << "'\n";
        return kExitUsage;
    }
    if (opt.format == "dot")
        write_output(opt, q.to_dot());
    else
        write_output(opt, quiver_json(q).dump(2));
    return 0;
}

int cmd_dims(const Options& opt) {
    wpalg::QuotientRing grA = wpalg::build_grA(opt.p);
    wpalg::WpInstance W = wpalg::build_wp_instance(opt.p);
    json doc;
    doc["p"] = opt.p;
    doc["dim_grA"] = grA.dim();
    doc["dim_E"] = W.basic.total_dim();
    doc["dim_zhu_basic"] = W.zhu.total_dim();
    json basis = json::array();
    for (const auto& m : grA.basis())
        basis.push_back(wpalg::Polynomial::term(grA.ring(), m, wpalg::Rational(1)).to_string());
    doc["grA_basis"] = basis;
    json edims = json::array();
    for (int d : W.basic.degree_dims()) edims.push_back(d);
    doc["E_degree_dims"] = edims;
    if (opt.format == "csv") {
        std::string csv = "quantity,value\ndim_grA," + std::to_string(grA.dim()) + "\ndim_E," +
                          std::to_string(W.basic.total_dim()) + "\ndim_zhu_basic," +
                          std::to_string(W.zhu.total_dim());
        write_output(opt, csv);
    } else {
        write_output(opt, doc.dump(2));
    }
    return 0;
}

int cmd_yoneda(const Options& opt) {
    wpalg::WpInstance W = wpalg::build_wp_instance(opt.p);
    wpalg::GradedQuotient yq(W.yoneda.quiver_ptr(), wpalg::PathIdeal(W.yoneda.relations()));
    json doc;
    doc["p"] = opt.p;
    json dims = json::array(), cum = json::array();
    long run = 0;
    for (int n = 0; n <= opt.max_degree; ++n) {
        long d = yq.dim(n);
        run += d;
        dims.push_back(d);
        cum.push_back(run);
    }
    doc["dims"] = dims;
    doc["cumulative"] = cum;
    doc["presentation"] = json::parse(W.yoneda.to_json());
    if (opt.format == "csv") {
        std::string csv = "degree,dim,cumulative";
        run = 0;
        for (int n = 0; n <= opt.max_degree; ++n) {
            long d = yq.dim(n);
            run += d;
            csv += "\n" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(run);
        }
        write_output(opt, csv);
    } else {
        write_output(opt, doc.dump(2));
    }
    return 0;
}

int cmd_zhu(const Options& opt) {
    wpalg::WpInstance W = wpalg::build_wp_instance(opt.p);
    json doc;
    doc["p"] = opt.p;
    doc["dim_zhu_basic"] = W.zhu.total_dim();
    json dims = json::array();
    for (int n = 0; n <= opt.max_degree; ++n) dims.push_back(wpalg::zhu_yoneda_dim(opt.p, n));
    doc["yoneda_dims"] = dims;
    doc["quiver"] = quiver_json(*W.zhu_quiver);
    write_output(opt, doc.dump(2));
    return 0;
}

int cmd_groebner(const Options& opt) {
    wpalg::QuotientRing grA = wpalg::build_grA(opt.p);
    json doc;
    doc["p"] = opt.p;
    doc["dim_grA"] = grA.dim();
    json gens = json::array();
    for (const auto& g : grA.gb().gens) gens.push_back(g.to_string());
    doc["grA_groebner_basis"] = gens;
    auto kept = wpalg::minimal_generators(wpalg::ring_EFHw(opt.p), wpalg::grA_relations11(opt.p),
                                          wpalg::grA_order(opt.p));
    json keptj = json::array();
    for (auto i : kept) keptj.push_back("r" + std::to_string(i + 1));
    doc["minimal_generators"] = keptj;
    auto rels11 = wpalg::grA_relations11(opt.p);
    auto r4 = wpalg::is_regular_sequence(
        wpalg::ring_EFHw(opt.p), {rels11[0], rels11[1], rels11[2], rels11[3]});
    doc["regular_sequence_r1_r4"] = r4.regular;
    if (opt.p <= 3) {
        if (opt.p >= 3)
            std::cerr << "note: the 8-variable regular-sequence certificate can take a while for p >= 3\n";
        auto r8 = wpalg::is_regular_sequence(wpalg::ring_EFHwx(opt.p),
                                             wpalg::rtilde_relations(opt.p));
        doc["regular_sequence_r1_rt8"] = r8.regular;
        wpalg::QuotientRing rt = wpalg::build_Rtilde(opt.p);
        doc["dim_Rtilde"] = rt.dim();  // informational; no reference value exists
    } else {
        std::cerr << "note: skipping the 8-variable computations for p >= 4 (slow)\n";
    }
    write_output(opt, doc.dump(2));
    return 0;
}

int cmd_tate(const Options& opt) {
    if (opt.p >= 4)
        std::cerr << "note: the 8-variable basis computation can take a while for p >= 4\n";
    wpalg::TateComplex T(opt.p);
    wpalg::RResolutionStart R(opt.p);
    json doc;
    doc["p"] = opt.p;
    json ranks = json::array(), hdims = json::array(), image = json::array();
    for (int m = 0; m <= 8; ++m) {
        ranks.push_back(wpalg::TateComplex::rank(m));
        hdims.push_back(wpalg::SkewAlgebra::dim(m));
        image.push_back(wpalg::image_pi_sharp_dim(m));
    }
    doc["ranks"] = ranks;
    doc["hstar_dims"] = hdims;
    doc["image_dims"] = image;
    doc["dim_Rtilde"] = T.ring().dim();
    int checked_through = 5;
    doc["dsquared_checked_through"] = checked_through;
    doc["dsquared_zero"] = T.dsquare_zero_through(checked_through);
    doc["minimal"] = T.minimal();
    wpalg::PiSharpTable table = wpalg::pi_sharp_generators(T, R);
    json pis;
    for (int i = 0; i < 4; ++i)
        pis["gamma" + std::to_string(i + 1)] = wpalg::SkewAlgebra::to_string(table.gamma[i]);
    for (const auto& [j, img] : table.delta)
        pis["delta" + std::to_string(j)] = wpalg::SkewAlgebra::to_string(img);
    doc["pi_sharp"] = pis;
    write_output(opt, doc.dump(2));
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite_name) {
    wpalg::Suite suite;
    try {
        suite = wpalg::suite_from_string(suite_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (opt.p >= 5)
        std::cerr << "note: p >= 5 can make the 8-variable computations slow\n";
    auto results = wpalg::run_suite(opt.p, suite, opt.max_degree);
    bool all_pass = true;
    json doc;
    doc["p"] = opt.p;
    json checks = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << ": " << r.detail << "\n";
        checks.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    }
    doc["checks"] = checks;
    doc["pass"] = all_pass;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        f << doc.dump(2) << "\n";
    }
    return all_pass ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the triplet-algebra family: quivers, Yoneda algebras, "
                 "Groebner certificates, and the complete-intersection resolution"};
    app.require_subcommand(1);

    if (const char* threads = std::getenv("WPALG_THREADS")) {
        if (std::string(threads) != "1")
            std::cerr << "note: WPALG_THREADS is accepted but this build runs single-threaded\n";
    }

    Options opt;
    std::string which = "wp", window, suite = "all";

    auto add_common = [&](CLI::App* sub, bool with_degree = true) {
        sub->add_option("--p", opt.p, "family parameter, p >= 2")->check(CLI::Range(2, 1 << 20));
        if (with_degree)
            sub->add_option("--max-degree", opt.max_degree, "degree bound for per-degree checks")
                ->check(CLI::Range(0, 12));
        sub->add_option("--format", opt.format, "json, csv, dot or text")
            ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
        sub->add_option("--out", opt.out, "write the document to a file instead of stdout");
    };

    CLI::App* quiver = app.add_subcommand("quiver", "emit one of the quivers");
    add_common(quiver, false);
    quiver->add_option("--which", which, "wp, zhu, gra or gra-graded")
        ->check(CLI::IsMember({"wp", "zhu", "gra", "gra-graded"}));
    quiver->add_option("--window", window, "a:b vertex window (gra-graded only)");

    CLI::App* dims = app.add_subcommand("dims", "dimension report");
    add_common(dims, false);
    CLI::App* yoneda = app.add_subcommand("yoneda", "Yoneda algebra dimensions and presentation");
    add_common(yoneda);
    CLI::App* zhu = app.add_subcommand("zhu", "Zhu-side report");
    add_common(zhu);
    CLI::App* groebner = app.add_subcommand("groebner", "Groebner bases and certificates");
    add_common(groebner, false);
    CLI::App* tate = app.add_subcommand("tate", "resolution data over the extended ring");
    add_common(tate, false);
    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify);
    verify->add_option("--suite", suite, "quivers, yoneda, koszul, groebner, tate or all")
        ->check(CLI::IsMember({"quivers", "yoneda", "koszul", "groebner", "tate", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (quiver->parsed()) return cmd_quiver(opt, which, window);
        if (dims->parsed()) return cmd_dims(opt);
        if (yoneda->parsed()) return cmd_yoneda(opt);
        if (zhu->parsed()) return cmd_zhu(opt);
        if (groebner->parsed()) return cmd_groebner(opt);
        if (tate->parsed()) return cmd_tate(opt);
        if (verify->parsed()) return cmd_verify(opt, suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
