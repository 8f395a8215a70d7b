// catspec: forward spectra and two-spectra shape recovery for equilateral
// caterpillar trees, as files. Exit codes: 0 done, 1 bad invocation or
// unreadable input, 2 the mathematics rejected the data.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "catspec/cfrac.hpp"
#include "catspec/io.hpp"
#include "catspec/recover.hpp"
#include "catspec/spectral_polynomials.hpp"
#include "catspec/spectrum.hpp"
#include "catspec/tree.hpp"

namespace {

using namespace catspec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) { return json::parse(slurp(path)); }

// Everything the tool prints is dump(2); nlohmann orders keys, so reruns are
// byte-identical.
std::string dumps(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw UsageError("cannot write " + out_path);
    os << text;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CaterpillarShape parse_stalk(const std::string& list) {
    std::vector<int> degrees;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int d = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
            degrees.push_back(d);
        } catch (const std::logic_error&) {
            throw UsageError("--stalk wants a comma separated integer list, got '" + list + "'");
        }
    }
    return CaterpillarShape(std::move(degrees));
}

RationalPoly ipoly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

struct ShapeSource {
    std::string in;
    std::string stalk;
    CLI::Option* in_opt = nullptr;
    CLI::Option* stalk_opt = nullptr;

    void attach(CLI::App* cmd) {
        in_opt = cmd->add_option("--in", in, "shape JSON file");
        stalk_opt =
            cmd->add_option("--stalk", stalk, "interior degrees, e.g. 5,3,2,4; empty for the single edge");
        in_opt->excludes(stalk_opt);
        stalk_opt->excludes(in_opt);
    }
    CaterpillarShape load() const {
        if (stalk_opt->count()) return parse_stalk(stalk);
        if (in_opt->count()) return shape_from_json(read_json_file(in));
        throw UsageError("need --in or --stalk");
    }
};

int cmd_gen(bool have_stalk, const std::string& stalk, int p, std::uint64_t seed,
            const std::string& out) {
    CaterpillarShape shape = have_stalk ? parse_stalk(stalk) : random_shape(p, seed);
    emit(out, dumps(shape_to_json(shape)));
    return kExitOk;
}

int cmd_forward(const ShapeSource& src, double l, int windows, double noise,
                const std::string& decay, std::uint64_t seed, const std::string& format,
                const std::string& out) {
    Tree t = shape_to_tree(src.load());
    Spectrum neu = neumann_spectrum(t, l, windows);
    Spectrum dir = dirichlet_spectrum(t, l, windows);
    if (noise > 0.0) {
        NoiseModel nm;
        nm.amplitude = noise;
        nm.decay = decay == "1/k" ? NoiseModel::Decay::OneOverK : NoiseModel::Decay::Constant;
        nm.seed = seed;
        neu = perturb(neu, nm);
        nm.seed = seed + 1;  // the two spectra are measured independently
        dir = perturb(dir, nm);
    }
    if (out.empty()) {
        if (format == "csv") throw UsageError("--format csv needs --out");
        emit("", dumps(json{{"l", l},
                            {"neumann", spectrum_to_json(neu)},
                            {"dirichlet", spectrum_to_json(dir)}}));
        return kExitOk;
    }
    const std::string ext = format == "csv" ? ".csv" : ".json";
    for (auto& [name, spec] : {std::pair<const char*, Spectrum&>{"neumann", neu},
                               {"dirichlet", dir}}) {
        const std::string path = out + "." + name + ext;
        if (format == "csv") {
            std::ofstream os(path);
            if (!os) throw UsageError("cannot write " + path);
            write_spectrum_csv(os, spec);
        } else {
            emit(path, dumps(spectrum_to_json(spec)));
        }
    }
    return kExitOk;
}

int cmd_polys(const ShapeSource& src, const std::string& out) {
    CaterpillarShape shape = src.load();
    Tree t = shape_to_tree(shape);
    json j = pencil_to_json(build_pencil(t));
    j["ratio"] = ratio_to_json(psi_theta_ratio(t));
    j["shape"] = shape_to_json(shape);
    emit(out, dumps(j));
    return kExitOk;
}

int cmd_expand(const std::string& in, bool rounded, double tol, const std::string& out) {
    json j = read_json_file(in);
    std::pair<CaterpillarShape, ExpansionTrace> r =
        rounded ? cf_expand_rounded(real_ratio_from_json(j), tol)
                : cf_expand_exact(ratio_from_json(j));
    json o = shape_to_json(r.first);
    o["trace"] = trace_to_json(r.second);
    emit(out, dumps(o));
    return kExitOk;
}

void plot_rows(std::ostream& os, const char* series, const Spectrum& spec, double l,
               int windows) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    for (const auto& e : spec.entries) {
        const double x = e.sqrt_lambda * l;
        if (x >= kTwoPi * windows) break;
        os << "residue," << series << "," << fmt_double(std::fmod(x, kTwoPi)) << ",,,\n";
    }
}

int cmd_recover(const std::string& neumann_path, const std::string& dirichlet_path, double l,
                const RecoverOptions& opts, const std::string& format, const std::string& out) {
    std::ifstream nin(neumann_path);
    if (!nin) throw UsageError("cannot open " + neumann_path);
    Spectrum neu = read_spectrum_csv(nin);
    std::ifstream din(dirichlet_path);
    if (!din) throw UsageError("cannot open " + dirichlet_path);
    Spectrum dir = read_spectrum_csv(din);

    RecoveryReport rep = recover(neu, dir, l, opts);
    if (format == "csv") {
        // Plot data: folded residues, cluster centers, recovered root locations.
        std::ostringstream os;
        os << "record,series,value,weight,spread,members\n";
        plot_rows(os, "neumann", neu, l, opts.windows);
        plot_rows(os, "dirichlet", dir, l, opts.windows);
        for (auto& [series, cs] : {std::pair<const char*, const ClusterSet&>{
                                       "neumann", rep.neumann_clusters},
                                   {"dirichlet", rep.dirichlet_clusters}})
            for (const auto& c : cs.clusters)
                os << "cluster," << series << "," << fmt_double(c.center) << "," << c.weight
                   << "," << fmt_double(c.spread) << "," << c.members << "\n";
        for (auto& [series, rs] :
             {std::pair<const char*, const RootSet&>{"alpha", rep.alphas}, {"beta", rep.betas}})
            for (const auto& e : rs.entries)
                os << "root," << series << "," << fmt_double(e.value) << "," << e.multiplicity
                   << ",,\n";
        emit(out, os.str());
    } else {
        emit(out, dumps(report_to_json(rep)));
    }
    return rep.success ? kExitOk : kExitDomain;
}

int cmd_enumerate(int p, bool check_unique, const std::string& out) {
    std::vector<CaterpillarShape> shapes = enumerate_shapes(p);
    json arr = json::array();
    for (const auto& s : shapes) arr.push_back(s.interior_degrees());
    json o{{"p", p}, {"count", shapes.size()}, {"shapes", std::move(arr)}};
    if (check_unique) {
        std::vector<std::string> keys;
        keys.reserve(shapes.size());
        for (const auto& s : shapes) keys.push_back(ratio_to_json(cf_build(s)).dump());
        std::sort(keys.begin(), keys.end());
        o["unique"] = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }
    emit(out, dumps(o));
    return kExitOk;
}

// End-to-end smoke against embedded fixtures for the stalk (5,3,2,4):
// pencil -> reduced ratio -> staircase -> expansion -> spectra -> recovery.
int cmd_selftest() {
    int failures = 0, total = 0;
    auto check = [&](const char* what, bool ok) {
        std::cout << (ok ? "ok: " : "MISMATCH: ") << what << "\n";
        ++total;
        if (!ok) ++failures;
    };

    const CaterpillarShape shape({5, 3, 2, 4});
    const Tree t = shape_to_tree(shape);
    const PencilPair pp = build_pencil(t);
    check("psi", pp.psi == ipoly({0, 0, 0, 0, 0, 0, -40, 0, 189, 0, -269, 0, 120}));
    check("theta", pp.theta == ipoly({0, 0, 0, 0, 0, 30, 0, -156, 0, 245, 0, -120}));
    check("omega", pp.omega == ipoly({0, 0, 0, 0, 0, 0, -40, 0, 149, 0, -120}));

    const RationalFunction ratio = reduce_fraction(ipoly({0, 40, 0, -189, 0, 269, 0, -120}),
                                                   ipoly({-30, 0, 156, 0, -245, 0, 120}));
    check("reduced ratio", psi_theta_ratio(t) == ratio);
    check("staircase rebuild", cf_build(shape) == ratio);

    const auto [digits, trace] = cf_expand_exact(ratio);
    check("expansion digits", digits == shape);
    bool stages_ok = trace.stages.size() == 4;
    const long want_m[] = {5, 3, 2, 4};
    for (size_t i = 0; stages_ok && i < trace.stages.size(); ++i)
        stages_ok = trace.stages[i].m == want_m[i];
    check("stage quotients 5,3,2,4", stages_ok);
    check("first residual (24z^4-33z^2+10)/(8z^3-7z)",
          !trace.stages.empty() &&
              trace.stages[0].residual ==
                  RationalFunction(ipoly({10, 0, -33, 0, 24}), ipoly({0, -7, 0, 8})));

    const Spectrum neu = neumann_spectrum(t, 1.0, 50);
    const Spectrum dir = dirichlet_spectrum(t, 1.0, 50);
    const RecoveryReport rep = recover(neu, dir, 1.0);
    check("spectral round trip", rep.success && rep.shape == shape);

    std::cout << "selftest: " << (total - failures) << "/" << total << "\n";
    return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilateral caterpillar trees: spectra from shapes, shapes from two spectra"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write a shape, given or random");
    std::string gen_stalk, gen_out;
    int gen_p = 0;
    std::uint64_t gen_seed = 0;
    auto* gen_stalk_opt = gen->add_option("--stalk", gen_stalk,
                                          "interior degrees, e.g. 5,3,2,4; empty for the single edge");
    auto* gen_p_opt =
        gen->add_option("--p", gen_p, "vertex count of a random shape")->check(CLI::Range(2, 10000));
    gen->add_option("--seed", gen_seed, "seed for --p");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen_stalk_opt->excludes(gen_p_opt);
    gen_p_opt->excludes(gen_stalk_opt);

    auto* forward = app.add_subcommand("forward", "Neumann and Dirichlet spectra of a shape");
    ShapeSource fw_src;
    fw_src.attach(forward);
    double fw_l = 1.0, fw_noise = 0.0;
    int fw_windows = 50;
    std::string fw_decay = "const", fw_format = "json", fw_out;
    std::uint64_t fw_seed = 0;
    forward->add_option("--l", fw_l, "edge length")->check(CLI::PositiveNumber);
    forward->add_option("--windows", fw_windows, "2pi windows of sqrt(lambda)l to emit")
        ->check(CLI::Range(1, 100000));
    forward->add_option("--noise", fw_noise, "uniform sqrt(lambda) perturbation amplitude")
        ->check(CLI::NonNegativeNumber);
    forward->add_option("--decay", fw_decay, "noise decay across windows")
        ->check(CLI::IsMember({"const", "1/k"}));
    forward->add_option("--seed", fw_seed, "noise seed; the Dirichlet file uses seed+1");
    forward->add_option("--format", fw_format)->check(CLI::IsMember({"json", "csv"}));
    forward->add_option("--out", fw_out,
                        "output prefix; writes <out>.neumann.<ext> and <out>.dirichlet.<ext>");

    auto* polys = app.add_subcommand("polys", "Characteristic polynomials and reduced ratio");
    ShapeSource po_src;
    po_src.attach(polys);
    std::string po_out;
    polys->add_option("--out", po_out, "output file (default stdout)");

    auto* expand = app.add_subcommand("expand", "Shape from a psi/theta ratio JSON");
    std::string ex_in, ex_out;
    double ex_tol = 1e-6;
    expand->add_option("--in", ex_in, "ratio JSON {\"num\": [...], \"den\": [...]}, ascending")
        ->required();
    auto* ex_tol_opt = expand->add_option(
        "--tol", ex_tol, "read coefficients as measured doubles and round within this tolerance");
    expand->add_option("--out", ex_out, "output file (default stdout)");

    auto* recover_cmd = app.add_subcommand("recover", "Shape from two spectrum CSVs");
    std::string rc_neumann, rc_dirichlet, rc_format = "json", rc_out;
    double rc_l = 1.0;
    RecoverOptions rc_opts;
    recover_cmd->add_option("--neumann", rc_neumann, "Neumann spectrum CSV")->required();
    recover_cmd->add_option("--dirichlet", rc_dirichlet, "Dirichlet spectrum CSV")->required();
    recover_cmd->add_option("--l", rc_l, "edge length")->check(CLI::PositiveNumber);
    recover_cmd->add_option("--windows", rc_opts.windows, "2pi windows to use")
        ->check(CLI::Range(1, 100000));
    recover_cmd->add_option("--gap", rc_opts.gap, "cluster merge threshold, radians")
        ->check(CLI::PositiveNumber);
    recover_cmd->add_option("--tol", rc_opts.cf_tol, "expansion rounding tolerance")
        ->check(CLI::PositiveNumber);
    recover_cmd->add_option("--match-floor", rc_opts.match_floor,
                            "minimum root cancellation tolerance")
        ->check(CLI::PositiveNumber);
    recover_cmd->add_option("--validate-tol", rc_opts.validate_tol,
                            "rebuilt-vs-assembled coefficient tolerance")
        ->check(CLI::PositiveNumber);
    recover_cmd->add_option("--format", rc_format, "json report or csv plot data")
        ->check(CLI::IsMember({"json", "csv"}));
    recover_cmd->add_option("--out", rc_out, "output file (default stdout)");

    auto* enumerate = app.add_subcommand("enumerate", "All rooted shapes with p vertices");
    int en_p = 0;
    bool en_unique = false;
    std::string en_out;
    enumerate->add_option("--p", en_p, "vertex count")->required()->check(CLI::Range(2, 18));
    enumerate->add_flag("--check-unique", en_unique, "verify the ratios are pairwise distinct");
    enumerate->add_option("--out", en_out, "output file (default stdout)");

    auto* selftest =
        app.add_subcommand("selftest", "Check the built-in worked example end to end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            if (!gen_stalk_opt->count() && !gen_p_opt->count())
                throw UsageError("gen needs --stalk or --p");
            return cmd_gen(gen_stalk_opt->count() != 0, gen_stalk, gen_p, gen_seed, gen_out);
        }
        if (*forward)
            return cmd_forward(fw_src, fw_l, fw_windows, fw_noise, fw_decay, fw_seed, fw_format,
                               fw_out);
        if (*polys) return cmd_polys(po_src, po_out);
        if (*expand) return cmd_expand(ex_in, ex_tol_opt->count() != 0, ex_tol, ex_out);
        if (*recover_cmd)
            return cmd_recover(rc_neumann, rc_dirichlet, rc_l, rc_opts, rc_format, rc_out);
        if (*enumerate) return cmd_enumerate(en_p, en_unique, en_out);
        if (*selftest) return cmd_selftest();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
