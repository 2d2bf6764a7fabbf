#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "smc/deformation.hpp"
#include "smc/json_io.hpp"
#include "smc/repro.hpp"
#include "smc/rng.hpp"

namespace {

using smc::json;

enum class Format { text, json, csv };

struct Output {
    Format format = Format::text;
    std::string path;

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::string full = path;
        const char* dir = std::getenv("SMCURVE_OUT_DIR");
        if (dir && *dir && path.front() != '/') full = std::string(dir) + "/" + path;
        std::ofstream out(full, std::ios::binary);
        if (!out) throw smc::InvalidInput("cannot open output file: " + full);
        out << body;
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
            CLI::ignore_case));
    cmd->add_option("--output", out.path, "write to this file instead of stdout");
}

std::vector<smc::CirclePoint> parse_points(const std::string& csv, bool degrees) {
    std::vector<smc::CirclePoint> pts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        const double v = std::stod(item, &used);
        pts.emplace_back(degrees ? v * std::numbers::pi / 180.0 : v);
    }
    if (pts.empty()) throw smc::InvalidInput("no points parsed from: " + csv);
    return pts;
}

smc::RakedTrigPoly parse_poly(const std::string& inline_json, const std::string& file) {
    std::string text = inline_json;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw smc::InvalidInput("cannot open polynomial file: " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw smc::InvalidInput("no polynomial given (use --poly or --poly-file)");
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw smc::InvalidInput(std::string("polynomial JSON parse error: ") + e.what());
    }
    return smc::poly_from_json(j);
}

std::string phi_csv(const std::vector<smc::CriticalArcResult>& rows) {
    std::string out = "k,m_a,m_b,L_star,extra_root,bisection_width\n";
    for (const auto& r : rows)
        out += std::to_string(r.split.k()) + "," + std::to_string(r.split.m_a) + "," +
               std::to_string(r.split.m_b) + "," + num(r.length) + "," +
               num(r.extra_root.angle) + "," + num(r.bisection_width) + "\n";
    return out;
}

int run_phi(int k, double tol, bool per_split, int jobs, const Output& out) {
    const auto splits = smc::canonical_splits(k);
    std::vector<smc::CriticalArcResult> results(splits.size());
    if (jobs > 1) {
        std::vector<std::future<smc::CriticalArcResult>> futs;
        for (const auto& s : splits)
            futs.push_back(std::async(std::launch::async,
                                      [&, s] { return smc::critical_length(k, s, tol); }));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < splits.size(); ++i)
            results[i] = smc::critical_length(k, splits[i], tol);
    }
    size_t best = 0;
    for (size_t i = 1; i < results.size(); ++i)
        if (results[i].length < results[best].length) best = i;

    switch (out.format) {
        case Format::json: {
            json j{{"k", k},
                   {"phi", results[best].length},
                   {"split", {results[best].split.m_a, results[best].split.m_b}},
                   {"extra_root", results[best].extra_root.angle},
                   {"bisection_width", results[best].bisection_width}};
            if (per_split) {
                j["per_split"] = json::array();
                for (const auto& r : results) j["per_split"].push_back(smc::to_json(r));
            }
            out.write(j.dump(2) + "\n");
            break;
        }
        case Format::csv:
            out.write(phi_csv(per_split ? results
                                        : std::vector<smc::CriticalArcResult>{results[best]}));
            break;
        default: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10f\n", results[best].length);
            std::string body(buf);
            body += "split: (" + std::to_string(results[best].split.m_a) + "," +
                    std::to_string(results[best].split.m_b) + ")\n";
            if (per_split)
                for (const auto& r : results)
                    body += "  L*(" + std::to_string(r.split.m_a) + "," +
                            std::to_string(r.split.m_b) + ") = " + num(r.length) + "\n";
            out.write(body);
        }
    }
    return 0;
}

int run_face(int k, const std::string& points_csv, bool degrees, const Output& out) {
    const auto pts = parse_points(points_csv, degrees);
    const smc::FaceVerdict v = smc::is_face(k, pts);
    if (out.format == Format::text) {
        std::string body = smc::to_string(v.status) + "\n";
        if (v.certificate) body += "margin: " + num(v.certificate->margin) + "\n";
        if (v.witness) body += "witness: " + num(v.witness->angle) + "\n";
        out.write(body);
    } else {
        out.write(smc::to_json(v).dump(2) + "\n");
    }
    return 0;
}

int run_roots(const smc::RakedTrigPoly& f, const smc::RootOptions& ropt, const Output& out) {
    const auto roots = smc::circle_roots(f, ropt);
    switch (out.format) {
        case Format::csv: {
            std::string body = "angle,mult\n";
            for (const auto& r : roots)
                body += num(r.point.angle) + "," + std::to_string(r.multiplicity) + "\n";
            out.write(body);
            break;
        }
        case Format::json:
            out.write(smc::to_json(roots).dump(2) + "\n");
            break;
        default: {
            std::string body;
            for (const auto& r : roots)
                body += num(r.point.angle) + " (multiplicity " +
                        std::to_string(r.multiplicity) + ")\n";
            out.write(body);
        }
    }
    return 0;
}

int run_conjecture(int k, double tol, const Output& out) {
    const double alpha = smc::alpha_conjecture(k, tol);
    const double phik = smc::phi(k, 1e-10).first;
    const double residual = std::abs(2.0 * alpha - phik);
    const bool match = residual < 1e-7;
    switch (out.format) {
        case Format::json: {
            json j{{"alpha_k", alpha},
                   {"two_alpha_k", 2.0 * alpha},
                   {"phi_k", phik},
                   {"match", match},
                   {"residual", residual}};
            out.write(j.dump(2) + "\n");
            break;
        }
        case Format::csv:
            out.write("k,alpha_k,two_alpha_k,phi_k,match,residual\n" + std::to_string(k) + "," +
                      num(alpha) + "," + num(2 * alpha) + "," + num(phik) + "," +
                      (match ? "true" : "false") + "," + num(residual) + "\n");
            break;
        default:
            out.write("alpha_" + std::to_string(k) + " = " + num(alpha) + "\n2*alpha = " +
                      num(2 * alpha) + "\nphi_" + std::to_string(k) + " = " + num(phik) +
                      "\nmatch: " + (match ? "true" : "false") + " (residual " + num(residual) +
                      ")\n");
    }
    return 0;
}

int run_beta(int kmax, const Output& out) {
    if (kmax < 2) throw smc::InvalidInput("beta: --kmax must be at least 2");
    json arr = json::array();
    std::string csv = "k,beta_k,sin2_beta_k,bound\n";
    std::string text;
    for (int k = 2; k <= kmax; ++k) {
        const double b = smc::beta_root(k);
        const double s2 = std::sin(b) * std::sin(b);
        const double bound = (2.0 * k - 2.0) / (2.0 * k - 1.0);
        arr.push_back(json{{"k", k}, {"beta_k", b}, {"sin2_beta_k", s2}, {"bound", bound}});
        csv += std::to_string(k) + "," + num(b) + "," + num(s2) + "," + num(bound) + "\n";
        text += "beta_" + std::to_string(k) + " = " + num(b) + " (sin^2 = " + num(s2) +
                " > " + num(bound) + ")\n";
    }
    switch (out.format) {
        case Format::json: out.write(arr.dump(2) + "\n"); break;
        case Format::csv: out.write(csv); break;
        default: out.write(text);
    }
    return 0;
}

int run_deform(const smc::RakedTrigPoly& f, double lambda, const Output& out) {
    const smc::RakedTrigPoly g = smc::lambda_deform(f, lambda);
    const auto roots = smc::circle_roots(g);
    if (out.format == Format::text) {
        std::string body = "deformed polynomial: " + smc::to_json(g).dump() + "\n";
        for (const auto& r : roots)
            body += "root " + num(r.point.angle) + " (multiplicity " +
                    std::to_string(r.multiplicity) + ")\n";
        out.write(body);
    } else {
        json j{{"poly", smc::to_json(g)}, {"roots", smc::to_json(roots)}};
        out.write(j.dump(2) + "\n");
    }
    return 0;
}

int run_polytope(int k, int m, double spread, int dim, const std::string& angles_file,
                 const std::string& angles_csv, bool degrees, std::int64_t cap,
                 const Output& out) {
    smc::VertexConfig config;
    std::int64_t paper_bound = 0;
    if (!angles_file.empty() || !angles_csv.empty()) {
        config.k = k;
        if (!angles_file.empty()) {
            std::ifstream in(angles_file);
            if (!in) throw smc::InvalidInput("cannot open angles file: " + angles_file);
            json j = json::parse(in);
            for (const auto& v : j)
                config.angles.emplace_back(degrees ? v.get<double>() * std::numbers::pi / 180.0
                                                   : v.get<double>());
        } else {
            config.angles = parse_points(angles_csv, degrees);
        }
    } else {
        config = smc::clustered_config(k, m, spread);
        paper_bound = 4 * smc::binomial_capped(2 * m, k, cap) -
                      4 * smc::binomial_capped(m, k, cap);
    }
    smc::CountOptions copt;
    copt.subset_cap = cap;
    const smc::FaceCount fc = smc::count_faces(config, dim, copt);
    switch (out.format) {
        case Format::json: {
            json j = smc::to_json(fc);
            j["bound_from_paper"] = paper_bound;
            out.write(j.dump(2) + "\n");
            break;
        }
        case Format::csv:
            out.write("dim,verified,unknown,not_face,total,bound_from_paper\n" +
                      std::to_string(fc.dim) + "," + std::to_string(fc.verified_count) + "," +
                      std::to_string(fc.unknown_count) + "," +
                      std::to_string(fc.not_face_count) + "," +
                      std::to_string(fc.total_subsets) + "," + std::to_string(paper_bound) +
                      "\n");
            break;
        default:
            out.write("dim " + std::to_string(fc.dim) + ": " +
                      std::to_string(fc.verified_count) + " verified, " +
                      std::to_string(fc.not_face_count) + " not faces, " +
                      std::to_string(fc.unknown_count) + " unknown of " +
                      std::to_string(fc.total_subsets) + " subsets (bound " +
                      std::to_string(paper_bound) + ")\n");
    }
    return 0;
}

int run_repro(double tol, std::uint64_t seed, const std::string& golden_file, const Output& out) {
    smc::ReproOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    if (!golden_file.empty()) {
        std::ifstream in(golden_file);
        if (!in) throw smc::InvalidInput("cannot open golden file: " + golden_file);
        try {
            opt.golden = json::parse(in);
        } catch (const json::parse_error& e) {
            throw smc::InvalidInput(std::string("golden file parse error: ") + e.what());
        }
    }
    const auto results = smc::run_acceptance(opt);
    if (out.format == Format::json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{
                {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out.write(arr.dump(2) + "\n");
    } else {
        out.write(smc::format_report(results));
    }
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric moment curve toolkit"};
    app.require_subcommand(1);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "neighborliness threshold phi_k by bisection");
    int phi_k = 2;
    double phi_tol = 1e-10;
    bool per_split = false;
    int jobs = 1;
    Output phi_out;
    phi_cmd->add_option("--k", phi_k, "half-dimension")->required();
    phi_cmd->add_option("--tol", phi_tol, "bisection tolerance");
    phi_cmd->add_flag("--per-split", per_split, "report every split");
    phi_cmd->add_option("--jobs", jobs, "parallel split computations");
    add_output_flags(phi_cmd, phi_out);

    // face
    auto* face_cmd = app.add_subcommand("face", "decide whether curve points span a face");
    int face_k = 2;
    std::string face_points;
    bool face_degrees = false;
    Output face_out;
    face_cmd->add_option("--k", face_k, "half-dimension")->required();
    face_cmd->add_option("--points", face_points, "comma-separated angles")->required();
    face_cmd->add_flag("--degrees", face_degrees, "angles given in degrees");
    add_output_flags(face_cmd, face_out);

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "circle roots with multiplicities");
    std::string roots_poly, roots_file;
    smc::RootOptions ropt;
    Output roots_out;
    roots_cmd->add_option("--poly", roots_poly, "polynomial as inline JSON");
    roots_cmd->add_option("--poly-file", roots_file, "polynomial JSON file");
    roots_cmd->add_option("--cluster-tol", ropt.cluster_tol, "clustering tolerance");
    roots_cmd->add_option("--residual-tol", ropt.residual_tol, "residual tolerance");
    add_output_flags(roots_cmd, roots_out);

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "alpha_k equation vs phi_k (even k)");
    int conj_k = 2;
    double conj_tol = 1e-12;
    Output conj_out;
    conj_cmd->add_option("--k", conj_k, "even half-dimension")->required();
    conj_cmd->add_option("--tol", conj_tol, "bisection tolerance");
    add_output_flags(conj_cmd, conj_out);

    // beta
    auto* beta_cmd = app.add_subcommand("beta", "beta_k sweep with the sin^2 bound");
    int beta_kmax = 10;
    Output beta_out;
    beta_cmd->add_option("--kmax", beta_kmax, "largest k")->required();
    add_output_flags(beta_cmd, beta_out);

    // deform
    auto* deform_cmd = app.add_subcommand("deform", "lambda-deformation of an even polynomial");
    std::string deform_poly, deform_file;
    double lambda = 1.0;
    int deform_k = 0;
    bool one_minus_cos = false;
    Output deform_out;
    deform_cmd->add_option("--poly", deform_poly, "polynomial as inline JSON");
    deform_cmd->add_option("--poly-file", deform_file, "polynomial JSON file");
    deform_cmd->add_option("--lambda", lambda, "deformation parameter")->required();
    deform_cmd->add_flag("--one-minus-cos", one_minus_cos, "use f = 1 - cos((2k-1)t)");
    deform_cmd->add_option("--k", deform_k, "half-dimension for --one-minus-cos");
    add_output_flags(deform_cmd, deform_out);

    // polytope
    auto* poly_cmd = app.add_subcommand("polytope", "face counts of curve configurations");
    int pk = 2, pm = 3, pdim = 1;
    double pspread = 0.05;
    std::string angles_file, angles_csv;
    bool poly_degrees = false;
    std::int64_t cap = 10'000'000;
    Output poly_out;
    poly_cmd->add_option("--k", pk, "half-dimension")->required();
    poly_cmd->add_option("--m", pm, "points per cluster");
    poly_cmd->add_option("--spread", pspread, "cluster spread (radians)");
    poly_cmd->add_option("--dim", pdim, "face dimension to classify")->required();
    poly_cmd->add_option("--angles-file", angles_file, "explicit angles (JSON array)");
    poly_cmd->add_option("--angles", angles_csv, "explicit angles (comma-separated)");
    poly_cmd->add_flag("--degrees", poly_degrees, "angles given in degrees");
    poly_cmd->add_option("--cap", cap, "subset enumeration cap");
    add_output_flags(poly_cmd, poly_out);

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "run the acceptance suite");
    double repro_tol = 0.0;
    std::uint64_t seed = 0x5eedf00dULL;
    std::string golden_file;
    Output repro_out;
    repro_cmd->add_option("--tol", repro_tol, "extra slack on pinned thresholds");
    repro_cmd->add_option("--seed", seed, "seed for the randomized suites");
    repro_cmd->add_option("--golden", golden_file, "golden-value overrides (JSON)");
    add_output_flags(repro_cmd, repro_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (phi_cmd->parsed()) return run_phi(phi_k, phi_tol, per_split, jobs, phi_out);
        if (face_cmd->parsed()) return run_face(face_k, face_points, face_degrees, face_out);
        if (roots_cmd->parsed())
            return run_roots(parse_poly(roots_poly, roots_file), ropt, roots_out);
        if (conj_cmd->parsed()) return run_conjecture(conj_k, conj_tol, conj_out);
        if (beta_cmd->parsed()) return run_beta(beta_kmax, beta_out);
        if (deform_cmd->parsed()) {
            smc::RakedTrigPoly f;
            if (one_minus_cos) {
                if (deform_k < 1)
                    throw smc::InvalidInput("deform: --one-minus-cos needs --k >= 1");
                std::vector<double> a(deform_k, 0.0);
                a[deform_k - 1] = -1.0;
                f = smc::RakedTrigPoly(deform_k, 1.0, std::move(a),
                                       std::vector<double>(deform_k, 0.0));
            } else {
                f = parse_poly(deform_poly, deform_file);
            }
            return run_deform(f, lambda, deform_out);
        }
        if (poly_cmd->parsed())
            return run_polytope(pk, pm, pspread, pdim, angles_file, angles_csv, poly_degrees,
                                cap, poly_out);
        if (repro_cmd->parsed()) return run_repro(repro_tol, seed, golden_file, repro_out);
    } catch (const smc::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const smc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
