#include "spcauchy/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "spcauchy/examples.hpp"
#include "spcauchy/grid.hpp"
#include "spcauchy/random.hpp"

#ifndef SPCAUCHY_VERSION
#define SPCAUCHY_VERSION "0.0.0"
#endif

namespace spc {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render(const std::function<void(std::ostream&)>& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

void apply(SweepPoint& p, const std::string& parameter, double v) {
    if (parameter == "paths") p.paths = static_cast<std::size_t>(v);
    else if (parameter == "delta") p.delta = v;
    else if (parameter == "R") p.R = v;
    else if (parameter == "DT") p.DT = v;
    else if (parameter == "N") p.N = static_cast<std::size_t>(v);
    else throw std::invalid_argument("config: sweeps has unknown parameter '" + parameter + "'");
}

std::string field_slices_csv(const EnsembleResult& r, std::size_t dim) {
    const auto& recon = r.mean_reconstruction;
    const auto& ref = r.mean_reference;
    std::vector<std::size_t> levels;
    if (dim == 1) {
        for (std::size_t k = 0; k < recon.time_count(); ++k) levels.push_back(k);
    } else {
        const std::size_t last = recon.time_count() - 1;
        levels = {0, last / 2, last};
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    }
    std::ostringstream os;
    os << (dim == 1 ? "x,t,y_ref,y_recon\n" : "x1,x2,t,y_ref,y_recon\n");
    for (std::size_t k : levels) {
        for (std::size_t j = 0; j < recon.node_count(); ++j) {
            const Point& x = recon.nodes.points[j];
            os << num(x[0]) << ',';
            if (dim == 2) os << num(x[1]) << ',';
            os << num(recon.times[k]) << ',' << num(ref.at(k, j)) << ',' << num(recon.at(k, j)) << '\n';
        }
    }
    return os.str();
}

std::string paths_csv(const EnsembleResult& r) {
    std::ostringstream os;
    os << "path,brownian_seed,noise_seed,gamma,degenerate,monotone,rows\n";
    for (const auto& p : r.per_path) {
        os << p.index << ',' << p.brownian_seed << ',' << p.noise_seed << ',' << num(p.gamma) << ','
           << (p.degenerate ? 1 : 0) << ',' << (p.monotone ? 1 : 0) << ',' << p.rows << '\n';
    }
    return os.str();
}

std::string profile_script(const std::string& name, const std::string& csv, bool space, std::size_t dim) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set terminal pngcairo size 800,600\n"
       << "set output '" << name << ".png'\n"
       << "set key off\n";
    if (space && dim == 2) {
        os << "set xlabel 'x1'\nset ylabel 'x2'\nset view map\nset title 'E(x)'\n"
           << "splot '" << csv << "' using 2:3:4 with points pointtype 5 pointsize 1.5 palette\n";
    } else {
        os << "set xlabel '" << (space ? "x" : "t") << "'\nset ylabel 'E'\n"
           << "set title '" << (space ? "E(x)" : "E(t)") << "'\n"
           << "plot '" << csv << "' using 2:3 with linespoints\n";
    }
    return os.str();
}

std::string lcurve_script(const std::string& csv) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set terminal pngcairo size 800,600\n"
       << "set output 'lcurve.png'\n"
       << "set logscale xy\nset xlabel 'residual norm'\nset ylabel 'solution norm'\nset key off\n"
       << "plot '" << csv << "' using 2:3 with linespoints, '' using ($5 > 0 ? $2 : 1/0):3 with points pointtype 7 pointsize 2\n";
    return os.str();
}

std::string summary_script(const std::vector<SweepAxis>& sweeps) {
    static const std::vector<std::string> columns{"delta", "paths", "R", "DT", "N"};
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set terminal pngcairo size 800,600\n"
       << "set output 'summary.png'\n"
       << "set ylabel 'mean E'\nset key off\n";
    if (!sweeps.empty()) {
        const auto col = std::find(columns.begin(), columns.end(), sweeps.front().parameter) - columns.begin() + 1;
        os << "set xlabel '" << sweeps.front().parameter << "'\n";
        if (sweeps.front().parameter == "delta") os << "set logscale xy\n";
        os << "plot 'summary.csv' using " << col << ":7 with linespoints\n";
    } else {
        os << "plot 'summary.csv' using 0:7 with points pointtype 7\n";
    }
    return os.str();
}

}  // namespace

std::vector<SweepPoint> expand_sweeps(const ExperimentConfig& config) {
    SweepPoint base;
    base.delta = config.delta;
    base.paths = config.paths;
    base.R = config.sources.R;
    base.DT = config.sources.DT;
    base.N = config.sources.N;
    std::vector<SweepPoint> points{base};
    for (const auto& axis : config.sweeps) {
        std::vector<SweepPoint> next;
        for (const auto& p : points) {
            for (double v : axis.values) {
                SweepPoint q = p;
                apply(q, axis.parameter, v);
                next.push_back(q);
            }
        }
        points = std::move(next);
    }
    if (points.size() > 1) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "_p%03zu", i);
            points[i].suffix = buf;
        }
    }
    return points;
}

ExperimentConfig at_point(const ExperimentConfig& config, const SweepPoint& point) {
    ExperimentConfig c = config;
    c.delta = point.delta;
    c.paths = point.paths;
    c.sources.R = point.R;
    c.sources.DT = point.DT;
    c.sources.N = point.N;
    c.sweeps.clear();
    return c;
}

RunReport execute(const ExperimentConfig& config, std::size_t threads) {
    config.validate();
    RunReport report;
    const std::size_t dim = config.problem.box.dim;
    const ProblemSpec spec = config.problem.build();
    const GridSpec grid = make_grid(config.m, config.n, config.problem.box, config.problem.T);

    std::ostringstream summary;
    summary << "delta,paths,R,DT,N,gamma_selected,mean_E\n";
    nlohmann::ordered_json points_json = nlohmann::ordered_json::array();
    nlohmann::ordered_json seeds_json = nlohmann::ordered_json::array();
    std::size_t max_paths = 0;

    for (const SweepPoint& point : expand_sweeps(config)) {
        const ExperimentConfig pc = at_point(config, point);
        pc.validate();
        EnsembleOptions options = pc.ensemble_options();
        options.threads = threads;
        const EnsembleResult result = run_ensemble(spec, grid, options);

        SummaryRow row;
        row.point = point;
        row.gamma_selected = result.gamma_median;
        row.mean_E = result.mean_E;
        for (const auto& p : result.per_path) row.degenerate_paths += p.degenerate ? 1 : 0;
        report.rows.push_back(row);

        summary << num(point.delta) << ',' << point.paths << ',' << num(point.R) << ',' << num(point.DT) << ','
                << point.N << ',' << num(row.gamma_selected) << ',' << num(row.mean_E) << '\n';

        const std::string sx = point.suffix;
        const std::string px = "err_profile_x" + sx;
        const std::string pt = "err_profile_t" + sx;
        report.artifacts.push_back({px + ".csv", render([&](std::ostream& os) { write_profile_csv(os, result.mean_error_x, dim); })});
        report.artifacts.push_back({pt + ".csv", render([&](std::ostream& os) { write_profile_csv(os, result.mean_error_t, dim); })});
        report.artifacts.push_back({"field_slices" + sx + ".csv", field_slices_csv(result, dim)});
        report.artifacts.push_back({"paths" + sx + ".csv", paths_csv(result)});
        if (!result.per_path.empty() && result.per_path.front().lcurve) {
            report.artifacts.push_back({"lcurve" + sx + ".csv", render([&](std::ostream& os) { write_sweep_csv(os, *result.per_path.front().lcurve); })});
        }
        if (sx.empty()) {
            report.artifacts.push_back({px + ".gp", profile_script(px, px + ".csv", true, dim)});
            report.artifacts.push_back({pt + ".gp", profile_script(pt, pt + ".csv", false, dim)});
            if (result.per_path.front().lcurve) report.artifacts.push_back({"lcurve.gp", lcurve_script("lcurve.csv")});
        }

        points_json.push_back({{"suffix", sx}, {"delta", point.delta}, {"paths", point.paths}, {"R", point.R},
                               {"DT", point.DT}, {"N", point.N}, {"gamma_selected", row.gamma_selected},
                               {"mean_E", row.mean_E}, {"degenerate_paths", row.degenerate_paths}});
        if (point.paths > max_paths) {
            max_paths = point.paths;
            seeds_json = nlohmann::ordered_json::array();
            for (const auto& p : result.per_path) {
                seeds_json.push_back({{"path", p.index}, {"brownian", p.brownian_seed}, {"noise", p.noise_seed},
                                      {"bridge", derive_seed(config.seed, Stream::bridge, p.index)}});
            }
        }
    }
    report.artifacts.push_back({"summary.csv", summary.str()});
    report.artifacts.push_back({"summary.gp", summary_script(config.sweeps)});

    nlohmann::ordered_json manifest;
    manifest["version"] = version_string();
    manifest["config"] = to_json(config);
    manifest["seeds"] = {{"master", config.seed}, {"paths", seeds_json}};
    manifest["points"] = points_json;
    nlohmann::ordered_json files;
    for (const auto& a : report.artifacts) files[a.name] = git_blob_sha1(a.content);
    manifest["files"] = files;
    report.artifacts.push_back({"manifest.json", manifest.dump(2) + "\n"});
    return report;
}

void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
    for (const auto& a : artifacts) {
        const fs::path p = fs::path(dir) / a.name;
        std::ofstream out(p, std::ios::binary);
        out << a.content;
        if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
    }
}

RunReport run_experiment(const ExperimentConfig& config, std::size_t threads) {
    RunReport report = execute(config, threads);
    write_artifacts(config.output_dir, report.artifacts);
    return report;
}

std::string git_blob_sha1(const std::string& content) {
    const std::string header = "blob " + std::to_string(content.size()) + '\0';
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                    EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                    EVP_DigestFinal_ex(ctx, md, &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) throw std::runtime_error("SHA-1 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string version_string() { return "spcauchy " SPCAUCHY_VERSION; }

}  // namespace spc
