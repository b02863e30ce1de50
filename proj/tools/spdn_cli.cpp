// Command-line harness: noise injection, denoising, entropy maps, SSIM
// reports, and the benchmark sweeps behind the result tables.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spdn/bench.hpp"
#include "spdn/spdn.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw spdn::IoError("cannot write " + path);
    out << j.dump(2) << '\n';
}

void write_manifest(const std::string& out_path, const json& manifest) {
    write_json(manifest, out_path + ".manifest.json");
}

json require_config(const std::string& path, std::initializer_list<const char*> fields) {
    std::ifstream in(path);
    if (!in) throw spdn::IoError("cannot open config " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
    std::string missing;
    for (const char* f : fields)
        if (!j.contains(f)) missing += std::string(missing.empty() ? "" : ", ") + f;
    if (!missing.empty())
        throw std::invalid_argument("config " + path + ": missing fields: " + missing);
    return j;
}

spdn::AeConfig parse_ae_config(const json& j) {
    spdn::AeConfig cfg;
    cfg.block_h = j.at("block_h").get<int>();
    cfg.block_w = j.at("block_w").get<int>();
    cfg.window = spdn::WindowSpec{j.at("window").get<int>()};
    cfg.epochs = j.at("epochs").get<int>();
    cfg.learning_rate = j.at("learning_rate").get<double>();
    cfg.compression_ratio = j.at("compression_ratio").get<double>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.validate();
    return cfg;
}

json ssim_report_json(const spdn::SsimReport& rep) {
    return json{{"ssim_img", rep.ssim_img},
                {"ssim_map_standard", rep.ssim_map_standard},
                {"ssim_map_dilated", rep.ssim_map_dilated},
                {"delta_ssim_pct", rep.delta_pct}};
}

json stats_json(const spdn::bench::Stats& st) {
    return json{{"count", st.count()},
                {"mean", st.mean()},
                {"stddev", st.stddev()},
                {"values", st.values}};
}

json suite_json(const spdn::bench::SuiteResult& res, bool with_maps) {
    json out;
    for (const auto& [name, sc] : res) {
        json entry{{"ssim_img", stats_json(sc.ssim_img)}};
        if (with_maps) {
            entry["ssim_map"] = stats_json(sc.ssim_map);
            entry["ssim_map_dilated"] = stats_json(sc.ssim_map_dilated);
        }
        out[name] = entry;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"salt-and-pepper denoising toolkit"};
    app.require_subcommand(1);

    // noise
    auto* noise = app.add_subcommand("noise", "inject salt-and-pepper noise");
    std::string n_in, n_out, n_model = "interval";
    double n_level = 0.0;
    std::uint64_t n_seed = 0;
    noise->add_option("input", n_in)->required();
    noise->add_option("output", n_out)->required();
    noise->add_option("--model", n_model)->check(CLI::IsMember({"interval", "fixed"}));
    noise->add_option("--level", n_level)->required()->check(CLI::Range(0.0, 100.0));
    noise->add_option("--seed", n_seed);

    // denoise
    auto* den = app.add_subcommand("denoise", "restore a noisy image");
    std::string d_in, d_out, d_scheme, d_config, d_clean, d_report;
    std::uint64_t d_seed = 0;
    bool d_seed_set = false;
    den->add_option("input", d_in)->required();
    den->add_option("output", d_out)->required();
    den->add_option("--scheme", d_scheme)
        ->required()
        ->check(CLI::IsMember({"mf", "ae", "2mf", "mfs-ae"}));
    den->add_option("--config", d_config)->required();
    den->add_option("--clean", d_clean);
    den->add_option("--report", d_report);
    den->add_option("--seed", d_seed)->each([&](const std::string&) { d_seed_set = true; });

    // entropy-map
    auto* ent = app.add_subcommand("entropy-map", "2D sample-entropy map");
    std::string e_in, e_out, e_csv;
    bool e_dilate = false;
    int e_window = 5, e_m = 1, e_tau = 1;
    double e_r = 0.2;
    ent->add_option("input", e_in)->required();
    ent->add_option("output", e_out)->required();
    ent->add_flag("--dilate", e_dilate);
    ent->add_option("--csv", e_csv);
    ent->add_option("--window", e_window);
    ent->add_option("--m", e_m);
    ent->add_option("--tau", e_tau);
    ent->add_option("--r", e_r);

    // ssim
    auto* sim = app.add_subcommand("ssim", "SSIM report for an image pair");
    std::string s_a, s_b, s_report;
    sim->add_option("clean", s_a)->required();
    sim->add_option("restored", s_b)->required();
    sim->add_option("--report", s_report);

    // bench
    auto* ben = app.add_subcommand("bench", "reproduce the result sweeps");
    std::string b_suite, b_out, b_image;
    int b_seeds = 5;
    bool b_no_ae = false;
    ben->add_option("--suite", b_suite)
        ->required()
        ->check(CLI::IsMember({"curves", "table4", "fig12"}));
    ben->add_option("--seeds", b_seeds)->check(CLI::PositiveNumber);
    ben->add_option("--out", b_out)->required();
    ben->add_option("--image", b_image);
    ben->add_flag("--no-ae", b_no_ae, "skip autoencoder rows in the curves suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // validation failures exit 2
    }

    if (*noise) {
        Timer t;
        spdn::NoiseSpec spec{n_model == "fixed" ? spdn::NoiseModel::Fixed
                                                : spdn::NoiseModel::Interval,
                             n_level, n_seed};
        spdn::Image img = spdn::load_image(n_in);
        spdn::Image noisy = spdn::inject_sp_noise(img, spec);
        spdn::save_image(noisy, n_out);
        write_manifest(n_out, json{{"command", "noise"},
                                   {"input", n_in},
                                   {"output", n_out},
                                   {"model", n_model},
                                   {"level", n_level},
                                   {"seed", n_seed},
                                   {"wall_ms", t.ms()}});
    } else if (*den) {
        Timer t;
        spdn::Image noisy = spdn::load_image(d_in);
        json cfg;
        spdn::Image restored;
        if (d_scheme == "mf") {
            cfg = require_config(d_config, {"window", "threshold", "passes"});
            restored = spdn::recursive_median_denoise(
                noisy, {spdn::WindowSpec{cfg.at("window").get<int>()},
                        cfg.at("threshold").get<double>(), cfg.at("passes").get<int>()});
        } else if (d_scheme == "ae") {
            cfg = require_config(d_config,
                                 {"block_h", "block_w", "window", "epochs",
                                  "learning_rate", "compression_ratio", "threshold",
                                  "passes"});
            spdn::AeConfig ae = parse_ae_config(cfg);
            if (d_seed_set) ae.seed = d_seed;
            spdn::RecursionConfig rc{spdn::WindowSpec{1},
                                     cfg.at("threshold").get<double>(),
                                     cfg.at("passes").get<int>()};
            restored = spdn::recursive_threshold_denoise(
                noisy,
                [&ae](const spdn::Image& im) { return spdn::ae_denoise_image(im, ae); },
                rc);
        } else if (d_scheme == "2mf") {
            cfg = require_config(d_config,
                                 {"w1", "w2", "thr1_w1", "thr1_w2", "thr2", "passes"});
            spdn::TwoMfConfig c{spdn::WindowSpec{cfg.at("w1").get<int>()},
                                spdn::WindowSpec{cfg.at("w2").get<int>()},
                                cfg.at("thr1_w1").get<double>(),
                                cfg.at("thr1_w2").get<double>(),
                                cfg.at("thr2").get<double>(),
                                cfg.at("passes").get<int>()};
            restored = spdn::denoise_2mf(noisy, c);
        } else {
            cfg = require_config(d_config,
                                 {"w1", "w2", "thr_min", "thr_max", "thr_step",
                                  "thr_w2", "passes", "thr_final", "ae"});
            spdn::MfsAeConfig c;
            c.w1 = spdn::WindowSpec{cfg.at("w1").get<int>()};
            c.w2 = spdn::WindowSpec{cfg.at("w2").get<int>()};
            c.thr_min = cfg.at("thr_min").get<double>();
            c.thr_max = cfg.at("thr_max").get<double>();
            c.thr_step = cfg.at("thr_step").get<double>();
            c.thr_w2 = cfg.at("thr_w2").get<double>();
            c.passes = cfg.at("passes").get<int>();
            c.thr_final = cfg.at("thr_final").get<double>();
            c.ae = parse_ae_config(cfg.at("ae"));
            if (d_seed_set) c.ae.seed = d_seed;
            restored = spdn::denoise_mfs_ae(noisy, c);
        }
        spdn::save_image(restored, d_out);
        json manifest{{"command", "denoise"}, {"input", d_in},      {"output", d_out},
                      {"scheme", d_scheme},   {"config", cfg},      {"seed", d_seed},
                      {"clean", d_clean},     {"wall_ms", t.ms()}};
        if (!d_clean.empty()) {
            spdn::Image clean = spdn::load_image(d_clean);
            spdn::SsimReport rep = spdn::full_ssim_report(clean, restored);
            json jr = ssim_report_json(rep);
            manifest["report"] = jr;
            if (!d_report.empty()) write_json(jr, d_report);
            std::cout << jr.dump(2) << '\n';
        }
        write_manifest(d_out, manifest);
    } else if (*ent) {
        Timer t;
        spdn::EntropySpec spec;
        spec.window = spdn::WindowSpec{e_window};
        spec.m = e_m;
        spec.tau = e_tau;
        spec.r = e_r;
        spdn::Image img = spdn::load_image(e_in);
        spdn::Image map = spdn::entropy_map(img, spec);
        if (e_dilate) map = spdn::dilate(map, 5, 1);
        spdn::save_image(map, e_out);
        if (!e_csv.empty()) {
            std::ofstream csv(e_csv);
            if (!csv) throw spdn::IoError("cannot write " + e_csv);
            csv.precision(17);
            for (int y = 0; y < map.height(); ++y) {
                for (int x = 0; x < map.width(); ++x)
                    csv << map.at(x, y) << (x + 1 < map.width() ? ',' : '\n');
            }
        }
        write_manifest(e_out, json{{"command", "entropy-map"},
                                   {"input", e_in},
                                   {"output", e_out},
                                   {"dilate", e_dilate},
                                   {"window", e_window},
                                   {"m", e_m},
                                   {"tau", e_tau},
                                   {"r", e_r},
                                   {"wall_ms", t.ms()}});
    } else if (*sim) {
        spdn::Image a = spdn::load_image(s_a);
        spdn::Image b = spdn::load_image(s_b);
        json jr = ssim_report_json(spdn::full_ssim_report(a, b));
        if (!s_report.empty()) write_json(jr, s_report);
        std::cout << jr.dump(2) << '\n';
    } else if (*ben) {
        Timer t;
        fs::create_directories(b_out);
        spdn::Image clean =
            b_image.empty() ? spdn::make_cap_edge_image() : spdn::load_image(b_image);
        json manifest{{"command", "bench"}, {"suite", b_suite}, {"seeds", b_seeds},
                      {"image", b_image.empty() ? "builtin-cap-edge" : b_image}};
        if (b_suite == "curves") {
            auto rows = spdn::bench::curves_suite(clean, b_seeds, !b_no_ae);
            std::ofstream csv(b_out + "/curves.csv");
            if (!csv) throw spdn::IoError("cannot write " + b_out + "/curves.csv");
            csv << "mu_sp,seed,scheme,passes,threshold,ssim_img,ssim_map,ssim_map_dilated\n";
            csv.precision(10);
            for (const auto& r : rows)
                csv << r.mu_sp << ',' << r.seed << ',' << r.scheme << ',' << r.passes
                    << ',' << r.threshold << ',' << r.ssim_img << ',' << r.ssim_map
                    << ',' << r.ssim_map_dilated << '\n';
            manifest["output"] = b_out + "/curves.csv";
        } else {
            const bool fig12 = b_suite == "fig12";
            auto res = spdn::bench::scheme_suite(
                clean, fig12 ? spdn::NoiseModel::Interval : spdn::NoiseModel::Fixed,
                fig12 ? std::vector<std::string>{"mf3x3", "mf5x5", "mfs_ae"}
                      : std::vector<std::string>{"mf5x5", "2mf", "mfs_ae"},
                b_seeds, fig12);
            json out = suite_json(res, fig12);
            out["noise_model"] = fig12 ? "interval" : "fixed";
            out["level"] = 61.0;
            const std::string path = b_out + "/" + b_suite + ".json";
            write_json(out, path);
            manifest["output"] = path;
        }
        manifest["wall_ms"] = t.ms();
        write_json(manifest, b_out + "/" + b_suite + ".manifest.json");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spdn::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
