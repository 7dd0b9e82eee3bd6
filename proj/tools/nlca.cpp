// Command-line surface for the 3D Rician denoising toolkit: noise injection,
// noise-level estimation, CA/NLCA filtering, metrics, and a benchmark runner
// that sweeps noise levels and emits CSV rows.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlca/denoise.hpp"
#include "nlca/io.hpp"
#include "nlca/metrics.hpp"
#include "nlca/noise.hpp"
#include "nlca/phantom.hpp"
#include "nlca/volume.hpp"

namespace {

using nlca::Volume3D;

// JSON config mirroring the flags: top-level keys for shared options and one
// object per subcommand, e.g. {"denoise": {"filter": "nlca", "sigma": "auto"}}.
// Command-line flags win over config values.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override
    {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
    {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
        }
        std::vector<CLI::ConfigItem> items;
        flatten({}, j, items);
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v)
    {
        return v.is_string() ? v.get<std::string>() : v.dump();
    }

    static void flatten(const std::vector<std::string>& parents, const nlohmann::json& j,
                        std::vector<CLI::ConfigItem>& items)
    {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                flatten(nested, value, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array())
                for (const auto& e : value)
                    item.inputs.push_back(scalar(e));
            else
                item.inputs.push_back(scalar(value));
            items.push_back(item);
        }
    }
};

std::string g6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double data_max(const Volume3D& v)
{
    float m = 0.0f;
    for (const float x : v.values())
        m = std::max(m, x);
    return m;
}

double sigma_from_percent(const Volume3D& v, double percent, const std::string& percent_of)
{
    const double reference = percent_of == "max" ? data_max(v) : 255.0;
    return percent / 100.0 * reference;
}

nlohmann::json estimate_json(const nlca::NoiseEstimate& est)
{
    return {
        {"sigma_hat", est.sigma_hat},
        {"theta_hat", est.theta_hat},
        {"sigma_n_hat", est.sigma_n_hat},
        {"iterations", est.iterations},
    };
}

struct CommonIo {
    std::string input;
    std::string format = "auto";
};

void add_input_options(CLI::App* cmd, CommonIo& io)
{
    cmd->add_option("--input", io.input, "input volume path")->required();
    cmd->add_option("--format", io.format, "input format")
        ->check(CLI::IsMember({"auto", "raw", "nifti"}));
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------------------
// add-noise

struct AddNoiseArgs {
    CommonIo io;
    std::string output;
    double percent = 0.0;
    std::uint64_t seed = 1234;
    std::string percent_of = "255";
    int threads = 1;
};

int run_add_noise(const AddNoiseArgs& a)
{
    if (!(a.percent > 0.0 && a.percent < 100.0))
        throw std::runtime_error("bad percent " + g6(a.percent) +
                                 ": must lie strictly between 0 and 100");
    const Volume3D input = nlca::load_volume(a.io.input, a.io.format);
    const double sigma = sigma_from_percent(input, a.percent, a.percent_of);
    std::cerr << "injecting Rician noise, sigma_n = " << g6(sigma) << "\n";
    const Volume3D noisy = nlca::add_rician(input, {sigma, a.seed}, a.threads);
    nlca::save_raw(noisy, a.output, nlca::SampleType::f32);
    return 0;
}

// ---------------------------------------------------------------------------
// estimate

int run_estimate(const CommonIo& io)
{
    const Volume3D input = nlca::load_volume(io.input, io.format);
    const auto est = nlca::estimate_noise(input);
    std::cout << estimate_json(est).dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// denoise

struct DenoiseArgs {
    CommonIo io;
    std::string output;
    std::string filter;
    std::string sigma = "auto";
    std::string residual_path;
    nlca::DenoiseParams params;
    int threads = 1;
};

Volume3D run_filter(const std::string& name, const Volume3D& input,
                    const nlca::DenoiseParams& params, int threads)
{
    if (name == "ca")
        return nlca::ca_filter(input, params, threads);
    if (name == "nlca")
        return nlca::nlca_filter(input, params, threads);
    throw std::runtime_error("unknown filter '" + name + "' (supported filters: ca, nlca)");
}

int run_denoise(DenoiseArgs& a)
{
    const Volume3D input = nlca::load_volume(a.io.input, a.io.format);

    if (a.sigma == "auto") {
        const auto est = nlca::estimate_noise(input);
        a.params.sigma_n = est.sigma_n_hat;
        std::cerr << "estimated sigma_n = " << g6(est.sigma_n_hat) << " ("
                  << est.iterations << " iterations)\n";
    } else {
        try {
            a.params.sigma_n = std::stod(a.sigma);
        } catch (const std::exception&) {
            throw std::runtime_error("--sigma expects a number or 'auto', got '" + a.sigma +
                                     "'");
        }
        if (a.params.sigma_n < 0.0)
            throw std::runtime_error("--sigma must be >= 0");
    }

    const Volume3D denoised = run_filter(a.filter, input, a.params, a.threads);
    nlca::save_raw(denoised, a.output, nlca::SampleType::f32);
    if (!a.residual_path.empty())
        nlca::save_raw(nlca::residual(input, denoised), a.residual_path,
                       nlca::SampleType::f32);
    return 0;
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsArgs {
    CommonIo io;
    std::string reference;
    nlca::SsimParams ssim;
    int threads = 1;
};

int run_metrics(const MetricsArgs& a)
{
    const Volume3D estimate = nlca::load_volume(a.io.input, a.io.format);
    const Volume3D reference = nlca::load_volume(a.reference, a.io.format);
    const auto rep = nlca::report(reference, estimate, a.ssim, a.threads);
    const nlohmann::json j = {
        {"rmse", rep.rmse},
        {"ssim", rep.ssim},
        {"voxel_count", rep.voxel_count},
        {"window_radius", rep.params_echo.window_radius},
        {"c1_const", rep.params_echo.c1},
        {"c2_const", rep.params_echo.c2},
    };
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkArgs {
    CommonIo io;
    std::string output;
    std::vector<std::string> filters{"ca", "nlca"};
    std::vector<double> levels{5.0, 10.0, 15.0, 20.0};
    std::uint64_t seed = 1234;
    std::string sigma_policy = "exact";
    std::vector<int> crop_region;
    int repeats = 1;
    std::string percent_of = "255";
    int threads = 1;
};

int run_benchmark(const BenchmarkArgs& a)
{
    if (a.filters.empty())
        throw std::runtime_error("benchmark needs at least one filter");
    for (const auto& f : a.filters)
        if (f != "ca" && f != "nlca")
            throw std::runtime_error("unknown filter '" + f +
                                     "' (supported filters: ca, nlca)");
    for (const double level : a.levels)
        if (!(level > 0.0 && level < 100.0))
            throw std::runtime_error("noise levels must lie strictly between 0 and 100");
    if (a.repeats < 1)
        throw std::runtime_error("--repeats must be >= 1");

    Volume3D truth = nlca::load_volume(a.io.input, a.io.format);
    if (!a.crop_region.empty()) {
        if (a.crop_region.size() != 6)
            throw std::runtime_error("--crop expects x,y,z,ex,ey,ez");
        truth = nlca::crop(truth,
                           {a.crop_region[0], a.crop_region[1], a.crop_region[2]},
                           {a.crop_region[3], a.crop_region[4], a.crop_region[5]});
    }

    std::FILE* csv = std::fopen(a.output.c_str(), "w");
    if (csv == nullptr)
        throw std::runtime_error("cannot open CSV output " + a.output);
    std::fputs("filter,noise_pct,rmse,ssim,seed,sigma_policy,elapsed_ms\n", csv);

    const auto row = [&](const std::string& filter, double pct, double rmse_v,
                         double ssim_v, std::uint64_t seed_v, double ms) {
        std::fprintf(csv, "%s,%s,%s,%s,%llu,%s,%s\n", filter.c_str(), g6(pct).c_str(),
                     g6(rmse_v).c_str(), g6(ssim_v).c_str(),
                     static_cast<unsigned long long>(seed_v), a.sigma_policy.c_str(),
                     g6(ms).c_str());
    };

    for (int rep = 0; rep < a.repeats; ++rep) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(rep);
        for (const double level : a.levels) {
            const double sigma = sigma_from_percent(truth, level, a.percent_of);
            const Volume3D noisy = nlca::add_rician(truth, {sigma, seed}, a.threads);

            const auto base = nlca::report(truth, noisy, {}, a.threads);
            row("noisy", level, base.rmse, base.ssim, seed, 0.0);

            double sigma_used = sigma;
            if (a.sigma_policy == "estimated")
                sigma_used = nlca::estimate_noise(noisy).sigma_n_hat;

            for (const auto& filter : a.filters) {
                nlca::DenoiseParams params;
                params.sigma_n = sigma_used;
                const auto t0 = std::chrono::steady_clock::now();
                const Volume3D denoised = run_filter(filter, noisy, params, a.threads);
                const double ms = elapsed_ms_since(t0);
                const auto rep_metrics = nlca::report(truth, denoised, {}, a.threads);
                row(filter, level, rep_metrics.rmse, rep_metrics.ssim, seed, ms);
                std::cerr << filter << " @ " << g6(level) << "%: rmse=" << g6(rep_metrics.rmse)
                          << " ssim=" << g6(rep_metrics.ssim) << " (" << g6(ms) << " ms)\n";
            }
        }
    }
    std::fclose(csv);
    return 0;
}

// ---------------------------------------------------------------------------
// make-phantom

struct PhantomArgs {
    std::string output;
    int size = 64;
    std::string kind = "piecewise";
    std::string dtype = "u8";
};

int run_make_phantom(const PhantomArgs& a)
{
    const Volume3D v = a.kind == "two-region" ? nlca::make_two_region_phantom(a.size)
                                              : nlca::make_piecewise_phantom(a.size);
    nlca::save_raw(v, a.output, nlca::sample_type_from_string(a.dtype));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"3D volumetric denoising for Rician-corrupted magnitude MRI"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config mirroring the flags (flags win)");

    AddNoiseArgs add_noise;
    auto* cmd_add = app.add_subcommand("add-noise", "corrupt a volume with Rician noise");
    cmd_add->fallthrough(); // --config may appear after the subcommand
    add_input_options(cmd_add, add_noise.io);
    cmd_add->add_option("--output", add_noise.output, "output volume path")->required();
    cmd_add->add_option("--percent", add_noise.percent,
                        "noise level as percent of the reference gray level")
        ->required();
    cmd_add->add_option("--seed", add_noise.seed, "reproducibility seed");
    cmd_add->add_option("--percent-of", add_noise.percent_of,
                        "reference gray level: 255 (8-bit) or data max")
        ->check(CLI::IsMember({"255", "max"}));
    cmd_add->add_option("--threads", add_noise.threads, "worker count");

    CommonIo estimate_io;
    auto* cmd_est = app.add_subcommand("estimate", "estimate the Rician noise level");
    cmd_est->fallthrough();
    add_input_options(cmd_est, estimate_io);

    DenoiseArgs denoise;
    auto* cmd_dn = app.add_subcommand("denoise", "run the CA or NLCA filter");
    cmd_dn->fallthrough();
    add_input_options(cmd_dn, denoise.io);
    cmd_dn->add_option("--output", denoise.output, "denoised volume path")->required();
    cmd_dn->add_option("--filter", denoise.filter, "filter name: ca or nlca")->required();
    cmd_dn->add_option("--sigma", denoise.sigma,
                       "Gaussian-component noise std, or 'auto' to estimate");
    cmd_dn->add_option("--patch-radius", denoise.params.patch_radius, "patch radius");
    cmd_dn->add_option("--search-radius", denoise.params.search_radius, "search radius");
    cmd_dn->add_option("--c1", denoise.params.c1, "mean-ratio constant");
    cmd_dn->add_option("--c2", denoise.params.c2, "second-moment-ratio constant");
    cmd_dn->add_option("--residual", denoise.residual_path,
                       "also write noisy - denoised to this path");
    cmd_dn->add_option("--threads", denoise.threads, "worker count");

    MetricsArgs metrics;
    auto* cmd_met = app.add_subcommand("metrics", "RMSE/SSIM of an estimate vs a reference");
    cmd_met->fallthrough();
    add_input_options(cmd_met, metrics.io);
    cmd_met->add_option("--reference", metrics.reference, "ground-truth volume")->required();
    cmd_met->add_option("--window-radius", metrics.ssim.window_radius, "SSIM window radius");
    cmd_met->add_option("--ssim-c1", metrics.ssim.c1, "SSIM c1 constant");
    cmd_met->add_option("--ssim-c2", metrics.ssim.c2, "SSIM c2 constant");
    cmd_met->add_option("--threads", metrics.threads, "worker count");

    BenchmarkArgs benchmark;
    auto* cmd_bm = app.add_subcommand("benchmark",
                                      "noise sweep over filters with CSV report");
    cmd_bm->fallthrough();
    add_input_options(cmd_bm, benchmark.io);
    cmd_bm->add_option("--output", benchmark.output, "CSV output path")->required();
    cmd_bm->add_option("--filters", benchmark.filters, "filters to run")
        ->delimiter(',');
    cmd_bm->add_option("--levels", benchmark.levels, "noise percentages")->delimiter(',');
    cmd_bm->add_option("--seed", benchmark.seed, "base seed (repeat r uses seed + r)");
    cmd_bm->add_option("--sigma-policy", benchmark.sigma_policy,
                       "pass the exact injected sigma or the estimated one")
        ->check(CLI::IsMember({"exact", "estimated"}));
    cmd_bm->add_option("--crop", benchmark.crop_region,
                       "crop region x,y,z,ex,ey,ez applied to the ground truth")
        ->delimiter(',')
        ->expected(6);
    cmd_bm->add_option("--repeats", benchmark.repeats, "noise realizations per level");
    cmd_bm->add_option("--percent-of", benchmark.percent_of,
                       "reference gray level: 255 (8-bit) or data max")
        ->check(CLI::IsMember({"255", "max"}));
    cmd_bm->add_option("--threads", benchmark.threads, "worker count");

    PhantomArgs phantom;
    auto* cmd_ph = app.add_subcommand("make-phantom", "write a synthetic test volume");
    cmd_ph->fallthrough();
    cmd_ph->add_option("--output", phantom.output, "output volume path")->required();
    cmd_ph->add_option("--size", phantom.size, "edge length in voxels");
    cmd_ph->add_option("--kind", phantom.kind, "phantom layout")
        ->check(CLI::IsMember({"piecewise", "two-region"}));
    cmd_ph->add_option("--dtype", phantom.dtype, "stored sample type")
        ->check(CLI::IsMember({"u8", "i16", "f32"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_add->parsed())
            return run_add_noise(add_noise);
        if (cmd_est->parsed())
            return run_estimate(estimate_io);
        if (cmd_dn->parsed())
            return run_denoise(denoise);
        if (cmd_met->parsed())
            return run_metrics(metrics);
        if (cmd_bm->parsed())
            return run_benchmark(benchmark);
        if (cmd_ph->parsed())
            return run_make_phantom(phantom);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
