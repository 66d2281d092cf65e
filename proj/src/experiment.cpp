#include "hyper/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyper/errors.hpp"

namespace hyper {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Eigen::Vector3d> octahedron_vertices() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

// Disjoint two-ring configuration: 19 disks on a ring of radius 2 and 19 on
// a ring of radius 4, radii r/8 (adjacent centers are 2 r sin(pi/19) apart,
// which exceeds r/4).
std::vector<DiskSpec> default_union_geometry() {
    std::vector<DiskSpec> disks;
    for (double r : {2.0, 4.0}) {
        for (int k = 0; k < 19; ++k) {
            const double theta = 2.0 * kPi * k / 19.0;
            disks.push_back({{r * std::cos(theta), r * std::sin(theta)}, r / 8.0});
        }
    }
    return disks;
}

std::vector<TestFunction> make_registry() {
    std::vector<TestFunction> reg;

    reg.push_back({"gaussian", 1, {DomainKind::Interval},
                   [](const Eigen::VectorXd& x) { return std::exp(-x[0] * x[0]); }});

    reg.push_back({"exp_cos", 2, {DomainKind::Disk, DomainKind::UnionOfDisks},
                   [](const Eigen::VectorXd& x) {
                       return (1.0 - x[0] * x[0] - x[1] * x[1]) *
                              std::exp(x[0] * std::cos(x[1]));
                   }});

    const auto centers = octahedron_vertices();
    reg.push_back({"wendland_sum", 3, {DomainKind::Sphere},
                   [centers](const Eigen::VectorXd& x) {
                       const double delta = wendland_scale();
                       double sum = 0.0;
                       for (const auto& z : centers)
                           sum += wendland_c6((z - x.head<3>()).norm() / delta);
                       return sum / 3.0;
                   }});

    reg.push_back({"exp_inv_r2", 3, {DomainKind::Cube},
                   [](const Eigen::VectorXd& x) {
                       const double r2 = x.squaredNorm();
                       return r2 == 0.0 ? 0.0 : std::exp(-1.0 / r2);  // removable limit
                   }});

    return reg;
}

const std::vector<TestFunction>& registry() {
    static const std::vector<TestFunction> reg = make_registry();
    return reg;
}

Domain domain_from_name(const std::string& name) {
    if (name == "interval") return Domain::interval();
    if (name == "disk") return Domain::disk();
    if (name == "sphere") return Domain::sphere();
    if (name == "cube") return Domain::cube();
    if (name == "union_disks" || name == "union-disks")
        return Domain::union_of_disks(default_union_geometry());
    throw config_error("unknown domain: " + name);
}

}  // namespace

double wendland_c6(double r) {
    const double cut = std::max(1.0 - r, 0.0);
    const double c3 = cut * cut * cut;
    return c3 * c3 * (35.0 * r * r + 18.0 * r + 3.0);
}

double wendland_scale() {
    return 9.0 * std::tgamma(2.5) / (2.0 * std::tgamma(3.0));
}

const TestFunction& test_function(const std::string& name) {
    for (const auto& tf : registry())
        if (tf.name == name) return tf;
    throw config_error("unknown test function: " + name);
}

std::vector<std::string> test_function_names() {
    std::vector<std::string> names;
    for (const auto& tf : registry()) names.push_back(tf.name);
    return names;
}

std::string default_test_function(DomainKind kind) {
    for (const auto& tf : registry())
        if (std::find(tf.domains.begin(), tf.domains.end(), kind) != tf.domains.end())
            return tf.name;
    throw config_error("no test function registered for this domain");
}

void apply_json(ExperimentConfig& config, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config: expected a JSON object");

    static const std::vector<std::string> known = {
        "domain",  "degree",          "function",        "sigma",
        "impulse", "impulse_whole_vector", "trials",     "seed",
        "lambda_indices", "variants", "design_file",     "eval_design_file",
        "wendland_centers", "union_disks", "out"};
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            throw config_error("config: unknown key: " + item.key());
    }

    try {
        if (j.contains("domain")) config.domain = domain_from_name(j["domain"]);
        if (j.contains("union_disks")) {
            const auto& u = j["union_disks"];
            std::vector<DiskSpec> disks;
            const auto& centers = u.at("centers");
            const auto& radii = u.at("radii");
            if (centers.size() != radii.size())
                throw config_error("config: union_disks centers/radii size mismatch");
            for (size_t i = 0; i < centers.size(); ++i) {
                disks.push_back({{centers[i].at(0).get<double>(),
                                  centers[i].at(1).get<double>()},
                                 radii[i].get<double>()});
            }
            config.domain = Domain::union_of_disks(disks);
        }
        if (j.contains("degree")) config.degree = j["degree"].get<int>();
        if (j.contains("function")) config.function = j["function"].get<std::string>();
        if (j.contains("sigma")) config.sigma = j["sigma"].get<double>();
        if (j.contains("impulse")) config.impulse = j["impulse"].get<double>();
        if (j.contains("impulse_whole_vector"))
            config.impulse_whole_vector = j["impulse_whole_vector"].get<bool>();
        if (j.contains("trials")) config.trials = j["trials"].get<int>();
        if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("lambda_indices"))
            config.lambda_indices = j["lambda_indices"].get<std::vector<int>>();
        if (j.contains("variants")) {
            config.variants.clear();
            for (const auto& name : j["variants"]) {
                const auto v = variant_from_name(name.get<std::string>());
                if (!v) throw config_error("config: unknown variant: " +
                                           name.get<std::string>());
                config.variants.push_back(*v);
            }
        }
        if (j.contains("design_file"))
            config.design_file = j["design_file"].get<std::string>();
        if (j.contains("eval_design_file"))
            config.eval_design_file = j["eval_design_file"].get<std::string>();
        if (j.contains("wendland_centers")) {
            config.wendland_centers.clear();
            for (const auto& c : j["wendland_centers"])
                config.wendland_centers.emplace_back(c.at(0).get<double>(),
                                                     c.at(1).get<double>(),
                                                     c.at(2).get<double>());
        }
        if (j.contains("out")) config.out = j["out"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config: ") + e.what());
    }
}

ExperimentConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ExperimentConfig config;
    apply_json(config, buf.str());
    return config;
}

std::string config_to_json(const ExperimentConfig& config) {
    nlohmann::ordered_json j;
    j["domain"] = config.domain.name();
    if (config.domain.kind() == DomainKind::UnionOfDisks) {
        nlohmann::ordered_json u;
        u["centers"] = nlohmann::json::array();
        u["radii"] = nlohmann::json::array();
        for (const auto& d : config.domain.disks()) {
            u["centers"].push_back({d.center[0], d.center[1]});
            u["radii"].push_back(d.radius);
        }
        j["union_disks"] = u;
    }
    j["degree"] = config.degree;
    j["function"] = config.function.empty()
                        ? default_test_function(config.domain.kind())
                        : config.function;
    j["sigma"] = config.sigma;
    j["impulse"] = config.impulse;
    j["impulse_whole_vector"] = config.impulse_whole_vector;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["lambda_indices"] = config.lambda_indices;
    j["variants"] = nlohmann::json::array();
    for (Variant v : config.variants) j["variants"].push_back(variant_name(v));
    if (!config.design_file.empty()) j["design_file"] = config.design_file;
    if (!config.eval_design_file.empty())
        j["eval_design_file"] = config.eval_design_file;
    if (!config.wendland_centers.empty()) {
        j["wendland_centers"] = nlohmann::json::array();
        for (const auto& c : config.wendland_centers)
            j["wendland_centers"].push_back({c[0], c[1], c[2]});
    }
    if (!config.out.empty()) j["out"] = config.out;
    return j.dump(2);
}

QuadratureRule make_rule(const ExperimentConfig& config) {
    const int L = config.degree;
    switch (config.domain.kind()) {
        case DomainKind::Interval: return gauss_legendre(L + 1);
        case DomainKind::Disk: return disk_polar_rule(L);
        case DomainKind::Sphere:
            if (!config.design_file.empty())
                return load_spherical_design(config.design_file, 2 * L);
            return sphere_product_rule(L);
        case DomainKind::Cube: return cube_rule(L);
        case DomainKind::UnionOfDisks:
            return union_disks_rule(config.domain, 2 * L);
    }
    throw std::logic_error("make_rule: unknown domain");
}

QuadratureRule make_evaluation_rule(const ExperimentConfig& config) {
    const int L = config.degree;
    switch (config.domain.kind()) {
        case DomainKind::Interval: return gauss_legendre(2 * L + 20);
        case DomainKind::Disk: return disk_polar_rule(std::max(50, L + 5));
        case DomainKind::Sphere:
            if (!config.eval_design_file.empty())
                return load_spherical_design(config.eval_design_file,
                                             std::max(50, 2 * L + 2));
            return sphere_product_rule(std::max(25, L + 5));
        case DomainKind::Cube: return cube_rule(std::max(20, L + 1));
        case DomainKind::UnionOfDisks:
            return union_disks_rule(config.domain, std::max(40, 2 * L + 2));
    }
    throw std::logic_error("make_evaluation_rule: unknown domain");
}

ExperimentContext prepare(const ExperimentConfig& config) {
    if (config.trials < 1) throw config_error("config: trials must be >= 1");

    ExperimentContext ctx;
    ctx.f = test_function(config.function.empty()
                              ? default_test_function(config.domain.kind())
                              : config.function);
    const auto& okay = ctx.f.domains;
    if (std::find(okay.begin(), okay.end(), config.domain.kind()) == okay.end())
        throw config_error("config: test function '" + ctx.f.name +
                           "' does not support domain " + config.domain.name());
    if (ctx.f.name == "wendland_sum" && !config.wendland_centers.empty()) {
        const auto centers = config.wendland_centers;
        ctx.f.f = [centers](const Eigen::VectorXd& x) {
            const double delta = wendland_scale();
            double sum = 0.0;
            for (const auto& z : centers)
                sum += wendland_c6((z - x.head<3>()).norm() / delta);
            return sum / 3.0;
        };
    }

    ctx.rule = make_rule(config);
    ctx.basis = build_basis(config.domain, config.degree, ctx.rule);
    ctx.vandermonde = vandermonde_matrix(ctx.basis, ctx.rule);
    ctx.filter = FilterFunction::sine_squared(ctx.basis);
    ctx.eval_rule = make_evaluation_rule(config);
    ctx.eval_vandermonde = evaluate_basis(ctx.basis, ctx.eval_rule.nodes);

    const auto sample = [&](const QuadratureRule& rule) {
        Eigen::VectorXd values(rule.size());
        Eigen::VectorXd node(rule.nodes.cols());
        for (Eigen::Index i = 0; i < rule.size(); ++i) {
            node = rule.nodes.row(i);
            values[i] = ctx.f.f(node);
        }
        return values;
    };
    ctx.clean_samples = sample(ctx.rule);
    ctx.f_at_eval = sample(ctx.eval_rule);

    for (int s : config.lambda_indices) {
        if (s < 1 || s > ctx.basis.d)
            throw config_error("config: lambda index " + std::to_string(s) +
                               " outside 1..d");
    }
    return ctx;
}

Eigen::VectorXd trial_noise(const ExperimentConfig& config, std::uint64_t trial,
                            Eigen::Index n) {
    Eigen::VectorXd eps = Eigen::VectorXd::Zero(n);
    if (config.sigma > 0.0)
        eps += generate_noise(NoiseSpec::gaussian(config.sigma), config.seed,
                              2 * trial, n);
    if (config.impulse > 0.0)
        eps += generate_noise(
            NoiseSpec::impulse(config.impulse, config.impulse_whole_vector),
            config.seed, 2 * trial + 1, n);
    return eps;
}

std::vector<RunRow> run_experiment(const ExperimentConfig& config) {
    return run_experiment(config, prepare(config));
}

std::vector<RunRow> run_experiment(const ExperimentConfig& config,
                                   const ExperimentContext& ctx) {
    const size_t cells = config.variants.size() * config.lambda_indices.size();
    std::vector<double> sum_err(cells, 0.0), sum_err2(cells, 0.0),
        sum_sparsity(cells, 0.0), sum_lambda(cells, 0.0);

    for (int trial = 0; trial < config.trials; ++trial) {
        const Eigen::VectorXd eps = trial_noise(config, trial, ctx.rule.size());
        const Eigen::VectorXd noisy = ctx.clean_samples + eps;
        const Eigen::VectorXd alpha =
            hyper_coefficients(noisy, ctx.vandermonde, ctx.rule);
        const LambdaSchedule schedule = lambda_schedule(alpha);

        size_t cell = 0;
        for (Variant v : config.variants) {
            for (int s : config.lambda_indices) {
                const double lambda = schedule(s);
                const Estimate est =
                    estimate(v, alpha, {lambda, Eigen::VectorXd()}, ctx.filter);
                const double err = l2_error_from_values(
                    ctx.eval_vandermonde * est.coeffs, ctx.f_at_eval, ctx.eval_rule);
                sum_err[cell] += err;
                sum_err2[cell] += err * err;
                sum_sparsity[cell] += sparsity(est);
                sum_lambda[cell] += lambda;
                ++cell;
            }
        }
    }

    std::vector<RunRow> rows;
    const double T = config.trials;
    size_t cell = 0;
    for (Variant v : config.variants) {
        for (int s : config.lambda_indices) {
            RunRow row;
            row.variant = v;
            row.lambda_index = s;
            row.lambda_value = sum_lambda[cell] / T;
            row.mean_error = sum_err[cell] / T;
            const double var =
                config.trials > 1
                    ? std::max(0.0, (sum_err2[cell] - T * row.mean_error * row.mean_error) /
                                        (T - 1.0))
                    : 0.0;
            row.std_error = std::sqrt(var);
            row.mean_sparsity = sum_sparsity[cell] / T;
            rows.push_back(row);
            ++cell;
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_lambda(const ExperimentConfig& config, int s_begin,
                                   int s_end, int s_step) {
    if (s_begin < 1 || s_end < s_begin || s_step < 1)
        throw config_error("sweep: invalid s range");

    const ExperimentContext ctx = prepare(config);
    if (s_end > ctx.basis.d)
        throw config_error("sweep: s range exceeds basis dimension");

    std::vector<Variant> variants;
    for (Variant v : config.variants)
        if (v == Variant::Lasso || v == Variant::Hard || v == Variant::Hybrid)
            variants.push_back(v);
    if (variants.empty())
        variants = {Variant::Hybrid, Variant::Lasso, Variant::Hard};

    std::vector<int> svalues;
    for (int s = s_begin; s <= s_end; s += s_step) svalues.push_back(s);

    const size_t cells = variants.size() * svalues.size();
    std::vector<double> sum_lambda(cells, 0.0), sum_sparsity(cells, 0.0),
        sum_err(cells, 0.0), sum_J(cells, 0.0), sum_H(cells, 0.0),
        sum_direct(cells, 0.0);

    for (int trial = 0; trial < config.trials; ++trial) {
        const Eigen::VectorXd eps = trial_noise(config, trial, ctx.rule.size());
        SampleVector samples{ctx.clean_samples + eps, eps};
        const Eigen::VectorXd alpha =
            hyper_coefficients(samples.values, ctx.vandermonde, ctx.rule);
        const LambdaSchedule schedule = lambda_schedule(alpha);

        size_t cell = 0;
        for (Variant v : variants) {
            for (int s : svalues) {
                const double lambda = schedule(s);
                const Estimate est =
                    estimate(v, alpha, {lambda, Eigen::VectorXd()}, ctx.filter);
                const DecompositionTerms terms =
                    decompose(est, alpha, samples, ctx.vandermonde, ctx.rule);
                const double gap =
                    std::abs(terms.direct - (terms.J + terms.H + terms.constant));
                if (gap > 1e-9 * (1.0 + terms.constant)) {
                    std::ostringstream msg;
                    msg << "sweep: decomposition identity violated (gap " << gap
                        << ") for " << variant_name(v) << " at s=" << s;
                    throw validation_error(msg.str());
                }
                const double err = l2_error_from_values(
                    ctx.eval_vandermonde * est.coeffs, ctx.f_at_eval, ctx.eval_rule);
                sum_lambda[cell] += lambda;
                sum_sparsity[cell] += sparsity(est);
                sum_err[cell] += err;
                sum_J[cell] += terms.J;
                sum_H[cell] += terms.H;
                sum_direct[cell] += terms.direct;
                ++cell;
            }
        }
    }

    std::vector<SweepRow> rows;
    const double T = config.trials;
    size_t cell = 0;
    for (Variant v : variants) {
        for (int s : svalues) {
            SweepRow row;
            row.variant = v;
            row.s = s;
            row.lambda_value = sum_lambda[cell] / T;
            row.mean_sparsity = sum_sparsity[cell] / T;
            row.mean_error = sum_err[cell] / T;
            row.mean_J = sum_J[cell] / T;
            row.mean_H = sum_H[cell] / T;
            row.mean_direct = sum_direct[cell] / T;
            rows.push_back(row);
            ++cell;
        }
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

}  // namespace

std::string run_csv(const std::vector<RunRow>& rows) {
    std::string out = "variant,lambda_index,lambda_value,mean_error,std_error,mean_sparsity\r\n";
    for (const auto& r : rows) {
        out += csv_field(variant_name(r.variant)) + ',' + std::to_string(r.lambda_index) +
               ',' + format_number(r.lambda_value) + ',' + format_number(r.mean_error) +
               ',' + format_number(r.std_error) + ',' + format_number(r.mean_sparsity) +
               "\r\n";
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "variant,s,lambda_value,mean_sparsity,mean_error,mean_J,mean_H,mean_direct\r\n";
    for (const auto& r : rows) {
        out += csv_field(variant_name(r.variant)) + ',' + std::to_string(r.s) + ',' +
               format_number(r.lambda_value) + ',' + format_number(r.mean_sparsity) +
               ',' + format_number(r.mean_error) + ',' + format_number(r.mean_J) + ',' +
               format_number(r.mean_H) + ',' + format_number(r.mean_direct) + "\r\n";
    }
    return out;
}

namespace {

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + path);
    out << text;
}

}  // namespace

void write_run_csv(const std::vector<RunRow>& rows, const std::string& path) {
    write_text(run_csv(rows), path);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    write_text(sweep_csv(rows), path);
}

void write_sidecar(const ExperimentConfig& config, const std::string& out_path) {
    std::string path = out_path;
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        path = path.substr(0, path.size() - 4);
    path += ".config.json";
    write_text(config_to_json(config) + "\n", path);
}

}  // namespace hyper
