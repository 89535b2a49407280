#include "wlbeam/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace wlbeam {

namespace {
constexpr double kPi = 3.14159265358979323846;
double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt12(*v) : std::string(); }
}  // namespace

double to_db(double linear) {
    if (!(linear > 0.0) || !std::isfinite(linear))
        throw DegenerateStatistics("dB conversion requires a finite positive value");
    return 10.0 * std::log10(linear);
}

const char* row_source_name(RowSource s) {
    switch (s) {
        case RowSource::TheoryExact: return "theory-exact";
        case RowSource::TheoryApprox: return "theory-approx";
        case RowSource::Simulated: return "simulated";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    scenario.validate();
    if (sweep.size() == 0) throw ConfigError("sweep grid must be nonempty");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (snapshots < 2 * scenario.n_sensors) throw ConfigError("snapshots must be >= 2N");
}

namespace {

std::optional<IqImbalance> effective_iq(const ExperimentConfig& cfg, std::size_t i) {
    if (cfg.sweep.variable == SweepVariable::IqPair) return cfg.sweep.iq_values[i];
    return cfg.iq;
}

}  // namespace

ArrayScenario scenario_at(const ExperimentConfig& cfg, std::size_t grid_index) {
    ArrayScenario sc = cfg.scenario;
    switch (cfg.sweep.variable) {
        case SweepVariable::GammaRate:
            sc.noncircularity.rate = cfg.sweep.values[grid_index];
            break;
        case SweepVariable::GammaPhase:
            sc.noncircularity.phase = deg2rad(cfg.sweep.values[grid_index]);
            break;
        case SweepVariable::SoiDoa:
            sc.soi_doa_deg = cfg.sweep.values[grid_index];
            break;
        case SweepVariable::IqPair:
            break;
    }
    if (auto iq = effective_iq(cfg, grid_index)) {
        const Complex gamma = iq_noncircularity(*iq);
        sc.noncircularity.rate = std::abs(gamma);
        sc.noncircularity.phase = std::arg(gamma);
    }
    if (cfg.snap_doas)
        for (auto& itf : sc.interferences) itf.doa_deg = snap_doa(itf.doa_deg, sc.n_sensors);
    return sc;
}

namespace {

double sweep_value_at(const ExperimentConfig& cfg, std::size_t i) {
    if (cfg.sweep.variable == SweepVariable::IqPair) return static_cast<double>(i);
    return cfg.sweep.values[i];
}

ResultRow base_row(const ExperimentConfig& cfg, std::size_t i, RowSource source) {
    ResultRow row;
    row.sweep_value = sweep_value_at(cfg, i);
    row.source = source;
    return row;
}

}  // namespace

std::vector<ResultRow> run_theory(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<ResultRow> rows;
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        const ArrayScenario sc = scenario_at(cfg, i);
        const AssumptionReport rep = check_assumptions(sc);
        if (!rep.holds(1e-6)) {
            std::ostringstream msg;
            msg << "closed-form theory requires Assumptions 1-2; worst normalized interference "
                   "inner product "
                << rep.worst_orthogonality;
            throw AssumptionViolated(msg.str());
        }
        const SpatialCoefficients coeffs = spatial_coefficients(sc);
        const TheoryInputs t = theory_inputs(coeffs, sc.noncircularity);

        ResultRow exact = base_row(cfg, i, RowSource::TheoryExact);
        const double g = gain_closed(t);
        const double li = lambda_closed(t, Channel::I);
        const double lq = lambda_closed(t, Channel::Q);
        exact.g_db = to_db(g);
        exact.g_i_db = to_db(li * g);
        exact.g_q_db = to_db(lq * g);
        exact.lambda_i = li;
        exact.lambda_q = lq;
        exact.sinr_mvdr_db = to_db(sinr_mvdr_closed(t));
        exact.sinr_capon_db = to_db(sinr_capon_closed(t));
        rows.push_back(exact);

        try {
            ResultRow appr = base_row(cfg, i, RowSource::TheoryApprox);
            appr.g_db = to_db(approx(t, ApproxTarget::G));
            appr.g_i_db = to_db(approx(t, ApproxTarget::GI));
            appr.g_q_db = to_db(approx(t, ApproxTarget::GQ));
            appr.lambda_i = approx(t, ApproxTarget::LambdaI);
            appr.lambda_q = approx(t, ApproxTarget::LambdaQ);
            appr.sinr_mvdr_db = to_db(approx(t, ApproxTarget::SinrMvdr));
            appr.sinr_capon_db = to_db(sinr_capon_closed(t));
            rows.push_back(appr);
        } catch (const DomainError&) {
            // Approximations are undefined at the |alpha_Is|^2 boundaries;
            // only the exact row is emitted there.
        }
    }
    return rows;
}

namespace {

struct InAccumulator {
    double count = 0.0;
    double abs_sq = 0.0;
    Complex sq = 0.0;
    double re_sq = 0.0;
    double im_sq = 0.0;

    void add(const std::vector<Complex>& q) {
        for (const auto& v : q) {
            abs_sq += std::norm(v);
            sq += v * v;
            re_sq += v.real() * v.real();
            im_sq += v.imag() * v.imag();
        }
        count += static_cast<double>(q.size());
    }

    InCharacterization characterization() const {
        if (count <= 0.0 || abs_sq <= 0.0) throw ZeroPower("empty output IN accumulator");
        InCharacterization ch;
        ch.kappa = abs_sq / count;
        ch.kappa_tilde = sq / count;
        ch.kappa_i = re_sq / count;
        ch.kappa_q = im_sq / count;
        ch.gamma_q = ch.kappa_tilde / ch.kappa;
        return ch;
    }
};

double weight_deviation(const BeamWeights& a, const BeamWeights& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.w1.size(); ++i) {
        num += std::norm(a.w1[i] - b.w1[i]) + std::norm(a.w2[i] - b.w2[i]);
        den += std::norm(a.w1[i]) + std::norm(a.w2[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

}  // namespace

std::vector<ResultRow> run_simulation(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<ResultRow> rows;
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        const ArrayScenario sc = scenario_at(cfg, i);
        const auto iq = effective_iq(cfg, i);
        ArrayScenario sim_sc = sc;
        if (iq) {
            // I/Q runs synthesize circular QPSK and impose the imbalance.
            sim_sc.noncircularity = NoncircularitySpec{0.0, 0.0};
        }
        const ComplexVector s = steering_vector(sc.soi_doa_deg, sc.n_sensors);

        InAccumulator acc_mvdr, acc_capon;
        double worst_weight_dev = 0.0;
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = Rng::substream(cfg.seed, i * 1000003ULL + trial);
            SnapshotBatch batch = synthesize(sim_sc, cfg.snapshots, seed);
            if (iq) batch = apply_iq_imbalance(batch, *iq);
            const SecondOrderStats stats = estimate_in_stats(batch.in_ref);
            const BeamWeights capon = capon_weights(stats, s);
            const BeamWeights mvdr = wl_mvdr_weights(stats, s);
            if (cfg.use_data_stats) {
                const SecondOrderStats data_stats = estimate_in_stats(batch.data);
                worst_weight_dev = std::max(
                    worst_weight_dev, weight_deviation(mvdr, wl_mvdr_weights(data_stats, s)));
            }
            acc_mvdr.add(output_in(batch, mvdr));
            acc_capon.add(output_in(batch, capon));
        }
        if (cfg.use_data_stats)
            std::fprintf(stderr,
                         "# grid point %zu: WL weight deviation (data stats vs IN stats) = %.3e\n",
                         i, worst_weight_dev);

        const GainReport rep =
            gain_report(acc_mvdr.characterization(), acc_capon.characterization(), sc.soi_power);
        ResultRow row = base_row(cfg, i, RowSource::Simulated);
        row.g_db = to_db(rep.g);
        if (rep.g_i) row.g_i_db = to_db(*rep.g_i);
        if (rep.g_q) row.g_q_db = to_db(*rep.g_q);
        row.lambda_i = rep.lambda_i;
        row.lambda_q = rep.lambda_q;
        row.sinr_mvdr_db = to_db(rep.sinr_mvdr);
        row.sinr_capon_db = to_db(rep.sinr_capon);
        row.trials_used = cfg.trials;
        row.snapshots_used = cfg.snapshots;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

ExperimentConfig base_preset(std::size_t n_sensors, std::vector<double> doas, double soi_doa) {
    ExperimentConfig cfg;
    cfg.scenario.n_sensors = n_sensors;
    cfg.scenario.soi_doa_deg = soi_doa;
    cfg.scenario.soi_power = 10.0;   // SNR 10 dB over unit noise
    cfg.scenario.noise_power = 1.0;
    for (double d : doas) cfg.scenario.interferences.push_back({d, 100.0, 0.0});  // INR 20 dB
    cfg.scenario.noncircularity = NoncircularitySpec{0.8, deg2rad(150.0)};
    cfg.sweep.variable = SweepVariable::GammaRate;
    cfg.sweep.values = linspace(0.0, 0.95, 20);
    cfg.snapshots = 20000;
    cfg.trials = 1;
    cfg.seed = 1;
    cfg.snap_doas = true;
    return cfg;
}

}  // namespace

ExperimentConfig figure_preset(const std::string& name) {
    if (name == "fig1") return base_preset(2, {0.0, 90.0}, 25.0);
    if (name == "fig1-alt") return base_preset(2, {0.0, 90.0}, -25.0);
    if (name == "fig2a") return base_preset(6, {19.0, 42.0, 90.0}, 80.0);
    if (name == "fig2b") return base_preset(6, {19.0, 42.0, 90.0}, 10.0);
    if (name == "fig3") {
        ExperimentConfig cfg = base_preset(16, {14.0, 30.0, 49.0, 90.0}, 85.0);
        cfg.sweep.variable = SweepVariable::GammaPhase;
        cfg.sweep.values = linspace(0.0, 360.0 * 719.0 / 720.0, 720);
        return cfg;
    }
    const bool f6a = name == "fig6a", f6b = name == "fig6b", f6c = name == "fig6c";
    if (f6a || f6b || f6c) {
        ExperimentConfig cfg = base_preset(6, {19.0, 42.0, 90.0}, 0.0);
        cfg.sweep.variable = SweepVariable::SoiDoa;
        cfg.sweep.values = linspace(-85.0, 85.0, 35);
        if (f6a) cfg.iq = IqImbalance{1.08, deg2rad(8.2)};
        if (f6b) cfg.iq = IqImbalance{0.9, deg2rad(-11.2)};
        if (f6c) cfg.iq = IqImbalance{1.15, deg2rad(15.0)};
        return cfg;
    }
    throw UnknownPreset("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig1-alt", "fig2a", "fig2b", "fig3", "fig6a", "fig6b", "fig6c"};
}

std::string to_csv(std::vector<ResultRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
        return std::string(row_source_name(a.source)) < row_source_name(b.source);
    });
    std::ostringstream out;
    out << "sweep_value,source,G_dB,GI_dB,GQ_dB,lambda_I,lambda_Q,SINR_MVDR_dB,SINR_Capon_dB,"
           "trials,snapshots\n";
    for (const auto& r : rows) {
        out << fmt12(r.sweep_value) << ',' << row_source_name(r.source) << ',' << fmt12(r.g_db)
            << ',' << fmt_opt(r.g_i_db) << ',' << fmt_opt(r.g_q_db) << ',' << fmt_opt(r.lambda_i)
            << ',' << fmt_opt(r.lambda_q) << ',' << fmt12(r.sinr_mvdr_db) << ','
            << fmt12(r.sinr_capon_db) << ',' << r.trials_used << ',' << r.snapshots_used << '\n';
    }
    return out.str();
}

void emit(std::vector<ResultRow> rows, const std::string& path, EmitFormat format) {
    if (format == EmitFormat::Csv) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open for writing: " + path);
        f << to_csv(std::move(rows));
        if (!f) throw IoError("write failed: " + path);
        return;
    }
    const std::string csv_path = path + ".csv";
    emit(rows, csv_path, EmitFormat::Csv);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "# gnuplot script generated by wlbeam\n"
      << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'sweep value'\n"
      << "set ylabel 'gain (dB)'\n"
      << "set grid\n"
      << "plot '" << csv_path << "' using 1:4 with linespoints title 'G_I (dB)', \\\n"
      << "     '" << csv_path << "' using 1:5 with linespoints title 'G_Q (dB)', \\\n"
      << "     '" << csv_path << "' using 1:3 with linespoints title 'G (dB)'\n";
    if (!f) throw IoError("write failed: " + path);
}

CompareReport compare_rows(const std::vector<ResultRow>& theory_rows,
                           const std::vector<ResultRow>& sim_rows) {
    std::map<double, const ResultRow*> exact;
    for (const auto& r : theory_rows)
        if (r.source == RowSource::TheoryExact) exact[r.sweep_value] = &r;
    CompareReport rep;
    auto upd = [](double& slot, double a, double b) { slot = std::max(slot, std::abs(a - b)); };
    for (const auto& r : sim_rows) {
        if (r.source != RowSource::Simulated) continue;
        auto it = exact.find(r.sweep_value);
        if (it == exact.end()) continue;
        const ResultRow& t = *it->second;
        ++rep.points_compared;
        upd(rep.max_g_db, r.g_db, t.g_db);
        if (r.g_i_db && t.g_i_db) upd(rep.max_g_i_db, *r.g_i_db, *t.g_i_db);
        if (r.g_q_db && t.g_q_db) upd(rep.max_g_q_db, *r.g_q_db, *t.g_q_db);
        upd(rep.max_sinr_mvdr_db, r.sinr_mvdr_db, t.sinr_mvdr_db);
        upd(rep.max_sinr_capon_db, r.sinr_capon_db, t.sinr_capon_db);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Config text format: `key = value` lines, '#' comments, comma lists.

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + key + ": '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(s, ','))
        if (!item.empty()) out.push_back(parse_double(item, key));
    return out;
}

bool parse_bool(const std::string& s, const std::string& key) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + s + "'");
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.sweep.values.clear();
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value': " + line);
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("n_sensors")) cfg.scenario.n_sensors = static_cast<std::size_t>(parse_double(*v, "n_sensors"));
    if (auto v = take("soi_doa_deg")) cfg.scenario.soi_doa_deg = parse_double(*v, "soi_doa_deg");
    if (auto v = take("soi_power")) cfg.scenario.soi_power = parse_double(*v, "soi_power");
    if (auto v = take("soi_phase_deg")) cfg.scenario.soi_phase = deg2rad(parse_double(*v, "soi_phase_deg"));
    if (auto v = take("noise_power")) cfg.scenario.noise_power = parse_double(*v, "noise_power");

    std::vector<double> doas, powers, phases;
    if (auto v = take("interference_doas_deg")) doas = parse_list(*v, "interference_doas_deg");
    if (auto v = take("interference_powers")) powers = parse_list(*v, "interference_powers");
    if (auto v = take("interference_phases_deg")) phases = parse_list(*v, "interference_phases_deg");
    for (std::size_t p = 0; p < doas.size(); ++p) {
        Interference itf;
        itf.doa_deg = doas[p];
        if (!powers.empty()) itf.power = powers.size() == 1 ? powers[0] : powers.at(p);
        if (!phases.empty()) itf.carrier_phase = deg2rad(phases.size() == 1 ? phases[0] : phases.at(p));
        cfg.scenario.interferences.push_back(itf);
    }
    if (!powers.empty() && powers.size() != 1 && powers.size() != doas.size())
        throw ConfigError("interference_powers length mismatch");

    if (auto v = take("gamma_rate")) cfg.scenario.noncircularity.rate = parse_double(*v, "gamma_rate");
    if (auto v = take("gamma_phase_deg")) cfg.scenario.noncircularity.phase = deg2rad(parse_double(*v, "gamma_phase_deg"));

    if (auto v = take("sweep_variable")) {
        if (*v == "gamma_rate") cfg.sweep.variable = SweepVariable::GammaRate;
        else if (*v == "gamma_phase") cfg.sweep.variable = SweepVariable::GammaPhase;
        else if (*v == "soi_doa") cfg.sweep.variable = SweepVariable::SoiDoa;
        else if (*v == "iq_pair") cfg.sweep.variable = SweepVariable::IqPair;
        else throw ConfigError("unknown sweep_variable: " + *v);
    }
    if (auto v = take("sweep_values")) cfg.sweep.values = parse_list(*v, "sweep_values");
    if (auto v = take("sweep_range")) {
        const auto parts = split(*v, ':');
        if (parts.size() != 3) throw ConfigError("sweep_range must be start:stop:count");
        const double a = parse_double(parts[0], "sweep_range");
        const double b = parse_double(parts[1], "sweep_range");
        const auto n = static_cast<std::size_t>(parse_double(parts[2], "sweep_range"));
        if (n < 2) throw ConfigError("sweep_range count must be >= 2");
        cfg.sweep.values = linspace(a, b, n);
    }
    if (auto v = take("iq_pairs")) {
        for (const auto& pair : split(*v, ',')) {
            if (pair.empty()) continue;
            const auto parts = split(pair, ':');
            if (parts.size() != 2) throw ConfigError("iq_pairs entries must be g:zeta_deg");
            cfg.sweep.iq_values.push_back(
                {parse_double(parts[0], "iq_pairs"), deg2rad(parse_double(parts[1], "iq_pairs"))});
        }
    }

    if (auto v = take("trials")) cfg.trials = static_cast<std::size_t>(parse_double(*v, "trials"));
    if (auto v = take("snapshots")) cfg.snapshots = static_cast<std::size_t>(parse_double(*v, "snapshots"));
    if (auto v = take("seed")) cfg.seed = static_cast<std::uint64_t>(parse_double(*v, "seed"));
    if (auto v = take("snap_doas")) cfg.snap_doas = parse_bool(*v, "snap_doas");
    if (auto v = take("use_data_stats")) cfg.use_data_stats = parse_bool(*v, "use_data_stats");
    std::optional<double> iq_g, iq_zeta;
    if (auto v = take("iq_g")) iq_g = parse_double(*v, "iq_g");
    if (auto v = take("iq_zeta_deg")) iq_zeta = deg2rad(parse_double(*v, "iq_zeta_deg"));
    if (iq_g.has_value() != iq_zeta.has_value())
        throw ConfigError("iq_g and iq_zeta_deg must be given together");
    if (iq_g) cfg.iq = IqImbalance{*iq_g, *iq_zeta};
    if (auto v = take("output")) cfg.output = *v;

    if (!kv.empty()) throw ConfigError("unknown config key: " + kv.begin()->first);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "# wlbeam experiment config\n";
    out << "n_sensors = " << cfg.scenario.n_sensors << '\n';
    out << "soi_doa_deg = " << fmt12(cfg.scenario.soi_doa_deg) << '\n';
    out << "soi_power = " << fmt12(cfg.scenario.soi_power) << '\n';
    out << "soi_phase_deg = " << fmt12(rad2deg(cfg.scenario.soi_phase)) << '\n';
    out << "noise_power = " << fmt12(cfg.scenario.noise_power) << '\n';
    auto join = [](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt12(v[i]);
        return s;
    };
    std::vector<double> doas, powers, phases;
    for (const auto& itf : cfg.scenario.interferences) {
        doas.push_back(itf.doa_deg);
        powers.push_back(itf.power);
        phases.push_back(rad2deg(itf.carrier_phase));
    }
    if (!doas.empty()) {
        out << "interference_doas_deg = " << join(doas) << '\n';
        out << "interference_powers = " << join(powers) << '\n';
        out << "interference_phases_deg = " << join(phases) << '\n';
    }
    out << "gamma_rate = " << fmt12(cfg.scenario.noncircularity.rate) << '\n';
    out << "gamma_phase_deg = " << fmt12(rad2deg(cfg.scenario.noncircularity.phase)) << '\n';
    switch (cfg.sweep.variable) {
        case SweepVariable::GammaRate: out << "sweep_variable = gamma_rate\n"; break;
        case SweepVariable::GammaPhase: out << "sweep_variable = gamma_phase\n"; break;
        case SweepVariable::SoiDoa: out << "sweep_variable = soi_doa\n"; break;
        case SweepVariable::IqPair: out << "sweep_variable = iq_pair\n"; break;
    }
    if (!cfg.sweep.values.empty()) out << "sweep_values = " << join(cfg.sweep.values) << '\n';
    if (!cfg.sweep.iq_values.empty()) {
        out << "iq_pairs = ";
        for (std::size_t i = 0; i < cfg.sweep.iq_values.size(); ++i)
            out << (i ? ", " : "") << fmt12(cfg.sweep.iq_values[i].g) << ':'
                << fmt12(rad2deg(cfg.sweep.iq_values[i].zeta));
        out << '\n';
    }
    out << "trials = " << cfg.trials << '\n';
    out << "snapshots = " << cfg.snapshots << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "snap_doas = " << (cfg.snap_doas ? "true" : "false") << '\n';
    if (cfg.use_data_stats) out << "use_data_stats = true\n";
    if (cfg.iq) {
        out << "iq_g = " << fmt12(cfg.iq->g) << '\n';
        out << "iq_zeta_deg = " << fmt12(rad2deg(cfg.iq->zeta)) << '\n';
    }
    if (!cfg.output.empty()) out << "output = " << cfg.output << '\n';
    return out.str();
}

}  // namespace wlbeam
