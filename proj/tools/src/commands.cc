// Copyright 2026 The condham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "condham/conditional.h"
#include "condham/phase_estimation.h"
#include "condham/pulse.h"
#include "document.h"

namespace condham::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class NumericFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Collects every artifact of a run and writes them only at the end, through
// temporary files renamed into place.
class OutputSet {
   public:
    void add(std::string name, std::string content) {
        files_[std::move(name)] = std::move(content);
    }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto &[name, _] : files_) {
            out.push_back(name);
        }
        return out;
    }
    void commit(const fs::path &dir) const {
        fs::create_directories(dir);
        std::vector<std::pair<fs::path, fs::path>> staged;
        for (const auto &[name, content] : files_) {
            fs::path target = dir / name;
            fs::path tmp = target;
            tmp += ".tmp";
            std::ofstream f(tmp, std::ios::binary);
            f << content;
            if (!f) {
                for (const auto &s : staged) {
                    fs::remove(s.first);
                }
                throw std::runtime_error("cannot write " + tmp.string());
            }
            staged.emplace_back(tmp, target);
        }
        for (const auto &[tmp, target] : staged) {
            fs::rename(tmp, target);
        }
    }

   private:
    std::map<std::string, std::string> files_;
};

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

PauliAxis parse_axis_token(const std::string &tok) {
    if (tok.size() != 1 || tok == "i" || tok == "I" || tok == "1") {
        throw UsageError("axis must be one of x, y, z, got '" + tok + "'");
    }
    try {
        return parse_axis(tok[0]);
    } catch (const std::invalid_argument &) {
        throw UsageError("axis must be one of x, y, z, got '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

size_t parse_index(const std::string &tok, size_t n) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (tok.empty() || pos != tok.size() || tok[0] == '-') {
        throw UsageError("not a qubit index: '" + tok + "'");
    }
    if (v >= n) {
        throw UsageError("qubit " + tok + " out of range for n = " + std::to_string(n));
    }
    return v;
}

PairIndex parse_pair(const std::string &text, size_t n) {
    auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("expected j,k,alpha,beta, got '" + text + "'");
    }
    PairIndex idx{parse_index(parts[0], n), parse_index(parts[1], n), parse_axis_token(parts[2]),
                  parse_axis_token(parts[3])};
    if (idx.j == idx.k) {
        throw UsageError("pair needs two distinct qubits");
    }
    return idx;
}

std::string mode_name(EvolutionMode m) {
    return m == EvolutionMode::Ideal ? "ideal" : "pulse";
}

// ---------------------------------------------------------------------------
// spectrum / dos

struct QpeOptions {
    std::string input;
    std::string out_dir = ".";
    int m = 6;
    uint64_t shots = 1024;
    uint64_t seed = 1;
    std::string mode = "ideal";
    double epsilon = 0.05;
    int p = 8;
    int slices = 4;
    std::string init;
    std::optional<double> delta_override;
    bool exact = false;
    double gap_threshold = 1e-3;
    bool record_timing = false;
};

struct Prepared {
    PairHamiltonian h{1};
    std::string raw;
    PEConfig cfg;
    std::string delta_source;
};

Prepared prepare(const QpeOptions &opt) {
    Prepared prep;
    prep.raw = read_file(opt.input);
    prep.h = parse_document(prep.raw).hamiltonian;
    double delta = 0;
    if (opt.delta_override) {
        delta = *opt.delta_override;
        if (!(delta > 0) || !std::isfinite(delta)) {
            throw UsageError("--delta-override must be positive");
        }
        prep.delta_source = "override";
    } else {
        delta = spread_bound(prep.h);
        prep.delta_source = "spread_bound";
        if (delta == 0) {
            // Zero Hamiltonian: every readout is k = 0 for any tau.
            delta = 1;
            prep.delta_source = "fallback_zero_hamiltonian";
        }
    }
    if (opt.m < 1 || opt.m > 16) {
        throw UsageError("--m must be in 1..16");
    }
    prep.cfg = PEConfig::from_delta(opt.m, delta);
    prep.cfg.shots = opt.shots;
    prep.cfg.seed = opt.seed;
    if (opt.mode == "ideal") {
        prep.cfg.mode = EvolutionMode::Ideal;
    } else if (opt.mode == "pulse") {
        prep.cfg.mode = EvolutionMode::PulseLevel;
    } else {
        throw UsageError("--mode must be ideal or pulse");
    }
    prep.cfg.conversion.epsilon = opt.epsilon;
    prep.cfg.conversion.p = opt.p;
    prep.cfg.conversion.slices = opt.slices;
    prep.cfg.conversion.mode = prep.cfg.mode;
    prep.cfg.conversion.skip_zero_terms = true;
    try {
        prep.cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (prep.cfg.mode == EvolutionMode::PulseLevel && prep.h.num_qubits() < 2) {
        throw UsageError("pulse mode needs at least two system qubits");
    }
    if (!opt.exact && opt.shots < 1) {
        throw UsageError("--shots must be positive");
    }
    return prep;
}

QuantumState column(const EigenDecomposition &eig, size_t i) {
    std::vector<Complex> v(eig.vectors.dim());
    for (size_t r = 0; r < v.size(); r++) {
        v[r] = eig.vectors(r, i);
    }
    return QuantumState(std::move(v));
}

double parse_double(const std::string &tok, const char *what) {
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (tok.empty() || pos != tok.size() || !std::isfinite(v)) {
        throw UsageError(std::string("invalid ") + what + ": '" + tok + "'");
    }
    return v;
}

Histogram run_histogram(const Prepared &prep, const std::string &init, bool exact,
                        const EigenDecomposition &eig) {
    const auto &h = prep.h;
    size_t dim = size_t{1} << h.num_qubits();
    auto finish = [&](const Distribution &d) {
        return exact ? histogram_from_distribution(d, prep.cfg) : sample_distribution(d, prep.cfg);
    };
    if (init == "mixed") {
        return density_of_states(h, MaximallyMixed{}, prep.cfg, exact);
    }
    auto colon = init.find(':');
    std::string kind = init.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : init.substr(colon + 1);
    if (kind == "thermal" && colon != std::string::npos) {
        double beta = parse_double(arg, "inverse temperature");
        if (beta < 0) {
            throw UsageError("thermal:beta needs beta >= 0");
        }
        return density_of_states(h, Thermal{beta}, prep.cfg, exact);
    }
    if (kind == "eigenstate" && colon != std::string::npos) {
        size_t i = parse_index(arg, dim);
        return finish(run_qpe(h, column(eig, i), prep.cfg));
    }
    if (kind == "basis" && colon != std::string::npos) {
        if (arg.size() != h.num_qubits() || arg.find_first_not_of("01") != std::string::npos) {
            throw UsageError("basis:<bits> needs exactly " + std::to_string(h.num_qubits()) + " binary digits");
        }
        size_t index = std::stoul(arg, nullptr, 2);
        return finish(run_qpe(h, QuantumState::basis(dim, index), prep.cfg));
    }
    throw UsageError("--init must be eigenstate:<i>, basis:<bits>, mixed or thermal:<beta>");
}

void check_finite(const Histogram &hist) {
    for (const auto &b : hist.bins) {
        if (!std::isfinite(b.probability)) {
            throw NumericFailure("non-finite readout probability");
        }
    }
}

json config_echo(const QpeOptions &opt, const Prepared &prep) {
    json c;
    c["m"] = prep.cfg.m;
    c["tau"] = prep.cfg.tau;
    c["delta"] = prep.cfg.delta;
    c["delta_source"] = prep.delta_source;
    c["resolution"] = prep.cfg.resolution();
    c["mode"] = mode_name(prep.cfg.mode);
    c["exact"] = opt.exact;
    c["shots"] = opt.exact ? 0 : opt.shots;
    c["seed"] = opt.seed;
    c["init"] = opt.init;
    if (prep.cfg.mode == EvolutionMode::PulseLevel) {
        c["epsilon"] = opt.epsilon;
        c["p"] = opt.p;
        c["slices"] = opt.slices;
        c["weights"] = "corrected";
    }
    return c;
}

std::string manifest(const std::string &subcommand, const json &config, const std::string &input_hash,
                     const OutputSet &outputs, std::optional<double> wall_time) {
    json m;
    m["subcommand"] = subcommand;
    m["config"] = config;
    m["input_hash"] = "fnv1a64:" + input_hash;
    m["run_id"] = hex64(fnv1a(subcommand + "|" + input_hash + "|" + config.dump()));
    m["step_convention"] = step_convention().describe();
    auto names = outputs.names();
    names.push_back("manifest.json");
    std::sort(names.begin(), names.end());
    m["outputs"] = names;
    if (wall_time) {
        m["wall_time_seconds"] = *wall_time;
    }
    return m.dump(2) + "\n";
}

int cmd_qpe(const QpeOptions &opt, bool dos, std::ostream &out) {
    auto start = std::chrono::steady_clock::now();
    Prepared prep = prepare(opt);
    auto eig = hermitian_eig(to_dense(prep.h));
    Histogram hist = run_histogram(prep, opt.init, opt.exact, eig);
    check_finite(hist);

    OutputSet files;
    files.add("histogram.csv", histogram_csv(hist));
    if (dos) {
        if (!(opt.gap_threshold > 0)) {
            throw UsageError("--gap-threshold must be positive");
        }
        json g;
        g["threshold"] = opt.gap_threshold;
        g["resolution"] = prep.cfg.resolution();
        g["gaps"] = json::array();
        for (const auto &gap : gap_report(hist, opt.gap_threshold)) {
            g["gaps"].push_back({{"start_energy", gap.start_energy}, {"end_energy", gap.end_energy}});
        }
        files.add("gaps.json", g.dump(2) + "\n");
    } else {
        std::string csv = "index,eigenvalue\n";
        for (size_t i = 0; i < eig.values.size(); i++) {
            csv += std::to_string(i) + "," + fmt(eig.values[i]) + "\n";
        }
        files.add("spectrum.csv", csv);
    }
    json config = config_echo(opt, prep);
    if (dos) {
        config["gap_threshold"] = opt.gap_threshold;
    }
    std::optional<double> wall;
    if (opt.record_timing) {
        wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    files.add("manifest.json", manifest(dos ? "dos" : "spectrum", config, hex64(fnv1a(prep.raw)), files, wall));
    files.commit(opt.out_dir);

    const HistogramBin *mode = &hist.bins.front();
    for (const auto &b : hist.bins) {
        if (b.probability > mode->probability) {
            mode = &b;
        }
    }
    out << "modal readout k=" << mode->k << " energy=" << fmt(mode->energy_estimate)
        << " resolution=" << fmt(prep.cfg.resolution()) << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string input;
    std::vector<uint64_t> random;
    std::string out_dir = ".";
    int p = 4;
};

PairIndex dominant_pair(const PairHamiltonian &h) {
    PairIndex best{0, 1, PauliAxis::X, PauliAxis::X};
    double best_weight = -1;
    for (const auto &idx : pair_indices(h.num_qubits())) {
        auto t = isolated_term(h, idx.j, idx.k, idx.alpha, idx.beta, 1.0);
        double w = std::abs(t.a) + std::abs(t.b) + std::abs(t.c);
        if (w > best_weight) {
            best_weight = w;
            best = idx;
        }
    }
    return best;
}

json pair_json(const PairIndex &idx) {
    return {{"j", idx.j},
            {"k", idx.k},
            {"alpha", std::string(1, static_cast<char>(axis_char(idx.alpha) - 'A' + 'a'))},
            {"beta", std::string(1, static_cast<char>(axis_char(idx.beta) - 'A' + 'a'))}};
}

json check_commutator(const PairHamiltonian &h) {
    json c;
    double worst = 0;
    const auto &conv = step_convention();
    for (const auto &idx : pair_indices(h.num_qubits())) {
        auto r = check_commutator_identity(h, idx.j, idx.k, idx.alpha, idx.beta, WeightConvention::Corrected, conv);
        worst = std::max(worst, r.residual);
    }
    c["max_residual"] = worst;
    c["prefactor"] = conv.prefactor;
    c["tolerance"] = 1e-9;
    c["pass"] = worst < 1e-9;
    return c;
}

json check_epsilon_cubed(const PairHamiltonian &h, const PairIndex &idx) {
    json c;
    c["pair"] = pair_json(idx);
    const double eps[3] = {0.08, 0.04, 0.02};
    double err[3];
    json rows = json::array();
    for (int i = 0; i < 3; i++) {
        ConversionParams p;
        p.epsilon = eps[i];
        auto step = pair_conditional_step(h, idx.j, idx.k, idx.alpha, idx.beta, p);
        err[i] = spectral_norm(step - pair_step_target(h, idx.j, idx.k, idx.alpha, idx.beta, p));
        rows.push_back({{"epsilon", eps[i]}, {"error", err[i]}, {"error_over_eps3", err[i] / std::pow(eps[i], 3)}});
    }
    c["sweep"] = rows;
    bool negligible = err[0] < 1e-13;
    if (negligible) {
        c["slope"] = nullptr;
        c["pass"] = true;
    } else {
        double slope = std::log(err[0] / err[2]) / std::log(eps[0] / eps[2]);
        c["slope"] = slope;
        c["pass"] = slope >= 2.5 && slope <= 3.5;
    }
    c["slope_window"] = {2.5, 3.5};
    return c;
}

json check_decoupling(const PairHamiltonian &h) {
    size_t n = h.num_qubits();
    bool ok = true;
    size_t subsets = size_t{1} << n;
    for (size_t mask = 0; mask < subsets && ok; mask++) {
        std::set<size_t> m;
        for (size_t q = 0; q < n; q++) {
            if (mask & (size_t{1} << q)) {
                m.insert(q);
            }
        }
        auto avg = symbolic_average(decoupling_schedule(n, m, 1.0), h);
        std::vector<double> kept;
        avg.for_each_term([&](const PauliString &, double c) { kept.push_back(c); });
        size_t i = 0;
        h.for_each_term([&](const PauliString &p, double c) {
            bool touches = false;
            for (size_t q : m) {
                touches |= p.axis(q) != PauliAxis::I;
            }
            ok &= touches ? kept[i] == 0.0 : kept[i] == c;
            i++;
        });
    }
    return {{"subsets", subsets}, {"pass", ok}};
}

json check_sum_identity(const PairHamiltonian &h) {
    auto dense = to_dense(h);
    double diff = frobenius_norm(reconstruct_from_pair_terms(h, WeightConvention::Corrected) - dense);
    double tol = 1e-12 * std::max(1.0, frobenius_norm(dense));
    return {{"difference", diff}, {"tolerance", tol}, {"pass", diff <= tol}};
}

json check_inversion(const PairHamiltonian &h, const PairIndex &idx, int base_p) {
    size_t n = h.num_qubits();
    const double t = 0.2;
    auto select = nest(isolate_pair_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, t),
                       rescale_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, t));
    auto identity = DenseOperator::identity(size_t{1} << n);
    json rows = json::array();
    bool ok = true;
    double previous = -1;
    for (int p = base_p; p <= base_p * 8; p *= 2) {
        auto forward = simulate_schedule(select, h, p);
        auto inverted = simulate_schedule(nest(inversion_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, t, p), select),
                                          h, 1);
        double dist = spectral_norm(inverted * forward - identity);
        json row = {{"p", p}, {"distance", dist}};
        if (previous >= 0) {
            double ratio = previous > 1e-13 ? dist / previous : 0.0;
            row["ratio"] = ratio;
            ok &= previous <= 1e-13 || dist <= previous / 2;
        }
        rows.push_back(row);
        previous = dist;
    }
    return {{"pair", pair_json(idx)}, {"time", t}, {"sweep", rows}, {"pass", ok}};
}

json check_tail_bound(const PairHamiltonian &h) {
    double delta = spread_bound(h);
    auto cfg = PEConfig::from_delta(7, delta > 0 ? delta : 1.0);
    auto eig = hermitian_eig(to_dense(h));
    json rows = json::array();
    bool ok = true;
    for (int e : {2, 4, 8}) {
        double worst = 0;
        double bound = 0;
        for (size_t i = 0; i < eig.values.size(); i++) {
            auto t = tail_probability_check(h, column(eig, i), cfg, e);
            worst = std::max(worst, t.empirical);
            bound = t.bound;
        }
        ok &= worst <= bound;
        rows.push_back({{"e", e}, {"max_empirical", worst}, {"bound", bound}});
    }
    return {{"m", cfg.m}, {"rows", rows}, {"pass", ok}};
}

int cmd_verify(const VerifyOptions &opt, std::ostream &out) {
    if (opt.p < 1) {
        throw UsageError("--p must be at least 1");
    }
    PairHamiltonian h(1);
    std::string source;
    if (!opt.random.empty()) {
        if (!opt.input.empty()) {
            throw UsageError("give either an input document or --random, not both");
        }
        if (opt.random[0] < 2 || opt.random[0] > kMaxSystemQubits) {
            throw UsageError("--random n must be in 2.." + std::to_string(kMaxSystemQubits));
        }
        h = random_hamiltonian(opt.random[0], opt.random[1], 1.0);
        source = serialize_document({h, json::object()});
    } else {
        if (opt.input.empty()) {
            throw UsageError("verify needs an input document or --random n seed");
        }
        source = read_file(opt.input);
        h = parse_document(source).hamiltonian;
    }
    json report;
    report["input_hash"] = "fnv1a64:" + hex64(fnv1a(source));
    report["n"] = h.num_qubits();
    report["step_convention"] = step_convention().describe();
    json checks;
    checks["decoupling"] = check_decoupling(h);
    checks["tail_bound"] = check_tail_bound(h);
    if (h.num_qubits() >= 2) {
        PairIndex idx = dominant_pair(h);
        checks["commutator_identity"] = check_commutator(h);
        checks["epsilon_cubed"] = check_epsilon_cubed(h, idx);
        checks["sum_identity"] = check_sum_identity(h);
        checks["inversion"] = check_inversion(h, idx, opt.p);
    }
    bool all = true;
    for (auto &[name, c] : checks.items()) {
        all &= c["pass"].get<bool>();
        out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "\n";
    }
    report["checks"] = checks;
    report["pass"] = all;
    OutputSet files;
    files.add("verify.json", report.dump(2) + "\n");
    files.commit(opt.out_dir);
    return all ? kOk : kInvariantFailure;
}

// ---------------------------------------------------------------------------
// compile-schedule

struct ScheduleOptions {
    std::string input;
    std::string out_dir = ".";
    std::string decouple;
    std::string isolate;
    std::string invert;
    std::string rescale;
    std::string schedule_file;
    int p = 8;
    double time = 1.0;
};

std::set<size_t> parse_qubit_set(const std::string &text, size_t n) {
    std::set<size_t> m;
    if (text == "all") {
        for (size_t q = 0; q < n; q++) {
            m.insert(q);
        }
        return m;
    }
    if (text == "none") {
        return m;
    }
    for (const auto &tok : split(text, ',')) {
        m.insert(parse_index(tok, n));
    }
    return m;
}

int cmd_compile(const ScheduleOptions &opt, std::ostream &out) {
    int chosen = !opt.decouple.empty() + !opt.isolate.empty() + !opt.invert.empty() + !opt.rescale.empty() +
                 !opt.schedule_file.empty();
    if (chosen != 1) {
        throw UsageError("choose exactly one of --decouple, --isolate, --invert, --rescale, --schedule");
    }
    if (!(opt.time > 0) || !std::isfinite(opt.time)) {
        throw UsageError("--time must be positive");
    }
    auto h = parse_document(read_file(opt.input)).hamiltonian;
    size_t n = h.num_qubits();
    std::optional<PulseSchedule> schedule;
    if (!opt.decouple.empty()) {
        schedule = decoupling_schedule(n, parse_qubit_set(opt.decouple, n), opt.time);
    } else if (!opt.isolate.empty()) {
        auto idx = parse_pair(opt.isolate, n);
        schedule = isolate_pair_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, opt.time);
    } else if (!opt.invert.empty()) {
        auto idx = parse_pair(opt.invert, n);
        if (opt.p < 1) {
            throw UsageError("--p must be at least 1");
        }
        schedule = inversion_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, opt.time, opt.p);
    } else if (!opt.rescale.empty()) {
        auto idx = parse_pair(opt.rescale, n);
        try {
            schedule = rescale_schedule(n, idx.j, idx.k, idx.alpha, idx.beta, opt.time);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        try {
            schedule = parse_schedule(read_file(opt.schedule_file));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("bad schedule file: ") + e.what());
        }
        if (schedule->num_qubits() != n || !schedule->system_only()) {
            throw UsageError("schedule must be system-only and match the document's qubit count");
        }
    }
    auto avg = symbolic_average(*schedule, h);
    json coeffs = json::array();
    size_t nonzero = 0;
    avg.for_each_term([&](const PauliString &p, double c) {
        if (c != 0.0) {
            coeffs.push_back({{"term", p.str()}, {"value", c}});
            nonzero++;
        }
    });
    json report;
    report["n"] = n;
    report["total_time"] = schedule->total_time();
    report["segments"] = schedule->segments().size();
    report["nonzero"] = nonzero;
    report["average"] = coeffs;
    OutputSet files;
    files.add("schedule.txt", format_schedule(*schedule));
    files.add("average.json", report.dump(2) + "\n");
    files.commit(opt.out_dir);
    out << schedule->segments().size() << " segments, " << nonzero << " nonzero averaged coefficients\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// random

struct RandomOptions {
    size_t n = 3;
    uint64_t seed = 1;
    double range = 1.0;
    std::string output;
};

int cmd_random(const RandomOptions &opt, std::ostream &out) {
    if (opt.n < 1 || opt.n > kMaxSystemQubits) {
        throw UsageError("--n must be in 1.." + std::to_string(kMaxSystemQubits));
    }
    if (!(opt.range > 0) || !std::isfinite(opt.range)) {
        throw UsageError("--range must be positive");
    }
    HamiltonianDocument doc;
    if (opt.n == 1) {
        // One qubit has no couplings; draw the three fields the same way.
        doc.hamiltonian = PairHamiltonian(1);
        auto two = random_hamiltonian(2, opt.seed, opt.range);
        for (PauliAxis a : kAxes) {
            doc.hamiltonian.set_r(0, a, two.r(0, a));
        }
    } else {
        doc.hamiltonian = random_hamiltonian(opt.n, opt.seed, opt.range);
    }
    doc.metadata = {{"generator", "random"}, {"seed", opt.seed}, {"range", opt.range}};
    std::string text = serialize_document(doc);
    if (opt.output.empty() || opt.output == "-") {
        out << text;
        return kOk;
    }
    fs::path target(opt.output);
    OutputSet files;
    files.add(target.filename().string(), text);
    files.commit(target.has_parent_path() ? target.parent_path() : fs::path("."));
    return kOk;
}

void add_qpe_flags(CLI::App *sub, QpeOptions &opt, const std::string &default_init) {
    opt.init = default_init;
    sub->add_option("input", opt.input, "Hamiltonian document (JSON)")->required();
    sub->add_option("-o,--out", opt.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--m", opt.m, "Ancilla qubits")->capture_default_str();
    sub->add_option("--shots", opt.shots, "Sampled readouts")->capture_default_str();
    sub->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--mode", opt.mode, "ideal or pulse")->capture_default_str();
    sub->add_option("--epsilon", opt.epsilon, "Conversion step length (pulse mode)")->capture_default_str();
    sub->add_option("--p", opt.p, "Inversion refinement (pulse mode)")->capture_default_str();
    sub->add_option("--slices", opt.slices, "Schedule repetitions per step (pulse mode)")->capture_default_str();
    sub->add_option("--init", opt.init, "eigenstate:<i>, basis:<bits>, mixed or thermal:<beta>")
        ->capture_default_str();
    sub->add_option("--delta-override", opt.delta_override, "Spectral spread bound used for tau");
    sub->add_flag("--record-timing", opt.record_timing, "Record wall time in the manifest");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Conditional-Hamiltonian phase estimation simulator", "condham"};
    app.require_subcommand(1);

    QpeOptions spectrum_opt;
    auto *spectrum = app.add_subcommand("spectrum", "Phase estimation readout histogram and oracle spectrum");
    add_qpe_flags(spectrum, spectrum_opt, "mixed");
    spectrum->add_flag("--exact", spectrum_opt.exact, "Exact distribution instead of samples");

    QpeOptions dos_opt;
    auto *dos = app.add_subcommand("dos", "Density of states with gap report");
    add_qpe_flags(dos, dos_opt, "mixed");
    dos->add_flag("--exact", dos_opt.exact, "Exact distribution instead of samples");
    dos->add_option("--gap-threshold", dos_opt.gap_threshold, "Probability below which a readout is empty")
        ->capture_default_str();

    VerifyOptions verify_opt;
    auto *verify = app.add_subcommand("verify", "Run the invariant checks");
    verify->add_option("input", verify_opt.input, "Hamiltonian document (JSON)");
    verify->add_option("--random", verify_opt.random, "Seeded instance instead of a document: n seed")
        ->expected(2);
    verify->add_option("-o,--out", verify_opt.out_dir, "Output directory")->capture_default_str();
    verify->add_option("--p", verify_opt.p, "Smallest inversion refinement in the sweep")->capture_default_str();

    ScheduleOptions sched_opt;
    auto *compile = app.add_subcommand("compile-schedule", "Emit a pulse schedule and its average");
    compile->add_option("input", sched_opt.input, "Hamiltonian document (JSON)")->required();
    compile->add_option("-o,--out", sched_opt.out_dir, "Output directory")->capture_default_str();
    compile->add_option("--decouple", sched_opt.decouple, "Qubits to decouple: all, none or j,k,...");
    compile->add_option("--isolate", sched_opt.isolate, "Keep one pair term: j,k,alpha,beta");
    compile->add_option("--invert", sched_opt.invert, "Inversion schedule for j,k,alpha,beta");
    compile->add_option("--rescale", sched_opt.rescale, "Single-qubit rescaling for j,k,alpha,beta");
    compile->add_option("--schedule", sched_opt.schedule_file, "Re-read a schedule file");
    compile->add_option("--p", sched_opt.p, "Inversion refinement")->capture_default_str();
    compile->add_option("--time", sched_opt.time, "Schedule length")->capture_default_str();

    RandomOptions random_opt;
    auto *random = app.add_subcommand("random", "Emit a seeded Hamiltonian document");
    random->add_option("--n", random_opt.n, "System qubits")->capture_default_str();
    random->add_option("--seed", random_opt.seed, "Seed")->capture_default_str();
    random->add_option("--range", random_opt.range, "Coefficients uniform in [-range, range]")
        ->capture_default_str();
    random->add_option("-o,--output", random_opt.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (spectrum->parsed()) {
            return cmd_qpe(spectrum_opt, false, out);
        }
        if (dos->parsed()) {
            return cmd_qpe(dos_opt, true, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_opt, out);
        }
        if (compile->parsed()) {
            return cmd_compile(sched_opt, out);
        }
        return cmd_random(random_opt, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NumericFailure &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const std::runtime_error &e) {
        // Eigensolver non-convergence and I/O failures.
        err << "failure: " << e.what() << "\n";
        return kNumericFailure;
    }
}

}  // namespace condham::cli
