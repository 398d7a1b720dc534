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

#include "condham/pulse.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace condham {

PulseSchedule::PulseSchedule(size_t num_qubits, bool has_ancilla) : n_(num_qubits), has_ancilla_(has_ancilla) {
    if (num_qubits < 1 || num_qubits > kMaxSystemQubits) {
        throw std::invalid_argument("PulseSchedule: unsupported qubit count");
    }
}

void PulseSchedule::append(Segment segment) {
    if (!(segment.duration >= 0) || !std::isfinite(segment.duration)) {
        throw std::invalid_argument("segment duration must be finite and non-negative");
    }
    if (segment.frame.num_qubits() != n_) {
        throw std::invalid_argument("segment frame has " + std::to_string(segment.frame.num_qubits()) +
                                    " qubits, schedule has " + std::to_string(n_));
    }
    if (const auto *eng = std::get_if<EngineeredCoupling>(&segment.generator)) {
        if (!has_ancilla_) {
            throw std::invalid_argument("engineered coupling requires an ancilla");
        }
        if (eng->axis == PauliAxis::I || eng->qubit >= n_ || (eng->sign != 1 && eng->sign != -1)) {
            throw std::invalid_argument("malformed engineered coupling");
        }
    }
    segments_.push_back(std::move(segment));
}

double PulseSchedule::total_time() const {
    double total = 0;
    for (const auto &s : segments_) {
        total += s.duration;
    }
    return total;
}

bool PulseSchedule::system_only() const {
    for (const auto &s : segments_) {
        if (!std::holds_alternative<SystemGenerator>(s.generator)) {
            return false;
        }
    }
    return true;
}

namespace {

// GF(4) as polynomials over GF(2) modulo x^2 + x + 1: 0, 1, w = 0b10, w^2 = 0b11.
uint8_t gf4_mul(uint8_t a, uint8_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    constexpr uint8_t log_table[4] = {0, 0, 1, 2};
    constexpr uint8_t exp_table[3] = {1, 2, 3};
    return exp_table[(log_table[a] + log_table[b]) % 3];
}

PauliAxis gf4_symbol(uint8_t v) {
    constexpr PauliAxis table[4] = {PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
    return table[v];
}

}  // namespace

bool OrthogonalArray::is_strength2_balanced() const {
    size_t d = length();
    for (const auto &row : rows) {
        if (row.size() != d) {
            return false;
        }
    }
    if (rows.size() < 2) {
        return true;
    }
    if (d % 16 != 0) {
        return false;
    }
    for (size_t a = 0; a < rows.size(); a++) {
        for (size_t b = a + 1; b < rows.size(); b++) {
            size_t counts[4][4] = {};
            for (size_t r = 0; r < d; r++) {
                counts[static_cast<int>(rows[a][r])][static_cast<int>(rows[b][r])]++;
            }
            for (auto &line : counts) {
                for (size_t c : line) {
                    if (c != d / 16) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

OrthogonalArray build_orthogonal_array(size_t q) {
    if (q == 0 || q > 85) {
        throw std::invalid_argument("orthogonal arrays are built for 1..85 qubits, got " + std::to_string(q));
    }
    size_t s = 1;
    while ((((size_t{1} << (2 * s)) - 1) / 3) < q) {
        s++;
    }
    size_t columns = size_t{1} << (2 * s);

    OrthogonalArray oa;
    for (size_t functional = 1; functional < columns && oa.rows.size() < q; functional++) {
        // Leading (most significant) nonzero digit must be 1.
        uint8_t leading = 0;
        for (size_t i = s; i-- > 0;) {
            leading = (functional >> (2 * i)) & 3;
            if (leading != 0) {
                break;
            }
        }
        if (leading != 1) {
            continue;
        }
        std::vector<PauliAxis> row(columns);
        for (size_t v = 0; v < columns; v++) {
            uint8_t value = 0;
            for (size_t i = 0; i < s; i++) {
                value ^= gf4_mul((functional >> (2 * i)) & 3, (v >> (2 * i)) & 3);
            }
            row[v] = gf4_symbol(value);
        }
        oa.rows.push_back(std::move(row));
    }
    return oa;
}

PulseSchedule decoupling_schedule(size_t num_qubits, const std::set<size_t> &decoupled, double total_time) {
    PulseSchedule schedule(num_qubits, false);
    for (size_t q : decoupled) {
        if (q >= num_qubits) {
            throw std::invalid_argument("decoupling set names qubit " + std::to_string(q) + " outside the register");
        }
    }
    if (decoupled.empty()) {
        schedule.append({PauliString(num_qubits), total_time, SystemGenerator{}});
        return schedule;
    }
    OrthogonalArray oa = build_orthogonal_array(decoupled.size());
    size_t d = oa.length();
    for (size_t r = 0; r < d; r++) {
        PauliString frame(num_qubits);
        size_t row = 0;
        for (size_t q : decoupled) {
            frame.with(q, oa.rows[row++][r]);
        }
        schedule.append({std::move(frame), total_time / static_cast<double>(d), SystemGenerator{}});
    }
    return schedule;
}

PulseSchedule four_frame_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                  double total_time) {
    if (j == k) {
        throw std::invalid_argument("pair selection needs two distinct qubits");
    }
    PulseSchedule schedule(num_qubits, false);
    double quarter = total_time / 4;
    schedule.append({PauliString(num_qubits), quarter, SystemGenerator{}});
    schedule.append({PauliString::single(num_qubits, j, alpha), quarter, SystemGenerator{}});
    schedule.append({PauliString::single(num_qubits, k, beta), quarter, SystemGenerator{}});
    schedule.append({PauliString::pair(num_qubits, j, alpha, k, beta), quarter, SystemGenerator{}});
    return schedule;
}

PulseSchedule isolate_pair_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                    double total_time) {
    if (j == k || j >= num_qubits || k >= num_qubits) {
        throw std::invalid_argument("isolate_pair_schedule: invalid qubit pair");
    }
    std::set<size_t> rest;
    for (size_t q = 0; q < num_qubits; q++) {
        if (q != j && q != k) {
            rest.insert(q);
        }
    }
    return nest(decoupling_schedule(num_qubits, rest, total_time),
                four_frame_schedule(num_qubits, j, k, alpha, beta, total_time));
}

PulseSchedule cancel_one_qubit_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                        double total_time) {
    PulseSchedule schedule(num_qubits, false);
    schedule.append({PauliString(num_qubits), total_time / 2, SystemGenerator{}});
    schedule.append({PauliString::pair(num_qubits, j, successor(alpha), k, successor(beta)), total_time / 2,
                     SystemGenerator{}});
    return schedule;
}

double rescale_flip_fraction(size_t num_qubits, WeightConvention convention) {
    double target = one_qubit_scale(TermStage::Rescaled, num_qubits, convention);
    if (target > 1) {
        throw std::invalid_argument("single-qubit share " + std::to_string(target) +
                                    " is not reachable by sign averaging at n = " + std::to_string(num_qubits));
    }
    // Average sign (1 - f) - f must equal the target share.
    return (1 - target) / 2;
}

PulseSchedule rescale_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                               double delta, WeightConvention convention) {
    double f = rescale_flip_fraction(num_qubits, convention);
    PulseSchedule schedule(num_qubits, false);
    // The flip frame must anticommute with both 1-qubit terms, so it uses the
    // successor axes; sigma_a^j sigma_b^k itself would commute with them.
    schedule.append(
        {PauliString::pair(num_qubits, j, successor(alpha), k, successor(beta)), f * delta, SystemGenerator{}});
    schedule.append({PauliString(num_qubits), (1 - f) * delta, SystemGenerator{}});
    return schedule;
}

PulseSchedule inversion_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                 double total_time, int p) {
    if (p < 1) {
        throw std::invalid_argument("inversion needs p >= 1, got " + std::to_string(p));
    }
    const PauliString frames[3] = {
        PauliString::single(num_qubits, j, successor(alpha)),
        PauliString::single(num_qubits, k, successor(beta)),
        PauliString::pair(num_qubits, j, successor(alpha), k, successor(beta)),
    };
    PulseSchedule schedule(num_qubits, false);
    double slice = total_time / p;
    for (int l = 0; l < 3 * p; l++) {
        schedule.append({frames[l % 3], slice, SystemGenerator{}});
    }
    return schedule;
}

PulseSchedule nest(const PulseSchedule &outer, const PulseSchedule &inner) {
    if (outer.num_qubits() != inner.num_qubits()) {
        throw std::invalid_argument("nest: qubit count mismatch");
    }
    if (!outer.system_only() || !inner.system_only()) {
        throw std::invalid_argument("nest: only system-generator schedules can be nested");
    }
    double inner_total = inner.total_time();
    if (inner_total <= 0) {
        throw std::invalid_argument("nest: inner schedule has no duration");
    }
    PulseSchedule result(outer.num_qubits(), outer.has_ancilla() || inner.has_ancilla());
    for (const auto &o : outer.segments()) {
        for (const auto &i : inner.segments()) {
            result.append({o.frame.times_ignoring_phase(i.frame), o.duration * (i.duration / inner_total),
                           SystemGenerator{}});
        }
    }
    return result;
}

PairHamiltonian symbolic_average(const PulseSchedule &schedule, const PairHamiltonian &h) {
    if (!schedule.system_only()) {
        throw std::invalid_argument("symbolic_average: schedule contains non-system generators");
    }
    if (schedule.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("symbolic_average: qubit count mismatch");
    }
    double total = schedule.total_time();
    if (total <= 0) {
        throw std::invalid_argument("symbolic_average: schedule has zero total time");
    }
    // Net sign per (duration class, coefficient), accumulated as integers.
    struct DurationClass {
        long count = 0;
        std::vector<long> net;
    };
    std::map<double, DurationClass> classes;
    size_t num_terms = 0;
    h.for_each_term([&](const PauliString &, double) { num_terms++; });
    for (const auto &seg : schedule.segments()) {
        auto &cls = classes[seg.duration];
        cls.net.resize(num_terms);
        cls.count++;
        size_t i = 0;
        h.for_each_term([&](const PauliString &p, double) { cls.net[i++] += p.commutes_with(seg.frame) ? 1 : -1; });
    }
    PairHamiltonian result = h;
    size_t i = 0;
    result.transform_terms([&](const PauliString &, double coeff) {
        bool all_plus = true;
        bool all_minus = true;
        double weight = 0;
        for (const auto &[duration, cls] : classes) {
            long net = cls.net[i];
            all_plus = all_plus && (net == cls.count || duration == 0);
            all_minus = all_minus && (net == -cls.count || duration == 0);
            if (net != 0) {
                weight += static_cast<double>(net) * duration;
            }
        }
        i++;
        if (all_plus) {
            return coeff;
        }
        if (all_minus) {
            return -coeff;
        }
        return weight == 0 ? 0.0 : coeff * (weight / total);
    });
    return result;
}

namespace {

// Conjugation by a Pauli string v: (v U v)(r, c) = ph(r^m) U(r^m, c^m) ph(c),
// where v|x> = ph(x)|x ^ m>.
struct PauliAction {
    size_t mask = 0;
    std::vector<Complex> phase;

    explicit PauliAction(const DenseOperator &v) : phase(v.dim()) {
        for (size_t r = 0; r < v.dim(); r++) {
            if (v(r, 0) != Complex{}) {
                mask = r;
                break;
            }
        }
        for (size_t c = 0; c < v.dim(); c++) {
            phase[c] = v(c ^ mask, c);
        }
    }

    DenseOperator conjugate(const DenseOperator &u) const {
        size_t n = u.dim();
        DenseOperator out(n);
        for (size_t r = 0; r < n; r++) {
            Complex pr = phase[r ^ mask];
            for (size_t c = 0; c < n; c++) {
                out(r, c) = pr * u(r ^ mask, c ^ mask) * phase[c];
            }
        }
        return out;
    }
};

class GeneratorCache {
   public:
    GeneratorCache(const PairHamiltonian &h, bool ancilla) : h_(h), ancilla_(ancilla) {
    }

    const DenseOperator &evolution(const Generator &gen, double t) {
        auto key = std::make_pair(generator_key(gen), t);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        const EigenDecomposition &eig = decomposition(gen);
        return cache_.emplace(key, expm_i(eig, t)).first->second;
    }

   private:
    static std::string generator_key(const Generator &gen) {
        if (std::holds_alternative<SystemGenerator>(gen)) {
            return "S";
        }
        if (std::holds_alternative<IdleGenerator>(gen)) {
            return "I";
        }
        const auto &e = std::get<EngineeredCoupling>(gen);
        return "E" + std::to_string(e.qubit) + axis_char(e.axis) + (e.sign > 0 ? "+" : "-");
    }

    const EigenDecomposition &decomposition(const Generator &gen) {
        std::string key = generator_key(gen);
        auto it = eig_.find(key);
        if (it != eig_.end()) {
            return it->second;
        }
        size_t n = h_.num_qubits();
        size_t total = n + (ancilla_ ? 1 : 0);
        DenseOperator g(size_t{1} << total);
        if (std::holds_alternative<SystemGenerator>(gen)) {
            g = to_dense(h_);
            if (ancilla_) {
                g = kron(g, DenseOperator::identity(2));
            }
        } else if (const auto *e = std::get_if<EngineeredCoupling>(&gen)) {
            PauliString p = PauliString::pair(total, e->qubit, e->axis, n, PauliAxis::Z);
            g = Complex(e->sign) * embed(p, total);
        }
        return eig_.emplace(key, hermitian_eig(g)).first->second;
    }

    const PairHamiltonian &h_;
    bool ancilla_;
    std::map<std::string, EigenDecomposition> eig_;
    std::map<std::pair<std::string, double>, DenseOperator> cache_;
};

}  // namespace

DenseOperator simulate_schedule(const PulseSchedule &schedule, const PairHamiltonian &h, int cycles) {
    if (cycles < 1) {
        throw std::invalid_argument("simulate_schedule: cycles must be >= 1");
    }
    if (schedule.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("simulate_schedule: schedule and Hamiltonian qubit counts differ");
    }
    size_t n = h.num_qubits();
    size_t total_qubits = n + (schedule.has_ancilla() ? 1 : 0);
    size_t dim = size_t{1} << total_qubits;
    GeneratorCache cache(h, schedule.has_ancilla());

    std::vector<DenseOperator> segment_unitaries;
    std::map<PauliString, PauliAction> actions;
    for (const auto &seg : schedule.segments()) {
        const DenseOperator &u = cache.evolution(seg.generator, seg.duration / cycles);
        if (seg.frame.is_identity()) {
            segment_unitaries.push_back(u);
            continue;
        }
        auto it = actions.find(seg.frame);
        if (it == actions.end()) {
            PauliString widened(total_qubits);
            for (size_t q = 0; q < n; q++) {
                widened.with(q, seg.frame.axis(q));
            }
            it = actions.emplace(seg.frame, PauliAction(embed(widened, total_qubits))).first;
        }
        segment_unitaries.push_back(it->second.conjugate(u));
    }

    DenseOperator cycle = DenseOperator::identity(dim);
    for (const auto &u : segment_unitaries) {
        cycle = u * cycle;
    }
    DenseOperator result = DenseOperator::identity(dim);
    for (int c = 0; c < cycles; c++) {
        result = cycle * result;
    }
    return result;
}

namespace {

std::string format_generator(const Generator &gen) {
    if (std::holds_alternative<SystemGenerator>(gen)) {
        return "SYS";
    }
    if (std::holds_alternative<IdleGenerator>(gen)) {
        return "IDLE";
    }
    const auto &e = std::get<EngineeredCoupling>(gen);
    std::string out = "ENG";
    out += e.sign > 0 ? '+' : '-';
    out += 'j' + std::to_string(e.qubit) + ':';
    out += static_cast<char>(std::tolower(axis_char(e.axis)));
    return out;
}

Generator parse_generator(std::string_view token) {
    if (token == "SYS") {
        return SystemGenerator{};
    }
    if (token == "IDLE") {
        return IdleGenerator{};
    }
    auto bad = [&]() { return std::invalid_argument("malformed generator '" + std::string(token) + "'"); };
    if (token.size() < 8 || token.substr(0, 3) != "ENG" || token[4] != 'j') {
        throw bad();
    }
    EngineeredCoupling e;
    if (token[3] == '+') {
        e.sign = 1;
    } else if (token[3] == '-') {
        e.sign = -1;
    } else {
        throw bad();
    }
    size_t colon = token.find(':');
    if (colon == std::string_view::npos || colon + 2 != token.size()) {
        throw bad();
    }
    auto [ptr, ec] = std::from_chars(token.data() + 5, token.data() + colon, e.qubit);
    if (ec != std::errc() || ptr != token.data() + colon) {
        throw bad();
    }
    e.axis = parse_axis(token[colon + 1]);
    if (e.axis == PauliAxis::I) {
        throw bad();
    }
    return e;
}

}  // namespace

std::string format_schedule(const PulseSchedule &schedule) {
    std::string out = "# schedule n=" + std::to_string(schedule.num_qubits()) +
                      " ancilla=" + (schedule.has_ancilla() ? "1" : "0") + "\n";
    char buf[64];
    for (const auto &seg : schedule.segments()) {
        std::snprintf(buf, sizeof(buf), "%.17g", seg.duration);
        out += buf;
        out += ' ';
        out += seg.frame.str();
        out += ' ';
        out += format_generator(seg.generator);
        out += '\n';
    }
    return out;
}

PulseSchedule parse_schedule(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t n = 0;
    bool ancilla = false;
    bool have_header = false;
    std::vector<Segment> segments;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            unsigned nq = 0;
            unsigned anc = 0;
            if (std::sscanf(line.c_str(), "# schedule n=%u ancilla=%u", &nq, &anc) == 2) {
                n = nq;
                ancilla = anc != 0;
                have_header = true;
            }
            continue;
        }
        if (!have_header) {
            throw std::invalid_argument("schedule text lacks the '# schedule n=.. ancilla=..' header");
        }
        std::istringstream fields(line);
        std::string duration_text, frame_text, generator_text, extra;
        if (!(fields >> duration_text >> frame_text >> generator_text) || (fields >> extra)) {
            throw std::invalid_argument("schedule line " + std::to_string(line_no) + ": expected 3 fields");
        }
        char *end = nullptr;
        double duration = std::strtod(duration_text.c_str(), &end);
        if (end != duration_text.c_str() + duration_text.size()) {
            throw std::invalid_argument("schedule line " + std::to_string(line_no) + ": bad duration");
        }
        segments.push_back({PauliString::parse(frame_text, n), duration, parse_generator(generator_text)});
    }
    if (!have_header) {
        throw std::invalid_argument("schedule text lacks the '# schedule n=.. ancilla=..' header");
    }
    PulseSchedule schedule(n, ancilla);
    for (auto &s : segments) {
        schedule.append(std::move(s));
    }
    return schedule;
}

}  // namespace condham
