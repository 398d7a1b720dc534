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


#include "document.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

namespace condham::cli {

using nlohmann::json;

namespace {

PauliAxis read_axis(const json &value, const char *field) {
    if (!value.is_string() || value.get<std::string>().size() != 1) {
        throw UsageError(std::string("field '") + field + "' must be one of x, y, z");
    }
    char c = value.get<std::string>()[0];
    if (c != 'x' && c != 'y' && c != 'z' && c != 'X' && c != 'Y' && c != 'Z') {
        throw UsageError(std::string("field '") + field + "' must be one of x, y, z");
    }
    return parse_axis(c);
}

size_t read_index(const json &entry, const char *field, size_t n) {
    if (!entry.contains(field) || !entry[field].is_number_unsigned()) {
        throw UsageError(std::string("missing or negative integer field '") + field + "'");
    }
    auto value = entry[field].get<uint64_t>();
    if (value >= n) {
        throw UsageError(std::string("field '") + field + "' = " + std::to_string(value) +
                         " out of range for n = " + std::to_string(n));
    }
    return static_cast<size_t>(value);
}

double read_value(const json &entry) {
    if (!entry.contains("value") || !entry["value"].is_number()) {
        throw UsageError("missing numeric field 'value'");
    }
    double v = entry["value"].get<double>();
    if (!std::isfinite(v)) {
        throw UsageError("coefficient values must be finite");
    }
    return v;
}

const json &read_array(const json &root, const char *field) {
    static const json empty = json::array();
    if (!root.contains(field)) {
        return empty;
    }
    if (!root[field].is_array()) {
        throw UsageError(std::string("field '") + field + "' must be an array");
    }
    return root[field];
}

std::string lower_axis(PauliAxis a) {
    return std::string(1, static_cast<char>(axis_char(a) - 'A' + 'a'));
}

}  // namespace

HamiltonianDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw UsageError("document must be a JSON object");
    }
    if (!root.contains("n") || !root["n"].is_number_unsigned()) {
        throw UsageError("document needs a positive integer 'n'");
    }
    auto n = root["n"].get<uint64_t>();
    if (n < 1 || n > kMaxSystemQubits) {
        throw UsageError("n must be in 1.." + std::to_string(kMaxSystemQubits));
    }
    HamiltonianDocument doc;
    doc.hamiltonian = PairHamiltonian(n);

    std::set<std::pair<size_t, PauliAxis>> seen_r;
    for (const auto &entry : read_array(root, "r")) {
        if (!entry.is_object()) {
            throw UsageError("entries of 'r' must be objects");
        }
        size_t j = read_index(entry, "j", n);
        if (!entry.contains("axis")) {
            throw UsageError("missing field 'axis'");
        }
        PauliAxis a = read_axis(entry["axis"], "axis");
        if (!seen_r.insert({j, a}).second) {
            throw UsageError("duplicate r entry for j=" + std::to_string(j) + " axis=" + lower_axis(a));
        }
        doc.hamiltonian.set_r(j, a, read_value(entry));
    }

    std::set<std::tuple<size_t, size_t, PauliAxis, PauliAxis>> seen_j;
    for (const auto &entry : read_array(root, "J")) {
        if (!entry.is_object()) {
            throw UsageError("entries of 'J' must be objects");
        }
        size_t j = read_index(entry, "j", n);
        size_t k = read_index(entry, "k", n);
        if (j >= k) {
            throw UsageError("J entries need j < k, got j=" + std::to_string(j) + " k=" + std::to_string(k));
        }
        if (!entry.contains("alpha") || !entry.contains("beta")) {
            throw UsageError("J entries need 'alpha' and 'beta'");
        }
        PauliAxis a = read_axis(entry["alpha"], "alpha");
        PauliAxis b = read_axis(entry["beta"], "beta");
        if (!seen_j.insert({j, k, a, b}).second) {
            throw UsageError("duplicate J entry for (" + std::to_string(j) + "," + std::to_string(k) + "," +
                             lower_axis(a) + "," + lower_axis(b) + ")");
        }
        doc.hamiltonian.set_J(j, k, a, b, read_value(entry));
    }

    if (root.contains("metadata")) {
        doc.metadata = root["metadata"];
    }
    return doc;
}

std::string serialize_document(const HamiltonianDocument &doc) {
    nlohmann::ordered_json root;
    root["n"] = doc.hamiltonian.num_qubits();
    auto r = nlohmann::ordered_json::array();
    auto couplings = nlohmann::ordered_json::array();
    doc.hamiltonian.for_each_term([&](const PauliString &p, double c) {
        if (c == 0.0) {
            return;
        }
        std::vector<std::pair<size_t, PauliAxis>> support;
        for (size_t q = 0; q < p.num_qubits(); q++) {
            if (p.axis(q) != PauliAxis::I) {
                support.emplace_back(q, p.axis(q));
            }
        }
        if (support.size() == 1) {
            r.push_back(nlohmann::ordered_json{{"j", support[0].first}, {"axis", lower_axis(support[0].second)}, {"value", c}});
        } else {
            couplings.push_back(nlohmann::ordered_json{{"j", support[0].first},
                                 {"k", support[1].first},
                                 {"alpha", lower_axis(support[0].second)},
                                 {"beta", lower_axis(support[1].second)},
                                 {"value", c}});
        }
    });
    root["r"] = std::move(r);
    root["J"] = std::move(couplings);
    root["metadata"] = doc.metadata;
    return root.dump(2) + "\n";
}

uint64_t fnv1a(std::string_view bytes) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace condham::cli
