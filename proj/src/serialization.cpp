// Copyright 2026 The gpcap Authors
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


#include "gpcap/serialization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gpcap/errors.hpp"

namespace gpcap {
namespace {

double unit_scale(bool bits) { return bits ? 1.0 / std::numbers::ln2 : 1.0; }

std::vector<double> number_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw InputError(std::string(what) + " must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

RateFunction rate_from_json(const Json& j) {
    if (j.is_number()) return RateFunction::constant(j.get<double>());
    if (j.is_object() && j.contains("times") && j.contains("values")) {
        return RateFunction::table(number_list(j.at("times"), "times"), number_list(j.at("values"), "values"));
    }
    throw InputError("a rate is a number or an object with \"times\" and \"values\"");
}

}  // namespace

EigenvalueVector eigenvalues_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.at("d").is_number_integer()) {
        throw InputError("channel JSON needs an integer \"d\"");
    }
    const int d = j.at("d").get<int>();
    const bool has_p = j.contains("probabilities");
    const bool has_l = j.contains("lambdas");
    if (has_p == has_l) throw InputError("channel JSON needs exactly one of \"probabilities\" and \"lambdas\"");
    if (has_l) return EigenvalueVector(d, number_list(j.at("lambdas"), "lambdas"));
    const GeneralizedPauliChannel c(d, ProbabilityVector(number_list(j.at("probabilities"), "probabilities")));
    return eigenvalues_from_probabilities(c);
}

Json to_json(const EigenvalueVector& e) {
    return {{"d", e.dimension()}, {"lambdas", std::vector<double>(e.values().begin(), e.values().end())}};
}

Json to_json(const GeneralizedPauliChannel& c) {
    const auto p = c.probabilities().entries();
    return {{"d", c.dimension()}, {"probabilities", std::vector<double>(p.begin(), p.end())}};
}

MubSet mub_set_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("MUB JSON must be a non-empty array of bases");
    std::vector<std::vector<Vector>> bases;
    int d = -1;
    for (const auto& basis : j) {
        if (!basis.is_array()) throw InputError("each basis must be an array of vectors");
        std::vector<Vector> vectors;
        for (const auto& vec : basis) {
            if (!vec.is_array()) throw InputError("each vector must be an array of [re, im] pairs");
            Vector v(static_cast<Eigen::Index>(vec.size()));
            for (std::size_t i = 0; i < vec.size(); ++i) {
                const auto& z = vec[i];
                if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                    throw InputError("vector entries must be [re, im] pairs");
                }
                v(static_cast<Eigen::Index>(i)) = Complex(z[0].get<double>(), z[1].get<double>());
            }
            if (d < 0) d = static_cast<int>(v.size());
            vectors.push_back(std::move(v));
        }
        bases.push_back(std::move(vectors));
    }
    return MubSet(d, std::move(bases));
}

Json to_json(const MubSet& m) {
    Json out = Json::array();
    for (int a = 1; a <= m.size(); ++a) {
        Json basis = Json::array();
        for (const auto& v : m.basis(a)) {
            Json vec = Json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back({v(i).real(), v(i).imag()});
            basis.push_back(std::move(vec));
        }
        out.push_back(std::move(basis));
    }
    return out;
}

RateSpec rate_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gamma") || !j.at("gamma").is_array() || j.at("gamma").size() != 3) {
        throw InputError("rate JSON needs \"gamma\": [r1, r2, r3]");
    }
    const auto& g = j.at("gamma");
    return {{rate_from_json(g[0]), rate_from_json(g[1]), rate_from_json(g[2])}};
}

Json to_json(const EigenvalueVector& e, const CapacityBounds& b, bool bits) {
    const double s = unit_scale(bits);
    Json out = to_json(e);
    out["chi_low"] = b.chi_low * s;
    out["chi_up"] = b.chi_up * s;
    out["coincide"] = b.coincide;
    out["capacity"] = b.exact_capacity ? Json(*b.exact_capacity * s) : Json(nullptr);
    out["alpha_star"] = b.maximizing_alpha;
    out["units"] = bits ? "bits" : "nats";
    return out;
}

Json to_json(const AdditivityReport& r, bool bits) {
    const double s = unit_scale(bits);
    return {{"chi_low", r.chi_low * s},
            {"chi_low_tensor", r.chi_low_tensor * s},
            {"lower_gap", r.lower_gap * s},
            {"chi_up", r.chi_up * s},
            {"chi_up_tensor", r.chi_up_tensor * s},
            {"upper_gap", r.upper_gap * s},
            {"units", bits ? "bits" : "nats"}};
}

}  // namespace gpcap
