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


#include "gpcap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "gpcap/capacity.hpp"
#include "gpcap/errors.hpp"
#include "gpcap/mub.hpp"
#include "gpcap/sampling.hpp"
#include "gpcap/serialization.hpp"
#include "gpcap/verify.hpp"

namespace gpcap::cli {
namespace {

struct ChannelOptions {
    int d = 0;
    std::string probs;
    std::string lambdas;
    std::string file;
};

void add_channel_options(CLI::App* app, ChannelOptions& o) {
    app->add_option("--d", o.d, "Dimension");
    auto* p = app->add_option("--probs", o.probs, "Comma-separated p_0,...,p_{d+1}");
    auto* l = app->add_option("--lambdas", o.lambdas, "Comma-separated lambda_1,...,lambda_{d+1}");
    auto* f = app->add_option("--channel", o.file, "JSON file with d and probabilities or lambdas");
    p->excludes(l)->excludes(f);
    l->excludes(f);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (item.empty() || used != item.size()) {
            throw InputError(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw InputError(std::string(what) + " list is empty");
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

EigenvalueVector load_channel(const ChannelOptions& o) {
    if (!o.file.empty()) return eigenvalues_from_json(read_json_file(o.file));
    if (o.probs.empty() && o.lambdas.empty()) {
        throw InputError("give a channel with --probs, --lambdas or --channel");
    }
    if (o.d == 0) throw InputError("--d is required with --probs or --lambdas");
    if (!o.lambdas.empty()) return EigenvalueVector(o.d, parse_list(o.lambdas, "lambda"));
    const GeneralizedPauliChannel c(o.d, ProbabilityVector(parse_list(o.probs, "probability")));
    return eigenvalues_from_probabilities(c);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double unit_scale(bool bits) { return bits ? 1.0 / std::numbers::ln2 : 1.0; }

int cmd_bounds(const ChannelOptions& o, bool bits, std::ostream& out) {
    const auto e = load_channel(o);
    out << to_json(e, capacity_bounds(e), bits).dump(2) << '\n';
    return kExitOk;
}

int cmd_cp_check(const ChannelOptions& o, std::ostream& out) {
    const auto e = load_channel(o);
    const int d = e.dimension();
    Json j = to_json(e);
    j["sum"] = e.sum();
    j["lower_limit"] = -1.0 / (d - 1);
    j["upper_limit"] = 1.0 + d * e.min();
    j["completely_positive"] = is_completely_positive(e);
    j["probabilities"] = signed_probabilities(e);
    if (d == 4 || is_prime(d)) {
        const auto values = hermitian_eigenvalues(choi_matrix(e, standard_mubs(d)));
        j["choi_min_eigenvalue"] = values.back();
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_zeta(const ChannelOptions& o, int copies, bool bits, std::ostream& out) {
    const auto e = load_channel(o);
    if (copies < 1) throw InputError("--copies must be at least 1");
    const double s = unit_scale(bits);
    Json j = to_json(e);
    j["copies"] = copies;
    j["units"] = bits ? "bits" : "nats";
    if (copies == 1) {
        const auto up = holevo_upper_bound(e);
        const auto& c = up.components;
        j["zeta"] = c.zeta;
        j["chi_up"] = up.value * s;
        j["region"] = c.region;
        j["order"] = c.order;
        j["components"] = {{"after", c.after}, {"before", c.before}, {"straddling", c.straddling}, {"paired", c.paired}};
    } else {
        const double total = std::pow(static_cast<double>(e.dimension()), copies);
        if (total > 64.0) throw InputError("d^copies is limited to 64");
        const auto ch = probabilities_from_eigenvalues(e);
        WeylChannel w = gpc_to_weyl(ch);
        const WeylChannel single = w;
        for (int i = 1; i < copies; ++i) w = tensor(w, single);
        const auto z = zeta_vector(w.probabilities().entries(), w.dimension());
        j["zeta"] = std::vector<double>(z.entries().begin(), z.entries().end());
        j["chi_up"] = holevo_upper_bound_weyl(w) * s;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_dynamics(const std::string& gamma, const std::string& rates_file, double t_max, int steps,
                 std::ostream& out) {
    RateSpec spec = RateSpec::constant(0.0, 0.0, 0.0);
    if (!rates_file.empty()) {
        spec = rate_spec_from_json(read_json_file(rates_file));
    } else if (!gamma.empty()) {
        const auto g = parse_list(gamma, "rate");
        if (g.size() != 3) throw InputError("--gamma needs three rates");
        spec = RateSpec::constant(g[0], g[1], g[2]);
    } else {
        throw InputError("give rates with --gamma or --rates");
    }
    const auto traj = capacity_trajectory(eigenvalue_trajectory(spec, t_max, steps));
    std::ostringstream os;
    os << "t,lambda1,lambda2,lambda3,capacity_nats,p_divisible_so_far\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& l = traj.lambdas[i];
        os << fmt12(traj.times[i]) << ',' << fmt12(l[0]) << ',' << fmt12(l[1]) << ',' << fmt12(l[2]) << ','
           << fmt12(traj.capacity[i]) << ',' << (traj.p_divisible_so_far[i] ? "true" : "false") << '\n';
    }
    out << os.str();
    return kExitOk;
}

// The documented bounds invocation on the sample qubit channel, run in-process.
CheckResult bounds_command_check() {
    std::ostringstream out, err;
    const ChannelOptions o{2, "", "0.5,0,-0.5", ""};
    cmd_bounds(o, false, out);
    const Json j = Json::parse(out.str());
    const double want = 0.75 * std::log(3.0) - std::log(2.0);
    const bool ok = std::abs(j.at("chi_low").get<double>() - want) <= 1e-12 &&
                    std::abs(j.at("chi_up").get<double>() - want) <= 1e-12 &&
                    std::abs(j.at("capacity").get<double>() - want) <= 1e-12;
    return {"cli.bounds_sample_channel", ok, "capacity " + fmt12(j.at("capacity").get<double>())};
}

int cmd_verify(const std::string& suite, const ChannelOptions& o, bool json, const SearchConfig& cfg,
               std::ostream& out) {
    const bool channel_mode = !o.file.empty() || !o.probs.empty() || !o.lambdas.empty();
    if (channel_mode == !suite.empty()) throw InputError("verify needs either --suite or a channel");
    if (channel_mode) {
        const auto rep = verify_channel(load_channel(o), cfg);
        Json j = rep.values;
        j["checks"] = to_json(rep.checks).at("checks");
        j["passed"] = rep.checks.all_passed();
        out << j.dump(2) << '\n';
        return rep.checks.all_passed() ? kExitOk : kExitInternal;
    }
    const bool reference = suite == "paper" || suite == "reference";
    SuiteReport rep = run_suite(reference ? "reference" : suite);
    if (reference) rep.checks.push_back(bounds_command_check());
    if (json) {
        out << to_json(rep).dump(2) << '\n';
    } else {
        out << format_table(rep);
    }
    return rep.all_passed() ? kExitOk : kExitInternal;
}

int cmd_random_sweep(int d, int count, std::optional<std::uint64_t> seed, std::ostream& out) {
    if (d != 2 && d != 3 && d != 4 && d != 5) throw UnsupportedDimension("random-sweep supports d in {2, 3, 4, 5}");
    if (count < 1) throw InputError("--count must be at least 1");
    std::uint64_t s = 0;
    if (seed) {
        s = *seed;
    } else if (const char* env = std::getenv("GPC_SEED")) {
        char* end = nullptr;
        s = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw InputError("GPC_SEED must be a non-negative integer");
    }
    Rng rng(s);
    std::ostringstream os;
    for (int a = 1; a <= d + 1; ++a) os << "lambda" << a << ',';
    os << "chi_low,chi_up,gap,coincide\n";
    for (int i = 0; i < count; ++i) {
        const auto e = random_cp_eigenvalues(d, rng);
        const double low = holevo_lower_bound(e).value;
        const double up = holevo_upper_bound(e).value;
        for (double l : e.values()) os << fmt12(l) << ',';
        os << fmt12(low) << ',' << fmt12(up) << ',' << fmt12(up - low) << ','
           << (std::abs(up - low) <= kCoincidenceTol ? "true" : "false") << '\n';
    }
    out << os.str();
    return kExitOk;
}

int cmd_mubs(int d, std::ostream& out) {
    const auto m = standard_mubs(d);
    const Json j{{"d", d}, {"deviation", mub_deviation(m)}, {"bases", to_json(m)}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity bounds for generalized Pauli channels", "gpcap"};
    app.require_subcommand(1);

    ChannelOptions channel;
    bool bits = false;
    int copies = 1;
    std::string gamma, rates_file;
    double t_max = 5.0;
    int steps = 101;
    std::string suite;
    bool json = false;
    SearchConfig cfg;
    int sweep_d = 2, sweep_count = 100;
    std::optional<std::uint64_t> seed;
    int mub_d = 2;

    auto* bounds = app.add_subcommand("bounds", "Lower and upper capacity bounds as JSON");
    add_channel_options(bounds, channel);
    bounds->add_flag("--bits", bits, "Report entropies in bits");

    auto* cp = app.add_subcommand("cp-check", "Complete-positivity report as JSON");
    add_channel_options(cp, channel);

    auto* zeta = app.add_subcommand("zeta", "Grouped Kraus weights and the resulting upper bound");
    add_channel_options(zeta, channel);
    zeta->add_option("--copies", copies, "Number of tensor copies");
    zeta->add_flag("--bits", bits, "Report entropies in bits");

    auto* dyn = app.add_subcommand("dynamics", "Qubit Pauli trajectory as CSV");
    dyn->add_option("--gamma", gamma, "Constant rates g1,g2,g3");
    dyn->add_option("--rates", rates_file, "JSON rate specification")->excludes(dyn->get_option("--gamma"));
    dyn->add_option("--t-max", t_max, "Final time");
    dyn->add_option("--steps", steps, "Number of grid points");

    auto* ver = app.add_subcommand("verify", "Run a check suite or cross-check one channel");
    ver->add_option("--suite", suite, "reference (alias: paper) or properties");
    add_channel_options(ver, channel);
    ver->add_flag("--json", json, "Suite report as JSON");
    ver->add_option("--resolution", cfg.resolution, "Oracle grid resolution");
    ver->add_option("--samples", cfg.samples, "Oracle random starts (d >= 3)");
    ver->add_option("--seed", cfg.seed, "Oracle seed");

    auto* sweep = app.add_subcommand("random-sweep", "Bounds on random CP channels as CSV");
    sweep->add_option("--d", sweep_d, "Dimension (2, 3, 4 or 5)");
    sweep->add_option("--count", sweep_count, "Number of channels");
    sweep->add_option("--seed", seed, "Seed (default: GPC_SEED or 0)");

    auto* mubs = app.add_subcommand("mubs", "The standard MUB set as JSON");
    mubs->add_option("--d", mub_d, "Dimension (prime or 4)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kExitInput;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(channel, bits, out);
        if (cp->parsed()) return cmd_cp_check(channel, out);
        if (zeta->parsed()) return cmd_zeta(channel, copies, bits, out);
        if (dyn->parsed()) return cmd_dynamics(gamma, rates_file, t_max, steps, out);
        if (ver->parsed()) return cmd_verify(suite, channel, json, cfg, out);
        if (sweep->parsed()) return cmd_random_sweep(sweep_d, sweep_count, seed, out);
        if (mubs->parsed()) return cmd_mubs(mub_d, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << app.help();
    return kExitInput;
}

}  // namespace gpcap::cli
