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


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gpcap/cli.hpp"
#include "gpcap/serialization.hpp"

using namespace gpcap;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const double kSingle = 0.75 * std::log(3.0) - std::log(2.0);

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("bounds on the sample qubit channel") {
    const auto r = run({"bounds", "--d", "2", "--lambdas", "0.5,0,-0.5"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(std::abs(j["chi_low"].get<double>() - kSingle) < 1e-12);
    CHECK(std::abs(j["chi_up"].get<double>() - kSingle) < 1e-12);
    CHECK(std::abs(j["capacity"].get<double>() - kSingle) < 1e-12);
    CHECK(j["coincide"].get<bool>());
    CHECK(j["units"] == "nats");
    CHECK(j["d"] == 2);
    CHECK(j.contains("alpha_star"));

    const auto p = run({"bounds", "--d", "2", "--probs", "0.25,0.5,0.25,0"});
    REQUIRE(p.code == 0);
    CHECK(std::abs(Json::parse(p.out)["capacity"].get<double>() - kSingle) < 1e-12);
}

TEST_CASE("identity qubit channel has capacity ln 2") {
    const auto r = run({"bounds", "--d", "2", "--lambdas", "1,1,1"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["capacity"].get<double>() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("--bits rescales only the entropic fields") {
    const auto nats = Json::parse(run({"bounds", "--d", "3", "--lambdas", "0.5,0.3,0.1,0.1"}).out);
    const auto bits = Json::parse(run({"bounds", "--d", "3", "--lambdas", "0.5,0.3,0.1,0.1", "--bits"}).out);
    CHECK(bits["units"] == "bits");
    CHECK(bits["chi_low"].get<double>() == doctest::Approx(nats["chi_low"].get<double>() / std::log(2.0)));
    CHECK(bits["chi_up"].get<double>() == doctest::Approx(nats["chi_up"].get<double>() / std::log(2.0)));
    CHECK(bits["capacity"].is_null());
    CHECK(bits["lambdas"] == nats["lambdas"]);
    CHECK(bits["alpha_star"] == nats["alpha_star"]);
    CHECK(bits["coincide"] == nats["coincide"]);
}

TEST_CASE("bounds JSON round-trips through the channel reader") {
    const auto out = Json::parse(run({"bounds", "--d", "5", "--lambdas", "0.1,0.2,-0.05,0.3,0,0.15"}).out);
    const auto e = eigenvalues_from_json(out);
    const std::vector<double> want{0.1, 0.2, -0.05, 0.3, 0, 0.15};
    REQUIRE(e.dimension() == 5);
    for (int a = 1; a <= 6; ++a) CHECK(std::abs(e(a) - want[a - 1]) <= 1e-12);
}

TEST_CASE("invalid input exits with 2") {
    CHECK(run({"bounds", "--d", "2", "--lambdas", "1,1,-1"}).code == 2);  // not CP
    CHECK(run({"bounds", "--d", "6", "--lambdas", "0,0,0,0,0,0,0"}).code == 2);
    CHECK(run({"bounds", "--d", "2", "--lambdas", "0,0"}).code == 2);
    CHECK(run({"bounds", "--d", "2", "--lambdas", "a,b,c"}).code == 2);
    CHECK(run({"bounds", "--d", "2", "--lambdas", "0,0,0", "--probs", "1,0,0,0"}).code == 2);
    CHECK(run({"bounds", "--d", "2"}).code == 2);
    CHECK(run({"bounds", "--channel", "/nonexistent.json"}).code == 2);
    CHECK(run({"bounds", "--frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    const auto unknown = run({"nonsense"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cp-check reports all three views") {
    const auto ok = Json::parse(run({"cp-check", "--d", "2", "--lambdas", "0.5,0,-0.5"}).out);
    CHECK(ok["completely_positive"].get<bool>());
    CHECK(ok["choi_min_eigenvalue"].get<double>() >= -1e-9);
    const auto bad = run({"cp-check", "--d", "2", "--lambdas", "1,1,-1"});
    CHECK(bad.code == 0);
    const auto j = Json::parse(bad.out);
    CHECK_FALSE(j["completely_positive"].get<bool>());
    CHECK(j["choi_min_eigenvalue"].get<double>() < -1e-9);
}

TEST_CASE("zeta subcommand") {
    const auto one = Json::parse(run({"zeta", "--d", "2", "--lambdas", "0.5,0,-0.5"}).out);
    CHECK(one["zeta"][0].get<double>() == doctest::Approx(0.75));
    CHECK(one["region"] == 1);
    const auto two = Json::parse(run({"zeta", "--d", "2", "--lambdas", "0.5,0,-0.5", "--copies", "2"}).out);
    CHECK(two["zeta"][0].get<double>() == doctest::Approx(10.0 / 16));
    CHECK(two["zeta"][1].get<double>() == doctest::Approx(5.0 / 16));
    CHECK(two["chi_up"].get<double>() ==
          doctest::Approx(15.0 / 16.0 * std::log(5.0) - 11.0 / 8.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(run({"zeta", "--d", "5", "--lambdas", "0,0,0,0,0,0", "--copies", "3"}).code == 2);
}

TEST_CASE("dynamics CSV") {
    const auto r = run({"dynamics", "--gamma", "0.5,0.5,0.5", "--t-max", "1", "--steps", "3"});
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,lambda1,lambda2,lambda3,capacity_nats,p_divisible_so_far");
    CHECK(lines[1] == "0,1,1,1,0.69314718056,true");
    CHECK(lines[2].rfind("0.5,0.606530659713,", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);

    const auto w = run({"dynamics", "--rates", GPCAP_DATA_DIR "/witness_rates.json", "--t-max", "3", "--steps", "31"});
    REQUIRE(w.code == 0);
    CHECK(split_lines(w.out).back().find("false") != std::string::npos);

    const auto bad = run({"dynamics", "--gamma", "-1,0,0", "--t-max", "1", "--steps", "11"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("t = 0.1") != std::string::npos);
    CHECK(run({"dynamics", "--gamma", "1,1"}).code == 2);
}

TEST_CASE("random-sweep is deterministic and ordered") {
    const auto a = run({"random-sweep", "--d", "3", "--count", "50", "--seed", "7"});
    const auto b = run({"random-sweep", "--d", "3", "--count", "50", "--seed", "7"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"random-sweep", "--d", "3", "--count", "50", "--seed", "8"}).out);

    const auto lines = split_lines(a.out);
    REQUIRE(lines.size() == 51);
    CHECK(lines[0] == "lambda1,lambda2,lambda3,lambda4,chi_low,chi_up,gap,coincide");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::stringstream ss(lines[i]);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 8);
        CHECK(std::stod(cells[6]) >= -1e-9);
    }

    const auto q = split_lines(run({"random-sweep", "--d", "2", "--count", "200", "--seed", "1"}).out);
    for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i].substr(q[i].rfind(',') + 1) == "true");

    CHECK(run({"random-sweep", "--d", "7", "--count", "5"}).code == 2);
    CHECK(run({"random-sweep", "--d", "2", "--count", "0"}).code == 2);
}

TEST_CASE("GPC_SEED supplies the default seed") {
    ::setenv("GPC_SEED", "7", 1);
    const auto env = run({"random-sweep", "--d", "2", "--count", "5"});
    ::unsetenv("GPC_SEED");
    CHECK(env.out == run({"random-sweep", "--d", "2", "--count", "5", "--seed", "7"}).out);
}

TEST_CASE("verify subcommand") {
    const auto reference = run({"verify", "--suite", "paper"});
    CHECK(reference.code == 0);
    CHECK(reference.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "properties"}).code == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"verify"}).code == 2);

    const auto json = Json::parse(run({"verify", "--suite", "reference", "--json"}).out);
    CHECK(json["passed"].get<bool>());

    const auto channel = run({"verify", "--d", "3", "--lambdas", "0.5,0.3,0.1,0.1", "--samples", "32"});
    CHECK(channel.code == 0);
    const auto j = Json::parse(channel.out);
    CHECK(j["passed"].get<bool>());
    CHECK(j.contains("chi_estimate"));
    CHECK(j.contains("zeta_p_form"));
}

TEST_CASE("mubs subcommand") {
    const auto r = run({"mubs", "--d", "3"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["deviation"].get<double>() < 1e-9);
    CHECK(mub_deviation(mub_set_from_json(j["bases"])) < 1e-9);
    CHECK(run({"mubs", "--d", "6"}).code == 2);
}
