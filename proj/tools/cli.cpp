// Copyright 2026 The relspin Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "json.hpp"
#include "relspin/electrodynamics.hpp"
#include "relspin/error.hpp"
#include "relspin/experiments.hpp"
#include "relspin/minkowski.hpp"
#include "relspin/spin_measurement.hpp"
#include "relspin/wigner.hpp"

namespace relspin::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, std::size_t count, const std::string& flag) {
    std::vector<double> values;
    const char* p = text.data();
    const char* end = p + text.size();
    while (true) {
        while (p < end && *p == ' ') ++p;
        double x = 0.0;
        const auto [next, ec] = std::from_chars(p, end, x);
        if (ec != std::errc()) throw UsageError(flag + ": cannot parse '" + text + "' as numbers");
        values.push_back(x);
        p = next;
        while (p < end && *p == ' ') ++p;
        if (p == end) break;
        if (*p != ',') throw UsageError(flag + ": expected ',' in '" + text + "'");
        ++p;
    }
    if (values.size() != count) {
        throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated values, got " +
                         std::to_string(values.size()));
    }
    return values;
}

ThreeVector parse_triple(const std::string& text, const std::string& flag) {
    const std::vector<double> v = parse_reals(text, 3, flag);
    return ThreeVector(v[0], v[1], v[2]);
}

FourVector parse_four(const std::string& text, const std::string& flag) {
    const std::vector<double> v = parse_reals(text, 4, flag);
    return FourVector(v[0], v[1], v[2], v[3]);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string render(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_real(v);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_field(v);
            }
        },
        cell);
}

nlohmann::json to_json(const Cell& cell) {
    return std::visit([](const auto& v) { return nlohmann::json(v); }, cell);
}

// Subcommand options.

struct WignerArgs {
    std::string boost;
    std::string rotate;
    double angle = 0.0;
    std::string matrix;
    std::string velocity;
    std::string momentum;
    double mass = 1.0;
};

struct ScenarioArgs {
    double v = 0.0;
    double theta = std::numbers::pi / 4;
    double mass = 1.0;
};

struct ScanArgs {
    double theta = std::numbers::pi / 4;
    double v_min = 0.0;
    double v_max = 0.999;
    int steps = 200;
    double mass = 1.0;
};

struct ParadoxArgs {
    std::vector<std::string> velocities;
    std::vector<std::string> momenta;
    double mass = 1.0;
    std::string field_b = "1,1,0";
    std::string field_e = "0,0,0";
    std::string spin;
};

struct FrameCheckArgs {
    std::uint64_t seed = 42;
    int trials = 1000;
};

Table cmd_wigner(const WignerArgs& a) {
    LorentzTransform lambda;
    if (!a.boost.empty()) {
        lambda = boost_from_velocity(parse_triple(a.boost, "--boost"));
    } else if (!a.rotate.empty()) {
        lambda = rotation_about_axis(parse_triple(a.rotate, "--rotate"), a.angle);
    } else if (!a.matrix.empty()) {
        const std::vector<double> v = parse_reals(a.matrix, 16, "--matrix");
        Eigen::Matrix4d m;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) m(i, j) = v[4 * i + j];
        }
        lambda = LorentzTransform::from_matrix(m);
    }

    FourVector p;
    if (!a.velocity.empty()) {
        p = momentum_from_velocity(parse_triple(a.velocity, "--velocity"), a.mass);
    } else if (!a.momentum.empty()) {
        p = parse_four(a.momentum, "--momentum");
    } else {
        throw UsageError("wigner: one of --velocity or --momentum is required");
    }

    const WignerRotation w = wigner_rotation(lambda, p, a.mass);
    const AxisAngle aa = axis_angle(w.rotation);
    const Operator2 u = su2_from_rotation(w.rotation).matrix();

    Table t;
    std::vector<Cell> row;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t.columns.push_back("r" + std::to_string(i) + std::to_string(j));
            row.emplace_back(w.rotation.matrix()(i, j));
        }
    }
    t.columns.insert(t.columns.end(), {"axis_x", "axis_y", "axis_z", "angle"});
    row.insert(row.end(), {aa.axis.x(), aa.axis.y(), aa.axis.z(), aa.angle});
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const std::string name = "su2_" + std::to_string(i) + std::to_string(j);
            t.columns.push_back(name + "_re");
            t.columns.push_back(name + "_im");
            row.emplace_back(u(i, j).real());
            row.emplace_back(u(i, j).imag());
        }
    }
    t.rows.push_back(std::move(row));
    return t;
}

Table cmd_sg(const ScenarioArgs& a) {
    const TwoApparatusConfig config{a.v, a.theta};
    Table t{{"v", "theta", "expectation_sg", "closed_form"}, {}};
    t.rows.push_back({a.v, a.theta, two_apparatus_sg(config, a.mass), closed_form_expectation(a.v, a.theta)});
    return t;
}

Table cmd_pl(const ScenarioArgs& a) {
    const TwoApparatusConfig config{a.v, a.theta};
    Table t{{"v", "theta", "expectation_pl", "closed_form"}, {}};
    t.rows.push_back({a.v, a.theta, two_apparatus_pl(config, a.mass), closed_form_expectation(a.v, a.theta)});
    return t;
}

Table cmd_scan(const ScanArgs& a) {
    const ScanResult scan = scan_fig1(a.theta, uniform_grid(a.v_min, a.v_max, a.steps), a.mass);
    Table t{{"v", "expectation_sg", "expectation_pl", "closed_form"}, {}};
    for (const ScanRow& r : scan.rows) t.rows.push_back({r.v, r.expectation_sg, r.expectation_pl, r.closed_form});
    return t;
}

Table cmd_fig2(const ScenarioArgs& a) {
    const Fig2Geometry g = fig2_geometry(a.v, a.theta);
    Table t{{"v", "theta", "angle_B1B2_rest", "angle_G1G2_rest"}, {}};
    t.rows.push_back({a.v, a.theta, g.angle_B1B2_rest, g.angle_G1G2_rest});
    return t;
}

Table cmd_paradox(const ParadoxArgs& a) {
    std::vector<FourVector> momenta;
    for (const std::string& v : a.velocities) momenta.push_back(momentum_from_velocity(parse_triple(v, "--velocity"), a.mass));
    for (const std::string& p : a.momenta) momenta.push_back(parse_four(p, "--momentum"));
    if (momenta.size() < 2) throw UsageError("paradox-demo: at least two --velocity or --momentum values are required");

    const EMFieldTensor f = tensor_from_fields(parse_triple(a.field_e, "--field-e"), parse_triple(a.field_b, "--field-b"));
    std::optional<ThreeVector> spin;
    if (!a.spin.empty()) spin = parse_triple(a.spin, "--spin");
    const ParadoxResult r = paradox_demo(momenta, a.mass, f, spin);

    Table t{{"branch", "axis_x", "axis_y", "axis_z", "prob_plus_first", "purity_before", "purity_after",
             "remeasure_prob_plus"},
            {}};
    for (std::size_t i = 0; i < r.axes.size(); ++i) {
        t.rows.push_back({static_cast<long long>(i), r.axes[i].x(), r.axes[i].y(), r.axes[i].z(), r.prob_plus_first,
                          r.purity_before, r.purity_after, r.remeasure_prob_plus});
    }
    return t;
}

Table cmd_frame_check(const FrameCheckArgs& a, bool& passed) {
    const FrameCheckReport report = frame_check(a.seed, a.trials);
    passed = report.passed();
    Table t{{"check", "max_residual", "tolerance", "passed"}, {}};
    for (const FrameCheckRow& r : report.rows) t.rows.push_back({r.check, r.max_residual, r.tolerance, r.passed()});
    return t;
}

void add_scenario_options(CLI::App* sub, ScenarioArgs& a) {
    sub->add_option("--v", a.v, "Particle speed, 0 <= v < 1")->required();
    sub->add_option("--theta", a.theta, "Direction of motion in the x-y plane, radians")->capture_default_str();
    sub->add_option("--mass", a.mass, "Particle mass")->capture_default_str();
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render(row[i]);
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = to_json(row[i]);
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic spin measurement scenarios", "relspin"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "csv";
    std::string output;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", output, "Write to this file instead of stdout");

    WignerArgs wa;
    CLI::App* wigner = app.add_subcommand("wigner", "Wigner rotation W(Λ, p)");
    auto* boost = wigner->add_option("--boost", wa.boost, "Λ as a pure boost with velocity vx,vy,vz");
    auto* rotate = wigner->add_option("--rotate", wa.rotate, "Λ as a rotation about axis ax,ay,az");
    wigner->add_option("--angle", wa.angle, "Rotation angle in radians (with --rotate)")->needs(rotate);
    auto* matrix = wigner->add_option("--matrix", wa.matrix, "Λ as 16 comma-separated row-major reals");
    boost->excludes(rotate)->excludes(matrix);
    rotate->excludes(matrix);
    auto* vel = wigner->add_option("--velocity", wa.velocity, "Particle velocity vx,vy,vz");
    wigner->add_option("--momentum", wa.momentum, "Particle 4-momentum p0,px,py,pz")->excludes(vel);
    wigner->add_option("--mass", wa.mass, "Particle mass")->capture_default_str();

    ScenarioArgs sg_args;
    CLI::App* sg = app.add_subcommand("sg-expectation", "Two Stern-Gerlach apparatus along x̂ then ŷ");
    add_scenario_options(sg, sg_args);

    ScenarioArgs pl_args;
    CLI::App* pl = app.add_subcommand("pl-expectation", "Same scenario with Pauli-Lubanski coupling");
    add_scenario_options(pl, pl_args);

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan-fig1", "Expectation value against speed");
    scan->add_option("--theta", scan_args.theta, "Direction of motion, radians")->capture_default_str();
    scan->add_option("--v-min", scan_args.v_min, "First speed")->capture_default_str();
    scan->add_option("--v-max", scan_args.v_max, "Last speed")->capture_default_str();
    scan->add_option("--steps", scan_args.steps, "Number of grid points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--mass", scan_args.mass, "Particle mass")->capture_default_str();

    ParadoxArgs pa;
    CLI::App* paradox = app.add_subcommand("paradox-demo", "Sequential measurement of a momentum superposition");
    paradox->add_option("--velocity", pa.velocities, "Branch velocity vx,vy,vz (repeatable)");
    paradox->add_option("--momentum", pa.momenta, "Branch 4-momentum p0,px,py,pz (repeatable)");
    paradox->add_option("--mass", pa.mass, "Particle mass")->capture_default_str();
    paradox->add_option("--field-b", pa.field_b, "Lab magnetic field bx,by,bz")->capture_default_str();
    paradox->add_option("--field-e", pa.field_e, "Lab electric field ex,ey,ez")->capture_default_str();
    paradox->add_option("--spin", pa.spin, "Initial Bloch vector (default: along the lab magnetic field)");

    FrameCheckArgs fa;
    CLI::App* fc = app.add_subcommand("frame-check", "Seeded covariance and invariance sweeps");
    fc->add_option("--seed", fa.seed, "Random seed")->capture_default_str();
    fc->add_option("--trials", fa.trials, "Samples per check")->check(CLI::PositiveNumber)->capture_default_str();

    ScenarioArgs f2_args;
    CLI::App* fig2 = app.add_subcommand("fig2-geometry", "Rest-frame angles between the two apparatus fields");
    add_scenario_options(fig2, f2_args);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "relspin: " << e.what() << '\n';
        return kUsageError;
    }

    Table table;
    int code = kSuccess;
    try {
        if (wigner->parsed()) {
            table = cmd_wigner(wa);
        } else if (sg->parsed()) {
            table = cmd_sg(sg_args);
        } else if (pl->parsed()) {
            table = cmd_pl(pl_args);
        } else if (scan->parsed()) {
            table = cmd_scan(scan_args);
        } else if (paradox->parsed()) {
            table = cmd_paradox(pa);
        } else if (fc->parsed()) {
            bool passed = false;
            table = cmd_frame_check(fa, passed);
            code = passed ? kSuccess : kPropertyFailure;
        } else if (fig2->parsed()) {
            table = cmd_fig2(f2_args);
        }
    } catch (const UsageError& e) {
        err << "relspin: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "relspin: " << e.what() << '\n';
        return kDomainError;
    }

    std::ostringstream text;
    if (format == "json") {
        write_json(table, text);
    } else {
        write_csv(table, text);
    }
    if (output.empty()) {
        out << text.str();
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file || !(file << text.str())) {
            err << "relspin: cannot write " << output << '\n';
            return kUsageError;
        }
    }
    return code;
}

}  // namespace relspin::cli
