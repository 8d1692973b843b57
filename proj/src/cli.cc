// Copyright 2026 The topostab Authors
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

#include "topostab/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "topostab/distance.h"
#include "topostab/errors.h"
#include "topostab/families.h"
#include "topostab/lattice.h"
#include "topostab/report.h"
#include "topostab/spectrum.h"
#include "topostab/stabilizer_code.h"

namespace topostab {

namespace {

/// Where the two kinds of output go for the chosen --format.
struct Sinks {
    std::ostream *text;
    std::ostream *tsv;

    static Sinks from_format(const std::string &format, std::ostream &out, std::ostream &err) {
        if (format == "tsv") {
            return {nullptr, &out};
        }
        if (format == "text") {
            return {&out, nullptr};
        }
        return {&err, &out};
    }

    template <typename... Fields>
    void record(const Fields &...fields) const {
        if (!tsv) {
            return;
        }
        bool first = true;
        ((*tsv << (first ? "" : "\t") << fields, first = false), ...);
        *tsv << "\n";
    }

    std::ostream &say() const {
        static std::ostringstream sink;
        if (text) {
            return *text;
        }
        sink.str("");
        return sink;
    }
};

struct GlobalOptions {
    size_t dmax = kDefaultWeightCap;
    size_t workers = 0;
    std::string format = "default";
    std::string out_path;
};

size_t resolve_workers(size_t requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("TOPOSTAB_WORKERS")) {
        size_t value = 0;
        std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
            return value;
        }
    }
    return std::max<unsigned>(1, std::thread::hardware_concurrency());
}

StabilizerCode load_code(const std::string &path) {
    return StabilizerCode::from_lattice(load(path));
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << content;
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

int cmd_build(const std::string &family, const std::string &param_text, const GlobalOptions &opts,
              const Sinks &sinks, std::ostream &out) {
    FamilyId id = parse_family(family);
    std::int64_t param = 0;
    auto [ptr, ec] = std::from_chars(param_text.data(), param_text.data() + param_text.size(), param);
    if (ec != std::errc() || ptr != param_text.data() + param_text.size()) {
        throw std::invalid_argument("parameter must be an integer, got '" + param_text + "'");
    }
    FamilySpec spec{id, param};
    auto expect = predicted(spec);
    Lattice lat = build(spec);
    std::string destination = opts.out_path.empty() ? "-" : opts.out_path;
    if (opts.out_path.empty()) {
        out << to_json(lat);
    } else {
        save(lat, opts.out_path);
        sinks.record(to_string(id), param, lat.num_qubits(), expect.k, expect.d, destination);
    }
    sinks.say() << "built " << to_string(id) << " " << param << ": n=" << lat.num_qubits()
                << ", predicted k=" << expect.k << ", d=" << expect.d << " -> " << destination << "\n";
    return kExitOk;
}

int cmd_params(const std::string &path, const GlobalOptions &opts, const Sinks &sinks) {
    auto code = load_code(path);
    auto params = distance(code, opts.dmax, resolve_workers(opts.workers));
    if (params.d) {
        auto c = format_rational(params.rate_c());
        sinks.record("#n", "k", "d", "t", "C", "method", "certificate");
        sinks.record(params.n, params.k, *params.d, params.t(), c, to_string(params.method),
                     params.certificate->str());
        sinks.say() << params.bracket() << " C=" << c << "\n";
    } else {
        sinks.record("#n", "k", "d", "t", "C", "method", "certificate");
        sinks.record(params.n, params.k, ">" + std::to_string(opts.dmax), "-", "-", to_string(params.method), "-");
        sinks.say() << params.bracket() << " d > " << opts.dmax << "\n";
    }
    return kExitOk;
}

int cmd_logicals(const std::string &path, const Sinks &sinks) {
    auto code = load_code(path);
    auto pairs = logical_basis(code);
    sinks.say() << "k=" << pairs.size() << "\n";
    sinks.record("#index", "type", "operator", "class");
    bool all_undetectable = true;
    for (size_t i = 0; i < pairs.size(); i++) {
        for (const auto &[label, op] : {std::pair{"X", &pairs[i].first}, std::pair{"Z", &pairs[i].second}}) {
            auto cls = code.classify(*op);
            all_undetectable &= cls == PauliClass::undetectable_error;
            sinks.record(i, label, op->str(), to_string(cls));
            sinks.say() << label << "_" << i << " = " << op->str() << "  (" << to_string(cls) << ")\n";
        }
    }
    return all_undetectable ? kExitOk : kExitMismatch;
}

int cmd_render(const std::string &path, const std::string &svg_path, std::ostream &out, const Sinks &sinks) {
    Lattice lat = load(path);
    auto layout = layout_from_meta(lat);
    std::string svg = layout ? render_svg(lat, std::span<const Point2>(*layout)) : render_svg(lat);
    if (svg_path.empty()) {
        out << svg;
    } else {
        write_text_file(svg_path, svg);
        sinks.record("render", lat.num_qubits(), lat.plaquettes().size(), svg_path);
    }
    sinks.say() << "rendered " << lat.num_qubits() << " qubits and " << lat.plaquettes().size() << " plaquettes"
                << (layout ? " (stored layout)" : " (force layout)") << " -> " << (svg_path.empty() ? "-" : svg_path)
                << "\n";
    return kExitOk;
}

int cmd_spectrum(const std::string &path, bool dense, const GlobalOptions &opts, const Sinks &sinks) {
    auto code = load_code(path);
    if (dense && code.n() > kDenseMaxQubits) {
        throw std::invalid_argument("dense check needs n <= " + std::to_string(kDenseMaxQubits) + ", lattice has n=" +
                                    std::to_string(code.n()));
    }
    auto report = spectrum(code);
    sinks.say() << "E0=" << report.ground_energy() << " deg=" << report.ground_degeneracy()
                << " gap=" << report.gap() << "\n";
    sinks.record("#energy", "degeneracy");
    for (const auto &level : report.levels) {
        sinks.record(level.energy, level.degeneracy);
        sinks.say() << "  E=" << level.energy << " deg=" << level.degeneracy << "\n";
    }
    if (!opts.out_path.empty()) {
        write_text_file(opts.out_path, to_json(report));
    }
    if (dense) {
        bool agree = dense_check(code) == report;
        sinks.record("dense-check", agree ? "match" : "MISMATCH");
        sinks.say() << "dense check: " << (agree ? "match" : "MISMATCH") << "\n";
        return agree ? kExitOk : kExitMismatch;
    }
    return kExitOk;
}

int cmd_paper_table(const GlobalOptions &opts, const std::optional<std::string> &corrupt, const Sinks &sinks,
                    std::ostream &err) {
    PaperTableOptions options;
    options.w_max = opts.dmax;
    options.workers = resolve_workers(opts.workers);
    if (corrupt) {
        options.corrupt = parse_family(*corrupt);
    }
    auto table = compute_paper_table(options);

    sinks.record("#" + std::string(kVersion), "paper-table");
    sinks.record("#label", "family", "param", "n", "k", "d", "C_instance", "C_compared", "C_reference", "mode",
                 "match");
    sinks.say() << kVersion << "\n";
    sinks.say() << "label                    family                   [[n,k,d]]     C(instance)  C(compared)  "
                   "reference  mode        match\n";
    for (const auto &row : table.rows) {
        std::string mode = row.asymptotic ? "asymptotic" : "exact";
        std::string match = row.match ? "yes" : "no";
        std::string instance = row.params.d ? format_rational(row.instance_c) : "-";
        std::string compared = row.params.d ? format_rational(row.compared_c) : "-";
        std::string d = row.params.d ? std::to_string(*row.params.d) : "-";
        std::string bracket = row.error ? "error" : row.params.bracket();
        sinks.record(row.label, to_string(row.family.id), row.family.param, row.error ? "-" : std::to_string(row.params.n),
                     row.error ? "-" : std::to_string(row.params.k), row.error ? "-" : d, instance, compared,
                     format_rational(row.paper_c), mode, match);
        std::ostringstream line;
        line << std::left << std::setw(25) << row.label << std::setw(25) << to_string(row.family.id) << std::setw(14)
             << bracket << std::setw(13) << instance << std::setw(13) << compared << std::setw(11)
             << format_rational(row.paper_c) << std::setw(12) << mode << match << "\n";
        sinks.say() << line.str();
    }
    const auto &kd = table.k_doubling;
    std::string kd_line = "k_c = 2·k_s: " + std::to_string(kd.k_color) + " = 2·" + std::to_string(kd.k_surface);
    sinks.record("k-doubling", kd.k_color, kd.k_surface, kd.match ? "yes" : "no");
    sinks.say() << kd_line << "  " << (kd.match ? "match" : "MISMATCH") << "\n";

    if (table.all_match()) {
        return kExitOk;
    }
    for (const auto &row : table.rows) {
        if (row.match) {
            continue;
        }
        err << "MISMATCH " << row.label << ": expected [[" << row.expected.n << "," << row.expected.k << ","
            << row.expected.d << "]] C=" << format_rational(row.paper_c) << ", got ";
        if (row.error) {
            err << "error: " << *row.error;
        } else {
            err << row.params.bracket() << " C=" << (row.params.d ? format_rational(row.compared_c) : "-");
        }
        err << "\n";
    }
    if (!kd.match) {
        err << "MISMATCH k-doubling: " << kd_line << "\n";
    }
    return kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build topological 2D stabilizer codes and certify [[n,k,d]], n/d^2 and spectra.", "topostab"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    GlobalOptions opts;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", opts.format, "tsv: records on stdout only; text: human text on stdout only")
            ->check(CLI::IsMember({"tsv", "text"}));
        sub->add_option("--workers", opts.workers, "Distance sweep threads (default: TOPOSTAB_WORKERS or all cores)");
    };

    std::string family, param, lattice_path, svg_path;
    std::optional<std::string> corrupt;
    bool dense = false;

    auto *build_cmd = app.add_subcommand("build", "Generate a family instance as a lattice file");
    build_cmd->add_option("family", family, "Family id")->required();
    build_cmd->add_option("param", param, "Size parameter (L, l or d)")->required();
    build_cmd->add_option("--out,-o", opts.out_path, "Output lattice file (default: stdout)");
    add_common(build_cmd);

    auto *params_cmd = app.add_subcommand("params", "Print [[n,k,d]] and C = n/d^2");
    params_cmd->add_option("lattice", lattice_path, "Lattice file")->required();
    params_cmd->add_option("--dmax", opts.dmax, "Largest weight searched")->check(CLI::PositiveNumber);
    add_common(params_cmd);

    auto *logicals_cmd = app.add_subcommand("logicals", "Print a logical operator basis");
    logicals_cmd->add_option("lattice", lattice_path, "Lattice file")->required();
    add_common(logicals_cmd);

    auto *render_cmd = app.add_subcommand("render", "Draw the lattice as SVG");
    render_cmd->add_option("lattice", lattice_path, "Lattice file")->required();
    render_cmd->add_option("svg", svg_path, "Output SVG file (default: stdout)");
    add_common(render_cmd);

    auto *spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of the plaquette Hamiltonian");
    spectrum_cmd->add_option("lattice", lattice_path, "Lattice file")->required();
    spectrum_cmd->add_flag("--dense", dense, "Cross-check by dense diagonalization (n <= 12)");
    spectrum_cmd->add_option("--out,-o", opts.out_path, "Also write the report as JSON");
    add_common(spectrum_cmd);

    auto *table_cmd = app.add_subcommand("paper-table", "Recompute the torus and planar comparison table");
    table_cmd->add_option("--dmax", opts.dmax, "Largest weight searched")->check(CLI::PositiveNumber);
    table_cmd->add_option("--corrupt", corrupt, "Testing only: corrupt one family's lattice")->group("");
    add_common(table_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Sinks sinks = Sinks::from_format(opts.format, out, err);
    try {
        if (*build_cmd) {
            return cmd_build(family, param, opts, sinks, out);
        }
        if (*params_cmd) {
            return cmd_params(lattice_path, opts, sinks);
        }
        if (*logicals_cmd) {
            return cmd_logicals(lattice_path, sinks);
        }
        if (*render_cmd) {
            return cmd_render(lattice_path, svg_path, out, sinks);
        }
        if (*spectrum_cmd) {
            return cmd_spectrum(lattice_path, dense, opts, sinks);
        }
        if (*table_cmd) {
            return cmd_paper_table(opts, corrupt, sinks, err);
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace topostab
