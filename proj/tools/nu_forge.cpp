// nu-forge: catalog, spectra, wavefunctions and verification of exactly
// solvable potentials built from orthogonal polynomials.
//
// Exit codes: 0 success, 2 usage, 3 domain/admissibility, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nuforge/catalog.hpp"
#include "nuforge/errors.hpp"
#include "nuforge/kg.hpp"
#include "nuforge/oracle.hpp"
#include "nuforge/output.hpp"
#include "nuforge/verify.hpp"

namespace {

using nlohmann::json;
using nuforge::ParameterMap;
using nuforge::output::Cell;
using nuforge::output::CsvTable;

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

struct SystemOptions {
    std::string id;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> a;
    std::optional<double> ell;
    std::optional<double> w;

    ParameterMap params() const {
        ParameterMap p;
        if (alpha) p["alpha"] = *alpha;
        if (beta) p["beta"] = *beta;
        if (a) p["a"] = *a;
        if (ell) p["ell"] = *ell;
        if (w) p["w"] = *w;
        return p;
    }

    // Requested values over catalog defaults, restricted to the entry's schema.
    ParameterMap resolved() const {
        ParameterMap p = nuforge::default_parameters(id);
        p.erase("n");
        for (const auto& [k, v] : params())
            if (p.count(k)) p[k] = v;
        return p;
    }
};

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& e : nuforge::catalog_entries()) ids.push_back(e.id);
    return ids;
}

void add_system_options(CLI::App* cmd, SystemOptions& o) {
    cmd->add_option("--alpha", o.alpha, "Jacobi alpha (> 1/2)");
    cmd->add_option("--beta", o.beta, "Jacobi beta (> 1/2)");
    cmd->add_option("--a", o.a, "map scale a (> 0)");
    cmd->add_option("--ell", o.ell, "angular momentum (integer >= 0)");
    cmd->add_option("--w", o.w, "oscillator frequency (> 0)");
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

json params_json(const ParameterMap& p) {
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = v;
    return out;
}

json envelope(const std::string& command, json inputs, json rows) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"rows", std::move(rows)}, {"meta", {{"version", kVersion}}}};
}

json row_json(const std::vector<std::string>& header, const std::vector<Cell>& row) {
    json out = json::object();
    for (std::size_t i = 0; i < header.size(); ++i)
        std::visit([&](const auto& v) { out[header[i]] = v; }, row[i]);
    return out;
}

void emit(const std::string& format, const std::string& command, json inputs, const CsvTable& table) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows) rows.push_back(row_json(table.header, row));
        std::cout << nuforge::output::dump_json(envelope(command, std::move(inputs), std::move(rows))) << "\n";
    } else {
        std::cout << table.str();
    }
}

int run_list(const std::string& format) {
    CsvTable table{{"id", "parameters", "construction", "summary"}, {}};
    json rows = json::array();
    for (const auto& e : nuforge::catalog_entries()) {
        std::string schema;
        json params = json::array();
        for (const auto& p : e.parameters) {
            schema += (schema.empty() ? "" : "; ") + p.name + " " + p.constraint;
            params.push_back({{"name", p.name}, {"constraint", p.constraint}});
        }
        table.rows.push_back({e.id, schema, e.construction, e.summary});
        rows.push_back({{"id", e.id}, {"parameters", params}, {"construction", e.construction}, {"summary", e.summary}});
    }
    if (format == "json") {
        std::cout << nuforge::output::dump_json(envelope("list", json::object(), std::move(rows))) << "\n";
    } else {
        // Quote fields containing separators.
        for (auto& row : table.rows)
            for (auto& cell : row)
                if (auto* s = std::get_if<std::string>(&cell); s && s->find(',') != std::string::npos) *s = '"' + *s + '"';
        std::cout << table.str();
    }
    return 0;
}

int run_spectrum(const SystemOptions& o, int nmax, const std::string& format) {
    const ParameterMap params = o.resolved();
    CsvTable table{{"n", "E", "E_F", "E_f"}, {}};
    const bool per_level = o.id == "inversely_linear_nonrel";
    std::optional<nuforge::SolvableSystem> shared;
    if (!per_level) shared = nuforge::build_catalog_system(o.id, params);
    for (int n = 0; n <= nmax; ++n) {
        const nuforge::EnergyLevel e =
            per_level ? nuforge::build_catalog_system(o.id, params, n).energy(n) : shared->energy(n);
        table.rows.push_back({static_cast<long long>(n), e.total, e.polynomial_part, e.factor_part});
    }
    emit(format, "spectrum", {{"system", o.id}, {"params", params_json(params)}, {"nmax", nmax}}, table);
    return 0;
}

int run_wavefunction(const SystemOptions& o, int n, std::optional<double> rmin, std::optional<double> rmax,
                     int samples, bool normalize, const std::string& format) {
    const ParameterMap params = o.resolved();
    const nuforge::SolvableSystem system = nuforge::build_catalog_system(o.id, params, n);
    const nuforge::Interval iv = nuforge::integration_interval(system, n);
    double lo = rmin.value_or(iv.left);
    double hi = rmax.value_or(iv.right);
    if (!(hi > lo)) throw nuforge::DomainError("rmax must exceed rmin");
    // Endpoints given explicitly are sampled; implicit ones are domain walls and skipped.
    const bool open_lo = !rmin;
    const bool open_hi = !rmax;
    const int intervals = samples - 1 + (open_lo ? 1 : 0) + (open_hi ? 1 : 0);
    const double step = (hi - lo) / intervals;
    const double scale = normalize ? 1.0 / nuforge::wavefunction_norm(system, n) : 1.0;
    CsvTable table{{"r", "psi", "dpsi", "d2psi"}, {}};
    for (int i = 0; i < samples; ++i) {
        const double r = (i + 1 == samples && !open_hi) ? hi : lo + (i + (open_lo ? 1 : 0)) * step;
        const nuforge::Jet psi = system.wavefunction(n, r);
        table.rows.push_back({r, scale * psi.value, scale * psi.first, scale * psi.second});
    }
    json inputs = {{"system", o.id}, {"params", params_json(params)}, {"n", n}, {"samples", samples},
                   {"normalize", normalize}, {"rmin", lo}, {"rmax", hi}};
    emit(format, "wavefunction", std::move(inputs), table);
    return 0;
}

int run_verify(const std::string& target, const SystemOptions& o, bool grid_halve, const std::string& format) {
    nuforge::VerifyOptions options;
    options.grid_halve = grid_halve;
    std::vector<nuforge::CheckRecord> records;
    json inputs = {{"system", target}, {"grid_halve", grid_halve}};
    if (target == "all") {
        records = nuforge::verify_all(options);
    } else {
        SystemOptions so = o;
        so.id = target;
        const ParameterMap params = so.resolved();
        inputs["params"] = params_json(params);
        records = nuforge::verify_system(target, params, options);
    }
    bool all_pass = true;
    for (const auto& r : records) all_pass = all_pass && r.pass;
    if (format == "csv") {
        CsvTable table{{"system", "check", "closed_form", "oracle_value", "abs_err", "rel_err", "tolerance", "pass"}, {}};
        for (const auto& r : records)
            table.rows.push_back({r.system, r.check, r.closed_form, r.oracle_value, r.abs_err, r.rel_err, r.tolerance,
                                  std::string(r.pass ? "true" : "false")});
        std::cout << table.str();
    } else {
        json rows = json::array();
        for (const auto& r : records) rows.push_back(nuforge::to_json(r));
        json report = envelope("verify", std::move(inputs), std::move(rows));
        report["summary"] = {{"checks", records.size()}, {"pass", all_pass}};
        std::cout << nuforge::output::dump_json(report) << "\n";
    }
    return all_pass ? 0 : kExitVerification;
}

int run_kg_spectrum(double m, double B, const std::string& sign_text, int nmax, const std::string& format) {
    const int sign = (sign_text == "-" || sign_text == "-1") ? -1 : 1;
    const nuforge::KGPotential pot = nuforge::KGPotential::from_B(B, sign, m);
    CsvTable table{{"n", "root", "epsilon", "a", "epsilon_F", "epsilon_f", "residual", "status"}, {}};
    for (int n = 0; n <= nmax; ++n) {
        const auto levels = nuforge::kg_admissible_levels(pot, n);
        if (levels.empty()) {
            const double nan = std::nan("");
            table.rows.push_back({static_cast<long long>(n), 0LL, nan, nan, nan, nan, nan, std::string("no_bound_state")});
            continue;
        }
        // Largest root first: it is the one kg_spectrum selects.
        for (std::size_t k = levels.size(); k-- > 0;) {
            const auto& l = levels[k];
            const double res = std::abs(nuforge::kg_quantization_residual(pot, n, l.epsilon)) / (m * m);
            table.rows.push_back({static_cast<long long>(n), static_cast<long long>(levels.size() - 1 - k), l.epsilon,
                                  l.a, l.epsilon_F, l.epsilon_f, res,
                                  std::string(k + 1 == levels.size() ? "selected" : "alternate")});
        }
    }
    json inputs = {{"m", m}, {"B", B}, {"A", pot.A()}, {"sign", sign}, {"nmax", nmax}};
    emit(format, "kg-spectrum", std::move(inputs), table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exactly solvable potentials from orthogonal polynomials"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "csv";
    const auto ids = catalog_ids();

    auto* list = app.add_subcommand("list", "list catalog systems");
    add_format_option(list, format);

    SystemOptions spec_opts;
    int nmax = 3;
    auto* spectrum = app.add_subcommand("spectrum", "energy levels with their E_F / E_f split");
    spectrum->add_option("system", spec_opts.id, "catalog id")->required()->check(CLI::IsMember(ids));
    add_system_options(spectrum, spec_opts);
    spectrum->add_option("--nmax", nmax, "highest level")->check(CLI::Range(0, 1000));
    add_format_option(spectrum, format);

    SystemOptions wf_opts;
    int level = 0;
    int samples = 200;
    std::optional<double> rmin;
    std::optional<double> rmax;
    bool normalize = false;
    auto* wavefunction = app.add_subcommand("wavefunction", "sample (r, psi, psi', psi'')");
    wavefunction->add_option("system", wf_opts.id, "catalog id")->required()->check(CLI::IsMember(ids));
    add_system_options(wavefunction, wf_opts);
    wavefunction->add_option("--n", level, "level index")->check(CLI::Range(0, 64));
    wavefunction->add_option("--samples", samples, "number of samples")->check(CLI::Range(2, 1000000));
    wavefunction->add_option("--rmin", rmin, "first sample (default: just inside the domain)");
    wavefunction->add_option("--rmax", rmax, "last sample (default: domain end or decay point)");
    wavefunction->add_flag("--normalize", normalize, "scale to unit L2 norm");
    add_format_option(wavefunction, format);

    SystemOptions verify_opts;
    std::string target;
    bool grid_halve = false;
    std::string verify_format = "json";
    auto* verify = app.add_subcommand("verify", "compare closed forms with the numerical oracle");
    std::vector<std::string> targets = ids;
    targets.push_back("all");
    verify->add_option("system", target, "catalog id or 'all'")->required()->check(CLI::IsMember(targets));
    add_system_options(verify, verify_opts);
    verify->add_flag("--grid-halve", grid_halve, "add an eigenvalue convergence study");
    add_format_option(verify, verify_format);

    double mass = 1.0;
    double coupling_b = 0.0;
    std::string sign = "+";
    int kg_nmax = 3;
    auto* kg = app.add_subcommand("kg-spectrum", "Klein-Gordon levels of the inversely linear potential");
    kg->add_option("--m", mass, "rest mass (> 0)")->check(CLI::PositiveNumber);
    kg->add_option("--B", coupling_b, "scalar coupling");
    kg->add_option("--sign", sign, "sign of A = +-sqrt(B^2 + 3/16)")->check(CLI::IsMember({"+", "-", "+1", "-1"}));
    kg->add_option("--nmax", kg_nmax, "highest level")->check(CLI::Range(0, 1000));
    add_format_option(kg, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list) return run_list(format);
        if (*spectrum) return run_spectrum(spec_opts, nmax, format);
        if (*wavefunction) return run_wavefunction(wf_opts, level, rmin, rmax, samples, normalize, format);
        if (*verify) return run_verify(target, verify_opts, grid_halve, verify_format);
        if (*kg) return run_kg_spectrum(mass, coupling_b, sign, kg_nmax, format);
    } catch (const nuforge::ParameterDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nuforge::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nuforge::NoBoundStateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nuforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
