// Command line front end: stats, eval, monotonize, compose, simplify,
// prune, gen, cert.  Circuits travel as .rmf text; every path option
// accepts '-' for the standard streams.  Results go to the output stream,
// diagnostics to stderr.  Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rmf/rmf.hpp"

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw rmf::Error(rmf::Errc::MissingVariable, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_all(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw rmf::Error(rmf::Errc::MissingVariable, "cannot open '" + path + "' for writing");
    out << data;
}

rmf::Circuit load_circuit(const std::string& path) { return rmf::parse(read_all(path)); }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

rmf::Assignment parse_assignment(const rmf::Circuit& c, const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        // var=bit lines
        std::istringstream in(read_all(spec.substr(1)));
        rmf::Assignment x;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw rmf::Error(rmf::Errc::MissingVariable, "bad assignment line '" + line + "'");
            std::string var = line.substr(0, eq);
            std::string bit = line.substr(eq + 1);
            if (bit != "0" && bit != "1")
                throw rmf::Error(rmf::Errc::MissingVariable, "bad bit in '" + line + "'");
            x[var] = bit == "1";
        }
        return x;
    }
    return rmf::assignment_from_bits(c, spec);
}

rmf::BitMatrix parse_matrix(const std::string& spec) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : spec) {
        if (ch == ';' || ch == ',') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch == '0' || ch == '1') {
            cur += ch;
        } else if (ch != ' ') {
            throw rmf::Error(rmf::Errc::BadParams, "matrix rows are 0/1 strings separated by ';'");
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    const std::size_t n = rows.size();
    rmf::BitMatrix m = rmf::BitMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw rmf::Error(rmf::Errc::BadParams, "matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, rows[i][j] == '1');
    }
    return m;
}

rmf::BitMatrix matrix_from_options(const std::string& matrix, const std::string& kind,
                                   std::uint64_t n, std::uint64_t seed) {
    if (!matrix.empty()) return parse_matrix(matrix);
    if (n == 0)
        throw rmf::Error(rmf::Errc::BadParams, "give --matrix or --kind with --n");
    if (kind == "identity") return rmf::BitMatrix::identity(n);
    if (kind == "ones") return rmf::BitMatrix::ones(n);
    if (kind == "random") {
        std::mt19937_64 rng(seed);
        rmf::BitMatrix m = rmf::BitMatrix::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, rng() & 1);
        return m;
    }
    throw rmf::Error(rmf::Errc::BadParams, "unknown matrix kind '" + kind + "'");
}

// Writes a generated instance: circuit text to `out`, sidecar JSON next to
// it (extension swapped to .json) when writing to a real file.
void emit_instance(const rmf::InstanceRecord& rec, const std::string& out, bool json_mode) {
    if (json_mode) {
        rmf::Json j = rmf::sidecar_json(rec);
        j["circuit"] = rmf::print(rec.circuit);
        write_all(out, j.dump(2) + "\n");
        return;
    }
    write_all(out, rmf::print(rec.circuit));
    if (out != "-") {
        std::string side = out;
        auto dot = side.find_last_of('.');
        auto slash = side.find_last_of('/');
        if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
            side.resize(dot);
        side += ".json";
        write_all(side, rmf::sidecar_json(rec).dump(2) + "\n");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"read-many formula toolkit"};
    app.require_subcommand(1);

    std::string in_path = "-", in2_path = "-", out_path = "-";
    std::string assign_spec, top_spec = "any";
    std::string report_path;
    bool json_mode = false, count_mode = false;
    std::uint64_t seed = 0;
    double alpha = 1.0, budget = 10.0;

    auto add_io = [&](CLI::App* cmd, bool with_out) {
        cmd->add_flag("--json", json_mode, "emit JSON instead of plain text");
        if (with_out)
            cmd->add_option("-o,--output", out_path, "output path ('-' = stdout)")
                ->capture_default_str();
    };

    auto* stats = app.add_subcommand("stats", "metrics and the evaluation upper bound");
    stats->add_option("file", in_path, "circuit file ('-' = stdin)");
    add_io(stats, false);

    auto* eval = app.add_subcommand("eval", "evaluate a circuit on an assignment");
    eval->add_option("file", in_path, "circuit file");
    eval->add_option("--assign", assign_spec, "bits in input order, or @file of var=bit lines")
        ->required();
    eval->add_flag("--count", count_mode, "charge a query ledger (short-circuit order)");
    add_io(eval, false);

    auto* mono = app.add_subcommand("monotonize", "push NOT gates onto doubled literals");
    mono->add_option("file", in_path, "circuit file");
    mono->add_option("--top", top_spec, "desired top gate: and, or, any")->capture_default_str();
    add_io(mono, true);

    auto* comp = app.add_subcommand("compose", "compose two circuits with boundary merging");
    comp->add_option("f", in_path, "outer circuit file");
    comp->add_option("g", in2_path, "inner circuit file");
    add_io(comp, true);

    auto* simp = app.add_subcommand("simplify", "constant propagation to fixpoint");
    simp->add_option("file", in_path, "circuit file");
    add_io(simp, true);

    auto* prune_cmd = app.add_subcommand("prune", "high-degree literal pruning with query ledger");
    prune_cmd->add_option("file", in_path, "formula file (NNF)");
    prune_cmd->add_option("--assign", assign_spec, "bits in input order, or @file")->required();
    prune_cmd->add_option("--seed", seed, "search rng seed")->capture_default_str();
    prune_cmd->add_option("--alpha", alpha, "search charge multiplier")->capture_default_str();
    prune_cmd->add_option("--budget", budget, "cutoff budget factor")->capture_default_str();
    prune_cmd->add_option("--report", report_path, "also write report+audit JSON here");
    add_io(prune_cmd, true);

    auto* gen = app.add_subcommand("gen", "generate a hard-instance family member");
    std::string family;
    std::uint64_t g_n = 0, g_m = 0, g_iterations = 0, g_q = 0, g_s = 0, g_g = 0;
    double g_fraction = 0.5;
    std::string g_matrix, g_kind = "identity", g_preset, g_variant = "a";
    gen->add_option("family", family,
                    "parity | parity-and | onto | onto-iter | ed | ed-and | bvpv | bmpv | projplane")
        ->required();
    gen->add_option("--n", g_n, "primary size parameter");
    gen->add_option("--m", g_m, "parity arity (parity-and)");
    gen->add_option("--iterations", g_iterations, "composition rounds (onto-iter)");
    gen->add_option("--q", g_q, "plane order (projplane)");
    gen->add_option("--preset", g_preset, "parity-and regime: n | size | gate");
    gen->add_option("--s", g_s, "formula size budget (presets)");
    gen->add_option("--g", g_g, "gate count budget (presets)");
    gen->add_option("--fraction", g_fraction, "input fraction for the n-limited preset")
        ->capture_default_str();
    gen->add_option("--matrix", g_matrix, "bit matrix rows, e.g. 10;01 (bvpv, bmpv)");
    gen->add_option("--kind", g_kind, "identity | ones | random (bvpv, bmpv)")
        ->capture_default_str();
    gen->add_option("--seed", seed, "seed for --kind random")->capture_default_str();
    gen->add_option("--variant", g_variant, "bmpv variant: a (C=J) or b (general)")
        ->capture_default_str();
    add_io(gen, true);

    auto* cert = app.add_subcommand("cert", "exact certificate complexity (tiny inputs)");
    cert->add_option("file", in_path, "circuit file");
    add_io(cert, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage complaint
        return code == 0 ? 0 : 2;
    }

    try {
        if (stats->parsed()) {
            rmf::Circuit c = load_circuit(in_path);
            rmf::Metrics m = rmf::metrics(c);
            rmf::BoundReport b = rmf::upper_bound(m);
            if (json_mode) {
                rmf::Json j;
                j["metrics"] = rmf::to_json(m);
                j["bound"] = rmf::to_json(b);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "n = " << m.n << "\nS = " << m.S.str() << "\nG = " << m.G
                          << "\ndepth = " << m.depth
                          << "\nalternation_depth = " << m.alternation_depth
                          << "\nmax_gate_fanout = " << m.max_gate_fanout
                          << "\nis_formula = " << (m.is_formula ? "true" : "false")
                          << "\nupper = " << fmt_double(b.upper) << " (" << active_term_name(b.active_term)
                          << ", " << regime_name(b.regime) << ")\n";
            }
        } else if (eval->parsed()) {
            rmf::Circuit c = load_circuit(in_path);
            rmf::Assignment x = parse_assignment(c, assign_spec);
            if (count_mode) {
                rmf::QueryLedger ledger;
                bool v = rmf::evaluate_counting(c, x, ledger);
                if (json_mode) {
                    rmf::Json j;
                    j["value"] = v ? 1 : 0;
                    j["ledger"] = rmf::to_json(ledger);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (v ? 1 : 0) << "\n";
                    std::cerr << "queries charged: " << ledger.charged << "\n";
                }
            } else {
                bool v = rmf::evaluate(c, x);
                if (json_mode) {
                    rmf::Json j;
                    j["value"] = v ? 1 : 0;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (v ? 1 : 0) << "\n";
                }
            }
        } else if (mono->parsed()) {
            rmf::Circuit c = load_circuit(in_path);
            rmf::TopKind want = rmf::TopKind::Any;
            if (top_spec == "and")
                want = rmf::TopKind::And;
            else if (top_spec == "or")
                want = rmf::TopKind::Or;
            else if (top_spec != "any")
                throw rmf::Error(rmf::Errc::BadParams, "--top wants and, or, any");
            rmf::MonotonizeResult res = rmf::monotonize(c, want);
            if (json_mode) {
                rmf::Json j;
                j["negated"] = res.negated;
                rmf::Json lits;
                for (std::size_t i = 0; i < res.literals.base.size(); ++i)
                    lits[res.literals.base[i]] = {res.literals.lits[i].first,
                                                  res.literals.lits[i].second};
                j["literals"] = std::move(lits);
                j["circuit"] = rmf::print(res.circuit);
                write_all(out_path, j.dump(2) + "\n");
            } else {
                write_all(out_path, rmf::print(res.circuit));
                if (res.negated)
                    std::cerr << "note: top-gate request required negating the function\n";
            }
        } else if (comp->parsed()) {
            rmf::Circuit f = load_circuit(in_path);
            rmf::Circuit g = load_circuit(in2_path);
            rmf::ComposeResult res = rmf::compose(f, g);
            if (json_mode) {
                rmf::Json j;
                j["g_dualized"] = res.g_dualized;
                j["blocks"] = res.blocks;
                j["block_size"] = res.block_size;
                j["metrics"] = rmf::to_json(rmf::metrics(res.circuit));
                j["circuit"] = rmf::print(res.circuit);
                write_all(out_path, j.dump(2) + "\n");
            } else {
                write_all(out_path, rmf::print(res.circuit));
            }
        } else if (simp->parsed()) {
            write_all(out_path, rmf::print(rmf::simplify(load_circuit(in_path))));
        } else if (prune_cmd->parsed()) {
            rmf::Circuit c = load_circuit(in_path);
            rmf::Assignment x = parse_assignment(c, assign_spec);
            rmf::SearchConfig cfg;
            cfg.alpha = alpha;
            cfg.budget_factor = budget;
            cfg.rng_seed = seed;
            rmf::PruneResult res = rmf::prune(c, x, cfg);
            rmf::AuditResult audit = rmf::ledger_audit(res.report, rmf::metrics(c), cfg);
            rmf::Json rj;
            rj["report"] = rmf::to_json(res.report);
            rj["audit"] = rmf::to_json(audit);
            if (json_mode) {
                rmf::Json j = rj;
                j["circuit"] = rmf::print(res.circuit);
                write_all(out_path, j.dump(2) + "\n");
            } else {
                write_all(out_path, rmf::print(res.circuit));
                std::cerr << "pruning: S " << res.report.s_before.str() << " -> "
                          << res.report.s_after.str() << ", charged " << res.report.ledger.charged
                          << ", audit " << (audit.pass ? "pass" : "FAIL " + audit.detail) << "\n";
            }
            if (!report_path.empty())
                write_all(report_path, rj.dump(2) + "\n");
        } else if (gen->parsed()) {
            std::optional<rmf::InstanceRecord> rec;
            if (family == "parity") {
                rec = rmf::gen_parity(g_n);
            } else if (family == "parity-and") {
                if (!g_preset.empty()) {
                    rmf::InstanceRegime reg;
                    if (g_preset == "n")
                        reg = rmf::InstanceRegime::NLimited;
                    else if (g_preset == "size")
                        reg = rmf::InstanceRegime::SizeLimited;
                    else if (g_preset == "gate")
                        reg = rmf::InstanceRegime::GateLimited;
                    else
                        throw rmf::Error(rmf::Errc::BadParams, "--preset wants n, size, gate");
                    rec = rmf::gen_regime_preset(reg, g_n, g_s, g_g, g_fraction);
                } else {
                    rec = rmf::gen_parity_and(g_n, g_m);
                }
            } else if (family == "onto") {
                rec = rmf::gen_onto(g_n);
            } else if (family == "onto-iter") {
                rec = rmf::gen_onto_iter(g_n, g_iterations);
            } else if (family == "ed") {
                rec = rmf::gen_ed(g_n);
            } else if (family == "ed-and") {
                rec = rmf::gen_ed_and(g_n);
            } else if (family == "bvpv") {
                rec = rmf::gen_bvpv(matrix_from_options(g_matrix, g_kind, g_n, seed));
            } else if (family == "bmpv") {
                rmf::BmpvPair pair = rmf::gen_bmpv(matrix_from_options(g_matrix, g_kind, g_n, seed));
                if (g_variant == "a")
                    rec = std::move(pair.c_equals_j);
                else if (g_variant == "b")
                    rec = std::move(pair.general);
                else
                    throw rmf::Error(rmf::Errc::BadParams, "--variant wants a or b");
            } else if (family == "projplane") {
                rec = rmf::gen_projective_plane(g_q).second;
            } else {
                throw rmf::Error(rmf::Errc::BadParams, "unknown family '" + family + "'");
            }
            emit_instance(*rec, out_path, json_mode);
        } else if (cert->parsed()) {
            rmf::CertificateReport rep = rmf::certificate_complexity(load_circuit(in_path));
            if (json_mode) {
                std::cout << rmf::to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "C0 = " << rep.c0 << (rep.has_zero_input ? "" : " (no 0-inputs)")
                          << "\nC1 = " << rep.c1 << (rep.has_one_input ? "" : " (no 1-inputs)")
                          << "\n";
            }
        }
    } catch (const rmf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
