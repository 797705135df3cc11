#include "ulab/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulab/core_ring.hpp"
#include "ulab/errors.hpp"
#include "ulab/experiments.hpp"
#include "ulab/gowers.hpp"
#include "ulab/katai.hpp"
#include "ulab/kernels.hpp"
#include "ulab/multiplicative.hpp"
#include "ulab/quadforms.hpp"
#include "ulab/spectral.hpp"

namespace ulab {

namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expect, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw input_error(std::string("invalid integer in --") + what + ": '" + item + "'");
        }
    }
    if (expect != 0 && out.size() != expect) {
        throw input_error(std::string("--") + what + " expects " + std::to_string(expect) + " comma-separated integers");
    }
    return out;
}

LinearFormsPattern parse_pattern(const std::string& text) {
    const auto v = parse_int_list(text, 3, "ell");
    return LinearFormsPattern(v[0], v[1], v[2]);
}

QuadraticForm parse_form(const std::string& text) {
    const auto v = parse_int_list(text, 6, "form");
    return QuadraticForm{v[0], v[1], v[2], v[3], v[4], v[5]};
}

/// One entry per line: "<chi-spec> [weight]". '#' starts a comment.
std::vector<std::pair<MultiplicativeFunction, double>> load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open family file '" + path + "'");
    std::vector<std::pair<MultiplicativeFunction, double>> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string spec;
        if (!(ls >> spec)) continue;
        double weight = -1.0;
        ls >> weight;
        out.emplace_back(MultiplicativeFunction::parse(spec), weight);
    }
    if (out.empty()) throw input_error("family file '" + path + "' has no entries");
    bool any_weight = false;
    for (const auto& [chi, w] : out) any_weight = any_weight || w >= 0.0;
    for (auto& [chi, w] : out) {
        if (!any_weight) {
            w = 1.0 / static_cast<double>(out.size());
        } else if (w < 0.0) {
            throw input_error("family file mixes weighted and unweighted entries");
        }
    }
    return out;
}

std::vector<double> load_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open schedule file '" + path + "'");
    std::vector<double> out;
    double v = 0.0;
    while (in >> v) out.push_back(v);
    if (out.empty()) throw input_error("schedule file '" + path + "' has no entries");
    return out;
}

std::vector<std::pair<MultiplicativeFunction, double>> default_weights() {
    std::vector<std::pair<MultiplicativeFunction, double>> out;
    for (auto& chi : default_test_family(0, 0)) out.emplace_back(std::move(chi), 0.2);
    return out;
}

std::vector<MultiplicativeFunction> members_of(const std::vector<std::pair<MultiplicativeFunction, double>>& w) {
    std::vector<MultiplicativeFunction> out;
    out.reserve(w.size());
    for (const auto& [chi, weight] : w) out.push_back(chi);
    return out;
}

json complex_json(const cdouble& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

double reconstruction_error(const DecompositionResult& r, const TruncatedSignal& chiN) {
    double worst = 0.0;
    for (std::size_t i = 0; i < chiN.values.size(); ++i) {
        worst = std::max(worst, std::abs(r.chi_s.values()[i] + r.chi_u.values()[i] + r.chi_e.values()[i] -
                                         chiN.values[i]));
    }
    return worst;
}

json decomposition_json(const DecompositionResult& r, const TruncatedSignal& chiN, bool energy_mode) {
    json doc{{"Q", r.Q},
             {"theta", r.theta},
             {"lipschitz_bound", r.lipschitz_bound},
             {"measured_lipschitz", r.measured_lipschitz},
             {"sup_chi_s", r.sup_chi_s},
             {"u2_chi_u", r.measured_u2},
             {"reconstruction_error", reconstruction_error(r, chiN)}};
    if (r.measured_u3) doc["u3_chi_u"] = *r.measured_u3;
    if (energy_mode) {
        doc["j0"] = r.j0;
        doc["epsilon"] = r.epsilon;
        doc["energies"] = r.energies;
        doc["chi_e_weighted_l1"] = r.chi_e_weighted_l1;
    }
    return doc;
}

void write_components_csv(const DecompositionResult& r, std::ostream& out) {
    out << "n,s_re,s_im,u_re,u_im,e_re,e_im\n";
    for (std::size_t i = 0; i < r.chi_s.values().size(); ++i) {
        out << i << ',' << r.chi_s.values()[i].real() << ',' << r.chi_s.values()[i].imag() << ','
            << r.chi_u.values()[i].real() << ',' << r.chi_u.values()[i].imag() << ','
            << r.chi_e.values()[i].real() << ',' << r.chi_e.values()[i].imag() << '\n';
    }
}

struct CommonOptions {
    std::string chi_spec = "one";
    std::int64_t N = 100;
    std::string ell = "1,2,3";
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

std::ostream& pick_stream(const CommonOptions& opts, std::ostream& fallback, std::ofstream& file) {
    if (opts.out_path.empty()) return fallback;
    file.open(opts.out_path);
    if (!file) throw input_error("cannot open output path '" + opts.out_path + "'");
    return file;
}

void emit(const json& doc, const CommonOptions& opts, std::ostream& fallback) {
    std::ofstream file;
    auto& os = pick_stream(opts, fallback, file);
    os << doc.dump(2) << '\n';
}

int selftest(std::ostream& out, const CommonOptions& opts) {
    json checks = json::array();
    auto check = [&](const char* name, bool ok) {
        checks.push_back(json{{"name", name}, {"ok", ok}});
        if (!ok) throw estimation_error(std::string("selftest failed: ") + name);
    };

    const Modulus m601 = select_modulus(10, 6);
    check("modulus_selection", m601.ntilde == 601 && is_prime_trial_division(601));

    {
        std::vector<cdouble> v(601);
        std::uint64_t state = 12345;
        for (auto& x : v) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            x = std::polar(1.0, 2.0 * 3.141592653589793 * static_cast<double>(state >> 11) / 9007199254740992.0);
        }
        const CyclicSignal f(601, v);
        const auto back = idft(f.spectrum(), 601);
        double worst = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(back.values()[i] - v[i]));
        check("dft_roundtrip", worst < 1e-10);

        const CyclicSignal g(61, {v.begin(), v.begin() + 61});
        check("u2_identity", std::abs(u2_norm(g) - u2_norm_direct(g)) < 1e-9);
        check("u3_identity", std::abs(u3_norm(g) - u3_norm_direct(g)) < 1e-9);
    }

    {
        const Kernel fej = fejer_kernel(11, 2);
        const auto spec = fej.signal().spectrum();
        check("fejer_spectrum", std::abs(spec[0] - 1.0) < 1e-10 && std::abs(spec[1] - 0.5) < 1e-10 &&
                                    std::abs(spec[10] - 0.5) < 1e-10 && std::abs(spec[5]) < 1e-10);
        const KernelParams params{6, 3, 0.7};
        const Kernel phi = uniformity_kernel(601, 6, 3, 0.7);
        const auto phi_spec = phi.signal().spectrum();
        double worst = 0.0;
        for (std::int64_t xi = 0; xi < 601; ++xi) {
            worst = std::max(worst, std::abs(phi_spec[static_cast<std::size_t>(xi)] -
                                             kernel_coefficient(params, 601, xi)));
        }
        check("kernel_closed_form", worst < 1e-10);
    }

    {
        const auto report = verify_worked_identities();
        check("worked_identities", report.pythagorean_like && report.xy_mixed);
        const QuadraticForm p{16, 9, -1, 0, 0, 0};
        const auto [pattern, cert] = normalize_to_ell(p);
        check("normalization_certificate", cert.symbolic_zero);
    }

    check("theta_set_count", theta_set(10, LinearFormsPattern(1, 2, 3)).pairs.size() == 12);

    json doc{{"status", "ok"}, {"checks", checks}};
    emit(doc, opts, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral toolkit for uniformity norms, kernel decompositions, and quadratic-form solution families"};
    app.require_subcommand(1);

    CommonOptions opts;
    // Subcommand-specific knobs.
    double theta = 0.3;
    std::int64_t Q = 0, V = 0;
    double epsilon = 0.0;
    std::string schedule_path, family_path, form_text, coloring_spec = "trivial", pattern_text, set_spec = "odd";
    std::int64_t K0 = 1, K = 30, bound = 2000, grid = 0, depth = 3, cap = 3;
    std::size_t family_size = 50;
    bool with_u3 = false, no_refine = false, uniform_part = false;

    auto add_common = [&](CLI::App* cmd, bool wants_chi) {
        if (wants_chi) {
            cmd->add_option("--chi", opts.chi_spec, "one|minus-at-2|phase:<alpha>|random:<seed>|charlike:<q>");
            cmd->add_option("--N", opts.N, "truncation length");
            cmd->add_option("--ell", opts.ell, "l1,l2,l3");
        }
        cmd->add_option("--seed", opts.seed, "seed for randomized families");
        cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
        cmd->add_option("--format", opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opts.out_path, "output path (default: standard output)");
    };

    auto* cmd_gowers = app.add_subcommand("gowers", "U2 and U3 norms of the truncated function");
    add_common(cmd_gowers, true);

    auto* cmd_decompose = app.add_subcommand("decompose", "structured/uniform decomposition");
    add_common(cmd_decompose, true);
    cmd_decompose->add_option("--theta", theta, "kernel parameter");
    cmd_decompose->add_option("--Q", Q, "override Q (default: family estimate)");
    cmd_decompose->add_option("--V", V, "override V (default: family estimate)");
    cmd_decompose->add_option("--epsilon", epsilon, "energy-increment mode with this epsilon");
    cmd_decompose->add_option("--schedule", schedule_path, "theta schedule file (one value per line)");
    cmd_decompose->add_option("--family", family_path, "family file: '<chi-spec> [weight]' per line");
    cmd_decompose->add_flag("--with-u3", with_u3, "also measure the U3 norm of chi_u");

    auto* cmd_katai = app.add_subcommand("katai", "prime-pair orthogonality statistic");
    add_common(cmd_katai, true);
    cmd_katai->add_option("--K0", K0, "lower prime cutoff");
    cmd_katai->add_option("--K", K, "upper prime cutoff");
    cmd_katai->add_option("--family-size", family_size, "random members in the correlation family");

    auto* cmd_qcorr = app.add_subcommand("qcorr", "quadratic-phase correlation statistic");
    add_common(cmd_qcorr, true);
    cmd_qcorr->add_option("--grid", grid, "grid size (default 4*ntilde)");
    cmd_qcorr->add_flag("--no-refine", no_refine, "skip local refinement");
    cmd_qcorr->add_flag("--uniform", uniform_part, "score chi_u of the weak decomposition instead of chi_N");
    cmd_qcorr->add_option("--theta", theta, "kernel parameter for --uniform");
    cmd_qcorr->add_option("--Q", Q, "override Q for --uniform");
    cmd_qcorr->add_option("--V", V, "override V for --uniform");

    auto* cmd_quadform = app.add_subcommand("quadform", "Exact symbolic analysis of a ternary quadratic form");
    add_common(cmd_quadform, false);
    cmd_quadform->add_option("--form", form_text, "a,b,c,d,e,f")->required();

    auto* cmd_average = app.add_subcommand("average", "recurrence and mixture averages");
    add_common(cmd_average, true);
    cmd_average->add_option("--family", family_path, "mixture family file");

    auto* cmd_density = app.add_subcommand("density", "multiplicative density on a truncated Folner set");
    add_common(cmd_density, false);
    cmd_density->add_option("--set", set_spec, "odd|all|mod:<q>:<r>");
    cmd_density->add_option("--depth", depth, "number of primes");
    cmd_density->add_option("--cap", cap, "exponent cap");

    auto* cmd_search = app.add_subcommand("search", "monochromatic solution search");
    add_common(cmd_search, false);
    cmd_search->add_option("--form", form_text, "a,b,c,d,e,f (z-solvability scan)");
    cmd_search->add_option("--pattern", pattern_text, "l0,l1,l2,l3 (parametric box scan)");
    cmd_search->add_option("--coloring", coloring_spec, "trivial|residue:<q>|7adic");
    cmd_search->add_option("--bound", bound, "search bound");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in invariant battery");
    add_common(cmd_selftest, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << json{{"type", "parse"}, {"error", e.what()}}.dump(2) << '\n';
        return 1;
    }

    try {
        if (opts.threads != 0) set_thread_count(opts.threads);

        if (cmd_selftest->parsed()) return selftest(out, opts);

        if (cmd_gowers->parsed()) {
            const auto pattern = parse_pattern(opts.ell);
            const auto chi = MultiplicativeFunction::parse(opts.chi_spec);
            const Modulus modulus = select_modulus(opts.N, pattern.ell());
            const CyclicSignal f = to_signal(truncate(chi, modulus));
            const auto [u2, u3] = monotonicity_check(f);
            emit(json{{"chi", chi.label()}, {"N", opts.N}, {"ntilde", modulus.ntilde}, {"u2", u2}, {"u3", u3}},
                 opts, out);
            return 0;
        }

        if (cmd_decompose->parsed()) {
            const auto pattern = parse_pattern(opts.ell);
            const auto chi = MultiplicativeFunction::parse(opts.chi_spec);
            const Modulus modulus = select_modulus(opts.N, pattern.ell());
            const TruncatedSignal chiN = truncate(chi, modulus);
            const auto weights = family_path.empty() ? default_weights() : load_family_file(family_path);

            DecompositionResult result{CyclicSignal(modulus.ntilde, chiN.values),
                                       CyclicSignal(modulus.ntilde, chiN.values),
                                       CyclicSignal(modulus.ntilde, chiN.values)};
            bool energy_mode = epsilon > 0.0;
            json doc;
            if (energy_mode) {
                const auto J = static_cast<std::size_t>(1 + std::llround(std::ceil(2.0 / (epsilon * epsilon))));
                std::vector<double> thetas;
                std::vector<std::pair<std::int64_t, std::int64_t>> qv;
                if (!schedule_path.empty()) {
                    thetas = load_schedule_file(schedule_path);
                    qv = make_qv_schedule(opts.N, modulus.ntilde, thetas, members_of(weights));
                } else {
                    const auto plan = plan_schedules(opts.N, modulus.ntilde, theta, J + 1, members_of(weights));
                    thetas = plan.thetas;
                    qv = plan.qv;
                }
                result = u3_energy_decompose(chiN, thetas, weights, epsilon, qv, with_u3);
                doc = decomposition_json(result, chiN, true);
                doc["theta_schedule"] = thetas;
            } else {
                std::int64_t q = Q, v = V;
                if (q == 0 || v == 0) {
                    const auto est = estimate_qv(opts.N, modulus.ntilde, theta, members_of(weights));
                    if (q == 0) q = est.Q;
                    if (v == 0) v = est.V;
                }
                result = u2_decompose(chiN, q, v, theta, with_u3);
                doc = decomposition_json(result, chiN, false);
                doc["V"] = v;
            }
            doc["chi"] = chi.label();
            doc["N"] = opts.N;
            doc["ntilde"] = modulus.ntilde;
            doc["mode"] = energy_mode ? "energy" : "u2";
            if (opts.format == "csv") {
                std::ofstream file;
                auto& os = pick_stream(opts, out, file);
                write_components_csv(result, os);
            } else {
                emit(doc, opts, out);
            }
            return 0;
        }

        if (cmd_katai->parsed()) {
            const auto chi = MultiplicativeFunction::parse(opts.chi_spec);
            const auto values = evaluate_range(chi, opts.N);
            const auto report = katai_statistic(values, K0, K);
            const double corr = chi_correlation(values, default_test_family(family_size, opts.seed));
            emit(json{{"chi", chi.label()},
                      {"N", opts.N},
                      {"K0", report.K0},
                      {"K", report.K},
                      {"pair_statistic", report.pair_statistic},
                      {"argmax_pair", json::array({report.argmax_pair.first, report.argmax_pair.second})},
                      {"chi_correlation", corr},
                      {"window_warning", report.window_warning}},
                 opts, out);
            return 0;
        }

        if (cmd_qcorr->parsed()) {
            const auto pattern = parse_pattern(opts.ell);
            const auto chi = MultiplicativeFunction::parse(opts.chi_spec);
            const Modulus modulus = select_modulus(opts.N, pattern.ell());
            const TruncatedSignal chiN = truncate(chi, modulus);
            CyclicSignal target = to_signal(chiN);
            json extra;
            if (uniform_part) {
                std::int64_t q = Q, v = V;
                if (q == 0 || v == 0) {
                    const auto est = estimate_qv(opts.N, modulus.ntilde, theta, members_of(default_weights()));
                    if (q == 0) q = est.Q;
                    if (v == 0) v = est.V;
                }
                auto dec = u2_decompose(chiN, q, v, theta);
                target = dec.chi_u;
                extra = json{{"Q", q}, {"V", v}, {"theta", theta}};
            }
            const std::int64_t grid_size = grid > 0 ? grid : 4 * modulus.ntilde;
            const auto result = quadratic_phase_correlation(target, grid_size, !no_refine);
            json doc{{"chi", chi.label()}, {"N", opts.N},        {"ntilde", modulus.ntilde},
                     {"grid", grid_size},  {"alpha", result.alpha}, {"value", result.value},
                     {"part", uniform_part ? "chi_u" : "chi_N"}};
            if (!extra.is_null()) doc["decomposition"] = extra;
            emit(doc, opts, out);
            return 0;
        }

        if (cmd_quadform->parsed()) {
            const QuadraticForm p = parse_form(form_text);
            const auto deltas = discriminants(p);
            const auto status = check_hypothesis(p);
            json doc{{"form", p.to_string()},
                     {"deltas", json::array({deltas.d1.str(), deltas.d2.str(), deltas.d3.str()})},
                     {"hypothesis", status.satisfied ? "SATISFIED" : "FAILED"},
                     {"diagnosis", status.diagnosis}};
            if (status.satisfied) {
                const auto base = base_solution(p);
                const auto family = parametric_family(p);
                const auto [pattern, cert] = normalize_to_ell(p);
                doc["base_solution"] = json::array({base.x0.str(), base.y0.str(), base.z0.str()});
                doc["family"] = json{{"x", family.x_poly().to_string()},
                                     {"y", family.y_poly().to_string()},
                                     {"z", family.z_poly().to_string()}};
                doc["ell_pattern"] = json::array(
                    {pattern.ell0.str(), pattern.ell1.str(), pattern.ell2.str(), pattern.ell3.str()});
                doc["certificate"] = json{{"z_poly", cert.z_poly.to_string()},
                                          {"symbolic_zero", cert.symbolic_zero},
                                          {"box_checks", cert.box_checks},
                                          {"degeneracy_flags", cert.degeneracy_flags}};
            }
            emit(doc, opts, out);
            return status.satisfied ? 0 : 2;
        }

        if (cmd_average->parsed()) {
            const auto pattern = parse_pattern(opts.ell);
            const Modulus modulus = select_modulus(opts.N, pattern.ell());
            json doc{{"N", opts.N}, {"ntilde", modulus.ntilde},
                     {"ell", json::array({pattern.l1, pattern.l2, pattern.l3})}};
            const auto theta_pairs = theta_set(opts.N, pattern);
            doc["theta_pairs"] = theta_pairs.pairs.size();
            doc["theta_ratio"] =
                static_cast<double>(theta_pairs.pairs.size()) / (static_cast<double>(opts.N) * static_cast<double>(opts.N));
            if (!family_path.empty()) {
                const auto weights = load_family_file(family_path);
                doc["mixture"] = complex_json(mixture_average(weights, pattern, modulus));
            } else {
                const auto chi = MultiplicativeFunction::parse(opts.chi_spec);
                doc["chi"] = chi.label();
                doc["recurrence"] = complex_json(recurrence_average(chi, pattern, opts.N));
            }
            emit(doc, opts, out);
            return 0;
        }

        if (cmd_density->parsed()) {
            std::function<bool(const BigInt&)> predicate;
            if (set_spec == "odd") {
                predicate = [](const BigInt& v) { return v % 2 != 0; };
            } else if (set_spec == "all") {
                predicate = [](const BigInt&) { return true; };
            } else if (set_spec.rfind("mod:", 0) == 0) {
                std::string rest_text = set_spec.substr(4);
                for (auto& ch : rest_text) {
                    if (ch == ':') ch = ',';
                }
                const auto rest = parse_int_list(rest_text, 0, "set");
                if (rest.size() != 2) throw input_error("--set mod:<q>:<r> expects two integers");
                const BigInt q = rest[0], r = rest[1];
                predicate = [q, r](const BigInt& v) { return v % q == r; };
            } else {
                throw input_error("unknown --set '" + set_spec + "'");
            }
            emit(json{{"set", set_spec},
                      {"depth", depth},
                      {"cap", cap},
                      {"density", multiplicative_density(predicate, depth, cap)}},
                 opts, out);
            return 0;
        }

        if (cmd_search->parsed()) {
            const Coloring coloring = Coloring::parse(coloring_spec);
            json doc{{"coloring", coloring.label}, {"bound", bound}};
            json hits = json::array();
            std::size_t total = 0;
            if (!form_text.empty()) {
                const auto found = coloring_search(parse_form(form_text), coloring, bound);
                total = found.size();
                for (std::size_t i = 0; i < std::min<std::size_t>(found.size(), 100); ++i) {
                    hits.push_back(json{{"x", found[i].x}, {"y", found[i].y}, {"n", found[i].n}, {"cell", found[i].cell}});
                }
                doc["form"] = form_text;
            } else if (!pattern_text.empty()) {
                const auto v = parse_int_list(pattern_text, 4, "pattern");
                const EllPattern pattern{v[0], v[1], v[2], v[3]};
                const auto found = coloring_search(pattern, coloring, bound);
                total = found.size();
                for (std::size_t i = 0; i < std::min<std::size_t>(found.size(), 100); ++i) {
                    hits.push_back(json{{"k", found[i].k},
                                        {"m", found[i].m},
                                        {"n", found[i].n},
                                        {"x", found[i].x},
                                        {"y", found[i].y},
                                        {"cell", found[i].cell}});
                }
                doc["pattern"] = pattern_text;
            } else {
                throw input_error("search requires --form or --pattern");
            }
            doc["hit_count"] = total;
            doc["hits"] = hits;
            if (opts.format == "csv") {
                std::ofstream file;
                auto& os = pick_stream(opts, out, file);
                os << "x,y,n,cell\n";
                for (const auto& h : hits) {
                    os << h.value("x", 0LL) << ',' << h.value("y", 0LL) << ',' << h.value("n", 0LL) << ','
                       << h.value("cell", 0) << '\n';
                }
            } else {
                emit(doc, opts, out);
            }
            return 0;
        }

        throw input_error("no subcommand selected");
    } catch (const input_error& e) {
        err << json{{"type", "input"}, {"error", e.what()}}.dump(2) << '\n';
        return 1;
    } catch (const hypothesis_error& e) {
        err << json{{"type", "hypothesis"}, {"error", e.what()}}.dump(2) << '\n';
        return 2;
    } catch (const estimation_error& e) {
        err << json{{"type", "estimation"}, {"error", e.what()}}.dump(2) << '\n';
        return 2;
    } catch (const schedule_error& e) {
        err << json{{"type", "schedule"}, {"error", e.what()}}.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << json{{"type", "internal"}, {"error", e.what()}}.dump(2) << '\n';
        return 1;
    }
}

}  // namespace ulab
