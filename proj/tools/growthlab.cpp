/* growthlab command line: exact Cayley-ball experiments, growth-type
 * function algebra and length-function constructions, with CSV/JSON
 * artifacts and CI-friendly exit codes:
 *
 *   0  success, all assertions passed
 *   1  an assertion or search failed
 *   2  configuration error
 *   3  memory budget exceeded
 */

#include "growthlab/experiments.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <variant>

namespace gl = growthlab;

namespace {

using AnyGroup =
    std::variant<gl::ZdGroup, gl::FreeGroup, gl::HeisenbergGroup, gl::BS12Group>;

AnyGroup parse_group(const std::string& id)
{
    if (id.rfind("z^", 0) == 0)
        return gl::ZdGroup(std::stoi(id.substr(2)));
    if (id.rfind("free:", 0) == 0)
        return gl::FreeGroup(std::stoi(id.substr(5)));
    if (id == "heis3")
        return gl::HeisenbergGroup{true};
    if (id == "heis3:ab")
        return gl::HeisenbergGroup{false};
    if (id == "bs12")
        return gl::BS12Group{};
    throw std::invalid_argument("unknown group '" + id +
                                "' (expected z^d, free:k, heis3, heis3:ab or bs12)");
}

std::size_t default_budget()
{
    if (const char* env = std::getenv("GROWTHLAB_BUDGET"))
        return static_cast<std::size_t>(std::stoull(env));
    return gl::kDefaultBallBudget;
}

void emit(const std::string& out, const std::string& content)
{
    if (out.empty())
        std::cout << content;
    else
        gl::write_file(out, content);
}

std::string render_table(const gl::FunctionTable& t, const std::string& format)
{
    if (format == "csv")
        return t.to_csv();
    if (format == "json")
        return t.to_json();
    throw std::invalid_argument("unknown format '" + format + "'");
}

std::string witness_json(const std::optional<gl::EquivalenceWitness>& w,
                         const std::string& relation)
{
    nlohmann::json j;
    j["relation"] = relation;
    j["found"] = w.has_value();
    if (w) {
        j["c"] = w->c;
        j["verified_range"] = {w->r_min, w->r_max};
    }
    return j.dump() + "\n";
}

struct FitRange {
    int lo = 0, hi = 0;
    bool active() const { return hi > 0; }
};

FitRange parse_fit(const std::string& s)
{
    if (s.empty())
        return {};
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--fit expects rmin:rmax");
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"growthlab: exact growth, distortion and length-function experiments"};
    app.require_subcommand(1);

    std::string group_id = "z^2", subgroup_id = "axis:0", input, input_g, out,
                format = "csv", relation = "approx", preset, fit_spec, surrogate = "poly";
    int radius = 8, c_max = 64, count = 4, k_max = 64;
    std::int64_t horizon = 200, cap = 1 << 20;
    std::size_t budget = default_budget();
    std::uint64_t seed = 7;

    std::function<int()> action;

    auto* cmd_ball = app.add_subcommand("ball", "enumerate a Cayley ball, export key,length");
    cmd_ball->add_option("--group", group_id);
    cmd_ball->add_option("--radius", radius);
    cmd_ball->add_option("--budget", budget);
    cmd_ball->add_option("--out", out);
    cmd_ball->callback([&] {
        action = [&]() {
            std::visit(
                [&](const auto& g) {
                    const auto b = gl::ball(g, radius, budget);
                    emit(out, b.to_csv());
                    std::cerr << g.name() << " ball(" << radius << "): " << b.size()
                              << " elements\n";
                },
                parse_group(group_id));
            return 0;
        };
    });

    auto* cmd_growth = app.add_subcommand("growth", "tabulate g_G(r) for r = 1..R");
    cmd_growth->add_option("--group", group_id);
    cmd_growth->add_option("--radius", radius);
    cmd_growth->add_option("--budget", budget);
    cmd_growth->add_option("--out", out);
    cmd_growth->add_option("--format", format);
    cmd_growth->add_option("--fit", fit_spec, "log-log slope over rmin:rmax");
    cmd_growth->callback([&] {
        action = [&]() {
            std::visit(
                [&](const auto& g) {
                    const auto t = gl::ball(g, radius, budget).growth();
                    emit(out, render_table(t, format));
                    if (const auto fr = parse_fit(fit_spec); fr.active()) {
                        const auto fit = gl::fit_loglog_slope(t, fr.lo, fr.hi);
                        std::cerr << "slope=" << fit.slope << " rss=" << fit.rss << "\n";
                    }
                },
                parse_group(group_id));
            return 0;
        };
    });

    const auto add_subgroup_cmd = [&](CLI::App* cmd, bool want_distortion) {
        cmd->add_option("--group", group_id);
        cmd->add_option("--subgroup", subgroup_id);
        cmd->add_option("--radius", radius);
        cmd->add_option("--budget", budget);
        cmd->add_option("--out", out);
        cmd->add_option("--format", format);
        cmd->add_option("--fit", fit_spec);
        cmd->callback([&, want_distortion] {
            action = [&, want_distortion]() {
                std::visit(
                    [&](const auto& g) {
                        const auto b = gl::ball(g, radius, budget);
                        const auto sub = gl::make_subgroup(g, subgroup_id);
                        const auto t = want_distortion ? gl::distortion(b, sub)
                                                       : gl::relative_growth(b, sub);
                        emit(out, render_table(t, format));
                        if (const auto fr = parse_fit(fit_spec); fr.active()) {
                            const auto fit = gl::fit_loglog_slope(t, fr.lo, fr.hi);
                            std::cerr << "slope=" << fit.slope << " rss=" << fit.rss << "\n";
                        }
                    },
                    parse_group(group_id));
                return 0;
            };
        });
    };
    add_subgroup_cmd(app.add_subcommand("relgrowth", "tabulate g_H^G(r)"), false);
    add_subgroup_cmd(app.add_subcommand("distortion", "tabulate the distortion of H in G"),
                     true);

    auto* cmd_closure = app.add_subcommand("closure", "superadditive closure of a table");
    cmd_closure->add_option("--input", input)->required();
    cmd_closure->add_option("--out", out);
    cmd_closure->add_option("--format", format);
    cmd_closure->callback([&] {
        action = [&]() {
            const auto f = gl::FunctionTable::from_csv_file(input);
            emit(out, render_table(gl::superadditive_closure(f), format));
            return 0;
        };
    });

    auto* cmd_equiv =
        app.add_subcommand("equiv", "witness search for the ~, approx or theta relations");
    cmd_equiv->add_option("--f", input)->required();
    cmd_equiv->add_option("--g", input_g)->required();
    cmd_equiv->add_option("--relation", relation, "sim | approx | theta");
    cmd_equiv->add_option("--cmax", c_max);
    cmd_equiv->callback([&] {
        action = [&]() {
            const auto f = gl::FunctionTable::from_csv_file(input);
            const auto g = gl::FunctionTable::from_csv_file(input_g);
            std::optional<gl::EquivalenceWitness> w;
            if (relation == "sim")
                w = gl::preceq_sim(f, g, c_max);
            else if (relation == "approx")
                w = gl::preceq_approx(f, g, c_max);
            else if (relation == "theta")
                w = gl::theta_equiv(f, g, c_max);
            else
                throw std::invalid_argument("unknown relation '" + relation + "'");
            emit(out, witness_json(w, relation));
            return w ? 0 : 1;
        };
    });

    auto* cmd_cd = app.add_subcommand("check-cd", "(C) condition report for a length table");
    cmd_cd->add_option("--input", input)->required();
    cmd_cd->add_option("--out", out);
    cmd_cd->callback([&] {
        action = [&]() {
            const auto l = gl::LengthTable::from_csv_text([&] {
                std::ifstream in(input);
                if (!in)
                    throw std::invalid_argument("cannot open " + input);
                std::ostringstream ss;
                ss << in.rdbuf();
                return ss.str();
            }());
            const auto rep = gl::check_C(l);
            emit(out, rep.to_json() + "\n");
            return rep.all_ok() ? 0 : 1;
        };
    });

    auto* cmd_build =
        app.add_subcommand("lenfun-build", "inverse construction from a superadditive target");
    cmd_build->add_option("--target", input)->required();
    cmd_build->add_option("--cap", cap, "horizon cap for the output table");
    cmd_build->add_option("--out", out);
    cmd_build->callback([&] {
        action = [&]() {
            const auto f = gl::FunctionTable::from_csv_file(input);
            emit(out, gl::build_from_superadditive(f, cap).to_csv());
            return 0;
        };
    });

    auto* cmd_sum = app.add_subcommand("signed-sum", "minimal signed-sum length of a system");
    cmd_sum->add_option("--system", input)->required();
    cmd_sum->add_option("--horizon", horizon);
    cmd_sum->add_option("--out", out);
    cmd_sum->callback([&] {
        action = [&]() {
            std::ifstream in(input);
            if (!in)
                throw std::invalid_argument("cannot open " + input);
            std::ostringstream ss;
            ss << in.rdbuf();
            const auto sys = gl::WeightedSystem::from_json(ss.str());
            emit(out, gl::signed_sum_length(sys, horizon).table.to_csv());
            return 0;
        };
    });

    auto* cmd_seq = app.add_subcommand("seq", "build a sequence pair and re-verify it");
    cmd_seq->add_option("--count", count);
    cmd_seq->add_option("--surrogate", surrogate, "poly | affine");
    cmd_seq->add_option("--out", out);
    cmd_seq->callback([&] {
        action = [&]() {
            const auto seq = gl::build_seq(gl::surrogate_by_id(surrogate), count);
            emit(out, seq.to_json() + "\n");
            bool ok = true;
            for (const auto& c : gl::verify_seq_invariants(seq)) {
                if (!c.pass)
                    std::cerr << "violated: " << c.name << "\n";
                ok = ok && c.pass;
            }
            return ok ? 0 : 1;
        };
    });

    auto* cmd_sc = app.add_subcommand("smallcanc", "small-cancellation word checks");
    auto* cmd_sc_check = cmd_sc->add_subcommand("check", "subword uniqueness and piece ratio");
    cmd_sc_check->add_option("--k-max", k_max);
    cmd_sc_check->add_option("--out", out);
    cmd_sc_check->callback([&] {
        action = [&]() {
            nlohmann::json rows = nlohmann::json::array();
            bool ok = true;
            for (int k = 2; k <= k_max; ++k) {
                const auto rep = gl::subword_uniqueness(gl::build_vk(k));
                const auto ratio = gl::c_prime_ratio(k);
                rows.push_back({{"k", k},
                                {"unique_2km1", rep.unique_2km1},
                                {"repeats_embed", rep.repeats_embed},
                                {"max_repeated", rep.max_repeated},
                                {"strict_variant_ok", rep.strict_variant_ok},
                                {"strict_violation",
                                 rep.strict_violation ? nlohmann::json(*rep.strict_violation)
                                                      : nlohmann::json()},
                                {"ratio", ratio.ratio.str()},
                                {"below_1_10", ratio.below_tenth}});
                ok = ok && rep.pass();
            }
            emit(out, nlohmann::json({{"reports", rows}}).dump(2) + "\n");
            return ok ? 0 : 1;
        };
    });
    cmd_sc->require_subcommand(1);

    auto* cmd_exp = app.add_subcommand("experiment", "run a named preset experiment");
    cmd_exp->add_option("--preset", preset);
    cmd_exp->add_option("--out", out);
    cmd_exp->add_option("--seed", seed);
    cmd_exp->add_option("--budget", budget);
    cmd_exp->add_flag_callback("--list", [&] {
        for (const auto& p : gl::experiment_presets())
            std::cout << p << "\n";
        std::exit(0);
    });
    cmd_exp->callback([&] {
        action = [&]() {
            if (preset.empty())
                throw std::invalid_argument("experiment: --preset is required");
            gl::ExperimentOptions eopt;
            eopt.seed = seed;
            eopt.budget = budget;
            const auto rep = gl::run_experiment(preset, eopt);
            for (const auto& a : rep.assertions)
                std::cerr << (a.pass ? "  ok  " : "  FAIL") << " " << a.name
                          << (a.detail.empty() ? "" : "  [" + a.detail + "]") << "\n";
            std::cerr << rep.preset << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
                      << rep.wall_seconds << " s)\n";
            if (!out.empty()) {
                gl::write_file(out, rep.to_json().dump(2) + "\n");
                const auto dir = std::filesystem::path(out).parent_path();
                for (const auto& [name, content] : rep.artifacts)
                    gl::write_file((dir / (rep.preset + "-" + name)).string(), content);
            }
            return rep.pass() ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const gl::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
