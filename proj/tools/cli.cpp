#include "cli.hpp"

#include "he3oam/clebsch_gordan.hpp"
#include "he3oam/cross_sections.hpp"
#include "he3oam/errors.hpp"
#include "he3oam/experiment.hpp"
#include "he3oam/levels.hpp"
#include "he3oam/reconciliation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#ifndef HE3OAM_VERSION
#define HE3OAM_VERSION "0.0.0"
#endif

namespace he3oam::cli {

namespace {

using nlohmann::json;

/// Bad flag value or malformed argument; exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream& os, const Table& t, Format format) {
    if (format == Format::csv) {
        auto line = [&os](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
            os << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        width[c] = t.header[c].size();
        for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << s << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

std::string fmt_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

json json_double(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Rational parse_polarization_flag(const std::string& flag, const std::string& text) {
    Rational r = parse_flag_rational(flag, text);
    if (r > 1 || r < -1) throw DomainError(flag + ": " + to_string(r) + " is outside [-1, 1]");
    return r;
}

Mode parse_mode_flag(const std::string& text) {
    try {
        return parse_mode(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--mode: ") + e.what());
    }
}

CaptureModel parse_model(Mode mode, const std::string& k_list) {
    if (k_list.empty()) return CaptureModel(mode);
    std::vector<Rational> k;
    std::size_t start = 0;
    while (true) {
        const auto comma = k_list.find(',', start);
        k.push_back(parse_flag_rational("--k", k_list.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return CaptureModel(mode, std::move(k));
    } catch (const DomainError& e) {
        throw DomainError(std::string("--k: ") + e.what());
    }
}

std::string read_file(const std::string& flag, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError(flag + ": cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<std::string>& args) {
    std::string s = "he3oam";
    for (const auto& a : args) s += " " + a;
    return s;
}

/// Options shared by every subcommand.
struct Common {
    bool csv = false;
    bool json = false;
    std::string out_path;

    Format format() const { return json ? Format::json : (csv ? Format::csv : Format::table); }
};

void add_common(CLI::App* sub, Common& common) {
    auto* csv = sub->add_flag("--csv", common.csv, "CSV output");
    auto* js = sub->add_flag("--json", common.json, "JSON output");
    csv->excludes(js);
    sub->add_option("--out", common.out_path, "Write output to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polarized 3He capture cross-sections for ordinary and OAM neutrons", "he3oam"};
    app.set_version_flag("--version", HE3OAM_VERSION);
    app.require_subcommand(1);

    Common common;
    std::ostringstream body;
    json meta = {{"command", join(args)}, {"version", HE3OAM_VERSION}, {"seed", nullptr}};
    std::function<int()> action;

    // cg
    std::vector<std::string> cg_args;
    auto* cg = app.add_subcommand("cg", "Exact Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>");
    cg->add_option("quantum_numbers", cg_args, "j1 m1 j2 m2 J M (integers or halves, e.g. 1/2 -3/2)")
        ->expected(6)
        ->required();
    add_common(cg, common);
    cg->callback([&] {
        action = [&] {
            static const char* names[] = {"j1", "m1", "j2", "m2", "J", "M"};
            HalfInt q[6];
            for (int i = 0; i < 6; ++i) {
                try {
                    q[i] = HalfInt::parse(cg_args[static_cast<std::size_t>(i)]);
                } catch (const ParseError& e) {
                    throw UsageError(std::string(names[i]) + ": " + e.what());
                }
            }
            const auto c = clebsch_gordan(q[0], q[1], q[2], q[3], q[4], q[5]);
            const std::string exact = c.str(), decimal = to_decimal(c);
            switch (common.format()) {
            case Format::json:
                body << json{{"exact", exact}, {"decimal", decimal}, {"meta", meta}}.dump(2) << "\n";
                break;
            case Format::csv:
                body << "exact,decimal\n" << exact << "," << decimal << "\n";
                break;
            case Format::table:
                body << exact << "\n" << decimal << "\n";
                break;
            }
            return kExitOk;
        };
    });

    // xsec
    std::string mode_text = "oam", p_text = "0", pl_text = "0", pn_text = "0", k_text;
    bool with_oracle = false;
    auto add_model_flags = [&](CLI::App* sub) {
        sub->add_option("--mode", mode_text, "ordinary or oam")->capture_default_str();
        sub->add_option("--k", k_text, "Comma-separated K per channel, ascending J (default all 1)");
    };
    auto* xsec = app.add_subcommand("xsec", "Channel cross-sections at one polarization setting");
    add_model_flags(xsec);
    xsec->add_option("--p", p_text, "Neutron spin polarization")->capture_default_str();
    xsec->add_option("--pl", pl_text, "Neutron OAM polarization")->capture_default_str();
    xsec->add_option("--pn", pn_text, "3He nuclear polarization")->capture_default_str();
    xsec->add_flag("--oracle", with_oracle, "Also evaluate the substate-sum oracle");
    add_common(xsec, common);
    xsec->callback([&] {
        action = [&] {
            const Mode mode = parse_mode_flag(mode_text);
            const PolarizationTriple pol(parse_polarization_flag("--p", p_text),
                                         parse_polarization_flag("--pl", pl_text),
                                         parse_polarization_flag("--pn", pn_text));
            const CaptureModel model = parse_model(mode, k_text);

            Table t{{"channel", "exact", "decimal"}, {}};
            if (with_oracle) t.header.insert(t.header.end(), {"oracle_exact", "agrees"});
            json channels = json::array();
            QuadRational total;
            for (const auto& channel : model.channels()) {
                const auto value = closed_form(channel, pol, model).value;
                total += value;
                std::vector<std::string> row{channel.label(), value.str(), to_decimal(value)};
                json entry = {{"channel", channel.label()}, {"exact", value.str()}, {"decimal", to_decimal(value)}};
                if (with_oracle) {
                    const auto o = oracle(channel, pol, model).value;
                    row.insert(row.end(), {o.str(), o == value ? "yes" : "no"});
                    entry["oracle_exact"] = o.str();
                    entry["agrees"] = o == value;
                }
                t.rows.push_back(std::move(row));
                channels.push_back(std::move(entry));
            }
            std::vector<std::string> total_row{"total", total.str(), to_decimal(total)};
            if (with_oracle) total_row.insert(total_row.end(), {"", ""});
            t.rows.push_back(std::move(total_row));

            if (common.format() == Format::json) {
                body << json{{"mode", to_string(mode)},
                             {"p", to_string(pol.p())},
                             {"P_L", to_string(pol.p_l())},
                             {"P_N", to_string(pol.p_n())},
                             {"channels", channels},
                             {"total", {{"exact", total.str()}, {"decimal", to_decimal(total)}}},
                             {"meta", meta}}
                            .dump(2)
                     << "\n";
            } else {
                write_table(body, t, common.format());
            }
            return kExitOk;
        };
    });

    // oracle-check
    int grid = 5;
    auto* check = app.add_subcommand("oracle-check", "Compare every closed form with the substate-sum oracle on a grid");
    check->add_option("--grid", grid, "Points per polarization axis")->check(CLI::Range(2, 201))->capture_default_str();
    add_common(check, common);
    check->callback([&] {
        action = [&] {
            const auto report = reconcile(grid);
            if (common.format() == Format::json) {
                json doc = to_json(report);
                doc["meta"] = meta;
                body << doc.dump(2) << "\n";
            } else {
                Table summary{{"mode", "channel", "closed_form_matches_oracle", "mismatches"}, {}};
                const json doc = to_json(report);
                for (const auto& c : doc["channels"])
                    summary.rows.push_back({c["mode"].get<std::string>(), c["channel"].get<std::string>(),
                                            c["closed_form_matches_oracle"].get<bool>() ? "yes" : "no",
                                            std::to_string(c["mismatches"].get<long>())});
                if (common.format() == Format::table)
                    body << "verdict: " << (report.agrees() ? "agree" : "disagree") << " (" << report.comparisons
                         << " comparisons on a " << grid << "^3 grid)\n\n";
                write_table(body, summary, common.format());
                if (!report.agrees()) {
                    Table d{{"mode", "channel", "p", "P_L", "P_N", "closed_form", "oracle", "difference"}, {}};
                    for (const auto& x : report.discrepancies)
                        d.rows.push_back({std::string(to_string(x.channel.mode())), x.channel.label(),
                                          to_string(x.pol.p()), to_string(x.pol.p_l()), to_string(x.pol.p_n()),
                                          x.closed_form.str(), x.oracle.str(), (x.closed_form - x.oracle).str()});
                    body << "\n";
                    write_table(body, d, common.format());
                }
                if (common.format() == Format::table) {
                    Table e{{"channel", "claim", "condition", "oracle_value", "grid_min", "grid_max", "holds"}, {}};
                    for (const auto& x : report.extremum_checks)
                        e.rows.push_back({x.claim.channel.label(), x.claim.maximum ? "maximum" : "minimum",
                                          x.claim.condition, x.claimed_value.str(), x.grid_min.str(), x.grid_max.str(),
                                          x.holds ? "yes" : "no"});
                    body << "\nextremum checks (oracle)\n";
                    write_table(body, e, common.format());
                }
            }
            return report.agrees() ? kExitOk : kExitDisagreement;
        };
    });

    // sweep
    int resolution = 3;
    auto* sweep = app.add_subcommand("sweep", "Channel fractions and flip-set condition numbers over a polarization grid");
    sweep->add_option("--resolution", resolution, "Points per polarization axis")
        ->check(CLI::Range(2, 101))
        ->capture_default_str();
    sweep->add_option("--mode", mode_text, "ordinary or oam")->capture_default_str();
    add_common(sweep, common);
    sweep->callback([&] {
        action = [&] {
            const Mode mode = parse_mode_flag(mode_text);
            const auto rows = discriminability_sweep(resolution, mode);
            const auto& channels = channels_for(mode);
            if (common.format() == Format::json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    json fr = json::object();
                    for (std::size_t c = 0; c < channels.size(); ++c)
                        fr[channels[c].label()] = {{"exact", r.fractions[c].str()},
                                                   {"decimal", to_decimal(r.fractions[c])}};
                    arr.push_back({{"p", to_string(r.pol.p())},
                                   {"P_L", to_string(r.pol.p_l())},
                                   {"P_N", to_string(r.pol.p_n())},
                                   {"fractions", fr},
                                   {"condition_number", json_double(r.condition_number)}});
                }
                body << json{{"mode", to_string(mode)}, {"resolution", resolution}, {"rows", arr}, {"meta", meta}}.dump(2)
                     << "\n";
            } else {
                Table t{{"p", "P_L", "P_N"}, {}};
                for (const auto& c : channels) t.header.push_back("fraction_j" + c.j_final.str());
                t.header.push_back("condition_number");
                for (const auto& r : rows) {
                    std::vector<std::string> row{to_string(r.pol.p()), to_string(r.pol.p_l()), to_string(r.pol.p_n())};
                    for (const auto& f : r.fractions) row.push_back(to_decimal(f));
                    row.push_back(fmt_double(r.condition_number));
                    t.rows.push_back(std::move(row));
                }
                write_table(body, t, common.format());
            }
            return kExitOk;
        };
    });

    // simulate
    std::string settings_path, counts_path;
    std::uint64_t seed = 0;
    bool channel_columns = false;
    auto* simulate = app.add_subcommand("simulate", "Poisson transmission/capture counts for a settings file");
    simulate->add_option("--settings", settings_path, "CSV with header p,P_L,P_N,exposure,depth")->required();
    add_model_flags(simulate);
    simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
    simulate->add_flag("--channels", channel_columns, "Add per-channel capture_j<J> columns");
    add_common(simulate, common);
    simulate->callback([&] {
        action = [&] {
            meta["seed"] = seed;
            const Mode mode = parse_mode_flag(mode_text);
            const CaptureModel model = parse_model(mode, k_text);
            const auto settings = read_settings_csv(read_file("--settings", settings_path));
            const auto records = simulate_counts(settings, model, seed);
            if (common.format() == Format::json) {
                json arr = json::array();
                for (std::size_t i = 0; i < records.size(); ++i)
                    arr.push_back({{"setting_id", i},
                                   {"capture", records[i].capture_counts},
                                   {"transmitted", records[i].transmitted_counts},
                                   {"channel_captures", records[i].channel_captures}});
                body << json{{"mode", to_string(mode)}, {"records", arr}, {"meta", meta}}.dump(2) << "\n";
            } else {
                body << write_counts_csv(records, mode, channel_columns);
            }
            return kExitOk;
        };
    });

    // fit
    bool resolved = false;
    auto* fit = app.add_subcommand("fit", "Recover K per channel from counts");
    fit->add_option("--settings", settings_path, "CSV with header p,P_L,P_N,exposure,depth")->required();
    fit->add_option("--counts", counts_path, "CSV with header setting_id,capture,transmitted")->required();
    fit->add_option("--mode", mode_text, "ordinary or oam")->capture_default_str();
    fit->add_flag("--resolved", resolved, "Fit per-channel capture columns instead of the capture total");
    add_common(fit, common);
    fit->callback([&] {
        action = [&] {
            const Mode mode = parse_mode_flag(mode_text);
            const auto settings = read_settings_csv(read_file("--settings", settings_path));
            const auto records = read_counts_csv(read_file("--counts", counts_path), settings, mode);
            const auto result = fit_K(records, mode, resolved ? FitResolution::resolved : FitResolution::summed);
            if (common.format() == Format::json) {
                json doc = to_json(result);
                doc["meta"] = meta;
                body << doc.dump(2) << "\n";
            } else {
                Table t{{"channel", "K_hat", "std_error", "at_bound"}, {}};
                const auto se = result.standard_errors();
                const auto& channels = channels_for(mode);
                for (std::size_t c = 0; c < channels.size(); ++c)
                    t.rows.push_back({channels[c].label(), fmt_double(result.k_hat[c]), fmt_double(se[c]),
                                      result.at_bound[c] ? "yes" : "no"});
                write_table(body, t, common.format());
                if (common.format() == Format::table) body << "residual_norm " << fmt_double(result.residual_norm) << "\n";
            }
            return kExitOk;
        };
    });

    // levels
    auto* levels = app.add_subcommand("levels", "4He levels near the n+3He threshold");
    add_common(levels, common);
    levels->callback([&] {
        action = [&] {
            if (common.format() == Format::json) {
                json arr = json::array();
                for (const auto& l : builtin_levels())
                    arr.push_back({{"energy_MeV", l.energy_MeV()},
                                   {"J", l.j.str()},
                                   {"parity", l.parity == Parity::odd ? "-" : "+"},
                                   {"T", l.isospin},
                                   {"kind", l.is_entry ? "entry" : "level"},
                                   {"width_note", l.width_note}});
                body << json{{"levels", arr}, {"meta", meta}}.dump(2) << "\n";
            } else {
                Table t{{"energy_MeV", "J", "parity", "T", "kind", "width_note"}, {}};
                for (const auto& l : builtin_levels())
                    t.rows.push_back({fmt_double(l.energy_MeV()), l.j.str(), l.parity == Parity::odd ? "-" : "+",
                                      std::to_string(l.isospin), l.is_entry ? "entry" : "level", l.width_note});
                write_table(body, t, common.format());
            }
            return kExitOk;
        };
    });

    // kinematics
    ReactionKinematics kin;
    auto* kinematics = app.add_subcommand("kinematics", "Check n+3He -> p+3H energy bookkeeping");
    kinematics->add_option("--q", kin.q_value_keV, "Q-value (keV)")->capture_default_str();
    kinematics->add_option("--ep", kin.proton_keV, "Proton kinetic energy (keV)")->capture_default_str();
    kinematics->add_option("--et", kin.triton_keV, "Triton kinetic energy (keV)")->capture_default_str();
    add_common(kinematics, common);
    kinematics->callback([&] {
        action = [&] {
            const auto report = check_kinematics(kin);
            if (common.format() == Format::json) {
                json checks = json::array();
                for (const auto& c : report.checks)
                    checks.push_back({{"name", c.name},
                                      {"passed", c.passed},
                                      {"observed", c.observed},
                                      {"expected", c.expected},
                                      {"tolerance", c.tolerance}});
                body << json{{"checks", checks}, {"passed", report.passed()}, {"meta", meta}}.dump(2) << "\n";
            } else {
                Table t{{"check", "observed", "expected", "tolerance", "result"}, {}};
                for (const auto& c : report.checks)
                    t.rows.push_back({c.name, fmt_double(c.observed), fmt_double(c.expected), fmt_double(c.tolerance),
                                      c.passed ? "pass" : "fail"});
                write_table(body, t, common.format());
            }
            return report.passed() ? kExitOk : kExitDomain;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << HE3OAM_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "he3oam: error: " << e.what() << "\n";
        return kExitUsage;
    }

    int code = kExitOk;
    try {
        code = action();
    } catch (const UsageError& e) {
        err << "he3oam: error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "he3oam: error: " << e.what() << "\n";
        return kExitDomain;
    }

    if (common.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!(file << body.str())) {
            err << "he3oam: error: --out: cannot write '" << common.out_path << "'\n";
            return kExitDomain;
        }
    }
    return code;
}

} // namespace he3oam::cli
