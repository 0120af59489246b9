#include "he3oam/experiment.hpp"

#include "he3oam/csv.hpp"
#include "he3oam/errors.hpp"
#include "he3oam/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace he3oam {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// f(s) = (1 - exp(-d s)) / s and its derivative, the fraction of incident
// neutrons captured per unit cross-section.
double capture_fraction(double depth, double s) {
    const double x = depth * s;
    if (x < 1e-4) return depth * (1 - x / 2 + x * x / 6 - x * x * x / 24);
    return -std::expm1(-x) / s;
}

double capture_fraction_slope(double depth, double s) {
    const double x = depth * s;
    if (x < 1e-4) return depth * depth * (-0.5 + x / 3 - x * x / 8 + x * x * x / 30);
    return (x * std::exp(-x) + std::expm1(-x)) / (s * s);
}

struct Linearization {
    Eigen::VectorXd mean;
    Eigen::MatrixXd jacobian;
};

Linearization linearize(const std::vector<Observation>& obs, const Eigen::MatrixXd& design,
                        const Eigen::VectorXd& k, FitResolution resolution) {
    const auto n = static_cast<Eigen::Index>(obs.size());
    const auto channels = design.cols();
    Linearization lin;
    if (resolution == FitResolution::summed) {
        lin.mean.resize(n);
        lin.jacobian.resize(n, channels);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& s = obs[i].setting;
            const double sigma = design.row(i).dot(k);
            const double x = s.depth * sigma;
            lin.mean(i) = -s.exposure * std::expm1(-x);
            lin.jacobian.row(i) = s.exposure * s.depth * std::exp(-x) * design.row(i);
        }
    } else {
        lin.mean.resize(n * channels);
        lin.jacobian = Eigen::MatrixXd::Zero(n * channels, channels);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& s = obs[i].setting;
            const double sigma = design.row(i).dot(k);
            const double f = capture_fraction(s.depth, sigma);
            const double slope = capture_fraction_slope(s.depth, sigma);
            for (Eigen::Index c = 0; c < channels; ++c) {
                const Eigen::Index row = i * channels + c;
                lin.mean(row) = s.exposure * f * design(i, c) * k(c);
                lin.jacobian.row(row) = s.exposure * slope * design(i, c) * k(c) * design.row(i);
                lin.jacobian(row, c) += s.exposure * f * design(i, c);
            }
        }
    }
    return lin;
}

std::string describe_combination(const Eigen::VectorXd& v, const std::vector<Channel>& channels) {
    const double scale = v.cwiseAbs().maxCoeff();
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index c = 0; c < v.size(); ++c) {
        const double coeff = v(c) / scale;
        if (std::abs(coeff) < 1e-6) continue;
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s%.6g*K(%s)", first ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + "),
                      std::abs(coeff), channels[c].label().c_str());
        os << buf;
        first = false;
    }
    return os.str();
}

std::uint64_t parse_count(const std::string& field, const std::string& where) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(where + ": '" + field + "' is not a nonnegative integer count");
    try {
        return std::stoull(field);
    } catch (const std::out_of_range&) {
        throw ParseError(where + ": count '" + field + "' overflows");
    }
}

double parse_positive(const std::string& field, const std::string& where) {
    const double v = to_double(parse_rational(field));
    if (!(v > 0) || !std::isfinite(v)) throw DomainError(where + ": '" + field + "' must be positive");
    return v;
}

std::string channel_column(const Channel& channel) { return "capture_j" + channel.j_final.str(); }

} // namespace

void MeasurementSetting::validate() const {
    if (!(exposure > 0) || !std::isfinite(exposure))
        throw DomainError("exposure must be positive and finite");
    if (!(depth > 0) || !std::isfinite(depth)) throw DomainError("depth must be positive and finite");
}

std::vector<double> FitResult::standard_errors() const {
    std::vector<double> se(k_hat.size());
    for (std::size_t c = 0; c < se.size(); ++c)
        se[c] = std::sqrt(std::max(0.0, covariance(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c))));
    return se;
}

Eigen::MatrixXd design_matrix(const std::vector<MeasurementSetting>& settings, Mode mode) {
    const CaptureModel unit(mode);
    const auto& channels = unit.channels();
    Eigen::MatrixXd d(static_cast<Eigen::Index>(settings.size()), static_cast<Eigen::Index>(channels.size()));
    for (std::size_t i = 0; i < settings.size(); ++i)
        for (std::size_t c = 0; c < channels.size(); ++c)
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                closed_form(channels[c], settings[i].pol, unit).value.to_double();
    return d;
}

ExpectedCounts expected_counts(const MeasurementSetting& setting, const Eigen::VectorXd& design_row,
                               const Eigen::VectorXd& k) {
    setting.validate();
    ExpectedCounts out;
    const Eigen::VectorXd sigma = design_row.cwiseProduct(k);
    const double total = sigma.sum();
    out.transmitted = setting.exposure * std::exp(-setting.depth * total);
    out.capture = -setting.exposure * std::expm1(-setting.depth * total);
    out.channel_capture.resize(static_cast<std::size_t>(sigma.size()));
    for (Eigen::Index c = 0; c < sigma.size(); ++c)
        out.channel_capture[static_cast<std::size_t>(c)] = total > 0 ? out.capture * sigma(c) / total : 0.0;
    return out;
}

std::vector<CountRecord> simulate_counts(const std::vector<MeasurementSetting>& settings,
                                         const CaptureModel& model, std::uint64_t seed) {
    for (const auto& s : settings) s.validate();
    std::vector<CountRecord> records(settings.size());
    parallel_for(settings.size(), [&](std::size_t i) {
        const auto& setting = settings[i];
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        auto draw = [&rng](double mean) -> std::uint64_t {
            if (!(mean > 0)) return 0;
            return std::poisson_distribution<std::uint64_t>(mean)(rng);
        };

        std::vector<double> sigma;
        double total = 0;
        for (const auto& cs : channel_cross_sections(setting.pol, model)) {
            sigma.push_back(cs.value.to_double());
            total += sigma.back();
        }
        const double transmission = std::exp(-setting.depth * total);
        const double captured = -setting.exposure * std::expm1(-setting.depth * total);

        CountRecord rec{setting, 0, draw(setting.exposure * transmission), {}};
        for (double s : sigma) {
            rec.channel_captures.push_back(total > 0 ? draw(captured * s / total) : 0);
            rec.capture_counts += rec.channel_captures.back();
        }
        records[i] = std::move(rec);
    });
    return records;
}

Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, std::vector<bool>* passive_out) {
    const Eigen::Index n = a.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double tol = 1e-12 * std::max(1e-300, a.norm() * b.norm());

    auto solve_passive = [&]() {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j)
            if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
        Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = a.col(idx[c]);
        const Eigen::VectorXd z = sub.colPivHouseholderQr().solve(b);
        Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
        for (std::size_t c = 0; c < idx.size(); ++c) s(idx[c]) = z(static_cast<Eigen::Index>(c));
        return s;
    };

    for (int outer = 0; outer < 3 * n + 10; ++outer) {
        const Eigen::VectorXd w = a.transpose() * (b - a * x);
        Eigen::Index best = -1;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!passive[static_cast<std::size_t>(j)] && w(j) > tol && (best < 0 || w(j) > w(best))) best = j;
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;

        for (int inner = 0; inner < 3 * n + 10; ++inner) {
            const Eigen::VectorXd s = solve_passive();
            bool feasible = true;
            double alpha = 1.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && s(j) <= 0) {
                    feasible = false;
                    alpha = std::min(alpha, x(j) / (x(j) - s(j)));
                }
            }
            if (feasible) {
                x = s;
                break;
            }
            x += alpha * (s - x);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && x(j) <= 1e-15 * (1 + x.cwiseAbs().maxCoeff())) {
                    passive[static_cast<std::size_t>(j)] = false;
                    x(j) = 0;
                }
            }
        }
    }
    if (passive_out) *passive_out = passive;
    return x;
}

double condition_number(const Eigen::MatrixXd& m) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0) return std::numeric_limits<double>::infinity();
    const double smallest = sv(sv.size() - 1);
    if (m.rows() < m.cols() || smallest <= 1e-12 * sv(0)) return std::numeric_limits<double>::infinity();
    return sv(0) / smallest;
}

FitResult fit_observations(const std::vector<Observation>& observations, Mode mode, FitResolution resolution) {
    const auto& channels = channels_for(mode);
    const auto nc = static_cast<Eigen::Index>(channels.size());
    if (observations.empty()) throw DegenerateDesign("no observations to fit");

    std::vector<MeasurementSetting> settings;
    for (const auto& o : observations) {
        o.setting.validate();
        settings.push_back(o.setting);
    }
    const Eigen::MatrixXd design = design_matrix(settings, mode);

    Eigen::VectorXd y;
    if (resolution == FitResolution::summed) {
        y.resize(static_cast<Eigen::Index>(observations.size()));
        for (std::size_t i = 0; i < observations.size(); ++i) y(static_cast<Eigen::Index>(i)) = observations[i].capture;
    } else {
        y.resize(static_cast<Eigen::Index>(observations.size()) * nc);
        for (std::size_t i = 0; i < observations.size(); ++i) {
            if (observations[i].channel_captures.size() != channels.size())
                throw DomainError("channel-resolved fit needs " + std::to_string(channels.size()) +
                                  " channel counts for setting " + std::to_string(i));
            for (Eigen::Index c = 0; c < nc; ++c)
                y(static_cast<Eigen::Index>(i) * nc + c) = observations[i].channel_captures[static_cast<std::size_t>(c)];
        }
    }
    for (Eigen::Index r = 0; r < y.size(); ++r)
        if (!(y(r) >= 0) || !std::isfinite(y(r))) throw DomainError("observed counts must be nonnegative");
    const Eigen::VectorXd sqrt_w = y.cwiseMax(1.0).cwiseInverse().cwiseSqrt();

    Eigen::VectorXd k = Eigen::VectorXd::Zero(nc);
    {
        // At K = 0 the model is linear in K (thin target); its rank decides identifiability.
        const Linearization start = linearize(observations, design, k, resolution);
        const Eigen::MatrixXd a = sqrt_w.asDiagonal() * start.jacobian;
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const Eigen::Index rank = (sv.array() > 1e-10 * std::max(sv(0), 1e-300)).count();
        if (a.rows() < nc || rank < nc) {
            const Eigen::VectorXd null = svd.matrixV().col(nc - 1);
            throw DegenerateDesign("settings cannot separate the channels; unidentifiable combination " +
                                   describe_combination(null, channels));
        }
    }

    FitResult fit;
    fit.mode = mode;
    std::vector<bool> passive(static_cast<std::size_t>(nc), false);
    for (fit.iterations = 1; fit.iterations <= 200; ++fit.iterations) {
        const Linearization lin = linearize(observations, design, k, resolution);
        const Eigen::MatrixXd a = sqrt_w.asDiagonal() * lin.jacobian;
        const Eigen::VectorXd b = sqrt_w.cwiseProduct(y - lin.mean + lin.jacobian * k);
        const Eigen::VectorXd next = nnls(a, b, &passive);
        const double step = (next - k).norm();
        k = next;
        if (step <= 1e-14 * (1.0 + k.norm())) break;
    }

    const Linearization lin = linearize(observations, design, k, resolution);
    const Eigen::MatrixXd a = sqrt_w.asDiagonal() * lin.jacobian;
    const Eigen::MatrixXd fisher = a.transpose() * a;

    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < nc; ++c)
        if (passive[static_cast<std::size_t>(c)]) free.push_back(c);
    fit.covariance = Eigen::MatrixXd::Zero(nc, nc);
    if (!free.empty()) {
        const auto nf = static_cast<Eigen::Index>(free.size());
        Eigen::MatrixXd sub(nf, nf);
        for (Eigen::Index r = 0; r < nf; ++r)
            for (Eigen::Index c = 0; c < nf; ++c) sub(r, c) = fisher(free[r], free[c]);
        const Eigen::MatrixXd inv = sub.ldlt().solve(Eigen::MatrixXd::Identity(nf, nf));
        for (Eigen::Index r = 0; r < nf; ++r)
            for (Eigen::Index c = 0; c < nf; ++c) fit.covariance(free[r], free[c]) = inv(r, c);
        fit.covariance = 0.5 * (fit.covariance + fit.covariance.transpose()).eval();
    }

    fit.k_hat.assign(k.data(), k.data() + k.size());
    for (auto& v : fit.k_hat) v = std::max(0.0, v);
    fit.at_bound.resize(static_cast<std::size_t>(nc));
    for (Eigen::Index c = 0; c < nc; ++c) fit.at_bound[static_cast<std::size_t>(c)] = !passive[static_cast<std::size_t>(c)];
    fit.residual_norm = sqrt_w.cwiseProduct(y - lin.mean).norm();
    return fit;
}

FitResult fit_K(const std::vector<CountRecord>& records, Mode mode, FitResolution resolution) {
    std::vector<Observation> obs;
    obs.reserve(records.size());
    for (const auto& r : records) {
        Observation o{r.setting, static_cast<double>(r.capture_counts), {}};
        for (auto c : r.channel_captures) o.channel_captures.push_back(static_cast<double>(c));
        obs.push_back(std::move(o));
    }
    return fit_observations(obs, mode, resolution);
}

std::vector<PolarizationTriple> flip_set(const PolarizationTriple& pol) {
    return {pol,
            {-pol.p(), pol.p_l(), pol.p_n()},
            {pol.p(), -pol.p_l(), pol.p_n()},
            {pol.p(), pol.p_l(), -pol.p_n()}};
}

std::vector<SweepRow> discriminability_sweep(int grid_resolution, Mode mode) {
    const auto cube = polarization_cube(grid_resolution);
    const CaptureModel unit(mode);
    std::vector<SweepRow> rows(cube.size());
    parallel_for(cube.size(), [&](std::size_t i) {
        SweepRow row{cube[i], {}, 0.0};
        const auto sections = channel_cross_sections(cube[i], unit);
        QuadRational total;
        for (const auto& cs : sections) total += cs.value;
        for (const auto& cs : sections) row.fractions.push_back(total.is_zero() ? QuadRational() : cs.value / total);

        std::vector<MeasurementSetting> flips;
        for (const auto& pol : flip_set(cube[i])) flips.push_back({pol, 1.0, 1.0});
        row.condition_number = condition_number(design_matrix(flips, mode));
        rows[i] = std::move(row);
    });
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.condition_number != b.condition_number) return a.condition_number < b.condition_number;
        return a.pol < b.pol;
    });
    return rows;
}

std::vector<MeasurementSetting> read_settings_csv(std::string_view text) {
    const auto lines = csv::data_lines(text);
    const std::vector<std::string> header{"p", "P_L", "P_N", "exposure", "depth"};
    if (lines.empty() || csv::split(lines.front()) != header)
        throw ParseError("settings file must start with header p,P_L,P_N,exposure,depth");
    std::vector<MeasurementSetting> settings;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv::split(lines[i]);
        const std::string where = "settings row " + std::to_string(i);
        if (f.size() != header.size()) throw ParseError(where + ": expected 5 fields");
        MeasurementSetting s{PolarizationTriple(parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2])),
                             parse_positive(f[3], where + " exposure"), parse_positive(f[4], where + " depth")};
        settings.push_back(std::move(s));
    }
    if (settings.empty()) throw ParseError("settings file has no rows");
    return settings;
}

std::string write_settings_csv(const std::vector<MeasurementSetting>& settings) {
    std::string out = "p,P_L,P_N,exposure,depth\n";
    for (const auto& s : settings)
        out += to_string(s.pol.p()) + "," + to_string(s.pol.p_l()) + "," + to_string(s.pol.p_n()) + "," +
               format_double(s.exposure) + "," + format_double(s.depth) + "\n";
    return out;
}

std::vector<CountRecord> read_counts_csv(std::string_view text, const std::vector<MeasurementSetting>& settings,
                                         Mode mode) {
    const auto lines = csv::data_lines(text);
    const auto& channels = channels_for(mode);
    std::vector<std::string> base{"setting_id", "capture", "transmitted"};
    std::vector<std::string> extended = base;
    for (const auto& c : channels) extended.push_back(channel_column(c));
    if (lines.empty()) throw ParseError("counts file is empty");
    const auto header = csv::split(lines.front());
    const bool resolved = header == extended;
    if (!resolved && header != base) {
        std::string expected = "setting_id,capture,transmitted";
        throw ParseError("counts file must start with header " + expected + " (optionally followed by " +
                         channel_column(channels.front()) + ",...)");
    }

    std::vector<CountRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv::split(lines[i]);
        const std::string where = "counts row " + std::to_string(i);
        if (f.size() != header.size()) throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields");
        const auto id = parse_count(f[0], where);
        if (id >= settings.size())
            throw ParseError(where + ": setting_id " + f[0] + " has no matching settings row");
        CountRecord rec{settings[id], parse_count(f[1], where), parse_count(f[2], where), {}};
        if (resolved) {
            std::uint64_t sum = 0;
            for (std::size_t c = 0; c < channels.size(); ++c) {
                rec.channel_captures.push_back(parse_count(f[3 + c], where));
                sum += rec.channel_captures.back();
            }
            if (sum != rec.capture_counts) throw ParseError(where + ": channel captures do not sum to capture");
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw ParseError("counts file has no rows");
    return records;
}

std::string write_counts_csv(const std::vector<CountRecord>& records, Mode mode, bool channel_columns) {
    const auto& channels = channels_for(mode);
    std::string out = "setting_id,capture,transmitted";
    if (channel_columns)
        for (const auto& c : channels) out += "," + channel_column(c);
    out += "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += std::to_string(i) + "," + std::to_string(r.capture_counts) + "," + std::to_string(r.transmitted_counts);
        if (channel_columns) {
            if (r.channel_captures.size() != channels.size())
                throw DomainError("record " + std::to_string(i) + " has no per-channel captures");
            for (auto c : r.channel_captures) out += "," + std::to_string(c);
        }
        out += "\n";
    }
    return out;
}

nlohmann::json to_json(const FitResult& fit) {
    using nlohmann::json;
    const auto& channels = channels_for(fit.mode);
    json k_hat = json::object(), se = json::object(), labels = json::array(), cov = json::array();
    const auto errors = fit.standard_errors();
    for (std::size_t c = 0; c < channels.size(); ++c) {
        labels.push_back(channels[c].label());
        k_hat[channels[c].label()] = fit.k_hat[c];
        se[channels[c].label()] = errors[c];
        json row = json::array();
        for (std::size_t d = 0; d < channels.size(); ++d)
            row.push_back(fit.covariance(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d)));
        cov.push_back(row);
    }
    return {{"mode", to_string(fit.mode)}, {"channels", labels},         {"K_hat", k_hat},
            {"covariance", cov},          {"residual_norm", fit.residual_norm}, {"standard_errors", se},
            {"iterations", fit.iterations}};
}

} // namespace he3oam
