// orbconv: command line front end for the eligibility calculus and the
// density certifier.
//
// Exit status: 0 success, 1 crosscheck disagreement or numerical failure,
// 2 usage error.

#include "orbconv/config.hpp"
#include "orbconv/density.hpp"
#include "orbconv/liealg.hpp"
#include "orbconv/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace orbconv;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string space = "real";
    int p = 0;
    int trials = kDefaultTrials;
    std::uint64_t seed = 42;
    std::string mode = "float";
    std::string format = "md";
    std::string out;
    unsigned threads = 0;
};

// "2,2,1,1" or a configuration label such as "[2,2]" (instantiated by its representative).
CartanVector parse_point(const std::string& text)
{
    if (!text.empty() && text.front() == '[') return parse_configuration(text).representative();
    std::vector<double> h;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            h.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse vector '" + text + "'");
        }
    }
    return CartanVector(std::move(h));
}

void check_p(const Globals& g, const CartanVector& x)
{
    if (g.p != 0 && g.p != x.size())
        throw InvalidArgument("--p " + std::to_string(g.p) + " does not match vector length " + std::to_string(x.size()));
}

void require_numeric(Space space, const std::string& cmd)
{
    if (space == Space::QuaternionC)
        throw Unsupported(cmd + ": --space quaternion is supported only by classify, eligible and table");
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) s += ',';
        const auto& f = fields[i];
        if (f.find_first_of(",\"") != std::string::npos) {
            s += '"';
            for (char ch : f) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            s += '"';
        } else {
            s += f;
        }
    }
    return s + "\n";
}

// Key/value records rendered in the selected format.
std::string render_record(const json& rec, Format format)
{
    if (format == Format::JSON) return rec.dump(2) + "\n";
    std::vector<std::string> keys, values;
    for (const auto& [k, v] : rec.items()) {
        keys.push_back(k);
        values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    if (format == Format::CSV) return csv_row(keys) + csv_row(values);
    std::string s = "| key | value |\n|---|---|\n";
    for (std::size_t i = 0; i < keys.size(); ++i) s += "| " + keys[i] + " | " + values[i] + " |\n";
    return s;
}

json cert_json(const CertResult& r)
{
    return {{"verdict", std::string(to_string(r.verdict))},
            {"rank", r.achieved_rank},
            {"target", r.target_dim},
            {"trials", r.trials},
            {"mode", std::string(to_string(r.mode))},
            {"tolerance", r.tolerance}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orbital measure convolutions on SO_0(p,p), SU(p,p) and Sp(p,p)"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--space", g.space, "real | complex | quaternion")
        ->check(CLI::IsMember({"real", "complex", "quaternion"}));
    app.add_option("--p", g.p, "rank p")->check(CLI::Range(2, 64));
    app.add_option("--trials", g.trials, "random points per certification")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--mode", g.mode, "float | exact")->check(CLI::IsMember({"float", "exact"}));
    app.add_option("--format", g.format, "csv | json | md")->check(CLI::IsMember({"csv", "json", "md"}));
    app.add_option("--out", g.out, "write output to PATH instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for sweeps (0: all cores)");

    std::string xs, ys;
    int l = 0;
    int l_max = 6;
    int samples = 100;

    auto* roots = app.add_subcommand("roots", "positive roots with multiplicities");
    auto* classify_cmd = app.add_subcommand("classify", "chamber projection and configuration of x");
    classify_cmd->add_option("--x", xs, "vector \"2,2,1,1\" or label \"[2,2]\"")->required();
    auto* eligible = app.add_subcommand("eligible", "eligibility of a pair");
    eligible->add_option("--x", xs)->required();
    eligible->add_option("--y", ys)->required();
    auto* certify = app.add_subcommand("certify", "numerical density certificate for a pair");
    certify->add_option("--x", xs)->required();
    certify->add_option("--y", ys)->required();
    auto* power = app.add_subcommand("power", "convolution powers of one orbital measure");
    power->add_option("--x", xs, "single vector or label (default: all configurations of rank p)");
    power->add_option("--l", l, "test this l only")->check(CLI::Range(2, 64));
    power->add_option("--l-max", l_max, "largest l tried")->check(CLI::Range(2, 64));
    auto* table = app.add_subcommand("table", "eligibility marker table over configurations without zeros");
    auto* crosscheck = app.add_subcommand("crosscheck", "criterion versus certifier over all configuration pairs");
    auto* sample = app.add_subcommand("sample", "Cartan projections a(e^X k e^Y) for random k");
    sample->add_option("--x", xs)->required();
    sample->add_option("--y", ys)->required();
    sample->add_option("--n", samples, "number of samples")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    int status = kExitOk;
    std::string output;
    try {
        const Space space = parse_space(g.space);
        const Format format = parse_format(g.format);
        const CertMode mode = parse_mode(g.mode);
        Rng rng(g.seed);

        const auto need_p = [&](const std::string& cmd) {
            if (g.p == 0) throw InvalidArgument(cmd + ": --p is required");
            return g.p;
        };

        if (*roots) {
            const RootDatum rd = build_root_system(space, need_p("roots"));
            if (format == Format::JSON) {
                json arr = json::array();
                for (const auto& r : rd.roots) arr.push_back({{"root", r.str()}, {"multiplicity", r.multiplicity}});
                output = arr.dump(2) + "\n";
            } else if (format == Format::CSV) {
                output = "root,multiplicity\n";
                for (const auto& r : rd.roots) output += r.str() + "," + std::to_string(r.multiplicity) + "\n";
            } else {
                output = "| root | multiplicity |\n|---|--:|\n";
                for (const auto& r : rd.roots) output += "| " + r.str() + " | " + std::to_string(r.multiplicity) + " |\n";
                output += "\ntotal multiplicity " + std::to_string(rd.total_multiplicity()) + ", dim p " +
                          std::to_string(dim_p(space, rd.p)) + "\n";
            }
        } else if (*classify_cmd) {
            const CartanVector x = parse_point(xs);
            check_p(g, x);
            const Configuration c = classify(x, space);
            json rec = {{"x", x.str()},
                        {"chamber", project_to_chamber(x, space).str()},
                        {"config", c.label()},
                        {"class", c.normalized().label()},
                        {"v_dim", v_dim(x, space)},
                        {"dim_p", dim_p(space, x.size())}};
            output = render_record(rec, format);
        } else if (*eligible) {
            const CartanVector x = parse_point(xs), y = parse_point(ys);
            check_p(g, x);
            const EligibilityVerdict v = is_eligible(x, y, space);
            json rec = {{"x_config", classify(x, space).normalized().label()},
                        {"y_config", classify(y, space).normalized().label()},
                        {"eligible", v.eligible},
                        {"rule", std::string(to_string(v.rule))}};
            output = render_record(rec, format);
        } else if (*certify) {
            require_numeric(space, "certify");
            const CartanVector x = parse_point(xs), y = parse_point(ys);
            check_p(g, x);
            const CertResult r = certify_pair(x, y, space, g.trials, mode, rng);
            json rec = {{"x_config", classify(x, space).normalized().label()},
                        {"y_config", classify(y, space).normalized().label()}};
            rec.update(cert_json(r));
            output = render_record(rec, format);
        } else if (*power) {
            require_numeric(space, "power");
            if (xs.empty()) {
                if (l != 0) throw InvalidArgument("power: --l needs --x");
                output = render(power_table(need_p("power"), space, l_max, g.trials, g.seed, {}, g.threads), format);
            } else {
                const CartanVector x = parse_point(xs);
                check_p(g, x);
                if (l != 0) {
                    const CertResult r = power_certify(x, l, space, g.trials, rng);
                    json rec = {{"config", classify(x, space).normalized().label()}, {"l", l}};
                    rec.update(cert_json(r));
                    output = render_record(rec, format);
                } else {
                    PowerReport rep{x.size(), space, l_max, {}};
                    PowerRow row{classify(x, space), {}, std::nullopt};
                    for (int k = 2; k <= l_max && !row.minimal_l; ++k) {
                        row.results.push_back(power_certify(x, k, space, g.trials, rng));
                        if (row.results.back().verdict == CertVerdict::Dense) row.minimal_l = k;
                    }
                    rep.rows.push_back(std::move(row));
                    output = render(rep, format);
                }
            }
        } else if (*table) {
            output = render(eligibility_table(need_p("table"), space, format));
        } else if (*crosscheck) {
            require_numeric(space, "crosscheck");
            const CrossCheckReport rep = cross_check(need_p("crosscheck"), space, g.trials, g.seed, mode, g.threads);
            output = render(rep, format);
            if (!rep.all_agree()) status = kExitDisagree;
        } else if (*sample) {
            require_numeric(space, "sample");
            const CartanVector x = parse_point(xs), y = parse_point(ys);
            check_p(g, x);
            const ProjectionSample s = sample_projection(x, y, samples, space, rng);
            const RepetitionPrediction pred = predict_repetition(x, y);
            const int hits = pred.bound > 0 ? repetition_check(x, y, s) : 0;
            if (format == Format::JSON) {
                json pts = json::array();
                for (const auto& pt : s.points) pts.push_back(pt.values());
                json out = {{"x", x.values()},         {"y", y.values()},
                            {"points", pts},           {"predicted_value", pred.value},
                            {"predicted_bound", pred.bound}, {"min_multiplicity", hits}};
                output = out.dump(2) + "\n";
            } else {
                std::ostringstream os;
                if (format == Format::CSV) {
                    for (int i = 0; i < x.size(); ++i) os << (i ? "," : "") << "a" << i + 1;
                    os << '\n';
                    for (const auto& pt : s.points) {
                        for (int i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
                        os << '\n';
                    }
                } else {
                    os << "| sample | a(e^X k e^Y) |\n|--:|---|\n";
                    for (std::size_t i = 0; i < s.points.size(); ++i) os << "| " << i << " | " << s.points[i].str() << " |\n";
                    if (pred.bound > 0)
                        os << "\nvalue " << pred.value << " forced at least " << pred.bound
                           << " times; observed minimum " << hits << "\n";
                }
                output = os.str();
            }
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }

    if (g.out.empty()) {
        std::cout << output;
    } else {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "error: cannot open " << g.out << "\n";
            return kExitUsage;
        }
        f << output;
    }
    return status;
}
