#include "orbconv/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace orbconv {

using json = nlohmann::ordered_json;

std::string_view to_string(Format f)
{
    switch (f) {
    case Format::CSV: return "csv";
    case Format::JSON: return "json";
    case Format::Markdown: return "md";
    }
    return "?";
}

Format parse_format(std::string_view name)
{
    if (name == "csv") return Format::CSV;
    if (name == "json") return Format::JSON;
    if (name == "md" || name == "markdown") return Format::Markdown;
    throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions(n, n, prefix, out);
    // more parts first, then lexicographic
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

Configuration make_config(ConfigKind kind, const std::vector<int>& counts, int u)
{
    Configuration c;
    c.kind = kind;
    c.u = u;
    const int r = static_cast<int>(counts.size());
    for (int i = 0; i < r; ++i) c.parts.push_back({static_cast<double>(r - i), counts[static_cast<std::size_t>(i)]});
    return c;
}

}  // namespace

std::vector<Configuration> enumerate_configs(int p, Space space)
{
    if (p < 2) throw InvalidArgument("enumerate_configs: p must be >= 2");
    std::vector<Configuration> out;
    for (const auto& s : partitions_of(p)) out.push_back(make_config(ConfigKind::WithZeros, s, 0));

    if (space == Space::RealD) {
        struct Minus {
            std::vector<int> prefix;
            int last;
        };
        std::vector<Minus> minus;
        for (int last = 2; last <= p; ++last)
            for (const auto& prefix : partitions_of(p - last)) minus.push_back({prefix, last});
        std::stable_sort(minus.begin(), minus.end(), [](const Minus& a, const Minus& b) {
            if (a.prefix.size() != b.prefix.size()) return a.prefix.size() > b.prefix.size();
            if (a.last != b.last) return a.last < b.last;
            return a.prefix < b.prefix;
        });
        for (const auto& m : minus) {
            std::vector<int> counts = m.prefix;
            counts.push_back(m.last);
            out.push_back(make_config(ConfigKind::MinusPaired, counts, 0));
        }
    }

    for (int u = 1; u < p; ++u)
        for (const auto& s : partitions_of(p - u)) out.push_back(make_config(ConfigKind::WithZeros, s, u));
    return out;
}

// ---------------------------------------------------------------------------
// eligibility table

std::string_view to_string(Marker m)
{
    switch (m) {
    case Marker::Check: return "check";
    case Marker::Cross: return "cross";
    case Marker::S1: return "S1";
    case Marker::S2: return "S2";
    case Marker::S3: return "S3";
    case Marker::S4: return "S4";
    }
    return "?";
}

Marker parse_marker(std::string_view s)
{
    for (Marker m : {Marker::Check, Marker::Cross, Marker::S1, Marker::S2, Marker::S3, Marker::S4})
        if (to_string(m) == s) return m;
    throw InvalidArgument("unknown marker '" + std::string(s) + "'");
}

namespace {

std::string_view md_symbol(Marker m)
{
    switch (m) {
    case Marker::Check: return "√";
    case Marker::Cross: return "X";
    default: return to_string(m);
    }
}

bool is_class(const Configuration& c, ConfigKind kind, std::vector<int> counts, int u = 0)
{
    const Configuration n = c.normalized();
    return n.kind == kind && n.u == u && n.counts() == counts;
}

}  // namespace

std::optional<Marker> reduction_case(const Configuration& x, const Configuration& y)
{
    const int p = x.p();
    if (p < 4 || y.p() != p) return std::nullopt;
    const auto plain = [](const Configuration& c, std::vector<int> counts) {
        return is_class(c, ConfigKind::WithZeros, std::move(counts));
    };
    const auto minus = [](const Configuration& c, std::vector<int> counts) {
        return is_class(c, ConfigKind::MinusPaired, std::move(counts));
    };
    const auto either = [&](auto&& fx, auto&& fy) { return (fx(x) && fy(y)) || (fx(y) && fy(x)); };

    const auto full = [&](const Configuration& c) { return plain(c, {p}); };
    const auto full_minus = [&](const Configuration& c) { return minus(c, {p}); };
    const auto two_blocks = [&](const Configuration& c) {
        for (int k = 2; p - k >= k; ++k)
            if (plain(c, {p - k, k})) return true;
        return false;
    };
    const auto big_small = [&](const Configuration& c) { return plain(c, {p - 1, 1}); };
    const auto small_big_minus = [&](const Configuration& c) { return minus(c, {1, p - 1}); };

    if (p >= 5 && either(full, two_blocks)) return Marker::S1;
    if (p == 4) {
        const auto four_211 = [&](const Configuration& c) { return plain(c, {2, 1, 1}); };
        const auto three_one = [&](const Configuration& c) { return plain(c, {3, 1}); };
        const auto two_two = [&](const Configuration& c) { return plain(c, {2, 2}); };
        if (either(full, four_211) || either(three_one, two_two)) return Marker::S1;
    }
    if (either(full_minus, two_blocks)) return Marker::S2;
    if (either(small_big_minus, big_small)) return Marker::S3;
    if (big_small(x) && big_small(y)) return Marker::S4;
    return std::nullopt;
}

std::vector<std::string> TableDocument::labels() const
{
    std::vector<std::string> out;
    for (const auto& c : configs) out.push_back(c.label());
    return out;
}

TableDocument eligibility_table(int p, Space space, Format format)
{
    std::vector<Configuration> configs;
    for (auto& c : enumerate_configs(p, space))
        if (c.u == 0) configs.push_back(std::move(c));

    if (!configs.empty() && configs.front().is_regular()) {
        bool all = true;
        for (const auto& c : configs) all = all && is_eligible(configs.front(), c, space).eligible;
        if (all) configs.erase(configs.begin());
    }

    TableDocument doc;
    doc.p = p;
    doc.space = space;
    doc.format = format;
    doc.configs = configs;
    const std::size_t n = configs.size();
    doc.cells.assign(n, std::vector<std::optional<Marker>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (!is_eligible(configs[i], configs[j], space).eligible) {
                doc.cells[i][j] = Marker::Cross;
                continue;
            }
            const auto tag = space == Space::RealD ? reduction_case(configs[i], configs[j]) : std::nullopt;
            doc.cells[i][j] = tag.value_or(Marker::Check);
        }
    return doc;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string render(const TableDocument& doc)
{
    const auto labels = doc.labels();
    const std::size_t n = labels.size();
    std::ostringstream os;
    switch (doc.format) {
    case Format::CSV:
        os << "config";
        for (const auto& l : labels) os << ',' << csv_field(l);
        os << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            os << csv_field(labels[i]);
            for (std::size_t j = 0; j < n; ++j) {
                os << ',';
                if (doc.cells[i][j]) os << to_string(*doc.cells[i][j]);
            }
            os << '\n';
        }
        break;
    case Format::JSON: {
        json cells = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j)
                row.push_back(doc.cells[i][j] ? json(std::string(to_string(*doc.cells[i][j]))) : json(nullptr));
            cells.push_back(row);
        }
        json out = {{"p", doc.p}, {"space", std::string(to_string(doc.space))}, {"configs", labels}, {"cells", cells}};
        os << out.dump(2) << '\n';
        break;
    }
    case Format::Markdown:
        os << '|';
        for (const auto& l : labels) os << ' ' << l << " |";
        os << " |\n|";
        for (std::size_t j = 0; j <= n; ++j) os << ":-:|";
        os << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            os << '|';
            for (std::size_t j = 0; j < n; ++j) {
                os << ' ';
                if (doc.cells[i][j]) os << md_symbol(*doc.cells[i][j]);
                os << " |";
            }
            os << ' ' << labels[i] << " |\n";
        }
        break;
    }
    return os.str();
}

MarkerGrid grid_of(const TableDocument& doc)
{
    return {doc.labels(), doc.cells};
}

MarkerGrid parse_table(std::string_view text, Format format)
{
    MarkerGrid grid;
    const auto marker_of = [](const std::string& s) -> std::optional<Marker> {
        if (s.empty()) return std::nullopt;
        return parse_marker(s);
    };
    if (format == Format::JSON) {
        const json j = json::parse(text);
        grid.labels = j.at("configs").get<std::vector<std::string>>();
        for (const auto& row : j.at("cells")) {
            std::vector<std::optional<Marker>> r;
            for (const auto& cell : row) r.push_back(cell.is_null() ? std::nullopt : marker_of(cell.get<std::string>()));
            grid.cells.push_back(std::move(r));
        }
        return grid;
    }
    if (format != Format::CSV) throw InvalidArgument("parse_table: only csv and json are machine readable");

    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line)) throw InvalidArgument("parse_table: empty input");
    auto header = csv_split(line);
    grid.labels.assign(header.begin() + 1, header.end());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = csv_split(line);
        if (fields.size() != grid.labels.size() + 1) throw InvalidArgument("parse_table: ragged csv row");
        std::vector<std::optional<Marker>> r;
        for (std::size_t k = 1; k < fields.size(); ++k) r.push_back(marker_of(fields[k]));
        grid.cells.push_back(std::move(r));
    }
    return grid;
}

// ---------------------------------------------------------------------------
// sweeps

Rng task_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
    }
    if (error) std::rethrow_exception(error);
}

bool CrossCheckReport::all_agree() const
{
    return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& r) { return r.agree; });
}

CrossCheckReport cross_check(int p, Space space, int trials, std::uint64_t seed, CertMode mode, unsigned threads)
{
    if (space == Space::QuaternionC) throw Unsupported("cross_check: quaternionic certification is not available");
    const auto configs = enumerate_configs(p, space);

    CrossCheckReport report{p, space, trials, seed, {}};
    for (std::size_t a = 0; a < configs.size(); ++a)
        for (std::size_t b = a; b < configs.size(); ++b) report.pairs.push_back({configs[a], configs[b], {}, {}, false});

    parallel_for(report.pairs.size(), [&](std::size_t i) {
        PairReport& r = report.pairs[i];
        Rng rng = task_rng(seed, i);
        r.eligibility = is_eligible(r.x_config, r.y_config, space);
        r.cert = certify_pair(r.x_config.representative(), r.y_config.representative(), space, trials, mode, rng);
        r.agree = r.eligibility.eligible == (r.cert.verdict == CertVerdict::Dense);
    }, threads);
    return report;
}

namespace {

json vector_json(const CartanVector& v)
{
    return json(v.values());
}

}  // namespace

std::string render(const CrossCheckReport& report, Format format)
{
    std::ostringstream os;
    switch (format) {
    case Format::CSV:
        os << "x_config,y_config,eligible,verdict,rank,target,agree\n";
        for (const auto& r : report.pairs)
            os << csv_field(r.x_config.label()) << ',' << csv_field(r.y_config.label()) << ','
               << (r.eligibility.eligible ? "true" : "false") << ',' << to_string(r.cert.verdict) << ','
               << r.cert.achieved_rank << ',' << r.cert.target_dim << ',' << (r.agree ? "true" : "false") << '\n';
        break;
    case Format::JSON: {
        json arr = json::array();
        for (const auto& r : report.pairs)
            arr.push_back({{"x_config", r.x_config.label()},
                           {"y_config", r.y_config.label()},
                           {"x", vector_json(r.x_config.representative())},
                           {"y", vector_json(r.y_config.representative())},
                           {"eligible", r.eligibility.eligible},
                           {"rule", std::string(to_string(r.eligibility.rule))},
                           {"verdict", std::string(to_string(r.cert.verdict))},
                           {"rank", r.cert.achieved_rank},
                           {"target", r.cert.target_dim},
                           {"trials", r.cert.trials},
                           {"mode", std::string(to_string(r.cert.mode))},
                           {"tolerance", r.cert.tolerance},
                           {"agree", r.agree}});
        os << arr.dump(2) << '\n';
        break;
    }
    case Format::Markdown:
        os << "| x | y | eligible | verdict | rank | target | agree |\n|---|---|:-:|---|--:|--:|:-:|\n";
        for (const auto& r : report.pairs)
            os << "| " << r.x_config.label() << " | " << r.y_config.label() << " | "
               << (r.eligibility.eligible ? "yes" : "no") << " | " << to_string(r.cert.verdict) << " | "
               << r.cert.achieved_rank << " | " << r.cert.target_dim << " | " << (r.agree ? "yes" : "**NO**")
               << " |\n";
        break;
    }
    return os.str();
}

PowerReport power_table(int p, Space space, int l_max, int trials, std::uint64_t seed,
                        std::vector<Configuration> configs, unsigned threads)
{
    if (l_max < 2) throw InvalidArgument("power_table: l_max must be >= 2");
    if (configs.empty()) configs = enumerate_configs(p, space);

    PowerReport report{p, space, l_max, {}};
    for (auto& c : configs) report.rows.push_back({std::move(c), {}, std::nullopt});

    parallel_for(report.rows.size(), [&](std::size_t i) {
        PowerRow& row = report.rows[i];
        Rng rng = task_rng(seed, i);
        const CartanVector x = row.config.representative();
        for (int l = 2; l <= l_max; ++l) {
            row.results.push_back(power_certify(x, l, space, trials, rng));
            if (row.results.back().verdict == CertVerdict::Dense) {
                row.minimal_l = l;
                break;
            }
        }
    }, threads);
    return report;
}

std::string render(const PowerReport& report, Format format)
{
    std::ostringstream os;
    const auto ranks = [](const PowerRow& row) {
        std::string s;
        for (std::size_t i = 0; i < row.results.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(row.results[i].achieved_rank) + "/" + std::to_string(row.results[i].target_dim);
        }
        return s;
    };
    switch (format) {
    case Format::CSV:
        os << "config,minimal_l,ranks\n";
        for (const auto& row : report.rows)
            os << csv_field(row.config.label()) << ','
               << (row.minimal_l ? std::to_string(*row.minimal_l) : "none<=" + std::to_string(report.l_max)) << ','
               << ranks(row) << '\n';
        break;
    case Format::JSON: {
        json arr = json::array();
        for (const auto& row : report.rows) {
            json results = json::array();
            for (std::size_t i = 0; i < row.results.size(); ++i)
                results.push_back({{"l", static_cast<int>(i) + 2},
                                   {"verdict", std::string(to_string(row.results[i].verdict))},
                                   {"rank", row.results[i].achieved_rank},
                                   {"target", row.results[i].target_dim}});
            arr.push_back({{"config", row.config.label()},
                           {"minimal_l", row.minimal_l ? json(*row.minimal_l) : json(nullptr)},
                           {"results", results}});
        }
        json out = {{"p", report.p}, {"space", std::string(to_string(report.space))}, {"l_max", report.l_max},
                    {"rows", arr}};
        os << out.dump(2) << '\n';
        break;
    }
    case Format::Markdown:
        os << "| config | minimal l | ranks (l = 2, 3, ...) |\n|---|--:|---|\n";
        for (const auto& row : report.rows)
            os << "| " << row.config.label() << " | "
               << (row.minimal_l ? std::to_string(*row.minimal_l) : "none <= " + std::to_string(report.l_max))
               << " | " << ranks(row) << " |\n";
        break;
    }
    return os.str();
}

}  // namespace orbconv
