#include <isobaric/arith.hpp>
#include <isobaric/bfile.hpp>
#include <isobaric/cli.hpp>
#include <isobaric/families.hpp>
#include <isobaric/identities.hpp>
#include <isobaric/matrixops.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

namespace isobaric::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

Json to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json to_json(const Rational& v) {
    if (v.get_den() == 1) return to_json(Int(v.get_num()));
    return to_string(v);
}

Json to_json(const IsobaricPoly& p) { return p.to_string(); }

template <class T>
Json to_json(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(std::span<const Int> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

std::string text(const Int& v) { return v.get_str(); }
std::string text(const Rational& v) { return to_string(v); }
std::string text(const IsobaricPoly& p) { return p.to_string(); }

Json header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

template <class Fn>
auto parse_flag(const std::string& flag, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Core parse_core(const std::string& flag, const std::string& value, bool series) {
    return parse_flag(flag, [&] {
        auto c = Core::parse(value);
        return series ? Core::truncated_series(std::vector<Int>(c.coefficients().begin(), c.coefficients().end())) : c;
    });
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// One command's parsed flags; unused fields stay at their defaults.
struct Options {
    std::string format = "text";
    std::string weights = "ones";
    std::optional<std::size_t> k;
    std::optional<std::string> core;
    bool series = false;
    unsigned n = 0;
    bool all = false;
    std::string sign = "plus";
    bool weight_form = false;
    std::string type = "companion";
    long from = 0;
    long to = 0;
    std::size_t leg = 0;
    std::string p_list, q_list;
    bool inverse = false;
    std::optional<std::string> values;
    std::optional<std::string> index0;
    bool from_glp = false;
    std::string a, b;
    std::string mode = "f";
    std::optional<std::string> bfile;
    std::optional<std::size_t> max_k;
    std::string name;
    std::optional<std::string> prime, x, y;
    std::optional<unsigned> param_k;
    std::string g0 = "default";
    std::string which = "f";
    unsigned depth = 12;
    std::uint64_t seed = 20240611;
    bool serial = false;
    bool timing = false;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    Format format() const {
        if (o_.format == "json") return Format::json;
        if (o_.format == "csv") return Format::csv;
        return Format::text;
    }

    void require_sequence_format(const std::string& command) const {
        if (format() == Format::csv) throw UsageError("--format: csv is only available for sequence outputs, not '" + command + "'");
    }

    void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

    template <class T>
    void emit_sequence(Json head, const std::string& label, const std::vector<T>& values, long offset) {
        switch (format()) {
            case Format::json:
                head["offset"] = offset;
                head["values"] = to_json(values);
                emit(head);
                break;
            case Format::csv:
                out_ << "n," << label << '\n';
                for (std::size_t i = 0; i < values.size(); ++i) out_ << offset + static_cast<long>(i) << ',' << text(values[i]) << '\n';
                break;
            case Format::text:
                for (std::size_t i = 0; i < values.size(); ++i)
                    out_ << label << '_' << offset + static_cast<long>(i) << " = " << text(values[i]) << '\n';
                break;
        }
    }

    void exactly_one_of_k_core() const {
        if (o_.k.has_value() == o_.core.has_value()) throw UsageError("--k/--core: give exactly one of --k (symbolic) or --core (numeric)");
    }

    Core core_flag() const {
        if (!o_.core) throw UsageError("--core is required");
        return parse_core("--core", *o_.core, o_.series);
    }

    WeightVector weights_flag() const {
        return parse_flag("--weights", [&] { return WeightVector::parse(o_.weights); });
    }

    Int prime_flag() const {
        if (!o_.prime) throw UsageError("--prime is required");
        return parse_flag("--prime", [&] { return parse_int(*o_.prime); });
    }

    int wip() {
        require_sequence_format("wip");
        auto omega = weights_flag();
        const std::size_t k = *o_.k;
        auto seq = wip_recursive(omega, k, o_.n);
        if (format() == Format::json) {
            Json j = header("wip");
            j["weights"] = omega.describe();
            j["k"] = k;
            j["n"] = o_.n;
            auto poly_json = [](const IsobaricPoly& p) {
                Json terms = Json::array();
                for (const auto& [alpha, c] : p.terms()) {
                    Json m = Json::array();
                    for (unsigned e : alpha.multiplicities()) m.push_back(e);
                    terms.push_back(Json{{"alpha", m}, {"coefficient", to_json(c)}});
                }
                return Json{{"polynomial", p.to_string()}, {"terms", terms}};
            };
            if (o_.all) {
                Json list = Json::array();
                for (std::size_t i = 0; i < seq.size(); ++i) list.push_back(poly_json(seq[i]));
                j["sequence"] = list;
            } else {
                auto pj = poly_json(seq[o_.n]);
                j["polynomial"] = pj["polynomial"];
                j["terms"] = pj["terms"];
            }
            emit(j);
        } else if (o_.all) {
            for (std::size_t i = 0; i < seq.size(); ++i) out_ << "P_" << i << " = " << seq[i].to_string() << '\n';
        } else {
            out_ << seq[o_.n].to_string() << '\n';
        }
        return 0;
    }

    int fibonacci_lucas(bool lucas) {
        exactly_one_of_k_core();
        const std::string command = lucas ? "glp" : "gfp";
        const std::string label = lucas ? "G" : "F";
        if (o_.k) {
            auto seq = lucas ? glp(*o_.k, o_.n) : gfp(*o_.k, o_.n);
            Json head = header(command);
            head["k"] = *o_.k;
            emit_sequence(head, label, seq.polys, 0);
        } else {
            auto core = core_flag();
            auto values = lucas ? glp_values(core, o_.n) : gfp_values(core, o_.n);
            Json head = header(command);
            head["core"] = core.to_string();
            emit_sequence(head, label, values, 0);
        }
        return 0;
    }

    int hessenberg_cmd() {
        require_sequence_format("hessenberg");
        exactly_one_of_k_core();
        if (o_.n == 0) throw UsageError("--n must be positive");
        auto omega = weights_flag();
        auto sign = o_.sign == "minus" ? HessenbergSign::minus : HessenbergSign::plus;
        if (o_.weight_form) {
            if (!o_.k) throw UsageError("--weight-form needs symbolic --k");
            auto perm = hessenberg_weight_form(sign, *o_.k, o_.n, true);
            auto det = hessenberg_weight_form(sign, *o_.k, o_.n, false);
            if (format() == Format::json) {
                Json j = header("hessenberg");
                j["k"] = *o_.k;
                j["n"] = o_.n;
                j["sign"] = o_.sign;
                j["permanent"] = perm.to_string();
                j["determinant"] = det.to_string();
                emit(j);
            } else {
                out_ << "permanent: " << perm.to_string() << '\n' << "determinant: " << det.to_string() << '\n';
            }
            return 0;
        }
        auto report = [&](const auto& h) {
            auto perm = permanent_hessenberg(h);
            auto det = determinant_hessenberg(h);
            if (format() == Format::json) {
                Json j = header("hessenberg");
                j["n"] = o_.n;
                j["sign"] = o_.sign;
                j["weights"] = omega.describe();
                Json rows = Json::array();
                for (std::size_t i = 0; i < h.rows(); ++i) {
                    Json r = Json::array();
                    for (std::size_t c = 0; c < h.cols(); ++c) r.push_back(to_json(h(i, c)));
                    rows.push_back(r);
                }
                j["matrix"] = rows;
                j["permanent"] = to_json(perm);
                j["determinant"] = to_json(det);
                emit(j);
            } else {
                out_ << render_rows(h) << "permanent: " << text(perm) << '\n' << "determinant: " << text(det) << '\n';
            }
        };
        if (o_.k) report(hessenberg(sign, omega, *o_.k, o_.n));
        else report(hessenberg(sign, omega, core_flag(), o_.n));
        return 0;
    }

    int window() {
        exactly_one_of_k_core();
        if (o_.from > o_.to) throw UsageError("--from must not exceed --to");
        const bool different = o_.type == "different";
        auto show = [&](const auto& w) {
            const std::size_t k = w.k();
            switch (format()) {
                case Format::json: {
                    Json j = header("window");
                    j["type"] = o_.type;
                    Json rows = Json::array();
                    for (long n = o_.from; n <= o_.to; ++n) rows.push_back(Json{{"n", n}, {"entries", to_json(w.row(n))}});
                    j["rows"] = rows;
                    emit(j);
                    break;
                }
                case Format::csv:
                    out_ << 'n';
                    for (std::size_t c = 1; c <= k; ++c) out_ << ",c" << c;
                    out_ << '\n';
                    for (long n = o_.from; n <= o_.to; ++n) {
                        out_ << n;
                        for (const auto& x : w.row(n)) out_ << ',' << text(x);
                        out_ << '\n';
                    }
                    break;
                case Format::text:
                    for (long n = o_.from; n <= o_.to; ++n) {
                        out_ << n << ":";
                        for (const auto& x : w.row(n)) out_ << "  " << text(x);
                        out_ << '\n';
                    }
                    break;
            }
        };
        if (o_.k) {
            if (different) show(different_window(*o_.k, o_.from, o_.to));
            else show(companion_window(*o_.k, o_.from, o_.to));
        } else {
            auto core = core_flag();
            if (different) show(different_window(core, o_.from, o_.to));
            else show(companion_window(core, o_.from, o_.to));
        }
        return 0;
    }

    int schur_hook_cmd() {
        require_sequence_format("schur-hook");
        auto p = schur_hook(*o_.k, o_.n, o_.leg);
        if (format() == Format::json) {
            Json j = header("schur-hook");
            j["k"] = *o_.k;
            j["n"] = o_.n;
            j["leg"] = o_.leg;
            j["polynomial"] = p.to_string();
            emit(j);
        } else {
            out_ << p.to_string() << '\n';
        }
        return 0;
    }

    int convolve_cmd() {
        auto p = parse_flag("--p", [&] { return parse_rational_list(o_.p_list); });
        Json head = header("convolve");
        if (o_.inverse) {
            if (!o_.q_list.empty()) throw UsageError("--q: not used with --inverse");
            const std::size_t N = o_.n ? o_.n : p.size() - 1;
            emit_sequence(head, "Q", conv_inverse<Rational>(p, N), 0);
            return 0;
        }
        auto q = parse_flag("--q", [&] { return parse_rational_list(o_.q_list); });
        const std::size_t N = o_.n ? o_.n : std::min(p.size(), q.size()) - 1;
        emit_sequence(head, "R", convolve<Rational>(p, q, N), 0);
        return 0;
    }

    // Values given as P_1..P_N; index 0 is set by --index0.
    std::vector<Rational> index_one_values(std::size_t& N) const {
        auto v = parse_flag("--values", [&] { return parse_rational_list(*o_.values); });
        N = v.size();
        std::vector<Rational> p{0};
        p.insert(p.end(), v.begin(), v.end());
        return p;
    }

    int log_exp(bool log) {
        auto core = core_flag();
        std::optional<Rational> index0;
        if (o_.index0) index0 = parse_flag("--index0", [&] { return parse_rational(*o_.index0); });
        std::vector<Rational> p;
        std::size_t N = o_.n;
        if (o_.values) {
            p = index_one_values(N);
        } else {
            if (N == 0) throw UsageError("--n is required when --values is absent");
            p = to_rationals(log ? gfp_values(core, N) : glp_values(core, N));
        }
        auto result = log ? iso_log(core, p, N, index0) : iso_exp(core, p, N, index0);
        Json head = header(log ? "log" : "exp");
        head["core"] = core.to_string();
        emit_sequence(head, log ? "L" : "E", result, 0);
        return 0;
    }

    int trig() {
        auto core = core_flag();
        IsoTrig t = o_.from_glp ? isotrig_from_glp(core, to_rationals(glp_values(core, o_.n)), o_.n) : isotrig(core, o_.n);
        switch (format()) {
            case Format::json: {
                Json j = header("trig");
                j["core"] = core.to_string();
                j["sine"] = to_json(t.sine);
                j["cosine"] = to_json(t.cosine);
                emit(j);
                break;
            }
            case Format::csv:
                out_ << "n,S,C\n";
                for (std::size_t n = 0; n <= o_.n; ++n) out_ << n << ',' << text(t.sine[n]) << ',' << text(t.cosine[n]) << '\n';
                break;
            case Format::text:
                for (std::size_t n = 0; n <= o_.n; ++n)
                    out_ << "S_" << n << " = " << text(t.sine[n]) << "    C_" << n << " = " << text(t.cosine[n]) << '\n';
                break;
        }
        return 0;
    }

    int core_product_cmd() {
        require_sequence_format("core-product");
        auto a = parse_core("--a", o_.a, false), b = parse_core("--b", o_.b, false);
        auto c = core_product(a, b);
        if (format() == Format::json) {
            Json j = header("core-product");
            j["a"] = to_json(a.coefficients());
            j["b"] = to_json(b.coefficients());
            j["core"] = to_json(c.coefficients());
            emit(j);
        } else {
            out_ << c.to_string() << '\n';
        }
        return 0;
    }

    int fit() {
        require_sequence_format("fit");
        if (o_.values.has_value() == o_.bfile.has_value()) throw UsageError("--values/--bfile: give exactly one");
        std::vector<Int> values;
        long offset = o_.mode == "f" ? 0 : 1;
        if (o_.values) {
            values = parse_flag("--values", [&] { return parse_int_list(*o_.values); });
        } else {
            auto b = parse_flag("--bfile", [&] { return read_bfile(*o_.bfile); });
            if (b.offset > offset) {
                throw DomainError("b-file starts at index " + std::to_string(b.offset) + ", " + o_.mode +
                                  "-fit needs index " + std::to_string(offset));
            }
            const auto skip = static_cast<std::size_t>(offset - b.offset);
            if (skip >= b.values.size()) throw DomainError("b-file has no values from index " + std::to_string(offset));
            values.assign(b.values.begin() + static_cast<long>(skip), b.values.end());
        }
        if (values.size() < 2) throw UsageError("--values: need at least two values");
        const std::size_t max_k = o_.max_k.value_or(values.size() - 2);
        auto r = o_.mode == "g" ? fit_core_g(values, max_k) : fit_core_f(values, max_k);
        if (format() == Format::text) {
            out_ << "core: " << r.as_core().to_string() << '\n'
                 << "terminating: " << yes_no(r.terminating) << '\n'
                 << "k: " << r.k << '\n'
                 << "verified: " << r.verified_length << " values\n";
            if (r.minimal) out_ << "minimal: " << yes_no(*r.minimal) << '\n';
            return 0;
        }
        Json j = header("fit");
        j["mode"] = o_.mode;
        j["offset"] = offset;
        j["core"] = to_json(r.core);
        j["terminating"] = r.terminating;
        j["k"] = r.k;
        j["verified_length"] = r.verified_length;
        j["minimal"] = r.minimal ? Json(*r.minimal) : Json(nullptr);
        emit(j);
        return 0;
    }

    int family_cmd() {
        FamilyParams params;
        if (o_.prime) params.p = parse_flag("--prime", [&] { return parse_int(*o_.prime); });
        if (o_.x) params.x = parse_flag("--x", [&] { return parse_int(*o_.x); });
        if (o_.y) params.y = parse_flag("--y", [&] { return parse_int(*o_.y); });
        params.k = o_.param_k;
        const unsigned N = o_.n ? o_.n : 10;
        auto e = family(o_.name, params, N);
        std::optional<Int> g0 = e.g0;
        if (o_.g0 == "omit") g0.reset();
        else if (o_.g0 != "default") g0 = parse_flag("--g0", [&] { return parse_int(o_.g0); });
        switch (format()) {
            case Format::json: {
                Json j = header("family");
                j["name"] = e.name;
                j["core"] = e.core.to_string();
                j["class"] = to_string(e.representability);
                j["closed_form"] = e.closed_form;
                j["f_values"] = to_json(e.f_values);
                j["g0"] = g0 ? to_json(*g0) : Json(nullptr);
                j["g_values"] = to_json(std::vector<Int>(e.g_values.begin() + 1, e.g_values.end()));
                emit(j);
                break;
            }
            case Format::csv:
                out_ << "n,F,G\n";
                for (unsigned n = 0; n <= N; ++n) {
                    out_ << n << ',' << e.f_values[n] << ',';
                    if (n > 0) out_ << e.g_values[n];
                    else if (g0) out_ << *g0;
                    out_ << '\n';
                }
                break;
            case Format::text:
                out_ << "family: " << e.name << '\n'
                     << "core: " << e.core.to_string() << '\n'
                     << "class: " << to_string(e.representability) << '\n'
                     << "closed form: " << e.closed_form << '\n'
                     << "F:";
                for (const auto& v : e.f_values) out_ << ' ' << v;
                out_ << "\nG:";
                if (g0) out_ << " [" << *g0 << "]";
                for (unsigned n = 1; n <= N; ++n) out_ << ' ' << e.g_values[n];
                out_ << '\n';
                break;
        }
        return 0;
    }

    static Json period_json(const PeriodReport& r) {
        return Json{{"period", r.period}, {"preperiod", r.preperiod}, {"invertible", r.invertible}};
    }

    int period() {
        require_sequence_format("period");
        auto core = core_flag();
        auto p = prime_flag();
        auto r = period_mod(core, p, o_.which == "g" ? SequenceKind::g : SequenceKind::f);
        if (format() == Format::json) {
            Json j = header("period");
            j["core"] = to_json(core.coefficients());
            j["prime"] = to_json(p);
            j["which"] = o_.which;
            j.update(period_json(r));
            emit(j);
        } else {
            out_ << "period: " << r.period << '\n' << "preperiod: " << r.preperiod << '\n'
                 << "invertible: " << yes_no(r.invertible) << '\n';
        }
        return 0;
    }

    int ramify() {
        require_sequence_format("ramify");
        auto core = core_flag();
        auto p = prime_flag();
        auto r = ramification_check(core, p);
        if (format() == Format::json) {
            Json j = header("ramify");
            j["core"] = to_json(core.coefficients());
            j["prime"] = to_json(p);
            j["delta"] = to_json(r.delta);
            j["divides"] = r.divides;
            j["c_p"] = r.f_period.period;
            j["c_prime_p"] = r.g_period.period;
            j["preperiod_f"] = r.f_period.preperiod;
            j["preperiod_g"] = r.g_period.preperiod;
            j["period_relation"] = r.period_relation;
            j["degenerate"] = r.degenerate;
            j["agree"] = r.agree ? Json(*r.agree) : Json(nullptr);
            emit(j);
        } else {
            out_ << "Delta = " << r.delta << '\n'
                 << "p divides Delta: " << yes_no(r.divides) << '\n'
                 << "c_p = " << r.f_period.period << '\n'
                 << "c'_p = " << r.g_period.period << '\n'
                 << "c_p = p c'_p: " << yes_no(r.period_relation) << '\n';
            if (r.degenerate) out_ << "degenerate: p divides t_k\n";
            else out_ << "agree = " << (*r.agree ? "true" : "false") << '\n';
        }
        return 0;
    }

    int identities(std::ostream& err) {
        require_sequence_format("identities");
        IdentityOptions opts;
        opts.depth = o_.depth;
        opts.seed = o_.seed;
        opts.parallel = !o_.serial;
        auto results = run_identities(opts);
        const IdentityResult* first_bad = nullptr;
        for (const auto& r : results)
            if (!r.passed() && !first_bad) first_bad = &r;
        if (format() == Format::json) {
            Json j = header("identities");
            j["depth"] = o_.depth;
            Json list = Json::array();
            for (const auto& r : results) {
                Json item{{"name", r.name}, {"passed", r.passed()}, {"cells", r.cells}, {"failures", r.failure_count},
                          {"examples", r.failures}};
                if (o_.timing) item["seconds"] = r.seconds;
                list.push_back(item);
            }
            j["results"] = list;
            j["passed"] = first_bad == nullptr;
            emit(j);
        } else {
            for (const auto& r : results) {
                out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cells << " cells";
                if (!r.passed()) out_ << ", " << r.failure_count << " failed";
                out_ << ")";
                if (o_.timing) out_ << " " << r.seconds << "s";
                out_ << '\n';
                for (const auto& f : r.failures) out_ << "    " << f << '\n';
            }
        }
        if (first_bad) {
            err << "identity violated: " << first_bad->name << '\n';
            return 1;
        }
        return 0;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

void add_format(CLI::App* sub, Options& o, bool csv) {
    std::vector<std::string> allowed{"text", "json"};
    if (csv) allowed.emplace_back("csv");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
}

void add_k_or_core(CLI::App* sub, Options& o) {
    sub->add_option("--k", o.k, "Symbolic core degree")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    sub->add_option("--core", o.core, "Numeric core t1,...,tk");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact arithmetic on weighted isobaric polynomials", "isobaric"};
    app.require_subcommand(1);

    std::map<std::string, std::function<int(Runner&)>> actions;

    auto* wip = app.add_subcommand("wip", "Weighted isobaric polynomial P_n");
    wip->add_option("--weights", o.weights, "ones, identity, const:c or w1,w2,...");
    wip->add_option("--k", o.k, "Core degree")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    wip->add_option("--n", o.n, "Isobaric degree")->required();
    wip->add_flag("--all", o.all, "Print P_0..P_n");
    add_format(wip, o, false);
    actions["wip"] = [](Runner& r) { return r.wip(); };

    for (const char* name : {"gfp", "glp"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "gfp" ? "Generalized Fibonacci polynomials or values"
                                                                       : "Generalized Lucas polynomials or values");
        add_k_or_core(sub, o);
        sub->add_flag("--series", o.series, "Treat --core as a truncated power-series prefix");
        sub->add_option("--n", o.n, "Last index")->required();
        add_format(sub, o, true);
        const bool lucas = std::string(name) == "glp";
        actions[name] = [lucas](Runner& r) { return r.fibonacci_lucas(lucas); };
    }

    auto* hess = app.add_subcommand("hessenberg", "Hessenberg matrix H+ or H- with permanent and determinant");
    add_k_or_core(hess, o);
    hess->add_option("--n", o.n, "Matrix size")->required();
    hess->add_option("--weights", o.weights, "Weights for the last row");
    hess->add_option("--sign", o.sign, "Superdiagonal sign")->check(CLI::IsMember({"plus", "minus"}));
    hess->add_flag("--weight-form", o.weight_form, "Weight-linear symbolic form");
    add_format(hess, o, false);
    actions["hessenberg"] = [](Runner& r) { return r.hessenberg_cmd(); };

    auto* win = app.add_subcommand("window", "Rows of the companion or different window");
    add_k_or_core(win, o);
    win->add_option("--type", o.type, "companion or different")->check(CLI::IsMember({"companion", "different"}));
    win->add_option("--from", o.from, "First row")->required();
    win->add_option("--to", o.to, "Last row")->required();
    add_format(win, o, true);
    actions["window"] = [](Runner& r) { return r.window(); };

    auto* hook = app.add_subcommand("schur-hook", "Hook Schur polynomial from a window entry");
    hook->add_option("--k", o.k, "Core degree")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    hook->add_option("--n", o.n, "Row")->required();
    hook->add_option("--leg", o.leg, "Leg length")->required();
    add_format(hook, o, false);
    actions["schur-hook"] = [](Runner& r) { return r.schur_hook_cmd(); };

    auto* conv = app.add_subcommand("convolve", "Convolution product or inverse of rational sequences");
    conv->add_option("--p", o.p_list, "P_0,P_1,...")->required();
    conv->add_option("--q", o.q_list, "Q_0,Q_1,...");
    conv->add_flag("--inverse", o.inverse, "Convolution inverse of P");
    conv->add_option("--n", o.n, "Last index");
    add_format(conv, o, true);
    actions["convolve"] = [](Runner& r) { return r.convolve_cmd(); };

    for (const char* name : {"log", "exp"}) {
        const bool log = std::string(name) == "log";
        auto* sub = app.add_subcommand(name, log ? "Isobaric logarithm" : "Isobaric exponential");
        sub->add_option("--core", o.core, "Core t1,...,tk")->required();
        sub->add_flag("--series", o.series, "Treat --core as a truncated power-series prefix");
        sub->add_option("--values", o.values, log ? "P_1,...,P_N (default: the core's F-values)"
                                                  : "P_1,...,P_N (default: the core's G-values)");
        sub->add_option("--n", o.n, "Last index when --values is absent");
        sub->add_option("--index0", o.index0, "Index-0 output value");
        add_format(sub, o, true);
        actions[name] = [log](Runner& r) { return r.log_exp(log); };
    }

    auto* trig = app.add_subcommand("trig", "Isosine and isocosine");
    trig->add_option("--core", o.core, "Core t1,...,tk")->required();
    trig->add_flag("--series", o.series, "Treat --core as a truncated power-series prefix");
    trig->add_option("--n", o.n, "Last index")->required();
    trig->add_flag("--from-glp", o.from_glp, "Compute from E(G) and its convolution inverse");
    add_format(trig, o, true);
    actions["trig"] = [](Runner& r) { return r.trig(); };

    auto* prod = app.add_subcommand("core-product", "Core whose GLP is the sum of two GLPs");
    prod->add_option("--a", o.a, "First core")->required();
    prod->add_option("--b", o.b, "Second core")->required();
    add_format(prod, o, false);
    actions["core-product"] = [](Runner& r) { return r.core_product_cmd(); };

    auto* fit = app.add_subcommand("fit", "Recover a core from sequence values");
    fit->add_option("--mode", o.mode, "f (values from v_0 = 1) or g (values from G_1)")->check(CLI::IsMember({"f", "g"}));
    fit->add_option("--values", o.values, "Comma-separated integers");
    fit->add_option("--bfile", o.bfile, "b-file with `n value` lines");
    fit->add_option("--max-k", o.max_k, "Largest core degree reported as terminating");
    o.format = "json";
    add_format(fit, o, false);
    actions["fit"] = [](Runner& r) { return r.fit(); };

    auto* fam = app.add_subcommand("family", "Catalog family with regenerated values");
    fam->add_option("--name", o.name, "Family name")->required()->check(CLI::IsMember(family_names()));
    fam->add_option("--prime", o.prime, "Prime p");
    fam->add_option("--k", o.param_k, "Order or column");
    fam->add_option("--x", o.x, "Parameter x");
    fam->add_option("--y", o.y, "Parameter y");
    fam->add_option("--n", o.n, "Last index (default 10)");
    fam->add_option("--g0", o.g0, "Index-0 companion value: default, omit or an integer");
    add_format(fam, o, true);
    actions["family"] = [](Runner& r) { return r.family_cmd(); };

    auto* per = app.add_subcommand("period", "Period of the F or G sequence mod p");
    per->add_option("--core", o.core, "Core t1,...,tk")->required();
    per->add_option("--prime", o.prime, "Prime p")->required();
    per->add_option("--which", o.which, "f or g")->check(CLI::IsMember({"f", "g"}));
    add_format(per, o, false);
    actions["period"] = [](Runner& r) { return r.period(); };

    auto* ram = app.add_subcommand("ramify", "Ramification check via periods mod p");
    ram->add_option("--core", o.core, "Core t1,...,tk")->required();
    ram->add_option("--prime", o.prime, "Prime p")->required();
    add_format(ram, o, false);
    actions["ramify"] = [](Runner& r) { return r.ramify(); };

    auto* ids = app.add_subcommand("identities", "Run the identity suite");
    ids->add_option("--depth", o.depth, "Sequence depth")->check(CLI::Range(3u, 40u));
    ids->add_option("--seed", o.seed, "Random seed");
    ids->add_flag("--serial", o.serial, "Single-threaded");
    ids->add_flag("--timing", o.timing, "Report seconds per identity");
    add_format(ids, o, false);

    // fit defaults to JSON; every other command to text.
    o.format = "text";
    fit->preparse_callback([&o](std::size_t) { o.format = "json"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Runner runner(o, out);
    try {
        for (auto* sub : app.get_subcommands()) {
            if (sub->get_name() == "identities") return runner.identities(err);
            return actions.at(sub->get_name())(runner);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace isobaric::cli
