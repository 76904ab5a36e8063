#include "cli.hpp"

#include "orthoieq/errors.hpp"
#include "orthoieq/hankel.hpp"
#include "orthoieq/moments.hpp"
#include "orthoieq/variants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace orthoieq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxEnumerateDegree = 12;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
    std::string preset;
    std::string gamma = "1";
    std::string p;
    std::string q;
    std::string expr;
    std::vector<std::string> interval;
    bool contour = false;
    int winding = 0;
    std::size_t count = 0;
    std::string degrees;
    std::string variant = "additive";
    std::string pattern;
    bool pattern_given = false;
    bool enumerate = false;
    bool parity = false;
    std::string a = "0";
    std::string b = "1";
    std::string f;
    unsigned precision = 0;
    bool precision_given = false;
    std::string mode = "float";
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    std::string poly_file;
};

struct DegreeRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

unsigned parse_unsigned(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw ConfigError(std::string("invalid ") + what + ": '" + text + "'");
    }
    return static_cast<unsigned>(v);
}

DegreeRange parse_degrees(const std::string& text) {
    if (text.empty()) throw ConfigError("a degree is required (-n N or -n A:B)");
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const unsigned n = parse_unsigned(text, "degree");
        return {n, n};
    }
    DegreeRange r{parse_unsigned(text.substr(0, colon), "degree"), parse_unsigned(text.substr(colon + 1), "degree")};
    if (r.first > r.last) throw ConfigError("degree range must satisfy A <= B");
    return r;
}

unsigned resolve_precision(const Options& o) {
    if (o.precision_given) return o.precision;
    if (const char* env = std::getenv("ORTHOIEQ_PRECISION"); env != nullptr && *env != '\0') {
        return parse_unsigned(env, "ORTHOIEQ_PRECISION");
    }
    return kDefaultPrecision;
}

Rational required_rational(const std::string& text, const char* flag) {
    if (text.empty()) throw ConfigError(std::string(flag) + " is required for this preset");
    return parse_rational(text);
}

Preset parse_preset(const Options& o) {
    const std::string& name = o.preset;
    if (name == "laguerre") return preset::Laguerre{parse_rational(o.gamma)};
    if (name == "jacobi-add") return preset::JacobiAdd{required_rational(o.p, "--p"), required_rational(o.q, "--q")};
    if (name == "chebyshev-u2-add") return preset::ChebyshevU2Add{};
    if (name == "jacobi-mult") return preset::JacobiMult{required_rational(o.p, "--p"), required_rational(o.q, "--q")};
    if (name == "chebyshev-u2-mult") return preset::ChebyshevU2Mult{};
    if (name == "uniform-symmetric") return preset::UniformSymmetric{};
    throw ConfigError("unknown preset '" + name + "'");
}

Weight build_weight(const Options& o) {
    const int sources = int(!o.preset.empty()) + int(!o.expr.empty()) + int(o.contour);
    if (sources != 1) throw ConfigError("specify exactly one of --preset, --expr, --contour");
    if (!o.preset.empty()) return make_preset(parse_preset(o));
    if (o.contour) return make_contour(o.winding);
    if (o.interval.size() != 2) throw ConfigError("--expr needs --interval A B");
    const Interval iv(ExtendedReal::parse(o.interval[0]), ExtendedReal::parse(o.interval[1]));
    return normalize(parse_weight(o.expr, iv));
}

std::vector<std::size_t> parse_pattern(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        const unsigned k = parse_unsigned(item, "pattern index");
        if (k >= n) throw ConfigError("pattern index " + item + " must be below the degree " + std::to_string(n));
        out.push_back(k);
    }
    return out;
}

// "r" or "re,im"; the imaginary part needs Float mode.
template <Field F>
F parse_scalar(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    const Rational re = parse_rational(text.substr(0, comma));
    const Rational im = comma == std::string::npos ? Rational(0) : parse_rational(text.substr(comma + 1));
    if constexpr (is_exact_v<F>) {
        if (im != 0) throw ModeError(std::string(flag) + " with an imaginary part requires --mode float");
        return re;
    } else {
        return Complex(Real(re), Real(im));
    }
}

// Serialization.

template <Field F>
struct Render {
    unsigned digits;

    Json scalar(const F& v) const {
        if constexpr (is_exact_v<F>) {
            return Json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
        } else {
            return Json{{"re", to_decimal(v.real(), digits)}, {"im", to_decimal(v.imag(), digits)}};
        }
    }

    Json magnitude(const Magnitude<F>& v) const {
        if constexpr (is_exact_v<F>) {
            return Json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
        } else {
            return to_decimal(v, digits);
        }
    }

    std::string text(const F& v) const {
        if constexpr (is_exact_v<F>) {
            return to_string(v);
        } else {
            return to_string(v, digits);
        }
    }

    std::string magnitude_text(const Magnitude<F>& v) const {
        if constexpr (is_exact_v<F>) {
            return to_string(v);
        } else {
            return to_decimal(v, digits);
        }
    }

    Json coefficients(const Polynomial<F>& p) const {
        Json arr = Json::array();
        for (const auto& c : p.coeffs()) arr.push_back(scalar(c));
        return arr;
    }
};

// Six significant digits, descending powers, parts below the working
// precision relative to the largest coefficient shown as 0.
template <Field F>
std::string pretty_polynomial(const Polynomial<F>& p) {
    const Complex zero(0);
    Real scale(0);
    for (const auto& c : p.coeffs()) scale = std::max(scale, magnitude_real(c));
    const Real chop = precision_tolerance(10) * scale;
    auto clean = [&](const Real& x) { return bmp::abs(x) <= chop ? Real(0) : x; };
    std::string out;
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        const Complex c = to_complex(p[k]);
        const Real re = clean(c.real());
        const Real im = clean(c.imag());
        if (re == 0 && im == 0) continue;
        std::string coef;
        bool negative = false;
        if (im == 0) {
            negative = re < 0;
            coef = to_decimal(bmp::abs(re), 6);
        } else if (re == 0) {
            negative = im < 0;
            coef = to_decimal(bmp::abs(im), 6) + "i";
        } else {
            coef = "(" + to_string(Complex(re, im), 6) + ")";
        }
        const bool unit = k > 0 && coef == "1";
        std::string term = unit ? "" : coef;
        if (k > 0) term += (unit ? "" : " ") + std::string(k == 1 ? "x" : "x^" + std::to_string(k));
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

class Emitter {
public:
    Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

    bool json() const { return format_ == "json"; }
    bool csv() const { return format_ == "csv"; }
    bool pretty() const { return format_ == "pretty"; }

    void record(const Json& j) { out_ << j.dump() << '\n'; }

    void csv_header(const std::string& header) {
        if (!header_written_) out_ << header << '\n';
        header_written_ = true;
    }

    std::ostream& stream() { return out_; }

private:
    std::ostream& out_;
    std::string format_;
    bool header_written_ = false;
};

Json base_record(const char* command, const Weight& w, Mode mode, unsigned precision) {
    return Json{{"command", command},
                {"weight", w.id()},
                {"mode", mode == Mode::Exact ? "exact" : "float"},
                {"precision", precision}};
}

// Commands.

template <Field F>
int cmd_moments(const Options& o, const Weight& w, unsigned precision, Emitter& em) {
    if (o.count == 0) throw ConfigError("--count must be at least 1");
    const MomentSequence<F> m = moments<F>(w, o.count);
    const Render<F> r{precision};
    if (em.json()) {
        Json rec = base_record("moments", w, is_exact_v<F> ? Mode::Exact : Mode::Float, precision);
        rec["source"] = to_string(m.source);
        Json values = Json::array();
        for (const auto& v : m.values) values.push_back(r.scalar(v));
        rec["moments"] = values;
        if (!m.errors.empty()) {
            Json errors = Json::array();
            for (const auto& e : m.errors) errors.push_back(to_decimal(e, 6));
            rec["errors"] = errors;
        }
        em.record(rec);
    } else if (em.csv()) {
        em.csv_header("n,value");
        for (std::size_t n = 0; n < m.size(); ++n) em.stream() << n << ',' << r.text(m[n]) << '\n';
    } else {
        em.stream() << "moments of " << w.id() << " (" << to_string(m.source) << ")\n";
        for (std::size_t n = 0; n < m.size(); ++n) {
            em.stream() << "  m_" << n << " = " << to_string(to_complex(m[n]), 6) << '\n';
        }
    }
    return kSuccess;
}

template <Field F>
std::vector<std::size_t> chosen_pattern(const Options& o, std::size_t n) {
    if (o.parity) return parity_pattern(n);
    if (o.pattern_given) return parse_pattern(o.pattern, n);
    return full_pattern(n);
}

template <Field F>
EquationForm<F> build_form(const Options& o, std::size_t n) {
    if (o.variant == "additive") return form::Additive{};
    if (o.variant == "multiplicative") return form::Multiplicative{chosen_pattern<F>(o, n)};
    if (o.variant == "shift") return form::LinearShift<F>{parse_scalar<F>(o.a, "--a"), parse_scalar<F>(o.b, "--b")};
    if (o.variant == "functional" || o.variant == "arbitrary-f") {
        if (o.f.empty()) throw ConfigError("--f is required for the " + o.variant + " variant");
        if (o.variant == "functional") return form::Functional{parse_expression(o.f)};
        return form::ArbitraryF{parse_expression(o.f)};
    }
    throw ConfigError("unknown variant '" + o.variant + "'");
}

template <Field F>
Json verification_json(const VerificationReport<F>& rep, const Render<F>& r) {
    Json residuals = Json::array();
    for (const auto& v : rep.residuals) residuals.push_back(r.magnitude(v));
    Json samples = Json::array();
    for (const auto& x : rep.samples) samples.push_back(r.scalar(x));
    return Json{{"pass", rep.pass},
                {"max_residual", r.magnitude(rep.max_residual)},
                {"quadrature_error_bound", to_decimal(rep.quadrature_error_bound, 6)},
                {"samples", samples},
                {"residuals", residuals}};
}

template <Field F>
int emit_enumeration(const Weight& w, std::size_t n, unsigned precision, const char* command, Emitter& em) {
    if (n == 0 || n > kMaxEnumerateDegree) {
        throw ConfigError("--enumerate needs 1 <= n <= " + std::to_string(kMaxEnumerateDegree));
    }
    const PatternEnumeration<F> e = enumerate_multiplicative(moments<F>(w, 2 * n + 1), n);
    const Render<F> r{precision};
    auto pattern_text = [](const std::vector<std::size_t>& s, char sep) {
        std::string t = "{";
        for (std::size_t i = 0; i < s.size(); ++i) t += (i ? std::string(1, sep) : "") + std::to_string(s[i]);
        return t + "}";
    };
    for (const auto& out : e.outcomes) {
        const std::string status = out.solution ? "ok" : out.failure.substr(0, out.failure.find(':'));
        if (em.json()) {
            Json rec = base_record(command, w, is_exact_v<F> ? Mode::Exact : Mode::Float, precision);
            rec["variant"] = "multiplicative";
            rec["degree"] = n;
            rec["pattern"] = out.pattern;
            rec["status"] = status;
            if (out.solution) {
                rec["coefficients"] = r.coefficients(*out.solution);
            } else {
                rec["failure"] = out.failure;
            }
            em.record(rec);
        } else if (em.csv()) {
            em.csv_header("degree,pattern,status,coefficients");
            std::string coeffs;
            if (out.solution) {
                for (std::size_t k = 0; k <= out.solution->degree(); ++k) {
                    coeffs += (k ? ";" : "") + r.text((*out.solution)[k]);
                }
            }
            em.stream() << n << ',' << pattern_text(out.pattern, ';') << ',' << status << ',' << coeffs << '\n';
        } else {
            em.stream() << "n=" << n << " pattern " << pattern_text(out.pattern, ',') << ": ";
            if (out.solution) {
                em.stream() << pretty_polynomial(*out.solution) << '\n';
            } else {
                em.stream() << out.failure << '\n';
            }
        }
    }
    if (em.json()) {
        Json rec = base_record(command, w, is_exact_v<F> ? Mode::Exact : Mode::Float, precision);
        rec["variant"] = "multiplicative";
        rec["degree"] = n;
        rec["patterns"] = e.outcomes.size();
        rec["distinct_solutions"] = e.distinct_solutions;
        em.record(rec);
    } else if (em.pretty()) {
        em.stream() << "n=" << n << ": " << e.outcomes.size() << " patterns, " << e.distinct_solutions
                    << " distinct solutions\n";
    }
    return kSuccess;
}

template <Field F>
Polynomial<F> solve_for(const Options& o, const Weight& w, const MomentSequence<F>& m, std::size_t n,
                        const EquationForm<F>& eq) {
    return std::visit(
        [&](const auto& v) -> Polynomial<F> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, form::Additive>) {
                return solve_polynomial(m, n);
            } else if constexpr (std::is_same_v<T, form::Multiplicative>) {
                return solve_multiplicative(m, n, v.pattern);
            } else if constexpr (std::is_same_v<T, form::LinearShift<F>>) {
                return solve_linear_shift(m, n, v.a, v.b);
            } else if constexpr (std::is_same_v<T, form::Functional>) {
                return solve_functional<F>(w, v.f, n);
            } else {
                (void)o;
                throw ConfigError("arbitrary-f is verification-only; use the verify command with --poly-file");
            }
        },
        eq);
}

template <Field F>
int cmd_poly(const Options& o, const Weight& w, unsigned precision, Emitter& em) {
    const DegreeRange range = parse_degrees(o.degrees);
    if (o.enumerate) {
        if (o.variant != "multiplicative") throw ConfigError("--enumerate applies to --variant multiplicative");
        for (std::size_t n = range.first; n <= range.last; ++n) emit_enumeration<F>(w, n, precision, "poly", em);
        return kSuccess;
    }
    const MomentSequence<F> m = moments<F>(w, 2 * range.last + 2);
    const Render<F> r{precision};
    int status = kSuccess;
    for (std::size_t n = range.first; n <= range.last; ++n) {
        const EquationForm<F> eq = build_form<F>(o, n);
        const Polynomial<F> p = solve_for(o, w, m, n, eq);
        const bool additive = std::holds_alternative<form::Additive>(eq);
        std::optional<F> g;
        std::optional<F> det_b;
        if (additive) {
            g = normalization(m, n);
            det_b = hankel_condition(m, n).determinant;
        }
        const VerificationReport<F> rep = verify(p, w, eq, default_samples<F>(w, o.seed));
        if (!rep.pass) status = kVerificationFailure;
        if (em.json()) {
            Json rec = base_record("poly", w, is_exact_v<F> ? Mode::Exact : Mode::Float, precision);
            rec["variant"] = describe(eq);
            rec["degree"] = n;
            rec["coefficients"] = r.coefficients(p);
            if (g) {
                rec["G"] = r.scalar(*g);
                rec["det_B"] = r.scalar(*det_b);
            }
            if (const auto* s = std::get_if<form::LinearShift<F>>(&eq)) {
                if constexpr (!is_exact_v<F>) {
                    if (s->a.imag() != 0 || s->b.imag() != 0) rec["complex_shift"] = true;
                }
            }
            rec["verification"] = verification_json(rep, r);
            em.record(rec);
        } else if (em.csv()) {
            em.csv_header("degree,k,coefficient,G,det_B,verified");
            for (std::size_t k = 0; k <= n; ++k) {
                em.stream() << n << ',' << k << ',' << r.text(p[k]) << ',' << (g ? r.text(*g) : "") << ','
                            << (det_b ? r.text(*det_b) : "") << ',' << (rep.pass ? "true" : "false") << '\n';
            }
        } else {
            em.stream() << "P_" << n << "(x) = " << pretty_polynomial(p) << '\n';
            if (g) {
                em.stream() << "  G_" << n << " = " << to_string(to_complex(*g), 6) << ", det B_" << n << " = "
                            << to_string(to_complex(*det_b), 6) << '\n';
            }
            em.stream() << "  verify " << describe(eq) << ": " << (rep.pass ? "pass" : "FAIL")
                        << " (max residual " << to_string(to_complex(F(rep.max_residual)), 6) << ")\n";
        }
    }
    return status;
}

template <Field F>
F read_scalar(const Json& j) {
    if (j.is_object() && j.contains("num")) {
        const Rational q = parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
        return from_rational<F>(q);
    }
    if (j.is_object() && j.contains("re")) {
        if constexpr (is_exact_v<F>) {
            throw ModeError("floating-point coefficients cannot be verified in exact mode");
        } else {
            return Complex(Real(j.at("re").get<std::string>()), Real(j.at("im").get<std::string>()));
        }
    }
    if (j.is_string()) return from_rational<F>(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return from_int<F>(j.get<long long>());
    // Shortest round-trip text of the double, read as an exact decimal.
    if (j.is_number_float()) return from_rational<F>(parse_rational(j.dump()));
    throw ConfigError("unrecognized coefficient in polynomial file: " + j.dump());
}

template <Field F>
std::vector<Polynomial<F>> read_polynomials(const std::string& path) {
    if (path.empty()) throw ConfigError("verify needs --poly-file (or --enumerate)");
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw ConfigError("cannot open polynomial file '" + path + "'");
        in = &file;
    }
    std::vector<Polynomial<F>> out;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const Json j = Json::parse(line);
        const Json& coeffs = j.is_array() ? j : j.at("coefficients");
        std::vector<F> c;
        for (const auto& v : coeffs) c.push_back(read_scalar<F>(v));
        if (c.empty()) throw ConfigError("polynomial with no coefficients");
        out.emplace_back(std::move(c));
    }
    if (out.empty()) throw ConfigError("polynomial file '" + path + "' holds no polynomials");
    return out;
}

template <Field F>
int cmd_verify(const Options& o, const Weight& w, unsigned precision, Emitter& em) {
    if (o.enumerate) {
        if (o.variant != "multiplicative") throw ConfigError("--enumerate applies to --variant multiplicative");
        const DegreeRange range = parse_degrees(o.degrees);
        for (std::size_t n = range.first; n <= range.last; ++n) emit_enumeration<F>(w, n, precision, "verify", em);
        return kSuccess;
    }
    const Render<F> r{precision};
    int status = kSuccess;
    for (const Polynomial<F>& p : read_polynomials<F>(o.poly_file)) {
        const std::size_t n = p.degree();
        EquationForm<F> eq = build_form<F>(o, n);
        if (auto* mult = std::get_if<form::Multiplicative>(&eq); mult && !o.parity && !o.pattern_given) {
            mult->pattern.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_zero(p[k])) mult->pattern.push_back(k);
            }
        }
        const VerificationReport<F> rep = verify(p, w, eq, default_samples<F>(w, o.seed));
        std::optional<ArbitraryFReport<F>> conditions;
        if (const auto* af = std::get_if<form::ArbitraryF>(&eq)) conditions = check_arbitrary_f(p, af->f, w, n);
        const bool pass = rep.pass && (!conditions || conditions->pass);
        if (!pass) status = kVerificationFailure;
        if (em.json()) {
            Json rec = base_record("verify", w, is_exact_v<F> ? Mode::Exact : Mode::Float, precision);
            rec["variant"] = describe(eq);
            rec["degree"] = n;
            rec["coefficients"] = r.coefficients(p);
            rec["verification"] = verification_json(rep, r);
            if (conditions) {
                Json values = Json::array();
                Json deviations = Json::array();
                for (const auto& v : conditions->values) values.push_back(r.scalar(v));
                for (const auto& d : conditions->deviations) deviations.push_back(r.magnitude(d));
                rec["orthogonality"] = Json{{"pass", conditions->pass},
                                            {"values", values},
                                            {"deviations", deviations},
                                            {"quadrature_error_bound",
                                             to_decimal(conditions->quadrature_error_bound, 6)}};
            }
            rec["pass"] = pass;
            em.record(rec);
        } else if (em.csv()) {
            em.csv_header("degree,sample,residual,pass");
            for (std::size_t i = 0; i < rep.samples.size(); ++i) {
                em.stream() << n << ',' << r.text(rep.samples[i]) << ',' << r.magnitude_text(rep.residuals[i]) << ','
                            << (pass ? "true" : "false") << '\n';
            }
        } else {
            em.stream() << "P(x) = " << pretty_polynomial(p) << '\n';
            em.stream() << "  verify " << describe(eq) << ": " << (pass ? "pass" : "FAIL") << " (max residual "
                        << to_string(to_complex(F(rep.max_residual)), 6) << ")\n";
        }
    }
    return status;
}

template <Field F>
int dispatch(const std::string& command, const Options& o, unsigned precision, std::ostream& out) {
    const Weight w = build_weight(o);
    Emitter em(out, o.format);
    if (command == "moments") return cmd_moments<F>(o, w, precision, em);
    if (command == "poly") return cmd_poly<F>(o, w, precision, em);
    return cmd_verify<F>(o, w, precision, em);
}

void add_weight_options(CLI::App* sub, Options& o) {
    sub->add_option("--preset", o.preset, "laguerre | jacobi-add | chebyshev-u2-add | jacobi-mult | "
                                          "chebyshev-u2-mult | uniform-symmetric");
    sub->add_option("--gamma", o.gamma, "Laguerre parameter (default 1)");
    sub->add_option("--p", o.p, "Jacobi parameter p");
    sub->add_option("--q", o.q, "Jacobi parameter q");
    sub->add_option("--expr", o.expr, "weight expression in x");
    sub->add_option("--interval", o.interval, "interval endpoints A B (inf allowed)")->expected(2);
    sub->add_flag("--contour", o.contour, "complex contour weight 1/(c x) on a path from -1 to 1");
    sub->add_option("--winding", o.winding, "extra turns of the contour around 0");
    sub->add_option("--precision", o.precision, "working precision in decimal digits");
    sub->add_option("--mode", o.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--format", o.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
}

void add_job_options(CLI::App* sub, Options& o) {
    sub->add_option("-n,--degree", o.degrees, "degree N or range A:B");
    sub->add_option("--variant", o.variant, "additive | multiplicative | shift | functional | arbitrary-f")
        ->check(CLI::IsMember({"additive", "multiplicative", "shift", "functional", "arbitrary-f"}));
    sub->add_option("--pattern", o.pattern, "multiplicative pattern, e.g. 0,2");
    sub->add_flag("--enumerate", o.enumerate, "try every multiplicative pattern");
    sub->add_flag("--parity", o.parity, "multiplicative alternating-parity pattern");
    sub->add_option("--a", o.a, "shift constant a (r or re,im)");
    sub->add_option("--b", o.b, "shift constant b (r or re,im)");
    sub->add_option("--f", o.f, "function f for functional and arbitrary-f variants");
    sub->add_option("--seed", o.seed, "seed for verification sample points");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Polynomial solutions of nonlinear integral equations", "orthoieq");
    app.require_subcommand(1);
    Options o;

    CLI::App* moments_cmd = app.add_subcommand("moments", "print the moment sequence of a weight");
    add_weight_options(moments_cmd, o);
    moments_cmd->add_option("--count", o.count, "number of moments")->required();

    CLI::App* poly_cmd = app.add_subcommand("poly", "solve for polynomial solutions");
    add_weight_options(poly_cmd, o);
    add_job_options(poly_cmd, o);

    CLI::App* verify_cmd = app.add_subcommand("verify", "substitute polynomials into an equation");
    add_weight_options(verify_cmd, o);
    add_job_options(verify_cmd, o);
    verify_cmd->add_option("--poly-file", o.poly_file, "JSON Lines file of polynomials ('-' for stdin)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    for (CLI::App* sub : {poly_cmd, verify_cmd, moments_cmd}) {
        if (sub->get_option_no_throw("--precision") != nullptr && sub->count("--precision") > 0) {
            o.precision_given = true;
        }
        if (sub->get_option_no_throw("--pattern") != nullptr && sub->count("--pattern") > 0) o.pattern_given = true;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const unsigned precision = resolve_precision(o);
        const PrecisionContext ctx = with_precision(precision);
        if (o.mode == "exact") return dispatch<Rational>(command, o, precision, out);
        return dispatch<Complex>(command, o, precision, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed polynomial file: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    }
}

}  // namespace orthoieq::cli
