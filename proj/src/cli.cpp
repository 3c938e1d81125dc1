#include "twistlcd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistlcd/constructor.hpp"
#include "twistlcd/error.hpp"
#include "twistlcd/linalg.hpp"
#include "twistlcd/symfun.hpp"
#include "twistlcd/twisted.hpp"

namespace twistlcd::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson element_json(const Fe& x) {
    if (x.field().is_prime()) return x.value();
    return x.to_string();
}

ojson elements_json(const std::vector<Fe>& xs) {
    ojson a = ojson::array();
    for (const Fe& x : xs) a.push_back(element_json(x));
    return a;
}

ojson matrix_json(const FMatrix& m) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(elements_json(m.row(i)));
    return a;
}

std::vector<std::string> strings_of(const std::vector<Fe>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Fe& x : xs) out.push_back(x.to_string());
    return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += xs[i];
    }
    return s;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string theorem_list(const std::vector<Theorem>& ts) {
    if (ts.empty()) return "none";
    std::vector<std::string> names;
    for (Theorem t : ts) names.emplace_back(to_string(t));
    return join(names);
}

int exit_status(const Error& e) {
    switch (e.code()) {
        case ErrorCode::TooLargeToEnumerate:
            return kExitGuard;
        case ErrorCode::TheoremViolation:
        case ErrorCode::InternalInconsistency:
            return kExitCounterexample;
        default:
            return kExitValidation;
    }
}

// Parameter inputs, kept as text until the field is known.
struct ParamsInput {
    std::optional<std::string> field;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> r;
    std::optional<std::string> lambda;
    std::optional<std::vector<std::string>> eta;
    std::optional<std::vector<std::string>> v;
    std::optional<std::vector<std::string>> alphas;
    std::optional<std::string> theorem;
};

std::string json_scalar_text(const nlohmann::json& j, const char* key) {
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    if (j.is_string()) return j.get<std::string>();
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer or string");
}

std::vector<std::string> json_list_text(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(json_scalar_text(x, key));
    return out;
}

std::size_t json_count(const nlohmann::json& j, const char* key) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a nonnegative integer");
    return j.get<std::size_t>();
}

ParamsInput read_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::ParseError, "'" + path + "' is not a JSON object");

    ParamsInput p;
    for (const char* key : {"q", "field"})
        if (j.contains(key)) p.field = json_scalar_text(j[key], key);
    if (j.contains("n")) p.n = json_count(j["n"], "n");
    if (j.contains("k")) p.k = json_count(j["k"], "k");
    if (j.contains("ell")) p.ell = static_cast<std::int64_t>(json_count(j["ell"], "ell"));
    if (j.contains("r")) p.r = static_cast<std::int64_t>(json_count(j["r"], "r"));
    if (j.contains("lambda")) p.lambda = json_scalar_text(j["lambda"], "lambda");
    if (j.contains("eta")) p.eta = json_list_text(j["eta"], "eta");
    if (j.contains("v")) p.v = json_list_text(j["v"], "v");
    if (j.contains("alphas")) p.alphas = json_list_text(j["alphas"], "alphas");
    if (j.contains("theorem")) p.theorem = json_scalar_text(j["theorem"], "theorem");
    return p;
}

struct Resolved {
    std::optional<TwistedParams> params;
    std::optional<TheoremSpec> spec;
    std::vector<Theorem> certified;
};

std::vector<Fe> parse_elements(const FieldCtx& f, const std::vector<std::string>& xs) {
    std::vector<Fe> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(f.parse(x));
    return out;
}

Resolved resolve(const ParamsInput& in) {
    if (!in.field) throw Error(ErrorCode::InvalidParams, "no field given (--field or \"q\")");
    if (!in.k) throw Error(ErrorCode::InvalidParams, "no dimension given (--k or \"k\")");
    Field field = parse_field(*in.field);
    const FieldCtx& f = *field;

    std::vector<Fe> eta;
    if (in.eta) {
        eta = parse_elements(f, *in.eta);
        if (in.ell && static_cast<std::int64_t>(eta.size()) != *in.ell + 1)
            throw Error(ErrorCode::InvalidParams, "eta has " + std::to_string(eta.size()) + " entries but ell = " +
                                                      std::to_string(*in.ell));
    } else {
        eta.assign(static_cast<std::size_t>(in.ell.value_or(0) + 1), f.one());
    }

    std::optional<std::size_t> n = in.n;
    if (in.alphas) {
        if (n && *n != in.alphas->size())
            throw Error(ErrorCode::InvalidParams, "n = " + std::to_string(*n) + " but " +
                                                      std::to_string(in.alphas->size()) + " points given");
        n = in.alphas->size();
    }
    if (!n) throw Error(ErrorCode::InvalidParams, "no length given (--n or \"n\")");

    std::vector<Fe> v = in.v ? parse_elements(f, *in.v) : std::vector<Fe>(*n, f.one());
    std::optional<Fe> lambda;
    if (in.lambda) lambda = f.parse(*in.lambda);

    Resolved out;
    if (in.theorem) {
        auto which = parse_theorem(*in.theorem);
        if (!which) throw Error(ErrorCode::ParseError, "unknown theorem '" + *in.theorem + "'");
        if (in.alphas) throw Error(ErrorCode::InvalidParams, "explicit points cannot be combined with a theorem");
        TheoremInput ti{*which, field, *n, *in.k, lambda.value_or(f.one()), eta, v, in.r};
        out.spec = validate(ti);
        out.params = out.spec->params;
    } else if (in.alphas) {
        out.params.emplace(field, *in.k, parse_elements(f, *in.alphas), v, eta, lambda);
    } else {
        out.params = TwistedParams::from_lambda(field, *n, *in.k, lambda.value_or(f.one()), v, eta);
    }
    if (out.params->lambda())
        out.certified = applicable_theorems(field, out.params->n(), out.params->k(), *out.params->lambda(),
                                            out.params->eta(), out.params->v());
    return out;
}

struct HeaderRows {
    std::vector<Fe> sums;
    std::vector<Fe> headers;
    std::vector<Fe> scaled;
};

HeaderRows header_rows(const TwistedParams& p) {
    HeaderRows rows;
    for (std::size_t j = 1; j <= p.n(); ++j) {
        rows.sums.push_back(twist_sum(p, j));
        rows.headers.push_back(twist_column_header(p, j));
        rows.scaled.push_back(p.v()[j - 1] * rows.headers.back());
    }
    return rows;
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    std::size_t label_w = 0, cell_w = 0;
    for (const auto& [label, cells] : rows) {
        label_w = std::max(label_w, label.size());
        for (const auto& c : cells) cell_w = std::max(cell_w, c.size());
    }
    for (const auto& [label, cells] : rows) {
        out << std::left << std::setw(static_cast<int>(label_w)) << label << " |" << std::right;
        for (const auto& c : cells) out << ' ' << std::setw(static_cast<int>(cell_w)) << c;
        out << '\n';
    }
}

void print_matrix_table(std::ostream& out, const FMatrix& m) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m.at(i, j).to_string().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << ' ';
        for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << std::setw(static_cast<int>(w)) << m.at(i, j).to_string();
        out << '\n';
    }
}

std::string params_header(const TwistedParams& p) {
    std::ostringstream os;
    os << p.ctx().describe() << "  n=" << p.n() << " k=" << p.k() << " ell=" << p.ell();
    if (p.lambda()) os << " lambda=" << p.lambda()->to_string();
    os << " eta=(" << join(strings_of(p.eta())) << ") v=(" << join(strings_of(p.v())) << ")";
    return os.str();
}

void print_diagnostics(std::ostream& out, const TwistedParams& p) {
    std::vector<std::string> omegas, phis;
    const auto l1 = static_cast<std::int64_t>(p.ell()) + 1;
    for (std::int64_t r = 1; r <= l1; ++r) {
        omegas.push_back(omega(p.points(), p.eta(), r).to_string());
        phis.push_back(phi(p.points(), p.eta(), r).to_string());
    }
    out << "P = " << p.points().product().to_string() << "  Omega_1..Omega_" << l1 << " = (" << join(omegas)
        << ")  Phi_1..Phi_" << l1 << " = (" << join(phis) << ")\n";
}

std::string report_line(const AnalysisReport& r, std::uint64_t q) {
    std::ostringstream os;
    os << '[' << r.n << ',' << r.k << ',' << r.d << "]_" << q << ' ' << to_string(r.mds_class) << ' '
       << (r.lcd ? "LCD" : "not-LCD");
    return os.str();
}

void print_report_table(std::ostream& out, const AnalysisReport& r, std::uint64_t q) {
    out << "code      " << report_line(r, q) << '\n';
    out << "d_dual    " << (r.d_dual ? std::to_string(*r.d_dual) : std::string("-")) << '\n';
    out << "evidence  stack_rank=" << r.lcd_evidence.stack_rank << " gram_nonsingular=" << r.lcd_evidence.gram_nonsingular
        << " hull_trivial=" << r.lcd_evidence.hull_trivial << '\n';
    out << "hull_dim  " << r.hull_dim << '\n';
}

// ---- construct -------------------------------------------------------------

struct Common {
    std::string format = "table";
    std::optional<std::string> params_file;
    ParamsInput flags;
    std::optional<std::string> eta_text, v_text, alphas_text;
};

ParamsInput merged_input(const Common& c) {
    ParamsInput p = c.params_file ? read_params_file(*c.params_file) : ParamsInput{};
    const ParamsInput& f = c.flags;
    if (f.field) p.field = f.field;
    if (f.n) p.n = f.n;
    if (f.k) p.k = f.k;
    if (f.ell) p.ell = f.ell;
    if (f.r) p.r = f.r;
    if (f.lambda) p.lambda = f.lambda;
    if (f.theorem) p.theorem = f.theorem;
    if (c.eta_text) p.eta = split_list(*c.eta_text);
    if (c.v_text) p.v = split_list(*c.v_text);
    if (c.alphas_text) p.alphas = split_list(*c.alphas_text);
    return p;
}

OutputFormat format_of(const std::string& s) { return s == "json" ? OutputFormat::Json : OutputFormat::Table; }

int do_construct(const Common& c, bool dump, std::ostream& out) {
    Resolved res = resolve(merged_input(c));
    const TwistedParams& p = *res.params;
    FMatrix g = generator_matrix(p);
    FMatrix h = parity_check_matrix(p);
    if (res.spec) build(*res.spec);

    if (dump && format_of(c.format) == OutputFormat::Table) {
        write_matrix(out, g);
        write_matrix(out, h);
        return kExitOk;
    }

    HeaderRows rows = header_rows(p);
    if (format_of(c.format) == OutputFormat::Json) {
        ojson j;
        j["field"] = p.ctx().describe();
        j["q"] = p.ctx().order();
        j["n"] = p.n();
        j["k"] = p.k();
        j["ell"] = p.ell();
        if (p.lambda()) j["lambda"] = element_json(*p.lambda());
        j["eta"] = elements_json(p.eta());
        j["v"] = elements_json(p.v());
        j["alphas"] = elements_json(p.alphas());
        j["twist_sums"] = elements_json(rows.sums);
        j["twist_headers"] = elements_json(rows.headers);
        j["scaled_headers"] = elements_json(rows.scaled);
        j["generator"] = matrix_json(g);
        if (dump) j["parity_check"] = matrix_json(h);
        if (res.spec) {
            j["theorem"] = std::string(to_string(res.spec->which));
            if (res.spec->r) j["r"] = *res.spec->r;
            if (res.spec->condition_value) j["condition"] = element_json(*res.spec->condition_value);
        }
        ojson certified = ojson::array();
        for (Theorem t : res.certified) certified.push_back(std::string(to_string(t)));
        j["certified"] = certified;
        out << j.dump() << '\n';
        return kExitOk;
    }

    out << params_header(p) << '\n';
    if (res.spec) {
        out << "theorem " << to_string(res.spec->which);
        if (res.spec->r) out << " r=" << *res.spec->r;
        if (res.spec->condition_value) out << " condition=" << res.spec->condition_value->to_string();
        out << '\n';
    }
    out << "certified by: " << theorem_list(res.certified) << "\n\n";
    print_table(out, {{"alpha_i", strings_of(p.alphas())},
                      {"sum eta_t a^(k+t)", strings_of(rows.sums)},
                      {"1 + sum", strings_of(rows.headers)},
                      {"v_i (1 + sum)", strings_of(rows.scaled)}});
    out << "\nG (" << g.rows() << " x " << g.cols() << "):\n";
    print_matrix_table(out, g);
    print_diagnostics(out, p);
    return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

int do_analyze(const Common& c, const std::optional<std::string>& matrix_path, bool parity, bool with_dual,
               std::ostream& out) {
    std::optional<LinearCode> code;
    std::optional<TwistedParams> params;
    if (matrix_path) {
        std::vector<FMatrix> blocks;
        if (*matrix_path == "-") {
            blocks = read_matrices(std::cin);
        } else {
            std::ifstream in(*matrix_path);
            if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + *matrix_path + "'");
            blocks = read_matrices(in);
        }
        if (blocks.empty()) throw Error(ErrorCode::ParseError, "no matrix in input");
        if (parity) {
            // The code whose parity-check matrix is the last block read.
            const FMatrix& h = blocks.back();
            code.emplace(nullspace_basis(h), row_space_basis(h));
        } else {
            code.emplace(blocks.front());
        }
    } else {
        Resolved res = resolve(merged_input(c));
        params = res.params;
        code = twisted_code(*params);
    }

    AnalysisReport report = analyze(*code, with_dual);
    if (format_of(c.format) == OutputFormat::Json) {
        out << report.to_json() << '\n';
    } else {
        if (params) {
            out << params_header(*params) << '\n';
            print_diagnostics(out, *params);
        }
        print_report_table(out, report, code->field()->order());
    }
    return kExitOk;
}

// ---- search ----------------------------------------------------------------

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
    auto pos = text.find("..");
    try {
        std::size_t used = 0;
        if (pos == std::string::npos) {
            auto v = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        auto a = std::stoull(text.substr(0, pos), &used);
        if (used != pos) throw std::invalid_argument(text);
        auto rest = text.substr(pos + 2);
        auto b = std::stoull(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, std::string("bad ") + what + " range '" + text + "' (use N or A..B)");
    }
}

int do_search(const Common& c, const std::string& n_text, const std::string& k_text,
              const std::vector<std::string>& theorem_texts, bool theorems_given, std::uint64_t budget,
              std::uint64_t seed, std::ostream& out, std::ostream& err) {
    if (!c.flags.field) throw Error(ErrorCode::InvalidParams, "search needs --field");
    SearchQuery q;
    q.field = parse_field(*c.flags.field);
    std::tie(q.n_min, q.n_max) = parse_range(n_text, "n");
    std::tie(q.k_min, q.k_max) = parse_range(k_text, "k");
    if (theorems_given) {
        for (const auto& group : theorem_texts)
            for (const auto& t : split_list(group)) {
                auto which = parse_theorem(t);
                if (!which) throw Error(ErrorCode::ParseError, "unknown theorem '" + t + "'");
                if (std::find(q.theorems.begin(), q.theorems.end(), *which) == q.theorems.end())
                    q.theorems.push_back(*which);
            }
    } else {
        q.theorems = {Theorem::T41, Theorem::T42, Theorem::T43, Theorem::T44};
    }
    q.budget = budget;
    q.seed = seed;

    SearchResult result = search(q);
    const bool json = format_of(c.format) == OutputFormat::Json;
    for (const auto& e : result.entries) {
        if (json) {
            out << entry_to_json(e) << '\n';
            continue;
        }
        const TwistedParams& p = e.spec.params;
        out << to_string(e.spec.which) << " n=" << p.n() << " k=" << p.k() << " ell=" << p.ell();
        if (e.spec.r) out << " r=" << *e.spec.r;
        if (p.lambda()) out << " lambda=" << p.lambda()->to_string();
        out << " eta=(" << join(strings_of(p.eta())) << ") v=(" << join(strings_of(p.v())) << ")";
        if (e.spec.condition_value) out << " condition=" << e.spec.condition_value->to_string();
        out << "  " << report_line(e.report, p.ctx().order()) << '\n';
    }
    err << "search: " << result.entries.size() << " codes from " << result.evaluated << " candidates"
        << (result.truncated ? " (truncated by budget)" : "") << '\n';
    for (const auto& v : result.violations) err << "TheoremViolation: " << v << '\n';
    return result.violations.empty() ? kExitOk : kExitCounterexample;
}

void add_param_flags(CLI::App* sub, Common& c) {
    sub->add_option("--params", c.params_file, "JSON parameter file");
    sub->add_option("--field", c.flags.field, "field as p or p^m");
    sub->add_option("--n", c.flags.n, "code length");
    sub->add_option("--k", c.flags.k, "dimension");
    sub->add_option("--ell", c.flags.ell, "twist degree l (eta has l+1 entries)");
    sub->add_option("--r", c.flags.r, "r in n = 2k+l+r (t42, t44)");
    sub->add_option("--lambda", c.flags.lambda, "points are the roots of x^n - lambda");
    sub->add_option("--eta", c.eta_text, "twist coefficients a,b,c");
    sub->add_option("--v", c.v_text, "column multipliers a,b,c");
    sub->add_option("--alphas", c.alphas_text, "explicit evaluation points a,b,c");
    sub->add_option("--theorem", c.flags.theorem, "validate against t41, t42, t43 or t44");
}

}  // namespace

ExampleOutcome reproduce_example(const ReferenceExample& ex) {
    ExampleOutcome o;
    o.name = ex.name;
    auto mismatch = [&](const std::string& what, const std::string& got, const std::string& expected) {
        o.mismatches.push_back(what + ": got " + got + " expected " + expected);
    };
    try {
        Field field = field_new(ex.q);
        const FieldCtx& f = *field;
        auto to_fe = [&](const std::vector<std::int64_t>& xs) {
            std::vector<Fe> out;
            for (auto x : xs) out.push_back(f.from_int(x));
            return out;
        };
        auto compare_row = [&](const std::string& what, const std::vector<Fe>& got,
                               const std::vector<std::int64_t>& expected) {
            auto exp = to_fe(expected);
            if (got == exp) return;
            if (got.size() != exp.size()) {
                mismatch(what + " length", std::to_string(got.size()), std::to_string(exp.size()));
                return;
            }
            for (std::size_t i = 0; i < got.size(); ++i)
                if (!(got[i] == exp[i])) {
                    mismatch(what + "[" + std::to_string(i + 1) + "]", got[i].to_string(), exp[i].to_string());
                    return;
                }
        };

        Fe lambda = f.from_int(ex.lambda);
        TwistedParams p = TwistedParams::from_lambda(field, ex.n, ex.k, lambda, to_fe(ex.v), to_fe(ex.eta));
        HeaderRows rows = header_rows(p);
        o.alphas = strings_of(p.alphas());
        o.twist_sums = strings_of(rows.sums);
        o.twist_headers = strings_of(rows.headers);
        o.scaled_headers = strings_of(rows.scaled);
        o.certified = applicable_theorems(field, p.n(), p.k(), lambda, p.eta(), p.v());
        if (ex.r) {
            auto r = *ex.r;
            if (r >= 0 && r <= static_cast<std::int64_t>(p.ell()))
                o.condition = lcd_condition_value(p.points(), p.eta(), r).to_string();
        }

        compare_row("alpha", p.alphas(), ex.alphas);
        compare_row("sum", rows.sums, ex.twist_sums);
        compare_row("1+sum", rows.headers, ex.twist_headers);
        compare_row("v(1+sum)", rows.scaled, ex.scaled_headers);
        FMatrix g = generator_matrix(p);
        for (std::size_t i = 0; i < ex.generator.size() && i < g.rows(); ++i)
            compare_row("G row " + std::to_string(i + 1), g.row(i), ex.generator[i]);

        LinearCode code = twisted_code(p);
        AnalysisReport report = analyze(code);
        o.report = report;
        if (report.n != ex.n) mismatch("n", std::to_string(report.n), std::to_string(ex.n));
        if (report.k != ex.k) mismatch("k", std::to_string(report.k), std::to_string(ex.k));
        if (report.d != ex.d) mismatch("d", std::to_string(report.d), std::to_string(ex.d));
        if (report.mds_class != ex.mds_class)
            mismatch("class", std::string(to_string(report.mds_class)), std::string(to_string(ex.mds_class)));
        if (report.lcd != ex.lcd) mismatch("lcd", report.lcd ? "true" : "false", ex.lcd ? "true" : "false");
    } catch (const Error& e) {
        o.mismatches.push_back(std::string("construction: ") + e.what());
    }
    return o;
}

int cmd_reproduce(const std::vector<ReferenceExample>& examples, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
    std::optional<std::string> first_failure;
    ojson all = ojson::array();
    for (const auto& ex : examples) {
        ExampleOutcome o = reproduce_example(ex);
        if (!o.passed() && !first_failure) first_failure = o.name + ": " + o.mismatches.front();
        if (format == OutputFormat::Json) {
            ojson j;
            j["example"] = o.name;
            j["status"] = o.passed() ? "PASS" : "FAIL";
            j["q"] = ex.q;
            if (o.report) {
                ojson report = ojson::parse(o.report->to_json());
                for (auto& [key, value] : report.items()) j[key] = value;
            }
            ojson certified = ojson::array();
            for (Theorem t : o.certified) certified.push_back(std::string(to_string(t)));
            j["certified"] = certified;
            if (o.condition) j["condition"] = *o.condition;
            j["mismatches"] = o.mismatches;
            all.push_back(j);
            continue;
        }
        out << (o.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(16) << o.name << std::right;
        if (o.report) out << "  " << report_line(*o.report, ex.q);
        out << "  certified by " << theorem_list(o.certified);
        if (o.condition) out << "  condition(r=" << *ex.r << ")=" << *o.condition;
        if (!o.passed()) out << "  [" << o.mismatches.front() << "]";
        out << '\n';
    }
    if (format == OutputFormat::Json) out << all.dump() << '\n';
    if (first_failure) {
        err << "reproduction mismatch: " << *first_failure << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted GRS codes: construction, LCD certification and MDS classification", "twistlcd"};
    app.require_subcommand(1);

    Common common;
    bool dump = false;
    std::optional<std::string> matrix_path;
    bool parity = false;
    bool with_dual = false;
    std::string n_text, k_text = "2";
    std::vector<std::string> theorem_texts;
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };

    auto* construct = app.add_subcommand("construct", "build G (and H) and print the column-header table");
    add_param_flags(construct, common);
    add_format(construct);
    construct->add_flag("--dump-matrices", dump, "emit G then H in the plain-text matrix format");

    auto* analyze_cmd = app.add_subcommand("analyze", "distance, MDS class and LCD verdict");
    add_param_flags(analyze_cmd, common);
    add_format(analyze_cmd);
    analyze_cmd->add_option("--matrix", matrix_path, "matrix file, or - for stdin");
    analyze_cmd->add_flag("--parity-check", parity, "the (last) matrix read is a parity-check matrix");
    analyze_cmd->add_flag("--with-dual", with_dual, "always compute the dual distance");

    auto* reproduce = app.add_subcommand("reproduce", "re-derive the eight reference examples");
    add_format(reproduce);

    auto* search_cmd = app.add_subcommand("search", "bounded search for certified LCD codes");
    add_format(search_cmd);
    search_cmd->add_option("--field", common.flags.field, "field as p or p^m")->required();
    search_cmd->add_option("--n", n_text, "length N or range A..B")->required();
    search_cmd->add_option("--k", k_text, "dimension N or range A..B");
    auto* theorem_opt = search_cmd->add_option("--theorem", theorem_texts, "theorems, e.g. t41,t44 (default: all)");
    search_cmd->add_option("--budget", budget, "candidate evaluations");
    search_cmd->add_option("--seed", seed, "sampling seed");

    std::vector<const char*> argv{"twistlcd"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (construct->parsed()) return do_construct(common, dump, out);
        if (analyze_cmd->parsed()) return do_analyze(common, matrix_path, parity, with_dual, out);
        if (reproduce->parsed()) return cmd_reproduce(reference_examples(), format_of(common.format), out, err);
        if (search_cmd->parsed())
            return do_search(common, n_text, k_text, theorem_texts, theorem_opt->count() > 0, budget, seed, out, err);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_status(e);
    } catch (const std::exception& e) {
        err << "InternalInconsistency: " << e.what() << '\n';
        return kExitCounterexample;
    }
    return kExitValidation;
}

}  // namespace twistlcd::cli
