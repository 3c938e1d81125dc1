#include "twistlcd/constructor.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace twistlcd {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

bool is_sign(const Fe& x) { return x.is_one() || (-x).is_one(); }

bool is_generic(const Fe& x) { return !x.is_zero() && !is_sign(x); }

bool sign_segment_first(Theorem t) { return t == Theorem::T43 || t == Theorem::T44; }

// Leading (T43/T44) or trailing (T41/T42) positions restricted to {-1,1}.
std::size_t sign_segment_length(std::size_t n, std::size_t k) { return n - k + 1; }

void check_v_pattern(Theorem t, std::size_t n, std::size_t k, const std::vector<Fe>& v) {
    for (std::size_t i = 1; i <= n; ++i) {
        const bool in_sign_segment = sign_segment_first(t) ? i <= n - k + 1 : i >= k;
        const Fe& x = v[i - 1];
        if (in_sign_segment && !is_sign(x)) {
            throw Error(ErrorCode::VPattern, "v_" + std::to_string(i) + " = " + x.to_string() + " must be 1 or -1");
        }
        if (!in_sign_segment && !is_generic(x)) {
            throw Error(ErrorCode::VPattern, "v_" + std::to_string(i) + " = " + x.to_string() + " must avoid {-1,0,1}");
        }
    }
}

std::string join(const std::vector<Fe>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += xs[i].to_string();
    }
    return s;
}

std::string describe_spec(const TheoremSpec& spec) {
    const TwistedParams& p = spec.params;
    std::ostringstream os;
    os << to_string(spec.which) << " over " << p.ctx().describe() << " n=" << p.n() << " k=" << p.k()
       << " l=" << p.ell();
    if (spec.r) os << " r=" << *spec.r;
    if (p.lambda()) os << " lambda=" << p.lambda()->to_string();
    os << " eta=(" << join(p.eta()) << ") v=(" << join(p.v()) << ") alphas=(" << join(p.alphas()) << ")";
    if (spec.condition_value) os << " condition=" << spec.condition_value->to_string();
    return os.str();
}

nlohmann::ordered_json element_json(const Fe& x) {
    if (x.field().is_prime()) return x.value();
    return x.to_string();
}

nlohmann::ordered_json elements_json(const std::vector<Fe>& xs) {
    auto arr = nlohmann::ordered_json::array();
    for (const Fe& x : xs) arr.push_back(element_json(x));
    return arr;
}

int class_rank(MdsClass c) {
    switch (c) {
        case MdsClass::MDS: return 0;
        case MdsClass::NMDS: return 1;
        case MdsClass::AMDS: return 2;
        case MdsClass::NEITHER: return 3;
    }
    return 3;
}

// One (n, k, theorem, l, r, lambda) combination explored by search.
struct Config {
    std::size_t n;
    std::size_t k;
    Theorem which;
    std::size_t ell;
    std::optional<std::int64_t> r;
    Fe lambda;
};

// Enumerates the pattern-constrained v space: generic values over the
// non-sign elements in canonical order, then sign patterns as binary counters.
class VSpace {
public:
    VSpace(const FieldCtx& f, Theorem which, std::size_t n, std::size_t k) : which_(which), n_(n) {
        for (const Fe& x : f.nonzero_elements()) {
            if (is_generic(x)) generic_.push_back(x);
        }
        one_ = f.one();
        signs_ = sign_segment_length(n, k);
        const std::size_t free = n - signs_;
        size_ = sat_mul(sat_pow(2, signs_), sat_pow(generic_.size(), free));
    }

    std::uint64_t size() const { return size_; }

    std::vector<Fe> at(std::uint64_t index) const {
        const std::size_t free = n_ - signs_;
        std::vector<Fe> sign_values(signs_), free_values(free);
        for (std::size_t i = signs_; i-- > 0;) {
            sign_values[i] = (index & 1) ? -one_ : one_;
            index >>= 1;
        }
        for (std::size_t i = free; i-- > 0;) {
            free_values[i] = generic_[index % generic_.size()];
            index /= generic_.size();
        }
        std::vector<Fe> v;
        v.reserve(n_);
        if (sign_segment_first(which_)) {
            v.insert(v.end(), sign_values.begin(), sign_values.end());
            v.insert(v.end(), free_values.begin(), free_values.end());
        } else {
            v.insert(v.end(), free_values.begin(), free_values.end());
            v.insert(v.end(), sign_values.begin(), sign_values.end());
        }
        return v;
    }

    std::vector<Fe> sample(std::mt19937_64& rng) const {
        std::vector<Fe> v = at(0);
        for (std::size_t i = 0; i < n_; ++i) {
            const bool sign_slot = sign_segment_first(which_) ? i < signs_ : i >= n_ - signs_;
            if (sign_slot) {
                v[i] = (rng() & 1) ? -one_ : one_;
            } else {
                v[i] = generic_[rng() % generic_.size()];
            }
        }
        return v;
    }

private:
    Theorem which_;
    std::size_t n_;
    std::vector<Fe> generic_;
    Fe one_;
    std::size_t signs_ = 0;
    std::uint64_t size_ = 0;
};

// Lexicographic eta over {1..A}^{l+1}; index 0 is (1,...,1).
std::vector<Fe> eta_at(const FieldCtx& f, std::size_t len, std::uint64_t alphabet, std::uint64_t index) {
    std::vector<Fe> eta(len);
    for (std::size_t i = len; i-- > 0;) {
        eta[i] = f.from_int(static_cast<std::int64_t>(index % alphabet + 1));
        index /= alphabet;
    }
    return eta;
}

std::vector<Fe> random_eta(const FieldCtx& f, std::size_t len, std::mt19937_64& rng) {
    std::vector<Fe> eta(len);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& e : eta) {
            e = f.from_canonical(rng() % f.order());
            nonzero = nonzero || !e.is_zero();
        }
    }
    return eta;
}

}  // namespace

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::T41: return "T41";
        case Theorem::T42: return "T42";
        case Theorem::T43: return "T43";
        case Theorem::T44: return "T44";
    }
    return "T41";
}

std::optional<Theorem> parse_theorem(std::string_view text) {
    std::string s(text);
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "t41") return Theorem::T41;
    if (s == "t42") return Theorem::T42;
    if (s == "t43") return Theorem::T43;
    if (s == "t44") return Theorem::T44;
    return std::nullopt;
}

bool needs_r(Theorem t) { return t == Theorem::T42 || t == Theorem::T44; }

TheoremSpec validate(const TheoremInput& in) {
    if (!in.field) throw Error(ErrorCode::InvalidParams, "no field given");
    if (in.eta.empty()) throw Error(ErrorCode::InvalidParams, "eta must have at least one entry");
    const std::size_t n = in.n;
    const std::size_t k = in.k;
    const std::size_t ell = in.eta.size() - 1;

    if (k < 2) throw Error(ErrorCode::DimensionRange, "k = " + std::to_string(k) + " is below 2");
    if (needs_r(in.which)) {
        if (!in.r) throw Error(ErrorCode::InvalidParams, std::string(to_string(in.which)) + " needs r");
        const std::int64_t r = *in.r;
        if (r < 0 || r > static_cast<std::int64_t>(ell)) {
            throw Error(ErrorCode::DimensionRange, "r = " + std::to_string(r) + " outside 0..l = " + std::to_string(ell));
        }
        if (static_cast<std::int64_t>(n) != static_cast<std::int64_t>(2 * k + ell) + r) {
            throw Error(ErrorCode::LengthParity, "n = " + std::to_string(n) + " but 2k+l+r = " +
                                                     std::to_string(static_cast<std::int64_t>(2 * k + ell) + r));
        }
    } else if (2 * k + 2 * ell + 1 > n) {
        // k <= floor((n-2l-1)/2)
        throw Error(ErrorCode::DimensionRange, "k = " + std::to_string(k) + " exceeds (n-2l-1)/2 with n = " +
                                                   std::to_string(n) + ", l = " + std::to_string(ell));
    }

    std::vector<Fe> roots = roots_xn_minus_lambda(*in.field, n, in.lambda);
    if (in.v.size() != n) {
        throw Error(ErrorCode::InvalidParams,
                    "v has " + std::to_string(in.v.size()) + " entries, expected n=" + std::to_string(n));
    }
    check_v_pattern(in.which, n, k, in.v);

    TheoremSpec spec{in.which, needs_r(in.which) ? in.r : std::nullopt,
                     TwistedParams(in.field, k, std::move(roots), in.v, in.eta, in.lambda), std::nullopt};
    if (needs_r(in.which)) {
        spec.condition_value = lcd_condition_value(spec.params.points(), spec.params.eta(), *in.r);
        if (spec.condition_value->is_zero()) {
            throw Error(ErrorCode::ConditionZero, "condition value vanishes for r = " + std::to_string(*in.r));
        }
    }
    return spec;
}

std::vector<Theorem> applicable_theorems(const Field& field, std::size_t n, std::size_t k, const Fe& lambda,
                                         const std::vector<Fe>& eta, const std::vector<Fe>& v) {
    std::vector<Theorem> out;
    for (Theorem t : {Theorem::T41, Theorem::T42, Theorem::T43, Theorem::T44}) {
        TheoremInput in{t, field, n, k, lambda, eta, v, std::nullopt};
        if (needs_r(t)) in.r = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(2 * k + eta.size() - 1);
        try {
            validate(in);
            out.push_back(t);
        } catch (const Error&) {
        }
    }
    return out;
}

LinearCode build(const TheoremSpec& spec) {
    LinearCode code = twisted_code(spec.params);
    if (!is_lcd(code).first) {
        throw Error(ErrorCode::TheoremViolation, "certified construction is not LCD: " + describe_spec(spec));
    }
    return code;
}

SearchResult search(const SearchQuery& query) {
    SearchResult result;
    if (!query.field || query.theorems.empty()) return result;
    const FieldCtx& f = *query.field;
    const std::uint64_t group = f.order() - 1;

    std::vector<Theorem> theorems = query.theorems;
    std::sort(theorems.begin(), theorems.end());
    theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());

    std::vector<Fe> lambdas;
    std::vector<Config> configs;
    for (std::size_t n = std::max<std::size_t>(query.n_min, 3); n <= query.n_max; ++n) {
        if (group % n != 0) continue;
        lambdas.clear();
        for (const Fe& x : f.nonzero_elements()) {
            if ((group / n) % f.element_order(x) == 0) lambdas.push_back(x);
        }
        for (std::size_t k = std::max<std::size_t>(query.k_min, 2); k <= query.k_max; ++k) {
            for (Theorem t : theorems) {
                for (std::size_t ell = 0; ell + k + 1 <= n; ++ell) {
                    std::optional<std::int64_t> r;
                    if (needs_r(t)) {
                        const auto rv = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(2 * k + ell);
                        if (rv < 0 || rv > static_cast<std::int64_t>(ell)) continue;
                        r = rv;
                    } else if (2 * k + 2 * ell + 1 > n) {
                        continue;
                    }
                    for (const Fe& lambda : lambdas) configs.push_back({n, k, t, ell, r, lambda});
                }
            }
        }
    }
    if (configs.empty()) return result;

    const std::uint64_t budget = std::min<std::uint64_t>(query.budget, 1'000'000);
    if (configs.size() > budget) {
        result.truncated = true;
        configs.resize(budget);
    }
    const std::uint64_t quota = std::max<std::uint64_t>(1, budget / configs.size());
    const std::uint64_t alphabet = std::min<std::uint64_t>(group, 8);

    struct Candidate {
        std::size_t order;
        SearchEntry entry;
    };
    std::vector<Candidate> found;

    auto evaluate = [&](const Config& c, std::vector<Fe> eta, std::vector<Fe> v) {
        ++result.evaluated;
        TheoremInput in{c.which, query.field, c.n, c.k, c.lambda, std::move(eta), std::move(v), c.r};
        std::optional<TheoremSpec> spec;
        try {
            spec.emplace(validate(in));
        } catch (const Error&) {
            return;
        }
        try {
            LinearCode code = build(*spec);
            AnalysisReport report = analyze(code);
            found.push_back({found.size(), SearchEntry{std::move(*spec), report}});
        } catch (const Error& e) {
            if (e.code() == ErrorCode::TheoremViolation) {
                result.violations.emplace_back(e.what());
            } else if (e.code() != ErrorCode::TooLargeToEnumerate) {
                throw;
            }
        }
    };

    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
        const Config& c = configs[ci];
        const VSpace vspace(f, c.which, c.n, c.k);
        if (vspace.size() == 0) continue;
        std::mt19937_64 rng(query.seed * 0x9E3779B97F4A7C15ULL + ci);

        const std::uint64_t eta_count = sat_pow(alphabet, c.ell + 1);
        const std::uint64_t lex_space = sat_mul(eta_count, vspace.size());
        const std::uint64_t full_space = sat_mul(sat_pow(f.order(), c.ell + 1) - 1, vspace.size());
        if (lex_space <= quota) {
            for (std::uint64_t e = 0; e < eta_count; ++e) {
                const std::vector<Fe> eta = eta_at(f, c.ell + 1, alphabet, e);
                for (std::uint64_t vi = 0; vi < vspace.size(); ++vi) evaluate(c, eta, vspace.at(vi));
            }
            // Leftover quota goes to seeded random draws over the whole field.
            const std::uint64_t extra = alphabet < group ? quota - lex_space : 0;
            for (std::uint64_t i = 0; i < extra; ++i) evaluate(c, random_eta(f, c.ell + 1, rng), vspace.sample(rng));
            if (lex_space < full_space) result.truncated = true;
            continue;
        }

        result.truncated = true;
        const std::uint64_t per_eta_cap = std::min(vspace.size(), quota);
        const std::uint64_t etas = std::min(eta_count, std::max<std::uint64_t>(1, quota / per_eta_cap));
        const std::uint64_t per_eta = quota / etas;
        for (std::uint64_t e = 0; e < etas; ++e) {
            const std::vector<Fe> eta = eta_at(f, c.ell + 1, alphabet, e);
            if (vspace.size() <= per_eta) {
                for (std::uint64_t vi = 0; vi < vspace.size(); ++vi) evaluate(c, eta, vspace.at(vi));
            } else {
                for (std::uint64_t i = 0; i < per_eta; ++i) evaluate(c, eta, vspace.sample(rng));
            }
        }
    }

    std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        const auto key = [](const Candidate& x) {
            return std::make_tuple(x.entry.report.n, x.entry.report.k, class_rank(x.entry.report.mds_class), x.order);
        };
        return key(a) < key(b);
    });
    result.entries.reserve(found.size());
    for (auto& c : found) result.entries.push_back(std::move(c.entry));
    return result;
}

std::string entry_to_json(const SearchEntry& entry) {
    const TwistedParams& p = entry.spec.params;
    nlohmann::ordered_json j;
    j["theorem"] = std::string(to_string(entry.spec.which));
    j["q"] = p.ctx().order();
    j["n"] = p.n();
    j["k"] = p.k();
    j["ell"] = p.ell();
    if (entry.spec.r) j["r"] = *entry.spec.r;
    if (p.lambda()) j["lambda"] = element_json(*p.lambda());
    j["eta"] = elements_json(p.eta());
    j["v"] = elements_json(p.v());
    if (entry.spec.condition_value) j["condition"] = element_json(*entry.spec.condition_value);
    j["report"] = nlohmann::ordered_json::parse(entry.report.to_json());
    return j.dump();
}

}  // namespace twistlcd
