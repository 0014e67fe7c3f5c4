#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subres/subresultant.hpp"

namespace subres {

/// SplitMix64 (Steele, Lea, Flood 2014), the fixed harness PRNG. Constants
/// are the published ones; bounded draws use plain modulo so the stream is
/// reproducible from the seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below: zero bound");
        return next() % bound;
    }

    long range(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("range: lo > hi");
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

private:
    uint64_t state_;
};

/// numerator in [-bound, bound], denominator in [1, bound], canonicalized.
inline Rational random_rational(SplitMix64& rng, int bound) {
    if (bound < 1) throw std::invalid_argument("random_rational: bound must be positive");
    const long num = rng.range(-bound, bound);
    const long den = rng.range(1, bound);
    return Rational(num, den);
}

/// count pairwise-distinct rationals, rejection-resampling collisions.
inline RootList random_roots(SplitMix64& rng, int count, int bound) {
    if (count < 0) throw std::invalid_argument("random_roots: negative count");
    constexpr int kAttemptsPerElement = 1000;
    std::vector<Rational> elems;
    elems.reserve(static_cast<size_t>(count));
    while (static_cast<int>(elems.size()) < count) {
        bool placed = false;
        for (int attempt = 0; attempt < kAttemptsPerElement; ++attempt) {
            Rational candidate = random_rational(rng, bound);
            bool fresh = true;
            for (const auto& e : elems)
                if (e == candidate) { fresh = false; break; }
            if (fresh) {
                elems.push_back(std::move(candidate));
                placed = true;
                break;
            }
        }
        if (!placed)
            throw InfeasibleBound("root_bound " + std::to_string(bound) + " too small for " +
                                  std::to_string(count) + " distinct roots");
    }
    return RootList(std::move(elems));
}

/// Polynomial of exactly the requested degree (nonzero leading coefficient).
inline Poly random_poly(SplitMix64& rng, int degree, int bound) {
    if (degree < 0) throw std::invalid_argument("random_poly: negative degree");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_rational(rng, bound);
    while (coeffs.back().is_zero()) coeffs.back() = random_rational(rng, bound);
    return Poly::from_coeffs(std::move(coeffs));
}

inline Poly random_monic_poly(SplitMix64& rng, int degree, int bound) {
    Poly p = random_poly(rng, degree, bound);
    std::vector<Rational> coeffs = p.coeffs();
    coeffs.back() = Rational(1);
    return Poly::from_coeffs(std::move(coeffs));
}

struct InstanceSpec {
    uint64_t seed = 0;
    int m = 1;
    int n = 1;
    int root_bound = 10;
};

/// Deterministic instance: two internally-distinct root lists of sizes m, n.
inline std::pair<RootList, RootList> gen_instance(const InstanceSpec& spec) {
    if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("instance needs m, n >= 1");
    if (spec.root_bound < 1) throw std::invalid_argument("instance needs root_bound >= 1");
    SplitMix64 rng(spec.seed);
    RootList a = random_roots(rng, spec.m, spec.root_bound);
    RootList b = random_roots(rng, spec.n, spec.root_bound);
    return {std::move(a), std::move(b)};
}

/// Literal transposition-count oracle for sg_sublist: build the reordering
/// that moves the chosen positions to the front and count its inversions.
inline int sign_oracle(const IndexList& positions, int parent_len) {
    sg_sublist(positions, parent_len);  // shared validation
    std::vector<int> order(positions.begin(), positions.end());
    std::vector<bool> chosen(static_cast<size_t>(parent_len) + 1, false);
    for (int p : positions) chosen[static_cast<size_t>(p)] = true;
    for (int p = 1; p <= parent_len; ++p)
        if (!chosen[static_cast<size_t>(p)]) order.push_back(p);
    long inversions = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness values, populated only on failure
};

struct CheckReport {
    std::optional<InstanceSpec> instance;
    RootList a;
    RootList b;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void note_mismatch(std::string& detail, const std::string& label, const Poly& got,
                          const Poly& want) {
    if (!detail.empty()) detail += "; ";
    detail += label + "=" + got.str() + " expected " + want.str();
}

inline std::string join_indices(const IndexList& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace detail

/// Route agreement at every admissible d: the defining determinant against
/// the block-stack, Hong, single-sum, and every (p, q) split of the scaled
/// double sum. One result per d, named "five_way_d<d>".
inline std::vector<CheckResult> five_way_results(const RootList& a, const RootList& b) {
    const int m = a.size(), n = b.size();
    const Poly f = poly_from_roots(a), g = poly_from_roots(b);
    std::vector<CheckResult> out;
    for (int d : admissible_degrees(m, n)) {
        CheckResult r{"five_way_d" + std::to_string(d), true, ""};
        const Poly want = sres_def(f, g, d);
        const Poly via_sd = sres_sd(f, g, d);
        if (via_sd != want) { r.pass = false; detail::note_mismatch(r.detail, "sres_sd", via_sd, want); }
        const Poly via_hong = sres_hong(a, b, d);
        if (via_hong != want) { r.pass = false; detail::note_mismatch(r.detail, "sres_hong", via_hong, want); }
        const Poly via_single = single_sum(a, b, d);
        if (via_single != want) { r.pass = false; detail::note_mismatch(r.detail, "single_sum", via_single, want); }
        for (int p = 0; p <= d; ++p) {
            const Poly via_sylv = sres_sylvester(a, b, p, d - p);
            if (via_sylv != want) {
                r.pass = false;
                detail::note_mismatch(r.detail, "sres_sylvester_p" + std::to_string(p), via_sylv, want);
            }
            if (p == d && via_sylv != via_single) {
                r.pass = false;
                detail::note_mismatch(r.detail, "single_vs_sylvester_pd", via_single, via_sylv);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// The partitioned block determinant agrees with the definition for every
/// ordered partition (P, Q) of (0..d-1), for every admissible d. One result
/// per partition, named "lemma3_P=<p-elems>|Q=<q-elems>".
inline std::vector<CheckResult> lemma3_results(const RootList& a, const RootList& b) {
    const Poly f = poly_from_roots(a), g = poly_from_roots(b);
    std::vector<CheckResult> out;
    for (int d : admissible_degrees(a.size(), b.size())) {
        const Poly want = sres_def(f, g, d);
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            IndexList p_list, q_list;
            for (int e = 0; e < d; ++e)
                (mask >> e & 1u ? p_list : q_list).push_back(e);
            CheckResult r{"lemma3_P=" + detail::join_indices(p_list) + "|Q=" +
                              detail::join_indices(q_list),
                          true, ""};
            const Poly got = lemma3_rhs(a, b, p_list, q_list);
            if (got != want) {
                r.pass = false;
                detail::note_mismatch(r.detail, "lemma3_rhs", got, want);
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// det <x-t, G>_u = R(x, G) V(G) on every prefix G of the list.
inline CheckResult tech_identity_result(const RootList& list, const std::string& name) {
    CheckResult r{name, true, ""};
    for (int len = 1; len <= list.size(); ++len) {
        const RootList gamma = list.prefix(len);
        const Poly lhs = det_bareiss(bracket(x_minus_t, gamma, iota_list(len)));
        const Poly rhs = r_poly(gamma) * vandermonde_det(gamma);
        if (lhs != rhs) {
            r.pass = false;
            detail::note_mismatch(r.detail, "det_bracket_len" + std::to_string(len), lhs, rhs);
        }
    }
    return r;
}

/// The three band-times-powers product identities, checked on Gamma = A and
/// Gamma = B for every admissible d.
inline std::vector<CheckResult> useful_equalities_results(const RootList& a, const RootList& b) {
    const int m = a.size(), n = b.size();
    const Poly f = poly_from_roots(a), g = poly_from_roots(b);
    CheckResult rf{"useful_eq_Mf", true, ""}, rg{"useful_eq_Mg", true, ""},
        rt{"useful_eq_Mtx", true, ""};
    for (int d : admissible_degrees(m, n)) {
        for (const RootList* gamma : {&a, &b}) {
            const DMatrix<Rational> powers = bracket(Poly(1l), *gamma, iota_list(m + n - d));
            const std::string where = " (d=" + std::to_string(d) + ")";
            if (matmul(build_mf(f, n, d), powers) != bracket(f, *gamma, iota_list(n - d))) {
                rf.pass = false;
                rf.detail += "product differs" + where;
            }
            if (matmul(build_mg(g, m, d), powers) != bracket(g, *gamma, iota_list(m - d))) {
                rg.pass = false;
                rg.detail += "product differs" + where;
            }
            if (matmul(build_mtx(m, n, d), to_poly(powers)) !=
                bracket(t_minus_x, *gamma, iota_list(d))) {
                rt.pass = false;
                rt.detail += "product differs" + where;
            }
        }
    }
    return {rf, rg, rt};
}

/// V(A ++ B) = V(A) V(B) R(B, A); both sides vanish when the lists overlap.
inline CheckResult vandermonde_concat_result(const RootList& a, const RootList& b) {
    CheckResult r{"vandermonde_concat", true, ""};
    std::vector<Rational> concat(a.elems());
    concat.insert(concat.end(), b.begin(), b.end());
    const Rational lhs = vandermonde_det(std::span<const Rational>(concat));
    const Rational rhs = vandermonde_det(a) * vandermonde_det(b) * r_pair(b, a);
    if (lhs != rhs) {
        r.pass = false;
        r.detail = "V(A++B)=" + lhs.str() + " expected " + rhs.str();
    }
    return r;
}

/// deg Sres_d <= d at every admissible d.
inline CheckResult degree_bound_result(const RootList& a, const RootList& b) {
    const Poly f = poly_from_roots(a), g = poly_from_roots(b);
    CheckResult r{"degree_bound", true, ""};
    for (int d : admissible_degrees(a.size(), b.size())) {
        const Poly s = sres_def(f, g, d);
        if (s.degree() > d) {
            r.pass = false;
            r.detail += "deg Sres_" + std::to_string(d) + " = " + std::to_string(s.degree()) +
                        " (" + s.str() + "); ";
        }
    }
    return r;
}

/// Sres_0 = prod g(alpha) = R(A, B), the d = 0 triangle.
inline CheckResult poisson_result(const RootList& a, const RootList& b) {
    CheckResult r{"poisson_d0", true, ""};
    const Poly f = poly_from_roots(a), g = poly_from_roots(b);
    const Poly res = sres_def(f, g, 0);
    const Poly via_poisson = Poly(poisson_resultant(a, b));
    const Poly via_rpair = Poly(r_pair(a, b));
    if (res != via_poisson) { r.pass = false; detail::note_mismatch(r.detail, "poisson", via_poisson, res); }
    if (res != via_rpair) { r.pass = false; detail::note_mismatch(r.detail, "r_pair", via_rpair, res); }
    return r;
}

/// Every identity on one instance: route agreement, partition independence,
/// the bracket identities, the Vandermonde concatenation law, the degree
/// bound, and the d = 0 resultant triangle. Failures are report entries.
inline CheckReport cross_check(const RootList& a, const RootList& b) {
    CheckReport report;
    report.a = a;
    report.b = b;
    auto& checks = report.checks;
    for (auto& r : five_way_results(a, b)) checks.push_back(std::move(r));
    for (auto& r : lemma3_results(a, b)) checks.push_back(std::move(r));
    checks.push_back(tech_identity_result(a, "tech_identity_A"));
    checks.push_back(tech_identity_result(b, "tech_identity_B"));
    for (auto& r : useful_equalities_results(a, b)) checks.push_back(std::move(r));
    checks.push_back(vandermonde_concat_result(a, b));
    checks.push_back(degree_bound_result(a, b));
    if (admissible(a.size(), b.size(), 0)) checks.push_back(poisson_result(a, b));
    return report;
}

struct HarnessOptions {
    int trials = 20;
    int max_deg = 4;
    uint64_t seed = 42;
    int root_bound = 10;
};

/// Seeded batch of cross-checked instances, in generation order.
inline std::vector<CheckReport> run_harness(const HarnessOptions& opts) {
    if (opts.trials < 1 || opts.max_deg < 1)
        throw std::invalid_argument("harness needs trials >= 1 and max_deg >= 1");
    SplitMix64 rng(opts.seed);
    std::vector<CheckReport> reports;
    reports.reserve(static_cast<size_t>(opts.trials));
    for (int t = 0; t < opts.trials; ++t) {
        InstanceSpec spec;
        spec.m = static_cast<int>(rng.range(1, opts.max_deg));
        spec.n = static_cast<int>(rng.range(1, opts.max_deg));
        spec.seed = rng.next();
        spec.root_bound = opts.root_bound;
        auto [a, b] = gen_instance(spec);
        CheckReport report = cross_check(a, b);
        report.instance = spec;
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace subres
