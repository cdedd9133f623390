#ifndef VALCALC_ACCEPTANCE_HPP
#define VALCALC_ACCEPTANCE_HPP

#include <chrono>
#include <mutex>
#include <cmath>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "intrinsic.hpp"
#include "io.hpp"

namespace valcalc {

constexpr const char* kArtifactName = "valcalc";
constexpr const char* kArtifactVersion = "0.1.0";

struct CheckResult {
    std::string id;
    std::string property;
    std::string description;
    bool pass = false;
    Json witness;  // failure evidence: the exact offending inputs/values
    long runtime_ms = 0;
};

struct RunReport {
    std::string artifact = kArtifactName;
    std::string version = kArtifactVersion;
    std::uint64_t seed = 0;
    std::string testset_version;
    std::vector<CheckResult> checks;
};

namespace acceptance_detail {

// Per-check deterministic stream, independent of scheduling.
inline Rng check_rng(std::uint64_t seed, int check_no) {
    return Rng(seed).fork(static_cast<std::uint64_t>(check_no) * 0x9E3779B1ULL + 17);
}

inline Json body_witness(const Polytope& p) { return polytope_to_json(p); }

// ---- AC-1 / AC-3: shared product components of degree-one pairs ----
// Both criteria read the same ten random pairs; the dilation polynomials
// are computed once and consumed by each check.
struct PairComponents {
    int pair = 0;
    Polytope body;
    std::vector<Scalar> coeffs;  // dilation polynomial of the pair product
};

inline const std::vector<PairComponents>& ac1_ac3_data(std::uint64_t seed) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<PairComponents>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(seed);
    if (it != cache.end()) return it->second;
    Rng rng = check_rng(seed, 1);
    auto bodies = suite_bodies(2);
    std::vector<PairComponents> data;
    for (int pair = 0; pair < 10; ++pair) {
        auto a = random_degree_one(rng, 2);
        auto b = random_degree_one(rng, 2);
        for (const auto& k : bodies) {
            PairComponents pc;
            pc.pair = pair;
            pc.body = k;
            pc.coeffs = detail::dilation_polynomial(
                [&](const Polytope& q) { return product_eval({a, b}, q); }, k, 4);
            data.push_back(std::move(pc));
        }
    }
    return cache.emplace(seed, std::move(data)).first->second;
}

inline CheckResult ac1(std::uint64_t seed) {
    CheckResult r{"AC-1", "filtration-product",
                  "products of degree-1 valuations in the plane have exact zero components in "
                  "degrees 0 and 1 on the whole testset"};
    r.pass = true;
    for (const auto& pc : ac1_ac3_data(seed)) {
        if (pc.coeffs[0] != 0 || pc.coeffs[1] != 0) {
            r.pass = false;
            r.witness = {{"pair", pc.pair},
                         {"body", body_witness(pc.body)},
                         {"component0", scalar_to_string(pc.coeffs[0])},
                         {"component1", scalar_to_string(pc.coeffs[1])}};
            break;
        }
    }
    return r;
}

// ---- AC-2: triple products of degree-one valuations vanish ----
inline CheckResult ac2(std::uint64_t seed) {
    CheckResult r{"AC-2", "filtration-nilpotency",
                  "every triple product of degree-1 valuations in the plane vanishes exactly "
                  "on the test bodies"};
    Rng rng = check_rng(seed, 2);
    std::vector<ValuationExpr> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(random_degree_one(rng, 2));
    auto bodies = suite_bodies(2);
    bodies.resize(5);
    r.pass = true;
    for (int i = 0; i < 3 && r.pass; ++i)
        for (int j = i; j < 3 && r.pass; ++j)
            for (int l = j; l < 3 && r.pass; ++l)
                for (const auto& k : bodies) {
                    Scalar v = product_eval({pool[i], pool[j], pool[l]}, k);
                    if (v != 0) {
                        r.pass = false;
                        r.witness = {{"triple", {i, j, l}},
                                     {"body", body_witness(k)},
                                     {"value", scalar_to_string(v)}};
                        break;
                    }
                }
    return r;
}

// ---- AC-3: top component of a degree-1 pair product is c * vol ----
inline CheckResult ac3(std::uint64_t seed) {
    CheckResult r{"AC-3", "klain-rigidity",
                  "the degree-2 component of each AC-1 product is a single constant multiple "
                  "of the volume across the testset"};
    r.pass = true;
    int current = -1;
    bool have = false;
    Scalar ratio(0);
    for (const auto& pc : ac1_ac3_data(seed)) {
        if (pc.pair != current) {
            current = pc.pair;
            have = false;
        }
        Scalar c = pc.coeffs[2] / volume(pc.body);
        if (!have) {
            ratio = c;
            have = true;
        } else if (c != ratio) {
            r.pass = false;
            r.witness = {{"pair", pc.pair},
                         {"body", body_witness(pc.body)},
                         {"ratio", scalar_to_string(c)},
                         {"expected_ratio", scalar_to_string(ratio)}};
            break;
        }
    }
    return r;
}

// ---- AC-4: sigma is an algebra automorphism ----
inline CheckResult ac4(std::uint64_t seed) {
    CheckResult r{"AC-4", "sigma-automorphism",
                  "sigma(phi.psi(K)) computed by the boundary route equals "
                  "(sigma phi).(sigma psi)(K), and sigma squares to the identity"};
    Rng rng = check_rng(seed, 4);
    auto bodies = suite_bodies(2);
    ValuationShape weighted;  // single weighted term over segment bodies
    weighted.max_terms = 1;
    weighted.segment_bodies = true;
    ValuationShape flat = weighted;
    flat.max_weight_deg = 0;
    r.pass = true;
    for (int pair = 0; pair < 5 && r.pass; ++pair) {
        auto a = random_valuation(rng, 2, weighted);
        auto b = random_valuation(rng, 2, flat);
        for (int i = 0; i < 5; ++i) {
            const auto& k = bodies[i];
            Scalar lhs = sigma_boundary_product_eval({a, b}, k);
            Scalar rhs = product_eval({sigma_reflect(a), sigma_reflect(b)}, k);
            if (lhs != rhs) {
                r.pass = false;
                r.witness = {{"pair", pair},
                             {"body", body_witness(k)},
                             {"sigma_product", scalar_to_string(lhs)},
                             {"product_of_sigmas", scalar_to_string(rhs)}};
                break;
            }
        }
    }
    if (r.pass) {
        for (const auto& sv : suite_valuations(2)) {
            auto twice = sigma_reflect(sigma_reflect(sv.val));
            for (const auto& k : bodies) {
                if (evaluate(twice, k) != evaluate(sv.val, k)) {
                    r.pass = false;
                    r.witness = {{"involution_failed_on", sv.name}, {"body", body_witness(k)}};
                    break;
                }
            }
            if (!r.pass) break;
        }
    }
    return r;
}

// ---- AC-5: the two sigma routes agree ----
inline CheckResult ac5(std::uint64_t seed) {
    CheckResult r{"AC-5", "sigma-two-routes",
                  "the boundary formula and the reflected-bodies formula for sigma agree "
                  "exactly, including sigma(chi) = chi and sigma(vol) = (-1)^n vol"};
    Rng rng = check_rng(seed, 5);
    r.pass = true;
    for (int n = 1; n <= 3 && r.pass; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            auto v = random_valuation(rng, n, n == 3 ? 0 : 1);
            auto p = random_body(rng, n);
            Scalar lhs = sigma_boundary_eval(v, p);
            Scalar rhs = evaluate(sigma_reflect(v), p);
            if (lhs != rhs) {
                r.pass = false;
                r.witness = {{"n", n},
                             {"trial", trial},
                             {"body", body_witness(p)},
                             {"boundary_route", scalar_to_string(lhs)},
                             {"reflect_route", scalar_to_string(rhs)}};
                break;
            }
        }
        if (!r.pass) break;
        auto p = unit_box(n);
        if (sigma_boundary_eval(euler_valuation(n), p) != Scalar(1)) {
            r.pass = false;
            r.witness = {{"subcase", "sigma(chi)"}, {"n", n}};
        }
        Scalar v = volume(p);
        Scalar expect = n % 2 == 0 ? v : -v;
        if (r.pass && sigma_boundary_eval(volume_valuation(n), p) != expect) {
            r.pass = false;
            r.witness = {{"subcase", "sigma(vol)"}, {"n", n}};
        }
    }
    return r;
}

// ---- AC-6: CC intertwines Verdier duality with the fiber antipode ----
inline CheckResult ac6(std::uint64_t seed) {
    CheckResult r{"AC-6", "verdier-cc-compatibility",
                  "characteristic cycles of Verdier duals equal the twisted fiber antipode of "
                  "the characteristic cycle, over full open and closed cell bases"};
    Rng rng = check_rng(seed, 6);
    r.pass = true;
    for (int trial = 0; trial < 10 && r.pass; ++trial) {
        int n = trial < 5 ? 1 : 2;
        auto sample = random_constructible(rng, n);
        const auto& cx = sample.complex;
        for (std::size_t i = 0; i < cx.cells.size(); ++i) {
            ConstructibleFunction open_f;
            open_f.complex = cx;
            open_f.coeffs.emplace(static_cast<int>(i), Scalar(1));
            ConstructibleFunction closed_f = indicator(cx.cells[i]);
            bool ok_open = chain_equal(cc(verdier_dual(open_f)), antipodal(cc(open_f)));
            bool ok_closed = chain_equal(cc(verdier_dual(closed_f)), antipodal(cc(closed_f)));
            if (!ok_open || !ok_closed) {
                r.pass = false;
                r.witness = {{"trial", trial},
                             {"cell", polytope_to_json(cx.cells[i])},
                             {"basis", ok_open ? "closed" : "open"},
                             {"chain", chain_to_json(cc(ok_open ? closed_f : open_f))}};
                break;
            }
        }
    }
    return r;
}

// ---- AC-7: duality transport through the pairing ----
inline CheckResult ac7(std::uint64_t seed) {
    CheckResult r{"AC-7", "duality-transport",
                  "<Df, phi> equals <f, sigma phi> through independent pipelines"};
    Rng rng = check_rng(seed, 7);
    r.pass = true;
    for (int trial = 0; trial < 20 && r.pass; ++trial) {
        int n = trial < 10 ? 1 : 2;
        auto f = random_constructible(rng, n);
        auto v = random_valuation(rng, n);
        Scalar lhs = evaluate_constructible(v, verdier_dual(f));
        Scalar rhs = evaluate_constructible(sigma_reflect(v), f);
        if (lhs != rhs) {
            r.pass = false;
            r.witness = {{"trial", trial},
                         {"n", n},
                         {"lhs", scalar_to_string(lhs)},
                         {"rhs", scalar_to_string(rhs)},
                         {"f", constructible_to_json(f)}};
        }
    }
    return r;
}

// ---- AC-8: the pairing against chi is Euler integration ----
inline CheckResult ac8(std::uint64_t seed) {
    CheckResult r{"AC-8", "euler-integration",
                  "<f, chi> equals the Euler integral; chi of compact convex bodies is 1; chi "
                  "of the boundary of a 3-cube is 2"};
    Rng rng = check_rng(seed, 8);
    r.pass = true;
    for (int trial = 0; trial < 25 && r.pass; ++trial) {
        int n = trial % 2 == 0 ? 1 : 2;
        auto f = random_constructible(rng, n);
        Scalar lhs = evaluate_constructible(euler_valuation(n), f);
        Scalar rhs = euler_integral(f);
        if (lhs != rhs) {
            r.pass = false;
            r.witness = {{"trial", trial},
                         {"pairing", scalar_to_string(lhs)},
                         {"euler_integral", scalar_to_string(rhs)}};
        }
    }
    for (int n = 1; n <= 3 && r.pass; ++n)
        for (int i = 0; i < 5; ++i) {
            auto p = random_body(rng, n);
            if (euler_integral(indicator(p)) != Scalar(1)) {
                r.pass = false;
                r.witness = {{"subcase", "chi(convex)"}, {"body", body_witness(p)}};
                break;
            }
        }
    if (r.pass && euler_integral(boundary_indicator(unit_box(3))) != Scalar(2)) {
        r.pass = false;
        r.witness = {{"subcase", "chi(boundary of 3-cube)"}};
    }
    return r;
}

// Suite of homogeneous valuations of each degree 0..n built from segment
// terms in assorted directions.
inline std::vector<std::pair<int, ValuationExpr>> graded_suite(int n) {
    std::vector<std::pair<int, ValuationExpr>> out;
    out.emplace_back(0, euler_valuation(n));
    out.emplace_back(n, volume_valuation(n));
    std::vector<Vec> dirs;
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = 1;
        dirs.push_back(std::move(e));
    }
    dirs.push_back(Vec(n, Scalar(1)));
    if (n >= 2) {
        Vec d(n, Scalar(1));
        d[0] = Scalar(-1);
        dirs.push_back(std::move(d));
    }
    // degree n-k valuations: k segment bodies drawn from the direction pool
    for (int k = 1; k < n; ++k) {
        for (std::size_t start = 0; start < dirs.size(); ++start) {
            std::vector<Polytope> bodies;
            for (int t = 0; t < k; ++t)
                bodies.push_back(segment(zero_vec(n), dirs[(start + t) % dirs.size()]));
            out.emplace_back(n - k,
                             make_valuation(n, {ValuationTerm{Scalar(1), unit_weight(n),
                                                              std::move(bodies)}}));
        }
    }
    return out;
}

// ---- AC-9: support codimension against homogeneity degree ----
inline CheckResult ac9(std::uint64_t seed) {
    CheckResult r{"AC-9", "codimension-degree-orthogonality",
                  "functions supported in codimension i pair to zero with homogeneous "
                  "valuations of degree above n-i, and some degree-(n-i) valuation pairs "
                  "nonzero"};
    Rng rng = check_rng(seed, 9);
    r.pass = true;
    for (int n = 2; n <= 3 && r.pass; ++n) {
        auto graded = graded_suite(n);
        for (int codim = 0; codim <= n && r.pass; ++codim) {
            // random body of dimension n - codim
            int d = n - codim;
            Polytope support;
            if (d == 0) {
                support = point_polytope(rng.point(n, 3, 2));
            } else {
                std::vector<Vec> pts;
                Vec base = rng.point(n, 2, 2);
                pts.push_back(base);
                Mat span;
                while (static_cast<int>(span.size()) < d) {
                    Vec q = rng.point(n, 2, 2);
                    Mat trial = span;
                    trial.push_back(sub(q, base));
                    if (rank(trial) > span.size()) {
                        span = std::move(trial);
                        pts.push_back(q);
                    }
                }
                support = hull(pts, n);
            }
            auto f = indicator(support);
            if (support_codim(f) != codim) {
                r.pass = false;
                r.witness = {{"n", n}, {"codim", codim}, {"reason", "support construction"}};
                break;
            }
            bool nonzero_at_matching_degree = false;
            for (const auto& [deg, val] : graded) {
                Scalar pairing = evaluate_constructible(val, f);
                if (deg > n - codim && pairing != 0) {
                    r.pass = false;
                    r.witness = {{"n", n},
                                 {"codim", codim},
                                 {"degree", deg},
                                 {"pairing", scalar_to_string(pairing)},
                                 {"support", body_witness(support)}};
                    break;
                }
                if (deg == n - codim && pairing != 0) nonzero_at_matching_degree = true;
            }
            if (r.pass && !nonzero_at_matching_degree) {
                r.pass = false;
                r.witness = {{"n", n},
                             {"codim", codim},
                             {"reason", "no degree-matched valuation pairs nonzero"},
                             {"support", body_witness(support)}};
            }
        }
    }
    return r;
}

// ---- AC-10: rank of the evaluation pairing matrix ----
inline CheckResult ac10(std::uint64_t seed) {
    CheckResult r{"AC-10", "selfduality-rank",
                  "the 6x6 evaluation pairing matrix reaches the rank of the valuation span "
                  "measured on 30 held-out bodies"};
    auto vals = suite_valuations(2);
    auto fns = suite_functions(2);
    std::vector<ValuationExpr> rows;
    std::vector<ConstructibleFunction> cols;
    std::vector<std::string> row_names, col_names;
    for (const auto& v : vals) {
        rows.push_back(v.val);
        row_names.push_back(v.name);
    }
    for (const auto& f : fns) {
        cols.push_back(f.fn);
        col_names.push_back(f.name);
    }
    auto m = evaluation_pairing_matrix(rows, cols, row_names, col_names);

    auto held = held_out_bodies(2, 30, seed);
    Mat eval_matrix;
    for (const auto& v : rows) {
        Vec row;
        for (const auto& k : held) row.push_back(evaluate(v, k));
        eval_matrix.push_back(std::move(row));
    }
    int span_dim = static_cast<int>(rank(eval_matrix));
    r.pass = (m.rank == span_dim);
    r.witness = {{"pairing_rank", m.rank}, {"evaluation_span_dim", span_dim}};
    if (!r.pass) r.witness["matrix"] = pairing_to_json(m);
    return r;
}

// ---- AC-11: Minkowski polynomiality out of sample ----
inline CheckResult ac11(std::uint64_t seed) {
    CheckResult r{"AC-11", "minkowski-polynomiality",
                  "fitted weighted-volume polynomials reproduce direct weighted volumes at "
                  "out-of-sample rational points, exactly"};
    Rng rng = check_rng(seed, 11);
    r.pass = true;
    for (int trial = 0; trial < 20 && r.pass; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int s = static_cast<int>(rng.uniform(1, 3));
        std::vector<Polytope> bodies;
        for (int i = 0; i < s; ++i) {
            std::vector<Vec> pts;
            for (int j = 0; j < static_cast<int>(rng.uniform(2, 5)); ++j)
                pts.push_back(rng.point(n, 4, 2));
            bodies.push_back(hull(pts, n));
        }
        MultiPoly w{coordinate_vars("x", n), {}};
        w.add_term(std::vector<int>(n, 0), Scalar(1));
        if (rng.uniform(0, 1) == 1) {
            std::vector<int> e(n, 0);
            int deg = static_cast<int>(rng.uniform(1, 2));
            for (int t = 0; t < deg; ++t) ++e[rng.uniform(0, n - 1)];
            w.add_term(e, rng.rational(2, 2));
        }
        MultiPoly p = minkowski_polynomial(bodies, w);
        for (int probe = 0; probe < 5; ++probe) {
            std::vector<Scalar> lam(s);
            for (auto& l : lam) l = Scalar(7) + rng.positive_rational(40, 7);
            Scalar fitted = p.evaluate(lam);
            Scalar direct = weighted_volume(bodies, lam, w);
            if (fitted != direct) {
                r.pass = false;
                Json lj = Json::array();
                for (const auto& l : lam) lj.push_back(scalar_to_string(l));
                r.witness = {{"trial", trial},
                             {"lambda", lj},
                             {"fitted", scalar_to_string(fitted)},
                             {"direct", scalar_to_string(direct)}};
                break;
            }
        }
    }
    return r;
}

// ---- AC-12: mixed-volume sanity ----
inline CheckResult ac12(std::uint64_t seed) {
    CheckResult r{"AC-12", "mixed-volume-sanity",
                  "mixed volume is symmetric, diagonally normalized to volume, and takes the "
                  "reference values on unit squares and axis segments"};
    Rng rng = check_rng(seed, 12);
    r.pass = true;
    auto sq = unit_box(2);
    if (mixed_volume({sq, sq}) != Scalar(1)) {
        r.pass = false;
        r.witness = {{"subcase", "V(square, square)"}};
        return r;
    }
    if (mixed_volume({axis_segment(2, 0), axis_segment(2, 1)}) != Scalar(1, 2)) {
        r.pass = false;
        r.witness = {{"subcase", "V(e1 segment, e2 segment)"}};
        return r;
    }
    for (int n = 2; n <= 3 && r.pass; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Polytope> bodies;
            for (int i = 0; i < n; ++i) bodies.push_back(random_body(rng, n));
            Scalar v = mixed_volume(bodies);
            std::vector<Polytope> perm(bodies.rbegin(), bodies.rend());
            if (mixed_volume(perm) != v) {
                r.pass = false;
                r.witness = {{"subcase", "symmetry"}, {"n", n}};
                break;
            }
            std::vector<Polytope> diag(n, bodies[0]);
            if (mixed_volume(diag) != volume(bodies[0])) {
                r.pass = false;
                r.witness = {{"subcase", "diagonal"}, {"n", n}};
                break;
            }
        }
    }
    return r;
}

// ---- AC-13: intrinsic volumes of boxes ----
inline CheckResult ac13(std::uint64_t) {
    CheckResult r{"AC-13", "intrinsic-volumes",
                  "intrinsic volumes of scaled cubes match binomial(n,k) a^k to 1e-9 and the "
                  "top one matches the exact volume to 1e-12"};
    r.pass = true;
    auto binom = [](int n, int k) {
        double v = 1;
        for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
        return v;
    };
    for (int n = 1; n <= 3 && r.pass; ++n) {
        for (int half : {0, 1}) {
            double a = half ? 1.5 : 1.0;
            std::vector<Scalar> sides(n, half ? Scalar(3, 2) : Scalar(1));
            auto cube = box(sides);
            for (int k = 0; k <= n; ++k) {
                double got = intrinsic_volume(cube, k);
                double expect = binom(n, k) * std::pow(a, k);
                if (std::abs(got - expect) >= 1e-9) {
                    r.pass = false;
                    r.witness = {{"n", n}, {"k", k}, {"a", a}, {"got", got}, {"expect", expect}};
                    break;
                }
            }
            double top = intrinsic_volume(cube, n);
            double exact = detail::to_double(volume(cube));
            if (r.pass && std::abs(top - exact) >= 1e-12) {
                r.pass = false;
                r.witness = {{"subcase", "top equals volume"}, {"n", n}};
            }
            if (!r.pass) break;
        }
    }
    return r;
}

} // namespace acceptance_detail

// Runs the acceptance battery (all 13 criteria, or a subset of ids for
// focused reruns). Checks run concurrently on their own deterministic
// substreams; the report order is fixed.
inline RunReport acceptance_run(std::uint64_t seed, bool parallel = true,
                                const std::vector<int>& only = {}) {
    RunReport report;
    report.seed = seed;
    report.testset_version = config().testset_version;
    using namespace acceptance_detail;
    std::vector<std::function<CheckResult(std::uint64_t)>> checks = {
        ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12, ac13};
    if (!only.empty()) {
        std::vector<std::function<CheckResult(std::uint64_t)>> picked;
        for (int id : only) {
            if (id < 1 || id > static_cast<int>(checks.size()))
                throw validation_error("acceptance_run: no criterion AC-" + std::to_string(id));
            picked.push_back(checks[id - 1]);
        }
        checks = std::move(picked);
    }

    std::vector<std::future<CheckResult>> futures;
    for (auto& fn : checks) {
        auto task = [fn, seed]() {
            auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = fn(seed);
            } catch (const std::exception& e) {
                r.pass = false;
                r.witness = {{"exception", e.what()}};
            }
            auto t1 = std::chrono::steady_clock::now();
            r.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            return r;
        };
        futures.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                                     std::move(task)));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
        CheckResult r = futures[i].get();
        if (r.id.empty()) {  // exception path lost the metadata; re-stamp
            r.id = "AC-" + std::to_string(i + 1);
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

// Deterministic body (no timings); "timings_ms" is appended separately and
// excluded from byte-for-byte comparisons.
inline Json report_to_json(const RunReport& report) {
    Json j;
    j["artifact"] = report.artifact;
    j["version"] = report.version;
    j["seed"] = report.seed;
    j["testset_version"] = report.testset_version;
    Json checks = Json::array();
    int passed = 0;
    for (const auto& c : report.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["property"] = c.property;
        cj["description"] = c.description;
        cj["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
        if (c.pass) ++passed;
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", static_cast<int>(report.checks.size())},
                    {"passed", passed},
                    {"failed", static_cast<int>(report.checks.size()) - passed}};
    Json timings;
    for (const auto& c : report.checks) timings[c.id] = c.runtime_ms;
    j["timings_ms"] = std::move(timings);
    return j;
}

} // namespace valcalc

#endif
