#include "hoffman/lemmas.hpp"

#include <nlohmann/json.hpp>

namespace hoffman {

namespace {

void check_signs(const std::vector<int>& signs, size_t want, const char* who) {
    if (signs.size() != want)
        throw InputError(std::string(who) + ": expected " + std::to_string(want) +
                         " signs, got " + std::to_string(signs.size()));
    for (int s : signs)
        if (s != 1 && s != -1)
            throw InputError(std::string(who) + ": signs must be +1 or -1");
}

bool at_most(const SpectralVerdict& v) {
    return v.relation == Relation::Equal || v.relation == Relation::Less;
}

bool kernel_identity(const RatMatrix& b, const std::vector<Rational>& x) {
    RatMatrix s = b;
    for (int i = 0; i < s.order(); ++i) s.set(i, i, b.at(i, i) + 3);
    for (const auto& y : s.multiply(x))
        if (y != 0) return false;
    return true;
}

}  // namespace

bool verify_path_lemma(int n, const std::vector<int>& signs,
                       const std::vector<Rational>& middles) {
    if (n < 2) throw InputError("verify_path_lemma: n must be at least 2");
    check_signs(signs, n - 1, "verify_path_lemma");
    if (middles.size() != static_cast<size_t>(n - 2))
        throw InputError("verify_path_lemma: expected " + std::to_string(n - 2) +
                         " middle entries");
    bool all_minus_one = true;
    for (const auto& d : middles) {
        if (d > -1) throw InputError("verify_path_lemma: middle entries must be <= -1");
        if (d != -1) all_minus_one = false;
    }

    RatMatrix b(n);
    b.set(0, 0, Rational(-2));
    b.set(n - 1, n - 1, Rational(-2));
    for (int i = 1; i < n - 1; ++i) b.set(i, i, middles[i - 1]);
    for (int i = 0; i < n - 1; ++i) b.set(i, i + 1, Rational(signs[i]));

    SpectralVerdict v = classify_lambda_min(b, Rational(3));
    if (all_minus_one && v.relation != Relation::Equal) return false;
    if (!at_most(v)) return false;

    // Switching by cumulative sign products makes every off-diagonal +1.
    std::vector<int> d(n, 1);
    for (int i = 1; i < n; ++i) d[i] = d[i - 1] * signs[i - 1];
    RatMatrix sw = sign_switch(b, d);
    for (int i = 0; i < n - 1; ++i)
        if (sw.at(i, i + 1) != 1) return false;
    SpectralVerdict vs = classify_lambda_min(sw, Rational(3));
    return vs.relation == v.relation;
}

bool verify_Dn_lemma(int n, const std::vector<int>& signs) {
    if (n < 4) throw InputError("verify_Dn_lemma: n must be at least 4");
    check_signs(signs, n - 1, "verify_Dn_lemma");
    auto eps = [&](int k) { return Rational(signs[k - 1]); };  // 1-based

    RatMatrix b(n);
    b.set(0, 0, Rational(-2));
    for (int i = 1; i < n; ++i) b.set(i, i, Rational(-1));
    for (int i = 1; i <= n - 2; ++i) b.set(i - 1, i, eps(i));
    b.set(n - 3, n - 1, eps(n - 1));

    std::vector<Rational> x(n);
    for (int i = 1; i <= n - 3; ++i) {
        Rational prod(1);
        for (int k = i; k <= n - 3; ++k) prod *= -eps(k);
        x[i - 1] = 2 * prod;
    }
    x[n - 3] = 2;
    x[n - 2] = -eps(n - 2);
    x[n - 1] = -eps(n - 1);

    return kernel_identity(b, x) && at_most(classify_lambda_min(b, Rational(3)));
}

bool verify_path_clique_lemma(int n, const std::vector<int>& signs, int eps) {
    if (n < 1) throw InputError("verify_path_clique_lemma: n must be at least 1");
    check_signs(signs, n - 1, "verify_path_clique_lemma");
    if (eps != 0 && eps != 1)
        throw InputError("verify_path_clique_lemma: eps must be 0 or 1");
    int delta = 1 - eps;

    int sz = n + 3;
    RatMatrix b(sz);
    b.set(0, 0, Rational(-2));
    for (int i = 1; i < sz; ++i) b.set(i, i, Rational(-1));
    for (int i = 1; i <= n - 1; ++i) b.set(i - 1, i, Rational(signs[i - 1]));
    b.set(n - 1, n, Rational(1));
    b.set(n - 1, n + 1, Rational(1));
    b.set(n - 1, n + 2, Rational(eps));
    b.set(n, n + 1, Rational(delta));
    b.set(n, n + 2, Rational(1));
    b.set(n + 1, n + 2, Rational(1));

    std::vector<Rational> x(sz);
    for (int i = 1; i <= n - 1; ++i) {
        Rational prod(1);
        for (int k = i; k <= n - 1; ++k) prod *= Rational(-signs[k - 1]);
        x[i - 1] = 2 * prod;
    }
    x[n - 1] = 2;
    x[n] = -1;
    x[n + 1] = -1;
    x[n + 2] = Rational(2 * (eps - 1)) / Rational(eps - 2);

    return kernel_identity(b, x) && at_most(classify_lambda_min(b, Rational(3)));
}

bool verify_cycle_lemma(int n, const std::vector<int>& signs) {
    if (n < 4) throw InputError("verify_cycle_lemma: n must be at least 4");
    check_signs(signs, n, "verify_cycle_lemma");
    int plus_count = 0, prod = 1;
    for (int s : signs) {
        if (s == 1) ++plus_count;
        prod *= s;
    }
    if (plus_count % 2 != 0)
        throw InputError("verify_cycle_lemma: the number of (+)-edges must be even");
    if (prod != (n % 2 == 0 ? 1 : -1))
        throw InternalError("verify_cycle_lemma: parity identity failed");

    RatMatrix b(n);
    for (int i = 0; i < n; ++i) b.set(i, i, Rational(-1));
    for (int i = 0; i < n - 1; ++i) b.set(i, i + 1, Rational(signs[i]));
    b.set(0, n - 1, Rational(signs[n - 1]));

    std::vector<Rational> x(n);
    x[0] = 1;
    for (int i = 1; i < n; ++i) x[i] = x[i - 1] * Rational(-signs[i - 1]);
    if (!kernel_identity(b, x)) return false;

    SpectralVerdict v = classify_lambda_min(b, Rational(3));
    if (n % 2 == 0) {
        if (v.relation != Relation::Equal) return false;
        std::vector<int> d(n, 1);
        for (int i = 1; i < n; ++i) d[i] = d[i - 1] * signs[i - 1];
        RatMatrix sw = sign_switch(b, d);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool ring = j == i + 1 || (i == 0 && j == n - 1);
                if (sw.at(i, j) != (ring ? 1 : 0)) return false;
            }
        if (classify_lambda_min(sw, Rational(3)).relation != Relation::Equal)
            return false;
    } else {
        if (!at_most(v)) return false;
        RatMatrix t(3);
        for (int i = 0; i < 3; ++i) t.set(i, i, Rational(-1));
        t.set(0, 1, Rational(1));
        t.set(0, 2, Rational(-1));
        t.set(1, 2, Rational(1));
        if (classify_lambda_min(t, Rational(3)).relation != Relation::Equal)
            return false;
    }
    return true;
}

bool verify_path_cycle_lemma(int m, int n, const std::vector<int>& path_signs,
                             const std::vector<int>& cycle_signs) {
    if (m < 1) throw InputError("verify_path_cycle_lemma: m must be at least 1");
    if (n < 3) throw InputError("verify_path_cycle_lemma: n must be at least 3");
    check_signs(path_signs, m - 1, "verify_path_cycle_lemma");
    check_signs(cycle_signs, n - 1, "verify_path_cycle_lemma");  // eps_2..eps_n
    int prod = 1;
    for (int s : cycle_signs) prod *= s;
    if (prod != (n % 2 == 0 ? -1 : 1))
        throw InputError("verify_path_cycle_lemma: the cycle (+)-count must be odd");

    auto delta = [&](int k) { return Rational(path_signs[k - 1]); };   // delta_1..m-1
    auto eps = [&](int k) { return Rational(cycle_signs[k - 2]); };    // eps_2..n

    int sz = m + n;
    RatMatrix b(sz);
    b.set(0, 0, Rational(-2));
    for (int i = 1; i < sz; ++i) b.set(i, i, Rational(-1));
    for (int i = 1; i <= m - 1; ++i) b.set(i - 1, i, delta(i));
    // (+)-triangle v_m, v_{m+1}, v_{m+2}
    b.set(m - 1, m, Rational(1));
    b.set(m - 1, m + 1, Rational(1));
    b.set(m, m + 1, Rational(1));
    // rest of the cycle: v_{m+2} - v_{m+3} - ... - v_{m+n} - v_{m+1}
    for (int j = 2; j <= n - 1; ++j) b.set(m + j - 1, m + j, eps(j));
    b.set(m, m + n - 1, eps(n));

    std::vector<Rational> x(sz);
    x[0] = 2;
    for (int i = 2; i <= m; ++i) {
        Rational prod_d(1);
        for (int k = 1; k <= i - 1; ++k) prod_d *= -delta(k);
        x[i - 1] = 2 * prod_d;
    }
    Rational dbar(1);
    for (int k = 1; k <= m - 1; ++k) dbar *= -delta(k);
    x[m] = -dbar;
    x[m + 1] = -dbar;
    for (int i = m + 3; i <= m + n; ++i) {
        Rational prod_e(1);
        for (int k = 2; k <= i - m - 1; ++k) prod_e *= -eps(k);
        x[i - 1] = -dbar * prod_e;
    }

    return kernel_identity(b, x) && at_most(classify_lambda_min(b, Rational(3)));
}

nlohmann::json LemmaReportEntry::to_json() const {
    nlohmann::json j{{"lemma", lemma}, {"params", params}, {"verdict", verdict},
                     {"pass", pass}};
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    return j;
}

nlohmann::json lemma_report_json(const std::vector<LemmaReportEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) arr.push_back(e.to_json());
    return arr;
}

namespace {

RatMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, Rational(rows[i][j]));
    return m;
}

void classify_case(std::vector<LemmaReportEntry>& out, const std::string& lemma,
                   const nlohmann::json& params, const RatMatrix& m,
                   Relation want_exact) {
    SpectralVerdict v = classify_lambda_min(m, Rational(3));
    LemmaReportEntry e{lemma, params, relation_name(want_exact),
                       v.relation == want_exact, nullptr};
    if (!e.pass) e.counterexample = m.to_json();
    out.push_back(e);
}

void classify_at_most(std::vector<LemmaReportEntry>& out, const std::string& lemma,
                      const nlohmann::json& params, const RatMatrix& m) {
    SpectralVerdict v = classify_lambda_min(m, Rational(3));
    LemmaReportEntry e{lemma, params, "Equal-or-Less", at_most(v), nullptr};
    if (!e.pass) e.counterexample = m.to_json();
    out.push_back(e);
}

}  // namespace

std::vector<LemmaReportEntry> verify_fixed_matrix_lemmas() {
    std::vector<LemmaReportEntry> out;

    // Non-adjacent neighbors of a two-fat slim vertex: all three shapes hit -3.
    classify_case(out, "nonadjacent-neighbors", {{"case", 1}},
                  from_rows({{-1, 1, 0}, {1, -2, 1}, {0, 1, -1}}), Relation::Equal);
    classify_case(out, "nonadjacent-neighbors", {{"case", 2}},
                  from_rows({{-1, -1, 0}, {-1, -2, 1}, {0, 1, -1}}), Relation::Equal);
    classify_case(out, "nonadjacent-neighbors", {{"case", 3}},
                  from_rows({{-1, -1, 0}, {-1, -2, -1}, {0, -1, -1}}), Relation::Equal);

    // Signed triangle with a (-)-edge, all vertices with one fat neighbor.
    classify_case(out, "signed-triangle", {{"minus_edges", 1}},
                  from_rows({{-1, 1, 1}, {1, -1, -1}, {1, -1, -1}}), Relation::Equal);
    classify_case(out, "signed-triangle", {{"minus_edges", 3}},
                  from_rows({{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}}), Relation::Equal);

    // Marked triangle (two fats at v*): cases (a), (b), (d) drop below -3.
    classify_case(out, "marked-triangle", {{"case", "a"}},
                  from_rows({{-2, 1, 1}, {1, -1, -1}, {1, -1, -1}}), Relation::Less);
    classify_case(out, "marked-triangle", {{"case", "b"}},
                  from_rows({{-2, 1, -1}, {1, -1, 1}, {-1, 1, -1}}), Relation::Less);
    classify_case(out, "marked-triangle", {{"case", "d"}},
                  from_rows({{-2, -1, -1}, {-1, -1, -1}, {-1, -1, -1}}), Relation::Less);

    // Cut vertex between two one-fat neighbors: -3 for all four sign choices.
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            classify_case(out, "cut-vertex", {{"e1", e1}, {"e2", e2}},
                          from_rows({{-1, e1, 0}, {e1, -2, e2}, {0, e2, -1}}),
                          Relation::Equal);

    // Claw in the special graph, both positions of the two-fat vertex.
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (int e3 : {1, -1}) {
                nlohmann::json p{{"e1", e1}, {"e2", e2}, {"e3", e3}};
                classify_at_most(out, "claw-center", p,
                                 from_rows({{-2, e1, e2, e3},
                                            {e1, -1, 0, 0},
                                            {e2, 0, -1, 0},
                                            {e3, 0, 0, -1}}));
                classify_at_most(out, "claw-leaf", p,
                                 from_rows({{-1, e1, e2, e3},
                                            {e1, -2, 0, 0},
                                            {e2, 0, -1, 0},
                                            {e3, 0, 0, -1}}));
            }

    // K_{1,1,2} underlying special graph, all 32 sign assignments.
    for (int e12 : {1, -1})
        for (int e13 : {1, -1})
            for (int e23 : {1, -1})
                for (int e24 : {1, -1})
                    for (int e34 : {1, -1})
                        classify_at_most(
                            out, "K112",
                            {{"e12", e12}, {"e13", e13}, {"e23", e23},
                             {"e24", e24}, {"e34", e34}},
                            from_rows({{-2, e12, e13, 0},
                                       {e12, -1, e23, e24},
                                       {e13, e23, -1, e34},
                                       {0, e24, e34, -1}}));

    // Odd-cycle remark submatrix.
    classify_case(out, "odd-cycle-remark", {},
                  from_rows({{-1, 1, -1}, {1, -1, 1}, {-1, 1, -1}}), Relation::Equal);
    return out;
}

std::vector<LemmaReportEntry> run_lemma_suite(const LemmaSweepBounds& bounds) {
    std::vector<LemmaReportEntry> out = verify_fixed_matrix_lemmas();

    auto sweep_signs = [](int len, auto&& fn) {
        long long total = 1LL << len;
        for (long long mask = 0; mask < total; ++mask) {
            std::vector<int> signs(len);
            for (int i = 0; i < len; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
            if (!fn(signs)) return std::make_pair(false, signs);
        }
        return std::make_pair(true, std::vector<int>{});
    };

    auto add = [&](const std::string& lemma, const nlohmann::json& params, bool ok,
                   const std::vector<int>& bad) {
        LemmaReportEntry e{lemma, params, "all cases pass", ok, nullptr};
        if (!ok) e.counterexample = bad;
        out.push_back(e);
    };

    for (int n = 2; n <= bounds.path_max; ++n) {
        auto [ok, bad] = sweep_signs(n - 1, [&](const std::vector<int>& s) {
            std::vector<Rational> ones(n - 2, Rational(-1));
            if (!verify_path_lemma(n, s, ones)) return false;
            if (n > 2) {
                std::vector<Rational> deep = ones;
                deep[0] = Rational(-2);
                if (!verify_path_lemma(n, s, deep)) return false;
            }
            return true;
        });
        add("path", {{"n", n}}, ok, bad);
    }

    for (int n = 4; n <= bounds.dn_max; ++n) {
        auto [ok, bad] = sweep_signs(
            n - 1, [&](const std::vector<int>& s) { return verify_Dn_lemma(n, s); });
        add("Dn", {{"n", n}}, ok, bad);
    }

    for (int n = 1; n <= bounds.path_clique_max; ++n)
        for (int eps : {0, 1}) {
            auto [ok, bad] = sweep_signs(n - 1, [&](const std::vector<int>& s) {
                return verify_path_clique_lemma(n, s, eps);
            });
            add("path+K112", {{"n", n}, {"eps", eps}}, ok, bad);
        }

    for (int n = 4; n <= bounds.cycle_max; ++n) {
        bool ok = true;
        std::vector<int> bad;
        long long total = 1LL << n;
        for (long long mask = 0; mask < total && ok; ++mask) {
            std::vector<int> signs(n);
            int plus = 0;
            for (int i = 0; i < n; ++i) {
                signs[i] = (mask >> i) & 1 ? -1 : 1;
                if (signs[i] == 1) ++plus;
            }
            if (plus % 2 != 0) continue;
            if (!verify_cycle_lemma(n, signs)) {
                ok = false;
                bad = signs;
            }
        }
        add("cycle", {{"n", n}}, ok, bad);
    }

    for (int m = 1; m <= bounds.path_cycle_max - 3; ++m)
        for (int n = 3; m + n <= bounds.path_cycle_max; ++n) {
            bool ok = true;
            std::vector<int> bad;
            auto [okp, badp] = sweep_signs(m - 1, [&](const std::vector<int>& ps) {
                long long total = 1LL << (n - 1);
                for (long long mask = 0; mask < total; ++mask) {
                    std::vector<int> cs(n - 1);
                    int prod = 1;
                    for (int i = 0; i < n - 1; ++i) {
                        cs[i] = (mask >> i) & 1 ? -1 : 1;
                        prod *= cs[i];
                    }
                    if (prod != (n % 2 == 0 ? -1 : 1)) continue;
                    if (!verify_path_cycle_lemma(m, n, ps, cs)) {
                        bad = cs;
                        return false;
                    }
                }
                return true;
            });
            ok = okp;
            if (!ok && bad.empty()) bad = badp;
            add("path+cycle", {{"m", m}, {"n", n}}, ok, bad);
        }

    return out;
}

}  // namespace hoffman
