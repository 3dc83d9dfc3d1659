#include "hoffman/matrix.hpp"

#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

namespace hoffman {

RatMatrix RatMatrix::principal_submatrix(const std::vector<int>& keep) const {
    RatMatrix s(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (i <= j) s.set(static_cast<int>(i), static_cast<int>(j), at(keep[i], keep[j]));
    return s;
}

void RatMatrix::validate() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
}

RatMatrix RatMatrix::from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("matrix: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0) throw InputError("matrix: negative order");
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != static_cast<size_t>(n))
        throw InputError("matrix: 'rows' must be an array of " + std::to_string(n) + " rows");
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j["rows"][i];
        if (!row.is_array() || row.size() != static_cast<size_t>(n))
            throw InputError("matrix: row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k) {
            const auto& e = row[k];
            Rational v;
            if (e.is_string()) v = parse_rational(e.get<std::string>());
            else if (e.is_number_integer()) v = Rational(e.get<long long>());
            else
                throw InputError("matrix: entry (" + std::to_string(i) + "," +
                                 std::to_string(k) + ") must be a string or integer");
            m.a_[static_cast<size_t>(i) * n + k] = v;
        }
    }
    m.validate();
    return m;
}

nlohmann::json RatMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n_; ++j) row.push_back(format_rational(at(i, j)));
        rows.push_back(row);
    }
    return {{"n", n_}, {"rows", rows}};
}

std::vector<Rational> RatMatrix::multiply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(n_, Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

Rational RatMatrix::quadratic_form(const std::vector<Rational>& x) const {
    Rational v(0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) v += x[i] * at(i, j) * x[j];
    return v;
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Greater: return "Greater";
        case Relation::Equal: return "Equal";
        case Relation::Less: return "Less";
    }
    return "?";
}

namespace {

RatMatrix shifted(const RatMatrix& m, const Rational& t) {
    RatMatrix a = m;
    for (int i = 0; i < a.order(); ++i) a.set(i, i, m.at(i, i) + t);
    return a;
}

// Back-substitute x over the stored pivot rows, most recent first, so that
// every pivot row has zero inner product with x.
void back_substitute(std::vector<Rational>& x, const std::vector<int>& pivot_idx,
                     const std::vector<std::vector<Rational>>& pivot_rows) {
    for (int p = static_cast<int>(pivot_idx.size()) - 1; p >= 0; --p) {
        int k = pivot_idx[p];
        const auto& row = pivot_rows[p];
        Rational s(0);
        for (size_t j = k + 1; j < row.size(); ++j) s += row[j] * x[j];
        x[k] = -s / row[k];
    }
}

}  // namespace

SpectralVerdict classify_lambda_min(const RatMatrix& m, const Rational& t) {
    m.validate();
    int n = m.order();
    RatMatrix orig = shifted(m, t);
    // Working copy as dense rows.
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = orig.at(i, j);

    SpectralVerdict v;
    v.threshold = t;
    std::vector<int> pivot_idx;
    std::vector<std::vector<Rational>> pivot_rows;
    std::vector<int> kernel_idx;

    for (int k = 0; k < n; ++k) {
        const Rational d = w[k][k];
        if (d > 0) {
            pivot_idx.push_back(k);
            pivot_rows.push_back(w[k]);
            v.pivots.push_back(d);
            for (int i = k + 1; i < n; ++i) {
                if (w[i][k] == 0) continue;
                Rational f = w[i][k] / d;
                for (int j = k + 1; j < n; ++j) w[i][j] -= f * w[k][j];
            }
            continue;
        }
        std::vector<Rational> x(n, Rational(0));
        if (d < 0) {
            x[k] = 1;
        } else {
            int j = -1;
            for (int c = k + 1; c < n; ++c)
                if (w[k][c] != 0) { j = c; break; }
            if (j < 0) {
                kernel_idx.push_back(k);
                continue;
            }
            // 2x2 block [[0, b],[b, c]] is indefinite; pick s with 2 s b + c = -1.
            x[k] = -(w[j][j] + 1) / (2 * w[k][j]);
            x[j] = 1;
        }
        back_substitute(x, pivot_idx, pivot_rows);
        v.relation = Relation::Less;
        v.certificate = SpectralVerdict::Certificate::NegativeVector;
        v.witness = x;
        if (!(orig.quadratic_form(x) < 0))
            throw InternalError("negative witness failed exact re-check");
        return v;
    }

    if (!kernel_idx.empty()) {
        std::vector<Rational> x(n, Rational(0));
        x[kernel_idx.front()] = 1;
        back_substitute(x, pivot_idx, pivot_rows);
        v.relation = Relation::Equal;
        v.certificate = SpectralVerdict::Certificate::KernelVector;
        v.witness = x;
        for (const auto& y : orig.multiply(x))
            if (y != 0) throw InternalError("kernel witness failed exact re-check");
        return v;
    }

    v.relation = Relation::Greater;
    v.certificate = SpectralVerdict::Certificate::PsdPivots;
    return v;
}

bool SpectralVerdict::revalidate(const RatMatrix& m) const {
    RatMatrix a = shifted(m, threshold);
    switch (certificate) {
        case Certificate::PsdPivots: {
            SpectralVerdict again = classify_lambda_min(m, threshold);
            return relation == Relation::Greater && again.relation == Relation::Greater &&
                   again.pivots == pivots;
        }
        case Certificate::KernelVector: {
            if (relation != Relation::Equal) return false;
            bool nonzero = false;
            for (const auto& x : witness)
                if (x != 0) nonzero = true;
            if (!nonzero) return false;
            for (const auto& y : a.multiply(witness))
                if (y != 0) return false;
            return true;
        }
        case Certificate::NegativeVector:
            return relation == Relation::Less && a.quadratic_form(witness) < 0;
    }
    return false;
}

nlohmann::json SpectralVerdict::to_json() const {
    nlohmann::json j;
    j["relation"] = relation_name(relation);
    j["threshold"] = format_rational(threshold);
    switch (certificate) {
        case Certificate::PsdPivots: {
            nlohmann::json p = nlohmann::json::array();
            for (const auto& r : pivots) p.push_back(format_rational(r));
            j["certificate"] = {{"type", "psd_pivots"}, {"pivots", p}};
            break;
        }
        case Certificate::KernelVector:
        case Certificate::NegativeVector: {
            nlohmann::json x = nlohmann::json::array();
            for (const auto& r : witness) x.push_back(format_rational(r));
            j["certificate"] = {
                {"type", certificate == Certificate::KernelVector ? "kernel_vector"
                                                                  : "negative_vector"},
                {"vector", x}};
            break;
        }
    }
    return j;
}

RatMatrix sign_switch(const RatMatrix& m, const std::vector<int>& d) {
    if (static_cast<int>(d.size()) != m.order())
        throw InputError("sign_switch: vector length " + std::to_string(d.size()) +
                         " does not match order " + std::to_string(m.order()));
    for (int e : d)
        if (e != 1 && e != -1) throw InputError("sign_switch: entries must be +1 or -1");
    RatMatrix out(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = i; j < m.order(); ++j) out.set(i, j, Rational(d[i] * d[j]) * m.at(i, j));
    return out;
}

ApproxEigen lambda_min_approx(const RatMatrix& m, double tol, int sweep_limit) {
    if (!(tol > 0)) throw InputError("lambda_min_approx: tolerance must be positive");
    m.validate();
    int n = m.order();
    if (n == 0) throw InputError("lambda_min_approx: empty matrix");
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    double max_abs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = m.at(i, j).convert_to<double>();
            max_abs = std::max(max_abs, std::fabs(a[i][j]));
        }
    const double fuzz = 32.0 * n * std::numeric_limits<double>::epsilon() * std::max(max_abs, 1.0);

    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > tol / 2 && sweep < sweep_limit) {
        ++sweep;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t_ = (theta >= 0 ? 1.0 : -1.0) /
                            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t_ * t_ + 1.0), s = t_ * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    double off = off_norm();
    if (off > tol / 2)
        throw InputError("lambda_min_approx: no convergence after " +
                         std::to_string(sweep_limit) + " sweeps (off-norm " +
                         std::to_string(off) + ")");
    double lo = a[0][0];
    for (int i = 1; i < n; ++i) lo = std::min(lo, a[i][i]);
    return {lo, off + fuzz};
}

int rational_rank(const std::vector<std::vector<Rational>>& rows_in, int dim) {
    std::vector<std::vector<Rational>> rows = rows_in;
    int rank = 0;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (int c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace hoffman
