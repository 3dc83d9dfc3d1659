#pragma once

#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "hoffman/rational.hpp"

namespace hoffman {

// Exact symmetric matrix over the rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}

    int order() const { return n_; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, const Rational& v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    RatMatrix principal_submatrix(const std::vector<int>& keep) const;

    // Throws InputError unless symmetric.
    void validate() const;

    static RatMatrix from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    std::vector<Rational> multiply(const std::vector<Rational>& x) const;
    Rational quadratic_form(const std::vector<Rational>& x) const;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

enum class Relation { Greater, Equal, Less };

const char* relation_name(Relation r);

// Verdict for lambda_min(M) vs -t, decided through M + tI:
//   Greater: M + tI positive definite       (certificate: pivot sequence)
//   Equal:   M + tI PSD and singular        (certificate: x with (M+tI)x = 0)
//   Less:    otherwise                      (certificate: x with x^T (M+tI) x < 0)
struct SpectralVerdict {
    Relation relation;
    Rational threshold;
    enum class Certificate { PsdPivots, KernelVector, NegativeVector } certificate;
    std::vector<Rational> pivots;   // PsdPivots
    std::vector<Rational> witness;  // KernelVector / NegativeVector

    // Re-checks the certificate against m by exact arithmetic.
    bool revalidate(const RatMatrix& m) const;

    nlohmann::json to_json() const;
};

SpectralVerdict classify_lambda_min(const RatMatrix& m, const Rational& t);

// D M D with D = diag(d), d in {+1,-1}^n; spectrum preserved.
RatMatrix sign_switch(const RatMatrix& m, const std::vector<int>& d);

struct ApproxEigen {
    double value;        // smallest eigenvalue estimate
    double error_bound;  // |error| <= error_bound
};

// Cyclic Jacobi rotations; throws InputError on non-convergence.
ApproxEigen lambda_min_approx(const RatMatrix& m, double tol = 1e-10, int sweep_limit = 100);

// Rank over the rationals by Gaussian elimination (rows of length dim).
int rational_rank(const std::vector<std::vector<Rational>>& rows, int dim);

}  // namespace hoffman
