#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotor/observable.hpp"
#include "rotor/state.hpp"

namespace rotor {

struct RankReport {
    std::vector<std::string> observable_names;
    PhaseState state;
    std::string mode;  // "exact" | "floating"
    std::vector<double> singular_values;  // floating mode only
    double tolerance = 0;                 // floating mode only
    int rank = 0;
};

using ExactMatrix = std::vector<std::array<Rational, 6>>;

/// Jacobian row of one observable: symbolic partials evaluated exactly at a
/// rational state with theta = 0. Throws if the observable is complex-valued.
inline ExactMatrix gradient_matrix_exact(const std::vector<Observable>& obs, const ExactState& s) {
    static constexpr std::array<Var, 6> cols{Var::x, Var::y, Var::theta, Var::px, Var::py, Var::ptheta};
    ExactMatrix m;
    m.reserve(obs.size());
    for (const auto& o : obs) {
        std::array<Rational, 6> row;
        for (std::size_t j = 0; j < 6; ++j) {
            RationalComplex v = evaluate_exact(partial_derivative(o, cols[j]), s);
            if (v.im != 0)
                throw std::invalid_argument("complex-valued observable in a rank set (use P/Q, not K)");
            row[j] = v.re;
        }
        m.push_back(std::move(row));
    }
    return m;
}

inline Eigen::MatrixXd gradient_matrix(const std::vector<Observable>& obs, const PhaseState& s) {
    static constexpr std::array<Var, 6> cols{Var::x, Var::y, Var::theta, Var::px, Var::py, Var::ptheta};
    Eigen::MatrixXd m(static_cast<Eigen::Index>(obs.size()), 6);
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (!obs[i].is_real_valued())
            throw std::invalid_argument("complex-valued observable in a rank set (use P/Q, not K)");
        for (std::size_t j = 0; j < 6; ++j) {
            std::complex<double> v = evaluate(partial_derivative(obs[i], cols[j]), s);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.real();
        }
    }
    return m;
}

/// Exact rank by Bareiss fraction-free elimination: denominators are cleared
/// per row, then all pivots stay in cpp_int.
inline int exact_rank(const ExactMatrix& matrix) {
    const std::size_t rows = matrix.size(), cols = 6;
    std::vector<std::array<Integer, 6>> a(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        Integer lcm{1};
        for (std::size_t j = 0; j < cols; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(matrix[i][j]));
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = matrix[i][j] * Rational(lcm);
            a[i][j] = numerator(scaled);
        }
    }
    Integer prev{1};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Numerical rank: count of singular values above tolerance * sigma_max.
inline int floating_rank(const Eigen::MatrixXd& m, double tolerance, std::vector<double>* sv_out = nullptr) {
    if (!(tolerance > 0 && tolerance < 1)) throw std::invalid_argument("tolerance must lie in (0,1)");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv_out) sv_out->assign(sv.data(), sv.data() + sv.size());
    if (sv.size() == 0 || sv(0) == 0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tolerance * sv(0)) ++r;
    return r;
}

inline RankReport rank_exact_report(const std::vector<std::string>& names,
                                    const std::vector<Observable>& obs, const ExactState& s) {
    RankReport rep;
    rep.observable_names = names;
    rep.state = s.to_double();
    rep.mode = "exact";
    rep.rank = exact_rank(gradient_matrix_exact(obs, s));
    return rep;
}

inline RankReport rank_floating_report(const std::vector<std::string>& names,
                                       const std::vector<Observable>& obs, const PhaseState& s,
                                       double tolerance) {
    RankReport rep;
    rep.observable_names = names;
    rep.state = s;
    rep.mode = "floating";
    rep.tolerance = tolerance;
    rep.rank = floating_rank(gradient_matrix(obs, s), tolerance, &rep.singular_values);
    return rep;
}

}  // namespace rotor
