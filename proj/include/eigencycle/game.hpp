#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "eigencycle/errors.hpp"
#include "eigencycle/rational.hpp"

namespace eigencycle {

/// Two-population matrix game. `a_payoff` is n_a x n_b from the row
/// player's view; `b_payoff` is n_b x n_a from the column player's view.
/// For zero-sum games b_payoff[j][i] == -a_payoff[i][j].
class PayoffBimatrix {
public:
    PayoffBimatrix(RationalMatrix a_payoff, RationalMatrix b_payoff,
                   std::vector<std::string> a_labels = {},
                   std::vector<std::string> b_labels = {});

    // Builds the zero-sum complement b = -a^T.
    static PayoffBimatrix zero_sum(RationalMatrix a_payoff,
                                   std::vector<std::string> a_labels = {},
                                   std::vector<std::string> b_labels = {});

    // Game file: JSON with n_a, n_b, a_payoff (row-major), optional b_payoff
    // (defaults to the zero-sum complement) and labels.
    static PayoffBimatrix from_json_text(const std::string& text);
    static PayoffBimatrix load(const std::string& path);
    std::string to_json_text() const;

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int dims() const { return n_a_ + n_b_; }
    bool zero_sum() const { return zero_sum_; }

    const RationalMatrix& a_payoff() const { return a_; }
    const RationalMatrix& b_payoff() const { return b_; }
    const std::vector<std::string>& a_labels() const { return a_labels_; }
    const std::vector<std::string>& b_labels() const { return b_labels_; }

    // Cached double views used by the numeric paths.
    const Eigen::MatrixXd& a_matrix() const { return a_d_; }
    const Eigen::MatrixXd& b_matrix() const { return b_d_; }

private:
    int n_a_ = 0, n_b_ = 0;
    bool zero_sum_ = false;
    RationalMatrix a_, b_;
    Eigen::MatrixXd a_d_, b_d_;
    std::vector<std::string> a_labels_, b_labels_;
};

/// Point on the product of the two strategy simplices. Components 1..n_a
/// belong to population A, the rest to population B.
class StateVector {
public:
    StateVector(int n_a, int n_b, Eigen::VectorXd x);
    StateVector(int n_a, int n_b, RationalVector x_exact);

    // Clamps components in [-1e-9, 0) to zero and renormalizes; anything
    // more negative (or a worse sum violation) is rejected.
    static StateVector clamped(int n_a, int n_b, Eigen::VectorXd x);

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int dims() const { return n_a_ + n_b_; }
    const Eigen::VectorXd& x() const { return x_; }
    double operator[](int i) const { return x_[i]; }

    // Present when the state was produced by exact arithmetic.
    const std::optional<RationalVector>& exact() const { return exact_; }

private:
    void validate() const;
    int n_a_, n_b_;
    Eigen::VectorXd x_;
    std::optional<RationalVector> exact_;
};

/// Expected payoff of every strategy plus the two population means.
struct PayoffProfile {
    Eigen::VectorXd u;     // length n_a + n_b
    double u_bar_a = 0.0;
    double u_bar_b = 0.0;
};

PayoffProfile expected_payoffs(const PayoffBimatrix& game, const StateVector& s);

/// Replicator vector field v_j = x_j (U_j - Ubar of j's population).
Eigen::VectorXd replicator_velocity(const PayoffBimatrix& game, const StateVector& s);

/// Fully mixed rest point, solved from the indifference system (all
/// strategies of a population earn the same payoff, probabilities sum
/// to one). Exact for rational payoffs. Throws NoInteriorEquilibrium
/// when the system is singular or the solution leaves the open simplex.
StateVector interior_rest_point(const PayoffBimatrix& game);

}  // namespace eigencycle
