#include "eigencycle/game.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace eigencycle {

using nlohmann::json;

RationalVector solve_rational(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) throw DimensionError("solve_rational: bad system shape");
    for (const auto& row : a)
        if (row.size() != n) throw DimensionError("solve_rational: matrix not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) throw SingularDesign("solve_rational: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rational(0)) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

namespace {

Eigen::MatrixXd to_matrix(const RationalMatrix& m) {
    Eigen::MatrixXd out(m.size(), m.empty() ? 0 : m[0].size());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = to_double(m[i][j]);
    return out;
}

bool is_zero_sum(const RationalMatrix& a, const RationalMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (b[j][i] != -a[i][j]) return false;
    return true;
}

Rational rational_from_number(double v) {
    // Inputs are integer or short-decimal payoffs; reconstruct the decimal.
    for (std::int64_t den = 1; den <= 1000000000; den *= 10) {
        const double scaled = v * static_cast<double>(den);
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) < 1e-9 * std::max(1.0, std::abs(scaled)))
            return Rational(static_cast<std::int64_t>(rounded), den);
    }
    throw Error("payoff entry is not a short decimal: " + std::to_string(v));
}

RationalMatrix matrix_from_json(const json& arr, int rows, int cols, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != rows * cols)
        throw DimensionError(std::string(what) + ": expected row-major array of " +
                             std::to_string(rows * cols) + " entries");
    RationalMatrix m(rows, RationalVector(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const json& v = arr[static_cast<std::size_t>(i) * cols + j];
            if (v.is_number_integer())
                m[i][j] = Rational(v.get<std::int64_t>());
            else
                m[i][j] = rational_from_number(v.get<double>());
        }
    return m;
}

}  // namespace

PayoffBimatrix::PayoffBimatrix(RationalMatrix a_payoff, RationalMatrix b_payoff,
                               std::vector<std::string> a_labels,
                               std::vector<std::string> b_labels)
    : a_(std::move(a_payoff)), b_(std::move(b_payoff)),
      a_labels_(std::move(a_labels)), b_labels_(std::move(b_labels)) {
    n_a_ = static_cast<int>(a_.size());
    n_b_ = n_a_ > 0 ? static_cast<int>(a_[0].size()) : 0;
    if (n_a_ == 0 || n_b_ == 0) throw DimensionError("empty payoff matrix");
    for (const auto& row : a_)
        if (static_cast<int>(row.size()) != n_b_) throw DimensionError("ragged a_payoff");
    if (static_cast<int>(b_.size()) != n_b_) throw DimensionError("b_payoff must be n_b x n_a");
    for (const auto& row : b_)
        if (static_cast<int>(row.size()) != n_a_) throw DimensionError("b_payoff must be n_b x n_a");
    zero_sum_ = is_zero_sum(a_, b_);
    a_d_ = to_matrix(a_);
    b_d_ = to_matrix(b_);
    if (a_labels_.empty())
        for (int i = 1; i <= n_a_; ++i) a_labels_.push_back("A" + std::to_string(i));
    if (b_labels_.empty())
        for (int j = 1; j <= n_b_; ++j) b_labels_.push_back("B" + std::to_string(j));
}

PayoffBimatrix PayoffBimatrix::zero_sum(RationalMatrix a_payoff,
                                        std::vector<std::string> a_labels,
                                        std::vector<std::string> b_labels) {
    const int na = static_cast<int>(a_payoff.size());
    const int nb = na > 0 ? static_cast<int>(a_payoff[0].size()) : 0;
    RationalMatrix b(nb, RationalVector(na));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) b[j][i] = -a_payoff[i][j];
    return PayoffBimatrix(std::move(a_payoff), std::move(b), std::move(a_labels),
                          std::move(b_labels));
}

PayoffBimatrix PayoffBimatrix::from_json_text(const std::string& text) {
    json j = json::parse(text);
    const int na = j.at("n_a").get<int>();
    const int nb = j.at("n_b").get<int>();
    RationalMatrix a = matrix_from_json(j.at("a_payoff"), na, nb, "a_payoff");
    std::vector<std::string> la, lb;
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (l.contains("a")) la = l["a"].get<std::vector<std::string>>();
        if (l.contains("b")) lb = l["b"].get<std::vector<std::string>>();
    }
    if (j.contains("b_payoff")) {
        RationalMatrix b = matrix_from_json(j["b_payoff"], nb, na, "b_payoff");
        return PayoffBimatrix(std::move(a), std::move(b), std::move(la), std::move(lb));
    }
    return zero_sum(std::move(a), std::move(la), std::move(lb));
}

PayoffBimatrix PayoffBimatrix::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open game file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string PayoffBimatrix::to_json_text() const {
    json j;
    j["n_a"] = n_a_;
    j["n_b"] = n_b_;
    auto flat = [](const RationalMatrix& m) {
        json arr = json::array();
        for (const auto& row : m)
            for (const auto& v : row) {
                if (v.denominator() == 1)
                    arr.push_back(v.numerator());
                else
                    arr.push_back(to_double(v));
            }
        return arr;
    };
    j["a_payoff"] = flat(a_);
    if (!zero_sum_) j["b_payoff"] = flat(b_);
    j["labels"] = {{"a", a_labels_}, {"b", b_labels_}};
    return j.dump(2) + "\n";
}

StateVector::StateVector(int n_a, int n_b, Eigen::VectorXd x)
    : n_a_(n_a), n_b_(n_b), x_(std::move(x)) {
    validate();
}

StateVector::StateVector(int n_a, int n_b, RationalVector x_exact)
    : n_a_(n_a), n_b_(n_b) {
    x_.resize(static_cast<Eigen::Index>(x_exact.size()));
    for (Eigen::Index i = 0; i < x_.size(); ++i) x_[i] = to_double(x_exact[i]);
    exact_ = std::move(x_exact);
    validate();
}

void StateVector::validate() const {
    if (x_.size() != n_a_ + n_b_)
        throw DimensionError("state vector length must be n_a + n_b");
    for (Eigen::Index i = 0; i < x_.size(); ++i)
        if (!(x_[i] >= 0.0))
            throw Error("state component " + std::to_string(i + 1) + " is negative");
    const double sa = x_.head(n_a_).sum();
    const double sb = x_.tail(n_b_).sum();
    if (std::abs(sa - 1.0) > 1e-12 || std::abs(sb - 1.0) > 1e-12)
        throw Error("population probabilities must each sum to 1");
}

StateVector StateVector::clamped(int n_a, int n_b, Eigen::VectorXd x) {
    if (x.size() != n_a + n_b) throw DimensionError("state vector length must be n_a + n_b");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0) {
            if (x[i] < -1e-9)
                throw Error("state component " + std::to_string(i + 1) +
                            " too negative to clamp: " + std::to_string(x[i]));
            x[i] = 0.0;
        }
    }
    const double sa = x.head(n_a).sum();
    const double sb = x.tail(n_b).sum();
    if (std::abs(sa - 1.0) > 1e-6 || std::abs(sb - 1.0) > 1e-6)
        throw Error("population sums drifted too far to renormalize");
    x.head(n_a) /= sa;
    x.tail(n_b) /= sb;
    return StateVector(n_a, n_b, std::move(x));
}

namespace {

void check_dims(const PayoffBimatrix& game, const StateVector& s) {
    if (s.n_a() != game.n_a() || s.n_b() != game.n_b())
        throw DimensionError("state dimensions do not match the game");
}

}  // namespace

PayoffProfile expected_payoffs(const PayoffBimatrix& game, const StateVector& s) {
    check_dims(game, s);
    const int na = game.n_a(), nb = game.n_b();
    const Eigen::VectorXd x = s.x().head(na);
    const Eigen::VectorXd y = s.x().tail(nb);
    PayoffProfile p;
    p.u.resize(na + nb);
    p.u.head(na) = game.a_matrix() * y;
    p.u.tail(nb) = game.b_matrix() * x;
    p.u_bar_a = x.dot(p.u.head(na));
    p.u_bar_b = y.dot(p.u.tail(nb));
    return p;
}

Eigen::VectorXd replicator_velocity(const PayoffBimatrix& game, const StateVector& s) {
    const PayoffProfile p = expected_payoffs(game, s);
    const int na = game.n_a(), nb = game.n_b();
    Eigen::VectorXd v(na + nb);
    for (int i = 0; i < na; ++i) v[i] = s[i] * (p.u[i] - p.u_bar_a);
    for (int j = 0; j < nb; ++j) v[na + j] = s[na + j] * (p.u[na + j] - p.u_bar_b);
    return v;
}

StateVector interior_rest_point(const PayoffBimatrix& game) {
    const int na = game.n_a(), nb = game.n_b();
    if (na != nb)
        throw NoInteriorEquilibrium("interior rest point needs equal strategy counts");

    // Opponent mix that makes every own strategy indifferent:
    // rows (payoff row i) - (payoff row 1), plus the simplex constraint.
    auto indifference_solve = [](const RationalMatrix& payoff, int n) {
        RationalMatrix sys(n, RationalVector(n, Rational(0)));
        RationalVector rhs(n, Rational(0));
        for (int i = 1; i < n; ++i)
            for (int c = 0; c < n; ++c) sys[i - 1][c] = payoff[i][c] - payoff[0][c];
        for (int c = 0; c < n; ++c) sys[n - 1][c] = Rational(1);
        rhs[n - 1] = Rational(1);
        return solve_rational(std::move(sys), std::move(rhs));
    };

    RationalVector y, x;
    try {
        y = indifference_solve(game.a_payoff(), na);  // B's mix from A's indifference
        x = indifference_solve(game.b_payoff(), nb);  // A's mix from B's indifference
    } catch (const SingularDesign&) {
        throw NoInteriorEquilibrium("indifference system is singular");
    }

    RationalVector full;
    full.reserve(static_cast<std::size_t>(na + nb));
    for (const auto& v : x) full.push_back(v);
    for (const auto& v : y) full.push_back(v);
    for (const auto& v : full)
        if (v <= Rational(0))
            throw NoInteriorEquilibrium("indifference solution leaves the open simplex");

    StateVector rest(na, nb, std::move(full));
    const double vnorm = replicator_velocity(game, rest).norm();
    if (vnorm > 1e-10)
        throw NoInteriorEquilibrium("candidate rest point has nonzero velocity");
    return rest;
}

}  // namespace eigencycle
