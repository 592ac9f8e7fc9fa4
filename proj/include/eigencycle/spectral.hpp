#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "eigencycle/game.hpp"

namespace eigencycle {

struct JacobianMatrix {
    Eigen::MatrixXd j;
    StateVector base_point;
};

enum class JacobianMode { closed_form, finite_difference };

/// Jacobian of the replicator field at p. The closed form uses the analytic
/// partial derivatives (exact rational arithmetic when both the game and the
/// point are rational); finite differences use central differences with
/// h = 1e-5.
JacobianMatrix jacobian_at(const PayoffBimatrix& game, const StateVector& p,
                           JacobianMode mode = JacobianMode::closed_form);

/// One eigenvalue with its canonicalized eigenvector: unit 2-norm, phase
/// rotated so the first component of largest modulus is real-positive.
/// Degenerate partners are distinguished by the multiplicity tag suffix
/// (".4i_1", ".4i_2", ...).
struct EigenPair {
    std::complex<double> lambda;
    Eigen::VectorXcd xi;
    std::string multiplicity_tag;
};

/// Full eigen system, sorted by (Im descending, Re descending). Repeated
/// eigenvalues get a deterministic orthonormal basis built from the
/// projections of the standard basis vectors onto the eigenspace.
std::vector<EigenPair> eigen_decompose(const JacobianMatrix& jac);

/// Index of a 2-D projection subspace; 1-based, m < n.
struct SubspacePair {
    int m = 0, n = 0;
    std::string code() const { return std::to_string(m) + std::to_string(n); }
    bool operator==(const SubspacePair&) const = default;
};

/// All s(s-1)/2 pairs, m ascending then n ascending.
std::vector<SubspacePair> subspace_pairs(int dims);
int pair_index(int dims, int m, int n);
SubspacePair pair_from_code(const std::string& code);

/// Signed areas sigma^(mn) = pi * (Re eta_m Im eta_n - Re eta_n Im eta_m),
/// one per subspace pair, stored in enumeration order.
class EigencycleSet {
public:
    EigencycleSet(int dims, std::vector<double> values, std::string source_tag = "");

    int dims() const { return dims_; }
    const std::vector<double>& values() const { return values_; }
    const std::string& source_tag() const { return source_tag_; }

    // Signed lookup with the antisymmetric extension: at(n,m) == -at(m,n),
    // at(m,m) == 0.
    double at(int m, int n) const;

    EigencycleSet scaled(double f) const;

private:
    int dims_;
    std::vector<double> values_;
    std::string source_tag_;
};

EigencycleSet eigencycle_set(const EigenPair& e);

/// Orthogonal bases for the degenerate pair: alpha = (s2 + s1)/2,
/// beta = (s2 - s1)/2 entrywise.
std::pair<EigencycleSet, EigencycleSet> alpha_beta_bases(const EigencycleSet& s1,
                                                         const EigencycleSet& s2);

/// Expansion coefficients of a deviation in the eigenbasis.
struct ModalCoefficients {
    Eigen::VectorXcd c;
};

/// Least-squares expansion of `deviation` over the given eigenvectors.
/// Throws ResidualTooLarge when the reconstruction misses by more than
/// 1e-9 (relative to the deviation norm).
ModalCoefficients modal_decompose(const std::vector<EigenPair>& eigs,
                                  const Eigen::VectorXd& deviation);

/// Best fit of `computed` to `reference` by one positive scale and one
/// global sign: minimizes ||sign*scale*computed - reference||.
struct ScaleSignFit {
    double scale = 1.0;
    int sign = 1;
    double max_abs_err = 0.0;
};
ScaleSignFit fit_scale_sign(const std::vector<double>& computed,
                            const std::vector<double>& reference);

/// Rotates an orthonormal eigenspace basis onto a target basis: each target
/// vector is projected into the spanned eigenspace, then the projections are
/// Gram-Schmidt orthonormalized in order.
std::vector<Eigen::VectorXcd> align_degenerate_basis(
    const std::vector<Eigen::VectorXcd>& computed,
    const std::vector<Eigen::VectorXcd>& target);

/// Hermitian projector sum_k u_k u_k^H of an orthonormal basis.
Eigen::MatrixXcd spectral_projector(const std::vector<Eigen::VectorXcd>& basis);

/// Entrywise sum of the eigencycle sets of an orthonormal degenerate basis,
/// computed basis-free from the spectral projector: pi * Im(P_nm).
EigencycleSet projector_eigencycle_sum(const Eigen::MatrixXcd& projector);

}  // namespace eigencycle
