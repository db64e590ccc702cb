#ifndef ULRICH_MODULE_HPP
#define ULRICH_MODULE_HPP

#include <optional>

#include "ulrich/ideal.hpp"

namespace ulrich {

/// Rectangular matrix over R, stored row-major.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<Poly> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    Poly& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Poly& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

Mat mat_transpose(const Mat& m);
Vec mat_col(const Mat& m, size_t c);
std::vector<Vec> mat_cols(const Mat& m);
std::vector<Vec> mat_rows_as_vecs(const Mat& m);
Mat mat_from_cols(size_t rows, const std::vector<Vec>& cols);
Mat mat_mul(const PrimeField& F, const Mat& a, const Mat& b);

/// Finite R-module represented as a subquotient of a free module:
/// M = (<gens> + <rels>) / <rels> inside R^ambient, with the ring relations
/// always implied. Covers both column-span submodules (rels empty) and
/// cokernel presentations (gens = unit vectors, rels = matrix columns).
struct MinimalPresentation {
    std::vector<Vec> minGens;  // minimal generating set, in the ambient module
    Mat matrix;                // nu x s matrix of minimal relations (columns)
};

struct ModuleData {
    RingPtr ring;
    size_t ambient = 0;
    std::vector<Vec> gens;
    std::vector<Vec> rels;
    mutable std::shared_ptr<const MinimalPresentation> presCache;
};

ModuleData submodule_module(const RingPtr& ring, size_t ambient, std::vector<Vec> gens);
ModuleData presentation_module(const RingPtr& ring, const Mat& relations);
ModuleData free_module(const RingPtr& ring, size_t rank);
ModuleData ring_as_module(const RingPtr& ring);
ModuleData quotient_ring_module(const RingPtr& ring, const IdealData& I);  // R/I
/// Reinterprets the same data over another ring with the same variables.
/// Only sound for presentation-shaped modules (generators = unit vectors);
/// submodule data must go through quotient_by_ideal_over instead.
ModuleData over_ring(const ModuleData& M, const RingPtr& ring2);

bool is_zero_module(const ModuleData& M);
long long module_nu(const ModuleData& M);
std::optional<long long> module_length(const ModuleData& M);

const MinimalPresentation& minimal_presentation(const ModuleData& M);

struct FreeResolution {
    std::vector<Mat> matrices;               // d_1, d_2, ..., d_k (minimal)
    std::vector<long long> betti;            // beta_0 .. beta_k
    std::optional<std::pair<int, int>> periodic;  // (start, period), 1-based steps
};

FreeResolution resolve(const ModuleData& M, int steps);
ModuleData syzygy_module(const ModuleData& M, int k);

ModuleData transpose_module(const ModuleData& M);
ModuleData dual_module(const ModuleData& M);
ModuleData hom_module(const ModuleData& M, const ModuleData& N);
ModuleData ext_module(const ModuleData& M, const ModuleData& N, int i);
ModuleData tor_module(const ModuleData& M, const ModuleData& N, int j);

ModuleData quotient_by_ideal(const ModuleData& M, const IdealData& J);
ModuleData mult_by_ideal(const IdealData& J, const ModuleData& M);  // J*M
/// M/JM as a module over R/J.
ModuleData quotient_by_ideal_over(const ModuleData& M, const IdealData& J, const RingPtr& RmodJ);

/// Equality of (<gens>+<rels>)-spans; both sides must live in the same
/// ambient with the same relation list.
bool same_subquotient(const ModuleData& A, const ModuleData& B);

bool is_regular_sequence_on(const ModuleData& M, const std::vector<Poly>& elems);
bool is_maximal_cohen_macaulay(const ModuleData& M, const std::vector<Poly>& Qgens);

/// l(N) = nu(N) * l(A) over the Artinian ring A = N.ring.
bool is_free_over_artinian(const ModuleData& N);

IdealData trace_ideal(const ModuleData& M);
IdealData annihilator(const ModuleData& M);

struct LinkageReport {
    bool stable = false;
    bool traceIdealInMaximal = false;
    bool ext1TrVanishes = false;
    bool horizontallyLinked = false;
    ModuleData lambda;
};

LinkageReport linkage(const ModuleData& M);
ModuleData lambda_module(const ModuleData& M);  // Omega Tr M

/// Generators of {v in R^a : matrix-cols(v) lands in <S>}; cols live in R^b.
std::vector<Vec> preimage_submodule(const AmbientRing& R, size_t a,
                                    const std::vector<Vec>& imagesOfUnits, size_t b,
                                    const std::vector<Vec>& S);

Mat normalized_presentation(const AmbientRing& R, const Mat& m);
/// Matrix equality up to row permutation, column permutation and scalar
/// column scaling (after monic normalization).
bool presentations_equivalent(const AmbientRing& R, const Mat& A, const Mat& B);

}  // namespace ulrich

#endif
