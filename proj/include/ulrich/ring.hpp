#ifndef ULRICH_RING_HPP
#define ULRICH_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ulrich/poly.hpp"

namespace ulrich {

struct StdBasis;

/// The ambient local ring R = K[x1..xn]_(x1..xn)/(f1..fs) with a weighted
/// local monomial order. Immutable after construction.
class AmbientRing {
public:
    AmbientRing(uint32_t prime, std::vector<std::string> vars, std::vector<int> weights,
                std::vector<Poly> relations, int dim);

    const PrimeField& field() const { return field_; }
    uint32_t prime() const { return field_.prime(); }
    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Poly>& relations() const { return relations_; }
    int dim() const { return dim_; }

    int var_index(const std::string& name) const;  // -1 if unknown

    /// Relation generators f_i * e_j lifted into R^rank.
    std::vector<Vec> relation_vectors(size_t rank) const;

    // per-rank cache of standard bases of the pure relation module, managed
    // by std_basis.cpp
    mutable std::map<size_t, std::shared_ptr<const StdBasis>> relation_basis_cache;

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::vector<Poly> relations_;
    int dim_;
};

using RingPtr = std::shared_ptr<const AmbientRing>;

RingPtr make_ring(uint32_t prime, std::vector<std::string> vars, std::vector<int> weights,
                  std::vector<Poly> relations, int dim);

/// R/(extra) with the declared dimension; same variables, order and field.
RingPtr quotient_ring(const RingPtr& ring, const std::vector<Poly>& extra, int dim);

}  // namespace ulrich

#endif
