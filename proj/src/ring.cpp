#include "ulrich/ring.hpp"

#include <algorithm>

namespace ulrich {

AmbientRing::AmbientRing(uint32_t prime, std::vector<std::string> vars, std::vector<int> weights,
                         std::vector<Poly> relations, int dim)
    : field_(prime), vars_(std::move(vars)), weights_(std::move(weights)),
      relations_(std::move(relations)), dim_(dim)
{
    if (vars_.empty())
        throw Error("ring needs at least one variable");
    if (weights_.size() != vars_.size())
        throw Error("weights count must match variable count");
    for (int w : weights_)
        if (w <= 0)
            throw Error("weights must be positive");
    if (dim_ < 0)
        throw Error("dimension must be non-negative");
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw Error("duplicate variable name: " + vars_[i]);
    std::vector<Poly> kept;
    for (auto& f : relations_) {
        if (f.is_zero())
            continue;
        if (f.constant_term() != 0)
            throw Error("ring relation has a unit constant term");
        kept.push_back(f);
    }
    relations_ = std::move(kept);
}

int AmbientRing::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::vector<Vec> AmbientRing::relation_vectors(size_t rank) const
{
    std::vector<Vec> out;
    out.reserve(relations_.size() * rank);
    for (size_t j = 0; j < rank; ++j) {
        for (const auto& f : relations_) {
            Vec v = vec_zero(rank, nvars());
            v.c[j] = f;
            out.push_back(std::move(v));
        }
    }
    return out;
}

RingPtr make_ring(uint32_t prime, std::vector<std::string> vars, std::vector<int> weights,
                  std::vector<Poly> relations, int dim)
{
    return std::make_shared<const AmbientRing>(prime, std::move(vars), std::move(weights),
                                               std::move(relations), dim);
}

RingPtr quotient_ring(const RingPtr& ring, const std::vector<Poly>& extra, int dim)
{
    std::vector<Poly> rels = ring->relations();
    rels.insert(rels.end(), extra.begin(), extra.end());
    return make_ring(ring->prime(), ring->vars(), ring->weights(), std::move(rels), dim);
}

}  // namespace ulrich
