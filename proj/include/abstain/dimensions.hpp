#pragma once

#include <cstdint>
#include <optional>

#include "abstain/dim_cache.hpp"
#include "abstain/dim_value.hpp"
#include "abstain/hypothesis.hpp"

namespace abstain {

// sum_{i=0}^{min(k,t)} C(t,i); throws std::overflow_error past 64 bits.
std::uint64_t binom_leq(std::uint64_t t, std::uint64_t k);

DimValue ldim(const VersionSpace& v, DimCache& cache);
DimValue ldim(const HypothesisClass& h);

DimValue eldim(const VersionSpace& v, int k, DimCache& cache);
DimValue eldim(const HypothesisClass& h, int k);

// Alternative form of the recurrence, kept separate from eldim as a cross-check. Needs k >= 1.
DimValue eldim_alg_form(const VersionSpace& v, int k, DimCache& cache);
DimValue eldim_alg_form(const HypothesisClass& h, int k);

// The recurrence's maximizing choice for (v,k): query point and the label on the dashed side.
// Ties go to the lowest point index, then dashed label +1. Empty when dis(v) is empty.
struct EldimChoice {
    std::size_t point;
    Label dashed;
    DimValue value;  // eldim(v,k)
};
std::optional<EldimChoice> eldim_argmax(const VersionSpace& v, int k, DimCache& cache);

// max{t : binom_leq(t,k+1) <= |h|}; needs a nonempty class.
int eldim_upper_finite(const HypothesisClass& h, int k);
// Largest t <= t_max with binom_leq(t,k+1) <= shatter(h,t). -inf for the empty class.
// Throws std::range_error when t_max is reached before the bound is certain.
DimValue eldim_upper_growth(const HypothesisClass& h, int k, std::optional<int> t_max = std::nullopt);

double bound_finiteub(std::uint64_t h_size, int k, int l);
double bound_infiniteub(int d, int k, int l);

std::uint64_t shatter_recursive(const VersionSpace& v, int t, DimCache& cache);
std::uint64_t shatter_recursive(const HypothesisClass& h, int t);

// Complete depth-t tree of points in breadth-first order (root first, children of node i at 2i+1, 2i+2).
using PointTree = std::vector<std::size_t>;
// Number of sign paths of the tree realized by members of h.
std::uint64_t shatter_paths(const HypothesisClass& h, const PointTree& tree);
// Maximum of shatter_paths over all D^(2^t - 1) trees; refuses beyond 2e5 trees.
std::uint64_t shatter_enumerative(const HypothesisClass& h, int t);

int egg_drop(int n, int k);

}  // namespace abstain
