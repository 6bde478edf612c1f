#ifndef BURAU_REDUCTION_HPP
#define BURAU_REDUCTION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "burau/fraction.hpp"

namespace burau {

enum class SingularityKind { interior, puncture, deleted_disk };

/// One singularity of the declared invariant foliations: its prong order
/// and, for boundary items, the number of punctures the item encloses
/// (1 for a bare puncture).
struct SingularityDatum {
    SingularityKind kind = SingularityKind::puncture;
    int order = 1;     // prong count kappa
    int enclosed = 1;  // enclosed puncture count m
};

/// One piece of a declared Thurston decomposition.  `boundary` lists the
/// punctures, deleted-disk boundaries and the outer boundary circle of one
/// connected component; `interior` lists interior singularities.
struct ComponentData {
    int cycle_length = 1;  // connected components permuted cyclically
    int genus = 0;
    bool is_pseudo_anosov = false;
    bool is_max_entropy = false;
    std::vector<SingularityDatum> boundary;
    std::vector<SingularityDatum> interior;
};

/// User-declared reduction data for a braid on `strings` strands.  The
/// decomposition itself is an input, never computed here; only internal
/// consistency is checked.
struct ReductionData {
    int strings = 2;
    std::vector<ComponentData> components;
};

/// gcd of the enclosed-puncture counts over all boundary items.
long enclosed_puncture_gcd(const ComponentData& component);

struct EphCheck {
    bool pass;
    /// (2 - 2g) - sum(1 - kappa/2), exactly zero when the data is consistent.
    double residual;
};

/// Euler-Poincare-Hopf bookkeeping: 2 - 2g must equal the sum of
/// 1 - kappa/2 over all declared singularities of one connected component.
EphCheck euler_poincare_check(const ComponentData& component);

struct Orientability {
    bool orientable;
    /// Largest u with 2^u dividing the enclosure gcd; the foliations lift
    /// orientably to exactly the covers of order a multiple of 2^{u+1}.
    int two_power;
};

/// A pseudo-Anosov component lifts orientably to some cyclic cover iff all
/// interior singularities have even order and each boundary item satisfies
/// m/a = kappa mod 2, where a is the enclosure gcd.
Orientability burau_orientable(const ComponentData& component);

struct SharpPrediction {
    /// Union over qualifying components of the a-th roots of -1, as reduced
    /// fractions (2j+1)/(2a).
    std::set<Fraction> roots;
    /// Smallest reduced denominator in the set: min over components of
    /// 2^{u+1}.  Empty when no component qualifies.
    std::optional<int> minimal_k;
};

/// Components that are pseudo-Anosov, Burau orientable and carry the full
/// entropy contribute their roots; an empty set predicts that no root of
/// unity is sharp.
SharpPrediction predict_sharp_set(const ReductionData& data);

/// Whole-disk pseudo-Anosov classifier: the estimate is sharp at -1 iff all
/// puncture singularities have odd order and all interior ones even order.
/// The collar boundary singularity is excluded by convention.
bool sharp_at_minus_one(const std::vector<int>& puncture_orders,
                        const std::vector<int>& interior_orders);

struct KBoundReport {
    int bound;  // floor(2n/3)
    int predicted_minimal_k;
    bool within_bound;
    bool attains;
};

/// Compares the predicted minimal sharp order with the floor(2n/3) bound.
/// Requires a nonempty prediction.
KBoundReport k_bound_check(const ReductionData& data);

/// Reads the reduction-data JSON file format:
///   {n, components: [{ell, genus, is_pA, is_max_entropy,
///                     boundary: [{m, kappa}], interior: [kappa]}]}
/// Throws std::runtime_error with a description on malformed input or
/// violated structural invariants.
ReductionData load_reduction_file(const std::string& path);
ReductionData reduction_from_json_text(const std::string& text);

}  // namespace burau

#endif
