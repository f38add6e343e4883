#pragma once

#include "softcat/hom.hpp"

namespace softcat
{

struct morphism_classification
{
    soft_morphism subject;
    bool is_epi = false;
    bool is_mono = false;
    bool is_bimorphism = false;
    bool is_iso = false;
};

/// A pair of distinct parallel morphisms that a non-epi (resp. non-mono)
/// subject fails to cancel, together with the auxiliary object they live on.
struct cancellation_counterexample
{
    soft_morphism left;
    soft_morphism right;
    soft_set auxiliary;
};

// The epi/mono decisions read only the parameter map.

/// Parameter map is surjective.
[[nodiscard]] bool is_epi( const soft_morphism& m );
/// Parameter map is injective.
[[nodiscard]] bool is_mono( const soft_morphism& m );
[[nodiscard]] bool is_bimorphism( const soft_morphism& m );
/// Bijective and F(a) = G(α(a)) for every a.
[[nodiscard]] bool is_iso( const soft_morphism& m );

[[nodiscard]] morphism_classification classify_morphism( const soft_morphism& m );

/// Two-sided inverse of an isomorphism. Throws not_an_isomorphism naming
/// whether bijectivity or image equality failed (and where).
[[nodiscard]] soft_morphism invert( const soft_morphism& m );

/// For non-surjective m: G -> H with H absolute over {"0", "1"}; left is
/// constant "0", right sends the image of m to "0" and everything else to
/// "1". Throws already_epi.
[[nodiscard]] cancellation_counterexample epi_counterexample( const soft_morphism& m );

/// For non-injective m: H null over {"c"} -> F; left picks a1, right a2 for
/// the first colliding pair in declared order. Throws already_mono.
[[nodiscard]] cancellation_counterexample mono_counterexample( const soft_morphism& m );

/// Constant map sep -> F_A at the first parameter where alpha and beta
/// differ. Throws not_a_separator, morphisms_equal, incompatible_pair,
/// universe_mismatch.
[[nodiscard]] soft_morphism separator_witness( const soft_set& sep, const soft_morphism& alpha,
                                               const soft_morphism& beta );

/// G_B -> cosep sending alpha(a1) to c1 and every other parameter to c2,
/// where a1 is the first parameter where the maps differ and (c1, c2) is the
/// first full-universe pair. Throws not_a_coseparator, morphisms_equal,
/// incompatible_pair, universe_mismatch.
[[nodiscard]] soft_morphism coseparator_witness( const soft_set& cosep,
                                                 const soft_morphism& alpha,
                                                 const soft_morphism& beta );

/// Right cancellability against every hom(m.target(), H), H in the family.
[[nodiscard]] bool oracle_is_epi( const soft_morphism& m, const object_family& family );
/// Left cancellability against every hom(H, m.source()), H in the family.
[[nodiscard]] bool oracle_is_mono( const soft_morphism& m, const object_family& family );

} // namespace softcat
