#pragma once

#include "softcat/morphism.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace softcat
{

/// All soft morphisms source -> target, in lexicographic order of their
/// value tuples (first source parameter most significant, target parameters
/// compared by declared position). Throws universe_mismatch.
[[nodiscard]] std::vector< soft_morphism > enumerate_hom( const soft_set& source,
                                                          const soft_set& target );

/// |hom(source, target)| without materializing the morphisms. The soft
/// condition is checked per parameter, so the count factors as a product of
/// per-parameter admissible-target counts.
[[nodiscard]] std::uint64_t hom_count( const soft_set& source, const soft_set& target );

/// Every soft set with canonical params p1..pk, k = 0..max_params, over a
/// fixed universe: Σ (2^|U|)^k members, ordered by k and then
/// lexicographically over image tuples (subsets ordered by their encoding).
class object_family
{
    std::shared_ptr< const universe > _universe;
    std::size_t _max_params = 0;
    std::vector< soft_set > _members;

public:
    object_family( std::shared_ptr< const universe > over, std::size_t max_params,
                   std::vector< soft_set > members )
        : _universe{ std::move( over ) }, _max_params{ max_params }, _members{ std::move( members ) } {}

    [[nodiscard]] const universe& over() const { return *_universe; }
    [[nodiscard]] const std::shared_ptr< const universe >& universe_ptr() const { return _universe; }
    [[nodiscard]] std::size_t max_params() const { return _max_params; }
    [[nodiscard]] const std::vector< soft_set >& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }

    [[nodiscard]] auto begin() const { return _members.begin(); }
    [[nodiscard]] auto end() const { return _members.end(); }
};

/// s lives over the family's universe.
[[nodiscard]] bool lives_over( const soft_set& s, const object_family& family );

/// Σ_{k=0..max_params} (2^|U|)^k; throws std::length_error on overflow.
[[nodiscard]] std::uint64_t family_size( std::size_t universe_size, std::size_t max_params );

/// Members are named s0, s1, ... in family order.
[[nodiscard]] object_family generate_object_family( std::shared_ptr< const universe > over,
                                                    std::size_t max_params );

} // namespace softcat
