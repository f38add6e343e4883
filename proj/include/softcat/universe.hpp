#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace softcat
{

/// A subset of a universe, encoded against the universe's element order:
/// element i is a member iff bit i is set.
class subset
{
    std::uint64_t _bits = 0;

public:
    constexpr subset() = default;
    constexpr explicit subset( std::uint64_t bits ) : _bits{ bits } {}

    [[nodiscard]] constexpr std::uint64_t bits() const { return _bits; }
    [[nodiscard]] constexpr bool empty() const { return _bits == 0; }
    [[nodiscard]] constexpr std::size_t size() const
    {
        return static_cast< std::size_t >( std::popcount( _bits ) );
    }
    [[nodiscard]] constexpr bool contains( std::size_t index ) const
    {
        return index < 64 && ( ( _bits >> index ) & 1U ) != 0;
    }
    [[nodiscard]] constexpr bool is_subset_of( subset other ) const
    {
        return ( _bits & ~other._bits ) == 0;
    }

    constexpr subset& insert( std::size_t index )
    {
        _bits |= std::uint64_t{ 1 } << index;
        return *this;
    }

    friend constexpr bool operator==( subset, subset ) = default;
};

/// The fixed finite ground set all soft sets live over. Element order is
/// fixed at construction and drives subset encoding and printing.
class universe
{
    std::vector< std::string > _elements;

public:
    static constexpr std::size_t max_size = 64;

    universe() = default;
    explicit universe( std::vector< std::string > elements );

    [[nodiscard]] std::size_t size() const { return _elements.size(); }
    [[nodiscard]] const std::vector< std::string >& elements() const { return _elements; }
    [[nodiscard]] std::optional< std::size_t > index_of( const std::string& element ) const;

    [[nodiscard]] subset full() const;
    [[nodiscard]] bool owns( subset s ) const { return s.is_subset_of( full() ); }

    /// Throws element_not_in_universe for an unknown name.
    [[nodiscard]] subset subset_of( std::span< const std::string > names ) const;
    [[nodiscard]] std::vector< std::string > names_of( subset s ) const;

    friend bool operator==( const universe&, const universe& ) = default;
};

} // namespace softcat
