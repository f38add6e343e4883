#pragma once

#include "softcat/universe.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace softcat
{

/// A soft set F_A over a universe U: an ordered parameter set A and a total
/// map F: A -> P(U). Immutable; copies share the underlying data.
class soft_set
{
    struct data
    {
        std::string name;
        std::shared_ptr< const universe > over;
        std::vector< std::string > params;
        std::vector< subset > images;
    };

    std::shared_ptr< const data > _data;

public:
    /// Validates distinct parameter names and that every image lives in U.
    soft_set( std::shared_ptr< const universe > over, std::string name,
              std::vector< std::pair< std::string, subset > > assignments );

    [[nodiscard]] const std::string& name() const { return _data->name; }
    [[nodiscard]] const universe& over() const { return *_data->over; }
    [[nodiscard]] const std::shared_ptr< const universe >& universe_ptr() const
    {
        return _data->over;
    }

    [[nodiscard]] std::size_t size() const { return _data->params.size(); }
    [[nodiscard]] bool empty() const { return _data->params.empty(); }
    [[nodiscard]] const std::vector< std::string >& params() const { return _data->params; }
    [[nodiscard]] const std::vector< subset >& images() const { return _data->images; }
    [[nodiscard]] subset image( std::size_t param ) const { return _data->images[ param ]; }
    [[nodiscard]] std::optional< std::size_t > param_index( const std::string& param ) const;

    /// Same content under a different name.
    [[nodiscard]] soft_set renamed( std::string name ) const;

    /// Name, universe, params (in order) and mapping all agree.
    friend bool operator==( const soft_set& lhs, const soft_set& rhs );
};

using assignment_list = std::vector< std::pair< std::string, subset > >;

[[nodiscard]] soft_set make_soft_set( std::shared_ptr< const universe > over, std::string name,
                                      assignment_list assignments );

/// Builds images from element names; unknown names raise element_not_in_universe.
[[nodiscard]] soft_set
make_soft_set( std::shared_ptr< const universe > over, std::string name,
               const std::vector< std::pair< std::string, std::vector< std::string > > >& assignments );

/// Every image is empty (vacuously true for A = ∅).
[[nodiscard]] bool is_null( const soft_set& s );
/// Every image is the whole universe (vacuously true for A = ∅).
[[nodiscard]] bool is_absolute( const soft_set& s );

[[nodiscard]] bool same_universe( const soft_set& lhs, const soft_set& rhs );

} // namespace softcat
