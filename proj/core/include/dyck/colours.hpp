#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dyck/enumeration.hpp"
#include "dyck/errors.hpp"
#include "dyck/paths.hpp"

namespace dyck {

/// A colour is itself a path; Dyck-alphabet systems colour with Dyck paths,
/// the Schroeder system with Schroeder paths. Identity is structural.
using Colour = std::variant<DyckPath, SchroederPath>;

std::string colour_str(const Colour& colour);
/// Semilength of the colour path (= the ascent length it may colour).
int colour_size(const Colour& colour);

/// A family of colour sets indexed by ascent length. Structural systems can
/// enumerate their colours; `custom` only carries the counts a_k.
class ColourSystem {
public:
    enum class Kind {
        Catalan,       // colours_of(k) = Dyck paths of semilength k
        BoundedAscent, // Dyck paths with ascents <= m
        Fibonacci,     // pyramid concatenations with sizes <= m
        FibonacciFree, // pyramid concatenations, unbounded
        Schroeder,     // Schroeder paths of span 2k
        Trivial,       // the single colour (UD)^k
        Custom,        // counts only
    };

    static ColourSystem catalan() { return ColourSystem(Kind::Catalan, 0); }
    static ColourSystem bounded_ascent(int m);
    static ColourSystem fibonacci(int m);
    static ColourSystem fibonacci_free() { return ColourSystem(Kind::FibonacciFree, 0); }
    static ColourSystem schroeder() { return ColourSystem(Kind::Schroeder, 0); }
    static ColourSystem trivial() { return ColourSystem(Kind::Trivial, 0); }
    /// Weights a_0, a_1, ...; positions beyond the list repeat the last
    /// value, so e.g. (1,1,1) denotes the all-ones sequence.
    static ColourSystem custom(std::vector<Integer> weights);

    Kind kind() const { return kind_; }
    int bound() const { return bound_; }
    bool structural() const { return kind_ != Kind::Custom; }

    /// All colours for a k-ascent; throws CountOnlySystem for `custom`.
    std::vector<Colour> colours_of(int k) const;
    /// |L_k|, available for every system.
    Integer colour_count(int k) const;
    /// Membership test for a single colour.
    bool contains(int k, const Colour& colour) const;
    /// The counts a_0..a_n, the weight input of the master equation.
    std::vector<Integer> weight_sequence(int n) const;

    /// Tag names used on the CLI: catalan, bounded-ascent, fibonacci,
    /// fibonacci-free, schroeder, trivial, custom.
    std::string name() const;

    bool operator==(const ColourSystem&) const = default;

private:
    ColourSystem(Kind kind, int bound) : kind_(kind), bound_(bound) {}

    Kind kind_;
    int bound_;
    std::vector<Integer> weights_;
};

/// A Dyck path together with one colour per ascent, in ascent order.
struct ColouredDyckPath {
    DyckPath base;
    std::vector<Colour> colours;

    bool operator==(const ColouredDyckPath&) const = default;
};

/// Text form "base;c1,c2,..." (no ';' for the colourless empty path).
std::string str(const ColouredDyckPath& path);

/// Parses the text form, validating each colour against `system`. Throws
/// WrongColourSystem on arity or membership mismatches.
ColouredDyckPath parse_coloured(std::string_view text, const ColourSystem& system);

/// Throws WrongColourSystem unless every colour lies in the system's set for
/// its ascent length.
void validate_coloured(const ColouredDyckPath& path, const ColourSystem& system);

/// All coloured paths of semilength n: base paths in lexicographic order,
/// colour tuples odometer-style with the leftmost ascent most significant.
std::vector<ColouredDyckPath> enumerate_coloured(int n, const ColourSystem& system);

/// Sum over Dyck paths of the product of per-ascent colour counts. Works for
/// every system, including `custom`; this is the enumeration oracle.
Integer count_coloured_bruteforce(int n, const ColourSystem& system);

/// The primary decomposition of a coloured path: the base ascent keeps its
/// colour, each appended part keeps the colours of its own ascents.
struct ColouredDecomposition {
    int base_size = 0;
    Colour base_colour;
    std::vector<ColouredDyckPath> parts; // [P_k, ..., P_1]
};

ColouredDecomposition primary_decompose(const ColouredDyckPath& path);
ColouredDyckPath recombine(int base_size, Colour base_colour,
                           const std::vector<ColouredDyckPath>& parts);

} // namespace dyck
