#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dyck/errors.hpp"

namespace dyck {

// ---------------------------------------------------------------------------
// Step alphabets
// ---------------------------------------------------------------------------

enum class DyckStep : unsigned char { U, D };
enum class SchroederStep : unsigned char { U, D, L }; // L = (2,0)
enum class TStep : unsigned char { H, G, D };         // H = (1,2), G = (2,1)

// ---------------------------------------------------------------------------
// Path types. All values are immutable once constructed and validate their
// defining invariants in the factory functions.
// ---------------------------------------------------------------------------

/// Balanced word over {U, D} whose every prefix has #U >= #D.
class DyckPath {
public:
    DyckPath() = default;

    /// Validates the balance and prefix conditions; throws UnbalancedWord.
    static DyckPath from_steps(std::vector<DyckStep> steps);
    /// Parses one letter per step; throws UnknownLetter / UnbalancedWord.
    static DyckPath parse(std::string_view word);

    const std::vector<DyckStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    /// Height after each step (size = number of steps).
    std::vector<int> heights() const;
    std::string str() const;

    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath&) const = default;

private:
    std::vector<DyckStep> steps_;
};

/// Word over {U, D, L} staying weakly above the axis, L spanning two x-units.
class SchroederPath {
public:
    SchroederPath() = default;
    static SchroederPath from_steps(std::vector<SchroederStep> steps);
    static SchroederPath parse(std::string_view word);

    const std::vector<SchroederStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    /// Half the x-span (the "semilength" of a span-2n path).
    int semilength() const;
    std::vector<int> heights() const;
    std::string str() const;
    /// True if some L step starts at height 0.
    bool has_level_on_axis() const;

    bool operator==(const SchroederPath&) const = default;
    auto operator<=>(const SchroederPath&) const = default;

private:
    std::vector<SchroederStep> steps_;
};

/// Schroeder path with no L step on the axis.
class LittleSchroederPath {
public:
    LittleSchroederPath() = default;
    /// Throws UnbalancedWord if an L step sits on the axis.
    explicit LittleSchroederPath(SchroederPath path);
    static LittleSchroederPath parse(std::string_view word);

    const SchroederPath& path() const { return path_; }
    const std::vector<SchroederStep>& steps() const { return path_.steps(); }
    bool empty() const { return path_.empty(); }
    int semilength() const { return path_.semilength(); }
    std::string str() const { return path_.str(); }

    bool operator==(const LittleSchroederPath&) const = default;
    auto operator<=>(const LittleSchroederPath&) const = default;

private:
    SchroederPath path_;
};

/// Word over {H, G, D} from (0,0) to (3n,0) staying weakly above the axis.
class TPath {
public:
    TPath() = default;
    static TPath from_steps(std::vector<TStep> steps);
    static TPath parse(std::string_view word);

    const std::vector<TStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    /// n for a path ending at (3n, 0).
    int semilength() const;
    std::vector<int> heights() const;
    std::string str() const;

    bool operator==(const TPath&) const = default;
    auto operator<=>(const TPath&) const = default;

private:
    std::vector<TStep> steps_;
};

// ---------------------------------------------------------------------------
// Ascents and pyramid decompositions
// ---------------------------------------------------------------------------

/// Maximal run of consecutive U steps.
struct Ascent {
    std::size_t start = 0; // 0-based step index
    int length = 0;

    bool operator==(const Ascent&) const = default;
};

/// Maximal U-runs of a Dyck path, in order of start index.
std::vector<Ascent> ascents(const DyckPath& path);

/// The unique split P = U^k D P_k D P_{k-1} ... D P_1.
struct PrimaryDecomposition {
    int base_size = 0;            // k, length of the first ascent
    std::vector<DyckPath> parts;  // [P_k, P_{k-1}, ..., P_1]
};

/// Throws EmptyPath for the empty path.
PrimaryDecomposition primary_decompose(const DyckPath& path);

/// Rooted tree of pyramid sizes: a node of size k has exactly k child slots,
/// each holding a further tree or the empty marker (a node of size 0).
class PyramidTree {
public:
    PyramidTree() = default; // empty marker
    PyramidTree(int size, std::vector<PyramidTree> children);

    bool is_empty() const { return size_ == 0; }
    int size() const { return size_; }
    const std::vector<PyramidTree>& children() const { return children_; }

    bool operator==(const PyramidTree&) const = default;

private:
    int size_ = 0;
    std::vector<PyramidTree> children_;
};

/// Repeats the primary decomposition until only pyramids remain. The empty
/// path maps to the empty marker.
PyramidTree complete_decompose(const DyckPath& path);
DyckPath recompose_complete(const PyramidTree& tree);

// ---------------------------------------------------------------------------
// Path families and exhaustive enumeration
// ---------------------------------------------------------------------------

struct PathFamily {
    enum class Kind {
        Dyck,
        BoundedAscent,
        Fibonacci,
        FibonacciFree,
        Schroeder,
        LittleSchroeder,
        TPath,
    };

    Kind kind = Kind::Dyck;
    int bound = 0; // m, for BoundedAscent / Fibonacci

    static PathFamily dyck() { return {Kind::Dyck, 0}; }
    static PathFamily bounded_ascent(int m);
    static PathFamily fibonacci(int m);
    static PathFamily fibonacci_free() { return {Kind::FibonacciFree, 0}; }
    static PathFamily schroeder() { return {Kind::Schroeder, 0}; }
    static PathFamily little_schroeder() { return {Kind::LittleSchroeder, 0}; }
    static PathFamily t_path() { return {Kind::TPath, 0}; }

    /// Tag names used on the CLI: dyck, bounded-ascent, fibonacci,
    /// fibonacci-free, schroeder, little-schroeder, t-path.
    std::string name() const;
    static PathFamily from_name(std::string_view name, std::optional<int> m);

    bool operator==(const PathFamily&) const = default;
};

/// Parses a word in one of the four step alphabets. The Dyck alphabet covers
/// the bounded-ascent and pyramid-concatenation families; use `in_family` to
/// test membership in those.
using ParsedPath = std::variant<DyckPath, SchroederPath, LittleSchroederPath, TPath>;
ParsedPath parse_path(std::string_view word, const PathFamily& family);

/// True iff `path` belongs to the Dyck-alphabet family `family`.
bool in_family(const DyckPath& path, const PathFamily& family);

/// All Dyck paths of semilength n in lexicographic order with U < D.
std::vector<DyckPath> enumerate_dyck(int n);
/// Dyck paths whose every ascent has length <= m.
std::vector<DyckPath> enumerate_bounded_ascent(int n, int m);
/// Concatenations of pyramids of size <= m (m >= n means unbounded).
std::vector<DyckPath> enumerate_fibonacci(int n, int m);
std::vector<DyckPath> enumerate_fibonacci_free(int n);
/// Schroeder paths of span 2n in lexicographic order with U < D < L.
std::vector<SchroederPath> enumerate_schroeder(int n);
std::vector<LittleSchroederPath> enumerate_little_schroeder(int n);
/// T-paths to (3n, 0) in lexicographic order with H < G < D.
std::vector<TPath> enumerate_t_paths(int n);

/// Family dispatcher producing canonical words, used by the CLI and tests.
std::vector<std::string> enumerate_family_words(int n, const PathFamily& family);

// ---------------------------------------------------------------------------
// Pyramid-concatenation (Fibonacci) encodings
// ---------------------------------------------------------------------------

/// For F = pyramid concatenation of semilength k, the bits x_1..x_{k-1} with
/// x_i = 1 iff F touches the axis at x = 2i. Throws NotAFibonacciPath.
std::vector<bool> fibonacci_touch_bits(const DyckPath& path);

/// Inverse of fibonacci_touch_bits for semilength bits.size() + 1.
DyckPath fibonacci_from_bits(const std::vector<bool>& bits);

} // namespace dyck
