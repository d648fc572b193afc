#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dyck/errors.hpp"
#include "dyck/paths.hpp"

namespace dyck {

/// Outcome of a structure validation: either ok, or the first violated
/// invariant together with a witness.
class ValidationResult {
public:
    static ValidationResult valid() { return ValidationResult(true, ""); }
    static ValidationResult fail(std::string message) {
        return ValidationResult(false, std::move(message));
    }

    bool ok() const { return ok_; }
    explicit operator bool() const { return ok_; }
    const std::string& message() const { return message_; }

private:
    ValidationResult(bool ok, std::string message) : ok_(ok), message_(std::move(message)) {}

    bool ok_;
    std::string message_;
};

// ---------------------------------------------------------------------------
// Non-crossing trees
// ---------------------------------------------------------------------------

/// Labelled tree on circle points 1..n (clockwise, 1 at the top) whose chords
/// do not cross. Edges are stored as (a, b) with a < b, sorted.
class NCTree {
public:
    NCTree() : vertex_count_(1) {}
    NCTree(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Tree + non-crossing invariants.
    ValidationResult validate() const;
    /// validate() plus in-degree exactly one for every vertex != 1, where the
    /// in-edges of v are the edges (a, v) with a < v.
    ValidationResult validate_nco() const;

    /// Canonical form {"n":...,"edges":[[a,b],...]} with sorted edges.
    std::string to_json() const;
    static NCTree from_json(std::string_view text);

    bool operator==(const NCTree&) const = default;
    auto operator<=>(const NCTree&) const = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// An NCTree in which every vertex other than 1 has exactly one in-edge.
/// Construction validates, so instances are valid by type.
class NCOTree {
public:
    explicit NCOTree(NCTree tree);

    const NCTree& tree() const { return tree_; }
    int vertex_count() const { return tree_.vertex_count(); }
    const std::vector<std::pair<int, int>>& edges() const { return tree_.edges(); }
    std::string to_json() const { return tree_.to_json(); }

    bool operator==(const NCOTree&) const = default;
    auto operator<=>(const NCOTree&) const = default;

private:
    NCTree tree_;
};

// ---------------------------------------------------------------------------
// Non-crossing partitions
// ---------------------------------------------------------------------------

/// Set partition of circle points 1..n whose blocks do not interleave: there
/// is no a < b < c < d with a, c in one block and b, d in another. Blocks are
/// stored sorted, ordered by their minima.
class NonCrossingPartition {
public:
    NonCrossingPartition() : points_(0) {}
    NonCrossingPartition(int points, std::vector<std::vector<int>> blocks);

    int points() const { return points_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    ValidationResult validate() const;

    /// Canonical form {"blocks":[[...],...]}.
    std::string to_json() const;
    /// The point count is inferred from the largest element.
    static NonCrossingPartition from_json(std::string_view text);

    bool operator==(const NonCrossingPartition&) const = default;
    auto operator<=>(const NonCrossingPartition&) const = default;

private:
    int points_;
    std::vector<std::vector<int>> blocks_;
};

/// Non-crossing partition of 2n points a_1,b_1,...,a_n,b_n (clockwise, a_1 at
/// the top) into blocks of even size at most 2m. Internally a_i = 2i-1 and
/// b_i = 2i.
class EvenPartition {
public:
    EvenPartition() : bound_(1) {}
    EvenPartition(NonCrossingPartition partition, int bound);

    int points() const { return partition_.points(); }
    int bound() const { return bound_; }
    const NonCrossingPartition& partition() const { return partition_; }
    const std::vector<std::vector<int>>& blocks() const { return partition_.blocks(); }

    ValidationResult validate() const;

    std::string to_json() const { return partition_.to_json(); }

    bool operator==(const EvenPartition&) const = default;

private:
    NonCrossingPartition partition_;
    int bound_;
};

// ---------------------------------------------------------------------------
// Polygon dissections
// ---------------------------------------------------------------------------

/// Dissection of a convex polygon on k+2 vertices by non-crossing diagonals.
/// Vertices are labelled 0..k+1 clockwise with 0 the apex (the JSON encoding
/// of the top label, with the remaining labels shifted up by one). Cells must
/// have between 3 and max_cell vertices.
class Dissection {
public:
    Dissection() : k_(0), max_cell_(2) {}
    Dissection(int k, std::vector<std::pair<int, int>> diagonals, int max_cell);

    int k() const { return k_; }
    int polygon_vertices() const { return k_ + 2; }
    int max_cell() const { return max_cell_; }
    const std::vector<std::pair<int, int>>& diagonals() const { return diagonals_; }

    ValidationResult validate() const;

    /// The faces of the dissection, each a clockwise vertex list. Requires
    /// pairwise non-crossing diagonals.
    std::vector<std::vector<int>> cells() const;

    /// Canonical form {"k":...,"diagonals":[[x,y],...]}.
    std::string to_json() const;
    /// The cell bound is not part of the JSON form; the parsed value carries
    /// the vacuous bound k+2.
    static Dissection from_json(std::string_view text);

    bool operator==(const Dissection& other) const {
        return k_ == other.k_ && diagonals_ == other.diagonals_;
    }
    auto operator<=>(const Dissection& other) const {
        return std::tie(k_, diagonals_) <=> std::tie(other.k_, other.diagonals_);
    }

private:
    int k_;
    int max_cell_;
    std::vector<std::pair<int, int>> diagonals_;
};

// ---------------------------------------------------------------------------
// Oracle enumeration with guardrails
// ---------------------------------------------------------------------------

/// Safety bounds for the brute-force structure oracles; exceeding one throws
/// SizeTooLarge.
struct OracleLimits {
    int max_tree_vertices = 8;
    int max_partition_points = 12;
    int max_polygon_vertices = 9;
    int max_tpath_n = 6;

    static OracleLimits unlimited();
    /// Limits wide enough to verify bijections up to semilength n.
    static OracleLimits for_semilength(int n);
};

/// Every labelled non-crossing tree on the given vertices (brute force over
/// all labelled trees).
std::vector<NCTree> enumerate_nc_trees(int vertex_count, const OracleLimits& limits = {});
std::vector<NCOTree> enumerate_nco_trees(int vertex_count, const OracleLimits& limits = {});

/// Every non-crossing partition of 1..points. `max_block`, when positive,
/// caps block sizes.
std::vector<NonCrossingPartition> enumerate_nc_partitions(int points,
                                                          const OracleLimits& limits = {},
                                                          int max_block = 0);

/// Every partition of 2n points into even non-crossing blocks of size <= 2m.
std::vector<EvenPartition> enumerate_even_partitions(int points, int m,
                                                     const OracleLimits& limits = {});

/// Every dissection of a (k+2)-gon into cells of 3..max_cell vertices.
std::vector<Dissection> enumerate_dissections(int k, int max_cell,
                                              const OracleLimits& limits = {});

/// Guardrailed T-path oracle (delegates to enumerate_t_paths).
std::vector<TPath> enumerate_t_paths_oracle(int n, const OracleLimits& limits = {});

/// Tags for the CLI `list structures` dispatcher.
enum class StructureKind { NCTree, NCOTree, NCPartition, EvenPartition, Dissection };

StructureKind structure_kind_from_name(std::string_view name);

/// Canonical JSON for every structure of the requested kind and size. The
/// size is vertices for trees, points for partitions and k for dissections;
/// m is required for even partitions and dissections.
std::vector<std::string> enumerate_structure_jsons(StructureKind kind, int size,
                                                   std::optional<int> m,
                                                   const OracleLimits& limits = {});

} // namespace dyck
