#include "dyck/structures.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

namespace dyck {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string pair_str(const std::pair<int, int>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

/// Chords (a,b) and (c,d) on a circle cross iff exactly one endpoint of one
/// lies strictly inside the other's arc; sharing an endpoint never crosses.
bool chords_cross(std::pair<int, int> e, std::pair<int, int> f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second) {
        return false;
    }
    auto inside = [](int x, const std::pair<int, int>& c) {
        return c.first < x && x < c.second;
    };
    return inside(f.first, e) != inside(f.second, e);
}

/// Blocks interleave iff their merged label sequence alternates at least
/// three times (the a < b < c < d pattern).
bool blocks_cross(const std::vector<int>& x, const std::vector<int>& y,
                  std::vector<int>* witness = nullptr) {
    std::vector<std::pair<int, bool>> merged; // (point, belongs to x)
    merged.reserve(x.size() + y.size());
    for (int v : x) merged.emplace_back(v, true);
    for (int v : y) merged.emplace_back(v, false);
    std::sort(merged.begin(), merged.end());

    int switches = 0;
    std::vector<int> pattern{merged.front().first};
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i].second != merged[i - 1].second) {
            ++switches;
            pattern.push_back(merged[i].first);
            if (switches == 3) {
                if (witness != nullptr) *witness = pattern;
                return true;
            }
        }
    }
    return false;
}

std::pair<int, int> normalized(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

ordered_json parse_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON: " + std::string(text));
    return j;
}

std::vector<std::pair<int, int>> parse_pair_list(const ordered_json& j, const char* key) {
    if (!j.is_array()) throw ParseError(std::string(key) + " must be an array");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw ParseError(std::string(key) + " entries must be integer pairs");
        }
        pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return pairs;
}

} // namespace

// ---------------------------------------------------------------------------
// NCTree
// ---------------------------------------------------------------------------

NCTree::NCTree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& e : edges_) e = normalized(e);
    std::sort(edges_.begin(), edges_.end());
}

ValidationResult NCTree::validate() const {
    if (vertex_count_ < 1) return ValidationResult::fail("vertex count must be >= 1");
    for (const auto& e : edges_) {
        if (e.first == e.second) return ValidationResult::fail("self-loop " + pair_str(e));
        if (e.first < 1 || e.second > vertex_count_) {
            return ValidationResult::fail("edge " + pair_str(e) + " out of range");
        }
    }
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        return ValidationResult::fail("duplicate edge");
    }
    // Report geometry before tree shape so a crossing pair is always the
    // witness, whatever else is wrong.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            if (chords_cross(edges_[i], edges_[j])) {
                return ValidationResult::fail("crossing witness " + pair_str(edges_[i]) + "x" +
                                              pair_str(edges_[j]));
            }
        }
    }
    if (static_cast<int>(edges_.size()) != vertex_count_ - 1) {
        return ValidationResult::fail("a tree on " + std::to_string(vertex_count_) +
                                      " vertices needs " + std::to_string(vertex_count_ - 1) +
                                      " edges, got " + std::to_string(edges_.size()));
    }
    // Connectivity; with n-1 edges this also rules out cycles.
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& e : edges_) {
        int a = find(e.first);
        int b = find(e.second);
        if (a == b) return ValidationResult::fail("cycle through edge " + pair_str(e));
        parent[static_cast<std::size_t>(a)] = b;
    }
    return ValidationResult::valid();
}

ValidationResult NCTree::validate_nco() const {
    ValidationResult base = validate();
    if (!base) return base;
    std::vector<int> in_degree(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (const auto& e : edges_) ++in_degree[static_cast<std::size_t>(e.second)];
    for (int v = 2; v <= vertex_count_; ++v) {
        if (in_degree[static_cast<std::size_t>(v)] != 1) {
            return ValidationResult::fail("vertex " + std::to_string(v) + " has in-degree " +
                                          std::to_string(in_degree[static_cast<std::size_t>(v)]));
        }
    }
    return ValidationResult::valid();
}

std::string NCTree::to_json() const {
    ordered_json j;
    j["n"] = vertex_count_;
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& e : edges_) edges.push_back({e.first, e.second});
    return j.dump();
}

NCTree NCTree::from_json(std::string_view text) {
    ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
        !j.contains("edges")) {
        throw ParseError("expected {\"n\":...,\"edges\":[[a,b],...]}");
    }
    return NCTree(j["n"].get<int>(), parse_pair_list(j["edges"], "edges"));
}

NCOTree::NCOTree(NCTree tree) : tree_(std::move(tree)) {
    ValidationResult result = tree_.validate_nco();
    if (!result) throw NotAnNCOTree(result.message());
}

// ---------------------------------------------------------------------------
// NonCrossingPartition
// ---------------------------------------------------------------------------

NonCrossingPartition::NonCrossingPartition(int points, std::vector<std::vector<int>> blocks)
    : points_(points), blocks_(std::move(blocks)) {
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
    std::sort(blocks_.begin(), blocks_.end());
}

ValidationResult NonCrossingPartition::validate() const {
    if (points_ < 0) return ValidationResult::fail("point count must be >= 0");
    std::vector<bool> seen(static_cast<std::size_t>(points_) + 1, false);
    int covered = 0;
    for (const auto& block : blocks_) {
        if (block.empty()) return ValidationResult::fail("empty block");
        for (int v : block) {
            if (v < 1 || v > points_) {
                return ValidationResult::fail("point " + std::to_string(v) + " out of range");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                return ValidationResult::fail("point " + std::to_string(v) + " in two blocks");
            }
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != points_) {
        return ValidationResult::fail("blocks cover " + std::to_string(covered) + " of " +
                                      std::to_string(points_) + " points");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
            std::vector<int> witness;
            if (blocks_cross(blocks_[i], blocks_[j], &witness)) {
                std::string w;
                for (std::size_t t = 0; t < witness.size(); ++t) {
                    if (t > 0) w += "<";
                    w += std::to_string(witness[t]);
                }
                return ValidationResult::fail("crossing witness " + w);
            }
        }
    }
    return ValidationResult::valid();
}

std::string NonCrossingPartition::to_json() const {
    ordered_json j;
    auto& blocks = j["blocks"] = ordered_json::array();
    for (const auto& block : blocks_) blocks.push_back(block);
    return j.dump();
}

NonCrossingPartition NonCrossingPartition::from_json(std::string_view text) {
    ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
        throw ParseError("expected {\"blocks\":[[...],...]}");
    }
    std::vector<std::vector<int>> blocks;
    int max_point = 0;
    for (const auto& item : j["blocks"]) {
        if (!item.is_array()) throw ParseError("blocks entries must be arrays");
        std::vector<int> block;
        for (const auto& v : item) {
            if (!v.is_number_integer()) throw ParseError("block entries must be integers");
            block.push_back(v.get<int>());
            max_point = std::max(max_point, block.back());
        }
        blocks.push_back(std::move(block));
    }
    return NonCrossingPartition(max_point, std::move(blocks));
}

EvenPartition::EvenPartition(NonCrossingPartition partition, int bound)
    : partition_(std::move(partition)), bound_(bound) {}

ValidationResult EvenPartition::validate() const {
    if (bound_ < 1) return ValidationResult::fail("bound must be >= 1");
    if (partition_.points() % 2 != 0) {
        return ValidationResult::fail("point count must be even");
    }
    ValidationResult base = partition_.validate();
    if (!base) return base;
    for (const auto& block : partition_.blocks()) {
        if (block.size() % 2 != 0) {
            return ValidationResult::fail("block of odd size " + std::to_string(block.size()));
        }
        if (static_cast<int>(block.size()) > 2 * bound_) {
            return ValidationResult::fail("block of size " + std::to_string(block.size()) +
                                          " exceeds 2m = " + std::to_string(2 * bound_));
        }
    }
    return ValidationResult::valid();
}

// ---------------------------------------------------------------------------
// Dissection
// ---------------------------------------------------------------------------

Dissection::Dissection(int k, std::vector<std::pair<int, int>> diagonals, int max_cell)
    : k_(k), max_cell_(max_cell), diagonals_(std::move(diagonals)) {
    for (auto& d : diagonals_) d = normalized(d);
    std::sort(diagonals_.begin(), diagonals_.end());
}

ValidationResult Dissection::validate() const {
    if (k_ < 0) return ValidationResult::fail("k must be >= 0");
    const int top = k_ + 1;
    for (const auto& d : diagonals_) {
        if (d.first < 0 || d.second > top) {
            return ValidationResult::fail("diagonal " + pair_str(d) + " out of range");
        }
        if (d.second - d.first < 2 || (d.first == 0 && d.second == top)) {
            return ValidationResult::fail("chord " + pair_str(d) + " is a polygon side");
        }
    }
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
        return ValidationResult::fail("duplicate diagonal");
    }
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
            if (chords_cross(diagonals_[i], diagonals_[j])) {
                return ValidationResult::fail("crossing witness " + pair_str(diagonals_[i]) +
                                              "x" + pair_str(diagonals_[j]));
            }
        }
    }
    for (const auto& cell : cells()) {
        if (static_cast<int>(cell.size()) < 3 ||
            static_cast<int>(cell.size()) > max_cell_) {
            return ValidationResult::fail("cell of size " + std::to_string(cell.size()) +
                                          " outside [3, " + std::to_string(max_cell_) + "]");
        }
    }
    return ValidationResult::valid();
}

std::vector<std::vector<int>> Dissection::cells() const {
    if (k_ == 0) return {};
    const int top = k_ + 1;
    std::vector<std::vector<int>> partners(static_cast<std::size_t>(top) + 1);
    for (const auto& d : diagonals_) {
        partners[static_cast<std::size_t>(d.first)].push_back(d.second);
    }

    std::vector<std::vector<int>> result;
    // The cell adjacent to the bounding chord (a, b) follows, from each
    // vertex, the outermost chord that stays inside the region. Consecutive
    // cell vertices with a gap bound sub-regions handled recursively.
    std::function<void(int, int)> peel = [&](int a, int b) {
        std::vector<int> cell{a};
        int v = a;
        while (v < b) {
            int next = v + 1;
            for (int w : partners[static_cast<std::size_t>(v)]) {
                // The bounding chord itself is not part of the region.
                if (w > next && (v != a ? w <= b : w < b)) next = w;
            }
            cell.push_back(next);
            v = next;
        }
        for (std::size_t i = 0; i + 1 < cell.size(); ++i) {
            if (cell[i + 1] > cell[i] + 1) peel(cell[i], cell[i + 1]);
        }
        result.push_back(std::move(cell));
    };
    peel(0, top);
    return result;
}

std::string Dissection::to_json() const {
    ordered_json j;
    j["k"] = k_;
    auto& diagonals = j["diagonals"] = ordered_json::array();
    for (const auto& d : diagonals_) diagonals.push_back({d.first, d.second});
    return j.dump();
}

Dissection Dissection::from_json(std::string_view text) {
    ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() ||
        !j.contains("diagonals")) {
        throw ParseError("expected {\"k\":...,\"diagonals\":[[x,y],...]}");
    }
    const int k = j["k"].get<int>();
    return Dissection(k, parse_pair_list(j["diagonals"], "diagonals"), k + 2);
}

// ---------------------------------------------------------------------------
// Oracle enumeration
// ---------------------------------------------------------------------------

OracleLimits OracleLimits::unlimited() {
    const int big = std::numeric_limits<int>::max();
    return {big, big, big, big};
}

OracleLimits OracleLimits::for_semilength(int n) {
    return {n + 1, 2 * n, n + 2, n};
}

namespace {

void check_limit(int value, int limit, const std::string& what) {
    if (value > limit) {
        throw SizeTooLarge(what + " oracle limited to " + std::to_string(limit) +
                           " (requested " + std::to_string(value) + ")");
    }
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 0);
    for (int v : seq) ++remaining[static_cast<std::size_t>(v)];
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    auto smallest_leaf = [&] {
        int leaf = 1;
        while (used[static_cast<std::size_t>(leaf)] || remaining[static_cast<std::size_t>(leaf)] > 0) ++leaf;
        return leaf;
    };
    for (int v : seq) {
        const int leaf = smallest_leaf();
        edges.emplace_back(leaf, v);
        used[static_cast<std::size_t>(leaf)] = true;
        --remaining[static_cast<std::size_t>(v)];
    }
    // The largest vertex is never the smallest leaf, so it survives.
    edges.emplace_back(smallest_leaf(), n);
    return edges;
}

} // namespace

std::vector<NCTree> enumerate_nc_trees(int vertex_count, const OracleLimits& limits) {
    check_limit(vertex_count, limits.max_tree_vertices, "NC-tree");
    if (vertex_count == 1) return {NCTree(1, {})};
    if (vertex_count == 2) return {NCTree(2, {{1, 2}})};

    std::vector<NCTree> result;
    std::vector<int> seq(static_cast<std::size_t>(vertex_count) - 2, 1);
    while (true) {
        NCTree tree(vertex_count, prufer_decode(seq, vertex_count));
        if (tree.validate()) result.push_back(std::move(tree));

        std::size_t pos = seq.size();
        while (pos > 0 && seq[pos - 1] == vertex_count) {
            seq[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
        ++seq[pos - 1];
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<NCOTree> enumerate_nco_trees(int vertex_count, const OracleLimits& limits) {
    std::vector<NCOTree> result;
    for (NCTree& tree : enumerate_nc_trees(vertex_count, limits)) {
        if (tree.validate_nco()) result.emplace_back(std::move(tree));
    }
    return result;
}

std::vector<NonCrossingPartition> enumerate_nc_partitions(int points,
                                                          const OracleLimits& limits,
                                                          int max_block) {
    check_limit(points, limits.max_partition_points, "partition");
    std::vector<NonCrossingPartition> result;
    std::vector<std::vector<int>> blocks;

    std::function<void(int)> extend = [&](int t) {
        if (t > points) {
            result.emplace_back(points, blocks);
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (max_block > 0 && static_cast<int>(blocks[i].size()) >= max_block) continue;
            blocks[i].push_back(t);
            bool crosses = false;
            for (std::size_t j = 0; j < blocks.size() && !crosses; ++j) {
                if (j != i) crosses = blocks_cross(blocks[i], blocks[j]);
            }
            if (!crosses) extend(t + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({t});
        extend(t + 1);
        blocks.pop_back();
    };
    extend(1);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<EvenPartition> enumerate_even_partitions(int points, int m,
                                                     const OracleLimits& limits) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    if (points % 2 != 0) throw InvalidBound("even partitions need an even point count");
    std::vector<EvenPartition> result;
    for (NonCrossingPartition& p : enumerate_nc_partitions(points, limits, 2 * m)) {
        EvenPartition candidate(std::move(p), m);
        if (candidate.validate()) result.push_back(std::move(candidate));
    }
    return result;
}

std::vector<Dissection> enumerate_dissections(int k, int max_cell, const OracleLimits& limits) {
    check_limit(k + 2, limits.max_polygon_vertices, "dissection");
    std::vector<std::pair<int, int>> candidates;
    const int top = k + 1;
    for (int x = 0; x <= top; ++x) {
        for (int y = x + 2; y <= top; ++y) {
            if (x == 0 && y == top) continue;
            candidates.emplace_back(x, y);
        }
    }

    std::vector<Dissection> result;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == candidates.size()) {
            Dissection d(k, chosen, max_cell);
            if (d.validate()) result.push_back(std::move(d));
            return;
        }
        pick(i + 1);
        bool compatible = true;
        for (const auto& c : chosen) {
            if (chords_cross(c, candidates[i])) {
                compatible = false;
                break;
            }
        }
        if (compatible) {
            chosen.push_back(candidates[i]);
            pick(i + 1);
            chosen.pop_back();
        }
    };
    pick(0);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<TPath> enumerate_t_paths_oracle(int n, const OracleLimits& limits) {
    check_limit(n, limits.max_tpath_n, "T-path");
    return enumerate_t_paths(n);
}

StructureKind structure_kind_from_name(std::string_view name) {
    if (name == "nc-tree") return StructureKind::NCTree;
    if (name == "nco-tree") return StructureKind::NCOTree;
    if (name == "nc-partition") return StructureKind::NCPartition;
    if (name == "even-partition") return StructureKind::EvenPartition;
    if (name == "dissection") return StructureKind::Dissection;
    throw ParseError("unknown structure kind \"" + std::string(name) + "\"");
}

std::vector<std::string> enumerate_structure_jsons(StructureKind kind, int size,
                                                   std::optional<int> m,
                                                   const OracleLimits& limits) {
    std::vector<std::string> out;
    auto collect = [&out](const auto& items) {
        out.reserve(items.size());
        for (const auto& item : items) out.push_back(item.to_json());
    };
    switch (kind) {
    case StructureKind::NCTree: collect(enumerate_nc_trees(size, limits)); break;
    case StructureKind::NCOTree: collect(enumerate_nco_trees(size, limits)); break;
    case StructureKind::NCPartition: collect(enumerate_nc_partitions(size, limits)); break;
    case StructureKind::EvenPartition:
        if (!m) throw InvalidBound("even-partition requires --m");
        collect(enumerate_even_partitions(size, *m, limits));
        break;
    case StructureKind::Dissection:
        if (!m) throw InvalidBound("dissection requires --m");
        collect(enumerate_dissections(size, *m + 2, limits));
        break;
    }
    return out;
}

} // namespace dyck
