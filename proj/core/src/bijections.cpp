#include "dyck/bijections.hpp"

#include <algorithm>
#include <functional>

namespace dyck {

namespace {

const DyckPath& dyck_colour(const Colour& colour) {
    if (const DyckPath* path = std::get_if<DyckPath>(&colour)) return *path;
    throw WrongColourSystem("expected a Dyck-path colour, got \"" + colour_str(colour) + "\"");
}

} // namespace

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

NCOTree theta(const DyckPath& path) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(path.semilength()));
    std::vector<int> pending; // anchors of opened, not yet closed edges
    int current = 1;
    int next_point = 2;
    for (DyckStep s : path.steps()) {
        if (s == DyckStep::U) {
            pending.push_back(current);
        } else {
            current = next_point++;
            edges.emplace_back(pending.back(), current);
            pending.pop_back();
        }
    }
    return NCOTree(NCTree(path.semilength() + 1, std::move(edges)));
}

DyckPath theta_inv(const NCOTree& tree) {
    const int vertices = tree.vertex_count();
    std::vector<int> out_degree(static_cast<std::size_t>(vertices) + 1, 0);
    for (const auto& e : tree.edges()) ++out_degree[static_cast<std::size_t>(e.first)];

    // Visiting points clockwise, each point contributes one U per out-edge
    // and each D creates the next point; this inverts the forward scan.
    std::vector<DyckStep> steps;
    steps.reserve(2 * static_cast<std::size_t>(vertices - 1));
    for (int v = 1; v <= vertices; ++v) {
        steps.insert(steps.end(), static_cast<std::size_t>(out_degree[static_cast<std::size_t>(v)]),
                     DyckStep::U);
        if (v < vertices) steps.push_back(DyckStep::D);
    }
    return DyckPath::from_steps(std::move(steps));
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

namespace {

NCTree phi_impl(const ColouredDyckPath& cp) {
    if (cp.base.empty()) return NCTree(1, {});
    ColouredDecomposition dec = primary_decompose(cp);
    const int k = dec.base_size;
    const DyckPath& colour = dyck_colour(dec.base_colour);
    if (colour.semilength() != k) {
        throw WrongColourSystem("a " + std::to_string(k) + "-ascent needs a colour of semilength " +
                                std::to_string(k) + ", got \"" + colour.str() + "\"");
    }

    const NCTree base = theta(colour).tree(); // on k+1 vertices

    std::vector<NCTree> subs;
    std::vector<int> size_prefix(static_cast<std::size_t>(k) + 1, 0); // sum of n_1..n_i
    subs.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const ColouredDyckPath& part = dec.parts[static_cast<std::size_t>(k - i)]; // P_i
        subs.push_back(phi_impl(part));
        size_prefix[static_cast<std::size_t>(i)] =
            size_prefix[static_cast<std::size_t>(i - 1)] + part.base.semilength();
    }

    // Base vertex j keeps its clockwise rank once the parts inserted before
    // it are counted; part i occupies the arc between base vertices i, i+1
    // with its own vertex 1 glued onto base vertex i+1.
    auto base_label = [&](int j) { return j + size_prefix[static_cast<std::size_t>(j - 1)]; };

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : base.edges()) edges.emplace_back(base_label(e.first), base_label(e.second));
    for (int i = 1; i <= k; ++i) {
        const NCTree& sub = subs[static_cast<std::size_t>(i - 1)];
        auto sub_label = [&](int t) {
            if (t == 1) return base_label(i + 1);
            return i + size_prefix[static_cast<std::size_t>(i - 1)] + (t - 1);
        };
        for (const auto& e : sub.edges()) edges.emplace_back(sub_label(e.first), sub_label(e.second));
    }
    return NCTree(k + 1 + size_prefix[static_cast<std::size_t>(k)], std::move(edges));
}

ColouredDyckPath phi_inv_trusted(const NCTree& tree) {
    const int vertices = tree.vertex_count();
    if (vertices == 1) return {};

    std::vector<std::vector<int>> out_adj(static_cast<std::size_t>(vertices) + 1);
    for (const auto& e : tree.edges()) out_adj[static_cast<std::size_t>(e.first)].push_back(e.second);

    // The base skeleton is the closure of vertex 1 under out-edges.
    std::vector<bool> in_base(static_cast<std::size_t>(vertices) + 1, false);
    std::vector<int> stack{1};
    in_base[1] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : out_adj[static_cast<std::size_t>(v)]) {
            if (!in_base[static_cast<std::size_t>(w)]) {
                in_base[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> base_vertices;
    for (int v = 1; v <= vertices; ++v) {
        if (in_base[static_cast<std::size_t>(v)]) base_vertices.push_back(v);
    }
    const int k = static_cast<int>(base_vertices.size()) - 1;

    std::vector<int> rank(static_cast<std::size_t>(vertices) + 1, 0);
    for (std::size_t r = 0; r < base_vertices.size(); ++r) {
        rank[static_cast<std::size_t>(base_vertices[r])] = static_cast<int>(r) + 1;
    }

    std::vector<std::pair<int, int>> base_edges;
    for (const auto& e : tree.edges()) {
        if (in_base[static_cast<std::size_t>(e.first)] && in_base[static_cast<std::size_t>(e.second)]) {
            base_edges.emplace_back(rank[static_cast<std::size_t>(e.first)],
                                    rank[static_cast<std::size_t>(e.second)]);
        }
    }
    const DyckPath colour = theta_inv(NCOTree(NCTree(k + 1, std::move(base_edges))));

    // Part i lives strictly between consecutive base vertices, rooted at the
    // right one; labels there are contiguous.
    std::vector<ColouredDyckPath> parts(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const int lo = base_vertices[static_cast<std::size_t>(i - 1)];
        const int hi = base_vertices[static_cast<std::size_t>(i)];
        if (hi == lo + 1) continue; // empty part
        std::vector<std::pair<int, int>> sub_edges;
        for (const auto& e : tree.edges()) {
            const bool first_in = e.first > lo && e.first <= hi;
            const bool second_in = e.second > lo && e.second <= hi;
            if (first_in && second_in) {
                if (in_base[static_cast<std::size_t>(e.first)] &&
                    in_base[static_cast<std::size_t>(e.second)]) {
                    continue; // base edge into the root
                }
                auto relabel = [&](int v) { return v == hi ? 1 : v - lo + 1; };
                sub_edges.emplace_back(relabel(e.first), relabel(e.second));
            } else if (first_in != second_in) {
                const int inner = first_in ? e.first : e.second;
                if (!in_base[static_cast<std::size_t>(inner)]) {
                    throw NotAnNCTree("edge " + std::to_string(e.first) + "-" +
                                      std::to_string(e.second) + " escapes its arc");
                }
            }
        }
        parts[static_cast<std::size_t>(k - i)] =
            phi_inv_trusted(NCTree(hi - lo, std::move(sub_edges)));
    }
    return recombine(k, Colour(colour), parts);
}

} // namespace

NCTree phi(const ColouredDyckPath& path) {
    if (path.colours.size() != ascents(path.base).size()) {
        throw WrongColourSystem("one colour per ascent required");
    }
    return phi_impl(path);
}

ColouredDyckPath phi_inv(const NCTree& tree) {
    ValidationResult result = tree.validate();
    if (!result) throw NotAnNCTree(result.message());
    return phi_inv_trusted(tree);
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

NonCrossingPartition psi(const DyckPath& path) {
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<std::size_t, int>> open; // (block index, points still missing)
    const auto& steps = path.steps();
    int next_point = 1;
    std::size_t i = 0;
    while (i < steps.size()) {
        if (steps[i] == DyckStep::U) {
            int k = 0;
            while (i < steps.size() && steps[i] == DyckStep::U) {
                ++k;
                ++i;
            }
            ++i; // the D closing the ascent
            blocks.push_back({next_point++});
            if (k > 1) open.emplace_back(blocks.size() - 1, k - 1);
        } else {
            auto& [block_index, missing] = open.back();
            blocks[block_index].push_back(next_point++);
            if (--missing == 0) open.pop_back();
            ++i;
        }
    }
    return NonCrossingPartition(path.semilength(), std::move(blocks));
}

DyckPath psi_inv(const NonCrossingPartition& partition) {
    ValidationResult result = partition.validate();
    if (!result) throw InvalidPartition(result.message());

    std::vector<int> opening_size(static_cast<std::size_t>(partition.points()) + 1, 0);
    for (const auto& block : partition.blocks()) {
        opening_size[static_cast<std::size_t>(block.front())] = static_cast<int>(block.size());
    }
    std::vector<DyckStep> steps;
    for (int t = 1; t <= partition.points(); ++t) {
        const int k = opening_size[static_cast<std::size_t>(t)];
        steps.insert(steps.end(), static_cast<std::size_t>(k), DyckStep::U);
        steps.push_back(DyckStep::D);
    }
    return DyckPath::from_steps(std::move(steps));
}

// ---------------------------------------------------------------------------
// rho
// ---------------------------------------------------------------------------

namespace {

NonCrossingPartition rho_impl(const ColouredDyckPath& cp) {
    if (cp.base.empty()) return NonCrossingPartition(0, {});
    ColouredDecomposition dec = primary_decompose(cp);
    const int k = dec.base_size;
    const DyckPath& colour = dyck_colour(dec.base_colour);
    const NonCrossingPartition base = psi(colour); // on [k]

    std::vector<NonCrossingPartition> subs;
    std::vector<int> size_prefix(static_cast<std::size_t>(k) + 1, 0); // sum of 2n_1..2n_i
    subs.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        subs.push_back(rho_impl(dec.parts[static_cast<std::size_t>(k - i)]));
        size_prefix[static_cast<std::size_t>(i)] =
            size_prefix[static_cast<std::size_t>(i - 1)] + subs.back().points();
    }

    // Point i of the colour's partition becomes the pair a_i, b_i; part i is
    // inserted between them.
    auto a_label = [&](int i) { return 2 * i - 1 + size_prefix[static_cast<std::size_t>(i - 1)]; };
    auto b_label = [&](int i) { return 2 * i + size_prefix[static_cast<std::size_t>(i)]; };

    std::vector<std::vector<int>> blocks;
    for (const auto& block : base.blocks()) {
        std::vector<int> doubled;
        doubled.reserve(2 * block.size());
        for (int x : block) {
            doubled.push_back(a_label(x));
            doubled.push_back(b_label(x));
        }
        blocks.push_back(std::move(doubled));
    }
    for (int i = 1; i <= k; ++i) {
        const int offset = a_label(i);
        for (const auto& block : subs[static_cast<std::size_t>(i - 1)].blocks()) {
            std::vector<int> shifted;
            shifted.reserve(block.size());
            for (int u : block) shifted.push_back(offset + u);
            blocks.push_back(std::move(shifted));
        }
    }
    return NonCrossingPartition(2 * k + size_prefix[static_cast<std::size_t>(k)], std::move(blocks));
}

ColouredDyckPath rho_inv_trusted(const NonCrossingPartition& partition) {
    const int points = partition.points();
    if (points == 0) return {};

    std::vector<const std::vector<int>*> block_of(static_cast<std::size_t>(points) + 1, nullptr);
    for (const auto& block : partition.blocks()) {
        for (int v : block) block_of[static_cast<std::size_t>(v)] = &block;
    }

    // Walk the base pairs: from each a point follow its block edge clockwise,
    // from each b point step to the next circle point.
    std::vector<int> base_points;
    int v = 1;
    while (true) {
        base_points.push_back(v);
        const std::vector<int>& block = *block_of[static_cast<std::size_t>(v)];
        auto it = std::upper_bound(block.begin(), block.end(), v);
        if (it == block.end()) {
            throw InvalidPartition("base walk wraps around at point " + std::to_string(v));
        }
        const int w = *it;
        base_points.push_back(w);
        if (w == points) break;
        v = w + 1;
    }
    const int k = static_cast<int>(base_points.size()) / 2;

    std::vector<bool> is_base(static_cast<std::size_t>(points) + 1, false);
    std::vector<int> contracted(static_cast<std::size_t>(points) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        for (int half = 0; half < 2; ++half) {
            const int p = base_points[static_cast<std::size_t>(2 * (i - 1) + half)];
            is_base[static_cast<std::size_t>(p)] = true;
            contracted[static_cast<std::size_t>(p)] = i;
        }
    }

    // Joining a_i and b_i into one point turns the base blocks into the
    // colour's partition.
    std::vector<std::vector<int>> colour_blocks;
    for (const auto& block : partition.blocks()) {
        const bool base = is_base[static_cast<std::size_t>(block.front())];
        std::vector<int> joined;
        for (int p : block) {
            if (is_base[static_cast<std::size_t>(p)] != base) {
                throw InvalidPartition("block mixes base and inserted points");
            }
            if (base && (joined.empty() || joined.back() != contracted[static_cast<std::size_t>(p)])) {
                joined.push_back(contracted[static_cast<std::size_t>(p)]);
            }
        }
        if (base) colour_blocks.push_back(std::move(joined));
    }
    const DyckPath colour = psi_inv(NonCrossingPartition(k, std::move(colour_blocks)));

    std::vector<ColouredDyckPath> parts(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const int lo = base_points[static_cast<std::size_t>(2 * (i - 1))];
        const int hi = base_points[static_cast<std::size_t>(2 * (i - 1) + 1)];
        if (hi == lo + 1) continue;
        std::vector<std::vector<int>> arc_blocks;
        for (const auto& block : partition.blocks()) {
            if (block.front() <= lo || block.front() >= hi) continue;
            if (block.back() >= hi) {
                throw InvalidPartition("block escapes the arc between " + std::to_string(lo) +
                                       " and " + std::to_string(hi));
            }
            std::vector<int> shifted;
            shifted.reserve(block.size());
            for (int u : block) shifted.push_back(u - lo);
            arc_blocks.push_back(std::move(shifted));
        }
        parts[static_cast<std::size_t>(k - i)] =
            rho_inv_trusted(NonCrossingPartition(hi - lo - 1, std::move(arc_blocks)));
    }
    return recombine(k, Colour(colour), parts);
}

} // namespace

EvenPartition rho(const ColouredDyckPath& path, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    const std::vector<Ascent> runs = ascents(path.base);
    if (runs.size() != path.colours.size()) {
        throw WrongColourSystem("one colour per ascent required");
    }
    const PathFamily family = PathFamily::bounded_ascent(m);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const DyckPath& colour = dyck_colour(path.colours[i]);
        if (colour.semilength() != runs[i].length || !in_family(colour, family)) {
            throw WrongColourSystem("colour \"" + colour.str() +
                                    "\" is not an ascent-bounded colour for a " +
                                    std::to_string(runs[i].length) + "-ascent with m = " +
                                    std::to_string(m));
        }
    }
    return EvenPartition(rho_impl(path), m);
}

EvenPartition rho(const ColouredDyckPath& path) {
    int m = 1;
    for (const Colour& colour : path.colours) {
        for (const Ascent& a : ascents(dyck_colour(colour))) m = std::max(m, a.length);
    }
    return rho(path, m);
}

ColouredDyckPath rho_inv(const EvenPartition& partition) {
    ValidationResult result = partition.validate();
    if (!result) throw InvalidPartition(result.message());
    return rho_inv_trusted(partition.partition());
}

// ---------------------------------------------------------------------------
// sigma
// ---------------------------------------------------------------------------

namespace {

struct DissectionParts {
    int vertices = 0; // total polygon vertices so far
    std::vector<std::pair<int, int>> diagonals;
};

DissectionParts sigma_impl(const ColouredDyckPath& cp) {
    if (cp.base.empty()) return {2, {}};
    ColouredDecomposition dec = primary_decompose(cp);
    const int k = dec.base_size;
    const DyckPath& colour = dyck_colour(dec.base_colour);
    const std::vector<bool> bits = fibonacci_touch_bits(colour);

    std::vector<DissectionParts> subs;
    std::vector<int> size_prefix(static_cast<std::size_t>(k) + 1, 0); // sum of n_1..n_i
    subs.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const ColouredDyckPath& part = dec.parts[static_cast<std::size_t>(k - i)];
        subs.push_back(sigma_impl(part));
        size_prefix[static_cast<std::size_t>(i)] =
            size_prefix[static_cast<std::size_t>(i - 1)] + part.base.semilength();
    }

    // Apex stays 0; base vertex j of the (k+2)-gon shifts past the parts
    // inserted along earlier base edges.
    auto base_label = [&](int j) { return j + 1 + size_prefix[static_cast<std::size_t>(j)]; };

    std::vector<std::pair<int, int>> diagonals;
    for (int j = 1; j <= k - 1; ++j) {
        if (bits[static_cast<std::size_t>(j - 1)]) diagonals.emplace_back(0, base_label(j));
    }
    for (int i = 1; i <= k; ++i) {
        const DissectionParts& sub = subs[static_cast<std::size_t>(i - 1)];
        if (sub.vertices == 2) continue; // empty part
        const int lo = base_label(i - 1);
        const int hi = base_label(i);
        // The base edge becomes a diagonal once vertices sit between its ends.
        diagonals.emplace_back(lo, hi);
        auto sub_label = [&](int u) {
            if (u == 0) return lo;
            if (u == sub.vertices - 1) return hi;
            return lo + u;
        };
        for (const auto& d : sub.diagonals) {
            diagonals.emplace_back(sub_label(d.first), sub_label(d.second));
        }
    }
    return {k + 2 + size_prefix[static_cast<std::size_t>(k)], std::move(diagonals)};
}

ColouredDyckPath sigma_inv_trusted(const Dissection& dissection) {
    const int k_total = dissection.k();
    if (k_total == 0) return {};
    const int top = k_total + 1;

    std::vector<bool> in_base(static_cast<std::size_t>(top) + 1, false);
    for (const auto& cell : dissection.cells()) {
        if (std::find(cell.begin(), cell.end(), 0) == cell.end()) continue;
        for (int v : cell) in_base[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> base_vertices;
    for (int v = 1; v <= top; ++v) {
        if (in_base[static_cast<std::size_t>(v)]) base_vertices.push_back(v);
    }
    if (base_vertices.empty() || base_vertices.front() != 1 || base_vertices.back() != top) {
        throw InvalidDissection("apex cells do not span the polygon rim");
    }
    const int k = static_cast<int>(base_vertices.size()) - 1;

    std::vector<bool> apex_diagonal(static_cast<std::size_t>(top) + 1, false);
    for (const auto& d : dissection.diagonals()) {
        if (d.first == 0) apex_diagonal[static_cast<std::size_t>(d.second)] = true;
    }
    std::vector<bool> bits(static_cast<std::size_t>(std::max(k - 1, 0)), false);
    for (int j = 1; j <= k - 1; ++j) {
        bits[static_cast<std::size_t>(j - 1)] =
            apex_diagonal[static_cast<std::size_t>(base_vertices[static_cast<std::size_t>(j)])];
    }
    const DyckPath colour = fibonacci_from_bits(bits);

    std::vector<ColouredDyckPath> parts(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const int lo = base_vertices[static_cast<std::size_t>(i - 1)];
        const int hi = base_vertices[static_cast<std::size_t>(i)];
        if (hi == lo + 1) continue;
        std::vector<std::pair<int, int>> sub_diagonals;
        for (const auto& d : dissection.diagonals()) {
            if (d.first >= lo && d.second <= hi && !(d.first == lo && d.second == hi)) {
                sub_diagonals.emplace_back(d.first - lo, d.second - lo);
            }
        }
        parts[static_cast<std::size_t>(k - i)] = sigma_inv_trusted(
            Dissection(hi - lo - 1, std::move(sub_diagonals), hi - lo + 1));
    }
    return recombine(k, Colour(colour), parts);
}

void require_fibonacci_colours(const ColouredDyckPath& path, int m) {
    const std::vector<Ascent> runs = ascents(path.base);
    if (runs.size() != path.colours.size()) {
        throw WrongColourSystem("one colour per ascent required");
    }
    const PathFamily family = m > 0 ? PathFamily::fibonacci(m) : PathFamily::fibonacci_free();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const DyckPath& colour = dyck_colour(path.colours[i]);
        if (colour.semilength() != runs[i].length || !in_family(colour, family)) {
            throw WrongColourSystem("colour \"" + colour.str() +
                                    "\" is not a pyramid concatenation for a " +
                                    std::to_string(runs[i].length) + "-ascent" +
                                    (m > 0 ? " with m = " + std::to_string(m) : ""));
        }
    }
}

} // namespace

Dissection sigma(const ColouredDyckPath& path, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    require_fibonacci_colours(path, m);
    DissectionParts parts = sigma_impl(path);
    return Dissection(parts.vertices - 2, std::move(parts.diagonals), m + 2);
}

Dissection sigma(const ColouredDyckPath& path) {
    int m = 1;
    for (const Colour& colour : path.colours) {
        const DyckPath& c = dyck_colour(colour);
        for (const Ascent& a : ascents(c)) m = std::max(m, a.length);
    }
    return sigma(path, m);
}

ColouredDyckPath sigma_inv(const Dissection& dissection) {
    ValidationResult result = dissection.validate();
    if (!result) throw InvalidDissection(result.message());
    return sigma_inv_trusted(dissection);
}

// ---------------------------------------------------------------------------
// fib_to_ls
// ---------------------------------------------------------------------------

namespace {

void fib_to_ls_emit(const ColouredDyckPath& cp, std::vector<SchroederStep>& out) {
    if (cp.base.empty()) return;
    ColouredDecomposition dec = primary_decompose(cp);
    const int k = dec.base_size;
    const std::vector<bool> bits = fibonacci_touch_bits(dyck_colour(dec.base_colour));
    const int beta = static_cast<int>(std::count(bits.begin(), bits.end(), true));

    out.insert(out.end(), static_cast<std::size_t>(beta) + 1, SchroederStep::U);
    // j-th letter of A_{k-1} ... A_1 D, each followed by the rewritten j-th
    // appended part.
    for (int j = 1; j <= k; ++j) {
        if (j < k) {
            out.push_back(bits[static_cast<std::size_t>(k - j - 1)] ? SchroederStep::D
                                                                    : SchroederStep::L);
        } else {
            out.push_back(SchroederStep::D);
        }
        fib_to_ls_emit(dec.parts[static_cast<std::size_t>(j - 1)], out);
    }
}

ColouredDyckPath ls_to_fib_parse(const std::vector<SchroederStep>& steps, std::size_t begin,
                                 std::size_t end) {
    if (begin == end) return {};
    std::size_t pos = begin;
    int ell = 0;
    while (pos < end && steps[pos] == SchroederStep::U) {
        ++ell;
        ++pos;
    }
    if (ell == 0) throw NotALittleSchroederPath("expected a rise");

    // P = U^ell X_k P_k ... X_2 P_2 D P_1: scaffold letters sit at the local
    // base level, each followed by a maximal balanced excursion.
    int height = ell;
    std::vector<SchroederStep> scaffold;
    std::vector<std::pair<std::size_t, std::size_t>> excursions;
    while (height > 0) {
        if (pos >= end) throw NotALittleSchroederPath("truncated descent");
        const SchroederStep x = steps[pos];
        if (x == SchroederStep::U) throw NotALittleSchroederPath("misplaced rise");
        scaffold.push_back(x);
        if (x == SchroederStep::D) --height;
        ++pos;

        const std::size_t ex_begin = pos;
        int rel = 0;
        while (pos < end) {
            const SchroederStep s = steps[pos];
            if (rel == 0 && s != SchroederStep::U) break;
            if (s == SchroederStep::U) ++rel;
            if (s == SchroederStep::D) --rel;
            ++pos;
        }
        excursions.emplace_back(ex_begin, pos);
    }
    if (pos != end) throw NotALittleSchroederPath("letters after the closing descent");

    const int k = static_cast<int>(scaffold.size());
    std::vector<bool> bits(static_cast<std::size_t>(std::max(k - 1, 0)), false);
    for (int j = 1; j <= k - 1; ++j) {
        bits[static_cast<std::size_t>(k - j - 1)] =
            scaffold[static_cast<std::size_t>(j - 1)] == SchroederStep::D;
    }
    const DyckPath colour = fibonacci_from_bits(bits);

    std::vector<ColouredDyckPath> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (const auto& [ex_begin, ex_end] : excursions) {
        parts.push_back(ls_to_fib_parse(steps, ex_begin, ex_end));
    }
    return recombine(k, Colour(colour), parts);
}

} // namespace

LittleSchroederPath fib_to_ls(const ColouredDyckPath& path) {
    require_fibonacci_colours(path, 0);
    std::vector<SchroederStep> out;
    fib_to_ls_emit(path, out);
    return LittleSchroederPath(SchroederPath::from_steps(std::move(out)));
}

ColouredDyckPath ls_to_fib(const LittleSchroederPath& path) {
    return ls_to_fib_parse(path.steps(), 0, path.steps().size());
}

// ---------------------------------------------------------------------------
// schroeder_to_t
// ---------------------------------------------------------------------------

TPath schroeder_to_t(const ColouredDyckPath& path) {
    validate_coloured(path, ColourSystem::schroeder());

    std::vector<TStep> out;
    const auto& steps = path.base.steps();
    std::size_t colour_index = 0;
    std::size_t i = 0;
    while (i < steps.size()) {
        if (steps[i] == DyckStep::U) {
            while (i < steps.size() && steps[i] == DyckStep::U) ++i;
            const SchroederPath& colour = std::get<SchroederPath>(path.colours[colour_index++]);
            for (SchroederStep s : colour.steps()) {
                switch (s) {
                case SchroederStep::U: out.push_back(TStep::H); break;
                case SchroederStep::L: out.push_back(TStep::G); break;
                case SchroederStep::D: out.push_back(TStep::D); break;
                }
            }
        } else {
            out.push_back(TStep::D);
            ++i;
        }
    }
    return TPath::from_steps(std::move(out));
}

ColouredDyckPath t_to_schroeder(const TPath& path) {
    const auto& steps = path.steps();

    // A D step matches the most recent open H; the D's left unmatched are
    // the base descents.
    std::vector<bool> matched(steps.size(), false);
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == TStep::H) {
            pending.push_back(i);
        } else if (steps[i] == TStep::D && !pending.empty()) {
            matched[i] = true;
            pending.pop_back();
        }
    }
    if (!pending.empty()) {
        throw UnmatchedH("H at step " + std::to_string(pending.back()) + " has no match");
    }

    ColouredDyckPath result;
    std::vector<DyckStep> base;
    std::vector<SchroederStep> buffer;
    auto flush = [&](bool descend) {
        if (!buffer.empty()) {
            SchroederPath colour = SchroederPath::from_steps(buffer);
            base.insert(base.end(), static_cast<std::size_t>(colour.semilength()), DyckStep::U);
            result.colours.emplace_back(std::move(colour));
            buffer.clear();
        }
        if (descend) base.push_back(DyckStep::D);
    };
    for (std::size_t i = 0; i < steps.size(); ++i) {
        switch (steps[i]) {
        case TStep::H: buffer.push_back(SchroederStep::U); break;
        case TStep::G: buffer.push_back(SchroederStep::L); break;
        case TStep::D:
            if (matched[i]) {
                buffer.push_back(SchroederStep::D);
            } else {
                flush(true);
            }
            break;
        }
    }
    if (!buffer.empty()) throw NotATPath("path ends inside an ascent colour");
    result.base = DyckPath::from_steps(std::move(base));
    return result;
}

} // namespace dyck
