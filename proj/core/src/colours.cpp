#include "dyck/colours.hpp"

#include <algorithm>

namespace dyck {

std::string colour_str(const Colour& colour) {
    return std::visit([](const auto& path) { return path.str(); }, colour);
}

int colour_size(const Colour& colour) {
    return std::visit([](const auto& path) { return path.semilength(); }, colour);
}

// ---------------------------------------------------------------------------
// ColourSystem
// ---------------------------------------------------------------------------

ColourSystem ColourSystem::bounded_ascent(int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    return ColourSystem(Kind::BoundedAscent, m);
}

ColourSystem ColourSystem::fibonacci(int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    return ColourSystem(Kind::Fibonacci, m);
}

ColourSystem ColourSystem::custom(std::vector<Integer> weights) {
    if (weights.empty() || weights.front() < 1) {
        throw InvalidBound("custom weights need a_0 >= 1");
    }
    for (const Integer& w : weights) {
        if (w < 0) throw InvalidBound("custom weights must be nonnegative");
    }
    ColourSystem system(Kind::Custom, 0);
    system.weights_ = std::move(weights);
    return system;
}

std::vector<Colour> ColourSystem::colours_of(int k) const {
    auto lift = [](std::vector<DyckPath> paths) {
        std::vector<Colour> colours;
        colours.reserve(paths.size());
        for (DyckPath& p : paths) colours.emplace_back(std::move(p));
        return colours;
    };
    switch (kind_) {
    case Kind::Catalan: return lift(enumerate_dyck(k));
    case Kind::BoundedAscent: return lift(enumerate_bounded_ascent(k, bound_));
    case Kind::Fibonacci: return lift(enumerate_fibonacci(k, bound_));
    case Kind::FibonacciFree: return lift(enumerate_fibonacci_free(k));
    case Kind::Schroeder: {
        std::vector<Colour> colours;
        for (SchroederPath& p : enumerate_schroeder(k)) colours.emplace_back(std::move(p));
        return colours;
    }
    case Kind::Trivial: {
        std::vector<DyckStep> steps;
        for (int i = 0; i < k; ++i) {
            steps.push_back(DyckStep::U);
            steps.push_back(DyckStep::D);
        }
        return {Colour(DyckPath::from_steps(std::move(steps)))};
    }
    case Kind::Custom:
        throw CountOnlySystem("the custom system has counts but no colour sets");
    }
    throw CountOnlySystem("bad colour system");
}

Integer ColourSystem::colour_count(int k) const {
    switch (kind_) {
    case Kind::Catalan: return catalan_number(k);
    case Kind::BoundedAscent: return bounded_ascent_count(k, bound_);
    case Kind::Fibonacci: return fibonacci_path_count(k, bound_);
    case Kind::FibonacciFree: return fibonacci_free_count(k);
    case Kind::Schroeder: return schroeder_number(k);
    case Kind::Trivial: return 1;
    case Kind::Custom: {
        const std::size_t i = std::min(static_cast<std::size_t>(k), weights_.size() - 1);
        return weights_[i];
    }
    }
    return 0;
}

bool ColourSystem::contains(int k, const Colour& colour) const {
    if (colour_size(colour) != k) return false;
    if (kind_ == Kind::Schroeder) return std::holds_alternative<SchroederPath>(colour);
    if (kind_ == Kind::Custom) return false;
    const DyckPath* path = std::get_if<DyckPath>(&colour);
    if (path == nullptr) return false;
    switch (kind_) {
    case Kind::Catalan: return true;
    case Kind::BoundedAscent: return in_family(*path, PathFamily::bounded_ascent(bound_));
    case Kind::Fibonacci: return in_family(*path, PathFamily::fibonacci(bound_));
    case Kind::FibonacciFree: return in_family(*path, PathFamily::fibonacci_free());
    case Kind::Trivial: {
        for (const Ascent& a : ascents(*path)) {
            if (a.length != 1) return false;
        }
        return true;
    }
    default: return false;
    }
}

std::vector<Integer> ColourSystem::weight_sequence(int n) const {
    std::vector<Integer> weights;
    weights.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) weights.push_back(colour_count(k));
    return weights;
}

std::string ColourSystem::name() const {
    switch (kind_) {
    case Kind::Catalan: return "catalan";
    case Kind::BoundedAscent: return "bounded-ascent";
    case Kind::Fibonacci: return "fibonacci";
    case Kind::FibonacciFree: return "fibonacci-free";
    case Kind::Schroeder: return "schroeder";
    case Kind::Trivial: return "trivial";
    case Kind::Custom: return "custom";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ColouredDyckPath
// ---------------------------------------------------------------------------

std::string str(const ColouredDyckPath& path) {
    std::string text = path.base.str();
    if (path.colours.empty()) return text;
    text += ';';
    for (std::size_t i = 0; i < path.colours.size(); ++i) {
        if (i > 0) text += ',';
        text += colour_str(path.colours[i]);
    }
    return text;
}

ColouredDyckPath parse_coloured(std::string_view text, const ColourSystem& system) {
    const std::size_t semi = text.find(';');
    const std::string_view base_word = text.substr(0, semi);
    ColouredDyckPath result;
    result.base = DyckPath::parse(base_word);

    if (semi != std::string_view::npos) {
        std::string_view rest = text.substr(semi + 1);
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view word = rest.substr(0, comma);
            if (system.kind() == ColourSystem::Kind::Schroeder) {
                result.colours.emplace_back(SchroederPath::parse(word));
            } else {
                result.colours.emplace_back(DyckPath::parse(word));
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    validate_coloured(result, system);
    return result;
}

void validate_coloured(const ColouredDyckPath& path, const ColourSystem& system) {
    if (!system.structural()) {
        throw CountOnlySystem("the custom system cannot colour concrete paths");
    }
    const std::vector<Ascent> runs = ascents(path.base);
    if (runs.size() != path.colours.size()) {
        throw WrongColourSystem("path has " + std::to_string(runs.size()) + " ascents but " +
                                std::to_string(path.colours.size()) + " colours");
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!system.contains(runs[i].length, path.colours[i])) {
            throw WrongColourSystem("colour \"" + colour_str(path.colours[i]) +
                                    "\" is not a " + system.name() + " colour for a " +
                                    std::to_string(runs[i].length) + "-ascent");
        }
    }
}

std::vector<ColouredDyckPath> enumerate_coloured(int n, const ColourSystem& system) {
    if (!system.structural()) {
        throw CountOnlySystem("the custom system cannot colour concrete paths");
    }
    std::vector<ColouredDyckPath> out;
    for (DyckPath& base : enumerate_dyck(n)) {
        const std::vector<Ascent> runs = ascents(base);
        std::vector<std::vector<Colour>> choices;
        choices.reserve(runs.size());
        for (const Ascent& a : runs) choices.push_back(system.colours_of(a.length));

        const bool feasible =
            std::none_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
        if (!feasible) continue;

        std::vector<std::size_t> index(runs.size(), 0);
        while (true) {
            ColouredDyckPath cp;
            cp.base = base;
            cp.colours.reserve(runs.size());
            for (std::size_t i = 0; i < runs.size(); ++i) cp.colours.push_back(choices[i][index[i]]);
            out.push_back(std::move(cp));

            // Odometer with the rightmost ascent fastest.
            std::size_t pos = runs.size();
            while (pos > 0 && ++index[pos - 1] == choices[pos - 1].size()) {
                index[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

Integer count_coloured_bruteforce(int n, const ColourSystem& system) {
    // Cache the per-length counts; ascent lengths never exceed n.
    std::vector<Integer> counts;
    counts.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) counts.push_back(system.colour_count(k));

    Integer total = 0;
    for (const DyckPath& path : enumerate_dyck(n)) {
        Integer product = 1;
        for (const Ascent& a : ascents(path)) product *= counts[static_cast<std::size_t>(a.length)];
        total += product;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Coloured decomposition
// ---------------------------------------------------------------------------

ColouredDecomposition primary_decompose(const ColouredDyckPath& path) {
    if (path.base.empty()) throw EmptyPath("cannot decompose the empty path");
    if (ascents(path.base).size() != path.colours.size()) {
        throw WrongColourSystem("one colour per ascent required");
    }
    PrimaryDecomposition base_dec = primary_decompose(path.base);

    ColouredDecomposition dec;
    dec.base_size = base_dec.base_size;
    dec.base_colour = path.colours.at(0);
    dec.parts.reserve(base_dec.parts.size());
    // Ascents appear in word order: the base ascent first, then the ascents
    // of P_k, P_{k-1}, ..., P_1.
    std::size_t next_colour = 1;
    for (DyckPath& part : base_dec.parts) {
        const std::size_t part_ascents = ascents(part).size();
        ColouredDyckPath cp;
        cp.base = std::move(part);
        cp.colours.assign(path.colours.begin() + static_cast<std::ptrdiff_t>(next_colour),
                          path.colours.begin() + static_cast<std::ptrdiff_t>(next_colour + part_ascents));
        next_colour += part_ascents;
        dec.parts.push_back(std::move(cp));
    }
    return dec;
}

ColouredDyckPath recombine(int base_size, Colour base_colour,
                           const std::vector<ColouredDyckPath>& parts) {
    if (static_cast<int>(parts.size()) != base_size) {
        throw InvalidBound("a size-k base needs exactly k appended parts");
    }
    std::vector<DyckStep> steps(static_cast<std::size_t>(base_size), DyckStep::U);
    ColouredDyckPath result;
    result.colours.push_back(std::move(base_colour));
    for (const ColouredDyckPath& part : parts) {
        steps.push_back(DyckStep::D);
        const auto& ps = part.base.steps();
        steps.insert(steps.end(), ps.begin(), ps.end());
        result.colours.insert(result.colours.end(), part.colours.begin(), part.colours.end());
    }
    result.base = DyckPath::from_steps(std::move(steps));
    return result;
}

} // namespace dyck
