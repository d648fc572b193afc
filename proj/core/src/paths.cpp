#include "dyck/paths.hpp"

#include <algorithm>
#include <functional>

namespace dyck {

namespace {

[[noreturn]] void throw_unbalanced(std::string_view word, const std::string& why) {
    throw UnbalancedWord("\"" + std::string(word) + "\": " + why);
}

} // namespace

// ---------------------------------------------------------------------------
// DyckPath
// ---------------------------------------------------------------------------

DyckPath DyckPath::from_steps(std::vector<DyckStep> steps) {
    int height = 0;
    for (DyckStep s : steps) {
        height += s == DyckStep::U ? 1 : -1;
        if (height < 0) throw UnbalancedWord("prefix passes below the axis");
    }
    if (height != 0) throw UnbalancedWord("#U != #D");
    DyckPath path;
    path.steps_ = std::move(steps);
    return path;
}

DyckPath DyckPath::parse(std::string_view word) {
    std::vector<DyckStep> steps;
    steps.reserve(word.size());
    for (char c : word) {
        switch (c) {
        case 'U': steps.push_back(DyckStep::U); break;
        case 'D': steps.push_back(DyckStep::D); break;
        default: throw UnknownLetter("letter '" + std::string(1, c) + "' is not a Dyck step");
        }
    }
    try {
        return from_steps(std::move(steps));
    } catch (const UnbalancedWord& e) {
        throw_unbalanced(word, e.what());
    }
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> hs;
    hs.reserve(steps_.size());
    int h = 0;
    for (DyckStep s : steps_) hs.push_back(h += s == DyckStep::U ? 1 : -1);
    return hs;
}

std::string DyckPath::str() const {
    std::string word;
    word.reserve(steps_.size());
    for (DyckStep s : steps_) word += s == DyckStep::U ? 'U' : 'D';
    return word;
}

// ---------------------------------------------------------------------------
// SchroederPath
// ---------------------------------------------------------------------------

SchroederPath SchroederPath::from_steps(std::vector<SchroederStep> steps) {
    int height = 0;
    for (SchroederStep s : steps) {
        if (s == SchroederStep::U) ++height;
        if (s == SchroederStep::D) --height;
        if (height < 0) throw UnbalancedWord("prefix passes below the axis");
    }
    if (height != 0) throw UnbalancedWord("#U != #D");
    SchroederPath path;
    path.steps_ = std::move(steps);
    return path;
}

SchroederPath SchroederPath::parse(std::string_view word) {
    std::vector<SchroederStep> steps;
    steps.reserve(word.size());
    for (char c : word) {
        switch (c) {
        case 'U': steps.push_back(SchroederStep::U); break;
        case 'D': steps.push_back(SchroederStep::D); break;
        case 'L': steps.push_back(SchroederStep::L); break;
        default: throw UnknownLetter("letter '" + std::string(1, c) + "' is not a Schroeder step");
        }
    }
    try {
        return from_steps(std::move(steps));
    } catch (const UnbalancedWord& e) {
        throw_unbalanced(word, e.what());
    }
}

int SchroederPath::semilength() const {
    int span = 0;
    for (SchroederStep s : steps_) span += s == SchroederStep::L ? 2 : 1;
    return span / 2;
}

std::vector<int> SchroederPath::heights() const {
    std::vector<int> hs;
    hs.reserve(steps_.size());
    int h = 0;
    for (SchroederStep s : steps_) {
        if (s == SchroederStep::U) ++h;
        if (s == SchroederStep::D) --h;
        hs.push_back(h);
    }
    return hs;
}

std::string SchroederPath::str() const {
    std::string word;
    word.reserve(steps_.size());
    for (SchroederStep s : steps_) {
        word += s == SchroederStep::U ? 'U' : s == SchroederStep::D ? 'D' : 'L';
    }
    return word;
}

bool SchroederPath::has_level_on_axis() const {
    int h = 0;
    for (SchroederStep s : steps_) {
        if (s == SchroederStep::L && h == 0) return true;
        if (s == SchroederStep::U) ++h;
        if (s == SchroederStep::D) --h;
    }
    return false;
}

// ---------------------------------------------------------------------------
// LittleSchroederPath
// ---------------------------------------------------------------------------

LittleSchroederPath::LittleSchroederPath(SchroederPath path) : path_(std::move(path)) {
    if (path_.has_level_on_axis()) {
        throw UnbalancedWord("\"" + path_.str() + "\": L on axis");
    }
}

LittleSchroederPath LittleSchroederPath::parse(std::string_view word) {
    return LittleSchroederPath(SchroederPath::parse(word));
}

// ---------------------------------------------------------------------------
// TPath
// ---------------------------------------------------------------------------

TPath TPath::from_steps(std::vector<TStep> steps) {
    int height = 0;
    for (TStep s : steps) {
        switch (s) {
        case TStep::H: height += 2; break;
        case TStep::G: height += 1; break;
        case TStep::D: height -= 1; break;
        }
        if (height < 0) throw UnbalancedWord("prefix passes below the axis");
    }
    if (height != 0) throw UnbalancedWord("endpoint not on the axis");
    TPath path;
    path.steps_ = std::move(steps);
    return path;
}

TPath TPath::parse(std::string_view word) {
    std::vector<TStep> steps;
    steps.reserve(word.size());
    for (char c : word) {
        switch (c) {
        case 'H': steps.push_back(TStep::H); break;
        case 'G': steps.push_back(TStep::G); break;
        case 'D': steps.push_back(TStep::D); break;
        default: throw UnknownLetter("letter '" + std::string(1, c) + "' is not a T-path step");
        }
    }
    try {
        return from_steps(std::move(steps));
    } catch (const UnbalancedWord& e) {
        throw_unbalanced(word, e.what());
    }
}

int TPath::semilength() const {
    // A balanced word has x-span 3(#H + #G).
    int span = 0;
    for (TStep s : steps_) span += s == TStep::G ? 2 : 1;
    return span / 3;
}

std::vector<int> TPath::heights() const {
    std::vector<int> hs;
    hs.reserve(steps_.size());
    int h = 0;
    for (TStep s : steps_) {
        h += s == TStep::H ? 2 : s == TStep::G ? 1 : -1;
        hs.push_back(h);
    }
    return hs;
}

std::string TPath::str() const {
    std::string word;
    word.reserve(steps_.size());
    for (TStep s : steps_) {
        word += s == TStep::H ? 'H' : s == TStep::G ? 'G' : 'D';
    }
    return word;
}

// ---------------------------------------------------------------------------
// Ascents and decompositions
// ---------------------------------------------------------------------------

std::vector<Ascent> ascents(const DyckPath& path) {
    std::vector<Ascent> result;
    const auto& steps = path.steps();
    std::size_t i = 0;
    while (i < steps.size()) {
        if (steps[i] == DyckStep::U) {
            std::size_t start = i;
            while (i < steps.size() && steps[i] == DyckStep::U) ++i;
            result.push_back({start, static_cast<int>(i - start)});
        } else {
            ++i;
        }
    }
    return result;
}

PrimaryDecomposition primary_decompose(const DyckPath& path) {
    if (path.empty()) throw EmptyPath("cannot decompose the empty path");
    const auto& steps = path.steps();
    std::size_t pos = 0;
    while (pos < steps.size() && steps[pos] == DyckStep::U) ++pos;
    const int k = static_cast<int>(pos);

    PrimaryDecomposition dec;
    dec.base_size = k;
    dec.parts.reserve(static_cast<std::size_t>(k));
    // After U^k the remainder is D P_k D P_{k-1} ... D P_1; part P_i runs at
    // base level i-1 until the delimiter D that drops to level i-2.
    for (int i = k; i >= 1; --i) {
        ++pos; // the delimiter D
        std::size_t start = pos;
        int rel = 0;
        while (pos < steps.size()) {
            if (steps[pos] == DyckStep::D && rel == 0) break;
            rel += steps[pos] == DyckStep::U ? 1 : -1;
            ++pos;
        }
        dec.parts.push_back(DyckPath::from_steps(
            std::vector<DyckStep>(steps.begin() + static_cast<std::ptrdiff_t>(start),
                                  steps.begin() + static_cast<std::ptrdiff_t>(pos))));
    }
    return dec;
}

PyramidTree::PyramidTree(int size, std::vector<PyramidTree> children)
    : size_(size), children_(std::move(children)) {
    if (size_ < 1) throw InvalidBound("pyramid node size must be >= 1");
    if (children_.size() != static_cast<std::size_t>(size_)) {
        throw InvalidBound("pyramid node of size k needs exactly k child slots");
    }
}

PyramidTree complete_decompose(const DyckPath& path) {
    if (path.empty()) return PyramidTree{};
    PrimaryDecomposition dec = primary_decompose(path);
    std::vector<PyramidTree> children;
    children.reserve(dec.parts.size());
    for (const DyckPath& part : dec.parts) children.push_back(complete_decompose(part));
    return PyramidTree(dec.base_size, std::move(children));
}

DyckPath recompose_complete(const PyramidTree& tree) {
    if (tree.is_empty()) return DyckPath{};
    std::vector<DyckStep> steps;
    std::function<void(const PyramidTree&)> emit = [&](const PyramidTree& node) {
        steps.insert(steps.end(), static_cast<std::size_t>(node.size()), DyckStep::U);
        for (const PyramidTree& child : node.children()) {
            steps.push_back(DyckStep::D);
            if (!child.is_empty()) emit(child);
        }
    };
    emit(tree);
    return DyckPath::from_steps(std::move(steps));
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

PathFamily PathFamily::bounded_ascent(int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    return {Kind::BoundedAscent, m};
}

PathFamily PathFamily::fibonacci(int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    return {Kind::Fibonacci, m};
}

std::string PathFamily::name() const {
    switch (kind) {
    case Kind::Dyck: return "dyck";
    case Kind::BoundedAscent: return "bounded-ascent";
    case Kind::Fibonacci: return "fibonacci";
    case Kind::FibonacciFree: return "fibonacci-free";
    case Kind::Schroeder: return "schroeder";
    case Kind::LittleSchroeder: return "little-schroeder";
    case Kind::TPath: return "t-path";
    }
    return "?";
}

PathFamily PathFamily::from_name(std::string_view name, std::optional<int> m) {
    if (name == "dyck") return dyck();
    if (name == "bounded-ascent") {
        if (!m) throw InvalidBound("bounded-ascent requires --m");
        return bounded_ascent(*m);
    }
    if (name == "fibonacci") {
        if (!m) throw InvalidBound("fibonacci requires --m");
        return fibonacci(*m);
    }
    if (name == "fibonacci-free") return fibonacci_free();
    if (name == "schroeder") return schroeder();
    if (name == "little-schroeder") return little_schroeder();
    if (name == "t-path") return t_path();
    throw ParseError("unknown path family \"" + std::string(name) + "\"");
}

ParsedPath parse_path(std::string_view word, const PathFamily& family) {
    switch (family.kind) {
    case PathFamily::Kind::Dyck:
    case PathFamily::Kind::BoundedAscent:
    case PathFamily::Kind::Fibonacci:
    case PathFamily::Kind::FibonacciFree:
        return DyckPath::parse(word);
    case PathFamily::Kind::Schroeder:
        return SchroederPath::parse(word);
    case PathFamily::Kind::LittleSchroeder:
        return LittleSchroederPath::parse(word);
    case PathFamily::Kind::TPath:
        return TPath::parse(word);
    }
    throw ParseError("bad family tag");
}

bool in_family(const DyckPath& path, const PathFamily& family) {
    switch (family.kind) {
    case PathFamily::Kind::Dyck:
    case PathFamily::Kind::Schroeder:
    case PathFamily::Kind::LittleSchroeder:
        return true; // every Dyck path embeds in the Schroeder families
    case PathFamily::Kind::BoundedAscent: {
        for (const Ascent& a : ascents(path)) {
            if (a.length > family.bound) return false;
        }
        return true;
    }
    case PathFamily::Kind::Fibonacci:
    case PathFamily::Kind::FibonacciFree: {
        const auto& steps = path.steps();
        std::size_t i = 0;
        while (i < steps.size()) {
            std::size_t a = 0;
            while (i + a < steps.size() && steps[i + a] == DyckStep::U) ++a;
            if (a == 0) return false;
            if (family.kind == PathFamily::Kind::Fibonacci &&
                a > static_cast<std::size_t>(family.bound)) {
                return false;
            }
            for (std::size_t j = 0; j < a; ++j) {
                if (i + a + j >= steps.size() || steps[i + a + j] != DyckStep::D) return false;
            }
            i += 2 * a;
        }
        return true;
    }
    case PathFamily::Kind::TPath:
        return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Enumeration (lexicographic, U < D < L and H < G < D)
// ---------------------------------------------------------------------------

namespace {

// Dyck-alphabet families share one generator; max_run bounds ascent lengths
// and pyramids_only restricts to pyramid concatenations.
void gen_dyck(int n, int max_run, bool pyramids_only, std::vector<DyckStep>& word,
              int ups, int downs, int run, std::vector<DyckPath>& out) {
    if (ups == n && downs == n) {
        out.push_back(DyckPath::from_steps(word));
        return;
    }
    if (pyramids_only) {
        // Inside a pyramid the descent is forced; at the axis a new pyramid
        // of any admissible size may start. Choosing larger sizes first keeps
        // the output lexicographic.
        if (ups == downs) {
            const int remaining = n - ups;
            for (int k = std::min(max_run, remaining); k >= 1; --k) {
                word.insert(word.end(), static_cast<std::size_t>(k), DyckStep::U);
                word.insert(word.end(), static_cast<std::size_t>(k), DyckStep::D);
                gen_dyck(n, max_run, true, word, ups + k, downs + k, 0, out);
                word.resize(word.size() - 2 * static_cast<std::size_t>(k));
            }
        }
        return;
    }
    if (ups < n && run < max_run) {
        word.push_back(DyckStep::U);
        gen_dyck(n, max_run, false, word, ups + 1, downs, run + 1, out);
        word.pop_back();
    }
    if (downs < ups) {
        word.push_back(DyckStep::D);
        gen_dyck(n, max_run, false, word, ups, downs + 1, 0, out);
        word.pop_back();
    }
}

void gen_schroeder(int span_left, int height, bool little, std::vector<SchroederStep>& word,
                   std::vector<SchroederPath>& out) {
    if (span_left == 0) {
        out.push_back(SchroederPath::from_steps(word));
        return;
    }
    if (span_left >= 1 && height + 1 <= span_left - 1) {
        word.push_back(SchroederStep::U);
        gen_schroeder(span_left - 1, height + 1, little, word, out);
        word.pop_back();
    }
    if (height >= 1) {
        word.push_back(SchroederStep::D);
        gen_schroeder(span_left - 1, height - 1, little, word, out);
        word.pop_back();
    }
    if (span_left >= 2 && height <= span_left - 2 && (!little || height >= 1)) {
        word.push_back(SchroederStep::L);
        gen_schroeder(span_left - 2, height, little, word, out);
        word.pop_back();
    }
}

void gen_t(int span_left, int height, std::vector<TStep>& word, std::vector<TPath>& out) {
    if (span_left == 0) {
        out.push_back(TPath::from_steps(word));
        return;
    }
    if (span_left >= 1 && height + 2 <= span_left - 1) {
        word.push_back(TStep::H);
        gen_t(span_left - 1, height + 2, word, out);
        word.pop_back();
    }
    if (span_left >= 2 && height + 1 <= span_left - 2) {
        word.push_back(TStep::G);
        gen_t(span_left - 2, height + 1, word, out);
        word.pop_back();
    }
    if (height >= 1) {
        word.push_back(TStep::D);
        gen_t(span_left - 1, height - 1, word, out);
        word.pop_back();
    }
}

} // namespace

std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    std::vector<DyckStep> word;
    gen_dyck(n, n == 0 ? 1 : n, false, word, 0, 0, 0, out);
    return out;
}

std::vector<DyckPath> enumerate_bounded_ascent(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    std::vector<DyckPath> out;
    std::vector<DyckStep> word;
    gen_dyck(n, m, false, word, 0, 0, 0, out);
    return out;
}

std::vector<DyckPath> enumerate_fibonacci(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    std::vector<DyckPath> out;
    std::vector<DyckStep> word;
    gen_dyck(n, m, true, word, 0, 0, 0, out);
    return out;
}

std::vector<DyckPath> enumerate_fibonacci_free(int n) {
    return enumerate_fibonacci(n, std::max(n, 1));
}

std::vector<SchroederPath> enumerate_schroeder(int n) {
    std::vector<SchroederPath> out;
    std::vector<SchroederStep> word;
    gen_schroeder(2 * n, 0, false, word, out);
    return out;
}

std::vector<LittleSchroederPath> enumerate_little_schroeder(int n) {
    std::vector<SchroederPath> raw;
    std::vector<SchroederStep> word;
    gen_schroeder(2 * n, 0, true, word, raw);
    std::vector<LittleSchroederPath> out;
    out.reserve(raw.size());
    for (SchroederPath& p : raw) out.emplace_back(std::move(p));
    return out;
}

std::vector<TPath> enumerate_t_paths(int n) {
    std::vector<TPath> out;
    std::vector<TStep> word;
    gen_t(3 * n, 0, word, out);
    return out;
}

std::vector<std::string> enumerate_family_words(int n, const PathFamily& family) {
    std::vector<std::string> words;
    auto collect = [&words](const auto& paths) {
        words.reserve(paths.size());
        for (const auto& p : paths) words.push_back(p.str());
    };
    switch (family.kind) {
    case PathFamily::Kind::Dyck: collect(enumerate_dyck(n)); break;
    case PathFamily::Kind::BoundedAscent: collect(enumerate_bounded_ascent(n, family.bound)); break;
    case PathFamily::Kind::Fibonacci: collect(enumerate_fibonacci(n, family.bound)); break;
    case PathFamily::Kind::FibonacciFree: collect(enumerate_fibonacci_free(n)); break;
    case PathFamily::Kind::Schroeder: collect(enumerate_schroeder(n)); break;
    case PathFamily::Kind::LittleSchroeder: collect(enumerate_little_schroeder(n)); break;
    case PathFamily::Kind::TPath: collect(enumerate_t_paths(n)); break;
    }
    return words;
}

// ---------------------------------------------------------------------------
// Pyramid-concatenation encodings
// ---------------------------------------------------------------------------

std::vector<bool> fibonacci_touch_bits(const DyckPath& path) {
    const auto& steps = path.steps();
    std::vector<int> sizes;
    std::size_t i = 0;
    while (i < steps.size()) {
        std::size_t a = 0;
        while (i + a < steps.size() && steps[i + a] == DyckStep::U) ++a;
        for (std::size_t j = 0; j < a; ++j) {
            if (i + a + j >= steps.size() || steps[i + a + j] != DyckStep::D) {
                throw NotAFibonacciPath("\"" + path.str() + "\" is not a concatenation of pyramids");
            }
        }
        sizes.push_back(static_cast<int>(a));
        i += 2 * a;
    }
    const int k = path.semilength();
    std::vector<bool> bits(k > 0 ? static_cast<std::size_t>(k - 1) : 0, false);
    int sum = 0;
    for (std::size_t t = 0; t + 1 < sizes.size(); ++t) {
        sum += sizes[t];
        bits[static_cast<std::size_t>(sum - 1)] = true;
    }
    return bits;
}

DyckPath fibonacci_from_bits(const std::vector<bool>& bits) {
    const int k = static_cast<int>(bits.size()) + 1;
    std::vector<DyckStep> steps;
    steps.reserve(2 * static_cast<std::size_t>(k));
    int prev = 0;
    auto emit = [&steps](int size) {
        steps.insert(steps.end(), static_cast<std::size_t>(size), DyckStep::U);
        steps.insert(steps.end(), static_cast<std::size_t>(size), DyckStep::D);
    };
    for (int i = 1; i < k; ++i) {
        if (bits[static_cast<std::size_t>(i - 1)]) {
            emit(i - prev);
            prev = i;
        }
    }
    emit(k - prev);
    return DyckPath::from_steps(std::move(steps));
}

} // namespace dyck
