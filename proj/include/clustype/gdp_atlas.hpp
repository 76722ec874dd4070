#ifndef CLUSTYPE_GDP_ATLAS_HPP
#define CLUSTYPE_GDP_ATLAS_HPP

// Rank-one Gorenstein del Pezzo surfaces with A-type singularities: the
// catalog, the surface-level cluster-type test, the decision procedure for
// pairs (X, B), and the contraction scripts between minimal resolutions.

#include "clustype/boundary_graph.hpp"
#include "clustype/error.hpp"
#include "clustype/figures.hpp"
#include "clustype/rational.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace clustype {

struct SingularityLabel {
    char family = 'A'; // 'A', 'D' or 'E'
    int rank = 1;

    friend auto operator<=>(const SingularityLabel&, const SingularityLabel&) = default;
};

using Singularities = std::vector<SingularityLabel>;

inline SingularityLabel make_label(char family, int rank)
{
    const bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4)
        || (family == 'E' && rank >= 6 && rank <= 8);
    if (!ok) {
        throw Error(ErrorKind::InvalidLabel, std::string(1, family) + std::to_string(rank) + " is not an ADE type");
    }
    return SingularityLabel{family, rank};
}

inline std::string to_string(const SingularityLabel& s)
{
    return std::string(1, s.family) + std::to_string(s.rank);
}

/// "smooth", or terms like "2A1+A3" with repeated labels grouped.
inline std::string to_string(Singularities sings)
{
    if (sings.empty()) {
        return "smooth";
    }
    std::sort(sings.begin(), sings.end());
    std::string out;
    for (std::size_t i = 0; i < sings.size();) {
        std::size_t j = i;
        while (j < sings.size() && sings[j] == sings[i]) ++j;
        if (!out.empty()) out += '+';
        if (j - i > 1) out += std::to_string(j - i);
        out += to_string(sings[i]);
        i = j;
    }
    return out;
}

/// Parses "smooth", "A4", "2A1+2A3", "A1 + A2 + A5", "E8".
inline Singularities parse_singularities(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s == "smooth" || s == "P2" || s == "0") {
        return {};
    }
    auto fail = [&]() -> Error { return Error(ErrorKind::ParseError, "cannot parse singularities '" + std::string(text) + "'"); };
    if (s.empty()) {
        throw fail();
    }
    Singularities out;
    std::size_t i = 0;
    auto read_int = [&](int& value) {
        const std::size_t start = i;
        value = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (i - start >= 3) throw fail();
            value = value * 10 + (s[i] - '0');
            ++i;
        }
        return i > start;
    };
    while (true) {
        int count = 1;
        int prefix = 0;
        if (read_int(prefix)) {
            if (prefix < 1) throw fail();
            count = prefix;
        }
        if (i >= s.size() || (s[i] != 'A' && s[i] != 'D' && s[i] != 'E')) {
            throw fail();
        }
        const char family = s[i++];
        int rank = 0;
        if (!read_int(rank)) {
            throw fail();
        }
        const auto label = make_label(family, rank);
        out.insert(out.end(), static_cast<std::size_t>(count), label);
        if (i == s.size()) break;
        if (s[i] != '+') throw fail();
        ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int total_rank(const Singularities& sings)
{
    int total = 0;
    for (const auto& s : sings) total += s.rank;
    return total;
}

inline bool all_a_type(const Singularities& sings)
{
    return std::all_of(sings.begin(), sings.end(), [](const SingularityLabel& s) { return s.family == 'A'; });
}

inline bool contains_a(const Singularities& sings, int n, std::size_t times = 1)
{
    return static_cast<std::size_t>(std::count(sings.begin(), sings.end(), SingularityLabel{'A', n})) >= times;
}

/// (-K_X)^2 = 9 - total rank for Picard rank one.
inline int volume_of(const Singularities& sings)
{
    const int r = total_rank(sings);
    if (r > 8) {
        throw Error(ErrorKind::RankTooLarge, "total rank " + std::to_string(r) + " exceeds 8");
    }
    return 9 - r;
}

struct SurfaceVerdict {
    bool cluster_type = false;
    int volume = 0;
    std::string reason;
};

inline SurfaceVerdict classify_surface(const Singularities& sings)
{
    const int vol = volume_of(sings);
    if (!all_a_type(sings)) {
        return {false, vol, "has a singularity of type D or E"};
    }
    if (vol > 1) {
        return {true, vol, "A-type singularities and volume " + std::to_string(vol) + " > 1"};
    }
    if (sings.size() <= 3) {
        return {true, vol, "A-type singularities, volume 1 and at most 3 singular points"};
    }
    return {false, vol, "volume 1 with " + std::to_string(sings.size()) + " singular points"};
}

// ---------------------------------------------------------------------------
// Pairs

enum class BoundaryKind { MultiComponent, NodalSmoothLocus, NodalAtA };

struct PairSpec {
    Singularities family;
    BoundaryKind kind = BoundaryKind::NodalSmoothLocus;
    int components = 2;                           // MultiComponent
    std::optional<std::pair<int, int>> corner_ranks; // MultiComponent with two components: A_n, A_m at B1 n B2
    int node_rank = 0;                            // NodalAtA
};

struct PairVerdict {
    bool cluster_type = false;
    std::optional<int> case_number; // empty when infeasible
    int volume = 0;
    std::string reason;

    bool infeasible() const noexcept { return !case_number.has_value(); }
};

/// vol > 2 (1/(n+1) + 1/(m+1)): the bound (B1 + B2)^2 forces when B1 and B2
/// meet at an A_n and an A_m point.
inline bool two_component_feasibility(int volume, int n, int m)
{
    if (n < 1 || m < 1) {
        throw Error(ErrorKind::InvalidSpec, "A_n ranks must be positive");
    }
    return rat(volume) > rat(2) * (rat(1, n + 1) + rat(1, m + 1));
}

inline PairVerdict decide_pair(const PairSpec& spec)
{
    const int vol = volume_of(spec.family);
    if (!all_a_type(spec.family)) {
        throw Error(ErrorKind::NotAType, to_string(spec.family) + " has a singularity of type D or E");
    }
    const std::string v = std::to_string(vol);
    switch (spec.kind) {
    case BoundaryKind::MultiComponent: {
        if (spec.components < 2) {
            throw Error(ErrorKind::InvalidSpec, "a multi-component boundary has at least 2 components");
        }
        if (spec.corner_ranks) {
            const auto [n, m] = *spec.corner_ranks;
            const bool present = n == m ? contains_a(spec.family, n, 2) : contains_a(spec.family, n) && contains_a(spec.family, m);
            if (n < 1 || m < 1 || !present) {
                throw Error(ErrorKind::InconsistentSpec,
                    "corner points A" + std::to_string(n) + ", A" + std::to_string(m) + " not in " + to_string(spec.family));
            }
        }
        if (vol == 1 && spec.components == 2) {
            if (!spec.corner_ranks) {
                throw Error(ErrorKind::InvalidSpec, "two components on a volume-1 surface need the corner ranks");
            }
            const auto [n, m] = *spec.corner_ranks;
            if (!two_component_feasibility(vol, n, m)) {
                return {false, std::nullopt, vol,
                    "(B1+B2)^2 = 1 cannot exceed 2(1/" + std::to_string(n + 1) + " + 1/" + std::to_string(m + 1) + ")"};
            }
        }
        if (vol == 1 && spec.components >= 3 && spec.family.size() == 4) {
            return {false, std::nullopt, vol, "three or more components would make the pair toric"};
        }
        return {true, 1, vol, "boundary has " + std::to_string(spec.components) + " components"};
    }
    case BoundaryKind::NodalSmoothLocus:
        return {vol >= 5, 2, vol, "nodal boundary in the smooth locus, volume " + v + (vol >= 5 ? " >= 5" : " < 5")};
    case BoundaryKind::NodalAtA: {
        const int n = spec.node_rank;
        if (n < 1 || !contains_a(spec.family, n)) {
            throw Error(ErrorKind::InconsistentSpec, "node at A" + std::to_string(n) + " but the surface has " + to_string(spec.family));
        }
        const std::string an = "A" + std::to_string(n);
        if (vol >= 3) {
            return {true, 3, vol, "node at " + an + ", volume " + v + " >= 3"};
        }
        if (vol == 2) {
            return {n >= 2, 4, vol, "node at " + an + ", volume 2" + (n >= 2 ? ", n >= 2" : ", n < 2")};
        }
        return {n >= 4, 5, vol, "node at " + an + ", volume 1" + (n >= 4 ? ", n >= 4" : ", n < 4")};
    }
    }
    throw Error(ErrorKind::InvalidSpec, "unknown boundary kind");
}

// ---------------------------------------------------------------------------
// Catalog

struct GdpFamily {
    Singularities singularities;
    int volume = 0;
    bool toric = false;
    bool cluster_type = false;
    std::optional<BoundaryGraph> resolution_graph;
    std::optional<std::string> source_figure;
};

inline std::vector<GdpFamily> catalog()
{
    struct Row {
        const char* sings;
        bool toric;
        BoundaryGraph (*graph)();
        const char* figure;
    };
    const Row rows[] = {
        {"smooth", true, nullptr, nullptr},
        {"A1", true, nullptr, nullptr},
        {"A1+A2", true, nullptr, nullptr},
        {"2A1+A3", true, nullptr, nullptr},
        {"3A2", true, nullptr, nullptr},
        {"A4", false, nullptr, nullptr},
        {"A7", false, &figures::y_a7, "A7->A1A5"},
        {"A1+A5", false, nullptr, nullptr},
        {"A2+A5", false, nullptr, nullptr},
        {"A1+2A3", false, nullptr, nullptr},
        {"A8", false, &figures::y_a8, "A8->A2A5"},
        {"A1+A7", false, &figures::y_a1_a7, "A1A7->A12A3"},
        {"2A4", false, &figures::y_2a4, "2A4->A4"},
        {"A1+A2+A5", false, &figures::y_a1_a2_a5, "A1A2A5"},
        {"2A1+2A3", false, nullptr, nullptr},
        {"4A2", false, nullptr, nullptr},
    };
    std::vector<GdpFamily> out;
    for (const auto& r : rows) {
        GdpFamily f;
        f.singularities = parse_singularities(r.sings);
        f.volume = volume_of(f.singularities);
        f.toric = r.toric;
        f.cluster_type = classify_surface(f.singularities).cluster_type;
        if (r.graph != nullptr) f.resolution_graph = r.graph();
        if (r.figure != nullptr) f.source_figure = r.figure;
        out.push_back(std::move(f));
    }
    return out;
}

struct ContractionResult {
    BoundaryGraph before;
    BoundaryGraph after;
    std::vector<VertexId> script;
    BoundaryGraph expected_after;
};

/// Runs the scripted blow-downs of a contraction figure.
inline ContractionResult apply_contraction_script(std::string_view tag)
{
    for (auto& fig : figures::contraction_figures()) {
        if (fig.tag != tag) {
            continue;
        }
        BoundaryGraph g = fig.before;
        for (const auto& id : fig.script) {
            g = blowdown(g, id);
        }
        return {std::move(fig.before), std::move(g), std::move(fig.script), std::move(fig.expected_after)};
    }
    throw Error(ErrorKind::UnknownFixture, "no contraction figure '" + std::string(tag) + "'");
}

} // namespace clustype

#endif // CLUSTYPE_GDP_ATLAS_HPP
