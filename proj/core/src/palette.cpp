#include <acolor/error.hpp>
#include <acolor/palette.hpp>

#include <algorithm>
#include <iterator>
#include <string>

namespace acolor {

ColorSet::ColorSet(std::initializer_list<Color> colors) : colors_(colors)
{
    std::ranges::sort(colors_);
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

auto ColorSet::contains(Color c) const -> bool
{
    return std::ranges::binary_search(colors_, c);
}

void ColorSet::insert(Color c)
{
    auto it = std::ranges::lower_bound(colors_, c);
    if (it == colors_.end() || *it != c)
        colors_.insert(it, c);
}

void ColorSet::erase(Color c)
{
    auto it = std::ranges::lower_bound(colors_, c);
    if (it != colors_.end() && *it == c)
        colors_.erase(it);
}

auto ColorSet::united(const ColorSet & other) const -> ColorSet
{
    ColorSet result;
    std::ranges::set_union(colors_, other.colors_, std::back_inserter(result.colors_));
    return result;
}

auto ColorSet::intersected(const ColorSet & other) const -> ColorSet
{
    ColorSet result;
    std::ranges::set_intersection(colors_, other.colors_, std::back_inserter(result.colors_));
    return result;
}

auto ColorSet::minus(const ColorSet & other) const -> ColorSet
{
    ColorSet result;
    std::ranges::set_difference(colors_, other.colors_, std::back_inserter(result.colors_));
    return result;
}

auto ColorSet::complement(int palette) const -> ColorSet
{
    ColorSet result;
    for (Color c = 1; c <= palette; ++c)
        if (! contains(c))
            result.colors_.push_back(c);
    return result;
}

void ColorMultiset::add(Color c, int times)
{
    if (times <= 0)
        return;
    mult_[c] += times;
    cardinality_ += times;
}

void ColorMultiset::add_all(const ColorSet & colors)
{
    for (Color c : colors)
        add(c);
}

auto ColorMultiset::multiplicity(Color c) const -> int
{
    auto it = mult_.find(c);
    return it == mult_.end() ? 0 : it->second;
}

auto ColorMultiset::support() const -> ColorSet
{
    ColorSet result;
    for (const auto & [c, _] : mult_)
        result.insert(c);
    return result;
}

auto ColorMultiset::join(const ColorMultiset & other) const -> ColorMultiset
{
    ColorMultiset result = *this;
    for (const auto & [c, k] : other.mult_)
        result.add(c, k);
    return result;
}

auto ColorMultiset::without(const ColorSet & colors) const -> ColorMultiset
{
    ColorMultiset result;
    for (const auto & [c, k] : mult_)
        if (! colors.contains(c))
            result.add(c, k);
    return result;
}

auto multiset_diff(const ColorMultiset & s, const ColorSet & t) -> ColorMultiset
{
    return s.without(t);
}

PartialColoring::PartialColoring(std::shared_ptr<const Graph> host, int palette) :
    host_(std::move(host)),
    palette_(palette)
{
    if (! host_)
        throw Error(ErrorKind::BadParams, "coloring without host graph");
    if (palette_ < 0)
        throw Error(ErrorKind::ColorOutOfRange, "negative palette size");
    slots_.resize(static_cast<std::size_t>(host_->vertex_count()));
    for (Vertex x = 0; x < host_->vertex_count(); ++x)
        slots_[x].resize(static_cast<std::size_t>(host_->degree(x)));
}

PartialColoring::PartialColoring(const Graph & host, int palette) :
    PartialColoring(std::make_shared<const Graph>(host), palette)
{
}

auto PartialColoring::color(Vertex x, Vertex y) const -> std::optional<Color>
{
    auto i = host_->slot(x, y);
    return slots_[x][i];
}

auto PartialColoring::neighbor_with(Vertex x, Color c) const -> std::optional<Vertex>
{
    const auto & row = slots_.at(static_cast<std::size_t>(x));
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == c)
            return host_->neighbors(x)[i];
    return std::nullopt;
}

auto PartialColoring::assigned_degree(Vertex x) const -> int
{
    return static_cast<int>(std::ranges::count_if(slots_.at(static_cast<std::size_t>(x)),
        [](const auto & s) { return s.has_value(); }));
}

void PartialColoring::assign(Edge e, Color c)
{
    auto ia = host_->slot(e.a, e.b);
    auto ib = host_->slot(e.b, e.a);
    if (c < 1 || c > palette_)
        throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c) + " outside 1.." + std::to_string(palette_));
    for (Vertex end : {e.a, e.b}) {
        auto w = neighbor_with(end, c);
        if (w && *w != e.other(end))
            throw Error(ErrorKind::ImproperAssignment,
                "color " + std::to_string(c) + " already on edge " + std::to_string(end) + "-" + std::to_string(*w));
    }
    if (! slots_[e.a][ia])
        ++assigned_;
    slots_[e.a][ia] = c;
    slots_[e.b][ib] = c;
}

void PartialColoring::unassign(Edge e)
{
    auto ia = host_->slot(e.a, e.b);
    auto ib = host_->slot(e.b, e.a);
    if (slots_[e.a][ia])
        --assigned_;
    slots_[e.a][ia].reset();
    slots_[e.b][ib].reset();
}

auto PartialColoring::assigned_edges() const -> std::vector<std::pair<Edge, Color>>
{
    std::vector<std::pair<Edge, Color>> result;
    result.reserve(assigned_);
    for (Vertex x = 0; x < host_->vertex_count(); ++x) {
        auto nbrs = host_->neighbors(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (x < nbrs[i] && slots_[x][i])
                result.emplace_back(Edge{x, nbrs[i]}, *slots_[x][i]);
    }
    return result;
}

auto PartialColoring::distinct_colors() const -> int
{
    ColorSet used;
    for (const auto & row : slots_)
        for (const auto & s : row)
            if (s)
                used.insert(*s);
    return static_cast<int>(used.size());
}

auto PartialColoring::with_host(std::shared_ptr<const Graph> host) const -> PartialColoring
{
    PartialColoring result(std::move(host), palette_);
    for (const auto & [e, c] : assigned_edges())
        result.assign(e, c);
    return result;
}

auto PartialColoring::is_proper() const -> bool
{
    for (const auto & row : slots_) {
        std::vector<Color> seen;
        for (const auto & s : row)
            if (s)
                seen.push_back(*s);
        std::ranges::sort(seen);
        if (std::ranges::adjacent_find(seen) != seen.end())
            return false;
    }
    return true;
}

auto operator==(const PartialColoring & lhs, const PartialColoring & rhs) -> bool
{
    return lhs.palette_ == rhs.palette_ && *lhs.host_ == *rhs.host_ && lhs.slots_ == rhs.slots_;
}

auto colors_at(const PartialColoring & coloring, Vertex u) -> ColorSet
{
    ColorSet result;
    for (Vertex w : coloring.host().neighbors(u))
        if (auto c = coloring.color(u, w))
            result.insert(*c);
    return result;
}

auto seen_from(const PartialColoring & coloring, Vertex a, Vertex b) -> ColorSet
{
    auto own = coloring.color(a, b);
    auto result = colors_at(coloring, b);
    if (own)
        result.erase(*own);
    return result;
}

auto neighbor_multiset(const PartialColoring & coloring, Vertex v, std::span<const Vertex> exclude) -> ColorMultiset
{
    ColorMultiset result;
    for (Vertex w : coloring.host().neighbors(v))
        if (std::ranges::find(exclude, w) == exclude.end())
            result.add_all(seen_from(coloring, v, w));
    return result;
}

}
