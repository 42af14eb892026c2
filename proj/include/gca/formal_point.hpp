#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

/// A declared symbolic point. The index is its rank in the declaration
/// order, which is the total order used everywhere (bracket
/// canonicalization, monomial sorting, rendering).
struct FormalPoint {
    int index = -1;

    auto operator<=>(const FormalPoint&) const = default;
};

/// Registry of declared points. Declaration order is the canonical point
/// order; names are unique. Point names follow the expression language:
/// one letter (not 'v', which is the join operator) plus zero or more
/// primes, so "b" and "b'" are unrelated symbols.
class PointSet {
public:
    static bool valid_name(std::string_view name) {
        if (name.empty()) return false;
        const char c = name.front();
        const bool letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        if (!letter || c == 'v') return false;
        return std::all_of(name.begin() + 1, name.end(), [](char p) { return p == '\''; });
    }

    FormalPoint declare(std::string name) {
        if (!valid_name(name))
            throw InvalidExpressionError("invalid point name '" + name + "'");
        if (find(name))
            throw DuplicatePointError("point '" + name + "' already declared");
        names_.push_back(std::move(name));
        return FormalPoint{static_cast<int>(names_.size()) - 1};
    }

    std::optional<FormalPoint> find(std::string_view name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return FormalPoint{i};
        return std::nullopt;
    }

    FormalPoint require(std::string_view name) const {
        if (auto p = find(name)) return *p;
        throw UnknownPointError("unknown point '" + std::string(name) + "'");
    }

    const std::string& name(FormalPoint p) const { return names_.at(static_cast<std::size_t>(p.index)); }

    int size() const { return static_cast<int>(names_.size()); }

    const std::vector<std::string>& names() const { return names_; }

    /// The six hexagon points in their canonical order a < b < c < a' < b' < c'.
    static PointSet pappus_points() {
        PointSet s;
        for (const char* n : {"a", "b", "c", "a'", "b'", "c'"}) s.declare(n);
        return s;
    }

private:
    std::vector<std::string> names_;
};

/// A bijection of the declared points onto themselves, stored as the
/// image table image()[i] = sigma(point i).
class Permutation {
public:
    static Permutation identity(int n) {
        Permutation p;
        p.image_.resize(static_cast<std::size_t>(n));
        std::iota(p.image_.begin(), p.image_.end(), 0);
        return p;
    }

    static Permutation from_images(std::vector<int> images) {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
                throw InvalidExpressionError("permutation image table is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        Permutation p;
        p.image_ = std::move(images);
        return p;
    }

    /// The transposition (i j) on n points.
    static Permutation transposition(int n, FormalPoint i, FormalPoint j) {
        Permutation p = identity(n);
        std::swap(p.image_[static_cast<std::size_t>(i.index)], p.image_[static_cast<std::size_t>(j.index)]);
        return p;
    }

    /// All n! permutations in lexicographic order of their image tables
    /// (the identity comes first).
    static std::vector<Permutation> all(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 0);
        std::vector<Permutation> out;
        do {
            Permutation p;
            p.image_ = images;
            out.push_back(std::move(p));
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }

    int size() const { return static_cast<int>(image_.size()); }

    FormalPoint operator()(FormalPoint p) const { return FormalPoint{image_.at(static_cast<std::size_t>(p.index))}; }

    /// this ∘ other: apply `other` first, then this.
    Permutation compose(const Permutation& other) const {
        std::vector<int> images(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i)
            images[i] = image_[static_cast<std::size_t>(other.image_[i])];
        return from_images(std::move(images));
    }

    const std::vector<int>& image() const { return image_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

} // namespace gca
