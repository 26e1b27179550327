// Copyright 2026 The remote-vm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rvm {

using Vertex = std::uint32_t;

/// Fixed-universe bit set of vertex ids. All binary operators require both
/// operands to share the same universe size.
class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {
    }
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) {
            insert(v);
        }
    }
    static VertexSet from_vector(std::size_t universe, const std::vector<Vertex> &members) {
        VertexSet s(universe);
        for (Vertex v : members) {
            s.insert(v);
        }
        return s;
    }
    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; v++) {
            s.insert(static_cast<Vertex>(v));
        }
        return s;
    }

    std::size_t universe() const {
        return universe_;
    }

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1) != 0;
    }
    void insert(Vertex v) {
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(Vertex v) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void flip(Vertex v) {
        words_[v >> 6] ^= std::uint64_t{1} << (v & 63);
    }
    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool empty() const {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    bool intersects(const VertexSet &other) const {
        for (std::size_t i = 0; i < words_.size(); i++) {
            if ((words_[i] & other.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }
    bool is_subset_of(const VertexSet &other) const {
        for (std::size_t i = 0; i < words_.size(); i++) {
            if ((words_[i] & ~other.words_[i]) != 0) {
                return false;
            }
        }
        return true;
    }
    /// Smallest member; universe() when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); i++) {
            if (words_[i] != 0) {
                return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
            }
        }
        return static_cast<Vertex>(universe_);
    }

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t i = 0; i < words_.size(); i++) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet &operator|=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); i++) {
            words_[i] |= o.words_[i];
        }
        return *this;
    }
    VertexSet &operator&=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); i++) {
            words_[i] &= o.words_[i];
        }
        return *this;
    }
    VertexSet &operator^=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= o.words_[i];
        }
        return *this;
    }
    /// Set difference.
    VertexSet &operator-=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); i++) {
            words_[i] &= ~o.words_[i];
        }
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet &b) {
        return a |= b;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) {
        return a &= b;
    }
    friend VertexSet operator^(VertexSet a, const VertexSet &b) {
        return a ^= b;
    }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) {
        return a -= b;
    }
    bool operator==(const VertexSet &other) const = default;

   private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rvm
