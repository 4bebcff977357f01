// Copyright 2026 The gselc Authors
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

#ifndef GSELC_VERTEX_SET_H
#define GSELC_VERTEX_SET_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gselc {

/// Fixed-universe subset of {0, ..., size-1}, stored as packed 64-bit words.
///
/// Doubles as a GF(2) row vector: `^=` is vector addition and `&` followed by
/// `count() % 2` is the inner product.
class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(size_t universe);
    VertexSet(size_t universe, std::initializer_list<size_t> members);
    VertexSet(size_t universe, const std::vector<size_t> &members);

    /// Set whose membership bits are the low bits of `bits` (bit i <-> vertex i).
    static VertexSet from_bits(size_t universe, uint64_t bits);

    size_t universe() const noexcept {
        return universe_;
    }
    bool contains(size_t v) const;
    void insert(size_t v);
    void erase(size_t v);
    void flip(size_t v);

    size_t count() const noexcept;
    bool empty() const noexcept;
    std::vector<size_t> members() const;

    /// Low 64 membership bits; only meaningful when universe() <= 64.
    uint64_t low_bits() const noexcept;

    VertexSet &operator^=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    VertexSet &operator|=(const VertexSet &other);
    /// Removes every member of `other`.
    VertexSet &subtract(const VertexSet &other);

    friend VertexSet operator^(VertexSet a, const VertexSet &b) {
        return a ^= b;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) {
        return a &= b;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) {
        return a |= b;
    }

    bool operator==(const VertexSet &other) const = default;

   private:
    void check_index(size_t v) const;
    void check_same_universe(const VertexSet &other) const;

    size_t universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace gselc

#endif
