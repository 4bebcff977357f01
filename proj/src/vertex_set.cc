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

#include "gselc/vertex_set.h"

#include <bit>
#include <string>

#include "gselc/error.h"

namespace gselc {

namespace {

size_t word_count(size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(size_t universe) : universe_(universe), words_(word_count(universe), 0) {
}

VertexSet::VertexSet(size_t universe, std::initializer_list<size_t> members) : VertexSet(universe) {
    for (size_t v : members) {
        insert(v);
    }
}

VertexSet::VertexSet(size_t universe, const std::vector<size_t> &members) : VertexSet(universe) {
    for (size_t v : members) {
        insert(v);
    }
}

VertexSet VertexSet::from_bits(size_t universe, uint64_t bits) {
    VertexSet result(universe);
    if (universe == 0) {
        return result;
    }
    if (universe < 64) {
        bits &= (uint64_t{1} << universe) - 1;
    }
    result.words_[0] = bits;
    return result;
}

void VertexSet::check_index(size_t v) const {
    if (v >= universe_) {
        throw Error(ErrorKind::OutOfRange,
                    "vertex " + std::to_string(v) + " not in universe of size " + std::to_string(universe_));
    }
}

void VertexSet::check_same_universe(const VertexSet &other) const {
    if (other.universe_ != universe_) {
        throw Error(ErrorKind::SizeMismatch, "vertex sets over universes of size " + std::to_string(universe_) +
                                                 " and " + std::to_string(other.universe_));
    }
}

bool VertexSet::contains(size_t v) const {
    check_index(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::insert(size_t v) {
    check_index(v);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
}

void VertexSet::erase(size_t v) {
    check_index(v);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
}

void VertexSet::flip(size_t v) {
    check_index(v);
    words_[v >> 6] ^= uint64_t{1} << (v & 63);
}

size_t VertexSet::count() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const noexcept {
    for (uint64_t w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> VertexSet::members() const {
    std::vector<size_t> out;
    out.reserve(count());
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w != 0) {
            out.push_back(k * 64 + static_cast<size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

uint64_t VertexSet::low_bits() const noexcept {
    return words_.empty() ? 0 : words_[0];
}

VertexSet &VertexSet::operator^=(const VertexSet &other) {
    check_same_universe(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
    check_same_universe(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
    check_same_universe(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

VertexSet &VertexSet::subtract(const VertexSet &other) {
    check_same_universe(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= ~other.words_[k];
    }
    return *this;
}

}  // namespace gselc
