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

#include "gselc/quadratic_form.h"

#include <bit>
#include <sstream>
#include <string>

#include "gselc/error.h"

namespace gselc {

QuadraticForm::QuadraticForm(size_t n) : upper_(n, VertexSet(n)), linear_(n) {
}

QuadraticForm QuadraticForm::from_graph(const Graph &g) {
    QuadraticForm form(g.num_vertices());
    for (const auto &[a, b] : g.edges()) {
        form.upper_[a].insert(b);
    }
    return form;
}

QuadraticForm::GraphPart QuadraticForm::to_graph() const {
    std::vector<Edge> edges;
    for (size_t i = 0; i < upper_.size(); i++) {
        for (size_t j : upper_[i].members()) {
            edges.emplace_back(i, j);
        }
    }
    return {Graph::from_edges(num_variables(), edges), linear_};
}

void QuadraticForm::check_variable(size_t i) const {
    if (i >= num_variables()) {
        throw Error(ErrorKind::OutOfRange,
                    "variable " + std::to_string(i) + " out of range for form in " +
                        std::to_string(num_variables()) + " variables");
    }
}

void QuadraticForm::check_same_size(const QuadraticForm &other) const {
    if (other.num_variables() != num_variables()) {
        throw Error(ErrorKind::SizeMismatch, "forms in " + std::to_string(num_variables()) + " and " +
                                                 std::to_string(other.num_variables()) + " variables");
    }
}

bool QuadraticForm::has_term(size_t i, size_t j) const {
    check_variable(i);
    check_variable(j);
    if (i == j) {
        return false;
    }
    if (i > j) {
        std::swap(i, j);
    }
    return upper_[i].contains(j);
}

bool QuadraticForm::has_linear(size_t i) const {
    check_variable(i);
    return linear_.contains(i);
}

size_t QuadraticForm::num_quadratic_terms() const noexcept {
    size_t total = 0;
    for (const auto &row : upper_) {
        total += row.count();
    }
    return total;
}

VertexSet QuadraticForm::neighborhood(size_t a) const {
    check_variable(a);
    VertexSet out = upper_[a];
    for (size_t i = 0; i < a; i++) {
        if (upper_[i].contains(a)) {
            out.insert(i);
        }
    }
    return out;
}

bool QuadraticForm::evaluate(const VertexSet &x) const {
    if (x.universe() != num_variables()) {
        throw Error(ErrorKind::LengthMismatch, "input has " + std::to_string(x.universe()) +
                                                   " bits, form has " + std::to_string(num_variables()) +
                                                   " variables");
    }
    size_t parity = (linear_ & x).count();
    for (size_t i : x.members()) {
        parity += (upper_[i] & x).count();
    }
    return parity & 1;
}

bool QuadraticForm::evaluate(uint64_t basis_index) const {
    if (num_variables() > 64) {
        throw Error(ErrorKind::TooLarge, "basis-index evaluation needs at most 64 variables");
    }
    int parity = std::popcount(linear_.low_bits() & basis_index);
    uint64_t rest = basis_index;
    while (rest != 0) {
        size_t i = static_cast<size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (i >= upper_.size()) {
            break;
        }
        parity += std::popcount(upper_[i].low_bits() & basis_index);
    }
    return parity & 1;
}

QuadraticForm QuadraticForm::apply_lc_update(size_t a, bool include_linear) const {
    VertexSet nbrs = neighborhood(a);
    QuadraticForm out = *this;
    out.add_pairs(nbrs);
    if (include_linear) {
        out.linear_ ^= nbrs;
    }
    return out;
}

void QuadraticForm::toggle_term(size_t i, size_t j) {
    check_variable(i);
    check_variable(j);
    if (i == j) {
        // x_i x_i = x_i over GF(2).
        linear_.flip(i);
        return;
    }
    if (i > j) {
        std::swap(i, j);
    }
    upper_[i].flip(j);
}

void QuadraticForm::toggle_linear(size_t i) {
    check_variable(i);
    linear_.flip(i);
}

void QuadraticForm::add_products(const VertexSet &left, const VertexSet &right) {
    if (!(left & right).empty()) {
        throw Error(ErrorKind::SizeMismatch, "add_products requires disjoint variable sets");
    }
    for (size_t i : left.members()) {
        for (size_t j : right.members()) {
            toggle_term(i, j);
        }
    }
}

void QuadraticForm::add_pairs(const VertexSet &set) {
    auto members = set.members();
    for (size_t k = 0; k < members.size(); k++) {
        for (size_t l = k + 1; l < members.size(); l++) {
            upper_[members[k]].flip(members[l]);
        }
    }
}

QuadraticForm &QuadraticForm::operator+=(const QuadraticForm &other) {
    check_same_size(other);
    for (size_t i = 0; i < upper_.size(); i++) {
        upper_[i] ^= other.upper_[i];
    }
    linear_ ^= other.linear_;
    return *this;
}

std::string QuadraticForm::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) {
            out << " + ";
        }
        first = false;
    };
    for (size_t i = 0; i < upper_.size(); i++) {
        for (size_t j : upper_[i].members()) {
            sep();
            out << 'x' << i << "*x" << j;
        }
    }
    for (size_t i : linear_.members()) {
        sep();
        out << 'x' << i;
    }
    if (first) {
        return "0";
    }
    return out.str();
}

namespace {

struct JoinedCores {
    size_t n;
    size_t c1;
    size_t c2;
    VertexSet b1;
    VertexSet b2;
};

JoinedCores join_cores(const Graph &g1, size_t c1, const Graph &g2, size_t c2) {
    size_t n1 = g1.num_vertices();
    size_t n = n1 + g2.num_vertices();
    VertexSet b1(n);
    for (size_t v : g1.neighborhood(c1).members()) {
        b1.insert(v);
    }
    VertexSet b2(n);
    for (size_t v : g2.neighborhood(c2).members()) {
        b2.insert(v + n1);
    }
    return {n, c1, n1 + c2, b1, b2};
}

}  // namespace

QuadraticForm elc_final_form(const Graph &g1, size_t c1, const Graph &g2, size_t c2) {
    JoinedCores j = join_cores(g1, c1, g2, c2);
    QuadraticForm form(j.n);
    size_t n1 = g1.num_vertices();
    for (const auto &[a, b] : g1.edges()) {
        if (a != c1 && b != c1) {
            form.toggle_term(a, b);
        }
    }
    for (const auto &[a, b] : g2.edges()) {
        if (a != c2 && b != c2) {
            form.toggle_term(a + n1, b + n1);
        }
    }
    VertexSet core1(j.n, {j.c1});
    VertexSet core2(j.n, {j.c2});
    form.toggle_term(j.c1, j.c2);
    form.add_products(core1, j.b2);
    form.add_products(core2, j.b1);
    form.add_products(j.b1, j.b2);
    return form;
}

ElcDerivation derive_elc(const Graph &g1, size_t c1, const Graph &g2, size_t c2) {
    JoinedCores j = join_cores(g1, c1, g2, c2);
    size_t n1 = g1.num_vertices();
    VertexSet core1(j.n, {j.c1});
    VertexSet core2(j.n, {j.c2});
    VertexSet both = j.b1 | j.b2;

    ElcDerivation d;
    d.q1 = QuadraticForm::from_graph(disjoint_union(g1, Graph(g2.num_vertices())));
    d.q2 = QuadraticForm::from_graph(disjoint_union(Graph(n1), g2));
    d.core_edge = QuadraticForm(j.n);
    d.core_edge.toggle_term(j.c1, j.c2);

    d.r1 = QuadraticForm(j.n);
    d.r1.add_pairs(j.b1);
    d.r1.add_products(core2, j.b1);

    d.r2 = QuadraticForm(j.n);
    d.r2.add_products(core2, j.b1);
    d.r2.add_products(core1, both);
    d.r2.add_pairs(j.b2);
    d.r2.add_products(j.b1, j.b2);

    d.r3 = QuadraticForm(j.n);
    d.r3.add_products(core2, both);
    d.r3.add_products(core1, both);
    d.r3.add_products(j.b1, j.b2);

    QuadraticForm current = d.q1 + d.q2 + d.core_edge;
    for (size_t vertex : {j.c1, j.c2, j.c1}) {
        QuadraticForm next = current.apply_lc_update(vertex, false);
        d.increments.push_back(next + current);
        current = std::move(next);
    }
    d.composed = d.q1 + d.q2 + d.core_edge + d.r3;
    return d;
}

}  // namespace gselc
