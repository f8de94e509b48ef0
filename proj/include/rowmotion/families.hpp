#pragma once

// Constructors for the poset families: rectangles, shifted staircases, root
// posets, minuscule posets and the small counterexamples.

#include "rowmotion/poset.hpp"

#include <string>
#include <vector>

namespace rowmotion {

// Poset on a set of grid cells ordered by (i,j) <= (i',j') along unit steps
// down or right inside the set. Cells are sorted lexicographically first.
Poset grid_poset(std::vector<Coord> cells, std::string name);

Poset chain(int n);
Poset antichain_poset(int n);
// [a] x [b] with cells (i,j), 1 <= i <= a, 1 <= j <= b.
Poset rectangle(int a, int b);
// {(i,j) : 1 <= i <= j <= n}.
Poset shifted_staircase(int n);
// Type A root poset {(i,j) : 1 <= i,j <= n, i+j >= n+1}.
Poset root_poset_A(int n);
// Type B root poset {(i,j) : 1 <= i <= j <= 2n-1, i+j >= 2n}.
Poset root_poset_B(int n);
// Chain x_1..x_{n-1}, incomparable y_1, y_2, chain z_{n-1}..z_1 (elements in that order).
Poset double_tailed_diamond(int n);
Poset minuscule_E6();
Poset minuscule_E7();
// {(i,j) : 1 <= i <= a+b-1, b <= j <= a+b-1, i+j >= a+b, i <= j}.
Poset trapezoid(int a, int b);
// V x [n], where V is a bottom element under two incomparable tops.
Poset chain_of_vs(int n);

using CartanMatrix = std::vector<std::vector<int>>;
// Cartan matrix of a finite type: 'A' (n>=1), 'B' (n>=2), 'C' (n>=2),
// 'D' (n>=4), 'E' (n=6,7,8). Bourbaki node numbering, zero-based.
CartanMatrix cartan_matrix(char type, int n);
// Positive roots ordered by the root order; covers differ by a simple root.
// Entries a_ij = <alpha_i^vee, alpha_j>. Throws std::invalid_argument on a
// malformed or infinite-type matrix.
Poset root_poset_from_cartan(const CartanMatrix& C, std::string name = "root poset");
// Positive roots whose coefficient on simple root `node` equals 1.
Poset root_layer_from_cartan(const CartanMatrix& C, int node, std::string name = "root layer");

// Minuscule posets with at most `up_to_size` elements, one per isomorphism
// class: rectangles a <= b, staircases n >= 3, diamonds n >= 4, E6, E7.
std::vector<Poset> all_minuscule(int up_to_size);

// A poset P together with its double D, where P's cells (i,j) correspond to
// the symmetric pairs {(i,j),(j,i)} of D.
struct Folding {
  Poset quotient;
  Poset doubled;
  // The symmetric ideal of the doubled poset covering an ideal of the quotient.
  ElementSet unfold(const ElementSet& ideal) const;
};

// shifted_staircase(n) inside rectangle(n,n).
Folding staircase_folding(int n);
// root_poset_B(n) inside root_poset_A(2n-1).
Folding rootB_folding(int n);

// True when every element covers at most two and is covered by at most two.
bool has_at_most_two_covers(const Poset& P);

// Parses "rect:a,b", "sstair:n", "rootA:n", "rootB:n", "dtd:n", "E6", "E7",
// "trap:a,b", "vchain:n", "rootD:n", "chain:n", "antichain:n" and
// "file:path.json". Throws std::invalid_argument on malformed input.
Poset parse_family(const std::string& spec);

}  // namespace rowmotion
