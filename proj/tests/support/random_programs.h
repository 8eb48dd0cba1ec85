#pragma once

#include <random>
#include <string>
#include <vector>

#include "axplan/logic_program.h"

namespace axplan::testing {

struct ProgramShape {
    int num_atoms = 6;
    int num_rules = 8;
    int max_body = 3;
    bool allow_negation = true;
    bool stratified = false;
};

// Seeded generator so failures replay. Stratified mode draws a level per atom
// first and only emits bodies that respect it.
inline LogicProgram random_program(std::mt19937 &rng, const ProgramShape &shape) {
    LogicProgram p;
    for (int i = 0; i < shape.num_atoms; ++i)
        p.add_atom("x" + std::to_string(i));

    std::vector<int> level(shape.num_atoms, 1);
    if (shape.stratified) {
        std::uniform_int_distribution<int> level_dist(1, std::max(1, shape.num_atoms / 2));
        for (int &l : level)
            l = level_dist(rng);
    }

    std::uniform_int_distribution<int> atom_dist(0, shape.num_atoms - 1);
    std::uniform_int_distribution<int> body_dist(0, shape.max_body);
    for (int r = 0; r < shape.num_rules; ++r) {
        int head = atom_dist(rng);
        int body_size = body_dist(rng);
        std::vector<int> pos, neg;
        for (int i = 0; i < body_size; ++i) {
            int atom = atom_dist(rng);
            bool negate = shape.allow_negation && rng() % 2 == 0;
            if (shape.stratified) {
                if (negate && level[atom] >= level[head])
                    continue;
                if (!negate && level[atom] > level[head])
                    continue;
            }
            bool in_pos = std::find(pos.begin(), pos.end(), atom) != pos.end();
            bool in_neg = std::find(neg.begin(), neg.end(), atom) != neg.end();
            if (in_pos || in_neg)
                continue;
            (negate ? neg : pos).push_back(atom);
        }
        p.add_rule(head, std::move(pos), std::move(neg));
    }
    return p;
}

} // namespace axplan::testing
