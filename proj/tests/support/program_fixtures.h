#pragma once

#include "axplan/logic_program.h"

namespace axplan::testing {

// p1: a :- not b.  b :- not a.  c :- a.
// Two answer sets {a, c} and {b}; no stratification.
inline LogicProgram make_p1() {
    LogicProgram p;
    int a = p.add_atom("a");
    int b = p.add_atom("b");
    int c = p.add_atom("c");
    p.add_rule(a, {}, {b});
    p.add_rule(b, {}, {a});
    p.add_rule(c, {a}, {});
    return p;
}

// p2: a :- not b.  b :- c.  c :- b.
// Stratified; unique answer set {a}. {b, c} is supported but unstable.
inline LogicProgram make_p2() {
    LogicProgram p;
    int a = p.add_atom("a");
    int b = p.add_atom("b");
    int c = p.add_atom("c");
    p.add_rule(a, {}, {b});
    p.add_rule(b, {c}, {});
    p.add_rule(c, {b}, {});
    return p;
}

inline Interp interp_of(const LogicProgram &p, std::initializer_list<const char *> names) {
    Interp m(p.num_atoms(), false);
    for (const char *name : names)
        m[p.atom(name)] = true;
    return m;
}

} // namespace axplan::testing
