"""Reduced ordered binary decision diagrams.

Nodes are ints; 0 and 1 are the terminals.  Variables are identified by
their level in the (fixed) order, lower level = higher in the diagram.
Hash-consing through the unique table makes equal functions identical
nodes, so equality of functions is integer equality.  A node budget guards
against blow-up; exceeding it raises BddBudgetError, which callers surface
as an UNKNOWN verdict.
"""

import sys

_TERMINAL_LEVEL = sys.maxsize


class BddBudgetError(RuntimeError):
    """The manager exceeded its node budget."""


class Bdd:
    FALSE = 0
    TRUE = 1

    def __init__(self, node_budget=5_000_000):
        # nodes[u] = (level, lo, hi); two placeholder entries for terminals
        self.nodes = [(_TERMINAL_LEVEL, 0, 0), (_TERMINAL_LEVEL, 1, 1)]
        self.unique = {}
        self.cache = {}
        self.node_budget = node_budget

    def level(self, u):
        return self.nodes[u][0]

    def mk(self, level, lo, hi):
        if lo == hi:
            return lo
        key = (level, lo, hi)
        u = self.unique.get(key)
        if u is None:
            if len(self.nodes) > self.node_budget:
                raise BddBudgetError("node budget %d exceeded" % self.node_budget)
            u = len(self.nodes)
            self.nodes.append(key)
            self.unique[key] = u
        return u

    def var(self, level):
        return self.mk(level, 0, 1)

    def nvar(self, level):
        return self.mk(level, 1, 0)

    def const(self, b):
        return 1 if b else 0

    def _cof(self, u, level):
        lvl, lo, hi = self.nodes[u]
        if lvl == level:
            return lo, hi
        return u, u

    def ite(self, f, g, h):
        if f == 1:
            return g
        if f == 0:
            return h
        if g == h:
            return g
        if g == 1 and h == 0:
            return f
        key = ("ite", f, g, h)
        r = self.cache.get(key)
        if r is None:
            top = min(self.level(f), self.level(g), self.level(h))
            f0, f1 = self._cof(f, top)
            g0, g1 = self._cof(g, top)
            h0, h1 = self._cof(h, top)
            r = self.mk(top, self.ite(f0, g0, h0), self.ite(f1, g1, h1))
            self.cache[key] = r
        return r

    def not_(self, f):
        return self.ite(f, 0, 1)

    def and_(self, f, g):
        return self.ite(f, g, 0)

    def or_(self, f, g):
        return self.ite(f, 1, g)

    def implies(self, f, g):
        return self.ite(f, g, 1)

    def iff(self, f, g):
        return self.ite(f, g, self.not_(g))

    def and_all(self, fs):
        r = 1
        for f in fs:
            r = self.and_(r, f)
        return r

    def or_all(self, fs):
        r = 0
        for f in fs:
            r = self.or_(r, f)
        return r

    def exists(self, f, levels):
        """Existentially quantify the given levels out of f."""
        levels = frozenset(levels)

        def go(u):
            if u <= 1:
                return u
            lvl, lo, hi = self.nodes[u]
            if lvl > max_lvl:
                return u
            key = ("ex", u, levels)
            r = self.cache.get(key)
            if r is None:
                a, b = go(lo), go(hi)
                if lvl in levels:
                    r = self.or_(a, b)
                else:
                    r = self.mk(lvl, a, b)
                self.cache[key] = r
            return r

        if not levels:
            return f
        max_lvl = max(levels)
        return go(f)

    def rename(self, f, mapping):
        """Relabel levels by `mapping` (missing levels stay).  The mapping
        must preserve the variable order on the support of f."""

        def go(u):
            if u <= 1:
                return u
            key = ("rn", u, mkey)
            r = self.cache.get(key)
            if r is None:
                lvl, lo, hi = self.nodes[u]
                new = mapping.get(lvl, lvl)
                a, b = go(lo), go(hi)
                for child in (a, b):
                    assert self.level(child) > new, \
                        "rename mapping does not preserve the order"
                r = self.mk(new, a, b)
                self.cache[key] = r
            return r

        mkey = tuple(sorted(mapping.items()))
        return go(f)

    def support(self, f):
        """Levels f depends on."""
        out = set()
        seen = set()
        stack = [f]
        while stack:
            u = stack.pop()
            if u <= 1 or u in seen:
                continue
            seen.add(u)
            lvl, lo, hi = self.nodes[u]
            out.add(lvl)
            stack.append(lo)
            stack.append(hi)
        return out

    def count_nodes(self, f):
        seen = set()
        stack = [f]
        while stack:
            u = stack.pop()
            if u <= 1 or u in seen:
                continue
            seen.add(u)
            _, lo, hi = self.nodes[u]
            stack.append(lo)
            stack.append(hi)
        return len(seen)

    def cubes(self, f):
        """Yield the satisfying paths of f as dicts level -> bool.
        Levels absent from a cube are don't-cares; distinct cubes are
        disjoint on their shared decided levels."""
        def go(u):
            if u == 1:
                yield {}
                return
            if u == 0:
                return
            lvl, lo, hi = self.nodes[u]
            for val, child in ((False, lo), (True, hi)):
                for rest in go(child):
                    cube = {lvl: val}
                    cube.update(rest)
                    yield cube

        yield from go(f)

    def pick_cube(self, f):
        """One satisfying path, preferring the low branch; None if f is 0."""
        if f == 0:
            return None
        cube = {}
        u = f
        while u > 1:
            lvl, lo, hi = self.nodes[u]
            if lo != 0:
                cube[lvl] = False
                u = lo
            else:
                cube[lvl] = True
                u = hi
        return cube

    def assignments(self, f, levels):
        """All total assignments over `levels` satisfying f, as frozensets of
        the levels set to true.  f must not depend on other levels."""
        levels = list(levels)
        extra = self.support(f) - set(levels)
        if extra:
            raise ValueError("f depends on levels outside the given set")
        out = set()
        for cube in self.cubes(f):
            free = [l for l in levels if l not in cube]
            base = frozenset(l for l, v in cube.items() if v)
            for mask in range(1 << len(free)):
                chosen = frozenset(free[i] for i in range(len(free))
                                   if mask >> i & 1)
                out.add(base | chosen)
        return out

    def to_dot(self, f, names=None):
        """GraphViz rendering of the diagram rooted at f."""
        lines = ["digraph bdd {", '  node0 [label="0", shape=box];',
                 '  node1 [label="1", shape=box];']
        seen = set()
        stack = [f]
        while stack:
            u = stack.pop()
            if u <= 1 or u in seen:
                continue
            seen.add(u)
            lvl, lo, hi = self.nodes[u]
            label = names.get(lvl, "v%d" % lvl) if names else "v%d" % lvl
            lines.append('  node%d [label="%s"];' % (u, label))
            lines.append("  node%d -> node%d [style=dashed];" % (u, lo))
            lines.append("  node%d -> node%d;" % (u, hi))
            stack.append(lo)
            stack.append(hi)
        lines.append("}")
        return "\n".join(lines)
