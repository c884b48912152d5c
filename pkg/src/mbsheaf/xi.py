"""The 2-sided Coxeter complex: W-orbits of face pairs with its two orders.

An element is the simultaneous W-orbit of a pair (C, D) of faces; the first
coordinate plays the role of the imaginary part of a point of the
complexified arrangement.  The horizontal order >=' contracts the first
coordinate (its type set grows), the vertical order >='' contracts the
second.  A comparability m >= n is anodyne when both cells lie in the same
stratum of the discriminantal stratification, equivalently when the orbit
sizes agree.
"""

from __future__ import annotations

from .faces import FaceComplex, subsets_sorted


class OrderError(ValueError):
    """Raised when an operation requires comparable elements and gets none."""


class FlatOrbit:
    """Canonical W-orbit of a span-closed set of positive roots."""

    __slots__ = ("roots", "dim", "ident")

    def __init__(self, roots, dim, ident):
        self.roots = roots      # canonical (W-minimal) sorted tuple of root indices
        self.dim = dim
        self.ident = ident      # dense id within one XiPoset

    def __eq__(self, other):
        return isinstance(other, FlatOrbit) and self.roots == other.roots

    def __hash__(self):
        return hash(self.roots)

    def __repr__(self):
        return f"FlatOrbit(dim={self.dim}, roots={self.roots})"


class XiElement:
    """Canonical W-orbit of a face pair, with cached readings and flat."""

    __slots__ = ("index", "pair", "typeIJ", "points", "point_index",
                 "orbit_size", "hor", "ver", "flat")

    def __init__(self, index, pair, typeIJ, points):
        self.index = index
        self.pair = pair              # canonical (Face, Face)
        self.typeIJ = typeIJ          # (I, J) sorted tuples
        self.points = points          # sorted tuple of (face_idx, face_idx)
        self.point_index = {p: k for k, p in enumerate(points)}
        self.orbit_size = len(points)
        self.hor = None
        self.ver = None
        self.flat = None

    def __repr__(self):
        return f"Xi(I={self.typeIJ[0]}, J={self.typeIJ[1]}, #={self.orbit_size})"


class XiPoset:
    """All of Xi for one datum, with both orders and the stratification data."""

    def __init__(self, complex_):
        self.complex = complex_
        self.datum = complex_.datum
        self._build_elements()
        self._build_structure()

    # -- construction -------------------------------------------------------

    def _build_elements(self):
        cx = self.complex
        act = cx.action
        nfaces = len(cx.faces)
        order = self.datum.order
        self.elements = []
        self.pair_to_elem = {}
        for c in range(nfaces):
            for d in range(nfaces):
                if (c, d) in self.pair_to_elem:
                    continue
                orbit = sorted({(act[w][c], act[w][d]) for w in range(order)})
                idx = len(self.elements)
                cf, df = cx.faces[orbit[0][0]], cx.faces[orbit[0][1]]
                elem = XiElement(idx, (cf, df), (cf.type_I, df.type_I), tuple(orbit))
                self.elements.append(elem)
                for p in orbit:
                    self.pair_to_elem[p] = idx
        self.blocks = {}
        for e in self.elements:
            self.blocks.setdefault(e.typeIJ, []).append(e.index)

    def _build_structure(self):
        cx = self.complex
        rank = self.datum.rank
        full = tuple(range(rank))
        flat_registry = {}
        self.flats = []
        for e in self.elements:
            c, d = e.pair
            e.hor = cx.tits_product(c, d).type_I
            e.ver = cx.tits_product(d, c).type_I
            zero = frozenset(c.zero_set & d.zero_set)
            closed = cx.span_closure(zero)
            canon = self._flat_canonical(closed)
            if canon not in flat_registry:
                from .linalg import Span
                span = Span(rank)
                for a in canon:
                    span.add(self.datum.positive_roots[a])
                flat = FlatOrbit(canon, rank - span.dim, len(self.flats))
                flat_registry[canon] = flat
                self.flats.append(flat)
            e.flat = flat_registry[canon]
        # covering relations: one-generator contractions in each coordinate
        self.cov_prime = []       # per element: tuple of (s, target index)
        self.cov_second = []
        for e in self.elements:
            I, J = e.typeIJ
            c, d = e.pair
            covp = []
            for s in range(rank):
                if s not in I:
                    I2 = tuple(sorted(I + (s,)))
                    covp.append((s, self.pair_to_elem[(cx.coarsen(c.index, I2), d.index)]))
            covs = []
            for s in range(rank):
                if s not in J:
                    J2 = tuple(sorted(J + (s,)))
                    covs.append((s, self.pair_to_elem[(c.index, cx.coarsen(d.index, J2))]))
            self.cov_prime.append(tuple(covp))
            self.cov_second.append(tuple(covs))

    def _flat_canonical(self, root_set):
        """W-minimal representative of the orbit of a span-closed root set."""
        if not root_set:
            return ()
        d = self.datum
        act = d.tables["root_act"]
        best = None
        for w in range(d.order):
            row = act[w]
            img = tuple(sorted(abs(row[a]) - 1 for a in root_set))
            if best is None or img < best:
                best = img
        return best

    # -- orbits and projections ----------------------------------------------

    def xi_orbit(self, c, d):
        """The element containing the pair (c, d) of faces."""
        return self.elements[self.pair_to_elem[(c.index, d.index)]]

    def phi_prime(self, m, I2):
        """Horizontal contraction of m into Xi(I2, J)."""
        e = self.elements[m]
        if not set(e.typeIJ[0]) <= set(I2):
            raise OrderError(f"cannot contract first type {e.typeIJ[0]} to {I2}")
        c, d = e.pair
        return self.pair_to_elem[(self.complex.coarsen(c.index, I2), d.index)]

    def phi_second(self, m, J2):
        """Vertical contraction of m into Xi(I, J2)."""
        e = self.elements[m]
        if not set(e.typeIJ[1]) <= set(J2):
            raise OrderError(f"cannot contract second type {e.typeIJ[1]} to {J2}")
        c, d = e.pair
        return self.pair_to_elem[(c.index, self.complex.coarsen(d.index, J2))]

    def leq_prime(self, n, m):
        """True iff m >=' n."""
        em, en = self.elements[m], self.elements[n]
        return (em.typeIJ[1] == en.typeIJ[1]
                and set(em.typeIJ[0]) <= set(en.typeIJ[0])
                and self.phi_prime(m, en.typeIJ[0]) == n)

    def leq_second(self, n, m):
        """True iff m >='' n."""
        em, en = self.elements[m], self.elements[n]
        return (em.typeIJ[0] == en.typeIJ[0]
                and set(em.typeIJ[1]) <= set(en.typeIJ[1])
                and self.phi_second(m, en.typeIJ[1]) == n)

    def leq(self, n, m):
        """Joint order: true iff m >= n."""
        em, en = self.elements[m], self.elements[n]
        if not (set(em.typeIJ[0]) <= set(en.typeIJ[0])
                and set(em.typeIJ[1]) <= set(en.typeIJ[1])):
            return False
        return self.phi_second(self.phi_prime(m, en.typeIJ[0]), en.typeIJ[1]) == n

    def factor_through_prime(self, m, n):
        """The unique m' with m >=' m' >='' n; requires m >= n."""
        if not self.leq(n, m):
            raise OrderError("elements are not comparable")
        return self.phi_prime(m, self.elements[n].typeIJ[0])

    def factor_through_second(self, m, n):
        """The unique n' with m >='' n' >=' n; requires m >= n."""
        if not self.leq(n, m):
            raise OrderError("elements are not comparable")
        return self.phi_second(m, self.elements[n].typeIJ[1])

    def pi_map(self, m, n):
        """Point-level surjection m -> n for m >= n, as a list over m.points."""
        if not self.leq(n, m):
            raise OrderError("pi_map requires m >= n")
        em, en = self.elements[m], self.elements[n]
        cx = self.complex
        I2, J2 = en.typeIJ
        out = []
        for (c, d) in em.points:
            out.append(en.point_index[(cx.coarsen(c, I2), cx.coarsen(d, J2))])
        return out

    def is_anodyne(self, m, n):
        """Same-stratum test for a comparable pair, via orbit sizes."""
        if not self.leq(n, m):
            raise OrderError("is_anodyne requires m >= n")
        return self.elements[m].orbit_size == self.elements[n].orbit_size

    def sup(self, mp, n):
        """Mixed supremum: all m with mp <='' m >=' n."""
        emp, en = self.elements[mp], self.elements[n]
        I1, J2 = emp.typeIJ
        I2, J1 = en.typeIJ
        if not (set(I1) <= set(I2) and set(J1) <= set(J2)):
            return []
        out = []
        for m in self.blocks.get((I1, J1), ()):
            if self.phi_second(m, J2) == mp and self.phi_prime(m, I2) == n:
                out.append(m)
        return out

    def tau(self, m):
        """Coordinate swap."""
        c, d = self.elements[m].pair
        return self.pair_to_elem[(d.index, c.index)]

    def hor(self, m):
        """Type of the Tits product C o D of the canonical pair."""
        return self.elements[m].hor

    def ver(self, m):
        """Type of the Tits product D o C of the canonical pair."""
        return self.elements[m].ver

    # -- relations listings -----------------------------------------------------

    def comparable_pairs(self):
        """All strict pairs m > n with their relation kind and anodyne flag.

        Kind is 'prime' when m >=' n, 'second' when m >='' n, and 'mixed'
        when only the joint order relates them.
        """
        out = []
        subsets = subsets_sorted(self.datum.rank)
        for m, e in enumerate(self.elements):
            I, J = e.typeIJ
            for I2 in subsets:
                if not set(I) <= set(I2):
                    continue
                for J2 in subsets:
                    if not set(J) <= set(J2):
                        continue
                    if (I2, J2) == (I, J):
                        continue
                    n = self.phi_second(self.phi_prime(m, I2), J2)
                    if J2 == J:
                        kind = "prime"
                    elif I2 == I:
                        kind = "second"
                    else:
                        kind = "mixed"
                    ano = self.elements[m].orbit_size == self.elements[n].orbit_size
                    out.append((m, n, kind, ano))
        return out

    # -- stratifications ----------------------------------------------------------

    def flat_orbit(self, m):
        return self.elements[m].flat

    def _classes_from_edges(self, edges):
        parent = list(range(len(self.elements)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = {}
        for i in range(len(self.elements)):
            groups.setdefault(find(i), []).append(i)
        return tuple(tuple(g) for _, g in sorted(groups.items()))

    def stratification_classes(self):
        """Partitions of Xi: (S0 by flats, S1 by anodyne >='', tau-S1 by anodyne >=')."""
        groups = {}
        for e in self.elements:
            groups.setdefault(e.flat.ident, []).append(e.index)
        s0 = tuple(tuple(g) for _, g in sorted(groups.items(),
                                               key=lambda kv: kv[1][0]))
        edges_second = [(m, n) for m in range(len(self.elements))
                        for _, n in self.cov_second[m]
                        if self.elements[m].orbit_size == self.elements[n].orbit_size]
        edges_prime = [(m, n) for m in range(len(self.elements))
                       for _, n in self.cov_prime[m]
                       if self.elements[m].orbit_size == self.elements[n].orbit_size]
        s1 = self._classes_from_edges(edges_second)
        tau_s1 = self._classes_from_edges(edges_prime)
        return s0, s1, tau_s1

    def stratification_join_matches(self):
        """Whether the join of S1 and tau-S1 equals the flat partition S0."""
        s0, _, _ = self.stratification_classes()
        edges = [(m, n) for m in range(len(self.elements))
                 for _, n in list(self.cov_second[m]) + list(self.cov_prime[m])
                 if self.elements[m].orbit_size == self.elements[n].orbit_size]
        joined = self._classes_from_edges(edges)
        return set(map(frozenset, joined)) == set(map(frozenset, s0))

    # -- the double-coset Bruhat order -------------------------------------------

    def min_double_rep(self, m):
        """Index of the minimal-length element of the double coset W_I u^-1 v W_J."""
        e = self.elements[m]
        I, J = e.typeIJ
        d = self.datum
        c, f = e.pair
        g = d.mul_idx(d.inv_idx(c.rep_idx), f.rep_idx)
        moved = True
        while moved:
            moved = False
            for s in I:
                if d.has_left_descent(g, s):
                    g = d.tables["left"][s][g]
                    moved = True
            for s in J:
                if d.has_right_descent(g, s):
                    g = d.tables["right"][g][s]
                    moved = True
        return g

    def bruhat_block_leq(self, m, n):
        """Double-coset Bruhat order within one Xi(I, J) block."""
        from .coxeter import bruhat_leq
        if self.elements[m].typeIJ != self.elements[n].typeIJ:
            raise OrderError("Bruhat block order requires elements of the same type")
        return bruhat_leq(self.datum, self.min_double_rep(m), self.min_double_rep(n))


def enumerate_xi(datum):
    """Build the full 2-sided complex for a datum."""
    return XiPoset(FaceComplex(datum))
