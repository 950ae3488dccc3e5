"""Quantized enveloping algebra presentations from Cartan data, verification
of matrix representations against the defining relations, coproduct-driven
extension of generator actions to tensor powers and quotient algebras, and
the braiding-compatibility / ideal-preservation / measuring-identity checks
that make those extensions legitimate.

The same machinery drives a classical mode in which a coalgebra with one
group-like element and primitive generators encodes Lie-algebra actions by
derivations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (BraidedSpace, Echelon, SymMatrix, extend_braiding,
                     invert, kron_all)
from .ncalg import (DegreeBoundError, NCPoly, RelationSet, RewriteSystem,
                    vector_to_poly, word_index)
from .report import Report
from .scalar import ONE, ZERO, Scalar, q_binomial


@dataclass(frozen=True)
class Gen:
    """A presentation generator: E_i, F_i, K_i or K_i^{-1} (kind 'Ki')."""

    kind: str
    index: int

    def __str__(self) -> str:
        if self.kind == "Ki":
            return f"K{self.index + 1}^-1"
        return f"{self.kind}{self.index + 1}"

    @classmethod
    def parse(cls, name: str) -> "Gen":
        name = name.strip()
        if name.endswith("^-1") and name.startswith("K"):
            return cls("Ki", int(name[1:-3]) - 1)
        kind = name[0]
        if kind not in ("E", "F", "K"):
            raise ValueError(f"unknown generator {name!r}")
        return cls(kind, int(name[1:]) - 1)


_KIND_ORDER = {"E": 0, "F": 1, "K": 2, "Ki": 3}


def _gen_sort_key(g: Gen):
    return (_KIND_ORDER[g.kind], g.index)


GenWord = tuple  # tuple[Gen, ...]
GenPoly = dict  # {GenWord: Scalar}


def _genpoly_mul(a: GenPoly, b: GenPoly) -> GenPoly:
    out: GenPoly = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            nv = out.get(w, ZERO) + ca * cb
            if nv.is_zero():
                out.pop(w, None)
            else:
                out[w] = nv
    return out


def _genpoly_add(a: GenPoly, b: GenPoly, scale: Scalar = ONE) -> GenPoly:
    out = dict(a)
    for w, c in b.items():
        nv = out.get(w, ZERO) + c * scale
        if nv.is_zero():
            out.pop(w, None)
        else:
            out[w] = nv
    return out


def render_genpoly(p: GenPoly) -> str:
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=lambda w: (len(w), tuple(map(_gen_sort_key, w)))):
        mono = " ".join(str(g) for g in w) if w else "1"
        parts.append(f"({p[w]})*{mono}")
    return " + ".join(parts)


@dataclass(frozen=True)
class CartanData:
    """A symmetrizable Cartan matrix with its symmetrizers d_i."""

    matrix: tuple
    d: tuple

    def __post_init__(self):
        a = self.matrix
        n = len(a)
        if any(len(row) != n for row in a):
            raise ValueError("Cartan matrix must be square")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("Cartan matrix must have 2 on the diagonal")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")
        if len(self.d) != n or any(di <= 0 for di in self.d):
            raise ValueError("symmetrizers must be positive")
        for i in range(n):
            for j in range(n):
                if self.d[i] * a[i][j] != self.d[j] * a[j][i]:
                    raise ValueError("d_i a_ij is not symmetric")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @classmethod
    def sl(cls, n: int) -> "CartanData":
        """Type A_{n-1} data for sl_n."""
        if n < 2:
            raise ValueError("sl(n) needs n >= 2")
        rank = n - 1
        a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
              for j in range(rank)] for i in range(rank)]
        return cls(tuple(map(tuple, a)), (1,) * rank)

    @classmethod
    def from_matrix(cls, matrix, d=None) -> "CartanData":
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if d is not None:
            return cls(matrix, tuple(int(x) for x in d))
        return cls(matrix, _symmetrizers(matrix))


def _symmetrizers(a) -> tuple:
    """Minimal positive integers with (d_i a_ij) symmetric, computed per
    connected component of the Dynkin diagram."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        component = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and a[i][j] != 0:
                    # d_j a_ji = d_i a_ij
                    ratio = Fraction(a[i][j], a[j][i])
                    value = d[i] * ratio
                    if d[j] is None:
                        d[j] = value
                        queue.append(j)
                        component.append(j)
                    elif d[j] != value:
                        raise ValueError("Cartan matrix is not symmetrizable")
        denominator = 1
        for i in component:
            denominator = denominator * d[i].denominator // \
                _int_gcd(denominator, d[i].denominator)
        values = [int(d[i] * denominator) for i in component]
        g = 0
        for v in values:
            g = _int_gcd(g, v)
        for i, v in zip(component, values):
            d[i] = v // g
    return tuple(d)


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class GeneratorCoalgebra:
    """The finite coalgebra spanned by the unit and the generator symbols.

    `delta[s]` lists the terms of the comultiplication of symbol s as
    (left word, right word, coefficient); the unit is the empty word and is
    implicitly group-like.  The classical mode uses primitive generators.
    Coassociativity and the counit laws are verified symbolically at
    construction unless `validate=False`.
    """

    def __init__(self, symbols, delta, counit, validate: bool = True):
        self.symbols = tuple(symbols)
        self.delta = delta
        self.counit = counit
        if validate:
            for report in (self.check_coassociativity(), self.check_counit()):
                if not report.passed:
                    bad = ", ".join(i.name for i in report.failures())
                    raise ValueError(f"invalid coalgebra tables: {bad}")

    @classmethod
    def classical(cls, symbols) -> "GeneratorCoalgebra":
        symbols = tuple(symbols)
        delta = {s: [((s,), (), ONE), ((), (s,), ONE)] for s in symbols}
        counit = {s: ZERO for s in symbols}
        return cls(symbols, delta, counit)

    def delta_word(self, word) -> list:
        terms = [((), (), ONE)]
        for s in word:
            expanded = []
            for l1, r1, c1 in terms:
                for l2, r2, c2 in self.delta[s]:
                    expanded.append((l1 + l2, r1 + r2, c1 * c2))
            terms = expanded
        return _collect_pairs(terms)

    def counit_word(self, word) -> Scalar:
        out = ONE
        for s in word:
            out = out * self.counit[s]
        return out

    def iterated_terms(self, symbol, k: int) -> list:
        """Terms of the (k-1)-fold comultiplication as (k-tuple of words,
        coefficient); requires k >= 1."""
        terms = [(((symbol,),), ONE)]
        while len(terms[0][0]) < k:
            expanded = {}
            for words, c in terms:
                for l, r, c2 in self.delta_word(words[0]):
                    key = (l, r) + words[1:]
                    nv = expanded.get(key, ZERO) + c * c2
                    if nv.is_zero():
                        expanded.pop(key, None)
                    else:
                        expanded[key] = nv
            terms = list(expanded.items())
        return terms

    def check_coassociativity(self) -> Report:
        report = Report("coassociativity")
        for s in self.symbols:
            lhs: dict = {}
            rhs: dict = {}
            for l, r, c in self.delta[s]:
                for l2, r2, c2 in self.delta_word(l):
                    _acc(lhs, (l2, r2, r), c * c2)
                for l2, r2, c2 in self.delta_word(r):
                    _acc(rhs, (l, l2, r2), c * c2)
            report.add(f"(delta x 1)delta = (1 x delta)delta on {s}", lhs == rhs)
        return report

    def check_counit(self) -> Report:
        report = Report("counit law")
        for s in self.symbols:
            left: dict = {}
            right: dict = {}
            for l, r, c in self.delta[s]:
                _acc(left, r, c * self.counit_word(l))
                _acc(right, l, c * self.counit_word(r))
            expect = {(s,): ONE}
            report.add(f"(eps x 1)delta = id on {s}", left == expect)
            report.add(f"(1 x eps)delta = id on {s}", right == expect)
        return report


def _acc(target: dict, key, value: Scalar):
    nv = target.get(key, ZERO) + value
    if nv.is_zero():
        target.pop(key, None)
    else:
        target[key] = nv


def _collect_pairs(terms) -> list:
    out: dict = {}
    for l, r, c in terms:
        _acc(out, (l, r), c)
    return [(l, r, c) for (l, r), c in out.items()]


@dataclass
class UqPresentation:
    """Generators, defining relations and Hopf tables instantiated from
    Cartan data."""

    cartan: CartanData
    generators: list
    relations: list  # [(label, GenPoly)]
    delta: dict
    counit: dict
    antipode: dict  # {Gen: GenPoly}
    q_i: list

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def coalgebra(self) -> GeneratorCoalgebra:
        cached = getattr(self, "_coalgebra", None)
        if cached is None:
            cached = GeneratorCoalgebra(self.generators, self.delta,
                                        self.counit)
            self._coalgebra = cached
        return cached


def presentation_from_cartan(cartan: CartanData) -> UqPresentation:
    """Instantiate the full presentation: K/E/F commutation, the EF bracket,
    quantum Serre relations with balanced q-binomials at base q_i, and the
    Hopf structure tables."""
    n = cartan.rank
    a = cartan.matrix
    E = [Gen("E", i) for i in range(n)]
    F = [Gen("F", i) for i in range(n)]
    K = [Gen("K", i) for i in range(n)]
    Ki = [Gen("Ki", i) for i in range(n)]
    q_i = [Scalar.q_power(cartan.d[i]) for i in range(n)]
    generators = E + F + K + Ki

    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            relations.append((f"K{i + 1} K{j + 1} commute",
                              {(K[i], K[j]): ONE, (K[j], K[i]): -ONE}))
    for i in range(n):
        relations.append((f"K{i + 1} K{i + 1}^-1 = 1",
                          {(K[i], Ki[i]): ONE, (): -ONE}))
        relations.append((f"K{i + 1}^-1 K{i + 1} = 1",
                          {(Ki[i], K[i]): ONE, (): -ONE}))
    for i in range(n):
        for j in range(n):
            relations.append((
                f"K{i + 1} E{j + 1} K{i + 1}^-1 = q{i + 1}^a[{i + 1},{j + 1}] E{j + 1}",
                {(K[i], E[j], Ki[i]): ONE, (E[j],): -(q_i[i] ** a[i][j])}))
            relations.append((
                f"K{i + 1} F{j + 1} K{i + 1}^-1 = q{i + 1}^-a[{i + 1},{j + 1}] F{j + 1}",
                {(K[i], F[j], Ki[i]): ONE, (F[j],): -(q_i[i] ** (-a[i][j]))}))
    for i in range(n):
        for j in range(n):
            poly: GenPoly = {(E[i], F[j]): ONE, (F[j], E[i]): -ONE}
            if i == j:
                c = (q_i[i] - q_i[i].inverse()).inverse()
                poly = _genpoly_add(poly, {(K[i],): -c, (Ki[i],): c})
            relations.append((f"E{i + 1} F{j + 1} bracket", poly))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = 1 - a[i][j]
            for gens in (E, F):
                poly = {}
                for r in range(m + 1):
                    coeff = q_binomial(m, r, q_i[i])
                    if r % 2:
                        coeff = -coeff
                    word = (gens[i],) * (m - r) + (gens[j],) + (gens[i],) * r
                    poly = _genpoly_add(poly, {word: ONE}, coeff)
                kind = "E" if gens is E else "F"
                relations.append((f"Serre {kind}[{i + 1},{j + 1}]", poly))

    delta = {}
    counit = {}
    antipode = {}
    for i in range(n):
        delta[E[i]] = [((E[i],), (K[i],), ONE), ((), (E[i],), ONE)]
        delta[F[i]] = [((F[i],), (), ONE), ((Ki[i],), (F[i],), ONE)]
        delta[K[i]] = [((K[i],), (K[i],), ONE)]
        delta[Ki[i]] = [((Ki[i],), (Ki[i],), ONE)]
        counit[E[i]] = ZERO
        counit[F[i]] = ZERO
        counit[K[i]] = ONE
        counit[Ki[i]] = ONE
        antipode[E[i]] = {(E[i], Ki[i]): -ONE}
        antipode[F[i]] = {(K[i], F[i]): -ONE}
        antipode[K[i]] = {(Ki[i],): ONE}
        antipode[Ki[i]] = {(K[i],): ONE}

    return UqPresentation(cartan, generators, relations, delta, counit,
                          antipode, q_i)


class Representation:
    """An assignment of generator symbols to matrices of equal size.  The
    K_i images must be invertible; whether the assignment annihilates the
    defining relations is the subject of check_representation."""

    def __init__(self, presentation: UqPresentation, assign: dict,
                 name: str = "representation"):
        self.presentation = presentation
        self.name = name
        assign = dict(assign)
        dims = {m.rows for m in assign.values()} | {m.cols for m in assign.values()}
        if len(dims) != 1:
            raise ValueError("all generator matrices must be square of equal size")
        self.dim = dims.pop()
        for i in range(presentation.rank):
            k = Gen("K", i)
            ki = Gen("Ki", i)
            if k not in assign:
                raise ValueError(f"missing matrix for {k}")
            if ki not in assign:
                inv = invert(assign[k])
                if inv is None:
                    raise ValueError(f"{k} matrix is not invertible")
                assign[ki] = inv
            elif assign[k] * assign[ki] != SymMatrix.identity(self.dim):
                raise ValueError(f"{ki} matrix is not inverse to {k}")
        for g in presentation.generators:
            if g not in assign:
                raise ValueError(f"missing matrix for {g}")
        self.assign = assign
        self._ext_cache: dict = {}
        self._word_cache: dict = {}

    def matrix(self, gen: Gen) -> SymMatrix:
        return self.assign[gen]

    def word_matrix(self, word) -> SymMatrix:
        if not word:
            return SymMatrix.identity(self.dim)
        cached = self._word_cache.get(word)
        if cached is None:
            cached = self.assign[word[0]]
            for g in word[1:]:
                cached = cached * self.assign[g]
            self._word_cache[word] = cached
        return cached

    def genpoly_matrix(self, poly: GenPoly) -> SymMatrix:
        out = SymMatrix.zeros(self.dim)
        for w, c in poly.items():
            out = out + self.word_matrix(w) * c
        return out

    def coalgebra(self) -> GeneratorCoalgebra:
        return self.presentation.coalgebra()


def check_representation(rep: Representation) -> Report:
    """Evaluate every defining relation on the assignment; failures carry
    the non-zero residual matrix."""
    report = Report(f"defining relations in {rep.name} (dim {rep.dim})")
    for label, poly in rep.presentation.relations:
        residual = rep.genpoly_matrix(poly)
        ok = residual.is_zero()
        report.add(label, ok, "" if ok else f"residual:\n{residual}")
    return report


def generator_independence(rep: Representation) -> Report:
    """Linear independence of the identity together with the generator
    actions on V + V(x)V: the finite certificate necessary (but not
    sufficient) for faithfulness on the generating coalgebra.

    The degree-2 block matters: on V alone the unit and the K_i images can
    be dependent (for the vector representation K + K^-1 is a multiple of
    the identity), while the extended actions separate them."""
    d = rep.dim
    d2 = d * d
    ech = Echelon()
    independent = True
    for g in [None] + list(rep.presentation.generators):
        if g is None:
            m1, m2 = SymMatrix.identity(d), SymMatrix.identity(d2)
        else:
            m1, m2 = rep.matrix(g), coproduct_action(rep, g, 2)
        vec = {i * d + j: v for i, row in enumerate(m1.entries)
               for j, v in enumerate(row) if not v.is_zero()}
        offset = d * d
        for i, row in enumerate(m2.entries):
            for j, v in enumerate(row):
                if not v.is_zero():
                    vec[offset + i * d2 + j] = v
        if not ech.insert(vec):
            independent = False
    report = Report("generator linear independence")
    report.add("unit and generator actions on degrees 1..2 independent",
               independent)
    report.notes.append(
        "necessary for faithfulness on the generating coalgebra; "
        "not sufficient on its own")
    return report


def coproduct_action(rep: Representation, gen: Gen, k: int) -> SymMatrix:
    """The action of a generator on the k-th tensor power, obtained from the
    (k-1)-fold coproduct; k = 0 yields the 1x1 matrix of the counit."""
    if gen not in rep.assign:
        raise ValueError(f"unknown generator {gen}")
    if k < 0:
        raise ValueError("tensor power must be non-negative")
    return _ext_action(rep.coalgebra(), rep, gen, k)


def _ext_action(coalg: GeneratorCoalgebra, rep, symbol, k: int) -> SymMatrix:
    cached = rep._ext_cache.get((symbol, k))
    if cached is not None:
        return cached
    if k == 0:
        out = SymMatrix([[coalg.counit[symbol]]])
    elif k == 1:
        out = rep.matrix(symbol)
    else:
        out = SymMatrix.zeros(rep.dim ** k)
        for words, c in coalg.iterated_terms(symbol, k):
            out = out + kron_all([rep.word_matrix(w) for w in words]) * c
    rep._ext_cache[(symbol, k)] = out
    return out


def word_action(rep: Representation, word, k: int) -> SymMatrix:
    """Action of a word of generators on the k-th tensor power (identity
    for the empty word)."""
    coalg = rep.coalgebra()
    out = SymMatrix.identity(rep.dim ** k if k else 1)
    for g in word:
        out = out * _ext_action(coalg, rep, g, k)
    return out


def check_preserves_R(rep: Representation, space: BraidedSpace) -> Report:
    """Per generator: the braiding commutes with the degree-2 coproduct
    action; additionally the degree-3 extensions (2,1) and (1,2) commute
    with the degree-3 action."""
    if rep.dim != space.dim:
        raise ValueError("representation and braided space dimensions differ")
    report = Report(f"braiding preserved by {rep.name}")
    psi = space.braiding
    for g in rep.presentation.generators:
        x = coproduct_action(rep, g, 2)
        residual = psi * x - x * psi
        ok = residual.is_zero()
        report.add(f"{g} commutes with braiding on degree 2", ok,
                   "" if ok else f"residual:\n{residual}")
    psi21 = extend_braiding(space, 2, 1).operator
    psi12 = extend_braiding(space, 1, 2).operator
    for g in rep.presentation.generators:
        x3 = coproduct_action(rep, g, 3)
        ok = (psi21 * x3 == x3 * psi21) and (psi12 * x3 == x3 * psi12)
        report.add(f"{g} commutes with degree-3 extensions", ok)
    return report


def act_on_quotient(rep: Representation, rs: RewriteSystem, gen: Gen,
                    word) -> NCPoly:
    """Apply a generator to a monomial of the quotient algebra and reduce to
    normal form."""
    word = tuple(word)
    k = len(word)
    if k > rs.degree_bound:
        raise DegreeBoundError(
            f"degree {k} exceeds completion bound {rs.degree_bound}")
    if k == 0:
        eps = rep.presentation.counit[gen]
        return NCPoly({(): eps}) if not eps.is_zero() else NCPoly()
    x = coproduct_action(rep, gen, k)
    col = x.column(word_index(word, rs.alphabet))
    return rs.normal_form(vector_to_poly(col, rs.alphabet, k))


def check_ideal_preserved(rep: Representation, rels: RelationSet) -> Report:
    """Membership of each generator image of each relation in the relation
    span, by linear solve."""
    report = Report(f"ideal preserved by {rep.name}")
    ech = Echelon()
    for vec in rels.vectors():
        ech.insert(dict(vec))
    for g in rep.presentation.generators:
        x = coproduct_action(rep, g, 2)
        for idx, rel in enumerate(rels.relations):
            vec = {}
            for w, c in rel.coeffs.items():
                col = word_index(w, rels.alphabet)
                for i in range(x.rows):
                    e = x.entries[i][col]
                    if not e.is_zero():
                        nv = vec.get(i, ZERO) + e * c
                        if nv.is_zero():
                            vec.pop(i, None)
                        else:
                            vec[i] = nv
            ok = ech.contains(vec)
            report.add(f"{g} maps relation {idx + 1} into the span", ok)
    return report


# --- measuring checks --------------------------------------------------------


class _MeasuringContext:
    """Shared engine for the measuring identity
    sigma(c)(a a') = sum sigma(c_(1))(a) sigma(c_(2))(a'), evaluated inside
    a quotient with all sides normal-formed."""

    def __init__(self, coalg: GeneratorCoalgebra, matrices: dict,
                 rs: RewriteSystem):
        self.coalg = coalg
        self.rs = rs
        dims = {m.rows for m in matrices.values()}
        if len(dims) != 1:
            raise ValueError("action matrices must share one dimension")
        self.dim = dims.pop()
        if self.dim != rs.alphabet:
            raise ValueError("matrix size must match the quotient alphabet")
        self._holder = _MatrixHolder(matrices, self.dim)

    def act_word(self, uword, target: NCPoly) -> NCPoly:
        """Action of a word of coalgebra symbols on a quotient element."""
        out = NCPoly()
        grouped: dict = {}
        for w, c in target.coeffs.items():
            grouped.setdefault(len(w), {})[w] = c
        for k, words in sorted(grouped.items()):
            if k == 0:
                eps = self.coalg.counit_word(uword)
                for w, c in words.items():
                    out = out + NCPoly({(): eps * c})
                continue
            x = SymMatrix.identity(self.dim ** k)
            for s in uword:
                x = x * _ext_action(self.coalg, self._holder, s, k)
            for w, c in words.items():
                col = x.column(word_index(w, self.dim))
                out = out + vector_to_poly(col, self.dim, k).scale(c)
        return out

    def measuring_residual(self, symbol, a, b):
        """Normal-formed difference LHS - RHS for monomials a, b; zero means
        the identity holds on this triple.

        The left side acts on the normal form of the product, i.e. on the
        quotient element itself; this is what makes the check sensitive to
        actions that fail to preserve the ideal."""
        product = self.rs.normal_form(NCPoly.monomial(tuple(a) + tuple(b)))
        lhs = self.rs.normal_form(self.act_word((symbol,), product))
        rhs = NCPoly()
        for l, r, c in self.coalg.delta[symbol]:
            left = self.act_word(l, NCPoly.monomial(a))
            right = self.act_word(r, NCPoly.monomial(b))
            rhs = rhs + (left * right).scale(c)
        rhs = self.rs.normal_form(rhs)
        return lhs - rhs


class _MatrixHolder:
    """Duck-typed stand-in for Representation inside _ext_action."""

    def __init__(self, matrices: dict, dim: int):
        self.assign = matrices
        self.dim = dim
        self._ext_cache: dict = {}
        self._word_cache: dict = {}

    def matrix(self, symbol) -> SymMatrix:
        return self.assign[symbol]

    def word_matrix(self, word) -> SymMatrix:
        if not word:
            return SymMatrix.identity(self.dim)
        cached = self._word_cache.get(word)
        if cached is None:
            cached = self.assign[word[0]]
            for g in word[1:]:
                cached = cached * self.assign[g]
            self._word_cache[word] = cached
        return cached


def _monomial_pairs(rs: RewriteSystem, max_degree: int) -> list:
    words = []
    for d in range(max_degree + 1):
        words.extend(rs.irreducible_words(d))
    return [(a, b) for a in words for b in words
            if len(a) + len(b) <= max_degree]


def check_measuring(rep: Representation, rs: RewriteSystem,
                    sample_count: int = 500, max_degree: int = 4,
                    seed: int = 0) -> Report:
    """Sample the measuring identity over monomial pairs in the quotient:
    exhaustive when at most `sample_count` pairs exist, otherwise a seeded
    random sample of that size."""
    ctx = _MeasuringContext(rep.coalgebra(), rep.assign, rs)
    pairs = _monomial_pairs(rs, max_degree)
    exhaustive = len(pairs) <= sample_count
    if not exhaustive:
        rng = random.Random(seed)
        pairs = rng.sample(pairs, sample_count)
    report = Report(f"measuring identity for {rep.name}")
    report.notes.append(
        f"{'exhaustive over' if exhaustive else 'seeded sample of'} "
        f"{len(pairs)} monomial pairs, total degree <= {max_degree}")
    for g in rep.presentation.generators:
        bad = 0
        witness = ""
        for a, b in pairs:
            residual = ctx.measuring_residual(g, a, b)
            if not residual.is_zero():
                bad += 1
                if not witness:
                    witness = (f"a={_word_str(a, rs.names)} "
                               f"b={_word_str(b, rs.names)} "
                               f"residual={residual.render(rs.names, rs.order)}")
        report.add(f"{g} measures ({len(pairs)} pairs)", bad == 0,
                   "" if bad == 0 else f"{bad} counterexamples; first: {witness}")
    return report


def check_derivation_measuring(lie_actions: list, rs: RewriteSystem,
                               max_degree: int = 4) -> Report:
    """Classical mode: the Leibniz rule sigma(X)(ab) = sigma(X)(a)b +
    a sigma(X)(b) for each listed matrix, exhaustively over monomial pairs.
    This is the measuring identity for primitive coalgebra generators."""
    symbols = [f"X{i + 1}" for i in range(len(lie_actions))]
    coalg = GeneratorCoalgebra.classical(symbols)
    matrices = dict(zip(symbols, lie_actions))
    ctx = _MeasuringContext(coalg, matrices, rs)
    pairs = _monomial_pairs(rs, max_degree)
    report = Report("derivation (Leibniz) measuring")
    report.notes.append(
        f"exhaustive over {len(pairs)} monomial pairs, total degree <= {max_degree}")
    for s in symbols:
        bad = 0
        witness = ""
        for a, b in pairs:
            residual = ctx.measuring_residual(s, a, b)
            if not residual.is_zero():
                bad += 1
                if not witness:
                    witness = (f"a={_word_str(a, rs.names)} "
                               f"b={_word_str(b, rs.names)}")
        report.add(f"{s} acts by derivations ({len(pairs)} pairs)", bad == 0,
                   "" if bad == 0 else f"{bad} counterexamples; first: {witness}")
    return report


def _word_str(word, names) -> str:
    return " ".join(names[i] for i in word) if word else "1"


def check_antipode(rep: Representation) -> Report:
    """m(S x 1)delta(g) = eps(g) 1 evaluated in the representation."""
    pres = rep.presentation
    report = Report(f"antipode identity in {rep.name}")
    for g in pres.generators:
        acc = SymMatrix.zeros(rep.dim)
        for l, r, c in pres.delta[g]:
            s_l: GenPoly = {(): ONE}
            for sym in reversed(l):
                s_l = _genpoly_mul(s_l, pres.antipode[sym])
            acc = acc + (rep.genpoly_matrix(s_l) * rep.word_matrix(r)) * c
        expected = SymMatrix.identity(rep.dim) * pres.counit[g]
        report.add(f"m(S x 1)delta({g}) = eps({g})1", acc == expected)
    return report
