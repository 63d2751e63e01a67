"""
Grafo auxiliar G_R, matriz de pesos de caminhos, menores sólidos W_{ij}^{(k)},
verificações da recorrência do octaedro, somas de cadeias em intervalos e os
oráculos de enumeração de caminhos.

Os menores são calculados por eliminação de Bareiss sobre a matriz inteira
obtida limpando denominadores; a recorrência do octaedro é só verificada.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from rowmotion_report.algebra import BIRATIONAL, ToggleAlgebra, format_rational, parallel_sum_all
from rowmotion_report.dynamics import Labeling
from rowmotion_report.poset import Cell, Interval, Rect
from rowmotion_report.utils import (
    CornerAnchorError,
    GuardExceededError,
    MalformedCollectionError,
)

logger = logging.getLogger(__name__)

# Limites dos oráculos de enumeração
MAX_SINGLE_PATHS = 10 ** 6
MAX_FAMILY_SIZE = 6

Vertex = Tuple[int, int]
Edge = Tuple[Vertex, Vertex]


@dataclass
class CheckReport:
    """Resultado de uma verificação exaustiva: só relata, nunca lança."""

    name: str
    checked: int = 0
    skipped: int = 0
    violations: List[dict] = field(default_factory=list)
    counters: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, passed: bool, **where) -> None:
        self.checked += 1
        if not passed:
            self.violations.append(where)

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.skipped += other.skipped
        self.violations.extend(other.violations)
        return self

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.violations)} violações"
        return f"{self.name}: {self.checked} verificações, {self.skipped} ignoradas, {status}"


@dataclass(frozen=True)
class GRGraph:
    """
    Grafo G_R sobre [r+1]×[s].

    Arestas (i,j)→(i+1,j) pesam 1/x_ij; arestas (i,j)→(i+1,j−1) pesam 1.
    """

    rect: Rect
    edges: Dict[Vertex, List[Tuple[Vertex, Fraction]]]

    def source(self, index: int) -> Vertex:
        """P_j = (1,j) para j ≤ s; P_{s+i} = (i+1, s)."""
        r, s = self.rect.r, self.rect.s
        if 1 <= index <= s:
            return (1, index)
        if s < index <= r + s:
            return (index - s + 1, s)
        raise GuardExceededError(f"Fonte P_{index} inexistente")

    def sink(self, index: int) -> Vertex:
        """Q_i = (i,1) para i ≤ r; Q_{r+j} = (r+1, j)."""
        r, s = self.rect.r, self.rect.s
        if 1 <= index <= r:
            return (index, 1)
        if r < index <= r + s:
            return (r + 1, index - r)
        raise GuardExceededError(f"Sumidouro Q_{index} inexistente")

    def vertices(self) -> List[Vertex]:
        return [(i, j) for i in range(1, self.rect.r + 2) for j in range(1, self.rect.s + 1)]

    def edge_count(self) -> int:
        return sum(len(out) for out in self.edges.values())

    def weight(self, edge: Edge) -> Fraction:
        tail, head = edge
        for target, w in self.edges.get(tail, []):
            if target == head:
                return w
        raise MalformedCollectionError(f"Aresta {edge} não pertence a G_R")


def build_gr(x: Labeling) -> GRGraph:
    """
    Constrói G_R a partir de uma rotulagem positiva.

    Returns:
        Grafo com r·s arestas ponderadas e r·(s−1) diagonais de peso 1
    """
    rect = x.rect
    edges: Dict[Vertex, List[Tuple[Vertex, Fraction]]] = {}
    for i in range(1, rect.r + 1):
        for j in range(1, rect.s + 1):
            out = [((i + 1, j), 1 / BIRATIONAL.validate(x[(i, j)]))]
            if j >= 2:
                out.append(((i + 1, j - 1), Fraction(1)))
            edges[(i, j)] = out
    return GRGraph(rect, edges)


def _path_sums_from(g: GRGraph, start: Vertex) -> Dict[Vertex, Fraction]:
    # Toda aresta sobe uma linha: as linhas formam uma ordem topológica
    totals: Dict[Vertex, Fraction] = {start: Fraction(1)}
    for row in range(start[0], g.rect.r + 1):
        for col in range(1, g.rect.s + 1):
            here = totals.get((row, col))
            if not here:
                continue
            for head, w in g.edges.get((row, col), []):
                totals[head] = totals.get(head, Fraction(0)) + here * w
    return totals


def path_matrix(g: GRGraph) -> np.ndarray:
    """
    Matriz (r+s)×(r+s) com a_ij = peso total dos caminhos P_i → Q_j.

    Returns:
        numpy array de dtype object com entradas Fraction
    """
    n = g.rect.order
    matrix = np.empty((n, n), dtype=object)
    for a in range(1, n + 1):
        totals = _path_sums_from(g, g.source(a))
        for b in range(1, n + 1):
            matrix[a - 1, b - 1] = totals.get(g.sink(b), Fraction(0))
    return matrix


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """
    Determinante inteiro por eliminação de Bareiss (livre de frações).

    Args:
        rows: Matriz quadrada de inteiros

    Returns:
        Determinante exato
    """
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_determinant(matrix) -> Fraction:
    """
    Determinante exato de uma matriz de racionais.

    Cada linha é multiplicada pelo mmc dos seus denominadores; o resultado
    inteiro de Bareiss é dividido pelo produto das escalas.
    """
    rows = [[Fraction(v) for v in row] for row in np.asarray(matrix, dtype=object).tolist()]
    if not rows:
        return Fraction(1)
    scale = 1
    integer_rows = []
    for row in rows:
        factor = reduce(lcm, (v.denominator for v in row), 1)
        scale *= factor
        integer_rows.append([int(v * factor) for v in row])
    return Fraction(bareiss_determinant(integer_rows), scale)


def solid_minor(matrix: np.ndarray, i: int, j: int, k: int) -> Fraction:
    """det da submatriz k×k que começa em (i, j) (índices a partir de 1)."""
    if k == 0:
        return Fraction(1)
    return rational_determinant(matrix[i - 1:i - 1 + k, j - 1:j - 1 + k])


class MinorArray:
    """
    Arranjo W_{ij}^{(k)} dos menores sólidos da matriz de caminhos.

    Guarda a pirâmide 1 ≤ i,j ≤ n+1−k para k ≤ s+1 (n = r+s). Acima de s+1 as
    entradas seguem W_ii = 1 e zero fora da diagonal; fora do suporte valem 0,
    com W^{(0)} ≡ 1 e W^{(−1)} ≡ 0.
    """

    def __init__(self, rect: Rect, entries: Dict[Tuple[int, int, int], Fraction]):
        self.rect = rect
        self.n = rect.order
        self.max_stored = min(self.n, rect.s + 1)
        self.entries = entries

    def get(self, i: int, j: int, k: int) -> Fraction:
        if k == 0:
            return Fraction(1)
        if k < 0:
            return Fraction(0)
        if not (1 <= i <= self.n + 1 - k and 1 <= j <= self.n + 1 - k):
            return Fraction(0)
        if k > self.max_stored:
            return Fraction(1) if i == j else Fraction(0)
        return self.entries.get((i, j, k), Fraction(0))

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        return self.get(i, j, k)

    def with_entry(self, i: int, j: int, k: int, value: Fraction) -> "MinorArray":
        entries = dict(self.entries)
        entries[(i, j, k)] = Fraction(value)
        return MinorArray(self.rect, entries)

    def support(self) -> List[Tuple[int, int, int]]:
        return sorted(self.entries, key=lambda key: (key[2], key[0], key[1]))


def minor_array(matrix: np.ndarray, rect: Rect) -> MinorArray:
    """
    Calcula todos os menores sólidos guardados na pirâmide.

    Args:
        matrix: Matriz de caminhos (r+s)×(r+s)
        rect: Retângulo de origem

    Returns:
        MinorArray
    """
    n = rect.order
    entries = {}
    for k in range(1, min(n, rect.s + 1) + 1):
        for i in range(1, n + 2 - k):
            for j in range(1, n + 2 - k):
                entries[(i, j, k)] = solid_minor(matrix, i, j, k)
    logger.debug(f"{len(entries)} menores calculados para [{rect.r}]×[{rect.s}]")
    return MinorArray(rect, entries)


def minors_of(x: Labeling) -> MinorArray:
    """Atalho: G_R → matriz de caminhos → arranjo de menores."""
    return minor_array(path_matrix(build_gr(x)), x.rect)


def octahedron_check(w: MinorArray) -> CheckReport:
    """
    Verifica W^{(k)}_{ij} W^{(k)}_{i+1,j+1} = W^{(k)}_{i,j+1} W^{(k)}_{i+1,j} + W^{(k+1)}_{ij} W^{(k−1)}_{i+1,j+1}
    em todo o arranjo estendido por zeros (0 ≤ i,j ≤ n+1, 1 ≤ k ≤ n).
    """
    report = CheckReport("octaedro")
    n = w.n
    for k in range(1, n + 1):
        for i in range(0, n + 2):
            for j in range(0, n + 2):
                lhs = w(i, j, k) * w(i + 1, j + 1, k)
                rhs = w(i, j + 1, k) * w(i + 1, j, k) + w(i, j, k + 1) * w(i + 1, j + 1, k - 1)
                report.record(lhs == rhs, i=i, j=j, k=k)
    return report


def desnanot_jacobi_check(matrix) -> CheckReport:
    """
    Identidade de Desnanot-Jacobi para todos os menores sólidos de uma matriz
    quadrada qualquer de racionais.
    """
    matrix = np.asarray(matrix, dtype=object)
    n = matrix.shape[0]
    report = CheckReport("desnanot_jacobi")

    def det(i, j, k):
        if k < 0:
            return Fraction(0)
        return solid_minor(matrix, i, j, k)

    for k in range(1, n):
        for i in range(1, n - k + 1):
            for j in range(1, n - k + 1):
                lhs = det(i, j, k + 1) * det(i + 1, j + 1, k - 1)
                rhs = det(i, j, k) * det(i + 1, j + 1, k) - det(i, j + 1, k) * det(i + 1, j, k)
                report.record(lhs == rhs, i=i, j=j, k=k)
    return report


def array_toggle_value(w: MinorArray, i: int, j: int, k: int) -> Optional[Fraction]:
    """z_ij^{(k)} = W^{(j−1)}_{k+2,i+k+1} / W^{(j)}_{k+1,i+k+1}; None se o denominador é zero."""
    denominator = w(k + 1, i + k + 1, j)
    if denominator == 0:
        return None
    return w(k + 2, i + k + 1, j - 1) / denominator


def array_toggle_check(w: MinorArray) -> CheckReport:
    """
    Verifica a forma de toggle do arranjo:
    z_ij^{(k)} = (z_{i,j−1}^{(k)} + z_{i−1,j}^{(k)}) (z_{i+1,j}^{(k−1)} ∥ z_{i,j+1}^{(k−1)}) / z_ij^{(k−1)}
    para toda célula e 1 ≤ k ≤ r+s−i−j. Termos indefinidos saem da soma paralela.
    """
    report = CheckReport("toggle_do_arranjo")
    rect = w.rect
    for i in range(1, rect.r + 1):
        for j in range(1, rect.s + 1):
            for k in range(1, rect.order - i - j + 1):
                current = array_toggle_value(w, i, j, k)
                previous = array_toggle_value(w, i, j, k - 1)
                left = array_toggle_value(w, i, j - 1, k)
                down = array_toggle_value(w, i - 1, j, k)
                uppers = [
                    v for v in (array_toggle_value(w, i + 1, j, k - 1), array_toggle_value(w, i, j + 1, k - 1))
                    if v is not None
                ]
                if None in (current, previous, left, down) or not uppers or previous == 0 \
                        or any(v <= 0 for v in uppers):
                    report.skipped += 1
                    continue
                if len(uppers) == 2:
                    report.counters["ambos_termos"] = report.counters.get("ambos_termos", 0) + 1
                expected = (left + down) * parallel_sum_all(uppers) / previous
                report.record(current == expected, i=i, j=j, k=k)
    return report


# ---------------------------------------------------------------------------
# Oráculos de enumeração
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathCollection:
    """
    k caminhos dois a dois disjuntos em vértices.

    Em R os caminhos são listas de células (peso nos vértices); em G_R são
    listas de arestas (peso nas arestas).
    """

    ambient: str
    paths: Tuple[Tuple, ...]
    weight: Fraction

    @property
    def k(self) -> int:
        return len(self.paths)

    def vertices(self) -> List[Vertex]:
        if self.ambient == "R":
            return [v for path in self.paths for v in path]
        found = []
        for path in self.paths:
            if path:
                found.append(path[0][0])
                found.extend(edge[1] for edge in path)
        return found


def _lattice_paths(start: Cell, end: Cell, interval: Interval, limit: int) -> List[Tuple[Cell, ...]]:
    if not (start.below(end) and interval.contains(start) and interval.contains(end)):
        return []
    found: List[Tuple[Cell, ...]] = []

    def walk(path):
        if len(found) > limit:
            raise GuardExceededError(f"Mais de {limit} caminhos simples: enumeração recusada")
        here = path[-1]
        if here == end:
            found.append(tuple(path))
            return
        for step in (Cell(here.i + 1, here.j), Cell(here.i, here.j + 1)):
            if step.below(end):
                walk(path + [step])

    walk([start])
    return found


def _disjoint_families(choices: List[List[Tuple]], vertex_sets) -> List[Tuple]:
    families = []

    def extend(index, chosen, used):
        if index == len(choices):
            families.append(tuple(chosen))
            return
        for option in choices[index]:
            occupied = vertex_sets(option)
            if used.isdisjoint(occupied):
                extend(index + 1, chosen + [option], used | occupied)

    extend(0, [], frozenset())
    return families


def _check_family_size(k: int) -> None:
    if k > MAX_FAMILY_SIZE:
        raise GuardExceededError(f"k = {k} > {MAX_FAMILY_SIZE}: enumeração recusada")


def enumerate_paths(
    interval: Interval,
    k: int,
    x: Labeling,
    alg: ToggleAlgebra = BIRATIONAL,
) -> List[PathCollection]:
    """
    Oráculo: todas as famílias P_I^{(k)} de k caminhos disjuntos em I.

    As fontes são (i1,j1)..(i1,j1+k−1) e os destinos (i2,j2−k+1)..(i2,j2).

    Args:
        interval: Intervalo I
        k: Número de caminhos, 0 ≤ k ≤ colunas de I
        x: Rotulagem (pesos nos vértices)
        alg: Álgebra usada para o peso (⊗ sobre vértices)

    Returns:
        Lista de PathCollection, cada família exatamente uma vez
    """
    interval.check_within(x.rect)
    _check_family_size(k)
    if k < 0 or k > interval.cols:
        raise GuardExceededError(f"k = {k} fora de 0..{interval.cols} para {interval}")

    choices = []
    for t in range(k):
        start = Cell(interval.i1, interval.j1 + t)
        end = Cell(interval.i2, interval.j2 - k + 1 + t)
        choices.append(_lattice_paths(start, end, interval, MAX_SINGLE_PATHS))

    collections = []
    for family in _disjoint_families(choices, frozenset):
        weight = alg.fold_product(x[c] for path in family for c in path)
        collections.append(PathCollection("R", family, weight))
    logger.debug(f"{len(collections)} famílias com k={k} em {interval}")
    return collections


def oracle_weight(interval: Interval, k: int, x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> Optional[Fraction]:
    """w_I^{(k)} pelo oráculo: ⊕ dos pesos das famílias (0 ou −∞ se não há nenhuma)."""
    if k > interval.cols:
        return alg.absorbing
    return alg.total(c.weight for c in enumerate_paths(interval, k, x, alg))


def _gr_paths(g: GRGraph, start: Vertex, end: Vertex, limit: int) -> List[Tuple[Edge, ...]]:
    found: List[Tuple[Edge, ...]] = []

    def walk(vertex, edges):
        if len(found) > limit:
            raise GuardExceededError(f"Mais de {limit} caminhos simples em G_R")
        if vertex == end:
            found.append(tuple(edges))
            return
        if vertex[0] >= end[0]:
            return
        for head, _ in g.edges.get(vertex, []):
            walk(head, edges + [(vertex, head)])

    walk(start, [])
    return found


def _gr_vertices(path: Tuple[Edge, ...], start: Vertex) -> frozenset:
    return frozenset([start] + [edge[1] for edge in path])


def enumerate_gr_families(g: GRGraph, i: int, j: int, k: int) -> List[PathCollection]:
    """
    Oráculo em G_R: famílias disjuntas P_i..P_{i+k−1} → Q_j..Q_{j+k−1} (em ordem).

    Returns:
        Lista de PathCollection com arestas e peso produto
    """
    _check_family_size(k)
    n = g.rect.order
    if k == 0:
        return [PathCollection("G_R", (), Fraction(1))]
    if i < 1 or j < 1 or i + k - 1 > n or j + k - 1 > n:
        return []

    starts = [g.source(i + t) for t in range(k)]
    choices = [
        [(path, starts[t]) for path in _gr_paths(g, starts[t], g.sink(j + t), MAX_SINGLE_PATHS)]
        for t in range(k)
    ]
    families = _disjoint_families(choices, lambda option: _gr_vertices(option[0], option[1]))

    collections = []
    for family in families:
        paths = tuple(path for path, _ in family)
        weight = reduce(lambda acc, e: acc * g.weight(e), [e for p in paths for e in p], Fraction(1))
        collections.append(PathCollection("G_R", paths, weight))
    return collections


def transpose_weight(interval: Interval, k: int, x: Labeling) -> Fraction:
    """w^{(k)} do intervalo transposto com rótulos transpostos (simetria de transposição)."""
    return oracle_weight(interval.transpose(), k, x.transpose())


# ---------------------------------------------------------------------------
# Rota rápida e bijeção de ladrilhos
# ---------------------------------------------------------------------------

def w_interval(interval: Interval, k: int, x: Labeling, w: Optional[MinorArray] = None) -> Fraction:
    """
    w_I^{(k)} como quociente de menores (intervalo ancorado em canto):
    W^{(j2−j1−k+1)}_{i1+j1+k−1, i2+j1} / W^{(j2−j1+1)}_{i1+j1−1, i2+j1}.

    Args:
        interval: Intervalo ancorado em canto
        k: 0 ≤ k ≤ j2−j1+1
        x: Rotulagem positiva
        w: Arranjo de menores já calculado (opcional)

    Returns:
        Soma exata dos pesos das famílias
    """
    rect = x.rect
    interval.check_within(rect)
    if not interval.is_corner_anchored(rect):
        raise CornerAnchorError(f"{interval} não é ancorado em canto: use o oráculo enumerate_paths")
    if not 0 <= k <= interval.cols:
        raise GuardExceededError(f"k = {k} fora de 0..{interval.cols} para {interval}")
    w = w if w is not None else minors_of(x)
    i1, i2, j1, j2 = interval.i1, interval.i2, interval.j1, interval.j2
    numerator = w(i1 + j1 + k - 1, i2 + j1, j2 - j1 - k + 1)
    denominator = w(i1 + j1 - 1, i2 + j1, j2 - j1 + 1)
    return numerator / denominator


def interval_weight(interval: Interval, k: int, x: Labeling, w: Optional[MinorArray] = None) -> Fraction:
    """Rota rápida quando o intervalo é ancorado em canto; oráculo nos demais casos."""
    if interval.is_corner_anchored(x.rect):
        return w_interval(interval, k, x, w)
    return oracle_weight(interval, k, x)


def tile_bijection(collection: PathCollection, interval: Interval, x: Labeling) -> PathCollection:
    """
    Leva L ∈ P_I^{(k)} à família correspondente de S^{(j2−j1−k+1)}_{i1+j1+k−1, i2+j1} em G_R.

    Dentro de I, cada célula fora de L vira a aresta ponderada (i,j)→(i+1,j) e
    cada passo (i,j−1)→(i,j) de L vira a diagonal (i,j)→(i+1,j−1). Os caminhos
    começam em (i1, j1+k..j2) e terminam em (i2+1, j1..j2−k); fora das linhas
    de I só usam diagonais até as fontes e sumidouros de G_R.

    Returns:
        PathCollection em G_R com peso w(L)/w_I
    """
    rect = x.rect
    if collection.ambient != "R":
        raise MalformedCollectionError("A bijeção recebe uma família em R")
    if not interval.is_corner_anchored(rect):
        raise CornerAnchorError(f"{interval} não é ancorado em canto")
    k = collection.k
    i1, i2, j1, j2 = interval.i1, interval.i2, interval.j1, interval.j2
    big_k = j2 - j1 - k + 1

    covered = set()
    for t, path in enumerate(collection.paths):
        cells = [Cell(*c) for c in path]
        if cells[0] != Cell(i1, j1 + t) or cells[-1] != Cell(i2, j2 - k + 1 + t):
            raise MalformedCollectionError(f"Caminho {t} com extremos inesperados: {cells}")
        if any(not interval.contains(c) for c in cells):
            raise MalformedCollectionError(f"Caminho {t} sai de {interval}")
        if covered.intersection(cells):
            raise MalformedCollectionError("Caminhos se intersectam")
        covered.update(cells)

    step_into = set()
    for path in collection.paths:
        for a, b in zip(path, path[1:]):
            if (b[0] - a[0], b[1] - a[1]) == (0, 1):
                step_into.add(Cell(*b))
            elif (b[0] - a[0], b[1] - a[1]) != (1, 0):
                raise MalformedCollectionError(f"Passo inválido {a} → {b}")

    outgoing: Dict[Vertex, Vertex] = {}
    for cell in interval.cells():
        if cell not in covered:
            outgoing[(cell.i, cell.j)] = (cell.i + 1, cell.j)
        elif cell in step_into:
            outgoing[(cell.i, cell.j)] = (cell.i + 1, cell.j - 1)

    g = build_gr(x)
    first_source = i1 + j1 + k - 1
    first_sink = i2 + j1
    paths = []
    used_inside = 0
    occupied = set()
    for t in range(big_k):
        source = g.source(first_source + t)
        edges: List[Edge] = []
        vertex = source
        while vertex[0] < i1:
            head = (vertex[0] + 1, vertex[1] - 1)
            edges.append((vertex, head))
            vertex = head
        if vertex != (i1, j1 + k + t):
            raise MalformedCollectionError(f"Prefixo diagonal não alcança {(i1, j1 + k + t)}")
        while vertex[0] <= i2:
            if vertex not in outgoing:
                raise MalformedCollectionError(f"Vértice {vertex} sem saída na família transformada")
            head = outgoing[vertex]
            edges.append((vertex, head))
            used_inside += 1
            vertex = head
        sink = g.sink(first_sink + t)
        while vertex != sink:
            if vertex[0] >= sink[0]:
                raise MalformedCollectionError(f"Sufixo diagonal não alcança {sink}")
            head = (vertex[0] + 1, vertex[1] - 1)
            edges.append((vertex, head))
            vertex = head
        vertices = _gr_vertices(tuple(edges), source)
        if occupied.intersection(vertices):
            raise MalformedCollectionError("Família transformada não é disjunta")
        occupied |= vertices
        paths.append(tuple(edges))

    if used_inside != len(outgoing):
        raise MalformedCollectionError("Arestas da família transformada não foram todas usadas")

    weight = reduce(lambda acc, e: acc * g.weight(e), [e for p in paths for e in p], Fraction(1))
    logger.debug(f"Bijeção de ladrilhos: k={k} → {big_k} caminhos, peso {format_rational(weight)}")
    return PathCollection("G_R", tuple(paths), weight)


# ---------------------------------------------------------------------------
# Verificações contra os oráculos
# ---------------------------------------------------------------------------

def minors_oracle_check(x: Labeling, max_k: int = 3) -> CheckReport:
    """Cada menor W^{(k)}_{ij} com k ≤ max_k contra a soma das famílias disjuntas em G_R."""
    report = CheckReport("menores_vs_caminhos")
    g = build_gr(x)
    w = minor_array(path_matrix(g), x.rect)
    for i, j, k in w.support():
        if k > max_k:
            continue
        total = sum((c.weight for c in enumerate_gr_families(g, i, j, k)), Fraction(0))
        report.record(w(i, j, k) == total, i=i, j=j, k=k)
    return report


def corner_intervals(rect: Rect) -> List[Interval]:
    return [
        Interval(i1, i2, j1, j2)
        for i1 in range(1, rect.r + 1) for i2 in range(i1, rect.r + 1)
        for j1 in range(1, rect.s + 1) for j2 in range(j1, rect.s + 1)
        if Interval(i1, i2, j1, j2).is_corner_anchored(rect)
    ]


def interval_oracle_check(x: Labeling, w: Optional[MinorArray] = None) -> CheckReport:
    """Rota rápida w_interval contra enumerate_paths em todo intervalo ancorado e todo k."""
    report = CheckReport("intervalos_vs_oraculo")
    w = w if w is not None else minors_of(x)
    for interval in corner_intervals(x.rect):
        for k in range(0, interval.cols + 1):
            report.record(
                w_interval(interval, k, x, w) == oracle_weight(interval, k, x),
                interval=str(interval), k=k,
            )
    return report


def tile_bijection_check(x: Labeling, w: Optional[MinorArray] = None) -> CheckReport:
    """
    Para todo intervalo ancorado e todo k: imagens distintas, peso w(L)/w_I e
    mesma cardinalidade que as famílias de G_R do menor correspondente.
    """
    report = CheckReport("bijecao_de_ladrilhos")
    w = w if w is not None else minors_of(x)
    g = build_gr(x)
    for interval in corner_intervals(x.rect):
        w_full = BIRATIONAL.fold_product(x[c] for c in interval.cells())
        for k in range(0, interval.cols + 1):
            sources = enumerate_paths(interval, k, x)
            images = [tile_bijection(c, interval, x) for c in sources]
            targets = enumerate_gr_families(
                g, interval.i1 + interval.j1 + k - 1, interval.i2 + interval.j1, interval.cols - k,
            )
            report.record(
                len({img.paths for img in images}) == len(images) == len(targets),
                interval=str(interval), k=k, check="cardinalidade",
            )
            report.record(
                all(img.weight == src.weight / w_full for src, img in zip(sources, images)),
                interval=str(interval), k=k, check="peso",
            )
    return report
