"""
Suíte de verificação: rotulagens racionais aleatórias com semente, todas as
identidades exatas agrupadas por suíte e contraexemplos minimizados.
"""

import logging
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from rowmotion_report.algebra import BIRATIONAL, TROPICAL, ToggleAlgebra, format_rational, tropical_algebra
from rowmotion_report.closed_form import array_shift_check, power_labeling, rho_power_any
from rowmotion_report.dynamics import (
    Labeling,
    OrbitTable,
    dual_transfer,
    dual_transfer_inverse,
    rowmotion,
    rowmotion_power,
    shifted_labeling,
    toggle,
    toggles_commute,
    transfer,
    transfer_inverse,
)
from rowmotion_report.io import labeling_to_json
from rowmotion_report.paths import (
    CheckReport,
    build_gr,
    desnanot_jacobi_check,
    array_toggle_check,
    interval_oracle_check,
    interval_weight,
    minors_of,
    minors_oracle_check,
    oracle_weight,
    octahedron_check,
    path_matrix,
    tile_bijection_check,
)
from rowmotion_report.poset import (
    IDEAL_ENUMERATION_LIMIT,
    Interval,
    Rect,
    antichain_of_ideal,
    combinatorial_orbits,
    combinatorial_rowmotion,
    enumerate_order_ideals,
    linear_extension,
    stanley_thomas_word,
)
from rowmotion_report.rsk import (
    birational_rsk,
    border_family_weight,
    chain_shift_check,
    chain_shift_rsk_check,
    chain_sum_profile,
    greene_check,
    reconstruct_from_chain_sums,
    reconstruct_from_st_words,
    rsk_entry_identity_check,
    rsk_procedure,
    rsk_round_trip,
    tropical_greene_check,
)
from rowmotion_report.st_words import birational_st, cyclic_shift_check, generalized_st, omega, omega_oracle
from rowmotion_report.utils import CellRangeError, OmegaEmptyError, RowmotionError, rotate_right

logger = logging.getLogger(__name__)

ALL_SUITES = (
    "periodicity",
    "closed_form",
    "worked_example",
    "octahedron",
    "chain_shift",
    "stanley_thomas",
    "rsk",
    "reconstruction",
    "dual_transfer",
    "pl_rowmotion",
)

# Rotulagem de referência (a..f) = (2,3,5,7,11,13): x11=a, x21=b, x12=c, x22=d, x13=e, x23=f
PRIMES_2X3 = ((2, 5, 11), (3, 7, 13))

# Valores de ρ^k(φ^{-1}(x))_22 para k = 0, −1, ..., −4
WORKED_EXAMPLE_VALUES = {
    0: Fraction(112),
    -1: Fraction(1170),
    -2: Fraction(1, 10),
    -3: Fraction(37, 385),
    -4: Fraction(1, 91),
}

MAX_ORACLE_ORDER = 7
MAX_ORACLE_K = 3

Seed = Union[int, np.random.Generator]


@dataclass
class SuiteConfig:
    """
    Parâmetros da suíte de verificação.

    `oracle_limit` é o maior r e s em que os oráculos de enumeração também rodam.
    """

    r_max: int = 3
    s_max: int = 3
    trials: int = 5
    seed: int = 0
    bound: int = 20
    suites: Tuple[str, ...] = ALL_SUITES
    oracle_limit: int = 3
    timing: bool = False

    def validate(self) -> "SuiteConfig":
        for name in ("r_max", "s_max", "trials", "bound"):
            if getattr(self, name) < 1:
                raise CellRangeError(f"{name} deve ser positivo, recebeu {getattr(self, name)}")
        if self.oracle_limit < 0:
            raise CellRangeError(f"oracle_limit negativo: {self.oracle_limit}")
        unknown = [s for s in self.suites if s not in ALL_SUITES]
        if unknown:
            raise CellRangeError(f"Suítes desconhecidas: {unknown} (válidas: {', '.join(ALL_SUITES)})")
        return self

    @staticmethod
    def normalize_suites(text: Optional[str]) -> Tuple[str, ...]:
        """
        Normaliza uma lista de suítes separadas por vírgula.

        Args:
            text: Ex: "octahedron, rsk" (None ou vazio seleciona todas)

        Returns:
            Tupla de nomes em minúsculas, sem repetição, na ordem informada
        """
        if not text or not text.strip():
            return ALL_SUITES
        names = [re.sub(r'[\s-]+', '_', part.strip().lower()) for part in text.split(',')]
        return tuple(dict.fromkeys(n for n in names if n))

    def to_json(self) -> Dict[str, Any]:
        return {
            "r_max": self.r_max,
            "s_max": self.s_max,
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "suites": list(self.suites),
            "oracle_limit": self.oracle_limit,
        }


# ---------------------------------------------------------------------------
# Geração de entradas
# ---------------------------------------------------------------------------

def _generator(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_labeling(rect: Rect, seed: Seed, bound: int = 20) -> Labeling:
    """
    Rotulagem com valores p/q, p e q uniformes em 1..bound.

    Args:
        rect: Retângulo
        seed: Semente inteira ou numpy Generator
        bound: Limite dos numeradores e denominadores

    Returns:
        Rotulagem estritamente positiva, reproduzível pela semente
    """
    rng = _generator(seed)
    draws = rng.integers(1, bound + 1, size=(rect.size, 2))
    return Labeling(rect, {
        cell: Fraction(int(p), int(q)) for cell, (p, q) in zip(rect.cells(), draws)
    })


def random_chain_polytope_point(rect: Rect, seed: Seed, bound: int = 20) -> Labeling:
    """
    Ponto racional do politopo de cadeias: entradas ≥ 0 e toda cadeia maximal
    somando no máximo 1.
    """
    rng = _generator(seed)
    draws = rng.integers(0, bound + 1, size=rect.size)
    point = Labeling(rect, {cell: Fraction(int(v), bound) for cell, v in zip(rect.cells(), draws)})
    heaviest = transfer_inverse(point, TROPICAL)[(rect.r, rect.s)]
    if heaviest > 1:
        point = Labeling(rect, {c: v / heaviest for c, v in point.values.items()})
    return point


def random_order_polytope_point(rect: Rect, seed: Seed, bound: int = 20) -> Labeling:
    """Ponto racional do politopo de ordem: imagem tropical φ^{-1} de um ponto de cadeias."""
    return transfer_inverse(random_chain_polytope_point(rect, seed, bound), TROPICAL)


def primes_labeling() -> Labeling:
    return Labeling.from_rows(PRIMES_2X3)


def random_integer_matrix(rng: np.random.Generator, max_size: int = 6) -> np.ndarray:
    size = int(rng.integers(2, max_size + 1))
    return rng.integers(-9, 10, size=(size, size)).astype(object)


# ---------------------------------------------------------------------------
# Verificações individuais que não moram em outros módulos
# ---------------------------------------------------------------------------

def _equality_report(name: str, pairs: Iterable[Tuple[Any, Any, Dict[str, Any]]]) -> CheckReport:
    report = CheckReport(name)
    for left, right, where in pairs:
        report.record(left == right, **where)
    return report


def periodicity_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    report = CheckReport("ordem_r_mais_s")
    table = OrbitTable(transfer_inverse(x, alg), alg)
    report.record(table.verify_period(), order=table.order)
    return report


def linear_extension_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    """Rowmotion não depende da extensão linear escolhida."""
    y = transfer_inverse(x, alg)
    alternative = linear_extension(x.rect, reverse_within_rank=True)
    return _equality_report("extensao_linear", [
        (rowmotion(y, alg), rowmotion(y, alg, alternative), {}),
    ])


def toggle_laws_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    """Involução em toda célula e comutação em todo par sem cobertura."""
    report = CheckReport(f"leis_de_toggle_{alg.name}")
    rect = x.rect
    for p in rect.cells():
        report.record(toggle(toggle(x, p, alg), p, alg) == x, p=list(p))
    cells = rect.cells()
    for a, p in enumerate(cells):
        for q in cells[a + 1:]:
            if rect.is_cover_pair(p, q):
                continue
            report.record(toggles_commute(x, p, q, alg), p=list(p), q=list(q))
    return report


def closed_form_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    """Fórmula fechada contra rowmotion iterado por toggles, k em [−(r+s), r+s]."""
    report = CheckReport("formula_fechada")
    w = minors_of(x)
    table = OrbitTable(transfer_inverse(x, alg), alg)
    n = x.rect.order
    for k in range(-n, n + 1):
        closed = power_labeling(x, k, w)
        iterated = table.power(k)
        for cell in x.rect.cells():
            report.record(closed[cell] == iterated[cell], i=cell.i, j=cell.j, k=k)
    return report


def dual_transfer_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    """ρ(φ^{-1}(x))_p · (φ*)^{-1}(x)_p = 1 em toda célula."""
    report = CheckReport("dualidade_birracional")
    moved = rowmotion(transfer_inverse(x, alg), alg)
    dual = dual_transfer_inverse(x, alg)
    for cell in x.rect.cells():
        report.record(moved[cell] * dual[cell] == 1, i=cell.i, j=cell.j)
    return report


def transfer_round_trip_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    return _equality_report("transferencias_ida_e_volta", [
        (transfer(transfer_inverse(x, alg), alg), x, {"mapa": "phi"}),
        (dual_transfer(dual_transfer_inverse(x, alg), alg), x, {"mapa": "phi_dual"}),
    ])


def tropical_dual_transfer_check(x: Labeling) -> CheckReport:
    """Com teto 0: ρ(φ^{-1}(x))_p = −(φ*)^{-1}(x)_p."""
    naive = tropical_algebra(Fraction(0))
    report = CheckReport("dualidade_tropical_teto_0")
    moved = rowmotion(transfer_inverse(x, naive), naive)
    dual = dual_transfer_inverse(x, naive)
    for cell in x.rect.cells():
        report.record(moved[cell] == -dual[cell], i=cell.i, j=cell.j)
    return report


def pl_order_check(point: Labeling) -> CheckReport:
    """Rowmotion linear por partes (teto 1) tem ordem r+s no politopo de ordem."""
    report = CheckReport("ordem_pl")
    n = point.rect.order
    report.record(rowmotion_power(point, n, TROPICAL) == point, order=n)
    return report


def combinatorial_word_check(rect: Rect) -> CheckReport:
    """
    Palavras 0/1 de Stanley-Thomas: injetivas sobre os ideais, giradas por ρ e
    com órbitas de tamanho divisor de r+s.
    """
    report = CheckReport("palavra_combinatoria")
    if rect.size > IDEAL_ENUMERATION_LIMIT:
        report.skipped += 1
        return report
    ideals = enumerate_order_ideals(rect)
    words = {}
    for ideal in ideals:
        word = stanley_thomas_word(antichain_of_ideal(ideal), rect)
        moved = stanley_thomas_word(antichain_of_ideal(combinatorial_rowmotion(ideal)), rect)
        report.record(moved == rotate_right(word), ideal=[list(c) for c in ideal.cells()])
        report.record(
            combinatorial_rowmotion(ideal) == combinatorial_rowmotion(ideal, method="toggles"),
            ideal=[list(c) for c in ideal.cells()], method="toggles",
        )
        words[word] = ideal
    report.record(len(words) == len(ideals), check="injetividade")
    for orbit in combinatorial_orbits(rect):
        report.record(rect.order % len(orbit) == 0, orbit_size=len(orbit))
    return report


def omega_oracle_check(x: Labeling) -> CheckReport:
    report = CheckReport("omega_vs_enumeracao")
    n = x.rect.order
    for a in range(2, n + 1):
        for b in range(a, n + 1):
            try:
                fast = omega(x, a, b)
            except OmegaEmptyError:
                report.skipped += 1
                continue
            report.record(fast == omega_oracle(x, a, b), a=a, b=b)
    return report


def rsk_procedure_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    image = birational_rsk(x, alg)
    alternative = linear_extension(x.rect, reverse_within_rank=True)
    return _equality_report(f"rsk_igual_procedimento_{alg.name}", [
        (rsk_procedure(x, alg), image, {"extensao": "canonica"}),
        (rsk_procedure(x, alg, alternative), image, {"extensao": "alternativa"}),
    ])


def rsk_inverse_check(x: Labeling, alg: ToggleAlgebra = BIRATIONAL) -> CheckReport:
    return _equality_report("rsk_inversao", [(rsk_round_trip(x, alg), True, {})])


def reconstruction_check(x: Labeling) -> CheckReport:
    return _equality_report("reconstrucao", [
        (reconstruct_from_chain_sums(chain_sum_profile(x)), x, {"rota": "perfil"}),
        (reconstruct_from_st_words(x), x, {"rota": "palavras_st"}),
    ])


def profile_determinant_check(x: Labeling) -> CheckReport:
    """Determinantes do perfil contra o oráculo em toda célula de borda e k ≤ min(i,j)."""
    report = CheckReport("determinantes_do_perfil")
    profile = chain_sum_profile(x)
    rect = x.rect
    for cell in rect.cells():
        if not rect.is_border(cell):
            continue
        for k in range(0, min(cell.i, cell.j) + 1):
            report.record(
                border_family_weight(profile, cell.i, cell.j, k) == oracle_weight(Interval(1, cell.i, 1, cell.j), k, x),
                i=cell.i, j=cell.j, k=k,
            )
    return report


def worked_example_check(x: Labeling) -> CheckReport:
    """Valores fixos da rotulagem de primos em [2]×[3]."""
    report = CheckReport("exemplo_primos")
    table = OrbitTable(transfer_inverse(x))
    w = minors_of(x)
    for k, expected in WORKED_EXAMPLE_VALUES.items():
        report.record(rho_power_any(x, 2, 2, k, w) == expected, k=k, rota="formula_fechada")
        report.record(table.entry((2, 2), k) == expected, k=k, rota="toggles")

    matrix = path_matrix(build_gr(x))
    report.record(matrix[0, 1] == Fraction(1, 2), entrada="a12")
    report.record(matrix[1, 2] == Fraction(8, 15), entrada="a23")
    report.record(matrix[0, 4] == 0, entrada="a15")
    report.record(w(1, 3, 2) == Fraction(1, 210), entrada="W13_2")
    report.record(w(2, 4, 2) == Fraction(1, 5005), entrada="W24_2")

    report.record(interval_weight(Interval(1, 2, 2, 3), 1, x, w) == 1170, entrada="cdf+cef")
    z = shifted_labeling(x)
    report.record(z[(1, 1)] * z[(2, 1)] == 35, entrada="z11*z21")

    expected_word = (Fraction(110), Fraction(273), Fraction(1, 6), Fraction(1, 35), Fraction(1, 143))
    report.record(generalized_st(x, row=1).entries == expected_word, entrada="ST_1")
    report.record(birational_st(x).entries == expected_word, entrada="ST_classica")

    image = birational_rsk(x)
    report.record(image[(2, 3)] == 2886, entrada="RSK_23")
    report.record(image[(1, 2)] == Fraction(385, 37), entrada="RSK_12")
    return report


# ---------------------------------------------------------------------------
# Orquestração
# ---------------------------------------------------------------------------

@dataclass
class Check:
    """Uma verificação sobre uma amostra; `neutral` é o valor usado ao minimizar."""

    suite: str
    name: str
    run: Callable[[Labeling], CheckReport]
    sample: Labeling
    neutral: Optional[Fraction] = Fraction(1)


@dataclass
class CheckSummary:
    suite: str
    check: str
    checked: int = 0
    skipped: int = 0
    violations: int = 0
    runs: int = 0
    elapsed_ms: float = 0.0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_json(self, timing: bool = False) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "suite": self.suite,
            "check": self.check,
            "status": "pass" if self.ok else "fail",
            "runs": self.runs,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
        }
        if timing:
            payload["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.counterexample is not None:
            payload["counterexample"] = self.counterexample
        return payload


@dataclass
class VerificationReport:
    config: SuiteConfig
    checks: Dict[Tuple[str, str], CheckSummary] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    @property
    def failures(self) -> List[CheckSummary]:
        return [c for c in self.checks.values() if not c.ok]

    def to_json(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_json(),
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_json(self.config.timing) for c in self.checks.values()],
        }


def _json_safe(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _run_safely(check: Check, labeling: Labeling) -> CheckReport:
    """Erros do domínio viram violação registrada em vez de exceção."""
    try:
        return check.run(labeling)
    except (RowmotionError, ZeroDivisionError) as exc:
        report = CheckReport(check.name)
        report.record(False, erro=f"{type(exc).__name__}: {exc}")
        return report


def minimize_counterexample(check: Check, labeling: Labeling) -> Labeling:
    """
    Reduz uma rotulagem que falha trocando rótulos pelo valor neutro, célula a
    célula, enquanto a verificação continua falhando.
    """
    if check.neutral is None:
        return labeling
    current = labeling
    for cell in labeling.rect.cells():
        if current[cell] == check.neutral:
            continue
        candidate = current.replace({cell: check.neutral})
        if not _run_safely(check, candidate).ok:
            current = candidate
    logger.debug(f"Contraexemplo de {check.name} minimizado: {current.describe()}")
    return current


def _small(rect: Rect, config: SuiteConfig) -> bool:
    return rect.r <= config.oracle_limit and rect.s <= config.oracle_limit


def build_checks(
    suite: str,
    rect: Rect,
    rng: np.random.Generator,
    config: SuiteConfig,
    alg: ToggleAlgebra,
    first_trial: bool,
) -> List[Check]:
    """
    Monta as verificações de uma suíte para um retângulo e uma tentativa.

    Args:
        suite: Nome da suíte
        rect: Retângulo
        rng: Gerador da tentativa
        config: Configuração
        alg: Álgebra birracional (substituível em testes de mutação)
        first_trial: Verificações que não dependem da amostra rodam só aqui

    Returns:
        Lista de Check
    """
    x = random_labeling(rect, rng, config.bound)
    small = _small(rect, config)
    checks: List[Check] = []

    def add(name, run, sample=x, neutral=Fraction(1)):
        checks.append(Check(suite, name, run, sample, neutral))

    if suite == "periodicity":
        add("ordem_r_mais_s", lambda v: periodicity_check(v, alg))
        add("extensao_linear", lambda v: linear_extension_check(v, alg))
        add("leis_de_toggle", lambda v: toggle_laws_check(v, alg))
    elif suite == "closed_form":
        add("formula_fechada", lambda v: closed_form_check(v, alg))
        add("rsk_por_potencia", rsk_entry_identity_check)
        add("deslocamento_do_arranjo", array_shift_check)
    elif suite == "octahedron":
        add("octaedro", lambda v: octahedron_check(minors_of(v)))
        add("toggle_do_arranjo", lambda v: array_toggle_check(minors_of(v)))
        matrix = random_integer_matrix(rng)
        add("desnanot_jacobi", lambda _: desnanot_jacobi_check(matrix), neutral=None)
        if small:
            add("intervalos_vs_oraculo", interval_oracle_check)
            add("bijecao_de_ladrilhos", tile_bijection_check)
        if rect.order <= MAX_ORACLE_ORDER:
            add("menores_vs_caminhos", lambda v: minors_oracle_check(v, MAX_ORACLE_K))
    elif suite == "chain_shift":
        add("deslocamento_somas_de_cadeias", chain_shift_check)
        add("rsk_deslocado", chain_shift_rsk_check)
    elif suite == "stanley_thomas":
        if first_trial:
            add("palavra_combinatoria", lambda _: combinatorial_word_check(rect), neutral=None)
        add("deslocamento_ciclico_st", cyclic_shift_check)
        if small:
            add("omega_vs_enumeracao", omega_oracle_check)
    elif suite == "rsk":
        point = random_chain_polytope_point(rect, rng, config.bound)
        add("rsk_igual_procedimento", lambda v: rsk_procedure_check(v, alg))
        add("rsk_tropical_igual_procedimento", lambda v: rsk_procedure_check(v, TROPICAL), point, Fraction(0))
        add("rsk_inversao", lambda v: rsk_inverse_check(v, alg))
        add("greene", lambda v: greene_check(v, alg, use_oracle=small))
        if small:
            add("greene_tropical", lambda v: tropical_greene_check(v, TROPICAL), point, Fraction(0))
    elif suite == "reconstruction":
        add("reconstrucao", reconstruction_check)
        if small:
            add("determinantes_do_perfil", profile_determinant_check)
    elif suite == "dual_transfer":
        add("dualidade_birracional", lambda v: dual_transfer_check(v, alg))
        add("transferencias_ida_e_volta", lambda v: transfer_round_trip_check(v, alg))
    elif suite == "pl_rowmotion":
        point = random_chain_polytope_point(rect, rng, config.bound)
        order_point = transfer_inverse(point, TROPICAL)
        add("ordem_pl", pl_order_check, order_point, neutral=None)
        add("leis_de_toggle_pl", lambda v: toggle_laws_check(v, TROPICAL), order_point, Fraction(0))
        add("dualidade_tropical_teto_0", tropical_dual_transfer_check, point, Fraction(0))
    return checks


def _execute(check: Check, summary: CheckSummary, rect: Rect, trial: Optional[int]) -> None:
    started = time.perf_counter()
    report = _run_safely(check, check.sample)
    summary.elapsed_ms += (time.perf_counter() - started) * 1000
    summary.runs += 1
    summary.checked += report.checked
    summary.skipped += report.skipped
    summary.violations += len(report.violations)
    if report.ok:
        return
    logger.warning(f"Falha em {check.suite}/{check.name} [{rect.r}]×[{rect.s}]: {report.violations[0]}")
    if summary.counterexample is None:
        minimized = minimize_counterexample(check, check.sample)
        retry = _run_safely(check, minimized)
        violation = retry.violations[0] if retry.violations else report.violations[0]
        summary.counterexample = {
            "rect": [rect.r, rect.s],
            "trial": trial,
            "labeling": labeling_to_json(minimized),
            "violation": _json_safe(violation),
        }


def run_suite(config: SuiteConfig, alg: ToggleAlgebra = BIRATIONAL) -> VerificationReport:
    """
    Executa as suítes selecionadas em todos os tamanhos e tentativas.

    As tentativas rodam em sequência; cada uma tem gerador próprio derivado de
    (seed, r, s, tentativa).

    Args:
        config: Configuração validada
        alg: Álgebra birracional usada nas rotas por toggles

    Returns:
        VerificationReport com um resumo por verificação
    """
    config.validate()
    report = VerificationReport(config)

    def summary_for(check: Check) -> CheckSummary:
        key = (check.suite, check.name)
        if key not in report.checks:
            report.checks[key] = CheckSummary(check.suite, check.name)
        return report.checks[key]

    for stage, suite in enumerate(config.suites, start=1):
        logger.info("=" * 60)
        logger.info(f"ETAPA {stage}: suíte {suite}")
        logger.info("=" * 60)

        if suite == "worked_example":
            check = Check(suite, "exemplo_primos", worked_example_check, primes_labeling(), None)
            _execute(check, summary_for(check), check.sample.rect, None)
            continue

        for r in range(1, config.r_max + 1):
            for s in range(1, config.s_max + 1):
                rect = Rect(r, s)
                for trial in range(config.trials):
                    rng = np.random.default_rng([config.seed, r, s, trial])
                    for check in build_checks(suite, rect, rng, config, alg, trial == 0):
                        _execute(check, summary_for(check), rect, trial)

        failed = [c.check for c in report.checks.values() if c.suite == suite and not c.ok]
        if failed:
            logger.warning(f"Suíte {suite}: falhas em {failed}")
        else:
            logger.info(f"Suíte {suite}: OK")

    return report
